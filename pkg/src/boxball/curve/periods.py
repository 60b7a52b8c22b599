import logging
from fractions import Fraction

from boxball.curve.model import CurvePointRef, SIGMA
from boxball.curve.paths import canonical_path, cycle_path, pairing
from boxball.errors import BoxBallError, DomainError

logger = logging.getLogger("curve")


def _require_cycles(curve):
    if curve.genus == 0:
        raise DomainError("genus-0 curve has no period matrix")


def gram_matrix(curve):
    """Pairings (β_i, β_j) computed on the graph."""
    cycles = [cycle_path(curve, i) for i in range(1, curve.genus + 1)]
    return tuple(tuple(pairing(a, b, curve) for b in cycles) for a in cycles)


def period_matrix(curve):
    """B_ij = (L − 2A_i)δ_ij + 2·min(S_i, S_j), checked against the pairing Gram matrix."""
    _require_cycles(curve)
    s, a, n = curve.solitons, curve.A, curve.genus
    closed = tuple(
        tuple(Fraction((curve.L - 2 * a[i]) * (i == j) + 2 * min(s[i], s[j])) for j in range(n))
        for i in range(n)
    )
    if closed != gram_matrix(curve):
        raise BoxBallError("internal consistency: period matrix differs from the cycle pairing")
    return closed


def abel_jacobi(ref, curve, strict=False):
    """𝒜₀(P) = ((β_1, γ_P), …, (β_g, γ_P)) along the canonical path from O."""
    path = canonical_path(ref, curve, strict)
    return tuple(pairing(cycle_path(curve, j), path, curve) for j in range(1, curve.genus + 1))


def mu_omega(curve):
    """μ = −𝒜₀(σ₂ point), ω = −𝒜₀(σ₃ point): (1, …, 1) and −(S_1, …, S_g)."""
    _require_cycles(curve)
    q = abel_jacobi(CurvePointRef(SIGMA, 2, Fraction(1)), curve)
    r = abel_jacobi(CurvePointRef(SIGMA, 3, Fraction(1)), curve)
    return tuple(-x for x in q), tuple(-x for x in r)


def riemann_constant(curve):
    _require_cycles(curve)
    return tuple(Fraction(curve.L, 2) for _ in range(curve.genus))

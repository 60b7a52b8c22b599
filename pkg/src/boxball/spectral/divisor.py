"""
Divisor points of a Lax matrix and the theta phase c₀.

A nonzero root y* of a₂₁ with val(y*) = Y > 0 gives the point
(X, Y) = (val a₁₁(y*), Y) on the tropical spectral curve. Most roots are
settled exactly from facet polynomials; the rest go through Newton–Puiseux,
deepened until the valuation is resolved.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from boxball.constants import DEFAULT_DEPTH
from boxball.core import reduce_mod_lattice, vec_add, vec_sub
from boxball.curve import abel_jacobi, assign_points, period_matrix, riemann_constant
from boxball.errors import DomainError, PrecisionError
from boxball.puiseux import PuiPoly, PuiseuxTrunc, newton_polygon, puiseux_roots, val_at_root
from boxball.puiseux import numbers
from boxball.puiseux.upoly import upoly_coprime_part, upoly_degree, upoly_divmod, upoly_strip_zero_roots
from boxball.spectral.lax import to_puipoly
from boxball.spectral.polys import exact_initial_form, v_y

logger = logging.getLogger("spectral")

# u - 1: at slope 1 this root makes q - y cancel
UNIT_ROOT = [Fraction(-1), Fraction(1)]


@dataclass(frozen=True, order=True)
class DivisorPoint:
    X: Fraction
    Y: Fraction

    def __str__(self):
        return f"({self.X}, {self.Y})"


def depth_limit(m, depth):
    """Largest lifting depth tried before giving up; grows with the number of factors."""
    return max(depth, 4 * (m.factors + 2))


def _slope_points(m, slope, mult, depth, settings):
    a21, a11, a22 = m.a21, m.a11, m.a22
    facet = upoly_strip_zero_roots(exact_initial_form(a21, slope))
    points = []

    # roots where in(a11) does not vanish
    plain = upoly_coprime_part(facet, exact_initial_form(a11, slope))
    n_plain = upoly_degree(plain)
    if n_plain > 0:
        points += [DivisorPoint(Fraction(v_y(a11, slope)), slope)] * n_plain
    rest = upoly_divmod(facet, plain)[0]

    # a11·a22 = det = (q - y)^L at a root of a21
    via_det = upoly_coprime_part(rest, exact_initial_form(a22, slope))
    if slope == 1:
        via_det = upoly_coprime_part(via_det, UNIT_ROOT)
    n_det = upoly_degree(via_det)
    if n_det > 0:
        x = m.factors * min(Fraction(1), slope) - v_y(a22, slope)
        points += [DivisorPoint(Fraction(x), slope)] * n_det
    rest = upoly_divmod(rest, via_det)[0]

    n_rest = upoly_degree(rest)
    if n_rest > 0:
        logger.info(f"Slope {slope}: {n_rest} root(s) need Newton-Puiseux lifting")
        points += _lifted_points(m, slope, rest, n_rest, depth, settings)
    if len(points) != mult:
        logger.warning(f"Slope {slope}: {len(points)} point(s) for multiplicity {mult}")
    return points


def _chosen_branches(m, slope, rest, count, depth, settings):
    branches = puiseux_roots(to_puipoly(m.a21), slope, depth, settings)
    with numbers.using(settings):
        coeffs = [numbers.to_mp(c) for c in rest]

        def residual(branch):
            u = numbers.to_mp(branch.leading_coefficient)
            value = mpmath.polyval(coeffs[::-1], u)
            return abs(value) / max(abs(c) * abs(u) ** n for n, c in enumerate(coeffs))

        return sorted(branches, key=residual)[:count]


def _x_at(m, branch, settings):
    """val a₁₁(y*), falling back on a₁₁ = (q − y)^L / a₂₂ when a₁₁ cancels too deeply."""
    try:
        x = val_at_root(to_puipoly(m.a11), branch, settings)
    except PrecisionError:
        q_minus_y = PuiPoly([PuiseuxTrunc.monomial(Fraction(1), 1), -1])
        v22 = val_at_root(to_puipoly(m.a22), branch, settings)
        if v22.is_inf:
            raise DomainError("a22 vanishes at a root of a21")
        return m.factors * val_at_root(q_minus_y, branch, settings).value - v22.value
    if x.is_inf:
        raise DomainError(f"a11 vanishes at a root of a21 of valuation {branch.val}")
    return x.value


def _lifted_points(m, slope, rest, count, depth, settings):
    limit = depth_limit(m, depth)
    while True:
        try:
            chosen = _chosen_branches(m, slope, rest, count, depth, settings)
            return [DivisorPoint(Fraction(_x_at(m, branch, settings)), slope) for branch in chosen]
        except PrecisionError as e:
            if depth >= limit:
                raise PrecisionError(f"slope {slope}: valuation unresolved at depth {depth}: {e}") from e
            depth = min(2 * depth, limit)
            logger.info(f"Slope {slope}: deepening Newton-Puiseux lifting to depth {depth}")


def divisor_points(m, depth=DEFAULT_DEPTH, settings=None):
    """
    One DivisorPoint per root of a₂₁ of positive valuation, with multiplicity, ordered by Y then X.

    Roots of valuation 0 land on the base point O and roots of negative
    valuation on the ray σ₁; both carry no Abel–Jacobi weight and are left out.
    """
    if m.a21.is_zero:
        raise DomainError("a21 vanishes identically")
    try:
        slopes = newton_polygon(to_puipoly(m.a21))
    except DomainError:
        logger.debug("a21 has no nonzero roots")
        return []
    points = []
    skipped = 0
    for slope, mult in slopes:
        slope = Fraction(slope)
        if slope <= 0:
            skipped += mult
            continue
        points += _slope_points(m, slope, mult, depth, settings)
    points.sort(key=lambda p: (p.Y, p.X))
    logger.debug(f"Divisor points: {', '.join(str(p) for p in points)} ({skipped} root(s) at Y <= 0 skipped)")
    return points


def abel_jacobi_sum(points, curve, refs=None):
    """Σ 𝒜₀(P_k) over the divisor, unreduced; `refs` fixes the edge of each point."""
    total = tuple(Fraction(0) for _ in range(curve.genus))
    for ref in refs if refs is not None else assign_points(points, curve):
        total = vec_add(total, abel_jacobi(ref, curve))
    return total


def compute_c0(points, curve, refs=None):
    """c₀ = κ − Σ 𝒜₀(P_k), reduced to the centred cell of R^g / B·Z^g."""
    if curve.genus == 0:
        return ()
    raw = vec_sub(riemann_constant(curve), abel_jacobi_sum(points, curve, refs))
    reduced, r = reduce_mod_lattice(raw, period_matrix(curve))
    logger.debug(f"c0 = {raw} reduced by B·{r} to {reduced}")
    return reduced

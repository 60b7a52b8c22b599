"""
The tropical Riemann theta function

    Θ(z; B) = min_{m ∈ Z^g} [½⟨m, Bm⟩ + ⟨m, z⟩]

evaluated exactly. z is first moved into the centred cell of R^g / B·Z^g
using quasi-periodicity; the remaining minimum is found by a Fincke–Pohst
enumeration on the square-root free decomposition of B.
"""
import logging
import math
from fractions import Fraction

from boxball.core import dot, exact_cholesky, quad_form, reduce_mod_lattice, solve, vector
from boxball.curve import period_matrix

logger = logging.getLogger("theta")


def _objective(m, B, z):
    return quad_form(B, m) / 2 + dot(m, z)


def _integer_range(center, rad2):
    """Integers k with (k - center)² ≤ rad2."""
    if rad2 < 0:
        return range(0)
    root = math.isqrt(math.floor(rad2)) + 1
    lo = math.floor(center) - root
    hi = math.ceil(center) + root
    while lo <= hi and (lo - center) ** 2 > rad2:
        lo += 1
    while hi >= lo and (hi - center) ** 2 > rad2:
        hi -= 1
    return range(lo, hi + 1)


def _enumerate(B, z, factor):
    """All minimizers of ½⟨m,Bm⟩ + ⟨m,z⟩ and the minimum."""
    lower, pivots = factor
    g = len(z)
    center = tuple(-c for c in solve(B, z, factor))
    start = tuple(round(c) for c in center)
    diff = tuple(Fraction(a) - c for a, c in zip(start, center))
    bound = quad_form(B, diff)

    best_value = None
    best = []
    m = [0] * g

    def walk(k, partial):
        nonlocal best_value, best, bound
        if k < 0:
            value = _objective(m, B, z)
            if best_value is None or value < best_value:
                best_value, best = value, [tuple(m)]
                bound = quad_form(B, tuple(a - c for a, c in zip(m, center)))
            elif value == best_value:
                best.append(tuple(m))
            return
        # (Lᵀx)_k = x_k + Σ_{i>k} L_ik x_i with x = m - center
        shift = sum((lower[i][k] * (m[i] - center[i]) for i in range(k + 1, g)), Fraction(0))
        for mk in _integer_range(center[k] - shift, (bound - partial) / pivots[k]):
            m[k] = mk
            walk(k - 1, partial + pivots[k] * (mk - center[k] + shift) ** 2)
        m[k] = 0

    walk(g - 1, Fraction(0))
    return best_value, sorted(best)


def theta_minimizers(z, B, factor=None):
    """(Θ(z; B), every m ∈ Z^g attaining it in lexicographic order)."""
    z = vector(z)
    if not z:
        return Fraction(0), [()]
    factor = factor or exact_cholesky(B)
    z0, r = reduce_mod_lattice(z, B, factor)
    value, argmins = _enumerate(B, z0, factor)
    # Θ(z0 + Br) = Θ(z0) - ½⟨r,Br⟩ - ⟨z0,r⟩; minimizers shift by -r
    value = value - quad_form(B, r) / 2 - dot(z0, r)
    return value, [tuple(a - b for a, b in zip(m, r)) for m in argmins]


def theta(z, B, factor=None):
    """(Θ(z; B), lexicographically smallest minimizer)."""
    value, argmins = theta_minimizers(z, B, factor)
    return value, argmins[0]


def kink_order(z, direction, B, factor=None):
    """
    Order of t ↦ Θ(z + t·d; B) at t = 0: left slope minus right slope.

    The one-sided slopes are the extreme values of ⟨m, d⟩ over the minimizers.
    """
    _, argmins = theta_minimizers(z, B, factor)
    slopes = [dot(m, vector(direction)) for m in argmins]
    return max(slopes) - min(slopes)


def _kinks(f_min, a, b, found, depth=0):
    """Kinks of the concave piecewise-linear t ↦ Θ on [a, b] by tangent intersection."""
    fa, ma = f_min(a)
    fb, mb = f_min(b)
    right_a = min(ma)
    left_b = max(mb)
    if right_a == left_b or depth > 64:
        return
    t = (fb - fa + right_a * a - left_b * b) / (right_a - left_b)
    ft, mt = f_min(t)
    if ft == fa + right_a * (t - a):
        found.append((t, max(mt) - min(mt)))
        return
    _kinks(f_min, a, t, found, depth + 1)
    _kinks(f_min, t, b, found, depth + 1)


def kinks_along(z, direction, B, start, stop, factor=None):
    """[(t, order)] for the kinks of t ↦ Θ(z + t·d; B) with start < t < stop."""
    z, d = vector(z), vector(direction)
    factor = factor or exact_cholesky(B)

    def f_min(t):
        value, argmins = theta_minimizers(tuple(a + t * b for a, b in zip(z, d)), B, factor)
        return value, [dot(m, d) for m in argmins]

    found = []
    _kinks(f_min, Fraction(start), Fraction(stop), found)
    return sorted((t, order) for t, order in set(found) if start < t < stop)


def theta_zeros_along_cycles(curve, B=None):
    """
    Zeros of P ↦ Θ(𝒜₀(P); B) on the θ edges, as [(i, t, order)].

    Along θ_i the image is (min(S_i, S_j))_j + t·e_i; the zeros are the
    branch-cut points Q_i, one per cycle.
    """
    B = B or period_matrix(curve)
    factor = exact_cholesky(B)
    g = curve.genus
    out = []
    for i in range(1, g + 1):
        s = curve.solitons[i - 1]
        base = tuple(Fraction(min(s, t)) for t in curve.solitons)
        direction = tuple(Fraction(int(j == i - 1)) for j in range(g))
        for t, order in kinks_along(base, direction, B, 0, curve.theta_length(i), factor):
            out.append((i, t, order))
    logger.debug(f"Theta zeros along cycles: {out}")
    return out


def quasi_period_shift(z, r, B):
    """Θ(z + Br; B) − Θ(z; B) predicted by quasi-periodicity."""
    return -quad_form(B, r) / 2 - dot(vector(z), r)

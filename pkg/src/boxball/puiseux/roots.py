"""
Newton–Puiseux lifting of roots and valuations at roots.

A root branch is grown one term at a time: the facet polynomial of the
current slope gives the leading coefficient, the polynomial is shifted by
that term and the next slope (strictly larger) is read off the new Newton
polygon. Rational facet roots keep the whole branch exact.
"""
import logging
from fractions import Fraction

import mpmath
from mpmath.libmp import NoConvergence

from boxball.constants import DEFAULT_DEPTH
from boxball.core import ExtRational, INF
from boxball.errors import DomainError, PrecisionError
from boxball.puiseux import numbers
from boxball.puiseux.poly import initial_form, newton_polygon, v_p
from boxball.puiseux.series import PuiseuxTrunc
from boxball.puiseux.upoly import rational_roots, upoly_divmod, upoly_squarefree

logger = logging.getLogger("puiseux")

POLYROOTS_STEPS = (400, 4000)


class RootBranch(PuiseuxTrunc):
    """A truncated root. `partial` is set when the branch bookkeeping lost roots."""

    __slots__ = ("partial",)

    def __init__(self, terms=(), order=None, partial=False):
        super().__init__(terms, order)
        self.partial = partial


def _numeric_roots(coeffs):
    """Roots of an ascending mpc coefficient list, clustered into (root, multiplicity)."""
    settings = numbers.active()
    descending = [numbers.to_mp(c) for c in reversed(coeffs)]
    roots = None
    for steps in POLYROOTS_STEPS:
        try:
            roots = mpmath.polyroots(descending, maxsteps=steps, extraprec=2 * settings.precision)
            break
        except NoConvergence:
            logger.debug(f"polyroots did not converge in {steps} steps (degree {len(descending) - 1})")
    if roots is None:
        raise PrecisionError(f"facet roots did not converge for a degree-{len(descending) - 1} polynomial; "
                             f"raise the working precision")
    if not isinstance(roots, (list, tuple)):
        roots = [roots]
    clusters = []
    tol = settings.cluster_tolerance
    for r in roots:
        r = mpmath.mpc(r)
        for cluster in clusters:
            if abs(cluster[0] - r) <= tol * max(1, abs(r)):
                cluster.append(r)
                break
        else:
            clusters.append([r])
    # the cluster mean is far more accurate than any single member
    return [(sum(c) / len(c), len(c)) for c in clusters]


def _exact_roots(coeffs):
    out = []
    for factor, mult in upoly_squarefree(coeffs):
        for r in rational_roots(factor):
            out.append((r, mult))
            factor = upoly_divmod(factor, [-r, Fraction(1)])[0]
        if len(factor) > 1:
            out += [(r, mult) for r, _ in _numeric_roots(factor)]
    return out


def facet_roots(form):
    """
    Nonzero roots of a facet polynomial {degree: coefficient} as [(root, multiplicity)].

    Exact forms are split into square-free parts first; rational roots come
    back as Fractions and only irrational ones are found numerically.
    """
    low = min(form)
    high = max(form)
    if high == low:
        return []
    coeffs = [form.get(n, 0) for n in range(low, high + 1)]
    with numbers.using():
        if all(numbers.is_exact(c) for c in coeffs):
            return _exact_roots([Fraction(c) for c in coeffs])
        return _numeric_roots(coeffs)


def _branches(f, p, depth):
    form = initial_form(f, p)
    out = []
    for c, mult in facet_roots(form):
        logger.debug(f"slope {p}: facet root {c if numbers.is_exact(c) else mpmath.nstr(c, 8)} (multiplicity {mult})")
        term = PuiseuxTrunc.monomial(c, p)
        shifted = f.taylor_shift(term)
        tails = []
        zero_roots = shifted.lowest_degree or 0
        # y' = 0 is an exact root of the shifted polynomial
        tails.extend([((), None)] * min(zero_roots, mult))
        remaining = mult - len(tails)
        if remaining > 0:
            slopes = [(s, m) for s, m in newton_polygon(shifted) if s > p]
            if depth <= 1:
                order = min(s for s, _ in slopes) if slopes else None
                tails.extend([((), order)] * remaining)
            else:
                for s, m in sorted(slopes):
                    for sub in _branches(shifted, s, depth - 1):
                        tails.append((sub.terms, sub.order))
        partial = len(tails) != mult
        if partial:
            logger.warning(f"Root bookkeeping at slope {p}: expected {mult} branch(es), found {len(tails)}")
        for terms, order in tails[:mult]:
            out.append(RootBranch(((p, c),) + tuple(terms), order, partial))
    return out


def puiseux_roots(f, p, depth=DEFAULT_DEPTH, settings=None):
    """
    Truncated Puiseux roots of f of valuation p, one per root counted with multiplicity.

    Each branch carries `depth` Newton–Puiseux steps at most; `order` is the
    valuation of the unresolved remainder (None when the root is exact).
    """
    p = Fraction(p)
    if depth < 1:
        raise DomainError("depth must be positive")
    slopes = dict(newton_polygon(f))
    if p not in slopes:
        raise DomainError(f"{p} is not a Newton polygon slope")
    with numbers.using(settings):
        roots = _branches(f, p, depth)
    if len(roots) != slopes[p]:
        logger.warning(f"Slope {p}: {len(roots)} branch(es) for multiplicity {slopes[p]}")
    return roots


def _evaluate_form(form, u):
    value = Fraction(0)
    scale = mpmath.mpf(0)
    for n, c in form.items():
        term = numbers.mul(c, u ** n)
        value = numbers.add(value, term)
        scale = max(scale, numbers.magnitude(term))
    return value, scale


class _Accumulator:
    """Series coefficients with the magnitude of everything summed into them."""

    def __init__(self, cutoff):
        self.cutoff = cutoff
        self.coeffs = {}
        self.scale = {}

    def add(self, exponent, coeff):
        if exponent >= self.cutoff:
            return
        self.coeffs[exponent] = numbers.add(self.coeffs.get(exponent, 0), coeff)
        self.scale[exponent] = max(self.scale.get(exponent, mpmath.mpf(0)), numbers.magnitude(coeff))

    def first_nonzero(self):
        for exponent in sorted(self.coeffs):
            if not numbers.is_zero(self.coeffs[exponent], self.scale[exponent]):
                return exponent
        return None


def _power_terms(terms, n, cutoff):
    """Terms of (sum c_k q^e_k)^n below the cutoff, as a dict exponent -> coefficient."""
    result = {Fraction(0): Fraction(1)}
    for _ in range(n):
        nxt = {}
        for e1, c1 in result.items():
            for e2, c2 in terms:
                e = e1 + e2
                if e >= cutoff:
                    continue
                nxt[e] = numbers.add(nxt.get(e, 0), numbers.mul(c1, c2))
        result = nxt
    return result


def val_at_root(g, ystar, settings=None):
    """
    val(g(y*)) for a truncated root y*.

    Fast path: v_p(g) when in_p(g) does not vanish at the leading coefficient of y*.
    Otherwise the series is substituted; the answer is returned only when it is
    resolved below the truncation error, never guessed.
    """
    if g.is_zero:
        return INF
    if ystar.is_zero:
        # g(0)
        return g.coeffs[0].val if g.coeffs else INF
    p = ystar.val.value
    with numbers.using(settings):
        form = initial_form(g, p)
        value, scale = _evaluate_form(form, ystar.leading_coefficient)
        if not numbers.is_zero(value, scale):
            return v_p(g, p)

        if ystar.order is None:
            cutoff = None
        else:
            # g(y) - g(y') has valuation >= val(y - y') + min_n [val(a_n) + (n - 1)p]
            cutoff = min(
                ystar.order + c.val.value + (n - 1) * p
                for n, c in enumerate(g.coeffs) if n >= 1 and not c.is_zero
            )
        finite_cut = cutoff if cutoff is not None else Fraction(10 ** 9)
        acc = _Accumulator(finite_cut)
        for n, c in enumerate(g.coeffs):
            if c.is_zero:
                continue
            for e1, c1 in _power_terms(ystar.terms, n, finite_cut - c.val.value).items():
                for e2, c2 in c.terms:
                    acc.add(e1 + e2, numbers.mul(c1, c2))
        exponent = acc.first_nonzero()
    if exponent is not None:
        logger.debug(f"val_at_root resolved by substitution: {exponent}")
        return ExtRational(exponent)
    if cutoff is None:
        return INF
    raise PrecisionError(f"increase depth: valuation not resolved below q^{cutoff}")

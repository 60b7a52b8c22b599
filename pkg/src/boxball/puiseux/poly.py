import logging
from fractions import Fraction

from boxball.core import ExtRational, INF
from boxball.errors import DomainError
from boxball.puiseux import numbers
from boxball.puiseux.series import PuiseuxTrunc

logger = logging.getLogger("puiseux")


class PuiPoly:
    """Polynomial in y over truncated Puiseux series; coeffs[n] multiplies y^n."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [c if isinstance(c, PuiseuxTrunc) else PuiseuxTrunc.monomial(Fraction(c)) for c in coeffs]
        # leading coefficient nonzero
        while coeffs and coeffs[-1].is_zero and coeffs[-1].is_exact:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_terms(cls, terms):
        """From {(q-exponent, y-degree): coefficient}."""
        by_degree = {}
        for (qe, n), c in terms.items():
            by_degree.setdefault(n, []).append((Fraction(qe), c))
        degree = max(by_degree, default=-1)
        return cls([PuiseuxTrunc(tuple(by_degree.get(n, ()))) for n in range(degree + 1)])

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lowest_degree(self):
        for n, c in enumerate(self.coeffs):
            if not c.is_zero:
                return n
        return None

    def support(self):
        """[(degree, val(coefficient))] over nonzero coefficients."""
        return [(n, c.val.value) for n, c in enumerate(self.coeffs) if not c.is_zero]

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return PuiPoly([])
        out = [PuiseuxTrunc() for _ in range(self.degree + other.degree + 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return PuiPoly(out)

    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        zero = PuiseuxTrunc()
        return PuiPoly([
            (self.coeffs[n] if n < len(self.coeffs) else zero) + (other.coeffs[n] if n < len(other.coeffs) else zero)
            for n in range(size)
        ])

    def taylor_shift(self, s):
        """Coefficients of f(s + y) as a polynomial in y; s is a PuiseuxTrunc."""
        b = list(self.coeffs)
        n = len(b) - 1
        for i in range(n):
            for j in range(n - 1, i - 1, -1):
                b[j] = b[j] + s * b[j + 1]
        return PuiPoly(b)

    def __call__(self, y):
        """Horner evaluation at a PuiseuxTrunc."""
        acc = PuiseuxTrunc()
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def __repr__(self):
        return "PuiPoly(" + ", ".join(f"y^{n}: {c!r}" for n, c in enumerate(self.coeffs) if not c.is_zero) + ")"


def v_p(f, p):
    """v_p(f) = min_n [val(c_n) + n·p]; +inf for the zero polynomial."""
    p = Fraction(p)
    best = INF
    for n, c in enumerate(f.coeffs):
        if c.is_zero:
            continue
        best = min(best, ExtRational(c.val.value + n * p))
    return best


def initial_form(f, p):
    """
    in_p(f) as {degree in u: coefficient}, u standing for q^(-p)·y.

    The coefficient of u^n is the coefficient of q^(v_p(f) - n·p) in c_n.
    """
    p = Fraction(p)
    v = v_p(f, p)
    if v.is_inf:
        raise DomainError("initial form of the zero polynomial")
    form = {}
    for n, c in enumerate(f.coeffs):
        if c.is_zero:
            continue
        coeff = c.coefficient(v.value - n * p)
        if not numbers.is_zero(coeff, numbers.magnitude(coeff)):
            form[n] = coeff
    return form


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points):
    """Lower convex hull of (degree, valuation) points, left to right."""
    pts = sorted(dict.fromkeys(points))
    lower = []
    for pt in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], pt) <= 0:
            lower.pop()
        lower.append(pt)
    return lower


def newton_polygon(f):
    """
    Valuations of the nonzero roots of f with multiplicities.

    Returned in hull order (left to right), i.e. decreasing root valuation.
    """
    support = f.support()
    # one point per degree: the minimal valuation
    by_degree = {}
    for n, v in support:
        by_degree[n] = min(v, by_degree.get(n, v))
    if len(by_degree) < 2:
        raise DomainError("no nonzero roots")
    hull = lower_hull(list(by_degree.items()))
    slopes = []
    for (n1, v1), (n2, v2) in zip(hull, hull[1:]):
        slopes.append((-(Fraction(v2) - Fraction(v1)) / (n2 - n1), n2 - n1))
    logger.debug(f"Newton polygon hull {hull} -> slopes {slopes}")
    return slopes

"""
Exact arithmetic shared by every other module.

Rationals are `fractions.Fraction`; vectors are tuples of Fractions and matrices
tuples of row tuples. Nothing in here touches floating point.
"""
import logging
import math
from fractions import Fraction
from functools import total_ordering

from boxball.errors import DomainError

logger = logging.getLogger("core")


@total_ordering
class ExtRational:
    """A rational number or +inf. The value semiring of valuations."""

    __slots__ = ("_value",)

    def __init__(self, value=None):
        # None encodes +inf
        if value is None or isinstance(value, ExtRational):
            self._value = None if value is None else value._value
        else:
            self._value = Fraction(value)

    @property
    def is_inf(self):
        return self._value is None

    @property
    def value(self):
        """The underlying Fraction; raises on +inf."""
        if self._value is None:
            raise DomainError("+inf has no finite value")
        return self._value

    def __add__(self, other):
        other = other if isinstance(other, ExtRational) else ExtRational(other)
        if self.is_inf or other.is_inf:
            return INF
        return ExtRational(self._value + other._value)

    __radd__ = __add__

    def __eq__(self, other):
        if not isinstance(other, ExtRational):
            try:
                other = ExtRational(other)
            except (TypeError, ValueError, OverflowError):
                return NotImplemented
        return self._value == other._value

    def __lt__(self, other):
        other = other if isinstance(other, ExtRational) else ExtRational(other)
        if self.is_inf:
            return False
        if other.is_inf:
            return True
        return self._value < other._value

    def __hash__(self):
        # ExtRational(x) == x, so the hashes agree too
        return hash(float("inf")) if self.is_inf else hash(self._value)

    def __repr__(self):
        return "ExtRational(+inf)" if self.is_inf else f"ExtRational({self._value})"

    def __str__(self):
        return "+inf" if self.is_inf else str(self._value)


INF = ExtRational(None)


def frac(x):
    """Parse ints, Fractions and "p/q" strings into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(x)


def vector(values):
    return tuple(frac(v) for v in values)


def matrix(rows):
    return tuple(tuple(frac(v) for v in row) for row in rows)


def identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(k, a):
    return tuple(k * x for x in a)


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def quad_form(m, v):
    """<v, m v>"""
    return dot(v, mat_vec(m, v))


def is_symmetric(m):
    n = len(m)
    return all(len(row) == n for row in m) and all(m[i][j] == m[j][i] for i in range(n) for j in range(i))


def min_plus_eval(terms, point):
    """
    Evaluate the tropical polynomial min_k [coeff_k + <slope_k, point>].

    Returns (value, index) with ties broken by the smallest index.
    """
    if not terms:
        raise DomainError("empty tropical polynomial")
    best_value = None
    best_index = None
    for index, (coeff, slope) in enumerate(terms):
        value = frac(coeff) + dot(vector(slope), vector(point))
        if best_value is None or value < best_value:
            best_value, best_index = value, index
    return best_value, best_index


def exact_cholesky(m):
    """
    Square-root free decomposition m = L·diag(D)·Lᵀ with L unit lower triangular.

    The entries of D are the elimination pivots; every one must be positive.
    Returns (L, D).
    """
    m = matrix(m)
    if not is_symmetric(m):
        raise DomainError("matrix not symmetric")
    n = len(m)
    lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pivots = []
    for j in range(n):
        d = m[j][j] - sum((lower[j][k] ** 2 * pivots[k] for k in range(j)), Fraction(0))
        if d <= 0:
            raise DomainError("matrix not positive definite")
        pivots.append(d)
        for i in range(j + 1, n):
            s = m[i][j] - sum((lower[i][k] * lower[j][k] * pivots[k] for k in range(j)), Fraction(0))
            lower[i][j] = s / d
    return tuple(tuple(row) for row in lower), tuple(pivots)


def solve(m, b, factor=None):
    """Solve m x = b for symmetric positive definite m."""
    lower, pivots = factor if factor is not None else exact_cholesky(m)
    n = len(pivots)
    # forward: L y = b
    y = []
    for i in range(n):
        y.append(frac(b[i]) - sum((lower[i][k] * y[k] for k in range(i)), Fraction(0)))
    # diagonal
    w = [y[i] / pivots[i] for i in range(n)]
    # backward: Lᵀ x = w
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        x[i] = w[i] - sum((lower[k][i] * x[k] for k in range(i + 1, n)), Fraction(0))
    return tuple(x)


def reduce_mod_lattice(v, m, factor=None):
    """
    Representative of v in R^g / m·Z^g inside the centred cell.

    Returns (reduced, r) with v = reduced + m·r and m⁻¹·reduced in [-1/2, 1/2)^g.
    """
    coords = solve(m, v, factor)
    r = tuple(math.floor(c + Fraction(1, 2)) for c in coords)
    reduced = vec_sub(vector(v), mat_vec(m, r))
    return reduced, r

"""
Exact univariate polynomials over Q as ascending coefficient lists.

Facet polynomials of integer (q, y) polynomials live here; their repeated
and rational roots are split off exactly before anything goes numeric.
"""
import math
from fractions import Fraction

RATIONAL_SEARCH_LIMIT = 10 ** 12


def upoly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def upoly_degree(a):
    return len(upoly_trim(a)) - 1


def upoly_divmod(a, b):
    a = upoly_trim(a)
    b = upoly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quotient = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    remainder = [Fraction(x) for x in a]
    while len(remainder) >= len(b) and remainder:
        shift = len(remainder) - len(b)
        factor = remainder[-1] / b[-1]
        quotient[shift] = factor
        for i, c in enumerate(b):
            remainder[i + shift] -= factor * c
        remainder = upoly_trim(remainder)
    return upoly_trim(quotient), remainder


def upoly_gcd(a, b):
    """Monic gcd."""
    a = upoly_trim(a)
    b = upoly_trim(b)
    while b:
        a, b = b, upoly_divmod(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def upoly_strip_zero_roots(a):
    a = upoly_trim(a)
    k = 0
    while k < len(a) and a[k] == 0:
        k += 1
    return a[k:]


def upoly_coprime_part(a, b):
    """Largest factor of a sharing no root with b (multiplicities included)."""
    rest = upoly_trim(a)
    while True:
        g = upoly_gcd(rest, b)
        if len(g) <= 1:
            return rest
        rest = upoly_divmod(rest, g)[0]


def upoly_derivative(a):
    return upoly_trim([n * c for n, c in enumerate(a)][1:])


def upoly_squarefree(a):
    """
    Yun's decomposition: [(factor, multiplicity)] with square-free, pairwise
    coprime monic factors whose product (with multiplicities) is a up to a constant.
    """
    a = upoly_trim([Fraction(c) for c in a])
    if len(a) <= 1:
        return []
    out = []
    da = upoly_derivative(a)
    g = upoly_gcd(a, da)
    b = upoly_divmod(a, g)[0]
    c = upoly_divmod(da, g)[0]
    k = 1
    while len(b) > 1:
        d = upoly_trim(_sub(c, upoly_derivative(b)))
        factor = upoly_gcd(b, d)
        if len(factor) > 1:
            out.append((factor, k))
        b = upoly_divmod(b, factor)[0]
        c = upoly_divmod(d, factor)[0]
        k += 1
    return out


def _sub(a, b):
    size = max(len(a), len(b))
    return [(a[n] if n < len(a) else 0) - (b[n] if n < len(b) else 0) for n in range(size)]


def _divisors(n):
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def upoly_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def rational_roots(a):
    """Distinct nonzero rational roots of a square-free a, or [] when the coefficients are too large to search."""
    a = upoly_strip_zero_roots(a)
    if len(a) <= 1:
        return []
    scale = math.lcm(*(Fraction(c).denominator for c in a))
    ints = [int(c * scale) for c in a]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    if max(abs(ints[0]), abs(ints[-1])) > RATIONAL_SEARCH_LIMIT:
        return []
    found = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if r not in found and upoly_eval(a, r) == 0:
                    found.add(r)
    return sorted(found)

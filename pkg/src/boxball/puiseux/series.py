from fractions import Fraction

import mpmath

from boxball.core import ExtRational, INF
from boxball.puiseux import numbers


class PuiseuxTrunc:
    """
    Truncated Puiseux series  sum_k c_k q^(e_k)  + O(q^order).

    `terms` is a tuple of (exponent: Fraction, coefficient) with strictly
    increasing exponents and nonzero coefficients. `order` is None when the
    series is exact (a polynomial in q^(1/d)), otherwise the exponent from
    which on nothing is known.
    """

    __slots__ = ("terms", "order")

    def __init__(self, terms=(), order=None):
        merged = {}
        scale = {}
        for exponent, coeff in terms:
            exponent = Fraction(exponent)
            merged[exponent] = numbers.add(merged.get(exponent, 0), coeff)
            scale[exponent] = max(scale.get(exponent, mpmath.mpf(0)), numbers.magnitude(coeff))
        if order is not None:
            order = Fraction(order)
        cleaned = []
        for exponent in sorted(merged):
            coeff = merged[exponent]
            if order is not None and exponent >= order:
                continue
            if numbers.is_zero(coeff, scale[exponent]):
                continue
            cleaned.append((exponent, coeff))
        self.terms = tuple(cleaned)
        self.order = order

    # ---- constructors ----
    @classmethod
    def monomial(cls, coeff, exponent=0):
        return cls(((exponent, coeff),))

    # ---- queries ----
    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_exact(self):
        return self.order is None

    @property
    def val(self):
        if self.terms:
            return ExtRational(self.terms[0][0])
        if self.order is None:
            return INF
        # nothing resolved below the truncation order
        return ExtRational(self.order)

    @property
    def leading_coefficient(self):
        return self.terms[0][1] if self.terms else 0

    def coefficient(self, exponent):
        exponent = Fraction(exponent)
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    # ---- arithmetic ----
    def _min_order(self, other):
        orders = [o for o in (self.order, other.order) if o is not None]
        return min(orders) if orders else None

    def __add__(self, other):
        if not isinstance(other, PuiseuxTrunc):
            other = PuiseuxTrunc.monomial(Fraction(other))
        return PuiseuxTrunc(self.terms + other.terms, self._min_order(other))

    def __neg__(self):
        return PuiseuxTrunc(tuple((e, numbers.mul(-1, c)) for e, c in self.terms), self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxTrunc):
            other = PuiseuxTrunc.monomial(Fraction(other))
        # O(q^a)·(b0 q^v + ...) is O(q^(a+v))
        order = None
        if self.order is not None:
            order = self.order + (other.val.value if other.terms else other.order or 0)
        if other.order is not None:
            candidate = other.order + (self.val.value if self.terms else self.order or 0)
            order = candidate if order is None else min(order, candidate)
        products = []
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                if order is not None and e1 + e2 >= order:
                    continue
                products.append((e1 + e2, numbers.mul(c1, c2)))
        return PuiseuxTrunc(products, order)

    __rmul__ = __mul__

    def shift(self, exponent, coeff=1):
        """Multiply by coeff·q^exponent."""
        exponent = Fraction(exponent)
        order = None if self.order is None else self.order + exponent
        return PuiseuxTrunc(tuple((e + exponent, numbers.mul(c, coeff)) for e, c in self.terms), order)

    def __eq__(self, other):
        if not isinstance(other, PuiseuxTrunc):
            return NotImplemented
        return self.terms == other.terms and self.order == other.order

    def __hash__(self):
        return hash((self.terms, self.order))

    def __repr__(self):
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(f"({c})*q^({e})" for e, c in self.terms)
        return body if self.order is None else f"{body} + O(q^({self.order}))"

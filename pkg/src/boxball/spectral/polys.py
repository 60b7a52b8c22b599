"""
Sparse integer polynomials and their valuations along a slope.

`SparsePoly` maps exponent tuples to nonzero integers; the Lax entries use
(q-degree, y-degree) keys and the characteristic polynomial uses
(x-degree, q-degree, y-degree).
"""
from fractions import Fraction


class SparsePoly:
    __slots__ = ("terms", "arity")

    def __init__(self, terms=None, arity=2):
        self.arity = arity
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def constant(cls, c, arity=2):
        return cls({(0,) * arity: c}, arity)

    @classmethod
    def monomial(cls, exponents, c=1):
        return cls({tuple(exponents): c}, len(exponents))

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SparsePoly(out, self.arity)

    def __neg__(self):
        return SparsePoly({k: -v for k, v in self.terms.items()}, self.arity)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparsePoly({k: v * other for k, v in self.terms.items()}, self.arity)
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return SparsePoly(out, self.arity)

    __rmul__ = __mul__

    def shift(self, exponents):
        """Multiply by the monomial with the given exponent tuple."""
        return SparsePoly({tuple(a + b for a, b in zip(k, exponents)): v for k, v in self.terms.items()}, self.arity)

    def __pow__(self, n):
        out = SparsePoly.constant(1, self.arity)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self, axis):
        return max((k[axis] for k in self.terms), default=-1)

    def __repr__(self):
        return f"SparsePoly({dict(sorted(self.terms.items()))})"


# ---- (q, y) helpers ----

def y_valuations(poly):
    """{y-degree: lowest q-degree}: the coefficient valuations."""
    out = {}
    for (qd, yd) in poly.terms:
        out[yd] = min(qd, out.get(yd, qd))
    return out


def v_y(poly, p):
    """v_p on an integer (q, y) polynomial; None for zero."""
    p = Fraction(p)
    vals = y_valuations(poly)
    if not vals:
        return None
    return min(v + n * p for n, v in vals.items())


def exact_initial_form(poly, p):
    """in_p of a (q, y) polynomial as an ascending list of Fractions in u."""
    p = Fraction(p)
    v = v_y(poly, p)
    form = {}
    for (qd, yd), c in poly.terms.items():
        if qd == v - yd * p:
            form[yd] = form.get(yd, 0) + c
    degree = max(form, default=-1)
    return [Fraction(form.get(n, 0)) for n in range(degree + 1)]


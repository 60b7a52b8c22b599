"""
Lax matrices of periodic box-ball states and their spectral curves.

Every empty box contributes H(y) = [[1, 1], [y, q]] and every ball
T(y) = [[q, 1], [y, 1]]; the state matrix is the ordered product. Entries
are kept as sparse (q, y) integer polynomials so products stay exact.
"""
import logging
from dataclasses import dataclass

from boxball.automata import parse_cells
from boxball.errors import BoxBallError
from boxball.puiseux import PuiPoly
from boxball.spectral.polys import SparsePoly

logger = logging.getLogger("spectral")

ONE = SparsePoly.constant(1)
Q = SparsePoly.monomial((1, 0))
Y = SparsePoly.monomial((0, 1))


@dataclass(frozen=True)
class LaxMatrix:
    a11: SparsePoly
    a12: SparsePoly
    a21: SparsePoly
    a22: SparsePoly
    factors: int = 0

    @classmethod
    def identity(cls):
        zero = SparsePoly()
        return cls(ONE, zero, zero, ONE, 0)

    def times_h(self):
        return LaxMatrix(
            self.a11 + self.a12.shift((0, 1)),
            self.a11 + self.a12.shift((1, 0)),
            self.a21 + self.a22.shift((0, 1)),
            self.a21 + self.a22.shift((1, 0)),
            self.factors + 1,
        )

    def times_t(self):
        return LaxMatrix(
            self.a11.shift((1, 0)) + self.a12.shift((0, 1)),
            self.a11 + self.a12,
            self.a21.shift((1, 0)) + self.a22.shift((0, 1)),
            self.a21 + self.a22,
            self.factors + 1,
        )

    def __matmul__(self, other):
        return LaxMatrix(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
            self.factors + other.factors,
        )

    def trace(self):
        return self.a11 + self.a22

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    def is_nonnegative(self):
        return all(c > 0 for e in self.entries() for c in e.terms.values())

    def __eq__(self, other):
        if not isinstance(other, LaxMatrix):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())


H = LaxMatrix.identity().times_h()
T = LaxMatrix.identity().times_t()


def _cells(state):
    if isinstance(state, str):
        return tuple(parse_cells(state))
    return tuple(getattr(state, "cells", state))


def build_matrix(state):
    """
    Ordered product of H for '.' and T for '1', left to right.

    `state` is a state object, a state string or a sequence of 0/1 cells; no
    ball-density condition applies here.
    """
    cells = _cells(state)
    m = LaxMatrix.identity()
    for cell in cells:
        m = m.times_t() if cell else m.times_h()
    logger.debug(f"Lax matrix of {len(cells)} factor(s) built")
    return m


def to_puipoly(poly):
    """Read a (q, y) polynomial as a polynomial in y over exact Puiseux series."""
    return PuiPoly.from_terms({(qd, yd): c for (qd, yd), c in poly.terms.items()})


class CharPoly:
    """Φ(x, y) = det(m − xE) = x² − tr(m)·x + det(m), stored over (x, q, y) exponents."""

    def __init__(self, m):
        self.trace = m.trace()
        self.det = m.det()
        expected = (Q - Y) ** m.factors
        if self.det != expected:
            raise BoxBallError(f"internal consistency: det of the Lax matrix is not (q - y)^{m.factors}")
        terms = {(2, 0, 0): 1}
        for (qd, yd), c in self.trace.terms.items():
            terms[(1, qd, yd)] = -c
        for (qd, yd), c in self.det.terms.items():
            terms[(0, qd, yd)] = terms.get((0, qd, yd), 0) + c
        self.poly = SparsePoly(terms, 3)
        self.L = m.factors

    def tropical_terms(self):
        """[(val(a_w), (w_x, w_y))] for the tropical polynomial Val_Φ(X, Y)."""
        vals = {}
        for (xd, qd, yd) in self.poly.terms:
            key = (xd, yd)
            vals[key] = min(qd, vals.get(key, qd))
        return [(v, w) for w, v in sorted(vals.items())]

    def __repr__(self):
        return f"CharPoly(L={self.L}, terms={len(self.poly.terms)})"


def char_poly(m):
    return CharPoly(m)


def _trop_add(a, b):
    out = dict(a)
    for n, v in b.items():
        out[n] = min(v, out.get(n, v))
    return out


def _trop_mul(a, b):
    out = {}
    for n1, v1 in a.items():
        for n2, v2 in b.items():
            n = n1 + n2
            out[n] = min(v1 + v2, out.get(n, v1 + v2))
    return out


def _trop_matmul(a, b):
    return tuple(
        tuple(_trop_add(_trop_mul(a[i][0], b[0][j]), _trop_mul(a[i][1], b[1][j])) for j in range(2))
        for i in range(2)
    )


TROPICAL_H = (({0: 0}, {0: 0}), ({1: 0}, {0: 1}))
TROPICAL_T = (({0: 1}, {0: 0}), ({1: 0}, {0: 0}))


def tropical_matrix(state):
    """
    Min-plus product of the tropicalized H/T factors.

    Entries are tropical polynomials in Y given as {y-degree: q-valuation};
    with positive coefficients they coincide with the valuations of the
    exact Lax matrix entries.
    """
    m = (({0: 0}, {}), ({}, {0: 0}))
    for cell in _cells(state):
        m = _trop_matmul(m, TROPICAL_T if cell else TROPICAL_H)
    return m

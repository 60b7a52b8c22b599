"""
Corner locus of a tropical polynomial in two variables.

Val(X, Y) = min_w [a_w + w₁X + w₂Y]; the locus is where the minimum is
attained at least twice. It is assembled pair by pair: the tie line of two
terms, cut down to where every other term is no smaller.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from boxball.curve.model import GAMMA_MINUS, GAMMA_PLUS, primitive
from boxball.errors import DomainError

logger = logging.getLogger("curve")


@dataclass(frozen=True)
class Edge:
    """A segment (end set) or a ray (end None) starting at `start` along `direction`."""

    start: tuple
    end: tuple | None
    direction: tuple
    weight: int

    @property
    def is_ray(self):
        return self.end is None

    def key(self):
        if self.is_ray:
            return ("ray", self.start, self.direction)
        return ("segment", *sorted((self.start, self.end)))


@dataclass(frozen=True)
class CornerLocus:
    vertices: frozenset
    edges: tuple

    def edge_keys(self):
        return {e.key() for e in self.edges}

    def contains(self, point):
        """Whether a point lies on one of the edges."""
        x, y = (Fraction(c) for c in point)
        for e in self.edges:
            dx, dy = e.direction
            rx, ry = x - e.start[0], y - e.start[1]
            if rx * dy != ry * dx:
                continue
            s = rx / dx if dx else ry / dy
            if s < 0:
                continue
            if e.is_ray:
                return True
            length = (e.end[0] - e.start[0]) / dx if dx else (e.end[1] - e.start[1]) / dy
            if s <= length:
                return True
        return False


def _terms_of(phi):
    terms = phi.tropical_terms() if hasattr(phi, "tropical_terms") else phi
    merged = {}
    for coeff, w in terms:
        w = tuple(int(k) for k in w)
        coeff = Fraction(coeff)
        merged[w] = min(coeff, merged.get(w, coeff))
    return [(a, w) for w, a in merged.items()]


def _tie_interval(terms, i, j):
    (ai, wi), (aj, wj) = terms[i], terms[j]
    d = (wi[0] - wj[0], wi[1] - wj[1])
    v, _ = primitive((-d[1], d[0]))
    rhs = aj - ai
    base = (rhs / d[0], Fraction(0)) if d[0] else (Fraction(0), rhs / d[1])
    lo, hi = None, None
    for k, (ak, wk) in enumerate(terms):
        if k in (i, j):
            continue
        dw = (wk[0] - wi[0], wk[1] - wi[1])
        alpha = ak - ai + dw[0] * base[0] + dw[1] * base[1]
        beta = dw[0] * v[0] + dw[1] * v[1]
        if beta == 0:
            if alpha < 0:
                return None
            continue
        bound = -alpha / beta
        if beta > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if lo is not None and hi is not None and lo >= hi:
        return None
    return base, v, lo, hi, primitive(d)[1]


def corner_locus(phi):
    """Vertices and edges of the corner locus; `phi` has `tropical_terms()` or is a term list."""
    terms = _terms_of(phi)
    if not terms:
        raise DomainError("empty tropical polynomial")
    edges = {}
    for i in range(len(terms)):
        for j in range(i + 1, len(terms)):
            found = _tie_interval(terms, i, j)
            if found is None:
                continue
            base, v, lo, hi, weight = found

            def at(s):
                return (base[0] + s * v[0], base[1] + s * v[1])

            if lo is None and hi is None:
                # a full line: two rays from the base point
                candidates = [Edge(at(Fraction(0)), None, v, weight), Edge(at(Fraction(0)), None, (-v[0], -v[1]), weight)]
            elif hi is None:
                candidates = [Edge(at(lo), None, v, weight)]
            elif lo is None:
                candidates = [Edge(at(hi), None, (-v[0], -v[1]), weight)]
            else:
                candidates = [Edge(at(lo), at(hi), v, weight)]
            for e in candidates:
                old = edges.get(e.key())
                if old is None or old.weight < e.weight:
                    edges[e.key()] = e
    vertices = set()
    for e in edges.values():
        vertices.add(e.start)
        if e.end is not None:
            vertices.add(e.end)
    logger.debug(f"Corner locus: {len(vertices)} vertices, {len(edges)} edges")
    return CornerLocus(frozenset(vertices), tuple(sorted(edges.values(), key=lambda e: e.key())))


def curve_locus(curve):
    """Γ⁰ as given by the explicit curve description, in the corner-locus format."""
    L, g = curve.L, curve.genus
    edges = []

    def segment(p, q, weight=1):
        d = (q[0] - p[0], q[1] - p[1])
        scale = math.lcm(d[0].denominator, d[1].denominator)
        v, _ = primitive((d[0] * scale, d[1] * scale))
        return Edge(p, q, v, weight)

    for name, coords in ((GAMMA_PLUS, curve.gamma_plus), (GAMMA_MINUS, curve.gamma_minus)):
        breaks = curve.gamma_breaks(name)
        edges += [segment(coords(a), coords(b)) for a, b in zip(breaks, breaks[1:])]
    for s in curve.levels():
        i = curve.solitons.index(s) + 1
        edges.append(segment(curve.theta(i, 0), curve.theta(i, curve.theta_length(i)), curve.solitons.count(s)))
    origin = (Fraction(0), Fraction(0))
    edges.append(Edge(origin, None, primitive((-L, -2))[0], 1))
    if g == 0:
        # vacuum: the segment O → (L, 1) and three more rays
        corner = (Fraction(L), Fraction(1))
        edges.append(segment(origin, corner))
        edges.append(Edge(origin, None, (0, 1), 1))
        edges.append(Edge(corner, None, (0, 1), 1))
        edges.append(Edge(corner, None, (1, 0), L))
        return CornerLocus(frozenset({origin, corner}), tuple(sorted(edges, key=lambda e: e.key())))
    edges.append(Edge(curve.sigma(2, 0), None, (1, 0), 1))
    edges.append(Edge(curve.sigma(3, 0), None, (0, 1), 1))
    edges.append(Edge(curve.sigma(4, 0), None, (0, 1), 1))
    vertices = {e.start for e in edges} | {e.end for e in edges if e.end is not None}
    return CornerLocus(frozenset(vertices), tuple(sorted(edges, key=lambda e: e.key())))


def compare_loci(found, expected):
    """Edge keys present in only one of the loci, as (missing, extra)."""
    a, b = found.edge_keys(), expected.edge_keys()
    return sorted(b - a, key=str), sorted(a - b, key=str)

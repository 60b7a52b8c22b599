"""
Locating tropical points on Γ.

At junctions the γ⁺/γ⁻ identity comes first; θ identities of equal
solitons are returned as alternates.
"""
import itertools
import logging
from fractions import Fraction

from boxball.curve.model import CurvePointRef, GAMMA_MINUS, GAMMA_PLUS, ORIGIN, SIGMA, THETA
from boxball.errors import DomainError

logger = logging.getLogger("curve")


def _candidates(X, Y, curve):
    L, top = curve.L, Fraction(curve.top)
    if Y < 0:
        if X * 2 == L * Y:
            return [CurvePointRef(SIGMA, 1, -Y / 2)]
        return []
    if Y == 0:
        return [CurvePointRef(ORIGIN, None, Fraction(0))] if X == 0 else []
    out = []
    if Y <= top:
        if X == curve.x_plus(Y):
            out.append(CurvePointRef(GAMMA_PLUS, None, Y))
        if X == curve.x_minus(Y):
            out.append(CurvePointRef(GAMMA_MINUS, None, Y))
        for i, s in enumerate(curve.solitons, start=1):
            if s == Y and curve.A[i - 1] < X < L - curve.A[i - 1]:
                out.append(CurvePointRef(THETA, i, X - curve.A[i - 1]))
        if Y == 1 and X > L - curve.genus:
            out.append(CurvePointRef(SIGMA, 2, X - (L - curve.genus)))
    else:
        if X == curve.A[-1]:
            out.append(CurvePointRef(SIGMA, 3, Y - top))
        if X == L - curve.A[-1]:
            out.append(CurvePointRef(SIGMA, 4, Y - top))
    return out


def _distance(X, Y, curve):
    """Horizontal distance from (X, Y) to the nearest branch at height Y."""
    if Y < 0:
        xs = [Fraction(curve.L) * Y / 2]
    elif Y <= curve.top:
        xs = [curve.x_plus(Y), curve.x_minus(Y)]
    else:
        xs = [Fraction(curve.A[-1]), Fraction(curve.L - curve.A[-1])]
    return min(abs(X - x) for x in xs)


def locate(X, Y, curve):
    """All CurvePointRef identities of (X, Y); the first one is primary."""
    if curve.genus == 0:
        raise DomainError("cannot locate points on a genus-0 curve")
    X, Y = Fraction(X), Fraction(Y)
    out = _candidates(X, Y, curve)
    if not out:
        raise DomainError(f"point ({X}, {Y}) is off the curve (distance {_distance(X, Y, curve)})")
    return out


def _edge_labellings(count, edges):
    """
    Labellings of `count` points by at most `edges` interchangeable edges,
    one per set partition (restricted growth strings). Round-robin comes first.
    """
    first = tuple(n % edges for n in range(count))
    yield first

    def grow(labels, used):
        if len(labels) == count:
            if labels != first:
                yield labels
            return
        for b in range(min(used + 1, edges)):
            yield from grow(labels + (b,), max(used, b + 1))

    yield from grow((), 0)


def _split_shared(points, curve):
    refs = [None] * len(points)
    shared = {}
    for k, p in enumerate(points):
        found = locate(p.X, p.Y, curve)
        thetas = [r for r in found if r.segment == THETA]
        if found[0].segment == THETA and len(thetas) > 1:
            shared.setdefault(p.Y, []).append(k)
        else:
            refs[k] = found[0]
    return refs, shared


def candidate_assignments(points, curve):
    """
    Every CurvePointRef assignment of the divisor points.

    Points on a θ edge shared by equal solitons may sit on any of those
    edges; equal solitons are interchangeable, so assignments are generated
    up to relabelling the edges. The round-robin assignment in increasing X
    comes first.
    """
    base, shared = _split_shared(points, curve)
    groups = []
    for y, indices in shared.items():
        edges = [i for i, s in enumerate(curve.solitons, start=1) if s == y]
        indices.sort(key=lambda k: points[k].X)
        groups.append([
            [(k, edges[b]) for k, b in zip(indices, labels)]
            for labels in _edge_labellings(len(indices), len(edges))
        ])
        logger.debug(f"{len(indices)} point(s) shared over theta edges {edges}")
    for choice in itertools.product(*groups):
        refs = list(base)
        for placement in choice:
            for k, i in placement:
                refs[k] = CurvePointRef(THETA, i, points[k].X - curve.A[i - 1])
        yield refs


def assign_points(points, curve):
    """One CurvePointRef per divisor point: the first candidate assignment."""
    return next(candidate_assignments(points, curve))

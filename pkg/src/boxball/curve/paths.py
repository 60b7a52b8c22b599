"""
Paths on Γ and the intersection pairing.

A path is a list of PathPiece, each running monotonically along one
segment. Two paths pair by summing, over pieces on the same segment, the
signed lattice length of their overlap.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

from boxball.curve.model import GAMMA_MINUS, GAMMA_PLUS, ORIGIN, SIGMA, THETA
from boxball.errors import DomainError


@dataclass(frozen=True)
class PathPiece:
    segment: str
    index: int | None
    start: Fraction
    end: Fraction

    def reversed(self):
        return PathPiece(self.segment, self.index, self.end, self.start)


def unit_length(curve, segment, index):
    """Lattice length of a unit parameter step on the segment."""
    if segment == SIGMA and index == 1:
        return math.gcd(curve.L, 2)
    return 1


def reverse_path(path):
    return [piece.reversed() for piece in reversed(path)]


def _piece_pairing(curve, p1, p2):
    if (p1.segment, p1.index) != (p2.segment, p2.index):
        return Fraction(0)
    d1 = p1.end - p1.start
    d2 = p2.end - p2.start
    if d1 == 0 or d2 == 0:
        return Fraction(0)
    lo = max(min(p1.start, p1.end), min(p2.start, p2.end))
    hi = min(max(p1.start, p1.end), max(p2.start, p2.end))
    if hi <= lo:
        return Fraction(0)
    sign = 1 if (d1 > 0) == (d2 > 0) else -1
    return sign * (hi - lo) * unit_length(curve, p1.segment, p1.index)


def pairing(path1, path2, curve):
    """(γ₁, γ₂) = Σ_{k,l} (γ₁,k, γ₂,l)."""
    return sum((_piece_pairing(curve, a, b) for a in path1 for b in path2), Fraction(0))


def cycle_path(curve, i):
    """β_i: up γ⁺ to S_i, across θ_i, back down γ⁻ to O."""
    s = Fraction(curve.solitons[i - 1])
    return [
        PathPiece(GAMMA_PLUS, None, Fraction(0), s),
        PathPiece(THETA, i, Fraction(0), Fraction(curve.theta_length(i))),
        PathPiece(GAMMA_MINUS, None, s, Fraction(0)),
    ]


def canonical_path(ref, curve, strict=False):
    """
    Path from O to the point inside Γ minus the branch-cut points Q_i.

    θ_i(s) is reached through γ⁺ when s ≤ L/2 − A_i and through γ⁻ beyond;
    Q_i itself lies on the γ⁺ side unless `strict` is set.
    """
    t = Fraction(ref.t)
    zero = Fraction(0)
    if ref.segment == ORIGIN:
        return []
    if ref.segment in (GAMMA_PLUS, GAMMA_MINUS):
        return [PathPiece(ref.segment, None, zero, t)]
    if ref.segment == THETA:
        i = ref.index
        s = Fraction(curve.solitons[i - 1])
        cut = Fraction(curve.L, 2) - curve.A[i - 1]
        if strict and t == cut:
            raise DomainError(f"{ref} is on branch cut Q_{i}")
        if t <= cut:
            return [PathPiece(GAMMA_PLUS, None, zero, s), PathPiece(THETA, i, zero, t)]
        length = Fraction(curve.theta_length(i))
        return [PathPiece(GAMMA_MINUS, None, zero, s), PathPiece(THETA, i, length, t)]
    if ref.segment == SIGMA:
        top = Fraction(curve.top)
        ray = PathPiece(SIGMA, ref.index, zero, t)
        attach = {
            1: [],
            2: [PathPiece(GAMMA_MINUS, None, zero, Fraction(1))],
            3: [PathPiece(GAMMA_PLUS, None, zero, top)],
            4: [PathPiece(GAMMA_MINUS, None, zero, top)],
        }[ref.index]
        return attach + [ray]
    raise DomainError(f"unknown segment {ref.segment}")

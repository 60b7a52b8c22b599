"""
The tropical spectral curve of a periodic box-ball state.

Given soliton lengths S_1 ≤ … ≤ S_g and system size L the curve is explicit:
with A_i = Σ_k min(S_i, S_k),

    γ⁺(t) = (Σ_i min(S_i, t), t)                       0 ≤ t ≤ S_g
    γ⁻(t) = (min((L − g)t, L − Σ_i min(S_i, t)), t)    0 ≤ t ≤ S_g
    θ_i(s) = (s + A_i, S_i)                            0 < s < L − 2A_i

plus four rays σ₁ … σ₄. Γ keeps one θ edge per soliton; Γ⁰ merges the θ
edges of equal solitons.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from boxball.errors import DomainError

logger = logging.getLogger("curve")

GAMMA_PLUS = "gamma+"
GAMMA_MINUS = "gamma-"
THETA = "theta"
SIGMA = "sigma"
ORIGIN = "O"


@dataclass(frozen=True)
class CurvePointRef:
    """A point of Γ: segment name, index (θ/σ only, 1-based) and parameter t."""

    segment: str
    index: int | None
    t: Fraction

    def __str__(self):
        name = self.segment if self.index is None else f"{self.segment}_{self.index}"
        return f"{name}({self.t})"


@dataclass(frozen=True)
class CurveModel:
    L: int
    solitons: tuple
    A: tuple

    @property
    def genus(self):
        return len(self.solitons)

    @property
    def top(self):
        """S_g, the highest finite vertex level (0 for genus 0)."""
        return self.solitons[-1] if self.solitons else 0

    def x_plus(self, t):
        return sum((min(s, t) for s in self.solitons), Fraction(0))

    def x_minus(self, t):
        return min((self.L - self.genus) * Fraction(t), self.L - self.x_plus(t))

    def gamma_plus(self, t):
        return (self.x_plus(t), Fraction(t))

    def gamma_minus(self, t):
        return (self.x_minus(t), Fraction(t))

    def theta(self, i, s):
        return (Fraction(s) + self.A[i - 1], Fraction(self.solitons[i - 1]))

    def theta_length(self, i):
        return self.L - 2 * self.A[i - 1]

    def half_point(self, i):
        """Q_i = θ_i(L/2 − A_i), the branch-cut point of cycle i."""
        return CurvePointRef(THETA, i, Fraction(self.L, 2) - self.A[i - 1])

    def sigma(self, i, t):
        t = Fraction(t)
        if i == 1:
            return (-self.L * t, -2 * t)
        if i == 2:
            return (t + self.L - self.genus, Fraction(1))
        if i == 3:
            return (Fraction(self.A[-1]), t + self.top)
        if i == 4:
            return (Fraction(self.L - self.A[-1]), t + self.top)
        raise DomainError(f"no ray sigma_{i}")

    def point(self, ref):
        """Coordinates (X, Y) of a CurvePointRef."""
        if ref.segment == ORIGIN:
            return (Fraction(0), Fraction(0))
        if ref.segment == GAMMA_PLUS:
            return self.gamma_plus(ref.t)
        if ref.segment == GAMMA_MINUS:
            return self.gamma_minus(ref.t)
        if ref.segment == THETA:
            return self.theta(ref.index, ref.t)
        return self.sigma(ref.index, ref.t)

    def levels(self):
        """Distinct soliton lengths, increasing."""
        return sorted(set(self.solitons))

    def gamma_breaks(self, segment):
        """Parameters of the vertices along γ⁺ or γ⁻, starting at 0."""
        breaks = {0, *self.solitons}
        if segment == GAMMA_MINUS and self.genus:
            breaks.add(1)
        return sorted(Fraction(b) for b in breaks)

    def graph(self):
        """Finite part of Γ as a networkx MultiGraph; edges carry lattice lengths."""
        g = nx.MultiGraph()
        g.add_node((GAMMA_PLUS, Fraction(0)), xy=(Fraction(0), Fraction(0)))
        for segment, coords in ((GAMMA_PLUS, self.gamma_plus), (GAMMA_MINUS, self.gamma_minus)):
            breaks = self.gamma_breaks(segment)
            nodes = [(GAMMA_PLUS, Fraction(0))] + [(segment, b) for b in breaks[1:]]
            for node, b in zip(nodes[1:], breaks[1:]):
                g.add_node(node, xy=coords(b))
            for (u, b0), (v, b1) in zip(zip(nodes, breaks), zip(nodes[1:], breaks[1:])):
                g.add_edge(u, v, key=(segment, b0), length=b1 - b0)
        for i, s in enumerate(self.solitons, start=1):
            g.add_edge((GAMMA_PLUS, Fraction(s)), (GAMMA_MINUS, Fraction(s)), key=(THETA, i),
                       length=Fraction(self.theta_length(i)))
        return g

    def cycle_rank(self):
        g = self.graph()
        return g.number_of_edges() - g.number_of_nodes() + nx.number_connected_components(g)


def soliton_offsets(solitons):
    """A_i = Σ_k min(S_i, S_k)."""
    return tuple(sum(min(s, t) for t in solitons) for s in solitons)


def build_curve(solitons, L):
    solitons = tuple(sorted(int(s) for s in solitons))
    if L < 1:
        raise DomainError("system size must be positive")
    if any(s < 1 for s in solitons):
        raise DomainError("soliton lengths must be positive")
    A = soliton_offsets(solitons)
    if solitons and L <= 2 * A[-1]:
        raise DomainError(
            f"system size too small for soliton content: L={L} needs L > 2·A_g = {2 * A[-1]}"
        )
    curve = CurveModel(L, solitons, A)
    if solitons:
        rank = curve.cycle_rank()
        if rank != curve.genus:
            raise DomainError(f"internal consistency: cycle rank {rank} differs from genus {curve.genus}")
    logger.debug(f"Curve L={L} S={solitons} A={A}")
    return curve


def primitive(direction):
    """Primitive integer vector along an integer direction and the lattice factor."""
    a, b = (int(x) for x in direction)
    k = math.gcd(a, b)
    return (a // k, b // k), k

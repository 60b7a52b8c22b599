"""
Theta-function solution of the periodic box-ball system and its L → ∞ limit.

    Θ_n^t = Θ(μn + ωt + c₀; B)
    U_n^t = Θ_n^t + Θ_{n+1}^{t+1} − Θ_n^{t+1} − Θ_{n+1}^t

In the limit B = L·E + S and z = (L/2)·e + μn + ωt + c; only the 2^g
vertices r ∈ {0,1}^g survive and Θ becomes the tau function

    T_n^t = min_r [½⟨r, Sr⟩ − ⟨r, μn + ωt + c⟩].
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from boxball.constants import DEFAULT_MAX_GENUS
from boxball.core import dot, exact_cholesky, mat_vec, quad_form, vec_add, vec_scale, vec_sub, vector
from boxball.curve import mu_omega, period_matrix
from boxball.errors import DomainError, VerificationError
from boxball.theta.function import theta

logger = logging.getLogger("theta")


@dataclass(frozen=True)
class ThetaContext:
    B: tuple
    mu: tuple
    omega: tuple
    c0: tuple
    L: int

    @classmethod
    def from_curve(cls, curve, c0):
        if curve.genus == 0:
            return cls((), (), (), (), curve.L)
        mu, omega = mu_omega(curve)
        return cls(period_matrix(curve), mu, omega, vector(c0), curve.L)

    @property
    def genus(self):
        return len(self.mu)

    @cached_property
    def factor(self):
        return exact_cholesky(self.B) if self.B else ((), ())

    @cached_property
    def S(self):
        """S = B − L·E, E the identity."""
        return tuple(tuple(b - self.L * (i == j) for j, b in enumerate(row)) for i, row in enumerate(self.B))

    @cached_property
    def c(self):
        """c = c₀ − (L/2)·e."""
        return tuple(x - Fraction(self.L, 2) for x in self.c0)

    def phase(self, n, t):
        """μn + ωt (no constant)."""
        return vec_add(vec_scale(n, self.mu), vec_scale(t, self.omega))

    def with_c0(self, c0):
        return ThetaContext(self.B, self.mu, self.omega, vector(c0), self.L)


@dataclass(frozen=True)
class LimitContext:
    """Data of the L → ∞ tau function: S, μ, ω and the phase constant c."""

    S: tuple
    mu: tuple
    omega: tuple
    c: tuple

    @classmethod
    def from_theta_context(cls, ctx):
        return cls(ctx.S, ctx.mu, ctx.omega, ctx.c)

    @property
    def genus(self):
        return len(self.mu)

    def phase(self, n, t):
        return vec_add(vec_add(vec_scale(n, self.mu), vec_scale(t, self.omega)), self.c)


def theta_solution(ctx, n, t):
    if ctx.genus == 0:
        return Fraction(0)
    z = vec_add(ctx.phase(n, t), ctx.c0)
    return theta(z, ctx.B, ctx.factor)[0]


def _second_difference(f, n, t):
    return f(n, t) + f(n + 1, t + 1) - f(n, t + 1) - f(n + 1, t)


def u_from_theta(ctx, n, t):
    value = _second_difference(lambda a, b: theta_solution(ctx, a, b), n, t)
    if value not in (0, 1):
        raise VerificationError(f"solution mismatch at n={n}, t={t}: U = {value}", n, t, None, value)
    return int(value)


def _vertex_terms(limit, max_genus):
    if limit.genus > max_genus:
        raise DomainError(f"genus {limit.genus} exceeds the limit tau bound of {max_genus}")
    return [(quad_form(limit.S, r) / 2, r) for r in itertools.product((0, 1), repeat=limit.genus)]


def limit_tau(limit, n, t, max_genus=DEFAULT_MAX_GENUS):
    """T_n^t by exhaustive minimum over r ∈ {0,1}^g."""
    if isinstance(limit, ThetaContext):
        limit = LimitContext.from_theta_context(limit)
    z = limit.phase(n, t)
    return min(base - dot(r, z) for base, r in _vertex_terms(limit, max_genus))


def u_from_tau(limit, n, t, max_genus=DEFAULT_MAX_GENUS):
    value = _second_difference(lambda a, b: limit_tau(limit, a, b, max_genus), n, t)
    if value not in (0, 1):
        raise VerificationError(f"limit solution mismatch at n={n}, t={t}: U = {value}", n, t, None, value)
    return int(value)


def tau_terms(limit):
    """The tau function as affine pieces [(constant, n-coefficient, t-coefficient)] per vertex r."""
    out = []
    for base, r in _vertex_terms(limit, DEFAULT_MAX_GENUS):
        out.append((base - dot(r, limit.c), -dot(r, limit.mu), -dot(r, limit.omega)))
    return out


def format_tau(limit):
    """'min[0, -n+t-5, ...]' in the usual notation."""

    def affine(const, a, b):
        parts = []
        for coeff, name in ((a, "n"), (b, "t")):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            parts.append(f"{sign}{'' if mag == 1 else mag}{name}")
        if const != 0 or not parts:
            parts.append(f"{'-' if const < 0 else '+'}{abs(const)}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    return "min[" + ", ".join(affine(*term) for term in tau_terms(limit)) + "]"


def shift_c0(ctx, r):
    """Replace c₀ by c₀ + B·r."""
    return ctx.with_c0(vec_add(ctx.c0, mat_vec(ctx.B, r)))


def limit_from_sum(curve, aj_sum):
    """Limit data with c = −Σ𝒜₀(P_k); S is independent of the padding."""
    ctx = ThetaContext.from_curve(curve, vec_sub(tuple(Fraction(curve.L, 2) for _ in aj_sum), aj_sum))
    return LimitContext.from_theta_context(ctx)

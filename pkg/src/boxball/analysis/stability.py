"""Vacuum padding: stabilisation of the Abel–Jacobi sum and the limit data."""
from dataclasses import dataclass, field

from boxball.analysis.report import divisor_of
from boxball.automata import append_vacuum, soliton_content
from boxball.core import reduce_mod_lattice, vec_sub
from boxball.curve import build_curve, riemann_constant
from boxball.errors import DomainError, VerificationError
from boxball.spectral import build_matrix
from boxball.theta import LimitContext, ThetaContext, limit_from_sum, u_from_tau, u_from_theta


@dataclass
class StabilityRow:
    M: int
    solitons: tuple
    aj_sum: tuple


@dataclass
class StabilityReport:
    state: object
    rows: list = field(default_factory=list)
    m0: int | None = None
    window: int = 10

    @property
    def stable(self):
        return self.m0 is not None

    @property
    def value(self):
        if not self.stable:
            return None
        return next(r for r in self.rows if r.M == self.m0 + 1).aj_sum

    def verdict(self):
        if self.stable:
            return f"stable for M > {self.m0}"
        return "not yet stable"


def padded_sums(a, state, m_lo, m_hi):
    """
    Yield (M, curve, solitons, Σ𝒜₀) for M = m_lo … m_hi.

    The Lax matrix grows one H factor per step: 𝒳[M+1] = 𝒳[M]·H.
    """
    m = build_matrix(append_vacuum(state, m_lo))
    for M in range(m_lo, m_hi + 1):
        if M > m_lo:
            m = m.times_h()
        padded = append_vacuum(state, M)
        solitons = tuple(soliton_content(padded))
        curve = build_curve(solitons, padded.L)
        if curve.genus == 0:
            yield M, curve, solitons, ()
            continue
        yield M, curve, solitons, divisor_of(a, padded, m, curve)[2]


def stability_scan(a, state, m_lo, m_hi):
    """Σ𝒜₀(P_k[M]) for M in [m_lo, m_hi] and the start of the first constant run of `window` values."""
    report = StabilityReport(state, window=a.stability_window)
    run_start = None
    for M, _, solitons, aj in padded_sums(a, state, m_lo, m_hi):
        row = StabilityRow(M, solitons, aj)
        a.logger.debug(f"M={M}: solitons={list(solitons)} sum={[str(x) for x in aj]}")
        if report.rows and (report.rows[-1].solitons, report.rows[-1].aj_sum) == (solitons, aj):
            if run_start is None:
                run_start = report.rows[-1].M
        else:
            run_start = None
        report.rows.append(row)
        if report.m0 is None and run_start is not None and M - run_start + 1 >= a.stability_window:
            report.m0 = run_start - 1
    a.logger.info(f"Stability of {state}: {report.verdict()}")
    return report


def limit_context(a, state, scan=None):
    """
    Limit tau data of the non-periodic system started from the cells of `state`.

    Pads with vacua until the Abel–Jacobi sum is stable and sets c = −Σ𝒜₀(P_k[M]).
    A stable `scan` of the same state is reused as is.
    """
    if scan is None or not scan.stable:
        scan = stability_scan(a, state, 1, a.max_m)
    if not scan.stable:
        raise DomainError(f"Abel-Jacobi sum of {state} did not stabilise up to M={a.max_m}")
    row = next(r for r in scan.rows if r.M == scan.m0 + 1)
    curve = build_curve(row.solitons, state.L + row.M)
    if curve.genus == 0:
        return LimitContext((), (), (), ()), row.solitons
    return limit_from_sum(curve, row.aj_sum), row.solitons


def _theta_context(curve, aj_sum):
    ctx = ThetaContext.from_curve(curve, tuple(0 for _ in aj_sum))
    if curve.genus == 0:
        return ctx
    c0 = reduce_mod_lattice(vec_sub(riemann_constant(curve), aj_sum), ctx.B, ctx.factor)[0]
    return ctx.with_c0(c0)


def convergence_threshold(a, state, limit, n_window, t_max, m_lo, m_hi):
    """
    Smallest M in [m_lo, m_hi] from which the size-(L+M) theta solution agrees
    with the limit solution on the window; None when it never does.
    """
    threshold = None
    for M, curve, _, aj in padded_sums(a, state, m_lo, m_hi):
        ctx = _theta_context(curve, aj)
        try:
            agree = all(
                u_from_theta(ctx, n, t) == u_from_tau(limit, n, t, a.max_genus)
                for t in range(t_max + 1) for n in n_window
            )
        except VerificationError:
            agree = False
        a.logger.debug(f"M={M}: finite solution {'agrees' if agree else 'differs'}")
        if agree and threshold is None:
            threshold = M
        elif not agree:
            threshold = None
    return threshold

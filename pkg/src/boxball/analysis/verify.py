"""Theta and tau solutions checked cell by cell against the automaton."""
from dataclasses import dataclass

from boxball.automata import BBSState, bbs_trajectory, pbbs_trajectory
from boxball.errors import VerificationError
from boxball.theta import u_from_tau, u_from_theta


@dataclass
class VerifyResult:
    kind: str
    passed: bool
    checked: int
    n: int | None = None
    t: int | None = None
    expected: int | None = None
    actual: int | None = None
    message: str = ""

    def raise_for_failure(self):
        if not self.passed:
            raise VerificationError(self.describe(), self.n, self.t, self.expected, self.actual)

    def describe(self):
        if self.passed:
            return f"{self.kind}: PASS ({self.checked} cells)"
        return (f"{self.kind}: FAIL at n={self.n}, t={self.t}: automaton {self.expected}, "
                f"solution {self.actual}{' (' + self.message + ')' if self.message else ''}")


def _compare(kind, rows, cells, solve, logger):
    checked = 0
    for t, row in enumerate(rows):
        for n in cells(t):
            expected = row.value(n)
            try:
                actual = solve(n, t)
            except VerificationError as e:
                logger.debug(f"{kind}: {e}")
                return VerifyResult(kind, False, checked, n, t, expected, e.actual, str(e))
            if actual != expected:
                return VerifyResult(kind, False, checked, n, t, expected, actual)
            checked += 1
    return VerifyResult(kind, True, checked)


def verify_periodic(a, report, steps):
    """u_from_theta against the periodic trajectory on n ∈ [0, L), t ∈ [0, steps]."""
    state = report.state
    rows = pbbs_trajectory(state, steps)
    ctx = report.context
    result = _compare("periodic", rows, lambda t: range(state.L), lambda n, t: u_from_theta(ctx, n, t), a.logger)
    a.logger.info(result.describe())
    return result


def limit_window(state, solitons, steps):
    """Cells covering every ball of the non-periodic trajectory up to `steps`."""
    top = max(solitons, default=0)
    return range(-state.L, 2 * state.L + (steps + 1) * top)


def verify_limit(a, state, limit, solitons, steps, window=None):
    """u_from_tau against the non-periodic trajectory of the same cells."""
    rows = bbs_trajectory(BBSState(0, tuple(state.cells)), steps)
    window = window or limit_window(state, solitons, steps)
    result = _compare("limit", rows, lambda t: window,
                      lambda n, t: u_from_tau(limit, n, t, a.max_genus), a.logger)
    a.logger.info(result.describe())
    return result

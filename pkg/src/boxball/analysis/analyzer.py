import logging

from boxball.analysis.report import analyze_state
from boxball.analysis.stability import convergence_threshold, limit_context, stability_scan
from boxball.analysis.verify import verify_limit, verify_periodic
from boxball.constants import (
    DEFAULT_DEPTH,
    DEFAULT_MAX_GENUS,
    DEFAULT_MAX_M,
    DEFAULT_STABILITY_WINDOW,
    DEFAULT_STEPS,
)
from boxball.puiseux import NumericSettings


class Analyzer:
    """Pipeline front end: state → curve → divisor → theta data → checks."""

    def __init__(self, depth=DEFAULT_DEPTH, max_genus=DEFAULT_MAX_GENUS, steps=DEFAULT_STEPS,
                 stability_window=DEFAULT_STABILITY_WINDOW, max_m=DEFAULT_MAX_M,
                 precision=None, epsilon_exponent=None):
        self.logger = logging.getLogger('analysis')
        self.depth = depth
        self.max_genus = max_genus
        self.steps = steps
        self.stability_window = stability_window
        self.max_m = max_m
        self.settings = NumericSettings.from_values(precision, epsilon_exponent)

    @classmethod
    def from_config(cls, config):
        return cls(
            depth=config.get('puiseux', 'depth', default=DEFAULT_DEPTH),
            max_genus=config.get('theta', 'max_genus', default=DEFAULT_MAX_GENUS),
            steps=config.get('verify', 'steps', default=DEFAULT_STEPS),
            stability_window=config.get('verify', 'stability_window', default=DEFAULT_STABILITY_WINDOW),
            max_m=config.get('verify', 'max_m', default=DEFAULT_MAX_M),
            precision=config.get('puiseux', 'precision'),
            epsilon_exponent=config.get('puiseux', 'epsilon_exponent'),
        )

    # Spectral data
    def analyze(self, state, c0_override=None):
        return analyze_state(self, state, c0_override)

    # Checks
    def verify_periodic(self, report, steps=None):
        return verify_periodic(self, report, self.steps if steps is None else steps)

    def verify_limit(self, state, steps=None, window=None):
        limit, solitons = self.limit_context(state)
        return verify_limit(self, state, limit, solitons, self.steps if steps is None else steps, window)

    # Padding
    def stability(self, state, m_lo=1, m_hi=None):
        return stability_scan(self, state, m_lo, self.max_m if m_hi is None else m_hi)

    def limit_context(self, state, scan=None):
        return limit_context(self, state, scan)

    def convergence_threshold(self, state, n_window, t_max, m_lo=0, m_hi=None):
        limit, _ = self.limit_context(state)
        return convergence_threshold(self, state, limit, n_window, t_max, m_lo, self.max_m if m_hi is None else m_hi)

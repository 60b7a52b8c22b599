"""
Coefficient field helpers.

Coefficients stay exact `Fraction`s for as long as possible and turn into
`mpmath.mpc` once an irrational facet root has been substituted. Floating
comparisons are always made between `mpf` magnitudes.
"""
import logging
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction

import mpmath

from boxball.constants import DEFAULT_PRECISION, DEFAULT_EPSILON_EXPONENT

logger = logging.getLogger("puiseux")


class NumericSettings:
    """Working precision (decimal digits) and relative zero-test epsilon."""

    def __init__(self, precision=DEFAULT_PRECISION, epsilon_exponent=DEFAULT_EPSILON_EXPONENT):
        self.precision = int(precision)
        self.epsilon_exponent = int(epsilon_exponent)
        if self.epsilon_exponent * 2 > self.precision:
            logger.warning(
                f"Zero-test epsilon 1e-{self.epsilon_exponent} is close to the working precision "
                f"({self.precision} digits); cancellations may be misjudged"
            )

    @classmethod
    def from_values(cls, precision=None, epsilon_exponent=None):
        """Defaults for whatever is None."""
        return cls(
            DEFAULT_PRECISION if precision is None else precision,
            DEFAULT_EPSILON_EXPONENT if epsilon_exponent is None else epsilon_exponent,
        )

    @property
    def epsilon(self):
        return mpmath.mpf(10) ** (-self.epsilon_exponent)

    @property
    def cluster_tolerance(self):
        # distinct facet roots closer than this are treated as one repeated root
        return mpmath.mpf(10) ** (-(self.precision // 4))

    def workdps(self):
        return mpmath.workdps(self.precision)

    def __repr__(self):
        return f"NumericSettings(precision={self.precision}, epsilon=1e-{self.epsilon_exponent})"


DEFAULT_SETTINGS = NumericSettings()

_active = ContextVar("boxball_numeric_settings", default=DEFAULT_SETTINGS)


def active():
    """The settings in force for the current call chain."""
    return _active.get()


@contextmanager
def using(settings=None):
    """Run a block under `settings` (None keeps the current ones) at their working precision."""
    settings = settings or active()
    token = _active.set(settings)
    try:
        with settings.workdps():
            yield settings
    finally:
        _active.reset(token)


def is_exact(c):
    return isinstance(c, (int, Fraction))


def to_mp(c):
    if isinstance(c, Fraction):
        return mpmath.mpc(mpmath.mpf(c.numerator) / c.denominator)
    return mpmath.mpc(c)


def add(a, b):
    if is_exact(a) and is_exact(b):
        return Fraction(a) + Fraction(b)
    return to_mp(a) + to_mp(b)


def mul(a, b):
    if is_exact(a) and is_exact(b):
        return Fraction(a) * Fraction(b)
    return to_mp(a) * to_mp(b)


def magnitude(c):
    """|c| as an mpf, whatever the coefficient type."""
    return abs(to_mp(c))


def is_zero(c, scale=None):
    """Exact zero for Fractions, relative epsilon test for floating coefficients."""
    if is_exact(c):
        return c == 0
    scale = mpmath.mpf(1) if scale is None else magnitude(scale)
    if scale == 0:
        scale = mpmath.mpf(1)
    return magnitude(c) <= active().epsilon * scale

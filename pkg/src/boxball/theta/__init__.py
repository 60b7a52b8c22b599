from .function import theta, theta_minimizers, kink_order, kinks_along, theta_zeros_along_cycles, quasi_period_shift
from .context import (
    ThetaContext,
    LimitContext,
    theta_solution,
    u_from_theta,
    limit_tau,
    u_from_tau,
    tau_terms,
    format_tau,
    shift_c0,
    limit_from_sum,
)

__all__ = [
    'theta', 'theta_minimizers', 'kink_order', 'kinks_along', 'theta_zeros_along_cycles', 'quasi_period_shift',
    'ThetaContext', 'LimitContext', 'theta_solution', 'u_from_theta', 'limit_tau', 'u_from_tau', 'tau_terms',
    'format_tau', 'shift_c0', 'limit_from_sum',
]

from .analyzer import Analyzer
from .report import SpectralReport, analyze_state, choose_assignment, divisor_of
from .verify import VerifyResult, verify_periodic, verify_limit, limit_window
from .stability import StabilityReport, StabilityRow, stability_scan, limit_context, convergence_threshold

__all__ = [
    'Analyzer', 'SpectralReport', 'analyze_state', 'choose_assignment', 'divisor_of', 'VerifyResult', 'verify_periodic', 'verify_limit',
    'limit_window', 'StabilityReport', 'StabilityRow', 'stability_scan', 'limit_context', 'convergence_threshold',
]

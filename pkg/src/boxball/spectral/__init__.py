from .polys import SparsePoly
from .lax import LaxMatrix, CharPoly, H, T, build_matrix, char_poly, tropical_matrix, to_puipoly
from .divisor import DivisorPoint, divisor_points, abel_jacobi_sum, compute_c0

__all__ = [
    'SparsePoly', 'LaxMatrix', 'CharPoly', 'H', 'T', 'build_matrix', 'char_poly', 'tropical_matrix',
    'to_puipoly', 'DivisorPoint', 'divisor_points', 'abel_jacobi_sum', 'compute_c0',
]

from .model import CurveModel, CurvePointRef, build_curve, soliton_offsets, GAMMA_PLUS, GAMMA_MINUS, THETA, SIGMA, ORIGIN
from .paths import PathPiece, pairing, cycle_path, canonical_path, reverse_path
from .periods import period_matrix, gram_matrix, abel_jacobi, mu_omega, riemann_constant
from .locate import locate, assign_points, candidate_assignments
from .tropical import Edge, CornerLocus, corner_locus, curve_locus, compare_loci
from .export import curve_document, curve_json, curve_svg, rational

__all__ = [
    'CurveModel', 'CurvePointRef', 'build_curve', 'soliton_offsets', 'GAMMA_PLUS', 'GAMMA_MINUS', 'THETA',
    'SIGMA', 'ORIGIN', 'PathPiece', 'pairing', 'cycle_path', 'canonical_path', 'reverse_path',
    'period_matrix', 'gram_matrix', 'abel_jacobi', 'mu_omega', 'riemann_constant', 'locate',
    'assign_points', 'candidate_assignments', 'Edge', 'CornerLocus', 'corner_locus', 'curve_locus', 'compare_loci',
    'curve_document', 'curve_json', 'curve_svg', 'rational',
]

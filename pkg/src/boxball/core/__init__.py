from .exact import (
    ExtRational,
    INF,
    frac,
    vector,
    matrix,
    dot,
    vec_add,
    vec_sub,
    vec_scale,
    mat_vec,
    quad_form,
    is_symmetric,
    identity,
    min_plus_eval,
    exact_cholesky,
    solve,
    reduce_mod_lattice,
)

__all__ = [
    'ExtRational', 'INF', 'frac', 'vector', 'matrix', 'dot', 'vec_add', 'vec_sub',
    'vec_scale', 'mat_vec', 'quad_form', 'is_symmetric', 'identity', 'min_plus_eval',
    'exact_cholesky', 'solve', 'reduce_mod_lattice',
]

from .series import PuiseuxTrunc
from .poly import PuiPoly, v_p, initial_form, newton_polygon, lower_hull
from .roots import puiseux_roots, val_at_root, facet_roots, RootBranch
from .numbers import NumericSettings, DEFAULT_SETTINGS, using

__all__ = [
    'PuiseuxTrunc', 'PuiPoly', 'v_p', 'initial_form', 'newton_polygon', 'lower_hull',
    'puiseux_roots', 'val_at_root', 'facet_roots', 'RootBranch', 'NumericSettings', 'DEFAULT_SETTINGS', 'using',
]

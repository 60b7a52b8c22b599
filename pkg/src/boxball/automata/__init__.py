from .states import BBSState, PBBSState, parse_cells, render_cells
from .evolution import (
    bbs_step,
    pbbs_step,
    soliton_content,
    append_vacuum,
    bbs_trajectory,
    pbbs_trajectory,
)

__all__ = [
    'BBSState', 'PBBSState', 'parse_cells', 'render_cells', 'bbs_step', 'pbbs_step',
    'soliton_content', 'append_vacuum', 'bbs_trajectory', 'pbbs_trajectory',
]

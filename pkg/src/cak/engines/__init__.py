"""Winner-determination engines.

naive   exhaustive recursion, no memo (the reference oracle)
subset  memo on (alive bitmask, turn)
vc      memo on cover-class keys, moves thinned to representatives
nd      memo on per-module survivor counts
tree    Sprague-Grundy on gray forests, canonical-form memo
"""

from .common import CapacityError, Outcome, SearchStats
from .naive import grundy_naive, solve_naive
from .nd import count_nd_positions, solve_nd
from .subset import count_subset_positions, solve_subset
from .tree import (
    count_ak_subtrees,
    count_nk_subtrees,
    grundy_tree,
    solve_tree,
    tree_component_code,
)
from .vc import count_vc_positions, solve_vc, vc_canonical_key

__all__ = [
    "CapacityError",
    "Outcome",
    "SearchStats",
    "count_ak_subtrees",
    "count_nd_positions",
    "count_nk_subtrees",
    "count_subset_positions",
    "count_vc_positions",
    "grundy_naive",
    "grundy_tree",
    "solve_naive",
    "solve_nd",
    "solve_subset",
    "solve_tree",
    "solve_vc",
    "tree_component_code",
    "vc_canonical_key",
]

"""One labeler per constructive result; every labeler re-verifies its output."""

from .base import ConstructionError, HypothesisError, NotCovered, finish, transport
from .joins import (check_join_condition, clique_plus_empty_weights, join_separation_condition,
                    join_weights, label_bistar, label_clique_plus_empty, label_friendship,
                    label_friendship_join_bistar, label_friendship_join_empty, label_join,
                    label_multipartite)
from .products import (complete_bipartite_weights, complete_lexi_weight, cycle_route,
                       label_biregular_bipartite_lexi, label_blowup, label_complete_lexi,
                       label_cycle_lexi, label_lexi_join_plus_one, label_lexi_lift,
                       label_path_lexi, label_regular_bipartite_lexi,
                       label_2r_regular_3chromatic_lexi, lift_weight, nested_neighborhood_bound,
                       path_lexi_colors, regular_bipartite_weights, three_class_weights)

__all__ = [name for name in dir() if not name.startswith("_")]

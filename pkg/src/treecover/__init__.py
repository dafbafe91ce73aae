"""Partitions and coverings of trees by bounded-degree subtrees."""

from .cliques import CliquePartition, cliques_bound, cliques_partition, turan_partition, two_size_partition
from .cover import ceill, mincover, mincover_complete, mincover_size, rmc, rmc_complete, rmc_cover, rmc_values
from .errors import CapExceededError, InvalidCoverError, ParseError, PreconditionError, TreeCoverError
from .graph import Graph, RootedTree, SubtreeCover, Tree, check_cover, cover_problems
from .graphcover import EdgeColoring, cover_via_cvc, cover_via_spanning, edge_color
from .ilp import IlpSolution, ilp2_min_sum, ilp_min_sum
from .io import cover_from_json, cover_to_json, load, parse_edge_list, parse_json, serialize
from .partition import minpart_partition, minpart_size, minpart_size_residues, minpart_size_sum
from .paths import centroid_set, cover_few_leaves, even_even_count, min_path_cover, min_path_cover_even
from .pathwidth import (
    cover_caterpillar,
    cover_rooted_pw,
    cover_unrooted_pw,
    pathwidth,
    pathwidth_cover_bound,
    peel_path,
    pi_recurrence,
)

__all__ = [
    "CapExceededError", "CliquePartition", "EdgeColoring", "Graph", "IlpSolution",
    "InvalidCoverError", "ParseError", "PreconditionError", "RootedTree", "SubtreeCover",
    "Tree", "TreeCoverError", "ceill", "centroid_set", "check_cover", "cliques_bound",
    "cliques_partition", "cover_caterpillar", "cover_few_leaves", "cover_from_json",
    "cover_problems", "cover_rooted_pw", "cover_to_json", "cover_unrooted_pw",
    "cover_via_cvc", "cover_via_spanning", "edge_color", "even_even_count", "ilp2_min_sum",
    "ilp_min_sum", "load", "min_path_cover", "min_path_cover_even", "mincover",
    "mincover_complete", "mincover_size", "minpart_partition", "minpart_size",
    "minpart_size_residues", "minpart_size_sum", "parse_edge_list", "parse_json",
    "pathwidth", "pathwidth_cover_bound", "peel_path", "pi_recurrence", "rmc",
    "rmc_complete", "rmc_cover", "rmc_values", "serialize", "turan_partition",
    "two_size_partition",
]

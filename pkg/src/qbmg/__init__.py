"""Two-colored quasi-best match graphs: construction, recognition, forbidden
induced subgraphs, K⊕S decompositions and small-case enumeration."""

from .enumeration import enumerate_2qbmgs, is_un2qbmg, verify_paper_claims
from .forbidden import find_induced_cycle, find_induced_path, find_sunlet4, forbidden_report
from .graph import (
    COLOR_PRESERVING,
    COLOR_SWAP,
    ColoredDigraph,
    UndirectedGraph,
    are_isomorphic,
    equivalence_classes,
    induced_subdigraph,
    induced_subgraph,
    underlying,
)
from .orientation import (
    consistent_orientation,
    dominating_biclique_pipeline,
    is_acyclic,
    ks_decomposition,
    symmetric_pairs,
)
from .recognition import is_2qbmg, is_color_sink_free
from .tree import PhyloTree, TruncationMap, build_bmg, build_qbmg, lca

__version__ = "0.1.0"

"""Graph isomorphism testing toolkit.

The primary test builds, for every vertex, an exact-rational signature from
prime-encoded reachability distances in the vertex-deleted graph; the sorted
multiset of signatures is the graph's certificate. Certificates of isomorphic
graphs are always equal (one-sided error), and in practice they separate many
graph families that defeat color refinement. A 1-WL baseline, an exact
small-graph oracle, generators, file formats, and a benchmark harness round
out the package.
"""

from .distances import DistanceMatrix, bfs_distances, distance_matrix
from .formats import (
    GraphFormatWarning,
    ParseError,
    load_graph,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    to_dimacs,
    to_edge_list,
)
from .generators import (
    complete,
    cycle,
    disjoint_union,
    generate,
    paley,
    path,
    random_gnm,
    random_regular,
    rook,
    shrikhande,
    worked_example,
)
from .graphs import Graph, Permutation, permute
from .oracle import exhaustive_corpus, find_isomorphism
from .reachability import (
    Group,
    HopParentIndex,
    TraversalEntry,
    aggregate_hp,
    deleted_neighborhood_bfs,
)
from .refinement import Coloring, WLVerdict, color_refinement, wl_compare
from .signature import (
    Certificate,
    CertificatesEqual,
    NonIsomorphic,
    Verdict,
    avpd,
    certificate,
    hop_prime,
    rsvp_compare,
    signature_element,
    verify_mapping,
    vertex_signature,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CertificatesEqual",
    "Coloring",
    "DistanceMatrix",
    "Graph",
    "GraphFormatWarning",
    "Group",
    "HopParentIndex",
    "NonIsomorphic",
    "ParseError",
    "Permutation",
    "TraversalEntry",
    "Verdict",
    "WLVerdict",
    "aggregate_hp",
    "avpd",
    "bfs_distances",
    "certificate",
    "color_refinement",
    "complete",
    "cycle",
    "deleted_neighborhood_bfs",
    "disjoint_union",
    "distance_matrix",
    "exhaustive_corpus",
    "find_isomorphism",
    "generate",
    "hop_prime",
    "load_graph",
    "paley",
    "parse_dimacs",
    "parse_edge_list",
    "parse_graph",
    "path",
    "permute",
    "random_gnm",
    "random_regular",
    "rook",
    "rsvp_compare",
    "shrikhande",
    "signature_element",
    "to_dimacs",
    "to_edge_list",
    "verify_mapping",
    "vertex_signature",
    "wl_compare",
    "worked_example",
]

"""Independent sets in sparse-dense graphs: partitions, enumeration, and applications."""

from sparsedense.applications import (
    ConflictInstance,
    ConflictSolution,
    WeightedGraph,
    WellCoveredStatus,
    WellCoveredVerdict,
    conflict_free_mst,
    conflict_free_shortest_path,
    is_well_covered,
    parse_conflict_instance,
)
from sparsedense.graph import (
    Graph,
    GraphFormatError,
    complement,
    generate_kl_graph,
    induced_subgraph,
    is_clique,
    is_independent_set,
    parse_dimacs,
    parse_edge_list,
    subdivide_edges,
)
from sparsedense.independent import (
    MisCollection,
    enumerate_maximal_is,
    is_maximal_is,
    max_is,
    solve_max_is,
)
from sparsedense.matching import bipartite_max_is, hopcroft_karp
from sparsedense.partition import (
    NotInClassError,
    SparseDensePartition,
    enumerate_partitions,
    find_partition,
    verify_partition,
)
from sparsedense.recognizers import BIPARTITE, EDGELESS, ClassSpec, kbar_free, parse_spec

__version__ = "0.1.0"

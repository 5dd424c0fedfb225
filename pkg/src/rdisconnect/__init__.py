"""Rainbow disconnection number of graphs: exact computation, extremal
constructions and small-order census of the Erdős–Gallai-type thresholds."""

from .census import CensusTable, eg_formulas, run_census, verify_relations
from .coloring import (
    EdgeColoring,
    OneFactorization,
    chromatic_index_exact,
    is_proper,
    one_factorize_complete_even,
    vizing_color,
)
from .connectivity import (
    connectivity_profile,
    lambda_global,
    lambda_plus,
    local_edge_connectivity,
    local_min_cut,
    mader_lambda_plus_bound,
    sigma_k,
)
from .constructions import ExtremalWitness, PeelResult, extremal_even, min_size_rd, peel_factorable
from .graph import (
    Graph,
    build_graph,
    canonical_code,
    complete_graph,
    cycle_graph,
    enumerate_connected,
    is_connected,
    is_tree,
    path_graph,
    star_graph,
)
from .rainbow import CutCertificate, RdReport, find_rainbow_cut, is_rd_coloring, rd_exact, star_rd_check

__version__ = "0.1.0"

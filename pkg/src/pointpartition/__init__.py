"""Point partition numbers and chi_t-perfection of multigraphs."""

from .degeneracy import Coloring, is_sdt_set, is_strictly_t_degenerate, t_core, validate_coloring
from .exact import (
    InvariantReport,
    SubsetProfile,
    alpha_t,
    chi_t,
    invariant_report,
    lovasz_criterion,
    omega_t,
    perfection_oracle,
)
from .formats import ParseError, parse_graph, serialize_graph
from .graph import (
    GraphError,
    MultiGraph,
    build_graph,
    connected_components,
    cycle,
    complete,
    induced_subgraph,
    random_multigraph,
    s_t,
    t_complement,
    t_complete,
    underlying_simple,
    uniform_inflation,
)
from .perfect_coloring import ImperfectGraphError, color_perfect, max_sdt_set_perfect
from .structural import (
    PerfectionCertificate,
    chi1_perfect,
    chi_t_perfect_structural,
    find_gdt_subgraph,
    find_induced_long_cycle,
    find_odd_antihole,
    find_odd_hole,
    is_clique_acyclic_inflation_of_perfect,
    is_normal,
    validate_certificate,
)

__version__ = "0.1.0"

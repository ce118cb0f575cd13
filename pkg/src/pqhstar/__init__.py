"""Exact h*-polynomials of PQ-type adjacency polytopes of graphs."""

from .closed_forms import (
    f_poly,
    gamma_poly,
    hstar_complete_multipartite,
    hstar_pq_join,
    hstar_wheel,
)
from .ehrhart import (
    RootPolytope,
    contains_in_dilation,
    dimension,
    hstar_via_ehrhart,
    lattice_point_count,
    pq_vertices,
)
from .graphs import (
    BipartiteGraph,
    Graph,
    bipartite_double,
    complete,
    complete_multipartite,
    cycle,
    empty,
    is_connected,
    join,
    neighborhood,
    path,
    tilde,
    wheel,
)
from .interior import (
    hypertrees,
    hypertrees_via_spanning_trees,
    interior_polynomial,
    internal_inactivity,
    is_hypertree,
)
from .matching import (
    has_perfect_matching,
    matching_generating_polynomial,
    perfectly_matchable_sets,
    pms_polynomial,
    pms_polytope_contains,
)
from .poly import IntPolynomial, binomial, narayana_square_poly
from .specs import parse_bipartite, parse_graph

__version__ = "0.1.0"

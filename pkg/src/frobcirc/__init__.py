"""6-valent first-kind Frobenius circulants and Eisenstein-Jacobi graphs.

Construction and classification, optimal gossip/routing/broadcast schedules,
communication metrics, topological covers, and a discrete-time simulator
that validates every generated schedule against the model constraints.
"""

from .circulant import (
    Circulant,
    FrobeniusCirculant,
    bfs_distances,
    canonical_generator,
    distance_closed_form,
    hamilton_decomposition,
    is_complete_rotation,
    new_frobenius,
)
from .covers import CoverMap, ej_cover_expand, frobenius_reduction, quotient_circulant, verify_cover
from .eisenstein import (
    EJGraph,
    EJInt,
    canonicalize,
    circulant_to_ej,
    distance_distribution,
    ej_divmod,
    ej_gcd,
    ej_to_circulant,
    find_witness,
    iso_map,
    verify_arc_transitive,
)
from .numtheory import (
    Classification,
    Factorization,
    classify,
    constructible_orders,
    crt_combine,
    factorize,
    lift_solution,
    solve_frobenius_eq,
    sqrt_mod_prime_power,
)
from .scheduler import (
    BroadcastSchedule,
    DistanceDiagram,
    GossipSchedule,
    Metrics,
    RoutingTable,
    SpanningTree,
    broadcast_schedule,
    broadcast_time,
    build_diagram,
    build_spanning_tree,
    compute_metrics,
    exact_broadcast_achievable,
    forwarding_index,
    gossip_schedule,
    gossip_time,
    type_vector,
    wiener_index,
)
from .simulator import SimReport, greedy_gossip_baseline, run_broadcast, run_gossip, run_gossip_relative

__version__ = "0.1.0"

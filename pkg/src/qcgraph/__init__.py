"""Exact combinatorics of admissible edge weights on unitrivalent graphs:
the level-k fusion condition, the homology flip action, twisted cohomology
with circle coefficients, external-edge cocycles, and the induced monomial
representations with their cut-and-glue functoriality.
"""

from .circle import CircleValue, MINUS_ONE, ONE
from .cohomology import (
    CocycleTable,
    CohomologyInvariant,
    brute_force_class_count,
    cobounding_chain,
    coboundary_of,
    cocycle_from_characters,
    cohomology_group_order,
    cohomology_invariant,
    is_coboundary,
    is_twisted_cocycle,
)
from .external import (
    check_parity_identity,
    construct_external_cocycle,
    external_target,
    satisfies_external_condition,
    standard_gamma_n_cocycle,
)
from .factorize import (
    Decomposition,
    decompose_weights,
    equivalent_under_factorization,
    make_decomposition,
    restrict_cocycle,
    verify_characterization,
    verify_functoriality,
)
from .graph import (
    Graph,
    cut_edges,
    isolate_cycle,
    parse_graph,
    recognize_gamma_n,
    validate_graph,
)
from .represent import MonomialMatrix, character, rep_matrix, reps_isomorphic, verify_intertwiner
from .weights import Orbit, act, check_admissible, enumerate_admissible, orbits

__all__ = [name for name in dir() if not name.startswith("_")]

"""k-majority tournaments, the triangular-lattice construction and exact acyclic-set solving."""

from .bounds import (
    BoundReport,
    ESWitness,
    cited_lower_bound,
    erdos_szekeres_witness,
    f3_upper_bound,
    longest_consistent,
    longest_neutral,
    r_for_n,
    verify_construction,
)
from .core import (
    LinearOrder,
    MajorityDigraph,
    Profile,
    before,
    build_majority_digraph,
    is_tournament,
    transitive_tournament,
)
from .errors import CapacityError, ContractError, InputError, NotATournamentError
from .solver import (
    SolveResult,
    brute_force_max_acyclic,
    find_directed_triangle,
    is_acyclic,
    max_acyclic_set,
)
from .triangle import (
    TriangleConstruction,
    TriPoint,
    build_compass_digraph,
    build_triangle_tournament,
    compass_edge,
    enumerate_points,
    lex_orders,
)

__version__ = "0.1.0"

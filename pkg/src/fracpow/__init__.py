"""Fractional powers of graphs and colourings of ``G^{k/k}``."""

__version__ = "0.1.0"

from .colouring import (
    BranchColouring,
    ColouringConfig,
    ConflictReport,
    ListFamily,
    Stats,
    colour_inner_k3,
    colour_k3,
    colour_kk,
    detect_conflicts,
    find_good_lists,
    greedy_branch_colouring,
    greedy_total_colouring,
    recolour_conflicts,
    sample_lists,
)
from .estimator import FractionalPowerColouring, FractionalPowerTransformer
from .exceptions import BudgetExceeded, InvalidGraphError, ProofViolation, TooLarge
from .generators import generate
from .graph import (
    Branch,
    FractionalPower,
    Graph,
    Inner,
    Middle,
    distances_from,
    fractional_power,
    power,
    subdivide,
)
from .oracles import (
    branch_clique,
    exact_chromatic,
    exact_dst,
    exact_incidence_number,
    mc_transversal_failure,
    pj_bound,
    verify_colouring,
)
from .star_forest import Digraph, StarForestDecomposition, star_forest_decompose
from .transversal import SetFamily, find_b_transversal, find_transversal, hall_violator

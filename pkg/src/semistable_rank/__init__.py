"""Divisor theory on dual graphs of semistable curves and Chabauty-Coleman bounds."""
from .augmented import (
    OPTIMISTIC,
    PESSIMISTIC,
    AugmentedCurve,
    CliffordCertificate,
    RankBounds,
    SectionOracle,
    canonical_multidegree,
    clifford_certificate,
    enumerate_effective_twists,
    r_ab,
    r_num,
    rank_hierarchy,
    subdivide_loops,
    twist_general_position_profile,
)
from .chabauty import (
    ChabautyInputs,
    ChabautyReport,
    LocalArithmetic,
    chabauty_bound,
    delta,
    delta_property_audit,
    residue_class_bound,
    vp,
)
from .errors import ConsistencyError, HypothesisError, InputError
from .graph import (
    GraphDivisor,
    Multigraph,
    Twist,
    canonical_graph_divisor,
    graph_genus,
    laplacian,
    multidegree_identity_check,
)
from .rank import (
    ReducedDivisor,
    graph_clifford_check,
    graph_divisor_rank,
    graph_rr_defect,
    is_linearly_equivalent,
    q_reduce,
)

__version__ = "0.1.0"

"""Exact stationary distributions of the open partially asymmetric
exclusion process, computed four independent ways: permutation tableau
enumeration, a tableau-shaped matrix product, bicolored Motzkin path
counts, and a brute-force Markov solver, all over exact rational and
polynomial arithmetic so every cross-check is equality, not tolerance."""

from .ansatz import (
    AnsatzKind,
    TruncationError,
    ansatz_eval,
    build,
    check_relations,
    partition_function,
    qint,
    top_row,
)
from .chain import (
    ChainParams,
    ParamError,
    SplitMix64,
    compare_formulations,
    simulate,
    steady_state_exact,
    total_variation,
    transition_matrix,
)
from .motzkin import enumerate_type, genfun_type, mono_step_compare, weight
from .perms import (
    count_2_31,
    crossings,
    descent_convention_report,
    genfun_descent_class,
    genfun_wexc_class,
    q_eulerian,
)
from .poly import Poly, PolyParseError, parse
from .shapes import (
    ComparisonError,
    Diagram,
    boundary_path,
    configurations,
    corners,
    hasse_cover,
    lambda_of_tau,
    phi,
    precedes,
    shapes_of_expanse,
)
from .tableaux import (
    PermutationTableau,
    enumerate_tableaux,
    genfun_by_unrestricted,
    genfun_expanse,
    genfun_shape,
    is_valid,
    stats,
)
from .verify import CHECKS, CheckResult, run_checks

__version__ = "0.1.0"

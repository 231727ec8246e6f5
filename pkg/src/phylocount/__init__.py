"""Exact and asymptotic enumeration of set partitions and phylogenetic trees.

Five counting families share one engine: partitions of an n-set by
class count, the singleton-free variant, rooted semilabeled trees and
phylogenetic trees by leaf count, and phylogenetic trees by internal
vertices.  Exact big-integer triangles, generating-polynomial root
certificates, Harper-style distribution statistics, and saddle-point
asymptotics, each cross-checked against an independent route.
"""

from .asymptotics import (
    RHO,
    AsympEstimate,
    ConvergenceRecord,
    ModeEstimate,
    bell_moser_wyman,
    h1z_numeric_check,
    lambert_r,
    lambert_w_principal,
    log_big,
    mode_Sstar_asymp,
    mode_T_asymp,
    moser_wyman_log_ratio,
    schroeder_log_ratio,
    schroeder_t_asymp,
    stats_convergence,
    stats_S_asymp,
    stats_S_salvy,
    stats_Sstar_asymp,
    stats_Sstar_salvy,
    stats_T_asymp,
)
from .bruteforce import (
    SizeCapError,
    becker_inverse,
    becker_map,
    count_phylo,
    count_phylo_by_leaves,
    count_semilabeled,
    enumerate_partitions,
    iter_phylo_trees,
    iter_semilabeled_trees,
    iter_set_partitions,
)
from .distribution import (
    LLT_TARGET,
    DegenerateVarianceError,
    DistStats,
    LimitReport,
    clt_distance,
    limit_report,
    llt_check,
    row_stats_pgf,
    stats_S_closed,
    stats_Sstar_closed,
    stats_T_closed,
)
from .polynomials import (
    DEFAULT_WIDTH,
    BivariateSeries,
    IntPolynomial,
    InterlaceReport,
    RootCountError,
    RootIntervals,
    TreeRootReport,
    check_newton,
    check_slc,
    functional_equation_residual,
    isolate_real_roots,
    s_star_poly,
    tree_poly,
    verify_interlacing,
    verify_tree_roots,
)
from .triangles import (
    FAMILIES,
    ROW_FAMILIES,
    CacheFormatError,
    bell,
    bell_star,
    bell_star_alternating,
    phylo_F_star,
    schroeder_t,
    semilabeled_F,
    stirling2,
    stirling2_star,
    tree_count_T,
    tree_count_via_partition,
    triangle_row,
)

__version__ = "0.1.0"

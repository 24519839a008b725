"""Exact invariants of Brieskorn links, weighted hypersurface links and
their Sasakian joins."""

from .brieskorn import (
    BrieskornLink,
    SasakiType,
    SeifertData,
    build_link,
    canonical_index,
    is_homology_sphere,
    link_order,
    riemann_hurwitz_order,
    sasaki_type,
    seifert_data,
)
from .exact import gcd_all, lcm_all, solve_primitive_ray
from .join import (
    POINCARE_SUMMARY,
    JoinReport,
    JoinSpec,
    LinkSummary,
    Pi1Descriptor,
    Pi1Kind,
    Ring,
    contact_c1,
    eta_einstein_plan,
    h2_rank,
    join_report,
    join_smooth,
    pi1_descriptor,
    relative_indices,
    ring_prediction,
    sasaki_einstein_plan,
    sphere_summary,
    summarize_brieskorn,
    summarize_hypersurface,
)
from .whlink import (
    MonodromyDivisor,
    WeightedPoly,
    WeightSystem,
    analyze_poly,
    betti_bruteforce_bp,
    betti_from_divisor,
    brieskorn_pham,
    hypersurface_index,
    infer_weights,
    milnor_number,
    monodromy_divisor,
    order_upsilon,
    parse_poly,
    strata,
)
from .search import (
    SearchConfig,
    Series,
    enum_pairwise_coprime,
    gomez_series,
    scan_eta_einstein,
    scan_joins,
    sporadic_fixtures,
)

__version__ = "0.1.0"

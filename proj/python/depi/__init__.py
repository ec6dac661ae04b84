"""Entropy gap bounds for sums of independent integer-valued random variables.

The compiled core exposes finite-support distribution algebra (entropy,
convolution, splitting, spreading), the gap bound functions with their
dense-grid oracles, and the randomized verification suite.
"""

from depi._core import (  # noqa: F401
    BoundValue,
    ConditionalPair,
    GeneratorFamily,
    GeneratorParams,
    Pmf,
    RandomSource,
    SplitResult,
    SuiteConfig,
    SuiteReport,
    TrialReport,
    boundary_construction,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    conditional_entropy,
    convolve,
    entropy,
    find_split_point,
    g_cond,
    g_cond_grid_oracle,
    g_iid,
    g_iid_grid_oracle,
    g_niid,
    g_niid_grid_oracle,
    h2,
    l1_dist,
    l_xy,
    l_xy_grid_oracle,
    linf,
    nonspiky_term,
    pmf_with_entropy,
    random_pmf,
    run_suite,
    sample_entropy_set,
    shift,
    split_at,
    spread,
    __version__,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

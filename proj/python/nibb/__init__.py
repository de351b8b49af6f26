"""Restricted maxima of non-intersecting Brownian bridges.

Exact CDFs as Fredholm-type determinants, Monte Carlo samplers for the
matrix models, and exact rational checks of the matrix identities.
"""

from ._nibb import (
    a_matrix,
    check_identity,
    compare,
    comparison_names,
    det_id_minus,
    f_matrix,
    ks_distance,
    ks_two_sample,
    limit_cdf_hermite,
    limit_cdf_laguerre,
    limit_curve,
    lue_cdf,
    lue_curve,
    m_matrix,
    q_matrix,
    restricted_max_cdf,
    restricted_max_curve,
    s_matrix,
    sample_antige_top,
    sample_restricted_max,
    sample_wishart_top,
    t_matrix,
    verify,
)

__version__ = "0.3.0"

__all__ = [name for name in dir() if not name.startswith("_")]

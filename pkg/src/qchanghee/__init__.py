"""Multivariate q-Euler numbers of Changhee type and their damped q-zeta series.

Closed forms, direct lattice series, generating-function coefficients,
Mellin quadrature and an exact rational oracle, cross-checked against each
other.
"""

from .qcore import (
    ChangheeError,
    DomainError,
    PoleError,
    QParams,
    ToleranceError,
    binomial,
    q_bracket,
    q_power,
)
from .lattice import Evaluation
from .powerseries import (
    TruncatedSeries,
    exp_series,
    gf_barnes_bernoulli,
    gf_changhee_coeffs,
    gf_euler_barnes,
    gf_frobenius_euler,
    series_div,
    series_mul,
)
from .changhee import (
    ChangheeNumber,
    Route,
    changhee_number,
    f_eval,
    h_multiple_closed,
    h_poly_closed,
    h_series_oracle,
    h_series_values,
    h_single_closed,
)
from .zeta import euler_barnes_zeta, zeta_multiple, zeta_neg_int, zeta_single, zeta_values
from .mellin import QuadratureResult, gamma_fn, mellin_zeta_quadrature
from .exactcheck import exact_gf_coeff, exact_h_multiple

__version__ = "0.1.0"

from .expansions import (
    bernoulli,
    laurent_data,
    r_series,
    sigma_series,
    theta_logderiv,
    wp_value,
)
from .identities import KINDS, identity_suite, residual_order, suite_cases, verify_identity
from .numeric import (
    numeric_oracle,
    sigma_numeric,
    theta_derivatives,
    theta_logderiv_numeric,
    theta_numeric,
    wp_numeric,
)
from .objects import LaurentData, ZQSeries

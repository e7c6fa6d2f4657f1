"""Landen sequences and the special functions of quasiconformal theory.

K(r), the Groetzsch modulus mu(r), its inverse and the distortion function
phi_K(r) are computed to near machine precision from a handful of Landen
steps.
"""

from .core import (
    DomainError,
    Modulus,
    complement,
    landen,
    landen_closed_form,
    landen_lower_bound,
    landen_step_down,
    landen_step_up,
    landen_w,
    log_landen_down,
    modulus_key,
)
from .distortion import (
    PhiBoundsReport,
    phi,
    phi_bounds,
    phi_landen,
    phi_lm,
    phi_pyth_residual,
    phi_reference,
    sandwich_upper_radius,
    sharp_upper_radius,
)
from .elliptic import (
    AgmTrace,
    agm,
    agm_product_identity_residual,
    agm_trace,
    ellint_k_agm,
    ellint_k_landen_product,
    log_mean,
)
from .inverse import (
    ApproximantId,
    ErrorTableRow,
    error_table,
    mu_inverse,
    mu_inverse_elementary_bounds,
    mu_inverse_landen,
    mu_inverse_theta,
)
from .modulus import (
    BoundId,
    mu,
    mu_bound,
    mu_bound_inverse,
    mu_landen_bracket,
    mu_landen_identity_residual,
    mu_plus_log,
    mu_plus_log_monotone_check,
)

__all__ = [
    "AgmTrace",
    "ApproximantId",
    "BoundId",
    "DomainError",
    "ErrorTableRow",
    "Modulus",
    "PhiBoundsReport",
    "agm",
    "agm_product_identity_residual",
    "agm_trace",
    "complement",
    "ellint_k_agm",
    "ellint_k_landen_product",
    "error_table",
    "landen",
    "landen_closed_form",
    "landen_lower_bound",
    "landen_step_down",
    "landen_step_up",
    "landen_w",
    "log_landen_down",
    "log_mean",
    "modulus_key",
    "mu",
    "mu_bound",
    "mu_bound_inverse",
    "mu_inverse",
    "mu_inverse_elementary_bounds",
    "mu_inverse_landen",
    "mu_inverse_theta",
    "mu_landen_bracket",
    "mu_landen_identity_residual",
    "mu_plus_log",
    "mu_plus_log_monotone_check",
    "phi",
    "phi_bounds",
    "phi_landen",
    "phi_lm",
    "phi_pyth_residual",
    "phi_reference",
    "sandwich_upper_radius",
    "sharp_upper_radius",
]

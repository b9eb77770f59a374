from .special import (
    LN2,
    LOG2E,
    DomainError,
    chi_cdf,
    chi_sf,
    normal_interval_probability,
    std_normal_cdf,
    std_normal_pdf,
    std_normal_quantile,
)
from .roots import BracketError, bisect_monotone, golden_section_maximize
from .quadrature import (
    DEFAULT_QUADRATURE,
    QuadratureError,
    QuadratureMethod,
    QuadratureSpec,
    discrete_entropy,
    entropy_of_gaussian_mixture,
    equivocation,
    gaussian_entropy,
    mixture_entropies,
)
from .rng import RngStream

__all__ = [
    "LN2",
    "LOG2E",
    "DomainError",
    "chi_cdf",
    "chi_sf",
    "normal_interval_probability",
    "std_normal_cdf",
    "std_normal_pdf",
    "std_normal_quantile",
    "BracketError",
    "bisect_monotone",
    "golden_section_maximize",
    "DEFAULT_QUADRATURE",
    "QuadratureError",
    "QuadratureMethod",
    "QuadratureSpec",
    "discrete_entropy",
    "entropy_of_gaussian_mixture",
    "equivocation",
    "gaussian_entropy",
    "mixture_entropies",
    "RngStream",
]

from relaylab.bounds import bounds_from_informations
from relaylab.models import BoundReport, ToyRelayCode
from relaylab.numerics import (
    DEFAULT_QUADRATURE,
    QuadratureSpec,
    entropy_of_gaussian_mixture,
    gaussian_entropy,
)


def input_bounds(
    code: ToyRelayCode, r0: float, quad: QuadratureSpec = DEFAULT_QUADRATURE
) -> BoundReport:
    """Cut-set and new bound evaluated at the code's own input law.

    Uses I(X;Y) = h(X + W) - h(W) and, through the sufficient statistic
    (Y + Z) / 2, I(X;Y,Z) = h(X + W') - h(W') with W' ~ N(0, N/2).
    """
    symbols, prior = code.symbol_distribution()
    i_y = entropy_of_gaussian_mixture(prior, symbols, code.noise, quad) - gaussian_entropy(
        code.noise
    )
    half = code.noise / 2.0
    i_yz = entropy_of_gaussian_mixture(prior, symbols, half, quad) - gaussian_entropy(half)
    return bounds_from_informations(i_yz, i_y, r0)

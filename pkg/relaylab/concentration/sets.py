"""Gaussian measure and point-to-set distance for the supported set shapes.

Every shape lives in R^n under the law N(0, noise * I_n). Measures of the
sets themselves are closed-form for every shape; measures of their
enlargements are closed-form for half-spaces, balls and slabs in any
dimension and for rectangles on the line.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from relaylab.models import Ball, HalfSpace, Rectangle, SetDescriptor, Slab
from relaylab.numerics import DomainError, chi_cdf, normal_interval_probability, std_normal_cdf


def _projections(direction: list[float] | None, points: NDArray[np.float64]) -> NDArray[np.float64]:
    assert direction is not None
    return points @ np.asarray(direction, dtype=float)


def distance_to_set(descriptor: SetDescriptor, points: ArrayLike) -> NDArray[np.float64]:
    """Euclidean distance from each row of ``points`` to the set (0 inside)."""
    x = np.atleast_2d(np.asarray(points, dtype=float))
    if x.shape[1] != descriptor.dimension:
        raise DomainError(
            f"points have {x.shape[1]} coordinates, set has dimension {descriptor.dimension}"
        )
    match descriptor:
        case HalfSpace():
            return np.maximum(_projections(descriptor.direction, x) - descriptor.offset, 0.0)
        case Ball():
            return np.maximum(np.linalg.norm(x, axis=1) - descriptor.radius, 0.0)
        case Slab():
            p = _projections(descriptor.direction, x)
            return np.maximum.reduce(
                [p - descriptor.upper, descriptor.lower - p, np.zeros_like(p)]
            )
        case Rectangle():
            lo = np.asarray(descriptor.lower, dtype=float)
            hi = np.asarray(descriptor.upper, dtype=float)
            excess = np.maximum(np.maximum(lo - x, x - hi), 0.0)
            return np.linalg.norm(excess, axis=1)


def set_measure(descriptor: SetDescriptor) -> float:
    """Pr(U in A) for U ~ N(0, noise * I_n)."""
    s = descriptor.scale
    match descriptor:
        case HalfSpace():
            return std_normal_cdf(descriptor.offset / s)
        case Ball():
            return chi_cdf(descriptor.radius / s, descriptor.dimension)
        case Slab():
            return float(normal_interval_probability(descriptor.lower / s, descriptor.upper / s))
        case Rectangle():
            lo = np.asarray(descriptor.lower, dtype=float) / s
            hi = np.asarray(descriptor.upper, dtype=float) / s
            return float(np.prod(normal_interval_probability(lo, hi)))


def has_exact_enlargement(descriptor: SetDescriptor) -> bool:
    return not (isinstance(descriptor, Rectangle) and descriptor.dimension > 1)


def exact_enlarged_measure(descriptor: SetDescriptor, rho: float) -> float:
    """Pr(U within distance ``rho`` of A), in closed form.

    Raises:
        DomainError: For a rectangle in two or more dimensions, whose
            enlargement has rounded corners.
    """
    if not rho >= 0.0:
        raise DomainError(f"rho must be nonnegative, got {rho}")
    s = descriptor.scale
    match descriptor:
        case HalfSpace():
            return std_normal_cdf((descriptor.offset + rho) / s)
        case Ball():
            return chi_cdf((descriptor.radius + rho) / s, descriptor.dimension)
        case Slab():
            return float(
                normal_interval_probability(
                    (descriptor.lower - rho) / s, (descriptor.upper + rho) / s
                )
            )
        case Rectangle():
            if not has_exact_enlargement(descriptor):
                raise DomainError(
                    "No closed-form enlargement for a rectangle in "
                    f"{descriptor.dimension} dimensions; use the Monte Carlo path"
                )
            return float(
                normal_interval_probability(
                    (descriptor.lower[0] - rho) / s, (descriptor.upper[0] + rho) / s
                )
            )


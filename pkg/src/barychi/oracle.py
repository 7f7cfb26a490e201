"""Brute-force ground truth on finite spaces.

For X a finite set of weighted points, the weighted barycenter space is
the subcomplex of the full simplex on X whose faces have total vertex
weight <= rho.  Its Euler characteristic comes from counting faces
directly, with no shared code with the engine or series routes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import NonPositiveWeight, TooManyVertices
from .model import ProblemInstance, SpaceKind

# 2^m faces are enumerated outright.
MAX_VERTICES = 22


@dataclass(frozen=True)
class FiniteWeightedSpace:
    """A finite discrete space: one weight per vertex (1 = generic)."""

    vertex_weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.vertex_weights) < 1:
            raise ValueError("need at least one vertex")
        for w in self.vertex_weights:
            if w <= 0:
                raise NonPositiveWeight(f"vertex weight {w} is not strictly positive")

    @property
    def m(self) -> int:
        return len(self.vertex_weights)

    @classmethod
    def of(cls, m: int, singular_weights: tuple[Fraction, ...] = ()) -> "FiniteWeightedSpace":
        """m vertices, the first len(singular_weights) carrying the given
        weights and the rest weight 1."""
        if len(singular_weights) > m:
            raise ValueError("more weights than vertices")
        pad = (Fraction(1),) * (m - len(singular_weights))
        return cls(tuple(Fraction(w) for w in singular_weights) + pad)

    def matching_instance(self, rho: Fraction | int) -> ProblemInstance:
        """The engine-side view of this space: chi_c = m (m compact points),
        singular weights = the non-unit vertex weights."""
        singular = tuple(w for w in self.vertex_weights if w != 1)
        return ProblemInstance(
            chi_c=self.m,
            weights=singular,
            rho=Fraction(rho),
            space_kind=SpaceKind.COMPACT,
        )


def oracle_chi(space: FiniteWeightedSpace, rho: Fraction | int) -> int:
    """Euler characteristic of the weight-bounded subcomplex by direct face
    enumeration: sum over nonempty vertex subsets S with w(S) <= rho of
    (-1)^(|S|+1).

    O(2^m) time and memory; subsets are visited in binary-counter order.
    """
    m = space.m
    if m > MAX_VERTICES:
        raise TooManyVertices(f"m = {m} vertices exceeds the face-enumeration cap {MAX_VERTICES}")
    rho = Fraction(rho)
    weights = space.vertex_weights
    # Subset sums by stripping the lowest set bit: one addition per subset.
    sums: list[Fraction] = [Fraction(0)] * (1 << m)
    chi = 0
    for mask in range(1, 1 << m):
        low = mask & -mask
        total = sums[mask ^ low] + weights[low.bit_length() - 1]
        sums[mask] = total
        if total <= rho:
            chi += 1 if mask.bit_count() % 2 else -1
    return chi


def skeleton_chi(n: int, k: int) -> int:
    """Euler characteristic of the (k-1)-skeleton of the n-simplex by face
    count: sum_{i=0..k-1} (-1)^i C(n+1, i+1).

    For all vertex weights 1 and rho = k this is exactly what
    ``oracle_chi`` counts; for k <= n the complex is a bouquet of C(n, k)
    spheres of dimension k-1.
    """
    if not 1 <= k <= n + 1:
        raise ValueError("need 1 <= k <= n + 1")
    total = 0
    for i in range(k):
        total += (-1) ** i * comb(n + 1, i + 1)
    return total

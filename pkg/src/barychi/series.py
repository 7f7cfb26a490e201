"""Sparse formal series with rational exponents and the Chen-Lin expansion.

The generating series

    g(x) = (1 + x + x^2 + ...)^(r - chi_c) * prod_j (1 - x^{w_j})

is expanded exactly, truncated at a bound, and its coefficient window
(0, rho] read off: chi_c of the weighted barycenter space is minus the
window sum, and the degree d_rho is one plus it.  This is the series
route, independent of the subset-sum formulas in ``engine``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .combinatorics import ext_binomial, floor_rational
from .engine import METHOD_SERIES, ChiResult
from .errors import NonPositiveRho, NonPositiveWeight
from .model import ValidatedInstance


class SparseSeries:
    """Finitely supported sum of c_e * x^e with exponents e >= 0.

    Exponents are exact rationals compared by value (so 1/2 + 1/2 merges
    with the integer exponent 1); zero coefficients are never stored.
    Instances are immutable once built.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Fraction | int, int] | Iterable[tuple[Fraction | int, int]] = ()):
        data: dict[Fraction, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exponent, coeff in items:
            e = Fraction(exponent)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            c = data.get(e, 0) + coeff
            if c:
                data[e] = c
            elif e in data:
                del data[e]
        self._terms = data

    def coefficient(self, exponent: Fraction | int) -> int:
        return self._terms.get(Fraction(exponent), 0)

    def terms(self) -> list[tuple[Fraction, int]]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseSeries):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*x^{e}" for e, c in self.terms()) or "0"
        return f"SparseSeries({body})"


def expand_geometric_power(m: int, bound: Fraction | int) -> SparseSeries:
    """(1 + x + x^2 + ...)^m truncated to integer exponents <= bound.

    Coefficient of x^n is C(m+n-1, n), valid for every integer m; for
    negative m this is the polynomial (1-x)^(-m).
    """
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be >= 0")
    top = floor_rational(bound)
    return SparseSeries(
        (Fraction(n), ext_binomial(m + n - 1, n)) for n in range(top + 1)
    )


def multiply_truncated(a: SparseSeries, b: SparseSeries, bound: Fraction | int) -> SparseSeries:
    """Exact Cauchy product of two series, discarding exponents > bound."""
    bound = Fraction(bound)
    b_terms = b.terms()
    acc: dict[Fraction, int] = {}
    for ea, ca in a.terms():
        if ea > bound:
            break
        for eb, cb in b_terms:
            e = ea + eb
            if e > bound:
                break
            acc[e] = acc.get(e, 0) + ca * cb
    return SparseSeries(acc)


@dataclass(frozen=True)
class SeriesSpec:
    """Input to the series route: chi_c(X), the weights, rho, and an
    optional truncation bound (never below rho; defaults to rho)."""

    chi_c: int
    weights: tuple[Fraction, ...]
    rho: Fraction
    bound: Fraction | None = None

    @property
    def r(self) -> int:
        return len(self.weights)

    @property
    def truncation_bound(self) -> Fraction:
        if self.bound is None or self.bound < self.rho:
            return self.rho
        return self.bound

    @classmethod
    def from_instance(cls, instance: ValidatedInstance, bound: Fraction | None = None) -> "SeriesSpec":
        return cls(instance.chi_c, instance.weights, instance.rho, bound)


def chen_lin_series(spec: SeriesSpec) -> SparseSeries:
    """Expand g(x) truncated at the requested bound.

    The constant term of the product is exactly 1 (asserted).
    """
    if spec.rho <= 0:
        raise NonPositiveRho(f"rho {spec.rho} is not strictly positive")
    for w in spec.weights:
        if w <= 0:
            raise NonPositiveWeight(f"weight {w} is not strictly positive")
    bound = spec.truncation_bound
    g = expand_geometric_power(-spec.chi_c + spec.r, bound)
    for w in spec.weights:
        factor = SparseSeries([(Fraction(0), 1), (Fraction(w), -1)])
        g = multiply_truncated(g, factor, bound)
    assert g.coefficient(0) == 1
    return g


def chi_c_series(spec: SeriesSpec) -> ChiResult:
    """chi_c via the coefficient window of g: minus the sum of coefficients
    at exponents in (0, rho], ties at rho included.

    The breakdown lists the window's (exponent, coefficient) pairs in
    increasing exponent order.  Agrees exactly with the direct method.
    """
    g = chen_lin_series(spec)
    window = tuple((e, c) for e, c in g.terms() if 0 < e <= spec.rho)
    total = sum(c for _, c in window)
    return ChiResult(-total, METHOD_SERIES, window)

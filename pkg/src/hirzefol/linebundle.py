"""Divisor classes on S_delta: intersection form, cones and cohomology counts.

The class group is free on F (a fibre of the ruling) and M, with
F^2 = 0, M^2 = delta, F.M = 1.  A class d1*F + d2*M carries the line bundle
O(d1, d2) whose global sections are the bi-homogeneous polynomials of that
bidegree, so h^0 is a lattice-point count.  h^2 comes from Serre duality
against the canonical class (delta-2, -2), and h^1 is fixed arithmetically by
the Euler characteristic

    chi(d1, d2) = (d1+1)(d2+1) + delta*d2*(d2+1)/2.

These identities are exact on a surface, so no actual cohomology is computed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import BiDegree, monomial_basis


@dataclass(frozen=True)
class DivisorClass:
    """The class d1*F + d2*M on S_delta."""

    delta: int
    d1: int
    d2: int

    def __post_init__(self):
        if self.delta < 0:
            raise ValueError("delta must be non-negative")

    @property
    def bidegree(self) -> BiDegree:
        return BiDegree(self.d1, self.d2)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        _check(self, other)
        return DivisorClass(self.delta, self.d1 + other.d1, self.d2 + other.d2)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        _check(self, other)
        return DivisorClass(self.delta, self.d1 - other.d1, self.d2 - other.d2)


@dataclass(frozen=True)
class CohomDims:
    """Cohomology dimensions of a line bundle; h0 - h1 + h2 equals chi."""

    h0: int
    h1: int
    h2: int

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2


def _check(d: DivisorClass, e: DivisorClass) -> None:
    if d.delta != e.delta:
        raise ValueError(f"delta mismatch: {d.delta} vs {e.delta}")


def intersect(d: DivisorClass, e: DivisorClass) -> int:
    """Intersection number (aF+bM).(cF+dM) = ad + bc + delta*bd."""
    _check(d, e)
    return d.d1 * e.d2 + d.d2 * e.d1 + d.delta * d.d2 * e.d2


def is_effective(d: DivisorClass) -> bool:
    """Effective cone: spanned by F and the negative section M - delta*F."""
    return d.d1 + d.delta * d.d2 >= 0 and d.d2 >= 0


def is_nef(d: DivisorClass) -> bool:
    """Nef cone: spanned by F and M."""
    return d.d1 >= 0 and d.d2 >= 0


def is_ample(d: DivisorClass) -> bool:
    return d.d1 > 0 and d.d2 > 0


def canonical(delta: int) -> DivisorClass:
    """Canonical class of S_delta."""
    return DivisorClass(delta, delta - 2, -2)


def chern_to_bidegree(a: int, b: int, delta: int) -> DivisorClass:
    """Convert a Chern class a*f + b*h (fibre/section basis) to (d1, d2).

    The change of basis is unimodular over the half-integers only; a result
    with fractional d1 is rejected rather than rounded because it cannot be a
    line bundle.
    """
    twice = 2 * a - delta * b
    if twice % 2 != 0:
        raise ValueError(f"Chern class ({a}, {b}) has non-integral bidegree on S_{delta}")
    return DivisorClass(delta, twice // 2, b)


def euler_characteristic(d: DivisorClass) -> int:
    """Riemann-Roch value chi(O(d1,d2)); always an integer."""
    return (d.d1 + 1) * (d.d2 + 1) + d.delta * d.d2 * (d.d2 + 1) // 2


def h0(d: DivisorClass) -> int:
    """Number of monomials of bidegree (d1, d2), i.e. dim of global sections."""
    return len(monomial_basis(d.delta, (d.d1, d.d2)))


def h2(d: DivisorClass) -> int:
    """Serre duality: h2(D) = h0(K - D)."""
    return h0(canonical(d.delta) - d)


def h1(d: DivisorClass) -> int:
    """h1 = h0 + h2 - chi; a negative value would mean an arithmetic bug."""
    value = h0(d) + h2(d) - euler_characteristic(d)
    if value < 0:
        raise ArithmeticError(f"negative h1 for {d}: internal inconsistency")
    return value


def cohomology(d: DivisorClass) -> CohomDims:
    return CohomDims(h0(d), h1(d), h2(d))

"""Characteristic data of complete intersections in complex projective space.

A smooth complete intersection M in CP^{m+r}, cut out by hypersurfaces of
degrees a_1..a_r, has complex dimension m, and its characteristic classes
restrict from the ambient space::

    c(TM)      = (1+h)^{m+r+1} * prod_j (1 + a_j h)^{-1}
    p(TM)      = (1+h^2)^{m+r+1} * prod_j (1 + a_j^2 h^2)^{-1}
    ch(T^C M)  = 2*((m+r+1) cosh(h) - 1 - sum_j cosh(a_j h))
    A-hat(TM)  = ((h/2)/sinh(h/2))^{m+r+1} * prod_j sinh(a_j h/2)/(a_j h/2)

with h the restricted hyperplane class.  Pairing a class against the
fundamental class picks out its h^m coefficient times <h^m, [M]> = a_1...a_r.
That product of degrees cancels the sinh poles exactly, so every computation
below runs on unit power series truncated at order m: with
S(h) = sinh(h/2)/(h/2),

    <A-hat(TM) ch(T^C M), [M]>
        = 2 a_1...a_r * coeff(h^m, S(h)^{-(m+r+1)} * prod_j S(a_j h)
                                   * ((m+r+1) cosh(h) - 1 - sum_j cosh(a_j h))).

Running the same pipeline with polynomial coefficients in a_1..a_r yields the
characteristic number as an exact symmetric polynomial in the degrees.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Literal, Sequence

from .rings import MultiPoly
from .series import (RATIONALS, CoefficientRing, PolynomialRing, PowerSeries,
                     cosh_series, sinhc_half_series)

Chirality = Literal["plus", "minus"]


class CurvatureClass(enum.Enum):
    """Sign of the first Chern class; selects the Einstein-metric regime."""

    FANO = "fano"
    CALABI_YAU = "calabi_yau"
    GENERAL_TYPE = "general_type"


@dataclass(frozen=True)
class CompleteIntersection:
    """Smooth complete intersection of hypersurfaces of the given degrees.

    ``m`` is the complex dimension; with r degrees the variety sits in
    CP^{m+r}.  Degrees are stored sorted ascending: every characteristic
    quantity computed here is symmetric in them.  Degree-1 entries are
    allowed (a hyperplane cut re-embeds the same manifold in lower
    codimension).
    """

    m: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError("complex dimension must be a positive integer")
        degrees = tuple(self.degrees)
        if not degrees:
            raise ValueError("at least one degree is required")
        for a in degrees:
            if not isinstance(a, int) or a < 1:
                raise ValueError("degrees must be positive integers")
        object.__setattr__(self, "degrees", tuple(sorted(degrees)))

    @property
    def codimension(self) -> int:
        return len(self.degrees)

    @property
    def real_dimension(self) -> int:
        return 2 * self.m


def first_chern_coefficient(ci: CompleteIntersection) -> int:
    """k with c_1(TM) = k*h, namely m + r + 1 - (a_1 + ... + a_r)."""
    return ci.m + ci.codimension + 1 - sum(ci.degrees)


def is_spin(ci: CompleteIntersection) -> bool:
    """The second Stiefel-Whitney class is c_1 mod 2, so M is spin iff the
    coefficient of h in c_1 is even."""
    return first_chern_coefficient(ci) % 2 == 0


def curvature_class(ci: CompleteIntersection) -> CurvatureClass:
    k = first_chern_coefficient(ci)
    if k > 0:
        return CurvatureClass.FANO
    if k == 0:
        return CurvatureClass.CALABI_YAU
    return CurvatureClass.GENERAL_TYPE


def _unit_plus_monomial(order: int, power: int, value: int) -> PowerSeries:
    """1 + value*h^power, truncated at the given order."""
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    if power <= order:
        coeffs[power] = coeffs[power] + Fraction(value)
    return PowerSeries(RATIONALS, coeffs)


def chern_class(ci: CompleteIntersection, order: int) -> PowerSeries:
    """Total Chern class c(TM), expanded in powers of h.

    All coefficients are integral rationals.
    """
    series = _unit_plus_monomial(order, 1, 1) ** (ci.m + ci.codimension + 1)
    for a in ci.degrees:
        series = series * _unit_plus_monomial(order, 1, a) ** -1
    return series


def pontryagin_class(ci: CompleteIntersection, order: int) -> PowerSeries:
    """Total Pontryagin class p(TM); only even powers of h occur."""
    series = _unit_plus_monomial(order, 2, 1) ** (ci.m + ci.codimension + 1)
    for a in ci.degrees:
        series = series * _unit_plus_monomial(order, 2, a * a) ** -1
    return series


def _pole_free_a_hat(m: int, scalars: Sequence, ring: CoefficientRing) -> PowerSeries:
    """S(h)^{-(m+r+1)} * prod_j S(a_j h) at order m, S(h) = sinh(h/2)/(h/2).

    Equals a_1...a_r times the A-hat class with its h-poles cancelled; the
    degrees enter only through argument scaling, so they may be rationals or
    polynomial variables.
    """
    s = sinhc_half_series(m, ring)
    series = s ** -(m + len(scalars) + 1)
    for a in scalars:
        series = series * s.scale_arg(a)
    return series


def _half_tangent_character(m: int, scalars: Sequence, ring: CoefficientRing) -> PowerSeries:
    """(m+r+1) cosh(h) - 1 - sum_j cosh(a_j h); ch(T^C M) is twice this."""
    cosh = cosh_series(m, ring)
    series = (m + len(scalars) + 1) * cosh - 1
    for a in scalars:
        series = series - cosh.scale_arg(a)
    return series


def char_number(ci: CompleteIntersection) -> int | Fraction:
    """<A-hat(TM) ch(T^C M), [M]>, by exact coefficient extraction at order m.

    The value is an index (hence an integer) whenever M is spin, and is
    returned as int in that case and whenever it happens to be integral.
    Non-spin inputs can produce genuine non-integers -- CP^2 as a degree-1
    hypersurface gives 5/2 -- which are returned as exact fractions.
    Vanishes for odd m, where the integrand is an even series.
    """
    series = (_pole_free_a_hat(ci.m, ci.degrees, RATIONALS)
              * _half_tangent_character(ci.m, ci.degrees, RATIONALS))
    value = 2 * prod(ci.degrees) * series[ci.m]
    if value.denominator == 1:
        return int(value)
    if is_spin(ci):
        raise ArithmeticError(
            f"characteristic number of spin {ci} came out non-integral ({value}); "
            "this signals a bug in the series engine")
    return value


def char_number_polynomial(m: int, r: int) -> MultiPoly:
    """The characteristic number as an exact polynomial in the degrees a_1..a_r.

    Runs the coefficient extraction with polynomial coefficients and applies
    the 2*a_1...a_r prefactor.  For even m this is symmetric of degree m+1;
    for odd m it is identically zero.
    """
    if m < 1 or r < 1:
        raise ValueError("dimension and codimension must be positive")
    ring = PolynomialRing(r)
    variables = [ring.variable(i) for i in range(r)]
    series = (_pole_free_a_hat(m, variables, ring)
              * _half_tangent_character(m, variables, ring))
    prefactor = MultiPoly.constant(2, r)
    for v in variables:
        prefactor = prefactor * v
    return prefactor * series[m]


def a_hat_genus(ci: CompleteIntersection) -> Fraction:
    """<A-hat(TM), [M]>, exact; an integer on spin manifolds."""
    return prod(ci.degrees) * _pole_free_a_hat(ci.m, ci.degrees, RATIONALS)[ci.m]


def rs_index(ci: CompleteIntersection, chirality: Chirality) -> int:
    """Index of the chiral Rarita-Schwinger operator on M.

    Equals +-(<A-hat(TM) ch(T^C M), [M]> + <A-hat(TM), [M]>) and needs a spin
    structure to be defined.
    """
    if chirality not in ("plus", "minus"):
        raise ValueError("chirality must be 'plus' or 'minus'")
    if not is_spin(ci):
        raise ValueError(f"{ci} admits no spin structure; the index is undefined")
    total = char_number(ci) + a_hat_genus(ci)
    if total.denominator != 1:
        raise ArithmeticError(
            f"index of spin {ci} came out non-integral ({total}); "
            "this signals a bug in the series engine")
    value = int(total)
    return value if chirality == "plus" else -value

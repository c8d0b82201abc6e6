"""Dimension bounds for spaces of Rarita-Schwinger fields.

On a compact Einstein spin manifold of even real dimension n >= 4 the space
of Rarita-Schwinger fields has dimension at least |<A-hat ch(T^C M), [M]>|,
minus the maximal parallel-spinor count N(n) in the Ricci-flat case.
Applied to spin complete intersections with c_1 <= 0 (where Kaehler-Einstein
metrics exist) this turns exact characteristic numbers into explicit bounds;
flat tori supply comparison counts and product constructions for the
remaining dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charclass import (CompleteIntersection, CurvatureClass, char_number,
                        curvature_class, is_spin)
from .rings import binomial


class TheoremInapplicableError(ValueError):
    """The requested manifold is outside the scope of the bound."""


@dataclass(frozen=True)
class RSBoundReport:
    """Lower bounds for Rarita-Schwinger fields, per chirality and total.

    ``charnum`` keeps the raw signed characteristic number; the bounds are
    clamped at zero, a negative dimension bound carrying no information.
    Reports exist only for spin inputs with c_1 <= 0.
    """

    ci: CompleteIntersection
    n: int
    spin: bool
    curvature: CurvatureClass
    charnum: int
    parallel_spinor_deduction: int
    bound_plus: int
    bound_minus: int
    bound_total: int


def max_parallel_spinors(n: int) -> int:
    """Maximal dimension N(n) of the parallel-spinor space on a complete
    simply connected n-manifold without flat factor.

    Realized by products of K3 surfaces and up to three G2-factors:
    2^k for n = 4k or n = 4k+7, 2^{k+1} for n = 4k+14 or n = 4k+21,
    and 0 for all other n.
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    remainder = n % 4
    if remainder == 0:
        return 2 ** (n // 4)
    if remainder == 3 and n >= 7:
        return 2 ** ((n - 7) // 4)
    if remainder == 2 and n >= 14:
        return 2 ** ((n - 14) // 4 + 1)
    if remainder == 1 and n >= 21:
        return 2 ** ((n - 21) // 4 + 1)
    return 0


def torus_rs_dimension(n: int) -> int:
    """Rarita-Schwinger fields on a flat n-torus with parallel spinors.

    For flat metrics all such fields are parallel, so the count is the rank
    of the 3/2-spinor bundle: (n-1) * 2^[n/2].
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    return (n - 1) * 2 ** (n // 2)


def torus_parallel_spinors(k: int) -> int:
    """Parallel spinors on a flat k-torus with its trivial spin structure:
    the full spinor rank 2^[k/2]; 1 for k = 0 (empty factor)."""
    if k < 0:
        raise ValueError("torus dimension must be nonnegative")
    return 2 ** (k // 2)


def rs_lower_bound(ci: CompleteIntersection) -> RSBoundReport:
    """Bound report for a spin complete intersection with c_1 <= 0.

    Requires real dimension 2m >= 4.  Fano inputs are rejected: no Einstein
    metric is guaranteed there, so no bound would be justified.  The
    parallel-spinor deduction N(2m) applies exactly in the Ricci-flat
    (Calabi-Yau) branch; negative-Einstein manifolds carry no parallel
    spinors, so nothing is deducted.
    """
    if not is_spin(ci):
        raise TheoremInapplicableError("no spin structure")
    curvature = curvature_class(ci)
    if curvature is CurvatureClass.FANO:
        raise TheoremInapplicableError(
            "fano: Kaehler-Einstein existence not guaranteed, theorem inapplicable")
    if ci.real_dimension < 4:
        raise TheoremInapplicableError("theorem requires real dimension at least 4")
    charnum = char_number(ci)
    deduction = (max_parallel_spinors(ci.real_dimension)
                 if curvature is CurvatureClass.CALABI_YAU else 0)
    return RSBoundReport(
        ci=ci,
        n=ci.real_dimension,
        spin=True,
        curvature=curvature,
        charnum=charnum,
        parallel_spinor_deduction=deduction,
        bound_plus=max(charnum - deduction, 0),
        bound_minus=max(-charnum - deduction, 0),
        bound_total=max(abs(charnum) - deduction, 0),
    )


def hypersurface_char_number_closed_form(m: int) -> int:
    """Characteristic number of the degree-(m+2) hypersurface in CP^{m+1},
    in closed form: -2*[C(2m+3, m+1) + 1 - (m+2)^2], for even m.

    An independent route to the series pipeline's value; the two must agree.
    """
    _require_even(m)
    return -2 * (binomial(2 * m + 3, m + 1) + 1 - (m + 2) ** 2)


def cy_hypersurface_bound_closed_form(m: int) -> int:
    """Closed-form Rarita-Schwinger bound for the Calabi-Yau hypersurface of
    degree m+2 in CP^{m+1}: 2*[C(2m+3, m+1) + 1 - (m+2)^2] - 2^{m/2}."""
    _require_even(m)
    return -hypersurface_char_number_closed_form(m) - 2 ** (m // 2)


def product_bound(rs_x: int, k: int) -> int:
    """Bound for X x T^k from a bound for X: Rarita-Schwinger fields on X
    tensored with parallel spinors on the flat torus survive."""
    if rs_x < 0:
        raise ValueError("base bound must be nonnegative")
    return rs_x * torus_parallel_spinors(k)


def find_degree_exceeding(m: int, threshold: int) -> int:
    """Smallest even degree a > m+2 whose hypersurface in CP^{m+1} has
    |characteristic number| > threshold.

    Even a gives a spin hypersurface; a > m+2 makes c_1 negative.  Such an a
    always exists because the characteristic number is a degree-(m+1)
    polynomial in a with nonzero leading coefficient.
    """
    _require_even(m)
    if threshold < 1:
        raise ValueError("threshold must be positive")
    a = m + 4
    while abs(char_number(CompleteIntersection(m, (a,)))) <= threshold:
        a += 2
    return a


def exceeds_torus(m: int) -> bool:
    """Whether the Calabi-Yau hypersurface bound beats the flat-torus count
    in the same real dimension 2m.  True for every even m >= 2."""
    _require_even(m)
    return cy_hypersurface_bound_closed_form(m) > torus_rs_dimension(2 * m)


def _require_even(m: int) -> None:
    if m < 2 or m % 2:
        raise ValueError("m must be an even integer >= 2")

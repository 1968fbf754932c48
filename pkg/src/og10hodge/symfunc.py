"""Symmetric, exterior, and Schur functor operations on diamonds.

Cohomology classes of odd degree anticommute, so symmetric and exterior
powers follow the super convention: the generating series

    H(t) = sum_n Sym^n(V) t^n,    E(t) = sum_n Ext^n(V) t^n

factor over the entries of V, with geometric factors (1 - x t)^(-mult)
for even entries of H and binomial factors (1 + x t)^(+mult) for odd
ones, the roles swapping for E.  Here x stands for the single-entry
diamond u^p v^q.  Consequently H(t) * E(-t) = 1, which gives the Newton
style relation between the two families that the tests exercise.

Schur functors for arbitrary shapes come from the Jacobi-Trudi
determinant det(h_{lambda_i - i + j}) expanded by the Leibniz rule over
the diamond ring, with h_k the k-th symmetric power.

Factors are expanded by repeated truncated multiplication, never through
floating point.  The closed binomial expansion lives in the series
module and serves as the independent cross-check.
"""

from __future__ import annotations

from itertools import permutations

from .diamond import DiamondError, NegativeMultiplicity, VirtualDiamond
from .partitions import Partition
from .series import DiamondSeries


class OddClassesUnsupported(DiamondError):
    """Schur functors of general shape need even concentrated input."""


def _geometric_series(p: int, q: int, sign: int, order: int) -> DiamondSeries:
    # 1 / (1 + sign * x t) = sum_j (-sign)^j x^j t^j
    return DiamondSeries(
        [VirtualDiamond({(j * p, j * q): (-sign) ** j}) for j in range(order + 1)]
    )


def _linear_series(p: int, q: int, sign: int, order: int) -> DiamondSeries:
    coeffs = [VirtualDiamond.unit()] + [VirtualDiamond.zero()] * order
    if order >= 1:
        coeffs[1] = VirtualDiamond({(p, q): sign})
    return DiamondSeries(coeffs)


def _factor_series(p, q, sign, exponent, order) -> DiamondSeries:
    """(1 + sign * u^p v^q t)^exponent by repeated truncated multiplication."""
    if exponent >= 0:
        base = _linear_series(p, q, sign, order)
        power = exponent
    else:
        base = _geometric_series(p, q, sign, order)
        power = -exponent
    out = DiamondSeries.one(order)
    for _ in range(power):
        out = out * base
    return out


def _super_series(v: VirtualDiamond, order: int, swap: bool) -> DiamondSeries:
    series = DiamondSeries.one(order)
    for (p, q), mult in v.items():
        even = (p + q) % 2 == 0
        if even != swap:
            series = series * _factor_series(p, q, -1, -mult, order)
        else:
            series = series * _factor_series(p, q, +1, mult, order)
    return series


def h_series(v: VirtualDiamond, order: int) -> DiamondSeries:
    """Generating series of symmetric powers of v, truncated at the order."""
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    return _super_series(v, order, swap=False)


def e_series(v: VirtualDiamond, order: int) -> DiamondSeries:
    """Generating series of exterior powers of v, truncated at the order."""
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    return _super_series(v, order, swap=True)


def _refine(result: VirtualDiamond) -> VirtualDiamond:
    return result.to_hodge() if result.is_nonnegative() else result


def sym_power(v: VirtualDiamond, n: int) -> VirtualDiamond:
    """The n-th symmetric power in the super sense."""
    if n < 0:
        raise ValueError("symmetric power must be nonnegative")
    return _refine(h_series(v, n).coefficient(n))


def ext_power(v: VirtualDiamond, n: int) -> VirtualDiamond:
    """The n-th exterior power in the super sense.

    Vanishes for n > total_dim(v) when v is concentrated in even degrees,
    which falls out of the series being a polynomial of that degree.
    """
    if n < 0:
        raise ValueError("exterior power must be nonnegative")
    return _refine(e_series(v, n).coefficient(n))


def _permutation_sign(perm) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def schur(v: VirtualDiamond, shape) -> VirtualDiamond:
    """Schur functor of the given shape applied to v.

    Input must be a genuine diamond concentrated in even cohomological
    degree; then Jacobi-Trudi expresses the result through symmetric
    powers and the output is again a genuine diamond, which is certified
    before returning.

    >>> from .diamond import make_diamond
    >>> schur(make_diamond([(0, 0, 2)]), Partition((1, 1))).total_dim()
    1
    """
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    if not v.is_nonnegative():
        raise NegativeMultiplicity(
            "Schur functors are only defined for genuine diamonds"
        )
    if any((p + q) % 2 for p, q in v.support()):
        raise OddClassesUnsupported(
            "Schur functors of general shape need even concentrated input"
        )
    rows = shape.length
    if rows == 0:
        return VirtualDiamond.unit().to_hodge()
    max_index = shape.parts[0] + rows - 1
    h = h_series(v, max_index).coefficients()
    acc = VirtualDiamond.zero()
    for perm in permutations(range(rows)):
        term = VirtualDiamond.unit()
        vanished = False
        for i in range(rows):
            k = shape.parts[i] - i + perm[i]
            if k < 0:
                vanished = True
                break
            if k > 0:
                term = term * h[k]
        if vanished:
            continue
        acc = acc + _permutation_sign(perm) * term
    # Nonnegativity of the determinant certifies the Jacobi-Trudi expansion.
    return acc.to_hodge()

"""Truncated power series with diamond coefficients.

This module carries the two closed product formulas used downstream: the
Hilbert scheme series of a surface (Göttsche's formula, refined to Hodge
numbers) and the symmetric product series of an arbitrary diamond.  Both
are finite products of signed binomial factors

    (1 + sign * u^p v^q t^k) ** exponent

expanded exactly over the integers, multiplied out as truncated series in
t whose coefficients are virtual diamonds in u, v.

The factor expansion here goes through generalized binomial coefficients.
The symmetric functions module expands the same factors by repeated
truncated multiplication instead; the two routes are kept independent so
that they can certify each other in the test suite.
"""

from __future__ import annotations

import math

from .diamond import DiamondError, NegativeValue, VirtualDiamond


class NotASurface(DiamondError):
    """Input to the Hilbert scheme series is not supported in [0,2]x[0,2]."""


class DiamondSeries:
    """A polynomial in t, truncated at a fixed order, with diamond coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        for c in coeffs:
            if not isinstance(c, VirtualDiamond):
                raise TypeError(f"coefficients must be diamonds, got {c!r}")
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("series are immutable")

    @classmethod
    def zero(cls, order: int) -> "DiamondSeries":
        return cls([VirtualDiamond.zero()] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "DiamondSeries":
        return cls(
            [VirtualDiamond.unit()] + [VirtualDiamond.zero()] * order
        )

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> VirtualDiamond:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self._coeffs[k]

    def coefficients(self) -> tuple[VirtualDiamond, ...]:
        return self._coeffs

    def __add__(self, other):
        if not isinstance(other, DiamondSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return DiamondSeries(
            [self._coeffs[k] + other._coeffs[k] for k in range(order + 1)]
        )

    def __mul__(self, other):
        """Cauchy product truncated at the smaller of the two orders."""
        if not isinstance(other, DiamondSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = []
        for k in range(order + 1):
            acc = VirtualDiamond.zero()
            for i in range(k + 1):
                a = self._coeffs[i]
                b = other._coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return DiamondSeries(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, DiamondSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"DiamondSeries(order={self.order}, coeffs={list(self._coeffs)!r})"


def generalized_binomial(exponent: int, k: int) -> int:
    """Binomial coefficient C(exponent, k) for any integer exponent.

    For negative upper index this is (-1)^k C(-exponent + k - 1, k), which
    is what the geometric-type expansions need. Exact in all cases.
    """
    if k < 0:
        return 0
    if exponent >= 0:
        return math.comb(exponent, k)
    return (-1) ** k * math.comb(-exponent + k - 1, k)


def binomial_factor_series(
    p: int,
    q: int,
    sign: int,
    exponent: int,
    order: int,
    t_power: int = 1,
) -> DiamondSeries:
    """Expansion of (1 + sign * u^p v^q t^t_power) ** exponent to the order.

    The coefficient of t^(j * t_power) is the single entry
    (j*p, j*q) -> C(exponent, j) * sign^j, exact for either sign of the
    exponent.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    if p < 0 or q < 0:
        raise NegativeValue(f"bidegree ({p}, {q}) has a negative coordinate")
    if t_power < 1:
        raise ValueError(f"t_power must be >= 1, got {t_power}")
    coeffs = [VirtualDiamond.zero()] * (order + 1)
    for j in range(order // t_power + 1):
        c = generalized_binomial(exponent, j) * sign**j
        if c:
            coeffs[j * t_power] = VirtualDiamond({(j * p, j * q): c})
    return DiamondSeries(coeffs)


def _signed_factor(p, q, mult, order, t_power):
    # Even classes commute: (1 - x t^k)^(-mult).  Odd classes anticommute:
    # (1 + x t^k)^(+mult).  Signed mult just flips through the exponent.
    if (p + q) % 2 == 0:
        return binomial_factor_series(p, q, -1, -mult, order, t_power)
    return binomial_factor_series(p, q, +1, mult, order, t_power)


def goettsche(surface: VirtualDiamond, n: int) -> VirtualDiamond:
    """Hodge diamond of the Hilbert scheme of n points on a surface.

    Göttsche's product formula: the generating series over all n is the
    product over k >= 1 and all bidegrees (p, q) of the signed binomial
    factor in u^(p+k-1) v^(q+k-1) t^k attached to h^{p,q} of the surface.
    Factor k only contributes in t-degrees divisible by k, so cutting the
    product at k = n and every factor at t-order n is exact for the t^n
    coefficient.
    """
    if n < 0:
        raise ValueError("number of points must be nonnegative")
    for p, q in surface.support():
        if p > 2 or q > 2:
            raise NotASurface(
                f"entry ({p}, {q}) outside the surface range [0,2]x[0,2]"
            )
    series = DiamondSeries.one(n)
    for k in range(1, n + 1):
        for (p, q), mult in surface.items():
            series = series * _signed_factor(p + k - 1, q + k - 1, mult, n, k)
    result = series.coefficient(n)
    return result.to_hodge() if result.is_nonnegative() else result


def macdonald_sym(x: VirtualDiamond, n: int) -> VirtualDiamond:
    """Diamond of the n-th symmetric product, by the product formula.

    Same signed binomial factors as the Hilbert scheme series but with
    k = 1 only and no bidegree shift.  Agrees with the plethystic
    ``sym_power`` route; the two implementations share no expansion code.
    """
    if n < 0:
        raise ValueError("symmetric power must be nonnegative")
    series = DiamondSeries.one(n)
    for (p, q), mult in x.items():
        series = series * _signed_factor(p, q, mult, n, 1)
    result = series.coefficient(n)
    return result.to_hodge() if result.is_nonnegative() else result

"""Exact arithmetic for integer Hodge diamonds.

A diamond is a finitely supported map (p, q) -> multiplicity on the
nonnegative bidegree lattice.  :class:`HodgeDiamond` keeps every
multiplicity positive and records the Hodge numbers h^{p,q} of a compact
Kähler manifold, graded by cohomological degree d = p + q.
:class:`VirtualDiamond` allows signed multiplicities and models formal
differences of graded Hodge structures, which is what turns
Grothendieck-group cancellations into dictionary arithmetic.

Entries with multiplicity zero are pruned on construction and after every
operation, so structural equality coincides with mathematical equality.
Multiplicities are plain Python integers; there is no overflow to guard
against and no floating point anywhere.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class DiamondError(ValueError):
    """Base class for domain errors raised by diamond operations."""


class DuplicateEntry(DiamondError):
    """The same bidegree (p, q) was supplied twice."""


class NegativeValue(DiamondError):
    """A coordinate, shift, or multiplicity is outside its allowed range."""


class NegativeMultiplicity(DiamondError):
    """A signed diamond showed up where a genuine Hodge diamond is required."""


def _normalize(entries) -> dict[tuple[int, int], int]:
    if isinstance(entries, Mapping):
        items = entries.items()
    else:
        items = entries
    out: dict[tuple[int, int], int] = {}
    for key, mult in items:
        p, q = key
        if not (isinstance(p, int) and isinstance(q, int) and isinstance(mult, int)):
            raise DiamondError(f"entries must be integers, got {(p, q, mult)!r}")
        if p < 0 or q < 0:
            raise NegativeValue(f"bidegree ({p}, {q}) has a negative coordinate")
        if mult == 0:
            continue
        if key in out:
            raise DuplicateEntry(f"bidegree ({p}, {q}) given twice")
        out[(p, q)] = mult
    return out


class VirtualDiamond:
    """A finitely supported map (p, q) -> signed multiplicity.

    Supports the ring structure of the Grothendieck group of graded Hodge
    structures: ``+`` and ``-`` act entrywise, ``*`` is the bigraded tensor
    (Künneth) product, and an integer factor rescales multiplicities.
    Instances are immutable and hashable.

    >>> a = VirtualDiamond({(0, 0): 1, (1, 1): 2})
    >>> (a * a)[(1, 1)]
    4
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int] | Iterable = ()):
        object.__setattr__(self, "_entries", _normalize(entries))

    def __setattr__(self, name, value):
        raise AttributeError("diamonds are immutable")

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def unit(cls):
        """The diamond of a point: a single (0, 0) class."""
        return cls({(0, 0): 1})

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        """Entries in lexicographic (p, q) order."""
        return iter(sorted(self._entries.items()))

    def support(self) -> list[tuple[int, int]]:
        return sorted(self._entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other) -> bool:
        if isinstance(other, VirtualDiamond):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __add__(self, other):
        if not isinstance(other, VirtualDiamond):
            return NotImplemented
        out = dict(self._entries)
        for key, mult in other._entries.items():
            out[key] = out.get(key, 0) + mult
        return VirtualDiamond(out)

    def __sub__(self, other):
        if not isinstance(other, VirtualDiamond):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return VirtualDiamond({key: -mult for key, mult in self._entries.items()})

    def __mul__(self, other):
        """Tensor product with a diamond, or rescaling by an integer.

        The tensor product convolves bidegrees, which is the Künneth rule
        h^{p,q}(X x Y) = sum over p1+p2=p, q1+q2=q of products.
        """
        if isinstance(other, VirtualDiamond):
            out: dict[tuple[int, int], int] = {}
            for (p1, q1), m1 in self._entries.items():
                for (p2, q2), m2 in other._entries.items():
                    key = (p1 + p2, q1 + q2)
                    out[key] = out.get(key, 0) + m1 * m2
            return VirtualDiamond(out)
        if isinstance(other, int):
            return VirtualDiamond(
                {key: other * mult for key, mult in self._entries.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def lshift(self, k: int):
        """Shift every entry from (p, q) to (p + k, q + k).

        This is the combined Tate twist and degree shift that raises
        cohomological degree by 2k while staying on the diagonal, the only
        twist needed for the decompositions implemented here.  Composes
        additively: ``a.lshift(j).lshift(k) == a.lshift(j + k)``.
        """
        if not isinstance(k, int) or k < 0:
            raise NegativeValue(f"shift must be a nonnegative integer, got {k!r}")
        return VirtualDiamond(
            {(p + k, q + k): mult for (p, q), mult in self._entries.items()}
        )

    def betti(self, d: int) -> int:
        """Sum of multiplicities in cohomological degree d."""
        return sum(mult for (p, q), mult in self._entries.items() if p + q == d)

    def betti_numbers(self) -> tuple[int, ...]:
        """All Betti numbers b_0 .. b_max as a tuple (empty for zero)."""
        top = self.max_weight()
        if top < 0:
            return ()
        return tuple(self.betti(d) for d in range(top + 1))

    def max_weight(self) -> int:
        """Largest p + q in the support, or -1 for the zero diamond."""
        return max((p + q for p, q in self._entries), default=-1)

    def euler(self) -> int:
        """Alternating sum of Betti numbers."""
        return sum(
            mult if (p + q) % 2 == 0 else -mult
            for (p, q), mult in self._entries.items()
        )

    def total_dim(self) -> int:
        """Sum of all multiplicities: the dimension when nonnegative."""
        return sum(self._entries.values())

    def is_nonnegative(self) -> bool:
        return all(mult > 0 for mult in self._entries.values())

    def to_hodge(self) -> "HodgeDiamond":
        """Reinterpret as a genuine Hodge diamond.

        Raises NegativeMultiplicity when any entry is negative, which is the
        runtime certificate that a virtual computation produced an actual
        Hodge structure.
        """
        for key, mult in sorted(self._entries.items()):
            if mult < 0:
                raise NegativeMultiplicity(
                    f"entry {key} has multiplicity {mult}, not a Hodge diamond"
                )
        return HodgeDiamond(self._entries)

    def __repr__(self) -> str:
        body = ", ".join(f"({p}, {q}): {m}" for (p, q), m in self.items())
        return f"{type(self).__name__}({{{body}}})"


class HodgeDiamond(VirtualDiamond):
    """A diamond whose multiplicities are all positive.

    Every operation inherited from :class:`VirtualDiamond` still returns a
    virtual diamond; use :meth:`VirtualDiamond.to_hodge` to certify a result
    that is known to be effective.
    """

    __slots__ = ()

    def __init__(self, entries: Mapping[tuple[int, int], int] | Iterable = ()):
        super().__init__(entries)
        for key, mult in self._entries.items():
            if mult < 0:
                raise NegativeMultiplicity(
                    f"entry {key} has multiplicity {mult}, not a Hodge diamond"
                )

    def to_hodge(self) -> "HodgeDiamond":
        return self


def make_diamond(entries: Iterable[tuple[int, int, int]]) -> HodgeDiamond:
    """Build a Hodge diamond from (p, q, mult) triples.

    Every triple must have p, q >= 0 and mult >= 1, and no bidegree may
    repeat.  This is the strict constructor used for tabulated diamonds;
    signed data goes through :class:`VirtualDiamond` directly.
    """
    seen: dict[tuple[int, int], int] = {}
    for p, q, mult in entries:
        if not (isinstance(p, int) and isinstance(q, int) and isinstance(mult, int)):
            raise DiamondError(f"entries must be integers, got {(p, q, mult)!r}")
        if p < 0 or q < 0:
            raise NegativeValue(f"bidegree ({p}, {q}) has a negative coordinate")
        if mult < 1:
            raise NegativeValue(f"multiplicity {mult} at ({p}, {q}) must be >= 1")
        if (p, q) in seen:
            raise DuplicateEntry(f"bidegree ({p}, {q}) given twice")
        seen[(p, q)] = mult
    return HodgeDiamond(seen)

"""Partition combinatorics backing the Schur functor machinery.

Dimensions come from the two classical hook formulas: the hook content
formula for the polynomial GL(n) representation attached to a shape, and
the hook length formula for the number of standard Young tableaux, which
is the multiplicity of that representation in the k-th tensor power.
"""

from __future__ import annotations

import math


class Partition:
    """A weakly decreasing tuple of positive parts.

    >>> Partition((2, 1)).hook_lengths()
    [[3, 1], [1]]
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(x) for x in parts)
        for i, part in enumerate(parts):
            if part < 1:
                raise ValueError(f"parts must be positive, got {part}")
            if i and parts[i - 1] < part:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("partitions are immutable")

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse a comma separated list of parts, e.g. ``"2,2"``."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(tok) for tok in text.split(","))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def cells(self):
        """All cells (i, j), zero-indexed, row i of length parts[i]."""
        return [(i, j) for i, part in enumerate(self.parts) for j in range(part)]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(
            sum(1 for part in self.parts if part > j) for j in range(self.parts[0])
        )

    def hook(self, i: int, j: int) -> int:
        """Hook length of cell (i, j): arm plus leg plus one."""
        arm = self.parts[i] - j - 1
        leg = sum(1 for part in self.parts[i + 1 :] if part > j)
        return arm + leg + 1

    def hook_lengths(self) -> list[list[int]]:
        return [
            [self.hook(i, j) for j in range(part)] for i, part in enumerate(self.parts)
        ]

    def dim_gl(self, n: int) -> int:
        """Dimension of the Schur functor of this shape on an n-dim space.

        Hook content formula: the product over cells of (n + j - i) divided
        by the product of hook lengths.  Zero when the shape has more rows
        than n, which the numerator detects on its own.
        """
        if n < 0:
            raise ValueError("dimension must be nonnegative")
        num = 1
        den = 1
        for i, j in self.cells():
            num *= n + j - i
            den *= self.hook(i, j)
        assert num % den == 0
        return num // den

    def standard_count(self) -> int:
        """Number of standard Young tableaux, by the hook length formula."""
        hooks = math.prod(self.hook(i, j) for i, j in self.cells())
        return math.factorial(self.size) // hooks

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")"


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order.

    >>> [str(p) for p in partitions_of(4)]
    ['(4)', '(3,1)', '(2,2)', '(2,1,1)', '(1,1,1,1)']
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, cap), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return out


def schur_dimension(n: int, shape: Partition) -> int:
    """Hook content dimension of the shape evaluated at n.

    Independent of the diamond machinery on purpose: it serves as the
    cross-check oracle for ``total_dim(schur(V, shape))``.
    """
    if not isinstance(shape, Partition):
        shape = Partition(shape)
    return shape.dim_gl(n)

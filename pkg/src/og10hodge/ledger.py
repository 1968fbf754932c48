"""Formal ledger for Ngô string summands of a Lagrangian fibration.

A string over a support stratum with generic abelian fiber of dimension g
is the packet of 2g + 1 intersection complexes

    IC(Lambda^b L)[-b](-b/2 ...),   b = 0 .. 2g,

recorded here purely numerically: each term keeps the rank C(2g, b) of
the exterior power, its cohomological shift and twist offsets, and the
rank of the auxiliary local system L.  No sheaf theory is performed; the
ledger exists to make the bookkeeping of the decomposition theorem
checkable, including the relative hard Lefschetz symmetry of the ranks
and the small solver that pins down the one undetermined multiplicity
epsilon by comparing two fibrations against observed top degree ranks.

Stratum labels follow the three step chain B > Sigma > Delta of the base:
``"B-Sigma"`` and ``"Sigma-Delta"`` are the open parts, ``"Delta"`` is
closed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .diamond import VirtualDiamond

SUPPORTS = ("B", "Sigma", "Delta")
SYSTEMS = ("trivial", "sign")

B_MINUS_SIGMA = "B-Sigma"
SIGMA_MINUS_DELTA = "Sigma-Delta"
DELTA = "Delta"


class ArityMismatch(ValueError):
    """A string over genus g needs exactly 2g + 1 coefficients."""


class Inconsistent(ValueError):
    """No multiplicity assignment reproduces the observed rank tables."""


@dataclass(frozen=True)
class StringTerm:
    """One exterior power term of a string."""

    support: str
    b_index: int
    lambda_rank: int
    weight: int
    shift: int
    twist: int
    l_rank: int


@dataclass(frozen=True)
class NgoString:
    """The full packet of 2g + 1 terms over one support."""

    support: str
    genus: int
    l_system: str
    offset_shift: int
    offset_twist: int
    terms: tuple[StringTerm, ...]

    def term(self, b: int) -> StringTerm:
        return self.terms[b]


def build_string(
    support: str,
    genus: int,
    l_system: str = "trivial",
    offset_shift: int = 0,
    offset_twist: int = 0,
    l_rank: int = 1,
) -> NgoString:
    """Assemble the string over a support with the given offsets.

    Term b carries rank C(2g, b), weight b, shift b + offset_shift and
    twist offset_twist, for b = 0 .. 2g.
    """
    if support not in SUPPORTS:
        raise ValueError(f"support must be one of {SUPPORTS}, got {support!r}")
    if l_system not in SYSTEMS:
        raise ValueError(f"local system must be one of {SYSTEMS}, got {l_system!r}")
    if genus < 1:
        raise ValueError(f"genus must be positive, got {genus}")
    if l_rank < 1:
        raise ValueError(f"local system rank must be positive, got {l_rank}")
    terms = tuple(
        StringTerm(
            support=support,
            b_index=b,
            lambda_rank=math.comb(2 * genus, b),
            weight=b,
            shift=b + offset_shift,
            twist=offset_twist,
            l_rank=l_rank,
        )
        for b in range(2 * genus + 1)
    )
    return NgoString(support, genus, l_system, offset_shift, offset_twist, terms)


# The four strings entering the two fibrations: the Jacobian fibration has
# genus 5 fibers over the open part, genus 4 over the surface Sigma with a
# trivial and a sign packet, and genus 2 over the discriminant surface
# Delta after the offsets produced by the blowup comparison.
STRING_B = build_string("B", genus=5)
STRING_SIGMA_PLUS = build_string("Sigma", genus=4, offset_shift=-2, offset_twist=-1)
STRING_SIGMA_MINUS = build_string(
    "Sigma", genus=4, l_system="sign", offset_shift=-2, offset_twist=-1
)
STRING_DELTA = build_string("Delta", genus=2, offset_shift=-6, offset_twist=-3)

DECOMPOSITION_STRINGS = (
    STRING_B,
    STRING_SIGMA_PLUS,
    STRING_SIGMA_MINUS,
    STRING_DELTA,
)


def rhl_check(s: NgoString) -> bool:
    """Relative hard Lefschetz symmetry of the stored ranks.

    C(2g, g - k) == C(2g, g + k) for every k, read off the terms rather
    than recomputed from the formula.
    """
    g = s.genus
    return all(
        s.term(g - k).lambda_rank == s.term(g + k).lambda_rank
        for k in range(g + 1)
    )


def string_cohomology_class(
    s: NgoString, coefficients: Sequence[VirtualDiamond]
) -> VirtualDiamond:
    """Total class of the string with the given graded coefficients.

    ``coefficients[b]`` is the diamond of the weight 2b part attached to
    term b, already placed in its own bidegrees; the string then only
    applies its overall twist.  Exactly 2g + 1 coefficients are required.
    """
    expected = 2 * s.genus + 1
    if len(coefficients) != expected:
        raise ArityMismatch(
            f"string over genus {s.genus} needs {expected} coefficients, "
            f"got {len(coefficients)}"
        )
    total = VirtualDiamond.zero()
    for coeff in coefficients:
        total = total + coeff.lshift(-s.offset_twist)
    return total


def weight_slices(d: VirtualDiamond, genus: int) -> list[VirtualDiamond]:
    """Split a diamond into the 2g + 1 even weight pieces of a string.

    Slice b collects the entries of cohomological degree 2b.  The diamond
    must be concentrated in even degrees 0 .. 4g, otherwise the slicing
    cannot feed a genus g string and ArityMismatch is raised.
    """
    slices = [dict() for _ in range(2 * genus + 1)]
    for (p, q), mult in d.items():
        w = p + q
        if w % 2 or w > 4 * genus:
            raise ArityMismatch(
                f"degree {w} entry does not fit a genus {genus} string"
            )
        slices[w // 2][(p, q)] = mult
    return [VirtualDiamond(s) for s in slices]


@dataclass(frozen=True)
class StratumRankTable:
    """Observed (trivial_rank, sign_rank) of the top degree pushforward."""

    b_minus_sigma: tuple[int, int]
    sigma_minus_delta: tuple[int, int]
    delta: tuple[int, int]

    def __post_init__(self):
        for label in ("b_minus_sigma", "sigma_minus_delta", "delta"):
            trivial, sign = getattr(self, label)
            if trivial < 0 or sign < 0:
                raise ValueError(f"ranks must be nonnegative, got {label}")


# Observed decompositions of the degree 10 direct image restricted to each
# stratum, split into trivial and sign isotypic parts.  The blowup
# fibration lives on the resolution whose exceptional locus sits over
# Delta; the companion fibration lives on the second moduli space.
BLOWUP_TOP_RANKS = StratumRankTable(
    b_minus_sigma=(1, 0), sigma_minus_delta=(2, 0), delta=(4, 0)
)
COMPANION_TOP_RANKS = StratumRankTable(
    b_minus_sigma=(1, 0), sigma_minus_delta=(1, 1), delta=(2, 0)
)


@dataclass(frozen=True)
class FibrationAssignment:
    """String multiplicities reproducing one fibration's rank table.

    ``extra_on_delta`` is the multiplicity x of the one possible extra
    summand of the open string supported on Delta in this degree; it is
    shared between the two fibrations because both see the same open
    string.  ``epsilon`` is the derived multiplicity of the Delta string
    beyond what the geometry already forces.
    """

    r_b: int
    r_sigma: int
    r_delta: int
    extra_on_delta: int
    epsilon: int


@dataclass(frozen=True)
class EpsilonSolution:
    """Everything the solver found, paired across the two fibrations."""

    blowup: tuple[FibrationAssignment, ...]
    companion: tuple[FibrationAssignment, ...]
    consistent: tuple[tuple[FibrationAssignment, FibrationAssignment], ...]

    def epsilons(self) -> set[int]:
        return {m.epsilon for m, _ in self.consistent}


def _predicted_table(
    r_b: int, r_sigma: int, r_delta: int, extra: int, sigma_system: str
) -> StratumRankTable:
    # Top degree restriction, stratum by stratum.  The open string is
    # trivial of rank r_b everywhere, plus r_b * extra copies supported on
    # Delta only.  The Sigma string contributes r_sigma to its own isotype
    # away from Delta; the sign system has no invariants over Delta.  The
    # Delta string contributes r_delta to the trivial part on Delta.
    sigma_trivial = r_sigma if sigma_system == "trivial" else 0
    sigma_sign = r_sigma if sigma_system == "sign" else 0
    return StratumRankTable(
        b_minus_sigma=(r_b, 0),
        sigma_minus_delta=(r_b + sigma_trivial, sigma_sign),
        delta=(r_b * (1 + extra) + sigma_trivial + r_delta, 0),
    )


def _fibration_solutions(
    observed: StratumRankTable,
    sigma_system: str,
    delta_is_support: bool,
    max_rank: int,
) -> tuple[FibrationAssignment, ...]:
    delta_floor = 1 if delta_is_support else 0
    found = []
    for extra, r_b, r_sigma, r_delta in product(
        (0, 1),
        range(max_rank + 1),
        range(max_rank + 1),
        range(delta_floor, max_rank + 1),
    ):
        predicted = _predicted_table(r_b, r_sigma, r_delta, extra, sigma_system)
        if predicted == observed:
            found.append(
                FibrationAssignment(
                    r_b=r_b,
                    r_sigma=r_sigma,
                    r_delta=r_delta,
                    extra_on_delta=extra,
                    epsilon=r_delta - delta_floor,
                )
            )
    return tuple(found)


def solve_epsilon(
    blowup: StratumRankTable = BLOWUP_TOP_RANKS,
    companion: StratumRankTable = COMPANION_TOP_RANKS,
    max_rank: int = 8,
) -> EpsilonSolution:
    """Solve for the string multiplicities of both fibrations at once.

    Enumerates multiplicity assignments for each fibration that reproduce
    its observed table, then keeps the pairs that agree on the shared
    unknown x and derive the same epsilon.  The blowup fibration carries
    the Delta string with multiplicity 1 + epsilon, because Delta is a
    support of its exceptional locus, and its Sigma packet is trivial.
    The companion carries the Delta string with multiplicity epsilon and
    the sign Sigma packet.

    Raises Inconsistent when no pair survives.
    """
    blowup_solutions = _fibration_solutions(
        blowup, sigma_system="trivial", delta_is_support=True, max_rank=max_rank
    )
    companion_solutions = _fibration_solutions(
        companion, sigma_system="sign", delta_is_support=False, max_rank=max_rank
    )
    consistent = tuple(
        (b, c)
        for b in blowup_solutions
        for c in companion_solutions
        if b.extra_on_delta == c.extra_on_delta and b.epsilon == c.epsilon
    )
    if not consistent:
        raise Inconsistent(
            "no shared multiplicity assignment reproduces both rank tables"
        )
    return EpsilonSolution(blowup_solutions, companion_solutions, consistent)

"""The OG10 Hodge diamond, assembled from Hilbert schemes of K3 surfaces.

The ten dimensional manifold sits between two Lagrangian fibrations whose
decomposition theorems share all but finitely many summands.  Comparing
the two pushforwards cancels the unknown local systems and leaves the
Grothendieck group identity

    H(OG10) = H(K3^[5]) + (2 H(Sym^2 K3^[2]) - H(K3^[2] x K3^[2]))<-1>
              + H(K3^[2])<-3>

where <-k> is the diagonal shift implemented by ``lshift(k)``.  Every
auxiliary diamond on the right is built twice, through unrelated
formulas, and the two constructions are compared entry by entry before
anything is returned; a mismatch raises :class:`ConsistencyError`.

The same machinery rewrites the answer in closed form: both the OG10
diamond and the K3^[5] diamond are polynomial expressions in Schur
functors of the K3 diamond, reachable from the identity above through
four classical GL(V) product identities (see ``schur_identities``).
"""

from __future__ import annotations

from functools import cache
from typing import NamedTuple

from .diamond import HodgeDiamond, VirtualDiamond, make_diamond
from .partitions import Partition
from .series import goettsche
from .symfunc import schur, sym_power

K3_ENTRIES = ((0, 0, 1), (2, 0, 1), (1, 1, 20), (0, 2, 1), (2, 2, 1))


class ConsistencyError(RuntimeError):
    """Two independent constructions of the same diamond disagreed."""


class SchurIdentities(NamedTuple):
    """Truth of the four GL(V) product identities on the K3 diamond.

    sym2_times_v:   Sym^2 V (x) V     == S_(2,1) V + Sym^3 V
    sym3_times_v:   Sym^3 V (x) V     == S_(3,1) V + Sym^4 V
    sym2_squared:   Sym^2 V (x) Sym^2 V == S_(2,2) V + S_(3,1) V + Sym^4 V
    sym2_of_sym2:   Sym^2 (Sym^2 V)   == S_(2,2) V + Sym^4 V
    """

    sym2_times_v: bool
    sym3_times_v: bool
    sym2_squared: bool
    sym2_of_sym2: bool


def _require_equal(built: VirtualDiamond, check: VirtualDiamond, what: str):
    if built != check:
        raise ConsistencyError(f"two constructions of {what} disagree")


@cache
def k3() -> HodgeDiamond:
    """The Hodge diamond of a K3 surface."""
    return make_diamond(K3_ENTRIES)


@cache
def hilb2() -> HodgeDiamond:
    """Hodge diamond of the Hilbert square of a K3 surface.

    Built as Sym^2 V + V<-1> and checked against the Hilbert scheme
    series.
    """
    v = k3()
    built = sym_power(v, 2) + v.lshift(1)
    _require_equal(built, goettsche(v, 2), "the Hilbert square diamond")
    return built.to_hodge()


@cache
def hilb5() -> HodgeDiamond:
    """Hodge diamond of the Hilbert scheme of 5 points on a K3 surface.

    Built from the boundary stratification of the symmetric power,

        Sym^5 V + (Sym^3 V (x) V)<-1> + 2 (V (x) Sym^2 V)<-2>
        + 2 (V (x) V)<-3> + V<-4>,

    and checked against the Hilbert scheme series.
    """
    v = k3()
    built = (
        sym_power(v, 5)
        + (sym_power(v, 3) * v).lshift(1)
        + 2 * (v * sym_power(v, 2)).lshift(2)
        + 2 * (v * v).lshift(3)
        + v.lshift(4)
    )
    _require_equal(built, goettsche(v, 5), "the five point Hilbert scheme diamond")
    return built.to_hodge()


@cache
def hilb2_squared() -> HodgeDiamond:
    """Diamond of the product of the Hilbert square with itself.

    The Künneth square of ``hilb2`` is compared against expanding
    (Sym^2 V + V<-1>) (x) (Sym^2 V + V<-1>) term by term.
    """
    v = k3()
    s2 = sym_power(v, 2)
    built = s2 * s2 + 2 * (s2 * v).lshift(1) + (v * v).lshift(2)
    _require_equal(built, hilb2() * hilb2(), "the Hilbert square product diamond")
    return built.to_hodge()


@cache
def sym2_hilb2() -> HodgeDiamond:
    """Diamond of the symmetric square of the Hilbert square.

    Sym^2 distributes over the two summands of ``hilb2`` as

        Sym^2(Sym^2 V) + (Sym^2 V (x) V)<-1> + Sym^2(V)<-2>,

    which is compared against applying ``sym_power`` to ``hilb2``
    directly.
    """
    v = k3()
    s2 = sym_power(v, 2)
    built = sym_power(s2, 2) + (s2 * v).lshift(1) + s2.lshift(2)
    _require_equal(built, sym_power(hilb2(), 2), "the symmetric square diamond")
    return built.to_hodge()


@cache
def og10_diamond() -> HodgeDiamond:
    """The Hodge diamond of the OG10 manifold.

    Assembles the Grothendieck group identity from the module docstring.
    The subtraction happens in the virtual ring; the result certifying
    itself nonnegative is part of the computation.
    """
    virtual = (
        hilb5()
        + (2 * sym2_hilb2() - hilb2_squared()).lshift(1)
        + hilb2().lshift(3)
    )
    return virtual.to_hodge()


@cache
def og10_schur_decomposition() -> VirtualDiamond:
    """Closed form of the OG10 diamond in Schur functors of the K3 diamond.

        Sym^5 V + 2 Sym^4 V<-1> + S_(2,2) V<-1> + 2 Sym^3 V<-2>
        + 2 S_(2,1) V<-2> + (V (x) V)<-3> + 3 Sym^2 V<-3> + 2 V<-4>
    """
    v = k3()
    return (
        sym_power(v, 5)
        + 2 * sym_power(v, 4).lshift(1)
        + schur(v, Partition((2, 2))).lshift(1)
        + 2 * sym_power(v, 3).lshift(2)
        + 2 * schur(v, Partition((2, 1))).lshift(2)
        + (v * v).lshift(3)
        + 3 * sym_power(v, 2).lshift(3)
        + 2 * v.lshift(4)
    )


@cache
def hilb5_schur_decomposition() -> VirtualDiamond:
    """Closed form of the K3^[5] diamond in Schur functors of the K3 diamond.

        Sym^5 V + (Sym^3 V (x) V)<-1> + 2 (V (x) Sym^2 V)<-2>
        + 2 (V (x) V)<-3> + V<-4>
    """
    v = k3()
    return (
        sym_power(v, 5)
        + (sym_power(v, 3) * v).lshift(1)
        + 2 * (v * sym_power(v, 2)).lshift(2)
        + 2 * (v * v).lshift(3)
        + v.lshift(4)
    )


def schur_identities() -> SchurIdentities:
    """Check the four product identities used to reach the closed forms."""
    v = k3()
    s2 = sym_power(v, 2)
    s3 = sym_power(v, 3)
    s4 = sym_power(v, 4)
    return SchurIdentities(
        sym2_times_v=(s2 * v == schur(v, Partition((2, 1))) + s3),
        sym3_times_v=(s3 * v == schur(v, Partition((3, 1))) + s4),
        sym2_squared=(
            s2 * s2
            == schur(v, Partition((2, 2))) + schur(v, Partition((3, 1))) + s4
        ),
        sym2_of_sym2=(sym_power(s2, 2) == schur(v, Partition((2, 2))) + s4),
    )

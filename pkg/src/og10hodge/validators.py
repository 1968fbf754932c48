"""Structural checks for Hodge diamonds of compact (hyper-)Kähler manifolds.

Each check reports both sides of the equation it tests, so the command
line can show what was compared instead of a bare boolean.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .diamond import VirtualDiamond


class SalamonCheck(NamedTuple):
    lhs: int
    rhs: int
    ok: bool


def check_hodge_symmetry(d: VirtualDiamond) -> bool:
    """h^{p,q} == h^{q,p} for all (p, q)."""
    return all(d[p, q] == d[q, p] for p, q in d.support())


def check_poincare(d: VirtualDiamond, dim: int) -> bool:
    """Poincaré duality h^{p,q} == h^{dim-p, dim-q} for all (p, q)."""
    for p, q in d.support():
        if p > dim or q > dim:
            return False
        if d[p, q] != d[dim - p, dim - q]:
            return False
    return True


def check_salamon(d: VirtualDiamond, n: int) -> SalamonCheck:
    """Salamon's linear relation for a hyper-Kähler manifold of dimension 2n.

    Both sides of

        2 * sum_{i=1}^{2n} (-1)^i (3 i^2 - n) b_{2n-i} == n b_{2n}

    are evaluated literally over the Betti numbers of the diamond, odd
    degrees included.
    """
    lhs = 2 * sum(
        (-1) ** i * (3 * i * i - n) * d.betti(2 * n - i) for i in range(1, 2 * n + 1)
    )
    rhs = n * d.betti(2 * n)
    return SalamonCheck(lhs, rhs, lhs == rhs)


def check_euler(d: VirtualDiamond, expected: int) -> bool:
    return d.euler() == expected


def validation_report(
    d: VirtualDiamond, dim: int, expected_euler: Optional[int] = None
) -> dict:
    """Run every applicable check and collect a json-friendly report.

    Salamon's relation only applies in even complex dimension and is
    marked not applicable otherwise.  The Euler comparison only runs when
    an expected value is supplied.
    """
    report: dict = {
        "hodge_symmetry": {"ok": check_hodge_symmetry(d)},
        "poincare": {"dim": dim, "ok": check_poincare(d, dim)},
    }
    if dim % 2 == 0:
        salamon = check_salamon(d, dim // 2)
        report["salamon"] = {
            "n": dim // 2,
            "lhs": salamon.lhs,
            "rhs": salamon.rhs,
            "ok": salamon.ok,
        }
    else:
        report["salamon"] = {"applicable": False, "ok": True}
    if expected_euler is not None:
        report["euler"] = {
            "value": d.euler(),
            "expected": expected_euler,
            "ok": check_euler(d, expected_euler),
        }
    report["ok"] = all(section["ok"] for key, section in report.items())
    return report

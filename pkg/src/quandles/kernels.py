"""Backend facade for the two search kernels (quandle-table enumeration and
connector search).

The compiled extension is preferred when it was built; otherwise the
pure-Python twins from ``_kernels_py`` are used.  Both implement the same
contracts and are compared directly by the test suite and the benchmark.
"""

from __future__ import annotations

from math import factorial

from . import _kernels_py

try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

ACTIVE = _compiled if _compiled is not None else _kernels_py
BACKEND = "compiled" if _compiled is not None else "pure"


def available_backends() -> dict[str, object]:
    out: dict[str, object] = {"pure": _kernels_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out


def root_count(n: int) -> int:
    """Number of column-0 choices valid_tables can be split over."""
    return factorial(n - 1)


def valid_tables(n: int, root: int | None = None, impl=None) -> list[bytes]:
    """All valid order-n quandle tables, row-major bytes, deterministic order."""
    return (impl or ACTIVE).valid_tables(n, root)


def connector_domain(
    n: int, rblk: list[int], sblk: list[int]
) -> list[tuple[int, int, int]]:
    """Lexicographic list of triples (x, y, z) with x R y and y S z."""
    return [
        (x, y, z)
        for x in range(n)
        for y in range(n)
        if rblk[x] == rblk[y]
        for z in range(n)
        if sblk[y] == sblk[z]
    ]


def search_connectors(
    table,
    rblk,
    sblk,
    enforce_membership: bool = True,
    enforce_assoc: bool = True,
    limit: int = 1,
    impl=None,
) -> tuple[list[tuple[int, int, int]], list[tuple[int, ...]]]:
    """Run the ternary-table search; returns (domain triples, solutions).

    Solution tuples are aligned with the returned triple list.
    """
    if enforce_assoc and not enforce_membership:
        raise ValueError("associativity propagation requires the membership laws")
    n = len(table)
    table_rows = [list(row) for row in table]
    rblk = list(rblk)
    sblk = list(sblk)
    trips = connector_domain(n, rblk, sblk)
    tripidx = {t: i for i, t in enumerate(trips)}
    solutions = (impl or ACTIVE).search_connectors(
        n, table_rows, rblk, sblk, trips, tripidx,
        bool(enforce_membership), bool(enforce_assoc), int(limit),
    )
    return trips, [tuple(sol) for sol in solutions]

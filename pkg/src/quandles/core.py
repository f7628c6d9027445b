"""Finite quandles as validated operation tables.

A quandle on ``{0, .., n-1}`` is stored as the n x n table of ``a < b``
(written ``op``).  The inverse operation ``a <~ b`` (``op_inv``) is never
user-supplied: each column of the table is a permutation, and the inverse
table is its columnwise inverse.  Axioms enforced by :func:`validate`:

* idempotency        a < a = a
* right invertibility  every column a -> a < b is a bijection
* self-distributivity  (a < b) < c = (a < c) < (b < c)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ColumnNotBijective,
    DiagonalViolation,
    DistributivityViolation,
    NotAGroup,
    SubsetNotClosed,
)

Table = tuple[tuple[int, ...], ...]


def _freeze(raw: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(x) for x in row) for row in raw)


@dataclass(frozen=True)
class FiniteQuandle:
    """Immutable order-n quandle; construct through :func:`validate`."""

    order: int
    table: Table
    inv_table: Table = field(repr=False)

    @cached_property
    def np_table(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    @cached_property
    def np_inv_table(self) -> np.ndarray:
        return np.array(self.inv_table, dtype=np.int64)

    def op(self, a: int, b: int) -> int:
        """a < b."""
        return self.table[a][b]

    def op_inv(self, a: int, b: int) -> int:
        """a <~ b, the unique x with x < b = a."""
        return self.inv_table[a][b]

    def elements(self) -> range:
        return range(self.order)

    def __str__(self) -> str:
        rows = "\n".join(" ".join(str(v) for v in row) for row in self.table)
        return f"quandle {self.order}\n{rows}"


def _distributivity_witness(t: np.ndarray) -> tuple[int, int, int] | None:
    # lhs[a,b,c] = (a<b)<c ; rhs[a,b,c] = (a<c)<(b<c)
    lhs = t[t]
    rhs = t[t[:, None, :], t[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad) == 0:
        return None
    a, b, c = bad[0]
    return int(a), int(b), int(c)


def validate(raw_table: Sequence[Sequence[int]]) -> FiniteQuandle:
    """Check the axioms and return the quandle, deriving the inverse table.

    Raises the error naming the first failing witness: DiagonalViolation,
    ColumnNotBijective, or DistributivityViolation, in that checking order.
    """
    table = _freeze(raw_table)
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise ValueError("table must be square and non-empty")
    for row in table:
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"entry {v} out of range 0..{n - 1}")

    for a in range(n):
        if table[a][a] != a:
            raise DiagonalViolation(a)

    inv_cols = []
    for b in range(n):
        col = [table[a][b] for a in range(n)]
        if sorted(col) != list(range(n)):
            raise ColumnNotBijective(b)
        inv = [0] * n
        for a in range(n):
            inv[col[a]] = a
        inv_cols.append(inv)
    inv_table = tuple(tuple(inv_cols[b][a] for b in range(n)) for a in range(n))

    t = np.array(table, dtype=np.int64)
    bad = _distributivity_witness(t)
    if bad is not None:
        raise DistributivityViolation(*bad)

    return FiniteQuandle(order=n, table=table, inv_table=inv_table)


def is_trivial(q: FiniteQuandle) -> bool:
    """a < b = a everywhere."""
    return all(q.table[a][b] == a for a in q.elements() for b in q.elements())


def is_symmetric(q: FiniteQuandle) -> bool:
    """a < b = b < a everywhere."""
    t = q.np_table
    return bool((t == t.T).all())


def is_abelian(q: FiniteQuandle) -> bool:
    """(a < b) < (c < d) = (a < c) < (b < d) for all quadruples."""
    t = q.np_table
    lhs = t[t[:, :, None, None], t[None, None, :, :]]
    rhs = t[t[:, None, :, None], t[None, :, None, :]]
    return bool((lhs == rhs).all())


def is_abelian_symmetric(q: FiniteQuandle) -> bool:
    return is_symmetric(q) and is_abelian(q)


def maltsev(q: FiniteQuandle, a: int, b: int, c: int) -> int:
    """The ternary term (a < c) <~ b.

    Satisfies p(a,b,b) = a on every quandle and additionally p(a,a,b) = b on
    symmetric quandles, i.e. it is a Mal'tsev operation there.
    """
    return q.inv_table[q.table[a][c]][b]


def maltsev_table(q: FiniteQuandle) -> np.ndarray:
    """n^3 array of maltsev(q, a, b, c) indexed [a, b, c]."""
    t, inv = q.np_table, q.np_inv_table
    n = q.order
    return inv[t[:, None, :], np.arange(n)[None, :, None]]


def maltsev_is_homomorphism(q: FiniteQuandle) -> bool:
    """Whether (a,b,c) -> maltsev(q,a,b,c) preserves < as a map q^3 -> q."""
    n = q.order
    t = q.np_table
    m = maltsev_table(q)
    # componentwise product of two triples, then m, versus m of each then <
    lhs = m[
        t.reshape(n, 1, 1, n, 1, 1),
        t.reshape(1, n, 1, 1, n, 1),
        t.reshape(1, 1, n, 1, 1, n),
    ]
    rhs = t[m.reshape(n, n, n, 1, 1, 1), m.reshape(1, 1, 1, n, n, n)]
    return bool((lhs == rhs).all())


def trivial_quandle(n: int) -> FiniteQuandle:
    """The quandle with a < b = a on n elements."""
    if n < 1:
        raise ValueError("order must be positive")
    return validate([[a] * n for a in range(n)])


def terminal() -> FiniteQuandle:
    """The one-element quandle."""
    return trivial_quandle(1)


def _check_group(table: Table) -> list[int]:
    """Validate a Cayley table with identity 0; return the inverse of each element."""
    n = len(table)
    if any(len(row) != n for row in table):
        raise NotAGroup("table is not square")
    for a in range(n):
        for b in range(n):
            v = table[a][b]
            if not 0 <= v < n:
                raise NotAGroup("entry out of range", (a, b, v))
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            raise NotAGroup("index 0 is not the identity", (0, a, table[0][a]))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise NotAGroup("associativity fails", (a, b, c))
    inverses = []
    for a in range(n):
        inv = next((b for b in range(n) if table[a][b] == 0 and table[b][a] == 0), None)
        if inv is None:
            raise NotAGroup("no inverse", (a,))
        inverses.append(inv)
    return inverses


def conj_quandle(group_table: Sequence[Sequence[int]]) -> FiniteQuandle:
    """The conjugation quandle of a group: a < b = b * a * b^-1.

    The Cayley table must have the identity at index 0; group axioms are
    checked and NotAGroup carries the first failing witness.
    """
    table = _freeze(group_table)
    inverses = _check_group(table)
    n = len(table)
    quandle_table = [
        [table[table[b][a]][inverses[b]] for b in range(n)] for a in range(n)
    ]
    return validate(quandle_table)


def product(q1: FiniteQuandle, q2: FiniteQuandle) -> FiniteQuandle:
    """Componentwise product; element (i1, i2) is encoded as i1 * |q2| + i2."""
    n1, n2 = q1.order, q2.order
    table = [
        [
            q1.table[a1][b1] * n2 + q2.table[a2][b2]
            for b1 in range(n1)
            for b2 in range(n2)
        ]
        for a1 in range(n1)
        for a2 in range(n2)
    ]
    return validate(table)


def pair_encode(i1: int, i2: int, n2: int) -> int:
    return i1 * n2 + i2


def pair_decode(i: int, n2: int) -> tuple[int, int]:
    return divmod(i, n2)


def subquandle(q: FiniteQuandle, subset: Iterable[int]) -> FiniteQuandle:
    """Restrict q to a subset closed under <; elements are relabeled in
    ascending order of the original indices."""
    elems = sorted(set(subset))
    index_of = {e: i for i, e in enumerate(elems)}
    for a in elems:
        for b in elems:
            if q.table[a][b] not in index_of:
                raise SubsetNotClosed(a, b)
    table = [[index_of[q.table[a][b]] for b in elems] for a in elems]
    return validate(table)

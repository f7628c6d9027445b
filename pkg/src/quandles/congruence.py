"""Congruences: partitions of a quandle compatible with both operations.

A congruence is stored as a ``block_of`` array mapping each element to its
block id, normalized so that block ids appear in first-occurrence order.
Normalization makes equality of congruences plain array equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import FiniteQuandle, validate
from .morphism import QuandleHom


def _normalize(labels: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


class _UnionFind:
    """Plain union-find; n is small, so no balancing heroics."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


@dataclass(frozen=True)
class Congruence:
    base_order: int
    block_of: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Congruence":
        return cls(n, tuple(range(n)))

    @classmethod
    def full(cls, n: int) -> "Congruence":
        return cls(n, (0,) * n)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Congruence":
        return cls(len(labels), _normalize(labels))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Congruence":
        labels = [-1] * n
        for i, block in enumerate(blocks):
            for e in block:
                if labels[e] != -1:
                    raise ValueError(f"element {e} appears in two blocks")
                labels[e] = i
        if any(lab == -1 for lab in labels):
            raise ValueError("blocks do not cover the universe")
        return cls.from_labels(labels)

    @property
    def block_count(self) -> int:
        return max(self.block_of) + 1

    def together(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for e, blk in enumerate(self.block_of):
            out[blk].append(e)
        return out

    def pairs(self) -> Iterator[tuple[int, int]]:
        for a in range(self.base_order):
            for b in range(self.base_order):
                if self.block_of[a] == self.block_of[b]:
                    yield (a, b)

    def is_identity(self) -> bool:
        return self.block_count == self.base_order

    def is_full(self) -> bool:
        return self.block_count == 1


def kernel_congruence(f: QuandleHom) -> Congruence:
    """Eq(f): elements identified when f maps them to the same point."""
    return Congruence.from_labels(f.map)


def is_congruence(q: FiniteQuandle, partition: Congruence | Iterable[Iterable[int]]) -> bool:
    """Whether the partition is compatible with < and <~ in both arguments."""
    theta = partition if isinstance(partition, Congruence) else Congruence.from_blocks(q.order, partition)
    if theta.base_order != q.order:
        raise ValueError("partition is not over this quandle's universe")
    blk = theta.block_of
    for block in theta.blocks():
        rep = block[0]
        for a in block[1:]:
            for c in q.elements():
                if (
                    blk[q.table[rep][c]] != blk[q.table[a][c]]
                    or blk[q.table[c][rep]] != blk[q.table[c][a]]
                    or blk[q.inv_table[rep][c]] != blk[q.inv_table[a][c]]
                    or blk[q.inv_table[c][rep]] != blk[q.inv_table[c][a]]
                ):
                    return False
    return True


def congruence_generated(q: FiniteQuandle, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Smallest congruence containing the given pairs.

    Union-find plus a worklist: every merge re-closes under the four
    translations a -> a<c, a -> c<a, a -> a<~c, a -> c<~a.  Closing under
    <~ is redundant in principle but kept as a cheap safety measure.
    """
    n = q.order
    uf = _UnionFind(n)
    worklist = [(a, b) for a, b in pairs if uf.union(a, b)]
    while worklist:
        a, b = worklist.pop()
        for c in range(n):
            for x, y in (
                (q.table[a][c], q.table[b][c]),
                (q.table[c][a], q.table[c][b]),
                (q.inv_table[a][c], q.inv_table[b][c]),
                (q.inv_table[c][a], q.inv_table[c][b]),
            ):
                if uf.union(x, y):
                    worklist.append((x, y))
    return Congruence.from_labels([uf.find(e) for e in range(n)])


def join(q: FiniteQuandle, theta1: Congruence, theta2: Congruence) -> Congruence:
    """Smallest congruence containing both."""
    pairs = []
    for theta in (theta1, theta2):
        for block in theta.blocks():
            rep = block[0]
            pairs.extend((rep, e) for e in block[1:])
    return congruence_generated(q, pairs)


def quotient(q: FiniteQuandle, theta: Congruence) -> tuple[FiniteQuandle, QuandleHom]:
    """Quandle on the blocks of theta plus the projection homomorphism."""
    blocks = theta.blocks()
    reps = [block[0] for block in blocks]
    blk = theta.block_of
    table = [[blk[q.table[a][b]] for b in reps] for a in reps]
    quot = validate(table)
    proj = QuandleHom(dom=q, cod=quot, map=tuple(blk))
    return quot, proj


def relation_compose(
    r1: Iterable[tuple[int, int]], r2: Iterable[tuple[int, int]], n: int
) -> set[tuple[int, int]]:
    """{(x, z) : exists y with (x,y) in r1 and (y,z) in r2}."""
    by_left: dict[int, list[int]] = {}
    for y, z in r2:
        by_left.setdefault(y, []).append(z)
    out = set()
    for x, y in r1:
        for z in by_left.get(y, ()):
            out.add((x, z))
    return out


def all_congruences(q: FiniteQuandle) -> list[Congruence]:
    """Every congruence of q, found by filtering all set partitions.

    Partitions are enumerated through restricted-growth strings, so the
    result order is deterministic.  Intended for small orders only.
    """
    n = q.order
    found = []

    def grow(labels: list[int], next_label: int):
        if len(labels) == n:
            theta = Congruence.from_labels(labels)
            if is_congruence(q, theta):
                found.append(theta)
            return
        for lab in range(next_label + 1):
            labels.append(lab)
            grow(labels, max(next_label, lab + 1))
            labels.pop()

    grow([0], 1)
    return found

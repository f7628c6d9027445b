"""Quandle homomorphisms: fibers, kernel pairs, pullbacks, isomorphism
testing, and exhaustive homomorphism enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import FiniteQuandle, is_abelian_symmetric, subquandle, validate
from .errors import EmptyFiber, NotAHomomorphism, NotSurjective


@dataclass(frozen=True)
class QuandleHom:
    """A total map between quandles preserving <; build via validate_hom."""

    dom: FiniteQuandle
    cod: FiniteQuandle
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]


def validate_hom(dom: FiniteQuandle, cod: FiniteQuandle, map: Sequence[int]) -> QuandleHom:
    """Check preservation of < on every pair; <~ preservation follows."""
    m = tuple(int(v) for v in map)
    if len(m) != dom.order:
        raise ValueError("map length does not match the domain order")
    for v in m:
        if not 0 <= v < cod.order:
            raise ValueError(f"map value {v} out of codomain range")
    for a in dom.elements():
        for b in dom.elements():
            if m[dom.table[a][b]] != cod.table[m[a]][m[b]]:
                raise NotAHomomorphism(a, b)
    return QuandleHom(dom=dom, cod=cod, map=m)


def identity(q: FiniteQuandle) -> QuandleHom:
    return QuandleHom(dom=q, cod=q, map=tuple(range(q.order)))


def compose(f: QuandleHom, g: QuandleHom) -> QuandleHom:
    """Diagrammatic composition: first f, then g."""
    if f.cod != g.dom:
        raise ValueError("codomain of f does not match domain of g")
    return QuandleHom(dom=f.dom, cod=g.cod, map=tuple(g.map[v] for v in f.map))


def is_surjective(f: QuandleHom) -> bool:
    return len(set(f.map)) == f.cod.order


def fibers(f: QuandleHom) -> list[set[int]]:
    """Preimage of every codomain element, indexed by that element."""
    out: list[set[int]] = [set() for _ in range(f.cod.order)]
    for a, b in enumerate(f.map):
        out[b].add(a)
    return out


def fiber_subquandle(f: QuandleHom, b: int) -> FiniteQuandle:
    """The fiber over b as a quandle (fibers are closed under <)."""
    fiber = [a for a, v in enumerate(f.map) if v == b]
    if not fiber:
        raise EmptyFiber(b)
    return subquandle(f.dom, fiber)


def has_abelian_symmetric_fibers(f: QuandleHom) -> bool:
    return all(
        is_abelian_symmetric(fiber_subquandle(f, b))
        for b, fiber in enumerate(fibers(f))
        if fiber
    )


def _pair_subquandle(
    q1: FiniteQuandle, q2: FiniteQuandle, pairs: Sequence[tuple[int, int]]
) -> FiniteQuandle:
    index = {pair: i for i, pair in enumerate(pairs)}
    table = [
        [
            index[(q1.table[a1][b1], q2.table[a2][b2])]
            for (b1, b2) in pairs
        ]
        for (a1, a2) in pairs
    ]
    return validate(table)


@dataclass(frozen=True)
class KernelPairQuandle:
    """Eq(f) = {(a, a') : f(a) = f(a')} with its projections and diagonal."""

    carrier: FiniteQuandle
    pairs: tuple[tuple[int, int], ...]
    proj1: QuandleHom
    proj2: QuandleHom
    diag: QuandleHom

    @property
    def order(self) -> int:
        return self.carrier.order


def kernel_pair(f: QuandleHom) -> KernelPairQuandle:
    A = f.dom
    pairs = tuple(
        (a, a2) for a in A.elements() for a2 in A.elements() if f.map[a] == f.map[a2]
    )
    carrier = _pair_subquandle(A, A, pairs)
    index = {pair: i for i, pair in enumerate(pairs)}
    proj1 = QuandleHom(dom=carrier, cod=A, map=tuple(a for a, _ in pairs))
    proj2 = QuandleHom(dom=carrier, cod=A, map=tuple(a2 for _, a2 in pairs))
    diag = QuandleHom(dom=A, cod=carrier, map=tuple(index[(a, a)] for a in A.elements()))
    return KernelPairQuandle(carrier=carrier, pairs=pairs, proj1=proj1, proj2=proj2, diag=diag)


@dataclass(frozen=True)
class PullbackResult:
    """Subquandle of E x A on the pairs equalized by p and f."""

    quandle: FiniteQuandle
    pairs: tuple[tuple[int, int], ...]
    proj1: QuandleHom  # onto dom(p)
    proj2: QuandleHom  # onto dom(f)


def pullback(f: QuandleHom, p: QuandleHom) -> PullbackResult:
    """Pullback of f along p; both must share a codomain.

    Elements are the pairs (e, a) with p(e) = f(a), ordered lexicographically.
    """
    if f.cod != p.cod:
        raise ValueError("pullback requires a common codomain")
    E, A = p.dom, f.dom
    pairs = tuple(
        (e, a) for e in E.elements() for a in A.elements() if p.map[e] == f.map[a]
    )
    carrier = _pair_subquandle(E, A, pairs)
    proj1 = QuandleHom(dom=carrier, cod=E, map=tuple(e for e, _ in pairs))
    proj2 = QuandleHom(dom=carrier, cod=A, map=tuple(a for _, a in pairs))
    return PullbackResult(quandle=carrier, pairs=pairs, proj1=proj1, proj2=proj2)


def _cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def _element_profile(q: FiniteQuandle, e: int) -> tuple:
    column = [q.table[a][e] for a in q.elements()]
    row = q.table[e]
    return (
        _cycle_type(column),
        sum(1 for b in q.elements() if row[b] == e),
        len(set(row)),
    )


def are_isomorphic(q1: FiniteQuandle, q2: FiniteQuandle) -> tuple[int, ...] | None:
    """A <-preserving bijection q1 -> q2 if one exists, else None.

    Candidate images are pruned by per-element invariants (column cycle
    type, row fixed points, row spread) before backtracking.
    """
    if q1.order != q2.order:
        return None
    n = q1.order
    prof1 = [_element_profile(q1, e) for e in range(n)]
    prof2 = [_element_profile(q2, e) for e in range(n)]
    if sorted(prof1) != sorted(prof2):
        return None
    candidates = [[y for y in range(n) if prof2[y] == prof1[x]] for x in range(n)]
    sigma = [-1] * n
    tau = [-1] * n

    def consistent(k: int) -> bool:
        # check all products that became checkable when sigma[k] was set
        for i in range(k + 1):
            for a, b in ((i, k), (k, i)):
                v = q1.table[a][b]
                w = q2.table[sigma[a]][sigma[b]]
                if sigma[v] != -1:
                    if sigma[v] != w:
                        return False
                elif tau[w] != -1:
                    return False
        return True

    def search(k: int) -> bool:
        if k == n:
            return all(
                sigma[q1.table[a][b]] == q2.table[sigma[a]][sigma[b]]
                for a in range(n)
                for b in range(n)
            )
        for y in candidates[k]:
            if tau[y] != -1:
                continue
            sigma[k], tau[y] = y, k
            if consistent(k) and search(k + 1):
                return True
            sigma[k], tau[y] = -1, -1
        return False

    if search(0):
        return tuple(sigma)
    return None


def _enumerate_homs(A: FiniteQuandle, B: FiniteQuandle, surjective_only: bool) -> list[QuandleHom]:
    n, m = A.order, B.order
    if surjective_only and m > n:
        return []
    values = [-1] * n
    results: list[tuple[int, ...]] = []

    def propagate(queue: list[int], trail: list[int]) -> bool:
        # forced values: whenever i and j are assigned, so is i < j
        while queue:
            i = queue.pop()
            for j in range(n):
                if values[j] == -1:
                    continue
                for a, b in ((i, j), (j, i)):
                    k = A.table[a][b]
                    v = B.table[values[a]][values[b]]
                    if values[k] == -1:
                        values[k] = v
                        trail.append(k)
                        queue.append(k)
                    elif values[k] != v:
                        return False
        return True

    def surjectivity_possible() -> bool:
        missing = m - len(set(v for v in values if v != -1))
        return missing <= sum(1 for v in values if v == -1)

    def search():
        try:
            pos = values.index(-1)
        except ValueError:
            results.append(tuple(values))
            return
        for v in range(m):
            values[pos] = v
            trail = [pos]
            if propagate([pos], trail) and (not surjective_only or surjectivity_possible()):
                search()
            for k in trail:
                values[k] = -1

    search()
    homs = []
    for vals in sorted(results):
        if surjective_only and len(set(vals)) != m:
            continue
        homs.append(QuandleHom(dom=A, cod=B, map=vals))
    return homs


def enumerate_surjections(A: FiniteQuandle, B: FiniteQuandle) -> list[QuandleHom]:
    """All surjective homomorphisms A -> B in lexicographic map order."""
    return _enumerate_homs(A, B, surjective_only=True)


def enumerate_homs(A: FiniteQuandle, B: FiniteQuandle) -> list[QuandleHom]:
    """All homomorphisms A -> B in lexicographic map order."""
    return _enumerate_homs(A, B, surjective_only=False)


def enumerate_sections(f: QuandleHom) -> list[QuandleHom]:
    """All homomorphic sections s with f . s = id on the codomain."""
    return [
        s
        for s in enumerate_homs(f.cod, f.dom)
        if all(f.map[s.map[b]] == b for b in f.cod.elements())
    ]


def pushout_of_surjections(
    f: QuandleHom, g: QuandleHom
) -> tuple[FiniteQuandle, QuandleHom, QuandleHom]:
    """Pushout of two surjections out of a common domain.

    Returns (D, B -> D, C -> D) where D is the quotient of the domain by the
    join of the two kernel congruences.
    """
    from .congruence import join, kernel_congruence, quotient  # avoids a module cycle

    if f.dom != g.dom:
        raise ValueError("pushout requires a common domain")
    for h in (f, g):
        if not is_surjective(h):
            raise NotSurjective(next(b for b in range(h.cod.order) if b not in set(h.map)))
    theta = join(f.dom, kernel_congruence(f), kernel_congruence(g))
    D, proj = quotient(f.dom, theta)
    inv_f = {}
    inv_g = {}
    for a in f.dom.elements():
        inv_f.setdefault(f.map[a], proj.map[a])
        inv_g.setdefault(g.map[a], proj.map[a])
    h = QuandleHom(dom=f.cod, cod=D, map=tuple(inv_f[b] for b in range(f.cod.order)))
    l = QuandleHom(dom=g.cod, cod=D, map=tuple(inv_g[c] for c in range(g.cod.order)))
    return D, h, l

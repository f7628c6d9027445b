"""Pure-Python twins of the compiled search kernels.

Same contracts as ``quandles._kernels``; selected automatically when the
extension is unavailable.  See ``quandles.kernels`` for the public facade.
"""

from __future__ import annotations

from itertools import permutations


def _perms_fixing(n: int, b: int) -> list[tuple[int, ...]]:
    return [p for p in permutations(range(n)) if p[b] == b]


def valid_tables(n: int, root: int | None = None) -> list[bytes]:
    """Every valid order-n quandle table, as row-major bytes.

    Columns are filled left to right; column b ranges over the permutations
    fixing b in lexicographic order, and self-distributivity is checked as
    soon as all three columns a constraint needs are placed.  ``root``
    restricts column 0 to a single permutation (for parallel splits).
    """
    perms = [_perms_fixing(n, b) for b in range(n)]
    cols: list[tuple[int, ...]] = [()] * n
    out: list[bytes] = []

    def a3_ok(k: int) -> bool:
        colk = cols[k]
        for b in range(k + 1):
            colb = cols[b]
            for c in range(k + 1):
                colc = cols[c]
                m = colc[b]  # b < c, the column the right-hand side lands in
                if m > k or (b != k and c != k and m != k):
                    continue
                colm = cols[m]
                for a in range(n):
                    if colc[colb[a]] != colm[colc[a]]:
                        return False
        return True

    def place(k: int):
        options = perms[k] if root is None or k > 0 else [perms[0][root]]
        for p in options:
            cols[k] = p
            if a3_ok(k):
                if k == n - 1:
                    out.append(bytes(cols[b][a] for a in range(n) for b in range(n)))
                else:
                    place(k + 1)

    place(0)
    return out


def search_connectors(
    n: int,
    table: list[list[int]],
    rblk: list[int],
    sblk: list[int],
    trips: list[tuple[int, int, int]],
    tripidx: dict[tuple[int, int, int], int],
    enforce_membership: bool,
    enforce_assoc: bool,
    limit: int,
) -> list[tuple[int, ...]]:
    """Backtracking search for ternary tables on the given triple domain.

    Always pins the Mal'tsev cells p(x,x,y)=y, p(x,y,y)=x and closes under
    the componentwise-product (homomorphism) constraint.  With
    ``enforce_membership``/``enforce_assoc`` the block-membership and
    associativity laws are also enforced during propagation, otherwise only
    at no point (the caller checks whatever it needs on the results).

    Cells are branched in lexicographic triple order with candidate values
    ascending, so the solution order is deterministic.  ``limit <= 0``
    collects every solution.
    """
    ncells = len(trips)
    prod = [
        [
            tripidx[(table[x1][x2], table[y1][y2], table[z1][z2])]
            for (x2, y2, z2) in trips
        ]
        for (x1, y1, z1) in trips
    ]
    rblocks = [[e for e in range(n) if rblk[e] == rblk[x]] for x in range(n)]
    sblocks = [[e for e in range(n) if sblk[e] == sblk[x]] for x in range(n)]

    value = [-1] * ncells
    assigned: list[int] = []  # doubles as the undo trail
    pend: list[list[int]] = [[] for _ in range(ncells)]
    pend_trail: list[tuple[int, int]] = []
    solutions: list[tuple[int, ...]] = []

    def assign(idx: int, v: int) -> bool:
        cur = value[idx]
        if cur != -1:
            return cur == v
        if enforce_membership:
            x, _, z = trips[idx]
            if sblk[x] != sblk[v] or rblk[z] != rblk[v]:
                return False
        value[idx] = v
        assigned.append(idx)
        return True

    def add_equal(a: int, b: int) -> bool:
        if a == b:
            return True
        va, vb = value[a], value[b]
        if va != -1:
            return va == vb if vb != -1 else assign(b, va)
        if vb != -1:
            return assign(a, vb)
        pend[a].append(b)
        pend[b].append(a)
        pend_trail.append((a, b))
        return True

    def propagate(start: int) -> bool:
        qi = start
        while qi < len(assigned):
            i = assigned[qi]
            qi += 1
            v = value[i]
            for j in pend[i]:
                if not assign(j, v):
                    return False
            # close under componentwise products with everything assigned
            for jj in range(len(assigned)):
                j = assigned[jj]
                if not assign(prod[i][j], table[v][value[j]]):
                    return False
                if not assign(prod[j][i], table[value[j]][v]):
                    return False
            if enforce_assoc:
                x, y, z = trips[i]
                # inner of p(x', y, p(y, u, v)) = p(x', u, v) with (y,u,v)=(x,y,z)
                for x2 in rblocks[x]:
                    if not add_equal(tripidx[(x2, x, v)], tripidx[(x2, y, z)]):
                        return False
                # inner of p(p(x, y, u), u, v') = p(x, u, v') with (x,y,u)=(x,y,z)
                if rblk[x] == rblk[z]:
                    for v2 in sblocks[z]:
                        if not add_equal(tripidx[(v, z, v2)], tripidx[(x, z, v2)]):
                            return False
        return True

    def undo(mark: int, pend_mark: int):
        while len(assigned) > mark:
            value[assigned.pop()] = -1
        while len(pend_trail) > pend_mark:
            a, b = pend_trail.pop()
            pend[a].pop()
            pend[b].pop()

    # Mal'tsev pins
    for idx, (x, y, z) in enumerate(trips):
        if x == y and not assign(idx, z):
            undo(0, 0)
            return []
        if y == z and not assign(idx, x):
            undo(0, 0)
            return []
    if not propagate(0):
        undo(0, 0)
        return []

    def search(lo: int) -> bool:
        """Returns True when the solution limit has been reached."""
        idx = lo
        while idx < ncells and value[idx] != -1:
            idx += 1
        if idx == ncells:
            solutions.append(tuple(value))
            return 0 < limit <= len(solutions)
        for v in range(n):
            mark, pend_mark, start = len(assigned), len(pend_trail), len(assigned)
            if assign(idx, v) and propagate(start):
                if search(idx + 1):
                    return True
            undo(mark, pend_mark)
        return False

    search(0)
    undo(0, 0)
    return solutions

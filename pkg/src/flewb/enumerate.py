"""Enumeration of all finite residuated lattices up to isomorphism.

Lattices are generated first (bottom at index 0, top at index n-1, the
middle elements carrying every strict partial order), deduplicated by a
minimal encoding over relabellings that fix 0 and 1. For each lattice all
monoid tables are found by backtracking over the entries between middle
elements, with integrality and monotonicity pruning, and then filtered for
associativity and existence of the residuum. Two monoids on one canonical
lattice are isomorphic exactly when a lattice automorphism maps one to the
other, so a table is kept iff it is the least among its automorphic images.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .algebra import FiniteRL, bound_fixing_permutations, build_algebra
from .errors import AlgebraError, SizeBoundExceeded

MAX_ENUMERATION_SIZE = 6


def _leq_from_strict(n: int, strict: set[tuple[int, int]]) -> tuple[tuple[bool, ...], ...]:
    top = n - 1
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            row.append(a == b or a == 0 or b == top or (a, b) in strict)
        rows.append(tuple(row))
    return tuple(rows)


def _is_lattice(leq, n: int) -> bool:
    for a in range(n):
        for b in range(a + 1, n):
            ups = [c for c in range(n) if leq[a][c] and leq[b][c]]
            if not any(all(leq[u][v] for v in ups) for u in ups):
                return False
            downs = [c for c in range(n) if leq[c][a] and leq[c][b]]
            if not any(all(leq[v][u] for v in downs) for u in downs):
                return False
    return True


def _relabel_leq(leq, perm) -> tuple[tuple[bool, ...], ...]:
    n = len(perm)
    return tuple(tuple(leq[perm[i]][perm[j]] for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def lattices(n: int) -> tuple[tuple[tuple[bool, ...], ...], ...]:
    """All bounded lattices of size n up to isomorphism, as canonical order tables."""
    if n == 1:
        return (((True,),),)
    if n == 2:
        return (((True, True), (False, True)),)
    middle = list(range(1, n - 1))
    pairs = [(a, b) for a in middle for b in middle if a != b]
    found = set()
    for bits in itertools.product((False, True), repeat=len(pairs)):
        strict = {p for p, bit in zip(pairs, bits) if bit}
        if any((b, a) in strict for (a, b) in strict):
            continue
        if any((a, c) not in strict for (a, b) in strict for (b2, c) in strict if b == b2 and a != c):
            continue
        leq = _leq_from_strict(n, strict)
        if not _is_lattice(leq, n):
            continue
        canon = min(_relabel_leq(leq, p) for p in bound_fixing_permutations(n, n - 1))
        found.add(canon)
    return tuple(sorted(found))


def _automorphisms(leq, n: int) -> list[tuple[int, ...]]:
    return [p for p in bound_fixing_permutations(n, n - 1) if _relabel_leq(leq, p) == leq]


def _meets(leq, n: int):
    meet = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            downs = [c for c in range(n) if leq[c][a] and leq[c][b]]
            meet[a][b] = next(u for u in downs if all(leq[v][u] for v in downs))
    return meet


def _monoids(leq, n: int) -> Iterator[list[list[int]]]:
    top = n - 1
    meet = _meets(leq, n)
    height = [sum(leq[x][a] for x in range(n)) for a in range(n)]
    mon: list[list[int | None]] = [[None] * n for _ in range(n)]
    for a in range(n):
        mon[a][0] = mon[0][a] = 0
        mon[a][top] = mon[top][a] = a
    cells = [(i, j) for i in range(1, top) for j in range(i, top)]

    def consistent(i, j, v) -> bool:
        for k in range(n):
            for l in range(n):
                w = mon[k][l]
                if w is None:
                    continue
                if leq[k][i] and leq[l][j] and not leq[w][v]:
                    return False
                if leq[i][k] and leq[j][l] and not leq[v][w]:
                    return False
        return True

    def rec(pos: int):
        if pos == len(cells):
            yield [list(row) for row in mon]
            return
        i, j = cells[pos]
        cands = [v for v in range(n) if leq[v][meet[i][j]]]
        cands.sort(key=lambda v: (-height[v], -v))
        for v in cands:
            if consistent(i, j, v):
                mon[i][j] = mon[j][i] = v
                yield from rec(pos + 1)
                mon[i][j] = mon[j][i] = None

    yield from rec(0)


def _associative(mon, n: int) -> bool:
    return all(
        mon[mon[a][b]][c] == mon[a][mon[b][c]]
        for a in range(1, n - 1) for b in range(1, n - 1) for c in range(1, n - 1)
    )


def _mon_key(mon, perm) -> tuple[int, ...]:
    n = len(perm)
    inv = [0] * n
    for new, old in enumerate(perm):
        inv[old] = new
    return tuple(inv[mon[perm[i]][perm[j]]] for i in range(n) for j in range(n))


def _element_names(n: int) -> list[str]:
    if n == 1:
        return ["0"]
    return ["0"] + [chr(ord("a") + i) for i in range(n - 2)] + ["1"]


@lru_cache(maxsize=None)
def algebras_of_size(n: int) -> tuple[FiniteRL, ...]:
    """Every residuated lattice with exactly n elements, one per isomorphism class."""
    if not 1 <= n <= MAX_ENUMERATION_SIZE:
        raise SizeBoundExceeded(f"size must be between 1 and {MAX_ENUMERATION_SIZE}, got {n}")
    out = []
    names = _element_names(n)
    for li, leq in enumerate(lattices(n)):
        autos = _automorphisms(leq, n)
        count = 0
        for mon in _monoids(leq, n):
            if not _associative(mon, n):
                continue
            key = _mon_key(mon, tuple(range(n)))
            if any(_mon_key(mon, p) < key for p in autos):
                continue
            try:
                alg = build_algebra(names, leq, mon)
            except AlgebraError:
                continue
            count += 1
            out.append(alg.renamed(f"RL{n}.{li}.{count}"))
    return tuple(out)


def enumerate_algebras(max_size: int) -> Iterator[FiniteRL]:
    """Yield every residuated lattice with at most ``max_size`` elements.

    The order is deterministic: by size, then by lattice, then monoid tables
    with larger products first (so the Heyting algebra on a lattice, when it
    exists, precedes the other monoids on it).
    """
    if not 1 <= max_size <= MAX_ENUMERATION_SIZE:
        raise SizeBoundExceeded(
            f"max_size must be between 1 and {MAX_ENUMERATION_SIZE}, got {max_size}"
        )
    for n in range(1, max_size + 1):
        yield from algebras_of_size(n)

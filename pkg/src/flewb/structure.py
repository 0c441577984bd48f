"""B-filters, congruences and subdirect irreducibility."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .boolean import BAlgebra, boolean_skeleton, is_boolean, make_balgebra
from .errors import DegenerateAlgebra, InternalInvariantViolation, NotBoolean


def _balgebra(A) -> BAlgebra:
    return A if isinstance(A, BAlgebra) else make_balgebra(A)


@dataclass(frozen=True)
class BFilter:
    """An upward closed, ·-closed, B-closed set containing 1."""

    algebra: BAlgebra
    members: frozenset[int]

    def names(self) -> list[str]:
        return self.algebra.names(sorted(self.members))

    def __le__(self, other: "BFilter") -> bool:
        return self.members <= other.members


@dataclass(frozen=True)
class Congruence:
    """Partition given as ``block[a]``; blocks are numbered by first member."""

    algebra: BAlgebra
    block: tuple[int, ...]

    def related(self, a: int, b: int) -> bool:
        return self.block[a] == self.block[b]

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for a, k in enumerate(self.block):
            out.setdefault(k, []).append(a)
        return list(out.values())

    def __le__(self, other: "Congruence") -> bool:
        n = len(self.block)
        return all(
            other.related(a, b) for a in range(n) for b in range(n) if self.related(a, b)
        )

    def is_identity(self) -> bool:
        return len(set(self.block)) == len(self.block)


def canonical_blocks(labels: Iterable) -> tuple[int, ...]:
    """Renumber a labelling so block ids follow first occurrence."""
    seen: dict = {}
    return tuple(seen.setdefault(x, len(seen)) for x in labels)


def is_bfilter(A, S: Iterable[int]) -> bool:
    A = _balgebra(A)
    S = frozenset(S)
    if A.top not in S:
        return False
    for a in S:
        if A.b_table[a] not in S:
            return False
        if any(A.le(a, b) and b not in S for b in range(A.n)):
            return False
        if any(A.mul(a, b) not in S for b in S):
            return False
    return True


def principal_filter(A, a: int) -> BFilter:
    """The interval [a, 1] for Boolean a."""
    A = _balgebra(A)
    if not is_boolean(A, a):
        raise NotBoolean(f"{A.elements[a]} is not Boolean")
    members = frozenset(b for b in range(A.n) if A.le(a, b))
    if not is_bfilter(A, members):
        raise InternalInvariantViolation(f"[{A.elements[a]}, 1] is not a B-filter")
    return BFilter(A, members)


def all_bfilters(A) -> list[BFilter]:
    """Every B-filter, smallest first, then by sorted member list."""
    A = _balgebra(A)
    out = []
    others = [a for a in range(A.n) if a != A.top]
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            S = frozenset(extra) | {A.top}
            if is_bfilter(A, S):
                out.append(BFilter(A, S))
    return out


def filter_to_congruence(F: BFilter) -> Congruence:
    """a ≡ b iff a→b and b→a lie in F."""
    A, S = F.algebra, F.members
    label = [
        min(b for b in range(A.n) if A.imp(a, b) in S and A.imp(b, a) in S)
        for a in range(A.n)
    ]
    return Congruence(A, canonical_blocks(label))


def congruence_to_filter(theta: Congruence) -> BFilter:
    """The class of 1."""
    A = theta.algebra
    return BFilter(A, frozenset(a for a in range(A.n) if theta.related(a, A.top)))


def is_congruence(A, block) -> bool:
    """Compatibility with meet, join, product, residuum and B."""
    A = _balgebra(A)
    n = A.n
    pairs = [(a, b) for a in range(n) for b in range(n) if block[a] == block[b] and a != b]
    for a, b in pairs:
        if block[A.b_table[a]] != block[A.b_table[b]]:
            return False
        for c in range(n):
            for op in (A.meet, A.join, A.mul, A.imp):
                if block[op(a, c)] != block[op(b, c)]:
                    return False
            if block[A.imp(c, a)] != block[A.imp(c, b)]:
                return False
    return True


def _partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length n."""
    def grow(prefix: list[int], top: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in range(top + 2):
            yield from grow(prefix + [k], max(top, k))

    if n == 0:
        yield ()
    else:
        yield from grow([0], 0)


def all_congruences(A) -> list[Congruence]:
    A = _balgebra(A)
    return [Congruence(A, p) for p in _partitions(A.n) if is_congruence(A, p)]


def si_by_congruences(A) -> bool:
    """Whether the non-identity congruences have a non-identity meet."""
    A = _balgebra(A)
    nontrivial = [c for c in all_congruences(A) if not c.is_identity()]
    if not nontrivial:
        return False
    n = A.n
    return any(
        a != b and all(c.related(a, b) for c in nontrivial)
        for a in range(n) for b in range(n)
    )


def is_subdirectly_irreducible(A) -> bool:
    """True iff the Boolean skeleton is {0, 1}; cross-checked on congruences."""
    A = _balgebra(A)
    if A.n == 1:
        raise DegenerateAlgebra("the one-element algebra is not subdirectly irreducible")
    verdict = boolean_skeleton(A) == {0, A.top}
    if verdict != si_by_congruences(A):
        raise InternalInvariantViolation("skeleton and congruence criteria disagree")
    return verdict

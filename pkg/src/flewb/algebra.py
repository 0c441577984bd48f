"""Finite bounded integral commutative residuated lattices.

Elements are handled by index everywhere; names are kept only for display.
Index 0 is always the bottom ``0``; ``top`` is the index of ``1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    AlgebraError,
    MonoidLawViolation,
    NoResiduum,
    NotALattice,
    NotAPartialOrder,
    NotIntegral,
    UnknownOperator,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteRL:
    """A validated finite residuated lattice. Build it with :func:`build_algebra`."""

    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    monoid: Table
    residuum: Table
    meet_table: Table
    join_table: Table
    top: int
    name: str = field(default="", compare=False)

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FiniteRL{label} n={self.n} elements={list(self.elements)}>"

    @property
    def bottom(self) -> int:
        return 0

    def index(self, name: str | int) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.n:
                raise IndexError(name)
            return name
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    def names(self, indices: Iterable[int]) -> list[str]:
        return [self.elements[i] for i in indices]

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.monoid[a][b]

    def imp(self, a: int, b: int) -> int:
        return self.residuum[a][b]

    def neg(self, a: int) -> int:
        return self.residuum[a][0]

    def meet_all(self, indices: Iterable[int]) -> int:
        out = self.top
        for i in indices:
            out = self.meet_table[out][i]
        return out

    def join_all(self, indices: Iterable[int]) -> int:
        out = 0
        for i in indices:
            out = self.join_table[out][i]
        return out

    def is_chain(self) -> bool:
        return all(self.leq[a][b] or self.leq[b][a] for a in range(self.n) for b in range(self.n))

    def is_degenerate(self) -> bool:
        return self.n == 1

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(lower, upper)``."""
        out = []
        for a in range(self.n):
            for b in range(self.n):
                if a == b or not self.leq[a][b]:
                    continue
                if not any(
                    c not in (a, b) and self.leq[a][c] and self.leq[c][b] for c in range(self.n)
                ):
                    out.append((a, b))
        return out

    def renamed(self, name: str) -> FiniteRL:
        return FiniteRL(
            self.elements, self.leq, self.monoid, self.residuum,
            self.meet_table, self.join_table, self.top, name,
        )


def _square(table: Sequence[Sequence], n: int, what: str) -> None:
    if len(table) != n or any(len(row) != n for row in table):
        raise AlgebraError(f"{what} table must be {n}x{n}")


def _check_partial_order(leq, n: int, names) -> None:
    for a in range(n):
        if not leq[a][a]:
            raise NotAPartialOrder(f"not reflexive at {names[a]}", (names[a],))
    for a, b in itertools.combinations(range(n), 2):
        if leq[a][b] and leq[b][a]:
            raise NotAPartialOrder(
                f"not antisymmetric: {names[a]} <= {names[b]} <= {names[a]}", (names[a], names[b])
            )
    for a, b, c in itertools.product(range(n), repeat=3):
        if leq[a][b] and leq[b][c] and not leq[a][c]:
            raise NotAPartialOrder(
                f"not transitive: {names[a]} <= {names[b]} <= {names[c]}",
                (names[a], names[b], names[c]),
            )


def _bound(leq, n: int, candidates: list[int], upper: bool) -> int | None:
    # least element of candidates (upper) / greatest (lower)
    for c in candidates:
        if all((leq[c][d] if upper else leq[d][c]) for d in candidates):
            return c
    return None


def _lattice_tables(leq, n: int, names) -> tuple[Table, Table, int]:
    if not all(leq[0][x] for x in range(n)):
        raise NotALattice("index 0 is not the least element", (names[0],))
    tops = [t for t in range(n) if all(leq[x][t] for x in range(n))]
    if not tops:
        raise NotALattice("no greatest element")
    top = tops[0]
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            ups = [c for c in range(n) if leq[a][c] and leq[b][c]]
            downs = [c for c in range(n) if leq[c][a] and leq[c][b]]
            j = _bound(leq, n, ups, upper=True)
            m = _bound(leq, n, downs, upper=False)
            if j is None:
                raise NotALattice(f"{names[a]} and {names[b]} have no join", (names[a], names[b]))
            if m is None:
                raise NotALattice(f"{names[a]} and {names[b]} have no meet", (names[a], names[b]))
            join[a][b] = join[b][a] = j
            meet[a][b] = meet[b][a] = m
    return tuple(map(tuple, meet)), tuple(map(tuple, join)), top


def _check_monoid(leq, mon, meet, top: int, n: int, names) -> None:
    for a in range(n):
        if mon[a][top] != a or mon[top][a] != a:
            raise MonoidLawViolation(f"1 is not a unit for {names[a]}", (names[a],))
    for a, b in itertools.combinations(range(n), 2):
        if mon[a][b] != mon[b][a]:
            raise MonoidLawViolation(
                f"not commutative at ({names[a]}, {names[b]})", (names[a], names[b])
            )
    for a, b, c in itertools.product(range(n), repeat=3):
        if mon[mon[a][b]][c] != mon[a][mon[b][c]]:
            raise MonoidLawViolation(
                f"not associative at ({names[a]}, {names[b]}, {names[c]})",
                (names[a], names[b], names[c]),
            )
    for a, b in itertools.product(range(n), repeat=2):
        if not leq[mon[a][b]][meet[a][b]]:
            raise NotIntegral(
                f"{names[a]}*{names[b]} is not below {names[a]} meet {names[b]}", (names[a], names[b])
            )
    for a, a2, b in itertools.product(range(n), repeat=3):
        if leq[a][a2] and not leq[mon[a][b]][mon[a2][b]]:
            raise MonoidLawViolation(
                f"not monotone: {names[a]} <= {names[a2]} but {names[a]}*{names[b]} "
                f"not <= {names[a2]}*{names[b]}",
                (names[a], names[a2], names[b]),
            )


def _residuum(leq, mon, n: int, names) -> Table:
    res = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            cands = [c for c in range(n) if leq[mon[a][c]][b]]
            best = _bound(leq, n, cands, upper=False)
            if best is None:
                raise NoResiduum(
                    f"max{{c : {names[a]}*c <= {names[b]}}} does not exist", (names[a], names[b])
                )
            res[a][b] = best
    for a, b, c in itertools.product(range(n), repeat=3):
        if leq[mon[a][b]][c] != leq[a][res[b][c]]:
            raise NoResiduum(
                f"residuation fails at ({names[a]}, {names[b]}, {names[c]})",
                (names[a], names[b], names[c]),
            )
    return tuple(map(tuple, res))


def build_algebra(
    elements: Sequence[str],
    leq: Sequence[Sequence[bool]],
    monoid: Sequence[Sequence[int]],
    name: str = "",
) -> FiniteRL:
    """Validate order and monoid tables and derive the residuum.

    ``leq[a][b]`` means ``a <= b`` and ``monoid[a][b]`` is the index of ``a*b``.
    Index 0 must be the bottom. Raises a subclass of :class:`AlgebraError`
    naming the offending elements when a law fails.
    """
    elements = tuple(str(e) for e in elements)
    n = len(elements)
    if n < 1:
        raise AlgebraError("an algebra needs at least one element")
    if len(set(elements)) != n:
        raise AlgebraError("element names must be distinct")
    _square(leq, n, "order")
    _square(monoid, n, "monoid")
    if any(not (isinstance(v, int) and 0 <= v < n) for row in monoid for v in row):
        raise AlgebraError("monoid table has an entry that is not an element index")
    leq_t = tuple(tuple(bool(v) for v in row) for row in leq)
    mon_t = tuple(tuple(int(v) for v in row) for row in monoid)

    _check_partial_order(leq_t, n, elements)
    meet, join, top = _lattice_tables(leq_t, n, elements)
    _check_monoid(leq_t, mon_t, meet, top, n, elements)
    res = _residuum(leq_t, mon_t, n, elements)
    return FiniteRL(elements, leq_t, mon_t, res, meet, join, top, name)


def chain(n: int, name: str = "") -> FiniteRL:
    """The n-element Goedel chain 0 < 1/(n-1) < ... < 1 with product = min."""
    if n == 1:
        names = ["0"]
    else:
        names = ["0"] + [f"{i}/{n - 1}" for i in range(1, n - 1)] + ["1"]
        if n == 3:
            names[1] = "1/2"
    leq = [[a <= b for b in range(n)] for a in range(n)]
    mon = [[min(a, b) for b in range(n)] for a in range(n)]
    return build_algebra(names, leq, mon, name=name or f"G{n}")


def product(A: FiniteRL, B: FiniteRL, name: str = "") -> FiniteRL:
    """Direct product with componentwise order and monoid."""
    pairs = list(itertools.product(range(A.n), range(B.n)))
    names = [f"({A.elements[a]},{B.elements[b]})" for a, b in pairs]
    pos = {p: i for i, p in enumerate(pairs)}
    leq = [[A.leq[a][c] and B.leq[b][d] for (c, d) in pairs] for (a, b) in pairs]
    mon = [[pos[A.monoid[a][c], B.monoid[b][d]] for (c, d) in pairs] for (a, b) in pairs]
    label = name or (f"{A.name}x{B.name}" if A.name and B.name else "")
    return build_algebra(names, leq, mon, name=label)


@dataclass(frozen=True)
class AlgebraClassFlags:
    prelinear: bool
    contractive: bool
    stone: bool
    divisible: bool
    involutive: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "prelinear": self.prelinear,
            "contractive": self.contractive,
            "stone": self.stone,
            "divisible": self.divisible,
            "involutive": self.involutive,
        }


def class_flags(A: FiniteRL) -> AlgebraClassFlags:
    r = range(A.n)
    return AlgebraClassFlags(
        prelinear=all(A.join(A.imp(a, b), A.imp(b, a)) == A.top for a in r for b in r),
        contractive=all(A.mul(a, a) == a for a in r),
        stone=all(A.join(A.neg(a), A.neg(A.neg(a))) == A.top for a in r),
        divisible=all(A.meet(a, b) == A.mul(a, A.imp(a, b)) for a in r for b in r),
        involutive=all(A.neg(A.neg(a)) == a for a in r),
    )


_OP_ALIASES = {
    "and": "and", "∧": "and", "/\\": "and", "meet": "and",
    "or": "or", "∨": "or", "\\/": "or", "join": "or",
    "mul": "mul", "·": "mul", "*": "mul", "&": "mul",
    "imp": "imp", "→": "imp", "->": "imp",
    "neg": "neg", "¬": "neg", "~": "neg",
    "0": "0", "1": "1",
    "B": "B", "D": "D", "Delta": "Delta", "Δ": "Delta",
}


def is_closed_subset(A, S: Iterable[int | str], ops: Iterable[str]) -> bool:
    """Whether ``S`` is closed under every operation named in ``ops``.

    ``A`` may be a :class:`FiniteRL` or a ``BAlgebra``; unary operators B, D
    and Delta are taken from the BAlgebra when present and computed otherwise.
    """
    from .boolean import BAlgebra, make_balgebra

    base = A.base if isinstance(A, BAlgebra) else A
    members = {base.index(s) for s in S}
    canon = []
    for op in ops:
        if op not in _OP_ALIASES:
            raise UnknownOperator(f"unknown operator {op!r}")
        canon.append(_OP_ALIASES[op])
    balg = None
    if any(op in ("B", "D", "Delta") for op in canon):
        balg = A if isinstance(A, BAlgebra) else make_balgebra(base)
    binary = {"and": base.meet, "or": base.join, "mul": base.mul, "imp": base.imp}
    for op in canon:
        if op in binary:
            f = binary[op]
            if any(f(a, b) not in members for a in members for b in members):
                return False
        elif op == "neg":
            if any(base.neg(a) not in members for a in members):
                return False
        elif op == "0":
            if 0 not in members:
                return False
        elif op == "1":
            if base.top not in members:
                return False
        else:
            table = balg.unary_table(op)
            if any(table[a] not in members for a in members):
                return False
    return True


def _encoding(A: FiniteRL, perm: Sequence[int]) -> tuple:
    # perm[new] = old
    n = A.n
    inv = [0] * n
    for new, old in enumerate(perm):
        inv[old] = new
    leq_bits = tuple(A.leq[perm[i]][perm[j]] for i in range(n) for j in range(n))
    mon = tuple(inv[A.monoid[perm[i]][perm[j]]] for i in range(n) for j in range(n))
    return leq_bits, mon


def bound_fixing_permutations(n: int, top: int):
    """Permutations of range(n) fixing 0 and ``top``."""
    if n == 1:
        yield (0,)
        return
    middle = [i for i in range(n) if i not in (0, top)]
    for p in itertools.permutations(middle):
        perm = [0] * n
        perm[0] = 0
        perm[n - 1] = top
        perm[1:n - 1] = p
        yield tuple(perm)


def canonical_encoding(A: FiniteRL) -> tuple:
    """Isomorphism invariant: least encoding over relabellings fixing 0 and 1."""
    return min(_encoding(A, p) for p in bound_fixing_permutations(A.n, A.top))


def is_isomorphic(A: FiniteRL, B: FiniteRL) -> bool:
    return A.n == B.n and canonical_encoding(A) == canonical_encoding(B)

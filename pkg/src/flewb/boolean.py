"""Boolean elements and the unary operators B, D and Delta.

``B a``     greatest Boolean element below ``a``
``D a``     least ``b`` with ``a v b = 1`` (join-complement)
``Delta``   Baaz-Monteiro delta; on a finite algebra it exists iff B
            satisfies the two extra delta equations, and then equals B.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .algebra import FiniteRL
from .errors import DNotAvailable, InternalInvariantViolation, InvalidOperatorTable

Unary = tuple[int, ...]


def _base(A) -> FiniteRL:
    return A.base if isinstance(A, BAlgebra) else A


def is_boolean(A, a: int) -> bool:
    A = _base(A)
    return A.join(a, A.neg(a)) == A.top


def has_complement(A, a: int) -> bool:
    """Lattice-complement test: some b with a meet b = 0 and a join b = 1."""
    A = _base(A)
    return any(A.meet(a, b) == 0 and A.join(a, b) == A.top for b in range(A.n))


def boolean_skeleton(A) -> frozenset[int]:
    A = _base(A)
    return frozenset(a for a in range(A.n) if is_boolean(A, a))


def b_violation(A: FiniteRL, table: Sequence[int]) -> tuple[str, tuple] | None:
    """First failure of (BE1), (BE2) or (BI) for a candidate table."""
    boolean = [a for a in range(A.n) if is_boolean(A, a)]
    for a in range(A.n):
        if not A.le(table[a], a):
            return "BE1", (a,)
    for a in range(A.n):
        if not is_boolean(A, table[a]):
            return "BE2", (a,)
    for a in range(A.n):
        for b in boolean:
            if A.le(b, a) and not A.le(b, table[a]):
                return "BI", (a, b)
    return None


def compute_B(A) -> Unary:
    """B as the join of all Boolean elements below each argument."""
    A = _base(A)
    skeleton = boolean_skeleton(A)
    table = tuple(A.join_all(b for b in skeleton if A.le(b, a)) for a in range(A.n))
    bad = b_violation(A, table)
    if bad is not None:
        name, idx = bad
        raise InternalInvariantViolation(
            f"computed B violates {name} at {A.names(idx)}"
        )
    return table


class OperatorResult(NamedTuple):
    """Outcome of computing a partial operator: ``table`` is None when absent.

    ``witness`` describes the failure: ``(equation or element, {var: name})``.
    """

    exists: bool
    table: Unary | None
    witness: tuple | None = None


def compute_D(A) -> OperatorResult:
    A = _base(A)
    table = []
    for a in range(A.n):
        cands = [b for b in range(A.n) if A.join(a, b) == A.top]
        least = [b for b in cands if all(A.le(b, c) for c in cands)]
        if not least:
            return OperatorResult(False, None, ("no least b with a v b = 1", {"a": A.elements[a]}))
        table.append(least[0])
    return OperatorResult(True, tuple(table))


def delta_violation(A, table: Sequence[int]) -> tuple[str, dict[str, str]] | None:
    """First failing delta equation for ``table`` in canonical order, or None."""
    A = _base(A)
    n, t, names = A.n, table, A.elements
    for x in range(n):
        if A.join(t[x], x) != x:
            return "ΔE1", {"x": names[x]}
    for x in range(n):
        if A.join(t[x], A.neg(t[x])) != A.top:
            return "ΔE2", {"x": names[x]}
    for x, y in itertools.product(range(n), repeat=2):
        lhs, rhs = t[A.join(x, y)], A.join(t[x], t[y])
        if A.join(lhs, rhs) != rhs:
            return "ΔI1", {"x": names[x], "y": names[y]}
    if t[A.top] != A.top:
        return "ΔI2", {}
    for x in range(n):
        if A.join(t[x], t[t[x]]) != t[t[x]]:
            return "ΔI3", {"x": names[x]}
    for x, y in itertools.product(range(n), repeat=2):
        lhs, rhs = t[A.imp(x, y)], A.imp(t[x], t[y])
        if A.join(lhs, rhs) != rhs:
            return "ΔI4", {"x": names[x], "y": names[y]}
    return None


def compute_Delta(A) -> OperatorResult:
    """Delta exists iff the B table satisfies the delta equations; then Delta = B."""
    A = _base(A)
    b = compute_B(A)
    bad = delta_violation(A, b)
    if bad is not None:
        return OperatorResult(False, None, bad)
    return OperatorResult(True, b)


@dataclass(frozen=True)
class BAlgebra:
    """A residuated lattice together with its B table and, when they exist, D and Delta.

    Lattice operations are forwarded to ``base`` so ``A.meet`` etc. work directly.
    """

    base: FiniteRL
    b_table: Unary
    d_table: Unary | None
    delta_table: Unary | None
    d_exists: bool
    delta_exists: bool

    def __getattr__(self, item):
        if item == "base":
            raise AttributeError(item)
        return getattr(self.base, item)

    def __len__(self) -> int:
        return self.base.n

    def __repr__(self) -> str:
        return f"<BAlgebra over {self.base!r} delta={self.delta_exists}>"

    def B(self, a: int) -> int:
        return self.b_table[a]

    def D(self, a: int) -> int:
        if self.d_table is None:
            raise DNotAvailable("D does not exist in this algebra")
        return self.d_table[a]

    def Delta(self, a: int) -> int:
        if self.delta_table is None:
            raise DNotAvailable("Delta does not exist in this algebra")
        return self.delta_table[a]

    def unary_table(self, op: str) -> Unary:
        if op == "B":
            return self.b_table
        if op == "D":
            if self.d_table is None:
                raise DNotAvailable("D does not exist in this algebra")
            return self.d_table
        if op in ("Delta", "Δ"):
            if self.delta_table is None:
                raise DNotAvailable("Delta does not exist in this algebra")
            return self.delta_table
        raise KeyError(op)


def make_balgebra(
    A: FiniteRL,
    b_table: Sequence[int] | None = None,
    d_table: Sequence[int] | None = None,
    delta_table: Sequence[int] | None = None,
) -> BAlgebra:
    """Pair ``A`` with its operators, checking any supplied tables.

    Supplied tables must coincide with the operators' defining conditions;
    otherwise :class:`InvalidOperatorTable` is raised with a witness.
    """
    if isinstance(A, BAlgebra):
        A = A.base
    if b_table is not None:
        b_table = tuple(b_table)
        bad = b_violation(A, b_table)
        if bad is not None:
            raise InvalidOperatorTable(f"B table violates {bad[0]}", A.names(bad[1]))
    else:
        b_table = compute_B(A)

    d = compute_D(A)
    if d_table is not None:
        d_table = tuple(d_table)
        if not d.exists or d_table != d.table:
            wrong = next(
                (a for a in range(A.n) if d.table is None or d_table[a] != d.table[a]), 0
            )
            raise InvalidOperatorTable(
                "D table is not the least b with a v b = 1", (A.elements[wrong],)
            )
    else:
        d_table = d.table

    delta = compute_Delta(A)
    if delta_table is not None:
        delta_table = tuple(delta_table)
        bad = delta_violation(A, delta_table)
        if bad is not None:
            raise InvalidOperatorTable(
                f"Delta table violates {bad[0]}", tuple(bad[1].values())
            )
    else:
        delta_table = delta.table

    return BAlgebra(A, b_table, d_table, delta_table, d_table is not None, delta_table is not None)


def iterate_negD(A: BAlgebra, a: int, n: int) -> int:
    """Apply ``~D`` to ``a`` n times."""
    if not A.d_exists:
        raise DNotAvailable("D does not exist in this algebra")
    for _ in range(n):
        a = A.neg(A.d_table[a])
    return a


def negD_power(A: BAlgebra, n: int) -> Unary:
    return tuple(iterate_negD(A, a, n) for a in range(A.n))


def negD_stabilization_index(A: BAlgebra) -> int:
    """Least n >= 1 with (~D)^(n+1) = (~D)^n as tables."""
    if not A.d_exists:
        raise DNotAvailable("D does not exist in this algebra")
    current = negD_power(A, 1)
    for n in range(1, A.n + 1):
        nxt = tuple(A.neg(A.d_table[v]) for v in current)
        if nxt == current:
            return n
        current = nxt
    raise InternalInvariantViolation("(~D)^n did not stabilise within |A| steps")


def B_from_negD(A: BAlgebra) -> Unary:
    """Meet of the iterates (~D)^n a for n = 0..|A|."""
    return tuple(A.meet_all(iterate_negD(A, a, k) for k in range(A.n + 1)) for a in range(A.n))


# Modalities: words over {"~", "B"}, applied right to left.

@dataclass(frozen=True)
class Modality:
    word: tuple[str, ...]
    table: Unary

    @property
    def label(self) -> str:
        return "".join(self.word) or "Id"

    def apply(self, a: int) -> int:
        return self.table[a]


def apply_word(A: BAlgebra, word: Sequence[str], a: int) -> int:
    for letter in reversed(word):
        a = A.neg(a) if letter == "~" else A.b_table[a]
    return a


def word_table(A: BAlgebra, word: Sequence[str]) -> Unary:
    return tuple(apply_word(A, word, a) for a in range(A.n))


def _closure(algebras: Sequence[BAlgebra]) -> list[tuple[tuple[str, ...], tuple[Unary, ...]]]:
    start = tuple(tuple(range(A.n)) for A in algebras)
    seen = {start: ()}
    order = [((), start)]
    queue = deque([((), start)])
    while queue:
        word, tables = queue.popleft()
        for letter in ("B", "~"):
            new = tuple(
                tuple((A.neg(v) if letter == "~" else A.b_table[v]) for v in t)
                for A, t in zip(algebras, tables)
            )
            if new not in seen:
                seen[new] = (letter,) + word
                order.append(((letter,) + word, new))
                queue.append(((letter,) + word, new))
    return order


def modalities(A: BAlgebra) -> list[Modality]:
    """Distinct maps generated from Id by postcomposing ~ and B, shortest words first."""
    return [Modality(word, tables[0]) for word, tables in _closure([A])]


def joint_modalities(algebras: Iterable[BAlgebra]) -> list[tuple[str, ...]]:
    """Words giving distinct maps on at least one of ``algebras``."""
    return [word for word, _ in _closure(list(algebras))]


def pointwise_le(A, f: Sequence[int], g: Sequence[int]) -> bool:
    A = _base(A)
    return all(A.le(f[a], g[a]) for a in range(A.n))


def modality_order(A: BAlgebra, mods: Sequence[Modality]) -> list[tuple[int, int]]:
    """Cover pairs (i, j) of the pointwise order between the given modalities."""
    n = len(mods)
    le = [[pointwise_le(A, mods[i].table, mods[j].table) for j in range(n)] for i in range(n)]
    out = []
    for i in range(n):
        for j in range(n):
            if i != j and le[i][j] and not any(
                k not in (i, j) and le[i][k] and le[k][j] for k in range(n)
            ):
                out.append((i, j))
    return out

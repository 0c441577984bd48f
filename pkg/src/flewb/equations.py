"""Terms, equations and quasi-equations evaluated over finite algebras.

Variables of an equation are the union of the variables of both sides; an
assignment ranges over all of them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .algebra import FiniteRL, chain, product
from .boolean import BAlgebra, is_boolean
from .errors import FixtureMismatch, OperatorNotAvailable, UnboundVariable
from .syntax import (
    ONE, ZERO, Binary, Const, Formula, Unary, Var, B, D, Delta, disj, neg,
    parse_relation, to_text, var, variables,
)

Assignment = dict[str, int]


@dataclass(frozen=True)
class Equation:
    """``lhs ≈ rhs``. Inequalities are stored already desugared to ``lhs ∨ rhs ≈ rhs``."""

    lhs: Formula
    rhs: Formula
    name: str = ""
    derivable: bool = field(default=False, compare=False)

    @classmethod
    def leq(cls, lhs: Formula, rhs: Formula, name: str = "", derivable: bool = False) -> "Equation":
        return cls(disj(lhs, rhs), rhs, name, derivable)

    @classmethod
    def parse(cls, text: str, name: str = "") -> "Equation":
        lhs, rel, rhs = parse_relation(text)
        return cls.leq(lhs, rhs, name) if rel == "<=" else cls(lhs, rhs, name)

    @property
    def variables(self) -> list[str]:
        return sorted(variables(self.lhs) | variables(self.rhs))

    def __str__(self) -> str:
        label = f"({self.name}) " if self.name else ""
        return f"{label}{to_text(self.lhs)} = {to_text(self.rhs)}"


@dataclass(frozen=True)
class QuasiEquation:
    """``premises ⇒ conclusion``; the conclusion is a single equation."""

    premises: tuple[Equation, ...]
    conclusion: Equation
    name: str = ""

    @property
    def variables(self) -> list[str]:
        names: set[str] = set(self.conclusion.variables)
        for p in self.premises:
            names |= set(p.variables)
        return sorted(names)


def _table(A, op: str, overrides: Mapping[str, Sequence[int] | None]) -> Sequence[int]:
    if op in overrides and overrides[op] is not None:
        return overrides[op]
    if isinstance(A, BAlgebra):
        table = {"B": A.b_table, "D": A.d_table, "Delta": A.delta_table}[op]
        if table is not None:
            return table
    raise OperatorNotAvailable(f"operator {op} is not available on this algebra")


def eval_term(A, t: Formula, assignment: Mapping[str, int], **overrides: Sequence[int] | None) -> int:
    """Evaluate ``t``; ``B=``, ``D=``, ``Delta=`` replace the algebra's own tables."""
    base = A.base if isinstance(A, BAlgebra) else A
    cache: dict[Formula, int] = {}

    def ev(f: Formula) -> int:
        hit = cache.get(f)
        if hit is not None:
            return hit
        if isinstance(f, Var):
            try:
                v = assignment[f.name]
            except KeyError:
                raise UnboundVariable(f.name) from None
        elif isinstance(f, Const):
            v = base.top if f.value else 0
        elif isinstance(f, Unary):
            v = _table(A, f.op, overrides)[ev(f.arg)]
        else:
            a, b = ev(f.left), ev(f.right)
            if f.op == "and":
                v = base.meet_table[a][b]
            elif f.op == "or":
                v = base.join_table[a][b]
            elif f.op == "mul":
                v = base.monoid[a][b]
            else:
                v = base.residuum[a][b]
        cache[f] = v
        return v

    return ev(t)


def assignments(A, names: Sequence[str]) -> Iterator[Assignment]:
    """All assignments in canonical order: lexicographic over sorted variable names."""
    for values in itertools.product(range(A.n if not isinstance(A, BAlgebra) else A.base.n), repeat=len(names)):
        yield dict(zip(names, values))


def holds(A, e: Equation | QuasiEquation, **overrides) -> tuple[bool, Assignment | None]:
    """Exhaustive check; returns ``(True, None)`` or ``(False, first counterexample)``."""
    names = e.variables
    for asg in assignments(A, names):
        if isinstance(e, QuasiEquation):
            if not all(
                eval_term(A, p.lhs, asg, **overrides) == eval_term(A, p.rhs, asg, **overrides)
                for p in e.premises
            ):
                continue
            c = e.conclusion
        else:
            c = e
        if eval_term(A, c.lhs, asg, **overrides) != eval_term(A, c.rhs, asg, **overrides):
            return False, asg
    return True, None


def named_counterexample(A, asg: Assignment | None) -> dict[str, str] | None:
    if asg is None:
        return None
    base = A.base if isinstance(A, BAlgebra) else A
    return {k: base.elements[v] for k, v in asg.items()}


# ------------------------------------------------------------------ bases

x, y = var("x"), var("y")


def basis_B() -> list[Equation]:
    """Equational basis for B relative to residuated lattices."""
    return [
        Equation.leq(B(x), x, "BE1"),
        Equation(disj(B(x), neg(B(x))), ONE, "BE2"),
        Equation.leq(B(x), B(disj(x, y)), "BI1"),
        Equation(B(ONE), ONE, "BI2"),
        Equation.leq(B(disj(x, neg(x))), disj(B(x), neg(x)), "BI3"),
    ]


def basis_Delta() -> list[Equation]:
    return [
        Equation.leq(Delta(x), x, "ΔE1"),
        Equation(disj(Delta(x), neg(Delta(x))), ONE, "ΔE2"),
        Equation.leq(Delta(disj(x, y)), disj(Delta(x), Delta(y)), "ΔI1"),
        Equation(Delta(ONE), ONE, "ΔI2"),
        Equation.leq(Delta(x), Delta(Delta(x)), "ΔI3", derivable=True),
        Equation.leq(Delta(Binary("imp", x, y)), Binary("imp", Delta(x), Delta(y)), "ΔI4"),
    ]


def basis_D(simplified: bool = True) -> list[Equation]:
    """Equations for D; the simplified form replaces DI and DE1 by DI′ and DE1′."""
    de2 = Equation.leq(D(y), disj(x, D(disj(x, y))), "DE2")
    if simplified:
        return [Equation(disj(x, D(x)), ONE, "DI′"), Equation(D(ONE), ZERO, "DE1′"), de2]
    return [
        Equation.leq(y, disj(x, D(x)), "DI"),
        Equation.leq(D(disj(x, D(x))), y, "DE1"),
        de2,
    ]


def quasi_BI() -> QuasiEquation:
    """b ≤ a and b Boolean imply b ≤ Ba (a := x, b := y)."""
    return QuasiEquation(
        (Equation.leq(y, x), Equation(disj(y, neg(y)), ONE)),
        Equation.leq(y, B(x)),
        "BI",
    )


def failing(A, equations: Sequence[Equation], **overrides) -> list[str]:
    return [e.name for e in equations if not holds(A, e, **overrides)[0]]


# ------------------------------------------------------- independence of B

@dataclass(frozen=True)
class IndependenceFixture:
    label: str
    algebra: FiniteRL
    table: tuple[int, ...]
    expected_failure: str


def independence_fixtures_B() -> list[IndependenceFixture]:
    """One algebra and candidate B per equation of the basis, failing exactly that one."""
    g3, g4 = chain(3, "G3"), chain(4, "G4")
    g33 = product(g3, g3, "G3xG3")
    g22 = product(chain(2, "G2"), chain(2, "G2"), "G2xG2")
    top4 = g4.top
    bool33 = [a for a in range(g33.n) if is_boolean(g33, a)]
    return [
        IndependenceFixture("G3, B0 = 0 else 1", g3, (0, g3.top, g3.top), "BE1"),
        # atom goes to 0, coatom to itself
        IndependenceFixture("G4, atom to 0, coatom fixed", g4, (0, 0, 2, top4), "BE2"),
        IndependenceFixture(
            "G3xG3, Boolean fixed else 0", g33,
            tuple(a if a in bool33 else 0 for a in range(g33.n)), "BI1",
        ),
        IndependenceFixture("G3, B = 0", g3, (0, 0, 0), "BI2"),
        IndependenceFixture(
            "G2xG2, B1 = 1 else 0", g22,
            tuple(g22.top if a == g22.top else 0 for a in range(g22.n)), "BI3",
        ),
    ]


@dataclass(frozen=True)
class IndependenceReport:
    labels: tuple[str, ...]
    equations: tuple[str, ...]
    matrix: tuple[tuple[bool, ...], ...]  # matrix[i][j]: equation j holds on fixture i

    def is_diagonal(self) -> bool:
        return all(
            self.matrix[i][j] == (i != j)
            for i in range(len(self.labels)) for j in range(len(self.equations))
        )


def independence_matrix(fixtures: Sequence[IndependenceFixture] | None = None) -> IndependenceReport:
    fixtures = list(fixtures or independence_fixtures_B())
    eqs = basis_B()
    matrix = tuple(
        tuple(holds(f.algebra, e, B=f.table)[0] for e in eqs) for f in fixtures
    )
    return IndependenceReport(tuple(f.label for f in fixtures), tuple(e.name for e in eqs), matrix)


def check_independence_B(fixtures: Sequence[IndependenceFixture] | None = None) -> IndependenceReport:
    """Raise ``FixtureMismatch`` unless each fixture fails exactly its expected equation."""
    fixtures = list(fixtures or independence_fixtures_B())
    report = independence_matrix(fixtures)
    for f, row in zip(fixtures, report.matrix):
        failed = [e for e, ok in zip(report.equations, row) if not ok]
        if failed != [f.expected_failure]:
            raise FixtureMismatch(f"{f.label}: expected only {f.expected_failure} to fail, got {failed}")
    return report


def satisfies_BE(A: FiniteRL, table: Sequence[int]) -> bool:
    eqs = basis_B()
    return all(holds(A, e, B=table)[0] for e in eqs[:2])


def check_quasi_BI_equivalence(A: FiniteRL, candidate: Sequence[int]) -> bool:
    """Whether {BI1, BI2, BI3} and the quasi-equation BI agree on ``candidate``."""
    A = A.base if isinstance(A, BAlgebra) else A
    candidate = tuple(candidate)
    equational = all(holds(A, e, B=candidate)[0] for e in basis_B()[2:])
    quasi = holds(A, quasi_BI(), B=candidate)[0]
    return equational == quasi


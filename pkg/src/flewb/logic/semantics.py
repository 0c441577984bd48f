"""Evaluation of formulas and bounded countermodel search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence, Union

from ..algebra import FiniteRL
from ..boolean import BAlgebra, make_balgebra
from ..enumerate import MAX_ENUMERATION_SIZE, algebras_of_size
from ..equations import eval_term
from ..errors import SizeBoundExceeded
from ..syntax import Formula, variables

Valuation = dict[str, int]


def eval_formula(A, f: Formula, v: Mapping[str, int]) -> int:
    """Value of ``f`` under ``v``; B is read from the algebra's B table."""
    return eval_term(A, f, v)


def _top(A) -> int:
    return A.base.top if isinstance(A, BAlgebra) else A.top


def refutes(A, gamma: Sequence[Formula], phi: Formula, v: Mapping[str, int]) -> bool:
    """Every premise is 1 under ``v`` and ``phi`` is not."""
    top = _top(A)
    return all(eval_formula(A, g, v) == top for g in gamma) and eval_formula(A, phi, v) != top


@dataclass(frozen=True)
class Valid:
    """No countermodel among algebras of size at most ``bound``. Not a proof."""

    bound: int
    algebras_checked: int

    def __str__(self) -> str:
        return f"valid up to size {self.bound} ({self.algebras_checked} algebras checked)"


@dataclass(frozen=True)
class Countermodel:
    algebra: BAlgebra | FiniteRL
    valuation: Valuation

    @property
    def size(self) -> int:
        return len(self.algebra)

    def named_valuation(self) -> dict[str, str]:
        base = self.algebra.base if isinstance(self.algebra, BAlgebra) else self.algebra
        return {k: base.elements[x] for k, x in self.valuation.items()}

    def __str__(self) -> str:
        pairs = ", ".join(f"{k} = {x}" for k, x in self.named_valuation().items())
        return f"countermodel of size {self.size}: {pairs}"


Verdict = Union[Valid, Countermodel]


@lru_cache(maxsize=None)
def _balgebras(n: int) -> tuple[BAlgebra, ...]:
    return tuple(make_balgebra(A) for A in algebras_of_size(n))


def search_space(max_size: int, use_b: bool = True):
    """Algebras in canonical order, smallest first."""
    if not 1 <= max_size <= MAX_ENUMERATION_SIZE:
        raise SizeBoundExceeded(f"max_size must lie in 1..{MAX_ENUMERATION_SIZE}, got {max_size}")
    for n in range(1, max_size + 1):
        yield from (_balgebras(n) if use_b else algebras_of_size(n))


def decide(gamma: Sequence[Formula], phi: Formula, max_size: int = 4, use_b: bool = True) -> Verdict:
    """First countermodel to ``gamma ⊨ phi``, algebras before valuations.

    With ``use_b=False`` the search runs over plain residuated lattices and
    the formulas must not mention B.
    """
    gamma = tuple(gamma)
    names = sorted(set().union(variables(phi), *(variables(g) for g in gamma)))
    checked = 0
    for A in search_space(max_size, use_b):
        checked += 1
        top = _top(A)
        for values in itertools.product(range(len(A)), repeat=len(names)):
            v = dict(zip(names, values))
            if eval_formula(A, phi, v) == top:
                continue
            if all(eval_formula(A, g, v) == top for g in gamma):
                return Countermodel(A, v)
    return Valid(max_size, checked)

"""Axiom schemas and schema matching.

In a schema every variable is a metavariable: ``p``, ``q``, ``r`` stand for
arbitrary formulas. Names with two parts (A3, A4, A10) hold two schemas;
a step justified by that name may instantiate either.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from ..syntax import Binary, Const, Formula, Unary, Var, parse, substitute

_BASE = {
    "A1": ["(p -> q) -> (q -> r) -> p -> r"],
    "A2": ["(r -> p) -> (r -> q) -> r -> p /\\ q"],
    "A3": ["p /\\ q -> p", "p /\\ q -> q"],
    "A4": ["p -> p \\/ q", "q -> p \\/ q"],
    "A5": ["(p -> r) -> (q -> r) -> p \\/ q -> r"],
    "A6": ["p * q -> q * p"],
    "A7": ["p * q -> p"],
    "A8": ["(p -> q -> r) -> p * q -> r"],
    "A9": ["(p * q -> r) -> p -> q -> r"],
    "A10": ["0 -> p", "p -> 1"],
    "B1": ["B p -> p"],
    "B2": ["B p \\/ ~B p"],
    "B3": ["B (p \\/ ~p) -> B p \\/ ~p"],
    "B4": ["B (p -> q) -> B p -> B q"],
}

_EXTENSIONS = {
    "Contr": ["p -> p * p"],
    "Prel": ["(p -> q) \\/ (q -> p)"],
    "PC": ["~(p /\\ ~p)"],
    "WNM": ["~(p * q) \\/ (p /\\ q -> p * q)"],
    "Inv": ["~~p -> p"],
    "Div": ["p /\\ q -> p * (p -> q)"],
    "C": ["~p \\/ ((p -> p * q) -> q)"],
}

BASE_AXIOMS = tuple(_BASE)
EXTENSION_AXIOMS = tuple(_EXTENSIONS)


@lru_cache(maxsize=None)
def schemas(name: str) -> tuple[Formula, ...]:
    texts = _BASE.get(name) or _EXTENSIONS.get(name)
    if texts is None:
        raise KeyError(name)
    return tuple(parse(t) for t in texts)


def schema(name: str, part: int = 0) -> Formula:
    return schemas(name)[part]


def instance(name: str, part: int = 0, **binding: Formula) -> Formula:
    """``instance("A1", p=a, q=b, r=c)``; unbound metavariables stay as they are."""
    return substitute(schema(name, part), binding)


def match(pattern: Formula, target: Formula, binding: dict[str, Formula] | None = None) -> dict[str, Formula] | None:
    """One-way unification of a schema against a formula."""
    binding = dict(binding or {})

    def go(s: Formula, t: Formula) -> bool:
        if isinstance(s, Var):
            bound = binding.get(s.name)
            if bound is None:
                binding[s.name] = t
                return True
            return bound == t
        if isinstance(s, Const):
            return s == t
        if isinstance(s, Unary):
            return isinstance(t, Unary) and s.op == t.op and go(s.arg, t.arg)
        return (
            isinstance(t, Binary) and s.op == t.op
            and go(s.left, t.left) and go(s.right, t.right)
        )

    return binding if go(pattern, target) else None


def available(extensions=()) -> tuple[str, ...]:
    unknown = [e for e in extensions if e not in _EXTENSIONS]
    if unknown:
        raise KeyError(f"unknown extension axioms: {unknown}")
    return BASE_AXIOMS + tuple(e for e in EXTENSION_AXIOMS if e in extensions)


def matches_axiom(name: str, formula: Formula, inst: Mapping[str, Formula] | None = None) -> bool:
    for s in schemas(name):
        if inst is not None:
            if substitute(s, dict(inst)) == formula:
                return True
        elif match(s, formula) is not None:
            return True
    return False


def find_axiom(formula: Formula, extensions=()) -> str | None:
    """Name of the first axiom schema ``formula`` instantiates, if any."""
    for name in available(extensions):
        if matches_axiom(name, formula):
            return name
    return None

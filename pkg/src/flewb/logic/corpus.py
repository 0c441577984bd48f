"""A library of checked proofs.

Theorems are built over the object variables p, q, r. ``designated`` marks
the hypothesis that the deduction-theorem tests discharge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from ..syntax import ONE, ZERO, B, Formula, conj, fuse, imp, neg, var
from .axioms import BASE_AXIOMS, instance, schemas
from .builder import ProofBuilder
from .proofs import Axiom, Proof, Step

p, q, r = var("p"), var("q"), var("r")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    proof: Proof
    designated: int | None = None  # hypothesis index for the deduction theorem


def _axiom_proofs() -> list[CorpusEntry]:
    out = []
    for name in BASE_AXIOMS:
        parts = schemas(name)
        for k in range(len(parts)):
            label = name if len(parts) == 1 else f"{name}{'ab'[k]}"
            f = instance(name, k, p=p, q=q, r=r)
            out.append(CorpusEntry(f"axiom {label}", Proof((), (Step(f, Axiom(name)),), f"axiom {label}")))
    return out


def _theorem(name: str, build: Callable[[ProofBuilder], int], hypotheses=(), designated=None) -> CorpusEntry:
    b = ProofBuilder(hypotheses, name=name)
    return CorpusEntry(name, b.finish(build(b)), designated)


def _assoc(b: ProofBuilder, a: Formula, c: Formula, d: Formula) -> int:
    """⊢ a·(c·d) ↔ (a·c)·d."""
    x = fuse(fuse(a, c), d)
    # a -> c -> d -> (a·c)·d, then fold c, d and a
    acd = b.mp(b.mp(b.identity(x), b.ax("A9", p=fuse(a, c), q=d, r=x)), b.ax("A9", p=a, q=c, r=imp(d, x)))
    a_cd = b.trans(acd, b.ax("A8", p=c, q=d, r=x))
    forward = b.mp(a_cd, b.ax("A8", p=a, q=fuse(c, d), r=x))
    y = fuse(a, fuse(c, d))
    a_cd_y = b.mp(b.identity(y), b.ax("A9", p=a, q=fuse(c, d), r=y))
    a_c_d_y = b.trans(a_cd_y, b.ax("A9", p=c, q=d, r=y))
    ac_d_y = b.mp(a_c_d_y, b.ax("A8", p=a, q=c, r=imp(d, y)))
    backward = b.mp(ac_d_y, b.ax("A8", p=fuse(a, c), q=d, r=y))
    return b.adjoin(forward, backward)


def _times_one(b: ProofBuilder, a: Formula) -> int:
    """⊢ a → a·1."""
    return b.mp(b.one(), b.swap(b.pair(a, ONE)))


def _one_imp(b: ProofBuilder, a: Formula) -> int:
    """⊢ (1 → a) → a."""
    return b.mp(b.one(), b.swap(b.identity(imp(ONE, a))))


def _excluded_nc(b: ProofBuilder, a: Formula) -> int:
    """⊢ (a ∨ ~a) → ~(a ∧ ~a)."""
    both = conj(a, neg(a))
    goal = neg(both)
    left = b.swap(b.ax("A3", 1, p=a, q=neg(a)))                # a -> ~(a /\ ~a)
    right = b.suffix(b.ax("A3", 0, p=a, q=neg(a)), ZERO)         # ~a -> ~(a /\ ~a)
    a5 = b.ax("A5", p=a, q=neg(a), r=goal)
    return b.mp(right, b.mp(left, a5))


def _theorems() -> list[CorpusEntry]:
    T = _theorem
    return [
        T("weakening", lambda b: b.k(p, q)),
        T("identity", lambda b: b.identity(p)),
        T("times one", lambda b: _times_one(b, p)),
        T("times one, converse", lambda b: b.ax("A7", p=p, q=ONE)),
        T("fusion associativity", lambda b: _assoc(b, p, q, r)),
        T("fused modus ponens", lambda b: b.modus(p, q)),
        T("one implies", lambda b: _one_imp(b, p)),
        T("implies one", lambda b: b.k(p, ONE)),
        T("excluded middle against contradiction", lambda b: _excluded_nc(b, p)),
        T("provable one", lambda b: b.one()),
        T("permutation", lambda b: b.swap(b.identity(imp(p, imp(q, r))))),
        T("ex falso for negation", lambda b: b.ex_falso_neg(p, q)),
        T("pairing", lambda b: b.pair(p, q)),
        T("B contraction", lambda b: b.b_square(p)),
        T("B idempotent", lambda b: b.b_idempotent(p)),
        T("B2 twice", lambda b: b.ax("B2", p=B(p))),
        T("B monotone on axioms", lambda b: b.mp(b.b(b.ax("A3", 0, p=p, q=q)), b.ax("B4", p=conj(p, q), q=p))),
        T("B of one", lambda b: b.b(b.one())),
    ]


def _derivations() -> list[CorpusEntry]:
    T = _theorem
    return [
        T("transitivity rule", lambda b: b.trans(b.hyp(0), b.hyp(1)), (imp(p, q), imp(q, r)), 0),
        T("adjunction rule", lambda b: b.adjoin(b.hyp(0), b.hyp(1)), (p, q), 1),
        T("modus ponens", lambda b: b.mp(b.hyp(0), b.hyp(1)), (p, imp(p, q)), 0),
        T("modus ponens, major discharged", lambda b: b.mp(b.hyp(0), b.hyp(1)), (p, imp(p, q)), 1),
        T("rule B", lambda b: b.b(b.hyp(0)), (p,), 0),
        T("hypothesis", lambda b: b.hyp(0), (p,), 0),
        T("B lift", lambda b: b.b_lift(b.hyp(0)), (imp(B(p), q),), 0),
        T("B modus ponens", lambda b: b.mp(b.b(b.hyp(0)), b.mp(b.b(b.hyp(1)), b.ax("B4", p=p, q=q))), (p, imp(p, q)), 1),
        T("B under hypotheses", lambda b: b.b(b.mp(b.hyp(0), b.hyp(1))), (p, imp(p, q)), 0),
        T("axiom alongside hypothesis", lambda b: b.mp(b.hyp(0), b.k(p, q)), (p,), 0),
    ]


@lru_cache(maxsize=None)
def corpus() -> tuple[CorpusEntry, ...]:
    return tuple(_axiom_proofs() + _theorems() + _derivations())


def corpus_entry(name: str) -> CorpusEntry:
    for e in corpus():
        if e.name == name:
            return e
    raise KeyError(name)


B_IDEMPOTENT_DISPLAY = (
    "B p \\/ ~B p",
    "B (B p \\/ ~B p)",
    "B B p \\/ ~B p",
    "B B p -> B p -> B B p",
    "~B p -> B p -> B B p",
    "B p -> B B p",
)
"""The six formulas of the short derivation of Bp → BBp, in order."""

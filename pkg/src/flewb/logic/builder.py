"""Incremental construction of checked proofs.

Every method appends only primitive steps (axiom instances, hypotheses,
modus ponens, rule B) and returns the index of the step holding the
requested formula. A formula already on the tape is reused, never repeated.
"""

from __future__ import annotations

from typing import Sequence

from ..syntax import ZERO, Binary, Formula, B, fuse, imp, neg
from .axioms import instance
from .proofs import MP, Axiom, Hypothesis, Proof, RuleB, Step, check_proof


class ProofBuilder:
    def __init__(self, hypotheses: Sequence[Formula] = (), name: str = ""):
        self.hypotheses = tuple(hypotheses)
        self.name = name
        self.steps: list[Step] = []
        self._index: dict[Formula, int] = {}

    # -------------------------------------------------------- primitives

    def formula(self, i: int) -> Formula:
        return self.steps[i].formula

    def has(self, f: Formula) -> int | None:
        return self._index.get(f)

    def add(self, f: Formula, why) -> int:
        known = self._index.get(f)
        if known is not None:
            return known
        self.steps.append(Step(f, why))
        self._index[f] = len(self.steps) - 1
        return len(self.steps) - 1

    def ax(self, name: str, part: int = 0, **binding: Formula) -> int:
        return self.add(instance(name, part, **binding), Axiom(name))

    def axiom(self, name: str, f: Formula) -> int:
        """Add ``f`` as an instance of ``name`` (checked when the proof is built)."""
        return self.add(f, Axiom(name))

    def hyp(self, k: int) -> int:
        return self.add(self.hypotheses[k], Hypothesis(k))

    def mp(self, minor: int, major: int) -> int:
        m = self.formula(major)
        if not (isinstance(m, Binary) and m.op == "imp" and m.left == self.formula(minor)):
            raise ValueError(f"modus ponens does not apply to steps {minor + 1}, {major + 1}")
        return self.add(m.right, MP(minor, major))

    def b(self, i: int) -> int:
        return self.add(B(self.formula(i)), RuleB(i))

    def build(self, check: bool = True) -> Proof:
        proof = Proof(self.hypotheses, tuple(self.steps), self.name)
        if check:
            check_proof(proof).raise_for_error()
        return proof

    def finish(self, i: int, check: bool = True) -> Proof:
        """Build a proof whose last step holds the formula of step ``i``."""
        if i != len(self.steps) - 1:
            # restate the target last: from f and f -> f, modus ponens gives f
            f = self.formula(i)
            top = self.identity(f)
            self.steps.append(Step(f, MP(i, top)))
        return self.build(check)

    # ------------------------------------------------------ derived rules

    def zero_zero(self) -> int:
        """⊢ 0 → 0."""
        return self.ax("A10", 0, p=ZERO)

    def one(self) -> int:
        """⊢ 1."""
        return self.mp(self.zero_zero(), self.ax("A10", 1, p=imp(ZERO, ZERO)))

    def trans(self, i: int, j: int) -> int:
        """From a → b and b → c derive a → c."""
        ab, bc = self.formula(i), self.formula(j)
        a1 = self.ax("A1", p=ab.left, q=ab.right, r=bc.right)
        return self.mp(j, self.mp(i, a1))

    def swap(self, i: int) -> int:
        """From a → (b → c) derive b → (a → c)."""
        f = self.formula(i)
        a, b, c = f.left, f.right.left, f.right.right
        ab_c = self.mp(i, self.ax("A8", p=a, q=b, r=c))
        ba_c = self.trans(self.ax("A6", p=b, q=a), ab_c)
        return self.mp(ba_c, self.ax("A9", p=b, q=a, r=c))

    def k(self, a: Formula, b: Formula) -> int:
        """⊢ a → (b → a)."""
        return self.mp(self.ax("A7", p=a, q=b), self.ax("A9", p=a, q=b, r=a))

    def weaken(self, i: int, b: Formula) -> int:
        """From a derive b → a."""
        return self.mp(i, self.k(self.formula(i), b))

    def identity(self, a: Formula) -> int:
        """⊢ a → a."""
        zz = imp(ZERO, ZERO)
        k = self.k(a, zz)  # a -> (0->0) -> a
        return self.mp(self.zero_zero(), self.swap(k))

    def prefix(self, i: int, a: Formula) -> int:
        """From b → c derive (a → b) → (a → c)."""
        bc = self.formula(i)
        a1 = self.ax("A1", p=a, q=bc.left, r=bc.right)
        return self.mp(i, self.swap(a1))

    def suffix(self, i: int, c: Formula) -> int:
        """From a → b derive (b → c) → (a → c)."""
        ab = self.formula(i)
        return self.mp(i, self.ax("A1", p=ab.left, q=ab.right, r=c))

    def pair(self, a: Formula, b: Formula) -> int:
        """⊢ a → (b → a·b)."""
        ab = fuse(a, b)
        return self.mp(self.identity(ab), self.ax("A9", p=a, q=b, r=ab))

    def fuse_mono(self, i: int, j: int) -> int:
        """From a → c and b → d derive a·b → c·d."""
        ac, bd = self.formula(i), self.formula(j)
        a, c, b, d = ac.left, ac.right, bd.left, bd.right
        cd = fuse(c, d)
        a_d_cd = self.trans(i, self.pair(c, d))           # a -> d -> c·d
        a_b_cd = self.trans(a_d_cd, self.suffix(j, cd))   # a -> b -> c·d
        return self.mp(a_b_cd, self.ax("A8", p=a, q=b, r=cd))

    def modus(self, a: Formula, b: Formula) -> int:
        """⊢ a·(a → b) → b."""
        swapped = self.swap(self.identity(imp(a, b)))     # a -> (a->b) -> b
        return self.mp(swapped, self.ax("A8", p=a, q=imp(a, b), r=b))

    def adjoin(self, i: int, j: int) -> int:
        """From a and b derive a ∧ b."""
        a, b = self.formula(i), self.formula(j)
        zz = imp(ZERO, ZERO)
        a2 = self.ax("A2", p=a, q=b, r=zz)
        step = self.mp(self.weaken(j, zz), self.mp(self.weaken(i, zz), a2))
        return self.mp(self.zero_zero(), step)

    def cases(self, i: int, j: int, k: int) -> int:
        """From a → c, b → c and a ∨ b derive c."""
        ac, bc = self.formula(i), self.formula(j)
        a5 = self.ax("A5", p=ac.left, q=bc.left, r=ac.right)
        return self.mp(k, self.mp(j, self.mp(i, a5)))

    def ex_falso_neg(self, a: Formula, b: Formula) -> int:
        """⊢ ~a → (a → b)."""
        return self.prefix(self.ax("A10", 0, p=b), a)

    def boolean_square(self, a: Formula, excluded_middle: int) -> int:
        """From a ∨ ~a derive a → a·a."""
        target = imp(a, fuse(a, a))
        first = self.pair(a, a)                    # a -> a -> a·a
        second = self.ex_falso_neg(a, fuse(a, a))  # ~a -> a -> a·a
        a5 = self.ax("A5", p=a, q=neg(a), r=target)
        return self.mp(excluded_middle, self.mp(second, self.mp(first, a5)))

    # ------------------------------------------------ B-specific lemmas

    def b_idempotent(self, a: Formula) -> int:
        """⊢ Ba → BBa."""
        ba = B(a)
        em = self.ax("B2", p=a)                             # Ba v ~Ba
        bem = self.b(em)                                    # B(Ba v ~Ba)
        step3 = self.mp(bem, self.ax("B3", p=ba))           # BBa v ~Ba
        goal = imp(ba, B(ba))
        first = self.k(B(ba), ba)                           # BBa -> Ba -> BBa
        second = self.ex_falso_neg(ba, B(ba))               # ~Ba -> Ba -> BBa
        a5 = self.ax("A5", p=B(ba), q=neg(ba), r=goal)
        return self.mp(step3, self.mp(second, self.mp(first, a5)))

    def b_lift(self, i: int) -> int:
        """From Ba → c derive Ba → Bc."""
        f = self.formula(i)
        ba, c = f.left, f.right
        b4 = self.mp(self.b(i), self.ax("B4", p=ba, q=c))   # BBa -> Bc
        return self.trans(self.b_idempotent(ba.arg), b4)

    def b_square(self, a: Formula) -> int:
        """⊢ Ba → Ba·Ba."""
        return self.boolean_square(B(a), self.ax("B2", p=a))

    def b_mp(self, i: int, j: int, ba: Formula) -> int:
        """From Ba → c and Ba → (c → d) derive Ba → d."""
        c_cd = self.fuse_mono(i, j)                     # Ba·Ba -> c·(c->d)
        cd = self.formula(j).right
        m = self.modus(cd.left, cd.right)               # c·(c->d) -> d
        return self.trans(self.trans(self.b_square(ba.arg), c_cd), m)


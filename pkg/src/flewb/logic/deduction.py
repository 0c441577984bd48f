"""The B-deduction theorem as a proof transformer.

``Γ, φ ⊢ ψ`` becomes ``Γ ⊢ Bφ → ψ`` step by step: every step χ of the input
is turned into a derivation of ``Bφ → χ``.
"""

from __future__ import annotations

from ..errors import HypothesisNotFound, ProofDoesNotCheck
from ..syntax import B, Binary, Unary, imp
from .builder import ProofBuilder
from .proofs import MP, Axiom, Hypothesis, Proof, RuleB, Step, check_proof


def _require_valid(proof: Proof, extensions=()) -> None:
    verdict = check_proof(proof, extensions)
    if not verdict.ok:
        raise ProofDoesNotCheck(str(verdict.error))


def deduction_transform(proof: Proof, hypothesis: int, extensions=()) -> Proof:
    """Discharge hypothesis ``hypothesis`` (0-based) as a B-guarded antecedent."""
    _require_valid(proof, extensions)
    if not 0 <= hypothesis < len(proof.hypotheses):
        raise HypothesisNotFound(f"no hypothesis {hypothesis + 1}")
    phi = proof.hypotheses[hypothesis]
    bphi = B(phi)
    rest = proof.hypotheses[:hypothesis] + proof.hypotheses[hypothesis + 1:]
    out = ProofBuilder(rest, name=f"{proof.name} (deduced)" if proof.name else "")

    def renumber(k: int) -> int:
        return k if k < hypothesis else k - 1

    guarded: list[int] = []  # guarded[i]: index in ``out`` of Bφ → χ_i
    for step in proof.steps:
        chi, why = step.formula, step.why
        if isinstance(why, Hypothesis) and why.index == hypothesis:
            g = out.ax("B1", p=phi)
        elif isinstance(why, (Axiom, Hypothesis)):
            if isinstance(why, Axiom):
                base = out.axiom(why.name, chi)
            else:
                base = out.hyp(renumber(why.index))
            g = out.weaken(base, bphi)
        elif isinstance(why, MP):
            g = out.b_mp(guarded[why.minor], guarded[why.major], bphi)
        elif isinstance(why, RuleB):
            g = out.b_lift(guarded[why.premise])
        else:  # pragma: no cover - check_proof rejects anything else
            raise ProofDoesNotCheck(f"unknown justification {why!r}")
        guarded.append(g)
    result = out.finish(guarded[-1], check=False)
    _require_valid(result, extensions)
    return result


def deduction_inverse(proof: Proof, position: int | None = None, extensions=()) -> Proof:
    """From ``Γ ⊢ Bφ → ψ`` build ``Γ, φ ⊢ ψ``, inserting φ at ``position``."""
    _require_valid(proof, extensions)
    goal = proof.conclusion
    if not (
        isinstance(goal, Binary) and goal.op == "imp"
        and isinstance(goal.left, Unary) and goal.left.op == "B"
    ):
        raise ProofDoesNotCheck("conclusion is not of the form Bφ → ψ")
    phi = goal.left.arg
    pos = len(proof.hypotheses) if position is None else position
    hyps = proof.hypotheses[:pos] + (phi,) + proof.hypotheses[pos:]

    def shift(why):
        if isinstance(why, Hypothesis) and why.index >= pos:
            return Hypothesis(why.index + 1)
        return why

    steps = [Step(s.formula, shift(s.why)) for s in proof.steps]
    last = len(steps) - 1
    steps.append(Step(phi, Hypothesis(pos)))
    steps.append(Step(B(phi), RuleB(last + 1)))
    steps.append(Step(goal.right, MP(last + 2, last)))
    result = Proof(hyps, tuple(steps), proof.name)
    _require_valid(result, extensions)
    return result


def guarded_goal(proof: Proof, hypothesis: int):
    """The conclusion ``deduction_transform`` must reach."""
    return imp(B(proof.hypotheses[hypothesis]), proof.conclusion)

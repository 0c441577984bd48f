"""Hilbert-style proofs, the proof checker and the proof-script format.

Step and hypothesis indices are 0-based in the API. Scripts number steps
and hypotheses from 1::

    assume: p, p -> q
    1. p ; hyp 1
    2. p -> q ; hyp 2
    3. q ; mp 1 2
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from ..errors import FormulaSyntaxError, InvalidStep, ProofScriptError
from ..syntax import Formula, Unary, imp, parse, to_text
from .axioms import available, matches_axiom


@dataclass(frozen=True)
class Axiom:
    name: str
    inst: Mapping[str, Formula] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Hypothesis:
    index: int


@dataclass(frozen=True)
class MP:
    """Modus ponens: step ``major`` must read ``step minor -> current``."""

    minor: int
    major: int


@dataclass(frozen=True)
class RuleB:
    premise: int


Justification = Union[Axiom, Hypothesis, MP, RuleB]


@dataclass(frozen=True)
class Step:
    formula: Formula
    why: Justification


@dataclass(frozen=True)
class Proof:
    hypotheses: tuple[Formula, ...]
    steps: tuple[Step, ...]
    name: str = field(default="", compare=False)

    @property
    def conclusion(self) -> Formula | None:
        return self.steps[-1].formula if self.steps else None

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    conclusion: Formula | None = None
    error: InvalidStep | None = None

    def __bool__(self) -> bool:
        return self.ok

    def raise_for_error(self) -> None:
        if self.error is not None:
            raise self.error


def check_step(proof: Proof, i: int, extensions: Sequence[str] = ()) -> None:
    """Raise ``InvalidStep`` unless step ``i`` is justified by earlier steps."""
    step = proof.steps[i]
    f, why = step.formula, step.why

    def earlier(j: int) -> Formula:
        if not 0 <= j < i:
            raise InvalidStep(i, f"refers to step {j + 1}, which is not an earlier step")
        return proof.steps[j].formula

    if isinstance(why, Axiom):
        if why.name not in available(extensions):
            raise InvalidStep(i, f"unknown or disabled axiom {why.name}")
        if not matches_axiom(why.name, f, why.inst):
            raise InvalidStep(i, f"not an instance of {why.name}")
    elif isinstance(why, Hypothesis):
        if not 0 <= why.index < len(proof.hypotheses):
            raise InvalidStep(i, f"no hypothesis {why.index + 1}")
        if proof.hypotheses[why.index] != f:
            raise InvalidStep(i, f"differs from hypothesis {why.index + 1}")
    elif isinstance(why, MP):
        minor, major = earlier(why.minor), earlier(why.major)
        if major != imp(minor, f):
            raise InvalidStep(
                i, f"step {why.major + 1} is not step {why.minor + 1} -> this formula"
            )
    elif isinstance(why, RuleB):
        premise = earlier(why.premise)
        if f != Unary("B", premise):
            raise InvalidStep(i, f"is not B applied to step {why.premise + 1}")
    else:
        raise InvalidStep(i, f"unknown justification {why!r}")


def check_proof(proof: Proof, extensions: Sequence[str] = ()) -> Verdict:
    """Validate every step; extension axioms are enabled by name (Contr, Prel, ...)."""
    if not proof.steps:
        return Verdict(False, None, InvalidStep(0, "empty proof"))
    for i in range(len(proof.steps)):
        try:
            check_step(proof, i, extensions)
        except InvalidStep as err:
            return Verdict(False, None, err)
    return Verdict(True, proof.conclusion)


# ---------------------------------------------------------------- scripts

_STEP = re.compile(r"\s*(\d+)\s*\.\s*(.*?)\s*;\s*(.*?)\s*$")


def _split_top_level(text: str) -> list[str]:
    """Split a hypothesis list on commas outside parentheses and quotes."""
    parts, depth, quoted, start = [], 0, False, 0
    for k, ch in enumerate(text):
        if ch == '"':
            quoted = not quoted
        elif not quoted and ch == "(":
            depth += 1
        elif not quoted and ch == ")":
            depth -= 1
        elif not quoted and depth == 0 and ch == ",":
            parts.append(text[start:k])
            start = k + 1
    parts.append(text[start:])
    return [p.strip() for p in parts if p.strip()]


def _justification(text: str, line: int) -> Justification:
    words = text.split()
    if not words:
        raise ProofScriptError("missing justification", line)
    kind, args = words[0].lower(), words[1:]
    try:
        if kind == "hyp" and len(args) == 1:
            return Hypothesis(int(args[0]) - 1)
        if kind == "ax" and len(args) == 1:
            return Axiom(args[0])
        if kind == "mp" and len(args) == 2:
            return MP(int(args[0]) - 1, int(args[1]) - 1)
        if kind == "b" and len(args) == 1:
            return RuleB(int(args[0]) - 1)
    except ValueError:
        pass
    raise ProofScriptError(f"bad justification {text!r}", line)


def parse_script(text: str, name: str = "") -> Proof:
    hypotheses: list[Formula] = []
    steps: list[Step] = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.lower().startswith("assume:"):
                if seen_header or steps:
                    raise ProofScriptError("the assume: header must come first, once", lineno)
                seen_header = True
                hypotheses = [parse(h) for h in _split_top_level(line[len("assume:"):])]
                continue
            m = _STEP.match(line)
            if not m:
                raise ProofScriptError("expected 'n. formula ; justification'", lineno)
            number, formula, why = m.groups()
            if int(number) != len(steps) + 1:
                raise ProofScriptError(f"expected step number {len(steps) + 1}, got {number}", lineno)
            steps.append(Step(parse(formula), _justification(why, lineno)))
        except FormulaSyntaxError as err:
            raise ProofScriptError(str(err), lineno) from err
    return Proof(tuple(hypotheses), tuple(steps), name)


def script_line_of_step(text: str, index: int) -> int:
    """1-based line number of step ``index`` (0-based) in a script."""
    count = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line and _STEP.match(line):
            count += 1
            if count == index:
                return lineno
    return 0


def _why_text(why: Justification) -> str:
    if isinstance(why, Axiom):
        return f"ax {why.name}"
    if isinstance(why, Hypothesis):
        return f"hyp {why.index + 1}"
    if isinstance(why, MP):
        return f"mp {why.minor + 1} {why.major + 1}"
    return f"b {why.premise + 1}"


def format_script(proof: Proof) -> str:
    lines = []
    if proof.name:
        lines.append(f"# {proof.name}")
    if proof.hypotheses:
        lines.append("assume: " + ", ".join(to_text(h) for h in proof.hypotheses))
    width = len(str(len(proof.steps)))
    for k, step in enumerate(proof.steps, 1):
        lines.append(f"{k:>{width}}. {to_text(step.formula)} ; {_why_text(step.why)}")
    return "\n".join(lines) + "\n"

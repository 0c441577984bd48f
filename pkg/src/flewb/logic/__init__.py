"""Formulas with B: evaluation, countermodel search and Hilbert proofs."""

from __future__ import annotations

from .axioms import BASE_AXIOMS, EXTENSION_AXIOMS, find_axiom, instance, match, schemas
from .builder import ProofBuilder
from .corpus import CorpusEntry, corpus, corpus_entry
from .deduction import deduction_inverse, deduction_transform
from .proofs import (
    MP, Axiom, Hypothesis, Proof, RuleB, Step, Verdict, check_proof, format_script, parse_script,
)
from .semantics import Countermodel, Valid, decide, eval_formula, refutes
from .translation import StarTranslation, star_translate, star_untranslate

__all__ = [
    "BASE_AXIOMS", "EXTENSION_AXIOMS", "find_axiom", "instance", "match", "schemas",
    "ProofBuilder", "CorpusEntry", "corpus", "corpus_entry",
    "deduction_inverse", "deduction_transform",
    "MP", "Axiom", "Hypothesis", "Proof", "RuleB", "Step", "Verdict",
    "check_proof", "format_script", "parse_script",
    "Countermodel", "Valid", "decide", "eval_formula", "refutes",
    "StarTranslation", "star_translate", "star_untranslate",
]

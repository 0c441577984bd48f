"""Command-line front end.

Exit codes: 0 pass, 1 semantic failure, 2 input error, 3 countermodel found.
An ALGEBRA argument is a path to an algebra file or a built-in fixture name.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from .algebra import FiniteRL, class_flags, is_isomorphic
from .boolean import (
    b_violation, boolean_skeleton, compute_D, delta_violation, joint_modalities,
    make_balgebra, modalities, modality_order, negD_stabilization_index,
)
from .enumerate import MAX_ENUMERATION_SIZE, enumerate_algebras
from .errors import AlgebraError, FlewbError, HypothesisNotFound, ProofDoesNotCheck, ProofScriptError
from .fixtures import fixture, fixture_names, fixtures
from .io import algebra_to_dict, load_algebra
from .logic.deduction import deduction_transform
from .logic.proofs import check_proof, format_script, parse_script, script_line_of_step
from .logic.semantics import Countermodel, decide
from .structure import all_bfilters, is_subdirectly_irreducible
from .syntax import parse, to_text

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_COUNTERMODEL = 0, 1, 2, 3


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


class Report:
    """Collects human-readable lines and a JSON payload side by side."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.data: dict[str, Any] = {}

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def emit(self, out) -> None:
        if self.as_json:
            out.write(json.dumps(self.data, indent=2, ensure_ascii=False) + "\n")
        else:
            out.write("\n".join(self.lines) + "\n")


def _load(spec: str) -> tuple[FiniteRL, dict]:
    path = Path(spec)
    if path.is_file():
        return load_algebra(path)
    if spec in fixture_names():
        return fixture(spec), {}
    raise InputError(f"{spec!r} is neither a readable file nor a fixture name")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _word(word: Sequence[str]) -> str:
    return "".join(word) or "Id"


def _named_fixture(A: FiniteRL) -> str | None:
    for name, F in fixtures().items():
        if F.n == A.n and is_isomorphic(F, A):
            return name
    return None


# ------------------------------------------------------------------ check

def _table_failures(A: FiniteRL, tables: dict) -> dict[str, dict]:
    out: dict[str, dict] = {}
    if "B" in tables:
        bad = b_violation(A, tables["B"])
        if bad:
            out["B"] = {"equation": bad[0], "witness": A.names(bad[1])}
    if "D" in tables:
        d = compute_D(A)
        wrong = [a for a in range(A.n) if d.table is None or tables["D"][a] != d.table[a]]
        if wrong:
            out["D"] = {"equation": "least b with a v b = 1", "witness": A.names(wrong[:1])}
    if "Delta" in tables:
        bad = delta_violation(A, tables["Delta"])
        if bad:
            out["Delta"] = {"equation": bad[0], "witness": list(bad[1].values())}
    return out


def cmd_check(args, rep: Report) -> int:
    try:
        A, tables = _load(args.algebra)
    except AlgebraError as err:
        rep.data = {"ok": False, "laws": {"error": type(err).__name__, "message": str(err),
                                           "witness": [str(w) for w in err.witness]}}
        rep.line(f"laws: FAIL {type(err).__name__}: {err}")
        if err.witness:
            rep.line(f"  witness: {', '.join(str(w) for w in err.witness)}")
        return EXIT_FAIL
    flags = class_flags(A).as_dict()
    failures = _table_failures(A, tables)
    ok = not failures
    rep.data = {
        "algebra": A.name, "size": A.n, "ok": ok, "laws": "ok", "flags": flags,
        "tables": {k: failures.get(k, "ok") for k in ("B", "D", "Delta") if k in tables},
    }
    rep.line(f"algebra: {A.name} ({A.n} elements)")
    rep.line("laws: ok")
    rep.line("flags: " + " ".join(f"{k}={_yes(v)}" for k, v in flags.items()))
    for key in ("B", "D", "Delta"):
        if key in tables:
            if key in failures:
                f = failures[key]
                rep.line(f"{key} table: FAIL {f['equation']} witness {', '.join(f['witness'])}")
            else:
                rep.line(f"{key} table: ok")
    rep.line(f"result: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------- op

def cmd_op(args, rep: Report) -> int:
    A, _ = _load(args.algebra)
    BA = make_balgebra(A)
    names = A.elements
    if args.operator == "B":
        exists, table, witness = True, BA.b_table, None
    elif args.operator == "D":
        d = compute_D(A)
        exists, table, witness = d.exists, d.table, d.witness
    else:
        exists, table = BA.delta_exists, BA.delta_table
        witness = None if exists else delta_violation(A, BA.b_table)
    rep.data = {"algebra": A.name, "operator": args.operator, "exists": exists}
    if not exists:
        eq, wit = witness
        rep.data["failure"] = {"equation": eq, "witness": wit}
        rep.line(f"{args.operator} does not exist in {A.name}: {eq} fails at "
                 + ", ".join(f"{k} = {v}" for k, v in wit.items()))
        return EXIT_FAIL
    if args.element is not None:
        try:
            a = A.index(args.element)
        except (KeyError, ValueError, IndexError):
            raise InputError(f"unknown element {args.element!r}") from None
        rep.data["value"] = {names[a]: names[table[a]]}
        rep.line(f"{args.operator}({names[a]}) = {names[table[a]]}")
        return EXIT_OK
    rep.data["table"] = {names[a]: names[table[a]] for a in range(A.n)}
    rep.line(f"{args.operator} on {A.name}:")
    width = max(len(x) for x in names)
    for a in range(A.n):
        rep.line(f"  {args.operator}({names[a]}){' ' * (width - len(names[a]))} = {names[table[a]]}")
    return EXIT_OK


# ---------------------------------------------------------------- analyze

def _analyze_one(A: FiniteRL) -> tuple[dict, list[str]]:
    BA = make_balgebra(A)
    skeleton = sorted(boolean_skeleton(BA))
    mods = modalities(BA)
    order = modality_order(BA, mods)
    filters = all_bfilters(BA)
    si = None if A.n == 1 else is_subdirectly_irreducible(BA)
    stab = negD_stabilization_index(BA) if BA.d_exists else None
    data = {
        "algebra": A.name,
        "size": A.n,
        "chain": A.is_chain(),
        "skeleton": A.names(skeleton),
        "modalities": [m.label for m in mods],
        "modality_order": [[mods[i].label, mods[j].label] for i, j in order],
        "bfilters": [f.names() for f in filters],
        "subdirectly_irreducible": si,
        "negD_stabilization_index": stab,
        "delta_exists": BA.delta_exists,
    }
    lines = [
        f"algebra: {A.name} ({A.n} elements, {'chain' if A.is_chain() else 'not a chain'})",
        f"Boolean skeleton ({len(skeleton)}): {{{', '.join(A.names(skeleton))}}}",
        f"modalities ({len(mods)}): {', '.join(m.label for m in mods)}",
        "modality order: " + (", ".join(f"{mods[i].label} < {mods[j].label}" for i, j in order) or "none"),
        f"B-filters ({len(filters)}): " + "; ".join("{" + ", ".join(f.names()) + "}" for f in filters),
        "subdirectly irreducible: " + ("n/a (degenerate)" if si is None else _yes(si)),
        f"~D stabilization index: {stab}",
        f"Delta exists: {_yes(BA.delta_exists)}",
    ]
    return data, lines


def cmd_analyze(args, rep: Report) -> int:
    algebras = [_load(spec)[0] for spec in args.algebra]
    results = []
    for A in algebras:
        data, lines = _analyze_one(A)
        results.append(data)
        rep.lines.extend(lines)
        rep.line()
    rep.data = {"algebras": results}
    if len(algebras) > 1:
        words = joint_modalities([make_balgebra(A) for A in algebras])
        rep.data["joint_modalities"] = [_word(w) for w in words]
        rep.line(f"distinct modalities across all algebras ({len(words)}): "
                 + ", ".join(_word(w) for w in words))
    else:
        rep.lines.pop()
    return EXIT_OK


# ----------------------------------------------------------------- decide

def _split_premises(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:k])
            start = k + 1
    parts.append(text[start:])
    return [p.strip() for p in parts if p.strip()]


def parse_sequent(text: str):
    """``"g1, g2 |= phi"`` or just ``"phi"``."""
    text = text.replace("⊨", "|=")
    if text.count("|=") > 1:
        raise InputError("more than one |=")
    if "|=" in text:
        left, right = text.split("|=")
        gamma = [parse(g) for g in _split_premises(left)]
    else:
        gamma, right = [], text
    return gamma, parse(right.strip())


def cmd_decide(args, rep: Report) -> int:
    gamma, phi = parse_sequent(" ".join(args.sequent))
    bound = args.max_size if args.max_size is not None else 4
    verdict = decide(gamma, phi, bound)
    rep.data = {
        "premises": [to_text(g) for g in gamma],
        "formula": to_text(phi),
        "max_size": bound,
    }
    if isinstance(verdict, Countermodel):
        A = verdict.algebra.base
        known = _named_fixture(A)
        rep.data.update({
            "verdict": "countermodel",
            "algebra": A.name,
            "isomorphic_to": known,
            "valuation": verdict.named_valuation(),
            "serialization": algebra_to_dict(A, {"B": verdict.algebra.b_table}),
        })
        rep.line(f"countermodel in {A.name} ({A.n} elements"
                 + (f", isomorphic to {known})" if known else ")"))
        rep.line("valuation: " + ", ".join(f"{k} = {v}" for k, v in verdict.named_valuation().items()))
        rep.line("algebra:")
        rep.line(json.dumps(algebra_to_dict(A, {"B": verdict.algebra.b_table}), ensure_ascii=False))
        return EXIT_COUNTERMODEL
    rep.data.update({"verdict": "valid-up-to-bound", "bound": verdict.bound,
                     "algebras_checked": verdict.algebras_checked})
    rep.line(f"valid up to bound {verdict.bound} ({verdict.algebras_checked} algebras checked; not a proof)")
    return EXIT_OK


# ----------------------------------------------------------- prove/deduce

def _read_proof(path: str):
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise InputError(str(err)) from err
    return text, parse_script(text, name=Path(path).stem)


def cmd_prove(args, rep: Report) -> int:
    text, proof = _read_proof(args.proof)
    verdict = check_proof(proof, args.ext or ())
    if verdict.ok:
        rep.data = {"ok": True, "steps": len(proof), "conclusion": to_text(verdict.conclusion)}
        rep.line(f"accepted: {to_text(verdict.conclusion)} ({len(proof)} steps)")
        return EXIT_OK
    err = verdict.error
    line = script_line_of_step(text, err.index)
    rep.data = {"ok": False, "step": err.index + 1, "line": line, "reason": err.reason}
    rep.line(f"rejected at step {err.index + 1} (line {line}): {err.reason}")
    return EXIT_FAIL


def cmd_deduce(args, rep: Report) -> int:
    _, proof = _read_proof(args.proof)
    try:
        result = deduction_transform(proof, args.hypothesis - 1, args.ext or ())
    except HypothesisNotFound as err:
        raise InputError(str(err)) from err
    except ProofDoesNotCheck as err:
        rep.data = {"ok": False, "reason": str(err)}
        rep.line(f"input proof does not check: {err}")
        return EXIT_FAIL
    script = format_script(result)
    if args.output:
        Path(args.output).write_text(script)
    rep.data = {"ok": True, "steps": len(result), "conclusion": to_text(result.conclusion),
                "hypotheses": [to_text(h) for h in result.hypotheses]}
    if args.output:
        rep.line(f"wrote {len(result)} steps proving {to_text(result.conclusion)} to {args.output}")
    else:
        rep.data["script"] = script
        rep.lines.append(script.rstrip("\n"))
    return EXIT_OK


# ------------------------------------------------------ fixtures/enumerate

def cmd_fixtures(args, rep: Report) -> int:
    if args.name:
        A = fixture(args.name)
        tables = {}
        if args.with_ops:
            BA = make_balgebra(A)
            tables = {"B": BA.b_table, "D": BA.d_table, "Delta": BA.delta_table}
        data = algebra_to_dict(A, tables)
        rep.data = data
        rep.line(json.dumps(data, indent=2, ensure_ascii=False))
        return EXIT_OK
    rep.data = {"fixtures": [{"name": n, "size": fixture(n).n} for n in fixture_names()]}
    for n in fixture_names():
        rep.line(f"{n:<18} {fixture(n).n} elements")
    return EXIT_OK


def cmd_enumerate(args, rep: Report) -> int:
    bound = args.max_size if args.max_size is not None else 4
    rows = []
    for A in enumerate_algebras(bound):
        flags = class_flags(A).as_dict()
        rows.append({"name": A.name, "size": A.n, "chain": A.is_chain(), "flags": flags})
        on = [k for k, v in flags.items() if v]
        rep.line(f"{A.name:<12} n={A.n} {'chain' if A.is_chain() else 'lattice'} {' '.join(on)}".rstrip())
    counts = {str(n): sum(1 for r in rows if r["size"] == n) for n in range(1, bound + 1)}
    rep.data = {"max_size": bound, "counts": counts, "algebras": rows}
    rep.line("counts by size: " + ", ".join(f"{n}: {c}" for n, c in counts.items()))
    return EXIT_OK


# ------------------------------------------------------------------ parser

def _global_flags(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--json", action="store_true", default=default, help="emit JSON")
    parser.add_argument("--max-size", type=int, default=default, metavar="N",
                        help=f"search/enumeration bound (1..{MAX_ENUMERATION_SIZE})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flewb", description="Finite residuated lattices with the Boolean-below operator B."
    )
    _global_flags(parser, None)
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _global_flags(p, argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = verb("check", cmd_check, "validate an algebra file and its operator tables")
    p.add_argument("algebra")
    p = verb("op", cmd_op, "print the B, D or Delta table")
    p.add_argument("algebra")
    p.add_argument("operator", choices=["B", "D", "Delta"])
    p.add_argument("element", nargs="?")
    p = verb("analyze", cmd_analyze, "skeleton, modalities, filters, irreducibility")
    p.add_argument("algebra", nargs="+")
    p = verb("decide", cmd_decide, 'bounded countermodel search for "premises |= formula"')
    p.add_argument("sequent", nargs="+")
    p = verb("prove", cmd_prove, "check a proof script")
    p.add_argument("proof")
    p.add_argument("--ext", action="append", metavar="AXIOM", help="enable an extension axiom")
    p = verb("deduce", cmd_deduce, "discharge a hypothesis with the B-deduction theorem")
    p.add_argument("proof")
    p.add_argument("hypothesis", type=int, help="1-based hypothesis number")
    p.add_argument("-o", "--output")
    p.add_argument("--ext", action="append", metavar="AXIOM", help="enable an extension axiom")
    p = verb("fixtures", cmd_fixtures, "list built-in algebras or dump one")
    p.add_argument("name", nargs="?")
    p.add_argument("--with-ops", action="store_true", help="include B, D and Delta tables")
    verb("enumerate", cmd_enumerate, "list all algebras up to --max-size")
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    rep = Report(bool(args.json))
    try:
        code = args.func(args, rep)
    except AlgebraError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL
    except (InputError, ProofScriptError, FlewbError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    rep.emit(out)
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()

from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from flewb.cli import EXIT_COUNTERMODEL, EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from flewb.enumerate import enumerate_algebras
from flewb.fixtures import fixture_names
from flewb.logic.proofs import check_proof, parse_script
from flewb.logic.semantics import Countermodel, decide
from flewb.syntax import parse

PROOFS = Path(__file__).parent.parent / "proofs"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run("--json", *argv)
    return code, json.loads(out)


@pytest.fixture
def example5_file(tmp_path):
    code, out, _ = run("fixtures", "Example5")
    assert code == EXIT_OK
    path = tmp_path / "example5.json"
    path.write_text(out)
    return path


class TestCheck:
    def test_valid_file(self, example5_file):
        code, out, _ = run("check", str(example5_file))
        assert code == EXIT_OK
        assert "prelinear=yes" in out and "contractive=yes" in out and "result: pass" in out

    def test_broken_associativity(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({
            "elements": ["0", "a", "b", "1"],
            "hasse": [["0", "a"], ["a", "b"], ["b", "1"]],
            "monoid": [["0", "0", "0", "0"], ["0", "0", "a", "a"],
                       ["0", "a", "a", "b"], ["0", "a", "b", "1"]],
        }))
        code, out, _ = run("check", str(path))
        assert code == EXIT_FAIL
        assert "not associative at (a, b, b)" in out

    def test_supplied_delta_table_is_rejected(self, example5_file, tmp_path):
        data = json.loads(example5_file.read_text())
        data["Delta"] = {"0": "0", "r": "0", "s": "0", "t": "0", "1": "1"}
        path = tmp_path / "with_delta.json"
        path.write_text(json.dumps(data))
        code, out, _ = run("check", str(path))
        assert code == EXIT_FAIL
        assert "Delta table: FAIL ΔI1 witness s, t" in out

    def test_supplied_b_table_accepted(self, example5_file, tmp_path):
        data = json.loads(example5_file.read_text())
        data["B"] = {"0": "0", "r": "0", "s": "0", "t": "0", "1": "1"}
        path = tmp_path / "with_b.json"
        path.write_text(json.dumps(data))
        assert run("check", str(path))[0] == EXIT_OK

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "mal.json"
        path.write_text('{"elements": [')
        code, _, err = run("check", str(path))
        assert code == EXIT_INPUT and "invalid JSON" in err

    def test_unknown_algebra(self):
        assert run("check", "NoSuchThing")[0] == EXIT_INPUT


class TestOp:
    def test_b_table(self):
        code, out, _ = run("op", "G2xG3", "B")
        assert code == EXIT_OK
        assert "B((1,1/2)) = (1,0)" in out

    def test_single_element(self):
        code, out, _ = run("op", "G2xG3", "B", "(1,1/2)")
        assert code == EXIT_OK and out.strip() == "B((1,1/2)) = (1,0)"
        assert run("op", "G2xG3", "B", "nope")[0] == EXIT_INPUT

    def test_delta_missing(self):
        code, out, _ = run("op", "Example5", "Delta")
        assert code == EXIT_FAIL
        assert "does not exist" in out and "x = s, y = t" in out

    def test_d_table(self):
        code, out, _ = run("op", "G3", "D")
        assert code == EXIT_OK
        assert "D(1)   = 0" in out

    def test_json_matches_library(self):
        code, data = run_json("op", "Example5", "D")
        assert code == EXIT_OK
        assert data["table"] == {"0": "1", "r": "1", "s": "t", "t": "s", "1": "0"}


class TestAnalyze:
    def test_example5(self):
        code, out, _ = run("analyze", "Example5")
        assert code == EXIT_OK
        assert "Boolean skeleton (2): {0, 1}" in out
        assert "subdirectly irreducible: yes" in out
        assert "Delta exists: no" in out

    def test_product(self):
        code, out, _ = run("analyze", "G2xG2")
        assert "Boolean skeleton (4)" in out and "subdirectly irreducible: no" in out

    def test_joint_modalities(self):
        code, data = run_json("analyze", "G3", "Bool4PlusTop")
        assert code == EXIT_OK
        assert len(data["joint_modalities"]) == 9
        assert len(data["algebras"][0]["modalities"]) == 5


class TestDecide:
    def test_excluded_middle(self):
        code, out, _ = run("decide", "p \\/ ~p", "--max-size", "3")
        assert code == EXIT_COUNTERMODEL
        assert "isomorphic to G3" in out and "valuation: p = a" in out

    def test_valid_formula(self):
        code, out, _ = run("decide", "B p -> p")
        assert code == EXIT_OK and "valid up to bound 4" in out

    def test_refuted_formula(self):
        assert run("decide", "p -> B p")[0] == EXIT_COUNTERMODEL

    def test_premises(self):
        code, data = run_json("decide", "s \\/ t |= s \\/ B t", "--max-size", "5")
        assert code == EXIT_COUNTERMODEL
        assert data["isomorphic_to"] == "Example5"
        assert data["premises"] == ["s \\/ t"]

    def test_parse_error(self):
        code, _, err = run("decide", "p ->")
        assert code == EXIT_INPUT and "position" in err

    def test_json_matches_library(self):
        code, data = run_json("decide", "p -> B p")
        verdict = decide([], parse("p -> B p"), 4)
        assert isinstance(verdict, Countermodel)
        assert data["valuation"] == verdict.named_valuation()
        assert data["algebra"] == verdict.algebra.base.name

    def test_countermodel_serialization_reloads(self, tmp_path):
        _, data = run_json("decide", "p \\/ ~p")
        path = tmp_path / "cm.json"
        path.write_text(json.dumps(data["serialization"]))
        assert run("check", str(path))[0] == EXIT_OK


class TestProofs:
    @pytest.mark.parametrize("path", sorted(PROOFS.glob("*.proof")), ids=lambda p: p.stem)
    def test_samples_accepted(self, path):
        code, out, _ = run("prove", str(path))
        assert code == EXIT_OK and out.startswith("accepted")

    def test_b_idempotent(self):
        _, out, _ = run("prove", str(PROOFS / "b_idempotent.proof"))
        assert "accepted: B p -> B B p" in out

    def test_corrupted_reports_line(self, tmp_path):
        lines = (PROOFS / "b_idempotent.proof").read_text().splitlines()
        idx = next(k for k, line in enumerate(lines) if line.strip().startswith("4."))
        lines[idx] = lines[idx].replace("mp 2 3", "mp 1 3")
        path = tmp_path / "bad.proof"
        path.write_text("\n".join(lines) + "\n")
        code, out, _ = run("prove", str(path))
        assert code == EXIT_FAIL
        assert f"rejected at step 4 (line {idx + 1})" in out

    def test_script_error(self, tmp_path):
        path = tmp_path / "junk.proof"
        path.write_text("1. p ; hyp\n")
        code, _, err = run("prove", str(path))
        assert code == EXIT_INPUT and "line 1" in err

    def test_deduce(self, tmp_path):
        target = tmp_path / "out.proof"
        code, out, _ = run("deduce", str(PROOFS / "rule_b.proof"), "1", "-o", str(target))
        assert code == EXIT_OK and "proving B p -> B p" in out
        proof = parse_script(target.read_text())
        assert proof.hypotheses == ()
        assert check_proof(proof).ok
        assert run("prove", str(target))[0] == EXIT_OK

    def test_deduce_keeps_other_hypotheses(self):
        code, out, _ = run("deduce", str(PROOFS / "modus_ponens.proof"), "2")
        assert code == EXIT_OK and "assume: p\n" in out

    def test_deduce_bad_index(self):
        assert run("deduce", str(PROOFS / "rule_b.proof"), "5")[0] == EXIT_INPUT


class TestListing:
    def test_fixtures(self):
        code, data = run_json("fixtures")
        assert code == EXIT_OK
        assert [f["name"] for f in data["fixtures"]] == fixture_names()

    def test_fixture_with_ops(self):
        _, data = run_json("fixtures", "Example5", "--with-ops")
        assert data["B"]["s"] == "0" and data["D"]["s"] == "t"

    def test_enumerate_counts(self):
        code, data = run_json("enumerate", "--max-size", "5")
        assert code == EXIT_OK
        assert data["counts"] == {"1": 1, "2": 1, "3": 2, "4": 7, "5": 26}
        assert [r["name"] for r in data["algebras"]] == [A.name for A in enumerate_algebras(5)]


class TestGlobalBehaviour:
    def test_flags_before_or_after_verb(self):
        before = run("--json", "--max-size", "3", "decide", "p \\/ ~p")
        after = run("decide", "p \\/ ~p", "--json", "--max-size", "3")
        assert before == after and before[0] == EXIT_COUNTERMODEL

    @pytest.mark.parametrize("argv", [
        ("analyze", "Example5"), ("op", "G2xG3", "B"), ("decide", "p -> B p"), ("enumerate",),
    ])
    def test_deterministic(self, argv):
        assert run(*argv) == run(*argv)
        assert run("--json", *argv) == run("--json", *argv)

    def test_usage_errors(self):
        assert run()[0] == EXIT_INPUT
        assert run("op", "G3", "Q")[0] == EXIT_INPUT
        assert run("--help")[0] == EXIT_OK

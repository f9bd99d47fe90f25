"""Command line behaviors: transcripts, exit codes, formats, determinism."""

import json
import os
import subprocess
import sys

from effhom.cli import main

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEvalTranscripts:
    def test_cone_differential(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "cone-example", "diff", "2", "(5, 7*x4+8*x0, 3)",
            "--format", "text",
        )
        assert code == 0
        assert out == "(-10, -8*x0-7*x4, 5)\n"

    def test_top_homotopy(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "cone-example", "h:htop", "2", "(-10, -8*x0-7*x4, 5)",
            "--format", "text",
        )
        assert code == 0
        assert out == "(5, 8*x0+7*x4, 0)\n"

    def test_null_eval(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "null", "diff", "0", "0")
        assert code == 0
        assert out == "0\n"

    def test_negative_index(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "cc1", "diff", "-2", "5")
        assert code == 0
        assert out == "10\n"

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "cone-example", "diff", "2", "(5, 7*x4+8*x0, 3)",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out) == {"result": "(-10, -8*x0-7*x4, 5)"}


class TestPreimage:
    def test_golden(self, capsys):
        code, out, _ = run_cli(
            capsys, "preimage", "cone-example", "2", "(-10, -8*x0-7*x4, 5)",
            "--h", "htop", "--format", "text",
        )
        assert code == 0
        assert out == "(5, 8*x0+7*x4, 0)\n"

    def test_zero_element(self, capsys):
        code, out, _ = run_cli(
            capsys, "preimage", "cone-example", "2", "(0, 0, 0)", "--h", "htop"
        )
        assert code == 0
        assert out == "(0, 0, 0)\n"

    def test_not_a_cycle_prints_boundary(self, capsys):
        code, out, _ = run_cli(
            capsys, "preimage", "cone-example", "3", "(5, 7*x4+8*x0, 3)",
            "--h", "htop",
        )
        assert code == 1
        assert "(-10, -8*x0-7*x4, 5)" in out

    def test_not_a_cycle_at_lower_index(self, capsys):
        code, out, _ = run_cli(
            capsys, "preimage", "cone-example", "2", "(5, 7*x4+8*x0, 3)",
            "--h", "htop",
        )
        assert code == 1
        assert "(0, 0, 11)" in out


class TestCheck:
    def test_reduction_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "cone-example", "reduction",
            "--degrees", "-8..8", "--samples", "32", "--seed", "7",
        )
        assert code == 0
        assert "law=fg=id degrees=-8..8 samples=32 seed=7 violations=0" in out

    def test_h1_contracting_fails(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "cone-example.bottom", "contracting:h1",
            "--degrees", "-4..4", "--samples", "8", "--seed", "7",
        )
        assert code == 1
        assert "verdict=fail" in out

    def test_htop_contracting_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "cone-example", "contracting:htop",
            "--degrees", "-4..4", "--samples", "8", "--seed", "7",
        )
        assert code == 0

    def test_nilpotency(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "sum12", "nilpotency",
            "--degrees", "-3..3", "--samples", "4", "--seed", "1",
        )
        assert code == 0

    def test_chain_morphism_on_reduction(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "zxznat", "chain-morphism",
            "--degrees", "-3..3", "--samples", "4", "--seed", "1",
        )
        assert code == 0
        assert "law=f:fd=df" in out and "law=g:fd=df" in out

    def test_chain_morphism_needs_reduction(self, capsys):
        code, _, err = run_cli(capsys, "check", "cc1", "chain-morphism")
        assert code == 2
        assert "effective-homology" in err

    def test_json_mirrors_text(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "idz2x0", "reduction",
            "--degrees", "0..1", "--samples", "2", "--seed", "5",
            "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["violations"] == 0
        assert [s["law"] for s in data["laws"]] == [
            "fg=id", "dh+hd+gf=id", "fh=0", "hg=0", "hh=0",
        ]

    def test_determinism(self, capsys):
        args = (
            "check", "zxznat", "reduction",
            "--degrees", "-2..2", "--samples", "6", "--seed", "42",
        )
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second


class TestHomology:
    def test_fcc1_lines(self, capsys):
        code, out, _ = run_cli(capsys, "homology", "fcc1", "-2..2")
        assert code == 0
        assert out == "H_-2 = Z/2\nH_-1 = 0\nH_0 = Z/2\nH_1 = 0\nH_2 = Z/2\n"

    def test_transfer(self, capsys):
        _, direct, _ = run_cli(capsys, "homology", "fcc1", "-2..2")
        _, transferred, _ = run_cli(capsys, "homology", "zxznat", "-2..2")
        assert direct == transferred

    def test_infinite_type_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "homology", "cc2", "0..0")
        assert code == 2
        assert "finite type" in err

    def test_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "homology", "cone-example", "0..1", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == {
            "groups": [
                {"degree": 0, "group": "0"},
                {"degree": 1, "group": "0"},
            ]
        }


class TestUsageErrors:
    def test_unknown_instance(self, capsys):
        code, _, err = run_cli(capsys, "eval", "nope", "diff", "0", "0")
        assert code == 2 and "unknown instance" in err

    def test_unknown_homotopy(self, capsys):
        code, _, err = run_cli(capsys, "eval", "cc2", "h:nope", "0", "0")
        assert code == 2 and "unknown homotopy" in err

    def test_homotopy_home_enforced(self, capsys):
        code, _, err = run_cli(capsys, "eval", "cc1", "h:hcc2", "0", "5")
        assert code == 2 and "lives over" in err

    def test_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "eval", "cc1", "diff", "0", "5+")
        assert code == 2

    def test_membership_error(self, capsys):
        code, _, err = run_cli(capsys, "eval", "cc1", "diff", "0", "(5, 7)")
        assert code == 2

    def test_bad_degree_range(self, capsys):
        code, _, err = run_cli(capsys, "check", "cc1", "nilpotency", "--degrees", "5..1")
        assert code == 2

    def test_bad_law(self, capsys):
        code, _, err = run_cli(capsys, "check", "cc1", "frobnicate")
        assert code == 2

    def test_missing_subcommand(self, capsys):
        code, _, _ = run_cli(capsys)
        assert code == 2


class TestList:
    def test_all_identifiers_present(self, capsys):
        code, out, _ = run_cli(capsys, "list")
        assert code == 0
        for ident in (
            "null", "cc1", "fcc1", "cc2", "sum12", "idz2x0", "zxznat",
            "cone-example", "cone-example.bottom", "hcc2", "h1", "h2", "htop",
        ):
            assert ident in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "list", "--format", "json")
        data = json.loads(out)
        assert {e["id"] for e in data["instances"]} >= {"cc1", "cone-example"}
        assert {h["id"] for h in data["homotopies"]} == {"hcc2", "h1", "h2", "htop"}


def test_module_entry_point_subprocess():
    env = dict(os.environ, PYTHONPATH=os.path.join(ROOT, "src"))
    proc = subprocess.run(
        [sys.executable, "-m", "effhom", "eval", "cone-example", "diff", "2",
         "(5, 7*x4+8*x0, 3)"],
        capture_output=True,
        text=True,
        env=env,
        cwd=ROOT,
    )
    assert proc.returncode == 0
    assert proc.stdout == "(-10, -8*x0-7*x4, 5)\n"

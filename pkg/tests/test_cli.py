"""End-to-end tests for the command-line interface.

Every invocation runs in-process through main(argv) with captured streams,
so exit codes and exact output bytes are both under test.
"""

from __future__ import annotations

import contextlib
import io
import json

import pytest

from paritybias.cli import build_parser, main
from paritybias.families import FAMILY_IDS, build_series


def run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestParsing:
    def test_help_exits_zero(self):
        code, out, _ = run("--help")
        assert code == 0
        assert "usage" in out

    def test_subcommand_help_exits_zero(self):
        code, out, _ = run("verify", "--help")
        assert code == 0
        assert "THEOREM" in out

    def test_no_command_is_usage_error(self):
        code, _, err = run()
        assert code == 2
        assert "usage" in err

    def test_unknown_command_is_usage_error(self):
        code, _, _ = run("frobnicate")
        assert code == 2

    def test_parser_builds_once(self):
        parser = build_parser()
        args = parser.parse_args(["expand", "po", "--order", "5"])
        assert args.family == "po"
        assert args.order == 5


class TestExpand:
    def test_text_rows(self):
        code, out, err = run("expand", "po", "--order", "8")
        assert code == 0
        assert err == ""
        lines = out.splitlines()
        assert len(lines) == 9
        assert lines[0] == "     0  0"
        assert lines[3] == "     3  1"
        assert lines[8] == "     8  2"

    def test_csv_exact_bytes(self):
        code, out, _ = run("expand", "pe", "--order", "2", "--format", "csv")
        assert code == 0
        assert out == "n,coefficient\n0,0\n1,0\n2,1\n"

    def test_json_decimal_strings(self):
        code, out, _ = run(
            "expand", "p10m", "--m", "3", "--order", "6", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["family"] == "p10m"
        assert payload["m"] == 3
        assert payload["order"] == 6
        want = build_series("p10m", 6, 3).coeffs
        assert payload["coefficients"] == [str(v) for v in want]
        assert all(isinstance(s, str) for s in payload["coefficients"])

    def test_out_writes_file_and_keeps_stdout_quiet(self, tmp_path):
        target = tmp_path / "po.csv"
        code, out, _ = run(
            "expand", "po", "--order", "4", "--format", "csv", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text(encoding="utf-8") == "n,coefficient\n0,0\n1,0\n2,0\n3,1\n4,0\n"

    def test_unknown_family_is_usage_error(self):
        code, _, err = run("expand", "nonsense")
        assert code == 2
        assert "invalid choice" in err

    def test_missing_required_parameter(self):
        code, _, err = run("expand", "p10m", "--order", "6")
        assert code == 2
        assert "error:" in err

    def test_negative_order_rejected(self):
        code, _, err = run("expand", "po", "--order", "-1")
        assert code == 2
        assert "error:" in err


class TestOracle:
    def test_matches_expand_text(self):
        code_e, out_e, _ = run("expand", "pe", "--order", "15")
        code_o, out_o, _ = run("oracle", "pe", "--max-n", "15")
        assert code_e == code_o == 0
        assert out_e == out_o

    def test_enum_tier_matches_dp_tier(self):
        _, dp_out, _ = run("oracle", "omo", "--m", "2", "--max-n", "20", "--tier", "dp")
        _, enum_out, _ = run(
            "oracle", "omo", "--m", "2", "--max-n", "20", "--tier", "enum"
        )
        assert dp_out == enum_out

    def test_json_meta_names_tier(self):
        code, out, _ = run(
            "oracle", "b_seq", "--max-n", "10", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["tier"] == "dp"
        assert payload["max_n"] == 10
        assert payload["coefficients"][10] == "7"

    def test_series_only_family_is_an_error(self):
        code, _, err = run("oracle", "diff_pe_po")
        assert code == 2
        assert "no counting route" in err

    def test_enum_above_cap_is_an_error(self):
        code, _, err = run("oracle", "po", "--max-n", "50", "--tier", "enum")
        assert code == 2
        assert "enumeration cap" in err


class TestVerify:
    def test_holding_theorem_exits_zero(self):
        code, out, _ = run("verify", "thm_qeu", "--max-n", "60")
        assert code == 0
        assert out.rstrip().endswith("HOLDS")
        assert "cross-checked=yes" in out

    def test_violated_scan_prints_points(self):
        code, out, _ = run("verify", "thm_mm", "--max-n", "6")
        assert code == 1
        assert "n=3: 1 vs 0" in out
        assert "n=5: 1 vs 0" in out
        assert "threshold: 6" in out
        assert out.rstrip().endswith("VIOLATED")

    def test_violation_csv_rows(self):
        code, out, _ = run("verify", "thm_mm", "--max-n", "6", "--format", "csv")
        assert code == 1
        assert out == "n,lhs,rhs\n3,1,0\n5,1,0\n"

    def test_json_record_shape(self):
        code, out, _ = run(
            "verify", "thm_kim_new", "--m", "2", "--max-n", "40", "--format", "json"
        )
        assert code == 0
        record = json.loads(out)
        assert record["kind"] == "theorem"
        assert record["id"] == "thm_kim_new"
        assert record["params"] == {"m": 2}
        assert record["holds"] is True
        assert record["violations"] == []
        assert set(record["tiers"]) == {"lhs", "rhs"}

    def test_unknown_theorem_is_usage_error(self):
        code, _, err = run("verify", "thm_bogus")
        assert code == 2
        assert "invalid choice" in err

    def test_parameter_validation_reaches_exit_two(self):
        code, _, err = run("verify", "thm_kim_new", "--m", "1")
        assert code == 2
        assert "error:" in err


class TestIdentities:
    def test_full_catalog_passes(self):
        code, out, _ = run("identities", "--order", "40")
        assert code == 0
        assert "16/16 substitutions verified to order 40" in out
        assert out.count("PASS") == 16
        assert "FAIL" not in out

    def test_csv_shape(self):
        code, out, _ = run("identities", "--order", "20", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "identity,label,passed,first_mismatch"
        assert len(lines) == 17
        assert all(line.endswith(",True,") for line in lines[1:])

    def test_json_records(self):
        code, out, _ = run("identities", "--order", "20", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["order"] == 20
        assert len(payload["records"]) == 16
        assert all(rec["holds"] for rec in payload["records"])


class TestScan:
    def test_always_exits_zero(self):
        code, out, _ = run("scan", "--j", "1", "--k", "0", "--m", "2", "--max-n", "12")
        assert code == 0
        assert "lead" in out

    def test_csv_header_and_values(self):
        code, out, _ = run(
            "scan", "--j", "1", "--k", "0", "--m", "2", "--max-n", "4",
            "--format", "csv",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,more_j,more_k,tied,lead"
        # partitions of 4 with min part 2: (4) and (2,2), both even-heavy
        assert lines[5] == "4,0,2,0,k"

    def test_unitary_parts_allowed_when_asked(self):
        code, out, _ = run(
            "scan", "--j", "1", "--k", "0", "--m", "2", "--max-n", "4",
            "--min-part", "1", "--format", "csv",
        )
        assert code == 0
        # partitions of 4: (4),(3,1),(2,2),(2,1,1),(1,1,1,1) -> 3 odd-heavy, 2 even-heavy
        assert out.splitlines()[5] == "4,3,2,0,j"

    def test_equal_residues_rejected(self):
        code, _, err = run("scan", "--j", "1", "--k", "1", "--m", "2")
        assert code == 2
        assert "residues must differ" in err

    def test_json_rows_are_strings(self):
        code, out, _ = run(
            "scan", "--j", "2", "--k", "1", "--m", "3", "--max-n", "6",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["m"] == 3
        assert len(payload["rows"]) == 7
        assert all(isinstance(row[1], str) for row in payload["rows"])


@pytest.fixture(scope="module")
def small_report():
    code, out, err = run("report", "--all", "--max-n", "30", "--order", "30")
    return code, out, err


class TestReport:
    def test_requires_all_flag(self):
        code, _, err = run("report")
        assert code == 2
        assert "--all" in err

    def test_rejects_csv(self):
        code, _, err = run("report", "--all", "--format", "csv")
        assert code == 2
        assert "text or json" in err

    def test_json_payload_and_exit_code(self, small_report):
        code, out, _ = small_report
        payload = json.loads(out)
        assert payload["name"] == "paritybias"
        assert payload["config"]["max_n"] == 30
        assert len(payload["records"]) == 48
        # the even minimum-part claims have known tie points, nothing else fails
        bad = [r for r in payload["records"] if not r["holds"]]
        assert [r["id"] for r in bad] == ["thm_minpart_even"] * 4
        assert payload["holds_all"] is False
        assert code == 1

    def test_text_summary(self):
        code, out, _ = run(
            "report", "--all", "--max-n", "30", "--order", "30", "--format", "text"
        )
        assert code == 1
        lines = out.splitlines()
        assert len(lines) == 49
        assert lines[-1] == "4 record(s) violated"
        assert sum(1 for line in lines if line.startswith("BAD")) == 4

    def test_out_writes_json_file(self, tmp_path):
        target = tmp_path / "report.json"
        code, out, _ = run(
            "report", "--all", "--max-n", "14", "--order", "14", "--out", str(target)
        )
        assert out == ""
        payload = json.loads(target.read_text(encoding="utf-8"))
        assert payload["config"] == {
            "max_n": 14,
            "order": 14,
            "enum_cap": 40,
            "dp_cap": 300,
        }
        assert len(payload["records"]) == 48
        assert code in (0, 1)


class TestCatalogCoverage:
    def test_every_family_expands_through_the_cli(self):
        # smallest legal parameter per family kind
        from paritybias.families import family_parameter_kind

        for family in FAMILY_IDS:
            kind = family_parameter_kind(family)
            argv = ["expand", family, "--order", "6"]
            if kind == "modulus":
                argv += ["--m", "2"]
            elif kind == "min_part":
                argv += ["--m", "1"]
            elif kind == "min_part_odd":
                argv += ["--m", "3"]
            elif kind == "min_part_even":
                argv += ["--m", "2"]
            code, out, err = run(*argv)
            assert code == 0, (family, err)
            assert len(out.splitlines()) == 7

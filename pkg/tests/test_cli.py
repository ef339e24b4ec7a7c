import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from combident import cli
from combident.cli import main, parse_config, render_report
from combident.identities import catalog
from combident.identities.catalog import CatalogEntry, SuiteConfig, run_suite
from combident.identities.report import IdentityReport, Variant


def test_defaults():
    cfg = parse_config(["verify", "rockett"])
    assert (cfg.n_max, cfg.m_max, cfg.tolerance, cfg.samples, cfg.seed, cfg.format) == (50, 3, 1e-9, 10**6, 0, "text")
    assert not cfg.strict_paper


def test_verify_rockett_passes(capsys):
    assert main(["verify", "rockett", "--n-max", "100"]) == 0
    out = capsys.readouterr().out.splitlines()
    rows = out[1:]
    assert len(rows) == 101
    assert all(row.rstrip().endswith("pass") for row in rows)


def test_even_binom_json(capsys):
    assert main(["verify", "even-binom", "--n-max", "0", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    by_variant = {row["variant"]: row for row in data}
    assert by_variant["corrected-form"]["verdict"] == "pass"
    assert by_variant["paper-form"]["verdict"] == "documented misprint"
    assert by_variant["paper-form"]["rhs"] == "1/2"
    assert set(data[0]) == {"identity", "variant", "params", "lhs", "rhs", "verdict", "note"}


def test_strict_paper_fails_on_misprint(capsys):
    assert main(["verify", "even-binom", "--n-max", "0", "--strict-paper"]) == 1


def test_unknown_identity_exit_2(capsys):
    assert main(["verify", "no-such-identity"]) == 2
    err = capsys.readouterr().err
    assert "rockett" in err and "no-such-identity" in err


def test_empty_identity_name(capsys):
    assert main(["verify", ""]) == 2
    assert "available" in capsys.readouterr().err


def test_bad_flag_exit_2(capsys):
    assert main(["verify", "rockett", "--no-such-flag"]) == 2
    assert main([]) == 2


def test_forced_failure_exit_1(monkeypatch, capsys):
    def broken(cfg):
        return [IdentityReport("broken", {"n": 0}, Variant.PAPER, Fraction(1), Fraction(2))]

    monkeypatch.setitem(catalog.CATALOG, "broken", CatalogEntry("broken", catalog.EXACT, "always wrong", broken))
    assert main(["verify", "broken"]) == 1


def test_unverifiable_entries_are_skipped(capsys):
    assert main(["verify", "corollary2-second"]) == 0
    assert "unverifiable as printed" in capsys.readouterr().err


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for name in ("rockett", "even-binom", "corollary2-second", "theorem-geth", "dirichlet-mc"):
        assert name in out


def test_list_json(capsys):
    assert main(["list", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert {row["name"] for row in data} == set(catalog.CATALOG)


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.csv"
    assert main(["verify", "k-weighted", "--n-max", "3", "--format", "csv", "--out", str(path)]) == 0
    data = path.read_bytes()
    assert b"\r\n" not in data
    rows = list(csv.reader(io.StringIO(data.decode("utf-8"))))
    assert rows[0] == list(cli.COLUMNS)
    assert len(rows) == 5


def test_numeric_command_small(capsys):
    assert main(["numeric", "--samples", "20000"]) == 0


def test_method_check_instances(capsys):
    assert main(["method-check", "--instances", "3", "--n-max", "4", "--m-max", "1", "--format", "csv"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert sum(1 for r in rows[1:] if r[0] == "theorem1") == 3


class TestRenderReport:
    def test_empty_csv_is_header_only(self):
        assert render_report([], "csv") == b"identity,variant,params,lhs,rhs,verdict,note\n"

    def test_single_json(self):
        r = IdentityReport("rockett", {"n": 2}, Variant.PAPER, Fraction(5, 2), Fraction(5, 2))
        data = json.loads(render_report([r], "json"))
        assert data == [
            {
                "identity": "rockett",
                "variant": "paper-form",
                "params": {"n": 2},
                "lhs": "5/2",
                "rhs": "5/2",
                "verdict": "pass",
                "note": "",
            }
        ]

    def test_floats_shortest_round_trip(self):
        r = IdentityReport("x", {"s": 0.1}, Variant.PAPER, 0.1 + 0.2, 0.3, tolerance=1e-12)
        data = json.loads(render_report([r], "json"))
        assert data[0]["lhs"] == 0.30000000000000004
        assert "0.30000000000000004" in render_report([r], "csv").decode()

    def test_sorted_by_identity_then_params(self):
        reports = run_suite(["rockett", "eq2"], config=SuiteConfig(n_max=11))
        rows = json.loads(render_report(list(reversed(reports)), "json"))
        keys = [(row["identity"], row["params"]["n"]) for row in rows]
        assert keys == sorted(keys)

    @pytest.mark.parametrize("fmt", ["text", "json", "csv"])
    def test_deterministic(self, fmt):
        first = render_report(run_suite("rockett", n_max=10), fmt)
        second = render_report(run_suite("rockett", n_max=10), fmt)
        assert first == second

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render_report([], "xml")


def test_run_suite_examples():
    reports = run_suite("rockett", n_max=10, seed=3)
    assert len(reports) == 11 and all(r.passed for r in reports)
    reports = run_suite("even-binom", n_max=0)
    assert {r.variant: r.status for r in reports} == {
        Variant.CORRECTED: "pass",
        Variant.PAPER: "documented misprint",
    }
    with pytest.raises(catalog.UnknownIdentityError) as exc:
        run_suite("")
    assert "rockett" in str(exc.value)


def test_cli_subprocess_byte_identical(tmp_path):
    args = [sys.executable, "-m", "combident", "verify", "general-ab", "theorem1", "--n-max", "6", "--format", "json"]
    first = subprocess.run(args, capture_output=True, check=True).stdout
    second = subprocess.run(args, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"[")

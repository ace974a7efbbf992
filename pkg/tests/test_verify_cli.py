"""Tests for the command-line interface: exit codes, output, file writing."""

import json

import pytest

from iqsl2 import cli
from iqsl2.verify import CheckResult, SuiteReport


def fake_report(n_fail=1, witness="difference"):
    checks = [CheckResult("sample-check", (i,), False, witness)
              for i in range(n_fail)]
    checks.append(CheckResult("sample-check", (n_fail,), True))
    return SuiteReport("chi", {"bound": 1}, checks, 0.001)


class TestVerifyCommand:
    def test_pass_exit_zero(self, capsys):
        rc = cli.main(["verify", "qidentities", "--max", "3"])
        out = capsys.readouterr().out
        assert rc == 0
        assert out.startswith("suite qidentities:")
        assert "checks passed" in out
        assert out.rstrip().endswith("PASS")

    def test_varsigma_flag_maps_to_specialized(self, capsys):
        rc = cli.main(["verify", "mult-even", "--max", "2",
                       "--varsigma", "q-inverse"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "varsigma=specialized" in out

    def test_json_report(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        rc = cli.main(["verify", "fhy-forms", "--max", "2",
                       "--json", str(target)])
        capsys.readouterr()
        assert rc == 0
        payload = json.loads(target.read_text(encoding="utf-8"))
        assert payload["suite"] == "fhy-forms"
        assert all(c["pass"] for c in payload["checks"])

    def test_failure_exit_one(self, monkeypatch, capsys):
        monkeypatch.setattr(cli, "run_suite",
                            lambda *a, **k: fake_report())
        rc = cli.main(["verify", "chi"])
        out = capsys.readouterr().out
        assert rc == 1
        assert "FAIL sample-check (0,): difference" in out
        assert out.rstrip().endswith("FAIL")

    def test_failure_list_truncated_at_twenty(self, monkeypatch, capsys):
        monkeypatch.setattr(cli, "run_suite",
                            lambda *a, **k: fake_report(n_fail=25))
        rc = cli.main(["verify", "chi"])
        out = capsys.readouterr().out
        assert rc == 1
        assert "... and 5 more failures" in out

    def test_long_witness_truncated_on_stdout(self, monkeypatch, capsys):
        monkeypatch.setattr(
            cli, "run_suite",
            lambda *a, **k: fake_report(witness="x" * 5000))
        rc = cli.main(["verify", "chi"])
        out = capsys.readouterr().out
        assert rc == 1
        assert "truncated" in out
        assert "x" * 5000 not in out

    def test_bad_suite_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "nonsense"])
        assert exc.value.code == 2

    def test_bad_bound_exits_two(self, capsys):
        rc = cli.main(["verify", "chi", "--max", "0"])
        err = capsys.readouterr().err
        assert rc == 2
        assert "error:" in err

    def test_ceiling_exits_two(self, monkeypatch, capsys):
        monkeypatch.setenv("IQSL2_MAX_N", "4")
        rc = cli.main(["verify", "chi", "--max", "5"])
        err = capsys.readouterr().err
        assert rc == 2
        assert "IQSL2_MAX_N" in err


class TestTableCommand:
    def test_stdout_csv(self, capsys):
        rc = cli.main(["table", "--family", "odd", "--max", "0"])
        out = capsys.readouterr().out
        assert rc == 0
        assert out == ("family,m,n,l,coefficient,integral,positive\n"
                       "odd,0,0,0,1,true,true\n")

    def test_out_file_json(self, tmp_path, capsys):
        target = tmp_path / "table.json"
        rc = cli.main(["table", "--family", "ev", "--max", "2",
                       "--format", "json", "--out", str(target)])
        assert rc == 0
        assert capsys.readouterr().out == ""
        payload = json.loads(target.read_text(encoding="utf-8"))
        rows = {(r["m"], r["n"], r["l"]): r["coefficient"]
                for r in payload["rows"]}
        assert rows[(1, 1, 0)] == "q^-1 + q"

    def test_out_file_csv_matches_stdout(self, tmp_path, capsys):
        rc = cli.main(["table", "--family", "ev", "--max", "3"])
        stdout_text = capsys.readouterr().out
        target = tmp_path / "table.csv"
        assert rc == 0
        rc = cli.main(["table", "--family", "ev", "--max", "3",
                       "--out", str(target)])
        assert rc == 0
        assert target.read_text(encoding="utf-8") == stdout_text

    def test_negative_exits_two(self, capsys):
        rc = cli.main(["table", "--family", "ev", "--max", "-1"])
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_family_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["table", "--family", "both", "--max", "2"])
        assert exc.value.code == 2


class TestExpandCommand:
    def test_idp_default_basis(self, capsys):
        rc = cli.main(["expand", "idp", "--family", "ev", "--n", "0"])
        assert rc == 0
        assert capsys.readouterr().out == "(1)\n"

    def test_comult_theorem_equals_direct(self, capsys):
        rc = cli.main(["expand", "comult", "--family", "odd", "--n", "3",
                       "--form", "theorem"])
        theorem = capsys.readouterr().out
        assert rc == 0
        rc = cli.main(["expand", "comult", "--family", "odd", "--n", "3",
                       "--form", "direct"])
        direct = capsys.readouterr().out
        assert rc == 0
        assert theorem == direct
        assert "⊗" in theorem

    def test_idp_pbw_basis(self, capsys):
        rc = cli.main(["expand", "idp", "--family", "odd", "--n", "1",
                       "--basis", "pbw"])
        out = capsys.readouterr().out
        assert rc == 0
        assert out == "(1)*F + (v)*E*K^-1\n"

    def test_negative_exits_two(self, capsys):
        rc = cli.main(["expand", "idp", "--family", "ev", "--n", "-3"])
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_form_rejected_for_idp(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["expand", "idp", "--family", "ev", "--n", "2",
                      "--form", "direct"])
        assert exc.value.code == 2

    def test_basis_rejected_for_comult(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["expand", "comult", "--family", "ev", "--n", "2",
                      "--basis", "pbw"])
        assert exc.value.code == 2

import subprocess
import sys
from pathlib import Path

import pytest

from lndtools.cli import (
    EXIT_NO,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    EXIT_YES,
    run_command,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
FP = str(CORPUS / "ex_fp.lnd")
A4 = str(CORPUS / "ex_a4.lnd")
SURFACE = str(CORPUS / "ex_danielewski.lnd")


def test_check_reports_orders():
    code, report = run_command(["check", FP])
    assert code == EXIT_YES
    assert "order(x) = 3" in report
    assert report.splitlines()[0] == "relations preserved: yes"


def test_exp_canonical_output():
    code, report = run_command(["exp", FP, "--elem", "x;y;z"])
    assert code == EXIT_YES
    assert report == ("exp(s*d)(x) = x + s*y + 1/2*s^2*z\n"
                      "exp(s*d)(y) = y + s*z\n"
                      "exp(s*d)(z) = z")


def test_orbit_and_fixed():
    code, report = run_command(["orbit", FP, "--point", "0;0;1", "--time", "2"])
    assert code == EXIT_YES
    assert report == "orbit(0, 0, 1) at time 2 = (2, 2, 1)"
    code, report = run_command(["fixed", FP])
    assert code == EXIT_YES
    assert report == "fixed locus: (y, z)"


def test_kernel_exit_codes():
    code, report = run_command(["kernel", FP, "--elem", "z;y^2 - 2*x*z"])
    assert code == EXIT_YES
    assert report.endswith("kernel member: yes")
    code, report = run_command(["kernel", FP, "--elem", "x"])
    assert code == EXIT_NO
    assert report.endswith("kernel member: no")


def test_plinth_verdict_exit_codes():
    assert run_command(["plinth", FP, "--elem", "z"])[0] == EXIT_YES
    assert run_command(["plinth", FP, "--elem", "x"])[0] == EXIT_NO
    code, report = run_command(["plinth", A4, "--elem", "x*v - y*u",
                                "--max-power", "2", "--max-deg", "6"])
    assert code == EXIT_UNKNOWN
    assert "unknown at bounds" in report


def test_cylinder_yes_prints_slice_and_certificate():
    code, report = run_command(["cylinder", FP, "--elem", "z"])
    assert code == EXIT_YES
    lines = report.splitlines()
    assert lines[0] == "cylinder D(z): yes"
    assert "n = 1" in lines
    assert "f = y" in lines
    assert "slice = y/z" in lines
    assert "dixmier(y) = 0" in lines


def test_cylinder_no_for_non_kernel_element():
    code, report = run_command(["cylinder", FP, "--elem", "x"])
    assert code == EXIT_NO
    assert report == "cylinder D(x): no\nd(x) = y"


def test_trivialize():
    code, report = run_command(["trivialize", FP, "--h", "z", "--elem", "x"])
    assert code == EXIT_YES
    assert report == ("slice = y/z\n"
                      "c0 = (-1/2*y^2 + x*z)/z\n"
                      "c1 = 0\n"
                      "c2 = 1/2*z")
    # localizer without verified plinth membership propagates the verdict
    code, _ = run_command(["trivialize", FP, "--h", "y^2 - 2*x*z",
                           "--elem", "x"])
    assert code == EXIT_UNKNOWN


def test_slice_none():
    code, report = run_command(["slice-none", FP, "--max-deg", "6"])
    assert code == EXIT_NO
    assert report.splitlines()[0] == "no slice of degree <= 6"
    assert "certificate multipliers" in report


def test_plinth_verify_and_principal():
    code, report = run_command(["plinth-verify", A4, "--gens", "u;v"])
    assert code == EXIT_YES
    assert report.splitlines()[-1] == "complement ideal: (u, v)"
    code, report = run_command(["principal", A4, "--gens", "u;v"])
    assert code == EXIT_NO
    assert "gcd = 1" in report


def test_maximal_cylinder_outcomes():
    code, report = run_command(["maximal-cylinder", FP, "--gens", "z"])
    assert code == EXIT_YES
    assert "maximal principal cylinder: D(z)" in report
    code, report = run_command(["maximal-cylinder", A4, "--gens", "u;v"])
    assert code == EXIT_NO
    assert report.splitlines()[-1] == "maximal principal cylinder: none"


def test_algebra_commands():
    code, report = run_command(["gb", FP, "--ideal", "x^2 + y; x*y - 1"])
    assert code == EXIT_YES
    assert report == "order: degrevlex\nbasis: (x^2 + y, x*y - 1, y^2 + x)"
    code, report = run_command(["member", FP, "--elem", "x^3",
                                "--ideal", "x^2 + y; x*y - 1"])
    assert code == EXIT_NO
    assert report == "normal form = -1\nmember: no"
    assert run_command(["radmember", FP, "--elem", "x*y",
                        "--ideal", "x^2*y^3"])[0] == EXIT_YES
    code, report = run_command(["gcd", FP, "--elems",
                                "x^2 - y^2; x^2 + 2*x*y + y^2"])
    assert code == EXIT_YES
    assert report == "gcd = x + y"


def test_usage_errors(tmp_path):
    code, report = run_command(["cylinder", str(tmp_path / "missing.lnd"),
                                "--elem", "z"])
    assert code == EXIT_USAGE
    assert report.startswith("error:")

    bad = tmp_path / "bad.lnd"
    bad.write_text("ring R\nvars x y\nder x = \nder y = 0\n", encoding="utf-8")
    code, report = run_command(["check", str(bad)])
    assert code == EXIT_USAGE
    assert "line 3" in report

    code, _ = run_command(["exp", FP, "--elem", "x + w"])
    assert code == EXIT_USAGE
    code, _ = run_command(["plinth", FP, "--elem", "z", "--max-power", "0"])
    assert code == EXIT_USAGE
    code, _ = run_command(["orbit", FP, "--point", "1;2", "--time", "1"])
    assert code == EXIT_USAGE
    code, _ = run_command(["gcd", FP, "--elems", "x"])
    assert code == EXIT_USAGE
    code, _ = run_command(["nonsense", FP])
    assert code == EXIT_USAGE
    code, _ = run_command(["exp", FP])
    assert code == EXIT_USAGE


def test_non_preserving_derivation_gating(tmp_path):
    spec = tmp_path / "hyperbola.lnd"
    spec.write_text("ring H\nvars x y\nrel x*y - 1\nder x = 1\nder y = 0\n",
                    encoding="utf-8")
    code, report = run_command(["check", str(spec)])
    assert code == EXIT_NO
    assert report.splitlines()[0] == "relations preserved: no"
    code, report = run_command(["exp", str(spec), "--elem", "x"])
    assert code == EXIT_USAGE
    assert "does not preserve" in report


def test_non_nilpotent_check_is_inconclusive(tmp_path):
    spec = tmp_path / "euler.lnd"
    spec.write_text("ring E\nvars x\nder x = x\n", encoding="utf-8")
    code, report = run_command(["check", str(spec), "--cap", "12"])
    assert code == EXIT_UNKNOWN
    assert "order(x) > 12" in report
    code, report = run_command(["exp", str(spec), "--elem", "x"])
    assert code == EXIT_UNKNOWN
    assert report.startswith("unknown at bounds:")


def test_installed_entry_point_streams():
    script = [sys.executable, "-m", "lndtools.cli"]
    done = subprocess.run(script + ["fixed", FP], capture_output=True,
                          text=True)
    assert done.returncode == 0
    assert done.stdout == "fixed locus: (y, z)\n"
    assert done.stderr == ""
    done = subprocess.run(script + ["fixed", "definitely-missing.lnd"],
                          capture_output=True, text=True)
    assert done.returncode == EXIT_USAGE
    assert done.stdout == ""
    assert done.stderr.startswith("error:")
    done = subprocess.run(script + ["--help"], capture_output=True, text=True)
    assert done.returncode == 0
    assert "locally nilpotent" in done.stdout

"""The twelve acceptance criteria, run exactly as ``ghilb verify-all`` runs them.

Each test prints one PASS/FAIL line (plus observed values for failing parts)
straight to the terminal, bypassing output capture.
"""
import pytest

from ghilb import acceptance, cli

SEED = 42


@pytest.mark.parametrize("check", acceptance.ALL_CHECKS, ids=lambda fn: fn.__name__)
def test_criterion(check, capsys):
    chk = check(SEED)
    with capsys.disabled():
        print("\n" + chk.line())
        for key, value in chk.notes.items():
            print("    %s: %s" % (key, value))
    assert chk.passed, chk.line()


def test_verify_all_report_shape(monkeypatch):
    monkeypatch.setattr(acceptance, "ALL_CHECKS", (acceptance.check_exponents, acceptance.check_centralizers))
    code, payload = cli.run_command(["verify-all", "--seed", str(SEED)])
    ids = [c["id"] for c in payload["checks"]]
    assert ids == [11, 2]
    assert code == (0 if all(c["status"] == "pass" for c in payload["checks"]) else 1)

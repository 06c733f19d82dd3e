import json
import subprocess
import sys

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from artifact.cli import SCHEMA, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,code", [
    (["cohomology", "O(-4)", "--space", "Gr24"], 0),
    (["cohomology", "O(-3)", "--space", "Y", "--cutoff", "3"], 0),
    (["ext", "Omega1P4(0)", "Omega1P4(0)", "--space", "LGr"], 0),
    (["ext", "O(-2)", "Omega1P4(0)", "--space", "LGr", "--oracle", "none"], 2),
    (["tilting-check", "O+O(-1)+O(-2)+S(-1)", "--space", "Y"], 0),
    (["tilting-check", "O+O(-1)+O(-2)+S(-2)", "--space", "Y"], 1),
    (["exceptional-check", "O,S(1),O(1),O(2)", "--space", "LGr"], 0),
    (["exceptional-check", "O(1),O", "--space", "LGr"], 1),
    (["spherical-check", "S", "--space", "Y"], 0),
    (["mutate", "O,S(1),O(1),O(2)", "--space", "LGr", "--index", "1"], 0),
    (["resolve", "O(-1)", "--space", "LGr", "--against", "O,S(1),O(1),O(2)"], 0),
    (["iw-chain", "wprime4"], 0),
    (["iw-chain", "abuaf10"], 1),
    (["iw-chain", "cyclic(4,2)"], 0),
    (["cyclic", "--n", "4"], 0),
    (["cyclic", "--n", "4", "--ks", "0,1,2,3"], 1),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["cohomology", "O("],
    ["cohomology", "O(", "--space", "LGr"],
    ["cohomology", "O", "--space", "Mars"],
    ["ext", "O", "--space", "LGr"],
    ["ext", "O", "O", "--space", "LGr", "--oracle", "magic"],
    ["iw-chain", "W9*2"],
    ["resolve", "O(-1)", "--space", "LGr"],
    ["mutate", "O,S(1)", "--space", "LGr", "--index", "7"],
    ["spherical-check", "O", "--space", "LGr"],
    ["cyclic", "--n", "1"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 64


def test_json_report(capsys):
    code, out, _ = run(capsys, "cohomology", "O(-3)", "--space", "Y", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == SCHEMA
    assert doc["verdict"] == "Pass"
    assert doc["result"]["dims"] == {"0": "inf", "3": "1"}
    assert list(doc) == sorted(doc)


def test_json_is_deterministic(capsys):
    argv = ["iw-chain", "abuaf9", "--json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_ext_witness_in_json(capsys):
    code, out, _ = run(capsys, "tilting-check", "O+O(-1)+O(-2)+S(-2)", "--space", "Y", "--json")
    w = json.loads(out)["result"]["witness"]
    assert code == 1
    assert w[2] == "1"


def test_text_output(capsys):
    _, out, _ = run(capsys, "resolve", "O(-3)", "--space", "LGr", "--against", "S(-2),O(-2),O(-1),O")
    assert "0 -> O(-3) -> S(-2)^4 -> O(-2)^11 -> O(-1)^5 -> O -> 0" in out


def test_repro_markdown(capsys, tmp_path):
    target = tmp_path / "report.md"
    code, out, _ = run(capsys, "repro", "--out", str(target))
    # some literal clauses are unattainable, so repro reports failure
    assert code == 1
    assert target.read_text() == out
    assert out.startswith("#")
    assert "Summary:" in out
    assert run(capsys, "repro")[1] == out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "artifact", "cohomology", "O(1)", "--space", "LGr", "--json"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0
    assert json.loads(r.stdout)["result"]["dims"] == {"0": "5"}


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.text(alphabet="OSQLW^*()[];,+-0123456789 @abcdeknrsxyzPGY'", max_size=20),
       st.sampled_from(["LGr", "Gr24", "P", "Y", "Y'", "P3GL"]))
def test_malformed_input_never_crashes(capsys, expr, space):
    code = main(["cohomology", expr, "--space", space])
    capsys.readouterr()
    assert code in (0, 1, 2, 64)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.text(alphabet="W1234*,kcyli()p-0 rme", max_size=16))
def test_malformed_chain_specs(capsys, spec):
    code = main(["iw-chain", spec])
    capsys.readouterr()
    assert code in (0, 1, 2, 64)

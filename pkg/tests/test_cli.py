import io
import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from cyclokron.cli import run

README = Path(__file__).resolve().parent.parent / "README.md"
EXAMPLE = re.compile(r"^\$ cyclokron (.+?)\s+# exit (\d)$")


def readme_examples():
    out = []
    lines = README.read_text().splitlines()
    for i, line in enumerate(lines):
        m = EXAMPLE.match(line)
        if m:
            expected = []
            for follow in lines[i + 1:]:
                if follow.startswith("$") or follow.startswith("```"):
                    break
                expected.append(follow)
            out.append((m.group(1), int(m.group(2)), expected))
    return out


def invoke(cmd: str, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(cmd.split(), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


EXAMPLES = readme_examples()


def test_readme_has_examples():
    assert len(EXAMPLES) >= 20


@pytest.mark.parametrize("cmd, code, expected", EXAMPLES, ids=[e[0] for e in EXAMPLES])
def test_readme_example(cmd, code, expected):
    got, out, err = invoke(cmd)
    assert got == code, (out, err)
    if expected:
        assert out.splitlines() == expected
    if code == 2:
        assert len(err.strip().splitlines()) == 1


COMMANDS = [
    "det --vector 1,2,3",
    "det --vector 1,2,3 --modulus 5",
    "det-congruence --vector 2,1 -p 2",
    "claim verify -p 3",
    "claim expand -p 2",
    "perm orbits -p 5",
    "perm sign --perm 1,2,0",
    "phi -p 3",
    "lemma check --poly 1,1,1 -p 3",
    "zeta-identity --vector 1,0,0 -p 3",
    "factor --poly 4,2",
    "irreducible -p 3",
    "eisenstein -p 7",
    "relation --rationals 0,0,0,0,0 -p 5",
]


@pytest.mark.parametrize("cmd", COMMANDS)
def test_json_single_object(cmd):
    code, out, _ = invoke(cmd + " --json")
    assert code == 0
    obj = json.loads(out)
    assert isinstance(obj, dict)
    assert obj["exit_code"] == 0
    assert out.count("\n") == 1


def test_det_output():
    assert invoke("det --vector 1,2,3") == (0, "18\n", "")


def test_claim_verify_census():
    code, out, _ = invoke("claim verify -p 5")
    assert code == 0
    assert "5 fixed, 23 orbits of size 5" in out
    assert out.rstrip().endswith("CLAIM HOLDS")


def test_claim_verify_json_fields():
    obj = json.loads(invoke("claim verify -p 3 --json")[1])
    assert obj["holds"] and obj["fixed_points"] == 3
    assert obj["orbit_sizes"] == {"1": 3, "3": 1}


def test_negative_vector_forms():
    assert invoke("det --vector -1,2,-3")[1] == "-38\n"
    assert invoke("det --vector=-1,2,-3")[1] == "-38\n"


def test_seed_env(monkeypatch):
    monkeypatch.setenv("CYCLOKRON_SEED", "7")
    obj = json.loads(invoke("irreducible -p 3 --json")[1])
    assert obj["seed"] == 7
    obj = json.loads(invoke("irreducible -p 3 --json --seed 9")[1])
    assert obj["seed"] == 9
    monkeypatch.setenv("CYCLOKRON_SEED", "x")
    assert invoke("irreducible -p 3")[0] == 2


@pytest.mark.parametrize("cmd", [
    "det --vector 1,x,3",
    "det --vector 1,2 --algorithm gauss",
    "det --vector 1,2 --modulus 1",
    "det --vector 1,2,3,4,5,6,7,8,9,10 --algorithm leibniz",
    "lemma check --poly 1,1 -p 9",
    "zeta-identity --vector 1,1 -p 3",
    "relation --rationals 1/2,0.5,1 -p 3",
    "claim verify -p 11",
    "factor --poly 0",
    "perm sign",
    "nosuch",
])
def test_usage_errors(cmd):
    code, out, err = invoke(cmd)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_failing_property_exits_one(monkeypatch):
    from cyclokron import cli, cyclotomic

    monkeypatch.setattr(cyclotomic, "eisenstein_shift_check", lambda p: False)
    assert invoke("eisenstein -p 5")[0] == 1
    assert invoke("irreducible -p 5")[0] == 1
    monkeypatch.setattr(cli.circulant, "det_bareiss", lambda v: 1)
    assert invoke("det-congruence --vector 1,2,3 -p 3")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cyclokron", "phi", "-p", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 + t + t^2"

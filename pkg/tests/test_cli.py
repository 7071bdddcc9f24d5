"""End-to-end checks of the command line layer and its JSON contract."""

import argparse
import importlib
import json
import subprocess
import sys

from longsol.cli import OPERATION_COVERAGE, build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def run_text(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.rstrip("\n").split("\n")


def test_ord(capsys):
    assert run(capsys, "ord", "--expr", "w + w^2") == (0, {"normal": "w^2"})
    assert run(capsys, "ord", "--a", "2", "--mul", "w") == (0, {"result": "w"})
    assert run(capsys, "ord", "--a", "w", "--mul", "2") == (0, {"result": "w*2"})
    assert run(capsys, "ord", "--a", "w", "--cmp", "w+1") == (0, {"order": "less"})
    assert run(capsys, "ord", "--omega-pow", "2") == (0, {"result": "w^2"})
    code, doc = run(capsys, "ord", "--a", "w")
    assert code == 1
    assert doc["error"]["code"] == "bad-command"
    code, doc = run(capsys, "ord", "--expr", "w", "--add", "1")
    assert code == 1


def test_classify(capsys):
    assert run(capsys, "classify", "--tower", "2", "--point", "[5]") == (
        0,
        {"kappa": 2, "type": 2},
    )
    assert run(capsys, "classify", "--long", "--point", "w1*(2)") == (
        0,
        {"class": "ng", "gamma": "2"},
    )
    code, doc = run(capsys, "classify", "--long", "--point", "w1*(2)+w*5+1/2")
    assert (code, doc) == (0, {"class": "interval", "gamma": "2"})
    code, doc = run(capsys, "classify", "--point", "[5]")
    assert code == 1
    assert doc["error"]["code"] == "bad-command"


def test_orbit_rotation(capsys):
    code, doc = run(
        capsys, "orbit", "--tower", "2", "--p", "2",
        "--x", "inf0; inf1", "--y", "inf0; inf0",
    )
    assert code == 0
    assert doc["status"] == "recipe"
    assert doc["verified"] is True
    assert doc["maps_x_to_y"] is True
    assert [lvl["rot"] for lvl in doc["recipe"]] == [0, 1]


def test_orbit_verdicts(capsys):
    code, doc = run(
        capsys, "orbit", "--tower", "2", "--p", "2",
        "--x", "inf0", "--y", "(0| [3; w])",
    )
    assert (code, doc) == (0, {"status": "proven_distinct"})
    code, doc = run(
        capsys, "orbit", "--long", "--p", "2",
        "--x", "inf0", "--y", "(0| w1*(2))",
    )
    assert (code, doc) == (0, {"status": "unknown"})


def test_orbit_translation_recipe(capsys):
    code, doc = run(
        capsys, "orbit", "--tower", "2", "--p", "2",
        "--x", "(0| [3]); (0| [3])", "--y", "(0| [8]); (0| [8])",
    )
    assert code == 0
    assert doc["status"] == "recipe"
    assert doc["verified"] is True
    assert all(lvl["trans"] == 5 for lvl in doc["recipe"])


def test_fiber(capsys):
    assert run(capsys, "fiber", "--m", "2", "--n", "3", "--point", "inf1") == (
        0,
        {"stage": 6, "points": ["inf1", "inf4"]},
    )
    code, doc = run(
        capsys, "fiber", "--m", "2", "--n", "1", "--long",
        "--point", "(0| w^2)",
    )
    assert (code, doc) == (0, {"stage": 2, "points": ["(0| w^2)", "(1| w^2)"]})
    code, doc = run(capsys, "fiber", "--m", "7", "--n", "7", "--point", "inf0")
    assert code == 1
    assert "LONGSOL_INDEX_BOUND" in doc["error"]["message"]


def test_thread_verify(capsys):
    code, doc = run(
        capsys, "thread", "verify", "--p", "2,3", "--points", "inf0; inf1; inf3"
    )
    assert (code, doc) == (0, {"valid": True, "depth": 3, "top_stage": 6})
    code, doc = run(
        capsys, "thread", "verify", "--p", "2,3", "--points", "inf0; inf1; inf4"
    )
    assert code == 0
    assert doc["valid"] is False
    assert "bond" in doc["reason"]
    code, doc = run(
        capsys, "thread", "verify", "--p", "2,3", "--points", "inf0; infX"
    )
    assert code == 1
    assert doc["error"]["code"] == "parse-error"
    assert doc["error"]["position"] == 6


def test_thread_extend(capsys):
    code, doc = run(
        capsys, "thread", "extend", "--p", "2,3", "--points", "inf0",
        "--levels", "2",
    )
    assert code == 0
    assert doc["count"] == 6
    assert len(doc["threads"]) == 6
    assert doc["threads"][0] == "inf0; inf0; inf0"
    code, doc = run(
        capsys, "thread", "extend", "--p", "2", "--points", "inf0",
        "--levels", "2",
    )
    assert code == 1
    assert doc["error"]["code"] == "domain-error"


def test_depth_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("LONGSOL_DEPTH", "2")
    code, doc = run(
        capsys, "thread", "extend", "--p", "2,3", "--points", "inf0",
        "--levels", "2",
    )
    assert code == 1
    assert "LONGSOL_DEPTH" in doc["error"]["message"]
    monkeypatch.setenv("LONGSOL_DEPTH", "zebra")
    code, doc = run(capsys, "thread", "extend", "--p", "2", "--points", "inf0")
    assert code == 1
    assert doc["error"]["code"] == "bad-command"


def test_index_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("LONGSOL_INDEX_BOUND", "5")
    code, doc = run(capsys, "fiber", "--m", "2", "--n", "3", "--point", "inf0")
    assert code == 1
    assert "exceeds" in doc["error"]["message"]


def test_indecomp(capsys):
    code, doc = run(
        capsys, "indecomp", "--pn", "2", "--n", "1",
        "--c-arc", "0..0+1/2", "--g-arc", "0+2/5..0+1/10",
    )
    assert code == 0
    assert doc["witness"] is True
    assert doc["c_components"] == ["0..0+1/2", "1..1+1/2"]
    assert doc["c_separators"] == ["0+3/4", "1+3/4"]
    assert len(doc["uncovered"]) == 4
    code, doc = run(
        capsys, "indecomp", "--pn", "2", "--n", "1",
        "--c-arc", "0..0+1/2", "--g-arc", "0+3/5..0+9/10",
    )
    assert code == 1
    assert doc["error"]["code"] == "invalid-witness-input"


def test_chain_check(capsys):
    arcs = "0..0+3/10,0+1/4..0+11/20,0+1/2..0+4/5,0+3/4..0+1/20"
    assert run(capsys, "chain-check", "--n", "1", "--arcs", arcs) == (
        0,
        {"circular": True},
    )
    code, doc = run(
        capsys, "chain-check", "--n", "1",
        "--arcs", "0..0+1/5,0+1/10..0+3/10,0+1/2..0+3/5",
    )
    assert (code, doc) == (0, {"circular": False})


def test_cohomology(capsys):
    assert run(capsys, "cohomology", "invariant", "--s", "12:5") == (
        0,
        {"finite": {"2": 2, "3": 1}, "infinite": [5]},
    )
    assert run(capsys, "cohomology", "equiv", "--a", ":2", "--b", "3:2") == (
        0,
        {"equivalent": True},
    )
    assert run(capsys, "cohomology", "equiv", "--a", ":2", "--b", ":3") == (
        0,
        {"equivalent": False},
    )
    assert run(capsys, "cohomology", "member", "--s", ":2", "--r", "5/8") == (
        0,
        {"member": True},
    )
    assert run(capsys, "cohomology", "member", "--s", ":2", "--r", "1/3") == (
        0,
        {"member": False},
    )
    assert run(
        capsys, "cohomology", "sum", "--s", ":2,3", "--a", "5/6", "--b", "1/2"
    ) == (0, {"level": 2, "numerator": 8, "value": "4/3"})
    assert run(capsys, "cohomology", "degree", "--m", "3", "--n", "2") == (
        0,
        {"degree": 3},
    )


def test_parse_error_contract(capsys):
    code, doc = run(capsys, "ord", "--expr", "w^")
    assert code == 1
    assert doc == {
        "error": {
            "code": "parse-error",
            "message": "expected an exponent",
            "position": 2,
        }
    }


def test_internal_error_contract(capsys, monkeypatch):
    from longsol import cli

    def boom(m, n):
        raise RuntimeError("wires crossed")

    monkeypatch.setattr(cli, "h1_action", boom)
    code, doc = run(capsys, "cohomology", "degree", "--m", "1", "--n", "1")
    assert code == 2
    assert doc["error"]["code"] == "internal"


def test_text_format(capsys):
    code, lines = run_text(
        capsys, "--format", "text", "classify", "--tower", "2", "--point", "[5]"
    )
    assert code == 0
    assert lines == ["kappa: 2", "type: 2"]
    code, lines = run_text(
        capsys, "--format", "text", "cohomology", "invariant", "--s", "12:5"
    )
    assert code == 0
    assert "finite.2: 2" in lines
    assert "infinite.0: 5" in lines


def _sub_choices(parser):
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices
    return {}


def test_operation_coverage_table():
    top = _sub_choices(build_parser())
    paths = set()
    for name, sub in top.items():
        nested = _sub_choices(sub)
        if nested:
            paths.update("%s %s" % (name, inner) for inner in nested)
        else:
            paths.add(name)
    # every table entry names a real operation and a real subcommand,
    # and no subcommand is left without a library operation behind it
    assert set(OPERATION_COVERAGE.values()) == paths
    for dotted in OPERATION_COVERAGE:
        module_name, func_name = dotted.split(".")
        module = importlib.import_module("longsol." + module_name)
        assert callable(getattr(module, func_name)), dotted


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "longsol", "ord", "--expr", "w+1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"normal": "w+1"}

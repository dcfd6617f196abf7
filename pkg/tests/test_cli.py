import json
import shutil
import subprocess

import pytest

from rigcomplete.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_check_clean_examples(capsys):
    code, doc = run_json(capsys, "check", "--example", "bool-rig")
    assert code == 0 and doc["schema"] == 1 and doc["failed_conditions"] == []
    code, doc = run_json(capsys, "check", "--example", "finsets", "--rank-max", "3")
    assert code == 0 and doc["base"]["ok"]


def test_check_corrupted_fixture(capsys):
    code, doc = run_json(capsys, "check", "--example", "corrupted-fixture")
    assert code == 1
    assert {"gamma", "left-dist"} <= set(doc["failed_conditions"])


def test_check_graded_stage(capsys):
    code, doc = run_json(capsys, "check", "--example", "bool-rig", "--stages", "graded", "--n-max", "1")
    assert code == 0 and "graded" in doc and "base" not in doc


def test_usage_errors(capsys):
    assert main(["check", "--example", "nope"]) == 2
    assert main(["check", "--example", "z2", "--n-max", "-1"]) == 2
    assert main(["check", "--example", "z2", "--stages", "everything"]) == 2
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_resource_limit(capsys):
    code, doc = run_json(capsys, "check", "--example", "finsets", "--budget", "5")
    assert code == 3 and "budget" in doc["error"]


def test_pi0_classes(capsys):
    code, doc = run_json(capsys, "pi0", "--example", "z2")
    assert code == 0 and len(doc["table"]["classes"]) == 2
    assert doc["table"]["stabilized"] and doc["ring"]["ok"] and doc["oracle"]["ok"]
    code, doc = run_json(capsys, "pi0", "--example", "bool-rig")
    assert code == 0 and len(doc["table"]["classes"]) == 1


def test_pi0_with_too_short_words_is_not_stabilized(capsys):
    code, doc = run_json(capsys, "pi0", "--example", "z2", "--len-max", "1")
    assert code == 4 and "outside the enumeration" in doc["error"]


def test_pi0_emits_dot(capsys, tmp_path):
    dot = tmp_path / "w.dot"
    code, _ = run(capsys, "pi0", "--example", "z2", "--emit-dot", str(dot))
    assert code == 0
    text = dot.read_text()
    assert text.startswith("digraph pi0 {") and "->" in text and text.rstrip().endswith("}")


def test_complete_writes_levels(capsys, tmp_path):
    out = tmp_path / "c.json"
    code, _ = run(capsys, "complete", "--example", "bool-rig", "--n-max", "0", "--len-max", "1", "--out", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == 1 and [lv["q"] for lv in doc["levels"]] == [0, 1]
    level0 = doc["levels"][0]["objects"]
    # the unit-embedded terms over (0, ∅), one per rig element, and ζ_0
    assert len(level0) == 3
    assert sum("zeta" in json.dumps(o).lower() or "ζ" in json.dumps(o, ensure_ascii=False)
               for o in level0) == 1


def test_output_is_deterministic(capsys):
    _, a = run(capsys, "pi0", "--example", "z2", "--format", "json")
    _, b = run(capsys, "pi0", "--example", "z2", "--format", "json")
    assert a == b
    _, t = run(capsys, "pi0", "--example", "z2", "--format", "text")
    assert t.startswith("pi0 z2\n2 class(es); stabilized: True")


@pytest.mark.slow
def test_compare_gq_f2mod(capsys):
    code, doc = run_json(capsys, "compare-gq", "--example", "f2mod", "--rank-max", "2")
    assert code == 0 and doc["bijection"] and doc["stabilized"]


def test_compare_gq_small_finsets(capsys):
    code, doc = run_json(capsys, "compare-gq", "--example", "finsets", "--rank-max", "2", "--gq-samples", "50")
    assert code == 0 and doc["bijection"]


@pytest.mark.skipif(shutil.which("rigcomplete") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["rigcomplete", "check", "--example", "z2", "--format", "text"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0 and proc.stdout.startswith("check z2")

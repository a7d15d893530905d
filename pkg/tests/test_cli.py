from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from gs4 import figures
from gs4.blg import BlgProof, proof_to_json
from gs4.blgraph import BlGraph
from gs4.cli import main
from gs4.derivation import is_cut_free, parse_derivation


def run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def fig2a_file(tmp_path):
    path = tmp_path / "fig2a.gs4"
    path.write_text(figures.FIG2A)
    return str(path)


@pytest.fixture
def fig4a_file(tmp_path):
    path = tmp_path / "fig4a.gs4"
    path.write_text(figures.FIG4A)
    return str(path)


@pytest.fixture
def lower_file(tmp_path):
    path = tmp_path / "lower.json"
    path.write_text(proof_to_json(BlgProof(*figures.fig5_lower())))
    return str(path)


# ---------------------------------------------------------------------------
# check and transforms


def test_check_accepts_a_valid_derivation(fig2a_file) -> None:
    code, out, _ = run("check", fig2a_file)
    assert code == 0
    assert out == f"ok {figures.fig2a().conclusion}\n"


def test_check_reports_the_bad_node(tmp_path) -> None:
    bad = tmp_path / "bad.gs4"
    bad.write_text("(sup (ax {x:a , y:~a} |- x:a, y:~a) (ax {x:a , y:a} |- x:a, y:a))")
    code, out, err = run("check", str(bad))
    assert code == 1 and out == ""
    assert err == "AXIOM_PAIR_INVALID path=1 detail=x:a and y:a are not dual up to names\n"


def test_parse_errors_exit_with_one(tmp_path) -> None:
    bad = tmp_path / "bad.gs4"
    bad.write_text("(mix)")
    code, _, err = run("check", str(bad))
    assert code == 1 and err.startswith("PARSE_ERROR")


def test_missing_file_is_a_usage_error() -> None:
    code, _, err = run("check", "/nonexistent/file.gs4")
    assert code == 2 and err.startswith("USAGE path= detail=cannot read")


def test_unknown_command_is_a_usage_error() -> None:
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2


def test_isolate_fig2a(fig2a_file) -> None:
    code, out, _ = run("isolate", fig2a_file, "--target", "((x:~a | y:a) & (z:~a | w:a))")
    assert code == 0
    assert parse_derivation(out) == figures.fig2b()


def test_isolate_unknown_target(fig2a_file) -> None:
    code, _, err = run("isolate", fig2a_file, "--target", "(x:a | y:a)")
    assert code == 1 and err.startswith("TARGET_NOT_IN_CONCLUSION")


def test_invert_both_sides(fig2a_file) -> None:
    conj = "((x:~a | y:a) & (z:~a | w:a))"
    left = parse_derivation(run("invert", fig2a_file, "--target", conj)[1])
    right = parse_derivation(run("invert", fig2a_file, "--target", conj, "--side", "right")[1])
    assert str(left.conclusion) == "|- (x:~a | y:a)"
    assert str(right.conclusion) == "|- (z:~a | w:a)"


def test_invert_an_atom_is_an_error(tmp_path) -> None:
    f = tmp_path / "ax.gs4"
    f.write_text("(ax {x:a , y:~a} |- x:a, y:~a)")
    code, _, err = run("invert", str(f), "--target", "x:a")
    assert code == 1 and err


# ---------------------------------------------------------------------------
# graphs and normalization


def test_simple_graph_json(fig2a_file) -> None:
    code, out, _ = run("graph", fig2a_file)
    assert code == 0
    assert json.loads(out)["edges"] == [["w", "x"], ["w", "z"], ["x", "y"], ["y", "z"]]


def test_bl_graph_formats(fig4a_file) -> None:
    data = json.loads(run("graph", fig4a_file, "--semantics", "bl")[1])
    assert [(e["u"], e["v"]) for e in data["edges"]] == [("v", "w"), ("x", "y")]
    assert "label=" in run("graph", fig4a_file, "--semantics", "bl", "--format", "dot")[1]
    assert run("graph", fig4a_file, "--semantics", "bl", "--format", "fig5")[1].startswith("{v,w,x,y}: v/w x/y")
    assert run("graph", fig4a_file, "--format", "dot")[1].startswith("graph")


def test_fig5_format_needs_bl_semantics(fig4a_file) -> None:
    assert run("graph", fig4a_file, "--format", "fig5")[0] == 2


def test_normalize_fig4a(fig4a_file) -> None:
    code, out, _ = run("normalize", fig4a_file)
    assert code == 0
    assert is_cut_free(parse_derivation(out))
    assert run("normalize", fig4a_file, "--no-verify")[1] == out


# ---------------------------------------------------------------------------
# BLG


def test_blg_check_fig5_lower(lower_file) -> None:
    code, out, _ = run("blg", "check", lower_file)
    assert code == 0 and out.startswith("ok steps=") and out.endswith("size=35\n")
    assert run("blg", "check", lower_file, "--oracle")[0] == 0


def test_blg_check_rejects_a_broken_object(tmp_path) -> None:
    g, gamma = figures.fig5_upper()
    broken = BlgProof(BlGraph(g.vertices, frozenset(sorted(g.pairs)[1:])), gamma)
    f = tmp_path / "broken.json"
    f.write_text(proof_to_json(broken))
    code, _, err = run("blg", "check", str(f), "--oracle")
    assert code == 1 and err.startswith("MISSING_BRANCH")


def test_blg_from_deriv_and_back(fig2a_file, tmp_path) -> None:
    code, text, _ = run("blg", "from-deriv", fig2a_file)
    assert code == 0
    f = tmp_path / "fig2a.json"
    f.write_text(text)
    code, out, _ = run("blg", "sequentialize", str(f))
    assert code == 0
    assert is_cut_free(parse_derivation(out))


def test_blg_bad_file(tmp_path) -> None:
    f = tmp_path / "bad.json"
    f.write_text("{")
    code, _, err = run("blg", "check", str(f))
    assert code == 1 and err.startswith("PARSE_ERROR")


# ---------------------------------------------------------------------------
# figures and experiments


def test_repro_fig2_prints_both_edge_sets() -> None:
    code, out, _ = run("repro", "fig2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].endswith("wx wz xy yz")
    assert lines[1].endswith("wz xy")


@pytest.mark.parametrize("fig", ["fig2", "fig3", "fig4", "fig5"])
def test_every_repro_succeeds(fig: str) -> None:
    code, out, err = run("repro", fig)
    assert (code, err) == (0, "")
    assert out


def test_experiment_report(tmp_path) -> None:
    code, out, _ = run("experiment", "pulcini", "--seeds", "3")
    assert code == 0
    assert out.splitlines()[0] == "seed,eligible,preserved_logical_left,preserved_logical_right,preserved_superposed"
    assert len(out.splitlines()) == 4
    target = tmp_path / "report.csv"
    assert run("experiment", "pulcini", "--seeds", "3", "--out", str(target))[1] == ""
    assert target.read_text() == out
    assert run("experiment", "pulcini", "--seeds", "-1")[0] == 2


def test_outputs_are_byte_deterministic(fig4a_file) -> None:
    for argv in (("graph", fig4a_file, "--semantics", "bl"), ("normalize", fig4a_file), ("repro", "fig5")):
        assert run(*argv) == run(*argv)


def test_module_entry_point(fig2a_file) -> None:
    done = subprocess.run(
        [sys.executable, "-m", "gs4.cli", "check", fig2a_file], capture_output=True, text=True
    )
    assert done.returncode == 0 and done.stdout.startswith("ok ")

"""Command line surface: outputs, exit codes, reproducibility."""

from __future__ import annotations

import json

import pytest

from areapoly.cli import main
from areapoly.corpus import PRINTED_RELATION
from areapoly.dissection import save_dissection
from areapoly.corpus import corpus_dissection
from areapoly.triangulation import diagonal_family, save_triangulation


@pytest.fixture()
def tri_file(tmp_path):
    path = tmp_path / "tri.json"
    save_triangulation(diagonal_family(1), path)
    return str(path)


@pytest.fixture()
def poofed(tmp_path):
    tri = tmp_path / "poofed_tri.json"
    drawing = tmp_path / "poofed_drawing.json"
    code = main(
        [
            "poof",
            "--corpus",
            "tvertex",
            "--out-triangulation",
            str(tri),
            "--out-drawing",
            str(drawing),
        ]
    )
    assert code == 0
    return str(tri), str(drawing)


class TestRelationCommands:
    def test_zt_diagonal(self, capsys):
        assert main(["zt", "--diagonal", "1"]) == 0
        out = capsys.readouterr().out.strip()
        assert out == (
            "U^2 + U*A1 + 2*U*B1 + U*B2 + A1*B1 + A2*B1 + B1^2 + B1*B2"
        )

    def test_zt_from_file_json(self, tri_file, capsys):
        assert main(["zt", tri_file, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["degree"] == 2
        assert payload["variables"][0] == "U"

    def test_pt_corpus(self, capsys):
        assert main(["pt", "--corpus", "center-fan"]) == 0
        assert capsys.readouterr().out.strip() == "B1 - B2 + B3 - B4"

    def test_fan_matches_documented_string(self, capsys):
        assert main(["zt", "--corpus", "center-fan"]) == 0
        assert capsys.readouterr().out.strip() == PRINTED_RELATION

    def test_source_required(self, capsys):
        assert main(["zt"]) == 2

    def test_sources_are_exclusive(self, tri_file):
        assert main(["zt", tri_file, "--diagonal", "1"]) == 2

    def test_guard_exit_code(self):
        assert main(["zt", "--diagonal", "2", "--guard-basis", "3"]) == 3

    def test_oracle_diagonal(self, capsys):
        assert main(["oracle-diagonal", "1"]) == 0
        assert "agreement: yes" in capsys.readouterr().out


class TestCheckCommand:
    def test_all_checks_pass(self, capsys):
        assert main(["check", "--all", "--diagonal", "1"]) == 0
        assert "overall: pass" in capsys.readouterr().out

    def test_synthetic_non_monic_relation_fails(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("2*U + B1\n")
        assert main(["check", "--diagonal", "0", "--zt-file", str(bad)]) == 1
        out = capsys.readouterr().out
        assert "FAIL frame-monic" in out

    def test_relation_syntax_error(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("U ** 2")
        assert main(["check", "--diagonal", "0", "--zt-file", str(bad)]) == 2


class TestFileCommands:
    def test_validate_triangulation(self, tri_file):
        assert main(["validate", tri_file]) == 0

    def test_validate_flags_invalid_dissection(self, tmp_path, capsys):
        dissection = corpus_dissection("diag2")
        broken = type(dissection)(
            points=dissection.points,
            triangles=(dissection.triangles[0],),
        )
        path = tmp_path / "broken.json"
        save_dissection(broken, path)
        assert main(["validate", str(path)]) == 1

    def test_validate_garbage(self, tmp_path):
        path = tmp_path / "garbage.json"
        path.write_text("{not json")
        assert main(["validate", str(path)]) == 2

    def test_missing_file(self):
        assert main(["areas", "/does/not/exist.json"]) == 2

    def test_poof_payload(self, capsys):
        assert main(["poof", "--corpus", "tvertex", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["fillers"] == ["P1"]

    def test_areas(self, poofed, capsys):
        _, drawing = poofed
        assert main(["areas", drawing, "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["areas"]["P1"] == "0"
        assert payload["frame"] == "-1"
        assert payload["total"] == "2"

    def test_verify_vanish(self, poofed, tmp_path, capsys):
        _, drawing = poofed
        relation = tmp_path / "relation.txt"
        relation.write_text("U + B1 + B2 + P1\n")
        assert main(["verify-vanish", drawing, str(relation)]) == 0
        relation.write_text("U + B1\n")
        assert main(["verify-vanish", drawing, str(relation)]) == 1

    def test_integral_equation(self, poofed, capsys):
        _, drawing = poofed
        assert main(["integral-equation", drawing]) == 0
        out = capsys.readouterr().out
        assert "U + 1 = 0" in out
        assert "is a root: yes" in out


class TestColoringCommands:
    def test_color(self, capsys):
        assert main(["color", "--corpus", "fan4", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["colors"] == {"p": "C", "q": "A", "r": "A", "s": "B", "c": "A"}

    def test_rainbow(self, capsys):
        assert main(["rainbow", "--corpus", "diag2", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["rainbow"] == ["B2"]
        assert payload["boundary"] == "CAAB"

    def test_equidissect_report(self, capsys):
        assert main(["equidissect-report", "--corpus", "eighths"]) == 0
        assert "count admissible: yes" in capsys.readouterr().out


class TestRandomDrawing:
    def test_seed_reproducible(self, capsys):
        assert main(["random-drawing", "--diagonal", "1", "--seed", "9", "--json"]) == 0
        first = capsys.readouterr().out
        assert main(["random-drawing", "--diagonal", "1", "--seed", "9", "--json"]) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_seed_changes_output(self, capsys):
        assert main(["random-drawing", "--diagonal", "1", "--seed", "1", "--json"]) == 0
        first = capsys.readouterr().out
        assert main(["random-drawing", "--diagonal", "1", "--seed", "2", "--json"]) == 0
        assert capsys.readouterr().out != first


class TestDispatch:
    def test_unknown_command_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2

    def test_selftest_json(self, capsys):
        assert main(["selftest", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["ok"] is True
        assert len(payload["results"]) == 14
        assert all(r["passed"] for r in payload["results"])

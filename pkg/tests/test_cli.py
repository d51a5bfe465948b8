import json
import os
import subprocess
import sys

import pytest

from squaredominoes import Placement, Patch, dump_tileset
from squaredominoes.cli import main
from squaredominoes.formats import dump_patch, parse_patch

from conftest import mismatching_pair, mono_tileset


@pytest.fixture
def files(tmp_path, a7, rules):
    good = tmp_path / "good.patch"
    good.write_text(dump_patch(rules.supertile(Placement(a7.tiles[0].tile_id, 0))))
    bad = tmp_path / "bad.patch"
    bad.write_text(dump_patch(Patch.from_rows([list(mismatching_pair(a7))])))
    broken = tmp_path / "broken.patch"
    broken.write_text("patch 2 1\nA:0\n")
    return good, bad, broken


def test_validate_exit_codes(files, capsys):
    good, bad, broken = files
    assert main(["validate", str(good)]) == 0
    assert main(["validate", str(bad)]) == 1
    assert main(["validate", str(broken)]) == 2
    assert main(["validate", str(good.parent / "missing.patch")]) == 2
    err = capsys.readouterr().err
    assert "broken.patch:2:1" in err and "cannot read" in err


def test_validate_json(files, capsys):
    _, bad, _ = files
    assert main(["validate", "--json", str(bad)]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "squaredominoes.violations/1" and doc["count"] == 1


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["solve"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_solve_and_count(tmp_path, capsys):
    out = tmp_path / "s.patch"
    assert main(["solve", "3", "2", "-o", str(out)]) == 0
    assert main(["validate", str(out)]) == 0
    capsys.readouterr()
    assert main(["solve", "2", "1", "--count", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["solutions_found"] > 0 and not doc["inconclusive"]


def test_solve_inconclusive_and_bad_fixture(capsys):
    assert main(["solve", "6", "6", "--count", "--node-budget", "5"]) == 1
    assert main(["solve", "2", "2", "--fix", "9,9,A,0"]) == 2
    assert main(["solve", "2", "2", "--fix", "0,0,nosuch,0"]) == 2


def test_grow_crop_and_render(tmp_path, a7, capsys):
    out = tmp_path / "g.patch"
    assert main(["grow", "A", "--depth", "2", "--crop", "5,3", "--at", "1,1", "-o", str(out)]) == 0
    p = parse_patch(out.read_text())
    assert (p.width, p.height) == (5, 3)
    svg = tmp_path / "g.svg"
    assert main(["render", str(out), "-o", str(svg), "--labels"]) == 0
    assert svg.read_text().count('<g class="cell"') == 15
    assert main(["grow", "A", "--depth", "9", "--budget", "100"]) == 2


def test_verify_rules(tmp_path, capsys):
    assert main(["verify-rules"]) == 0
    assert "0 failure(s)" in capsys.readouterr().out
    assert main(["verify-rules", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["failures"] == []
    broken = tmp_path / "broken.rules"
    broken.write_text("rule A 1 1\nA:0\n")
    assert main(["verify-rules", "--rules", str(broken)]) == 1


def test_torus_scan(capsys):
    code = main(["torus-scan", "--max-p", "2", "--max-q", "2", "--json"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "squaredominoes.torus-scan/1"
    assert len(doc["entries"]) == 1 + 2 + 1 + 2
    assert code == (1 if doc["nonzero"] else 0)
    assert doc["nonzero"] == [[e["p"], e["q"], e["shift"]] for e in doc["entries"] if e["count"]]
    assert "wall_time" not in json.dumps(doc)


def test_torus_scan_finds_periodic_control(tmp_path, capsys):
    mono = tmp_path / "mono.tileset"
    mono.write_text(dump_tileset(mono_tileset()))
    assert main(["torus-scan", "--tileset", str(mono), "--max-p", "2", "--max-q", "2"]) == 1
    assert "PERIODIC TILINGS FOUND" in capsys.readouterr().out


def test_wang_export(tmp_path, a7):
    out = tmp_path / "w.txt"
    assert main(["wang-export", "-o", str(out)]) == 0
    assert main(["wang-export", "--no-quotient", "-o", str(tmp_path / "all.txt")]) == 0
    assert len((tmp_path / "all.txt").read_text().splitlines()) == 2 + 4 * len(a7)


def test_compose_shipped_script(tmp_path, capsys):
    from squaredominoes.catalog import data_path
    out = tmp_path / "c.patch"
    assert main(["compose", str(data_path("grow_rules.compose")), "-o", str(out)]) == 0
    assert main(["validate", str(out)]) == 0


def test_tileset_env_var(tmp_path):
    mono = tmp_path / "mono.tileset"
    mono.write_text(dump_tileset(mono_tileset()))
    env = dict(os.environ, SQUAREDOMINOES_TILESET=str(mono))
    run = subprocess.run(
        [sys.executable, "-m", "squaredominoes", "solve", "2", "2"],
        env=env, capture_output=True, text=True,
    )
    assert run.returncode == 0
    assert parse_patch(run.stdout)[0, 0] == Placement("M", 0)

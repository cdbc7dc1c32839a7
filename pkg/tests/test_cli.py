import io
import json
import os
import subprocess
import sys

import pytest

from psfig.cli import PROLOG_ENV, main

EPS_72 = b"%!PS-Adobe-3.0 EPSF-3.0\n%%BoundingBox: 0 0 72 72\n"
EPS_TALL = b"%!PS-Adobe-3.0 EPSF-3.0\n%%BoundingBox: 0 0 72 144\n"

GOLDEN = (
    "ps::[begin] 4736286 4736286 0 0 4736286 4736286 startTexFig \n"
    "ps: plotfile f.ps \n"
    "ps::[end] endTexFig \n"
)


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def figdir(tmp_path, monkeypatch):
    (tmp_path / "f.ps").write_bytes(EPS_72)
    (tmp_path / "tall.ps").write_bytes(EPS_TALL)
    (tmp_path / "nobb.ps").write_bytes(b"%!PS\nshowpage\n")
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_bbox(figdir):
    assert run("bbox", "f.ps") == (0, "bp: 0 0 72 72 / sp: 0 0 4736286 4736286\n", "")


def test_bbox_structured(figdir):
    code, out, _ = run("bbox", "f.ps", "--format", "structured")
    assert code == 0
    assert json.loads(out) == {"file": "f.ps", "bp": ["0", "0", "72", "72"],
                               "sp": [0, 0, 4736286, 4736286]}


def test_bbox_missing_box(figdir):
    code, out, err = run("bbox", "nobb.ps")
    assert code == 1
    assert "no bb supplied or found" in err


def test_bbox_unreadable(figdir):
    code, _, err = run("bbox", "absent.ps")
    assert code == 2
    assert "absent.ps" in err


def test_bbox_strict_atend(figdir):
    (figdir / "atend.ps").write_bytes(b"%%BoundingBox: (atend)\n%%BoundingBox: 0 0 1 1\n")
    assert run("bbox", "atend.ps")[0] == 0
    assert run("bbox", "atend.ps", "--strict")[0] == 1


def test_plan_text_is_byte_exact(figdir):
    code, out, _ = run("plan", "file=f.ps")
    assert code == 0
    assert out == GOLDEN + "reserved: 4736286 4736286\n"


def test_plan_draft(figdir):
    code, out, _ = run("plan", "file=f.ps", "--draft")
    assert code == 0
    assert out == "draft: f.ps\nreserved: 4736286 4736286\n"
    code, out, _ = run("plan", "file=f.ps", "--draft", "--format", "structured")
    record = json.loads(out)
    assert record["mode"] == "draft"
    assert record["specials"] == []
    assert record["label"] == "f.ps"


def test_plan_full_override(figdir):
    code, out, _ = run("plan", "file=f.ps,cost=200", "--full")
    assert out.startswith("draft:")  # cost 200 is not below level 100
    code, out, _ = run("plan", "file=f.ps,cost=99", "--full")
    assert out.startswith("ps::[begin]")


def test_plan_structured_fields_and_round_trip(figdir):
    code, out, _ = run("plan", "file=tall.ps,height=36pt,clip=", "--format", "structured")
    assert code == 0
    record = json.loads(out)
    assert list(record) == ["mode", "specials", "width", "height", "rwidth", "rheight",
                            "bb", "logs", "label"]
    assert (record["width"], record["height"]) == (1156044, 2359296)
    assert record["logs"] == ["psfig: searching tall.ps for bounding box",
                              "psfig: including tall.ps ", "(clip)"]
    assert json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n" == out


def test_plan_bad_key(figdir):
    code, _, err = run("plan", "file=f.ps,bogus=1")
    assert code == 1
    assert "unknown key 'bogus'" in err


def test_plan_missing_figure(figdir):
    assert run("plan", "file=absent.ps")[0] == 2
    assert run("plan", "file=nobb.ps")[0] == 1


def test_plan_search_path(figdir):
    sub = figdir / "figs"
    sub.mkdir()
    (sub / "only.ps").write_bytes(EPS_72)
    assert run("plan", "file=only.ps")[0] == 2
    assert run("plan", "file=only.ps", "--search-path", str(sub))[0] == 0


def test_verbose_logs(figdir):
    code, out, err = run("plan", "file=f.ps,clip=", "--verbose")
    assert err.splitlines() == ["psfig: version 1.1", "psfig: searching f.ps for bounding box",
                                "psfig: including f.ps ", "(clip)"]


def write_tex(figdir, name, body):
    path = figdir / name
    path.write_text(body)
    return str(path)


def test_scan_one_figure(figdir):
    tex = write_tex(figdir, "doc.tex", "x\n\\psfig{file=f.ps}\n")
    code, out, _ = run("scan", tex)
    assert code == 0
    assert f"{tex}:2: \\psfig{{file=f.ps}}: full\n" + GOLDEN in out
    assert out.endswith("summary: 1 directives, 1 full, 0 draft, 0 errors\n")


def test_scan_draft_figures(figdir):
    tex = write_tex(figdir, "doc.tex", "\\psdraft\n\\psfig{file=f.ps}\n\\psfig{file=tall.ps}\n")
    code, out, _ = run("scan", tex)
    assert code == 0
    assert out.count(": draft\n") == 2
    assert "draft level 0" in out


def test_scan_figures_resolve_next_to_tex(figdir, tmp_path_factory, monkeypatch):
    monkeypatch.chdir(tmp_path_factory.mktemp("elsewhere"))
    tex = write_tex(figdir, "doc.tex", "\\psfig{file=f.ps}\n")
    assert run("scan", tex)[0] == 0


def test_scan_errors_continue(figdir):
    tex = write_tex(figdir, "doc.tex", "\\psfig{file=absent.ps}\n\\psfig{file=f.ps}\n")
    code, out, _ = run("scan", tex)
    assert code == 2
    assert "absent.ps" in out
    assert "1 full, 0 draft, 1 errors" in out


def test_scan_threads_state_across_files(figdir):
    a = write_tex(figdir, "a.tex", "\\psdraft\n")
    b = write_tex(figdir, "b.tex", "\\psfig{file=f.ps}\n")
    code, out, _ = run("scan", a, b, "--format", "structured")
    record = json.loads(out)
    assert record["sites"][1]["plan"]["mode"] == "draft"
    assert record["summary"] == {"directives": 2, "full": 0, "draft": 1, "errors": 0}


def test_scan_global_prolog_env(figdir, monkeypatch):
    tex = write_tex(figdir, "doc.tex", "\\psfiginit\n")
    monkeypatch.setenv(PROLOG_ENV, "/opt/figtex.pro")
    code, out, _ = run("scan", tex)
    assert "ps:plotfile /opt/figtex.pro global\n" in out
    code, out, _ = run("scan", tex, "--global-prolog", "mine.pro")
    assert "ps:plotfile mine.pro global\n" in out
    monkeypatch.delenv(PROLOG_ENV)
    code, out, _ = run("scan", tex)
    assert "ps:plotfile /usr/lib/ps/figtex.pro global\n" in out


def test_migrate_default_writes_alongside(figdir):
    tex = write_tex(figdir, "doc.tex", "\\psfig{file=tall.ps,height=36pt}\n")
    code, out, _ = run("migrate", tex)
    assert code == 0
    target = figdir / "doc.migrated.tex"
    assert target.read_text() == "\\includegraphics[width=1156044sp,height=2359296sp]{tall.ps}\n"
    assert "1 changes" in out
    assert (figdir / "doc.tex").read_text() == "\\psfig{file=tall.ps,height=36pt}\n"


def test_migrate_in_place_with_backup(figdir):
    original = "\\psfig{file=f.ps,clip=}\n"
    tex = write_tex(figdir, "doc.tex", original)
    assert run("migrate", tex, "--in-place")[0] == 0
    assert (figdir / "doc.tex.bak").read_text() == original
    migrated = (figdir / "doc.tex").read_text()
    assert migrated == "\\includegraphics[width=4736286sp,height=4736286sp,clip]{f.ps}\n"
    code, out, _ = run("migrate", tex, "--in-place")
    assert code == 0
    assert "0 changes" in out
    assert (figdir / "doc.tex").read_text() == migrated


def test_migrate_in_place_without_backup_needs_force(figdir):
    tex = write_tex(figdir, "doc.tex", "\\psfig{file=f.ps}\n")
    code, out, _ = run("migrate", tex, "--in-place", "--backup-suffix", "")
    assert code == 1
    assert "refusing" in out
    assert run("migrate", tex, "--in-place", "--backup-suffix", "", "--force")[0] == 0
    assert not (figdir / "doc.tex.bak").exists()


def test_migrate_unresolvable(figdir):
    body = "\\psfig{file=absent.ps}\n"
    tex = write_tex(figdir, "doc.tex", body)
    code, out, _ = run("migrate", tex)
    assert code == 1
    assert (figdir / "doc.migrated.tex").read_text() == body
    assert "absent.ps" in out


def test_module_entry_point(figdir):
    proc = subprocess.run([sys.executable, "-m", "psfig", "plan", "file=f.ps"],
                          capture_output=True, cwd=figdir,
                          env={**os.environ, "PYTHONIOENCODING": "utf-8"})
    assert proc.returncode == 0
    assert proc.stdout.decode() == GOLDEN + "reserved: 4736286 4736286\n"


def test_scan_structured_reports_file_errors(figdir):
    bad = write_tex(figdir, "bad.tex", "\\psfig{file=f.ps\n")
    code, out, _ = run("scan", bad, "missing.tex", "--format", "structured")
    record = json.loads(out)
    assert code == 2
    assert record["sites"][0]["line"] == 1
    assert "unbalanced" in record["sites"][0]["error"]
    assert record["sites"][1]["file"] == "missing.tex"
    assert record["summary"]["errors"] == 2

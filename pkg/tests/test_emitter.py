import re

import pytest

from psfig.emitter import (
    BANNER,
    DEFAULT_PROLOG,
    DocumentState,
    Mode,
    decide_mode,
    emit_draft_box,
    emit_global,
    emit_specials,
    init_specials,
    log_lines,
    psfig,
)
from psfig.epsbb import BoundingBox
from psfig.errors import NoBoundingBox, PsfigError
from psfig.options import parse_options
from psfig.solver import SizePlan

INCH = 4736286
BOX = BoundingBox(0, 0, INCH, INCH)
PLAN = SizePlan(BOX, INCH, INCH, INCH, INCH, INCH, INCH)

BEGIN = "ps::[begin] 4736286 4736286 0 0 4736286 4736286 startTexFig "
END = "ps::[end] endTexFig "


def files(name):
    if name == "f.ps":
        return BOX
    raise FileNotFoundError(name)


@pytest.mark.parametrize("cost, level, mode", [
    (10, 100, Mode.FULL),
    (10, 0, Mode.DRAFT),
    (100, 100, Mode.DRAFT),
    (99, 100, Mode.FULL),
    (-1, 0, Mode.FULL),
    (0, 0, Mode.DRAFT),
])
def test_decide_mode(cost, level, mode):
    assert decide_mode(cost, level) is mode


def test_basic_specials():
    assert emit_specials(PLAN, parse_options("file=f.ps")) == [BEGIN, "ps: plotfile f.ps ", END]


def test_clip_is_second():
    specials = emit_specials(PLAN, parse_options("file=f.ps,clip="))
    assert specials[1] == "ps:: 0 0 4736286 4736286 doclip "
    assert len(specials) == 4


def test_prolog_postlog_order():
    specials = emit_specials(PLAN, parse_options("file=f.ps,postlog=q.pro,prolog=p.pro,clip="))
    assert specials == [
        BEGIN,
        "ps:: 0 0 4736286 4736286 doclip ",
        "ps: plotfile p.pro ",
        "ps: plotfile f.ps ",
        "ps: plotfile q.pro ",
        END,
    ]


def test_width_before_height():
    plan = SizePlan(BoundingBox(-1, -2, 3, 4), 4, 6, 111, 222, 5, 5)
    assert emit_specials(plan, parse_options("file=x"))[0] == \
        "ps::[begin] 111 222 -1 -2 3 4 startTexFig "


GRAMMAR = [
    r"ps::\[begin\]( -?\d+){6} startTexFig ",
    r"ps::( -?\d+){4} doclip ",
    r"ps: plotfile \S+ ",
    r"ps::\[end\] endTexFig ",
]


@pytest.mark.parametrize("options", [
    "file=f.ps", "file=f.ps,clip=", "file=f.ps,prolog=a,postlog=b", "file=f.ps,height=1in,clip=,prolog=x",
])
def test_special_grammar_and_pairing(options):
    specials = emit_specials(PLAN, parse_options(options))
    assert specials[0].startswith("ps::[begin] ")
    assert specials[-1] == END
    assert sum(s.startswith("ps::[begin]") for s in specials) == 1
    assert sum(s == END for s in specials) == 1
    for s in specials:
        assert any(re.fullmatch(g, s) for g in GRAMMAR), s
        assert "  " not in s


def test_draft_box():
    draft = emit_draft_box(PLAN, parse_options("file=f.ps"))
    assert draft.mode is Mode.DRAFT
    assert draft.reserved == (INCH, INCH)
    assert draft.label == "f.ps"
    assert draft.specials == ()
    small = SizePlan(BOX, INCH, INCH, INCH, INCH, 100, 200)
    assert emit_draft_box(small, parse_options("file=f.ps")).reserved == (100, 200)


def test_draft_ignores_clip_and_logs():
    plain = emit_draft_box(PLAN, parse_options("file=f.ps"))
    fancy = emit_draft_box(PLAN, parse_options("file=f.ps,clip=,prolog=p.pro,postlog=q.pro"))
    assert plain == fancy


def test_emit_global():
    log = []
    assert emit_global("figtex.pro", log=log) == "ps:plotfile figtex.pro global"
    assert log == ["psfig: including figtex.pro globally"]
    assert emit_global(DEFAULT_PROLOG) == "ps:plotfile /usr/lib/ps/figtex.pro global"
    assert emit_global("", strict=True) == "ps:plotfile  global"
    with pytest.raises(PsfigError):
        emit_global("")


def test_init():
    log = []
    assert init_specials(log=log) == ["ps:plotfile /usr/lib/ps/figtex.pro global"]
    assert log == ["psfiginit", "psfig: including /usr/lib/ps/figtex.pro globally"]


def test_log_lines():
    assert BANNER == "psfig: version 1.1"
    assert log_lines(Mode.FULL, parse_options("file=f.ps")) == ["psfig: including f.ps "]
    assert log_lines(Mode.FULL, parse_options("file=f.ps,clip=")) == ["psfig: including f.ps ", "(clip)"]
    assert log_lines(Mode.DRAFT, parse_options("file=f.ps,clip=")) == []


def test_psfig_full_pipeline():
    plan = psfig(parse_options("file=f.ps,clip="), DocumentState(), files)
    assert plan.mode is Mode.FULL
    assert plan.specials[0] == BEGIN
    assert plan.reserved == (INCH, INCH)
    assert plan.logs == (
        "psfig: searching f.ps for bounding box", "psfig: including f.ps ", "(clip)")


def test_psfig_draft_still_searches():
    plan = psfig(parse_options("file=f.ps"), DocumentState().psdraft(), files)
    assert plan.mode is Mode.DRAFT
    assert plan.specials == ()
    assert plan.logs == ("psfig: searching f.ps for bounding box",)


def test_psfig_errors_propagate():
    with pytest.raises(FileNotFoundError):
        psfig(parse_options("file=nope.ps"), None, files)
    with pytest.raises(NoBoundingBox):
        psfig(parse_options("height=1in"), None, files)


def test_document_state():
    s = DocumentState()
    assert s.draft_level == 100
    assert s.psdraft().draft_level == 0
    assert s.psdraft().psfull() == s
    assert s.with_global("a").with_global("b").global_prologs == ("a", "b")

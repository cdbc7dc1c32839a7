"""The ``ps:`` special protocol and per-figure inclusion plans.

A full inclusion is bracketed by ``startTexFig``/``endTexFig``::

    ps::[begin] W H LLX LLY URX URY startTexFig
    ps:: LLX LLY URX URY doclip                    (clip only)
    ps: plotfile PROLOG                            (prolog only)
    ps: plotfile FILE
    ps: plotfile POSTLOG                           (postlog only)
    ps::[end] endTexFig

Tokens are separated by one space and every special ends with one space.
Global prologs use ``ps:plotfile FILE global``, without the space after the
colon.  A figure whose cost is not below the document's draft level is
replaced by a labelled placeholder box of the reserved size.
"""

import enum
from dataclasses import dataclass, field, replace
from typing import Optional

from .errors import PsfigError
from .solver import plan_sizes
from .texdim import format_sp

__all__ = [
    "VERSION",
    "BANNER",
    "DEFAULT_PROLOG",
    "DRAFT_LEVEL",
    "FULL_LEVEL",
    "Mode",
    "DocumentState",
    "InclusionPlan",
    "decide_mode",
    "emit_specials",
    "emit_draft_box",
    "emit_global",
    "global_log_line",
    "init_specials",
    "log_lines",
    "psfig",
]

VERSION = "1.1"
BANNER = f"psfig: version {VERSION}"
DEFAULT_PROLOG = "/usr/lib/ps/figtex.pro"
DRAFT_LEVEL = 0
FULL_LEVEL = 100


class Mode(str, enum.Enum):
    FULL = "full"
    DRAFT = "draft"


@dataclass(frozen=True)
class DocumentState:
    """Draft level and global prologs accumulated while reading a document.

    A document starts fully included (level 100).
    """

    draft_level: int = FULL_LEVEL
    global_prologs: tuple = ()

    def psdraft(self):
        return replace(self, draft_level=DRAFT_LEVEL)

    def psfull(self):
        return replace(self, draft_level=FULL_LEVEL)

    def with_global(self, path):
        return replace(self, global_prologs=self.global_prologs + (path,))


@dataclass(frozen=True)
class InclusionPlan:
    mode: Mode
    reserved: tuple
    specials: tuple = ()
    label: Optional[str] = None
    sizes: object = None
    logs: tuple = field(default=(), compare=False)

    @property
    def rwidth(self):
        return self.reserved[0]

    @property
    def rheight(self):
        return self.reserved[1]


def decide_mode(cost, draft_level):
    """Full inclusion iff ``cost < draft_level``."""
    return Mode.FULL if cost < draft_level else Mode.DRAFT


def _special(*tokens):
    return " ".join(tokens) + " "


def emit_specials(plan, opts):
    """Return the ordered special strings for a full inclusion."""
    bb = [format_sp(v) for v in plan.bb]
    out = [_special("ps::[begin]", format_sp(plan.width), format_sp(plan.height),
                    *bb, "startTexFig")]
    if opts.clip:
        out.append(_special("ps::", *bb, "doclip"))
    if opts.prolog is not None:
        out.append(_special("ps: plotfile", opts.prolog))
    out.append(_special("ps: plotfile", opts.file))
    if opts.postlog is not None:
        out.append(_special("ps: plotfile", opts.postlog))
    out.append(_special("ps::[end]", "endTexFig"))
    return out


def emit_draft_box(plan, opts):
    """Placeholder for a draft-gated figure: the reserved box, labelled with
    the file name.  Clip, prolog and postlog play no part."""
    return InclusionPlan(
        Mode.DRAFT, (plan.rwidth, plan.rheight), label=opts.file, sizes=plan,
    )


def emit_global(path, strict=False, log=None):
    """Special for a document-wide PostScript file.

    >>> emit_global("figtex.pro")
    'ps:plotfile figtex.pro global'
    """
    if not path and not strict:
        raise PsfigError("global prolog path is empty")
    if log is not None:
        log.append(global_log_line(path))
    return f"ps:plotfile {path} global"


def global_log_line(path):
    return f"psfig: including {path} globally"


def init_specials(prolog=DEFAULT_PROLOG, strict=False, log=None):
    """What the init macro does: announce itself, then include the prolog globally."""
    if log is not None:
        log.append("psfiginit")
    return [emit_global(prolog, strict=strict, log=log)]


def log_lines(mode, opts):
    """Log lines written while emitting one figure (after any bb search)."""
    if mode is not Mode.FULL:
        return []
    lines = [f"psfig: including {opts.file} "]
    if opts.clip:
        lines.append("(clip)")
    return lines


def psfig(opts, state=None, scan=None, strict=False):
    """Plan one ``\\psfig`` call: sizes, mode gating, then specials or a draft box."""
    if state is None:
        state = DocumentState()
    logs = []
    sizes = plan_sizes(opts, scan, strict=strict, log=logs)
    mode = decide_mode(opts.cost, state.draft_level)
    logs.extend(log_lines(mode, opts))
    if mode is Mode.FULL:
        plan = InclusionPlan(
            Mode.FULL, (sizes.rwidth, sizes.rheight),
            specials=tuple(emit_specials(sizes, opts)), sizes=sizes,
        )
    else:
        plan = emit_draft_box(sizes, opts)
    return replace(plan, logs=tuple(logs))

"""Find psfig directives in TeX sources, replay them, and migrate them.

The scanner is static.  It knows comments, control sequences and brace
groups, but expands nothing, so a ``\\psfig`` hidden behind a user macro is
invisible and one written inside a ``\\def`` body is only reported.

Migration splices replacements over directive spans and never touches
other bytes.  Each ``\\psfig{...}`` becomes ``\\includegraphics`` with
sp-exact sizes.  ``\\psdraft``, ``\\psfull``, ``\\psglobal{...}`` and
``\\psfiginit`` are commented out with a note.  Notes sit on their own
comment line just before the replacement, so the text after a directive
stays live.
"""

import bisect
import enum
from dataclasses import dataclass, field
from typing import Optional

from .emitter import DEFAULT_PROLOG, DocumentState, InclusionPlan, Mode, emit_global, init_specials, psfig
from .errors import PsfigError, TeXScanError
from .options import parse_options
from .texdim import format_pt

__all__ = [
    "Kind",
    "Directive",
    "Diagnostic",
    "Outcome",
    "MigrationResult",
    "scan_document",
    "process_document",
    "migrate",
    "to_includegraphics",
]


class Kind(str, enum.Enum):
    PSFIG = "psfig"
    PSDRAFT = "psdraft"
    PSFULL = "psfull"
    PSGLOBAL = "psglobal"
    INIT = "psfiginit"


_ARG_KINDS = {"psfig": Kind.PSFIG, "psglobal": Kind.PSGLOBAL}
_BARE_KINDS = {"psdraft": Kind.PSDRAFT, "psfull": Kind.PSFULL, "psfiginit": Kind.INIT}
_DEF_WORDS = {"def", "gdef", "edef", "xdef"}
_NEWCOMMAND_WORDS = {"newcommand", "renewcommand", "providecommand"}


@dataclass(frozen=True)
class Directive:
    kind: Kind
    arg: Optional[str]
    span: tuple
    line: int

    def source(self, text):
        return text[self.span[0]:self.span[1]]


@dataclass(frozen=True)
class Diagnostic:
    line: int
    message: str
    severity: str = "error"

    def __str__(self):
        return f"line {self.line}: {self.severity}: {self.message}"


@dataclass
class Outcome:
    """Result of replaying one directive."""

    directive: Directive
    state: DocumentState
    plan: Optional[InclusionPlan] = None
    specials: list = field(default_factory=list)
    logs: list = field(default_factory=list)
    error: Optional[BaseException] = None

    @property
    def ok(self):
        return self.error is None


@dataclass
class MigrationResult:
    text: object
    changes: int
    diagnostics: list


class _Lines:
    def __init__(self, text):
        self.starts = [0]
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch == "\n" or (ch == "\r" and text[i + 1:i + 2] != "\n"):
                self.starts.append(i + 1)
            i += 1

    def __call__(self, offset):
        return bisect.bisect_right(self.starts, offset)


def _skip_to_eol(text, i):
    while i < len(text) and text[i] not in "\r\n":
        i += 1
    return i


def _control_word(text, i):
    """Return ``(name, end)`` for the control sequence whose backslash is at *i*."""
    j = i + 1
    if j < len(text) and text[j].isascii() and text[j].isalpha():
        while j < len(text) and text[j].isascii() and text[j].isalpha():
            j += 1
        return text[i + 1:j], j
    return text[i + 1:j + 1], min(j + 1, len(text))


def _skip_blanks(text, i):
    # TeX drops spaces after a control word, and at most one line end.
    while i < len(text) and text[i] in " \t":
        i += 1
    if text[i:i + 2] == "\r\n":
        i += 2
    elif i < len(text) and text[i] in "\r\n":
        i += 1
    while i < len(text) and text[i] in " \t":
        i += 1
    return i


def _match_brace(text, i):
    """Index just past the ``}`` matching the ``{`` at *i*, or ``None``."""
    depth = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\":
            i += 2
            continue
        if ch == "%":
            i = _skip_to_eol(text, i)
            continue
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth == 0:
                return i + 1
        i += 1
    return None


def scan_document(text, diagnostics=None):
    """Return the psfig directives of a TeX source in document order.

    *text* may be ``str`` or ``bytes`` (read as Latin-1, so spans are byte
    offsets).  Warnings, e.g. for directives inside macro definitions, are
    appended to *diagnostics* if given.  An unterminated directive argument
    raises :class:`TeXScanError`.
    """
    if isinstance(text, bytes):
        text = text.decode("latin-1")
    if diagnostics is None:
        diagnostics = []
    line_of = _Lines(text)
    found = []
    groups = []  # True for groups opened as a macro body
    pending_def = False
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "%":
            i = _skip_to_eol(text, i)
            continue
        if ch == "{":
            groups.append(pending_def)
            pending_def = False
            i += 1
            continue
        if ch == "}":
            if groups:
                groups.pop()
            i += 1
            continue
        if ch != "\\":
            i += 1
            continue

        name, end = _control_word(text, i)
        if name in _DEF_WORDS:
            pending_def = True
            i = end
            continue
        if name in _NEWCOMMAND_WORDS:
            j = _skip_blanks(text, end)
            if j < n and text[j] == "{":
                j = _match_brace(text, j) or n
            pending_def = True
            i = j
            continue
        if name not in _ARG_KINDS and name not in _BARE_KINDS:
            i = end
            continue

        line = line_of(i)
        if any(groups) or pending_def:
            diagnostics.append(Diagnostic(
                line, f"\\{name} inside a macro definition is not expanded; left as is",
                "warning"))
            i = end
            continue
        if name in _BARE_KINDS:
            found.append(Directive(_BARE_KINDS[name], None, (i, end), line))
            i = end
            continue
        j = _skip_blanks(text, end)
        if j >= n or text[j] != "{":
            diagnostics.append(Diagnostic(
                line, f"\\{name} without a braced argument; skipped", "warning"))
            i = end
            continue
        close = _match_brace(text, j)
        if close is None:
            raise TeXScanError(f"unbalanced braces after \\{name}", line)
        found.append(Directive(_ARG_KINDS[name], text[j + 1:close - 1], (i, close), line))
        i = close
    return found


def process_document(directives, scan=None, state=None, strict=False,
                     prolog=DEFAULT_PROLOG, force_level=None):
    """Replay *directives* in order.

    Returns ``(outcomes, final_state)``.  Errors are recorded on the
    directive's outcome and do not stop the replay.  *force_level* pins the
    draft level, so document toggles are recorded but have no effect.
    """
    if state is None:
        state = DocumentState()
    if force_level is not None:
        state = DocumentState(force_level, state.global_prologs)
    outcomes = []
    for d in directives:
        out = Outcome(d, state)
        try:
            if d.kind is Kind.PSDRAFT:
                if force_level is None:
                    state = state.psdraft()
            elif d.kind is Kind.PSFULL:
                if force_level is None:
                    state = state.psfull()
            elif d.kind is Kind.PSGLOBAL:
                out.specials.append(emit_global(d.arg, strict=strict, log=out.logs))
                state = state.with_global(d.arg)
            elif d.kind is Kind.INIT:
                out.specials.extend(init_specials(prolog, strict=strict, log=out.logs))
                state = state.with_global(prolog)
            else:
                opts = parse_options(d.arg)
                out.plan = psfig(opts, state, scan, strict=strict)
                out.logs.extend(out.plan.logs)
        except (PsfigError, OSError, ZeroDivisionError) as exc:
            out.error = exc
        out.state = state
        outcomes.append(out)
    return outcomes, state


def to_includegraphics(plan, opts):
    """``\\includegraphics`` call equivalent to a planned figure, in exact sp."""
    sizes = plan.sizes
    keys = [f"width={sizes.width}sp", f"height={sizes.height}sp"]
    if opts.clip:
        keys.append("clip")
    return f"\\includegraphics[{','.join(keys)}]{{{opts.file}}}"


def _newline_of(text):
    for i, ch in enumerate(text):
        if ch == "\n":
            return "\n"
        if ch == "\r":
            return "\r\n" if text[i + 1:i + 2] == "\n" else "\r"
    return "\n"


def _rest_of_line_blank(text, i):
    while i < len(text) and text[i] in " \t":
        i += 1
    return i == len(text) or text[i] in "\r\n"


def _comment_out(source, note, nl, line_ends):
    # If the line ends here the source's own line end closes the comment;
    # adding another would leave a blank line, i.e. a paragraph break.
    body = source.replace("\r\n", "\n").replace("\r", "\n").replace("\n", nl + "% ")
    return f"% {body} -- {note}" + ("" if line_ends else nl)


_STATE_NOTES = {
    Kind.PSDRAFT: "psfig migration: draft gating dropped; the figures below were migrated at full size",
    Kind.PSFULL: "psfig migration: draft gating dropped",
    Kind.PSGLOBAL: "psfig migration: global PostScript prologs are not used by \\includegraphics",
    Kind.INIT: "psfig migration: the figtex prolog is not used by \\includegraphics",
}


def migrate(text, scan=None, strict=False, human=False, prolog=DEFAULT_PROLOG):
    """Rewrite psfig directives as graphicx calls.

    Returns a :class:`MigrationResult` whose ``text`` has the same type as the
    input.  Sites that cannot be planned are left unchanged and reported.
    """
    as_bytes = isinstance(text, bytes)
    src = text.decode("latin-1") if as_bytes else text
    diagnostics = []
    directives = scan_document(src, diagnostics)
    outcomes, _ = process_document(directives, scan, strict=strict, prolog=prolog)
    nl = _newline_of(src)

    pieces = []
    pos = 0
    changes = 0
    for out in outcomes:
        d = out.directive
        start, end = d.span
        original = src[start:end]
        if d.kind is not Kind.PSFIG:
            replacement = _comment_out(original, _STATE_NOTES[d.kind], nl,
                                       _rest_of_line_blank(src, end))
        elif out.error is not None:
            diagnostics.append(Diagnostic(d.line, f"\\psfig left unchanged: {out.error}"))
            continue
        else:
            opts = parse_options(d.arg)
            notes = []
            if out.plan.mode is Mode.DRAFT:
                notes.append("psfig migration: drawn as a draft placeholder in the original")
            if human:
                sizes = out.plan.sizes
                notes.append(f"psfig migration: {format_pt(sizes.width)} x {format_pt(sizes.height)}")
            for key in ("rwidth", "rheight", "prolog", "postlog"):
                if getattr(opts, key) is not None:
                    diagnostics.append(Diagnostic(
                        d.line, f"{key} has no \\includegraphics equivalent; dropped", "warning"))
            replacement = "".join(f"% {note}{nl}" for note in notes)
            replacement += to_includegraphics(out.plan, opts)
        pieces.append(src[pos:start])
        pieces.append(replacement)
        pos = end
        changes += 1
    pieces.append(src[pos:])
    result = "".join(pieces)
    diagnostics.sort(key=lambda diag: diag.line)
    if as_bytes:
        result = result.encode("latin-1")
    return MigrationResult(result, changes, diagnostics)

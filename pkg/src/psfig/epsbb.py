"""Find the ``%%BoundingBox:`` comment of an EPS file.

The scan is byte oriented.  A line qualifies only if it starts with the exact
bytes ``%%BoundingBox:`` in column 0.  LF, CRLF and lone CR all end a line,
so binary preview sections are skipped without ever being decoded.

In strict mode the first qualifying line is final: if its four coordinates
cannot be read, the scan fails, as the original macros did.  Lenient mode
skips such lines (typically ``(atend)``) and keeps looking.
"""

import os
import re
from typing import NamedTuple

from .errors import MalformedBoundingBox, NoBoundingBox
from .texdim import parse_dimension

__all__ = [
    "BB_PREFIX",
    "BoundingBox",
    "iter_lines",
    "parse_bb_line",
    "bp_tokens_to_box",
    "scan_bounding_box",
    "scan_file",
    "locate_figure",
    "FileScanner",
]

BB_PREFIX = b"%%BoundingBox:"

_NUMBER_RE = re.compile(rb"[-+]?(?:\d+\.?\d*|\.\d+)")


class BoundingBox(NamedTuple):
    """Figure corners in sp."""

    llx: int
    lly: int
    urx: int
    ury: int

    @property
    def width(self):
        return self.urx - self.llx

    @property
    def height(self):
        return self.ury - self.lly


def iter_lines(stream, chunk_size=8192):
    """Yield the lines of a binary stream without their terminators.

    Reads lazily: once the caller stops iterating, nothing further is
    requested from *stream*.
    """
    buf = b""
    skip_lf = False
    while True:
        chunk = stream.read(chunk_size)
        if skip_lf and chunk:
            skip_lf = False
            if chunk.startswith(b"\n"):
                chunk = chunk[1:]
                if not chunk:
                    continue
        if not chunk:
            if buf:
                yield buf
            return
        buf += chunk
        start = 0
        while True:
            cr = buf.find(b"\r", start)
            lf = buf.find(b"\n", start)
            if cr < 0 and lf < 0:
                break
            if cr < 0 or (0 <= lf < cr):
                yield buf[start:lf]
                start = lf + 1
                continue
            yield buf[start:cr]
            if cr + 1 < len(buf):
                start = cr + 2 if buf[cr + 1:cr + 2] == b"\n" else cr + 1
            else:
                # CR at chunk end: a following LF belongs to this terminator
                start = cr + 1
                skip_lf = True
        buf = buf[start:]


def parse_bb_line(line):
    """Return the four coordinate tokens of a bounding-box line, else ``None``.

    Raises :class:`MalformedBoundingBox` if the prefix matches but fewer than
    four tokens follow.  Tokens are returned as ``str`` and are not validated.
    """
    if isinstance(line, str):
        line = line.encode("latin-1")
    if not line.startswith(BB_PREFIX):
        return None
    tokens = line[len(BB_PREFIX):].split()
    if len(tokens) < 4:
        raise MalformedBoundingBox(line, "expected four coordinates")
    return tuple(t.decode("latin-1") for t in tokens[:4])


def bp_tokens_to_box(tokens):
    """Convert four big-point tokens to a :class:`BoundingBox` in sp."""
    values = []
    for tok in tokens:
        if not _NUMBER_RE.fullmatch(tok.encode("latin-1")):
            raise MalformedBoundingBox(" ".join(tokens), f"{tok!r} is not a number")
        values.append(parse_dimension(tok + "bp"))
    return BoundingBox(*values)


def scan_bounding_box(stream, strict=False, with_tokens=False):
    """Scan *stream* (binary) for its bounding box, returned in sp.

    With ``with_tokens=True`` returns ``(box, tokens)`` where tokens are the
    raw bp strings from the file.
    """
    for line in iter_lines(stream):
        try:
            tokens = parse_bb_line(line)
            if tokens is None:
                continue
            box = bp_tokens_to_box(tokens)
        except MalformedBoundingBox:
            if strict:
                raise
            continue
        return (box, tokens) if with_tokens else box
    raise NoBoundingBox()


def scan_file(path, strict=False, with_tokens=False):
    with open(path, "rb") as fp:
        try:
            return scan_bounding_box(fp, strict=strict, with_tokens=with_tokens)
        except NoBoundingBox as exc:
            exc.file = os.fspath(path)
            raise


def locate_figure(name, dirs=()):
    """Resolve a figure name: absolute paths as-is, else the first dir holding it.

    Falls back to *name* relative to the working directory, so the caller's
    ``open`` reports a normal ``FileNotFoundError``.
    """
    if os.path.isabs(name):
        return name
    for d in dirs:
        candidate = os.path.join(d, name)
        if os.path.isfile(candidate):
            return candidate
    return name


class FileScanner:
    """Callable ``name -> BoundingBox`` that the solver uses to read figures.

    *dirs* are tried in order for relative names; ``opened`` records every
    path actually read.
    """

    def __init__(self, dirs=(), strict=False):
        self.dirs = list(dirs)
        self.strict = strict
        self.opened = []

    def __call__(self, name):
        path = locate_figure(name, self.dirs)
        self.opened.append(path)
        return scan_file(path, strict=self.strict)

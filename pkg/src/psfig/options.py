"""The psfig option string: ``file=fig.ps,height=3in,clip=``.

Items are separated by commas and split at their first ``=``; each is applied in turn to
a fresh :class:`FigOptions`, so a repeated key keeps its last value.

===========  ==========================================================
key          effect
===========  ==========================================================
file         figure file name, stored verbatim
figure       alias of ``file``
bbllx ...    ``bbllx``, ``bblly``, ``bburx``, ``bbury``: bounding box
             corners (TeX dimensions)
height       rendered height (TeX dimension)
width        rendered width (TeX dimension)
rheight      reserved height, defaults to the rendered height
rwidth       reserved width, defaults to the rendered width
prolog       PostScript file plotted before the figure
postlog      PostScript file plotted after the figure
clip         clip to the bounding box; any value is ignored
cost         draft-gating cost, an integer (default 10)
===========  ==========================================================
"""

from dataclasses import dataclass, fields, replace
from typing import Optional

from .errors import DimensionError, OptionError
from .texdim import parse_dimension

__all__ = ["FigOptions", "KEYS", "DIMENSION_KEYS", "parse_options", "apply_key"]

DEFAULT_COST = 10

DIMENSION_KEYS = (
    "bbllx", "bblly", "bburx", "bbury",
    "height", "width", "rheight", "rwidth",
)
KEYS = ("file", "figure", *DIMENSION_KEYS, "prolog", "postlog", "clip", "cost")


@dataclass(frozen=True)
class FigOptions:
    """Parsed psfig parameters.

    Dimension fields are sp integers, ``None`` when the option was never
    given.  ``file`` is ``""`` when unset.
    """

    file: str = ""
    bbllx: Optional[int] = None
    bblly: Optional[int] = None
    bburx: Optional[int] = None
    bbury: Optional[int] = None
    height: Optional[int] = None
    width: Optional[int] = None
    rheight: Optional[int] = None
    rwidth: Optional[int] = None
    prolog: Optional[str] = None
    postlog: Optional[str] = None
    clip: bool = False
    cost: int = DEFAULT_COST

    @property
    def has_full_bb(self):
        return None not in (self.bbllx, self.bblly, self.bburx, self.bbury)

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def apply_key(opts, key, value, position=None):
    """Return a copy of *opts* with one ``key=value`` item applied."""
    if key in ("file", "figure"):
        return replace(opts, file=value)
    if key in DIMENSION_KEYS:
        try:
            sp = parse_dimension(value)
        except DimensionError as exc:
            raise OptionError(f"bad value for {key!r}: {exc}", key, position) from exc
        return replace(opts, **{key: sp})
    if key in ("prolog", "postlog"):
        return replace(opts, **{key: value})
    if key == "clip":
        return replace(opts, clip=True)
    if key == "cost":
        try:
            cost = int(value.strip())
        except ValueError:
            raise OptionError(f"cost must be an integer, got {value!r}", key, position) from None
        return replace(opts, cost=cost)
    raise OptionError(f"unknown key {key!r}", key, position)


def parse_options(text):
    """Parse a complete option string into :class:`FigOptions`.

    >>> parse_options("file=a.ps,height=1pt,clip=").height
    65536
    """
    opts = FigOptions()
    if text == "":
        return opts
    for position, item in enumerate(text.split(","), start=1):
        if item == "":
            raise OptionError("empty option item", None, position)
        key, eq, value = item.partition("=")
        if not eq:
            if key == "clip":
                opts = replace(opts, clip=True)
                continue
            if key not in KEYS:
                raise OptionError(f"unknown key {key!r}", key, position)
            raise OptionError(f"option {key!r} needs a value", key, position)
        opts = apply_key(opts, key, value, position)
    return opts

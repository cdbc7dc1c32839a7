"""TeX dimensions as integer scaled points.

Every length handled by psfig is an ``int`` count of scaled points
(65536 sp = 1 pt).  :func:`parse_dimension` reproduces TeX's own
dimension scanner bit for bit: the decimal fraction is rounded to a 16-bit
binary fraction with TeX's digit loop, and the unit is applied with TeX's
exact integer ``xn_over_d`` step.

>>> parse_dimension("1bp")
65781
>>> parse_dimension("72 bp") == parse_dimension("1in")
True
>>> format_sp(-65536)
'-65536'
"""

import re
from typing import NamedTuple

from .errors import DimensionError, DimensionOverflow

__all__ = [
    "UNITY",
    "MAX_DIMEN",
    "UNITS",
    "UnitRatio",
    "Scaled",
    "check_scaled",
    "parse_dimension",
    "format_sp",
    "format_pt",
]

Scaled = int

UNITY = 1 << 16
MAX_DIMEN = (1 << 30) - 1
_INFINITY = (1 << 31) - 1


class UnitRatio(NamedTuple):
    """Exact points-per-unit ratio ``num/den``."""

    num: int
    den: int


# sp is handled separately: its fraction is discarded, not converted.
UNITS = {
    "pt": UnitRatio(1, 1),
    "pc": UnitRatio(12, 1),
    "in": UnitRatio(7227, 100),
    "bp": UnitRatio(7227, 7200),
    "cm": UnitRatio(7227, 254),
    "mm": UnitRatio(7227, 2540),
    "dd": UnitRatio(1238, 1157),
    "cc": UnitRatio(14856, 1157),
}

_NO_CONTEXT_UNITS = {"em", "ex", "mu"}

_DIMEN_RE = re.compile(
    r"""\s*
    (?P<signs>[-+\s]*?)
    (?P<int>\d*)
    (?:\.(?P<frac>\d*))?
    \s*
    (?P<unit>[A-Za-z]+)
    \s*""",
    re.VERBOSE,
)


def check_scaled(sp):
    """Return *sp* unchanged if it fits in a TeX dimen, else raise."""
    if abs(sp) > MAX_DIMEN:
        raise DimensionOverflow(f"dimension too large: {sp}sp exceeds \\maxdimen")
    return sp


def _round_decimals(digits):
    # TeX's round_decimals: at most 17 digits matter.
    a = 0
    for ch in reversed(digits[:17]):
        a = (a + int(ch) * 0x20000) // 10
    return (a + 1) // 2


def parse_dimension(text):
    """Parse a TeX dimension literal such as ``"3in"`` or ``"-12.5 bp"`` into sp.

    Units are matched case-insensitively, as TeX keywords are.  ``true``
    dimensions, font-relative units and ``,`` as a decimal separator are
    rejected.
    """
    m = _DIMEN_RE.fullmatch(text)
    if m is None:
        raise DimensionError(f"malformed dimension: {text!r}")
    int_digits = m["int"]
    frac_digits = m["frac"] or ""
    if not int_digits and not frac_digits:
        raise DimensionError(f"missing number in dimension: {text!r}")
    unit = m["unit"].lower()
    negative = m["signs"].count("-") % 2 == 1

    x = int(int_digits or "0")
    if x > _INFINITY:
        raise DimensionOverflow(f"number too big: {text!r}")

    if unit == "sp":
        value = x
    elif unit in UNITS:
        f = _round_decimals(frac_digits)
        num, den = UNITS[unit]
        if (num, den) != (1, 1):
            q, r = divmod(x * num, den)
            f = (num * f + UNITY * r) // den
            x = q + f // UNITY
            f %= UNITY
        if x >= 1 << 14:
            raise DimensionOverflow(f"dimension too large: {text!r}")
        value = x * UNITY + f
    elif unit.startswith("true"):
        raise DimensionError(f"'true' dimensions are not supported: {text!r}")
    elif unit in _NO_CONTEXT_UNITS:
        raise DimensionError(f"unit {unit!r} needs a font context: {text!r}")
    else:
        raise DimensionError(f"unknown unit {m['unit']!r} in {text!r}")

    if value > MAX_DIMEN:
        raise DimensionOverflow(f"dimension too large: {text!r}")
    return -value if negative else value


def format_sp(v):
    """Render *v* as a bare decimal integer, the form specials carry."""
    return str(int(v))


def format_pt(v):
    """Render *v* in points exactly as TeX's ``\\the`` would, e.g. ``'36.0pt'``."""
    out = "-" if v < 0 else ""
    s = abs(v)
    out += str(s // UNITY) + "."
    s = 10 * (s % UNITY) + 5
    delta = 10
    while True:
        if delta > UNITY:
            s += 0x8000 - 50000
        out += str(s // UNITY)
        s = 10 * (s % UNITY)
        delta *= 10
        if s <= delta:
            break
    return out + "pt"

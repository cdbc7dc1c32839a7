"""Figure geometry: bounding box, extents, rendered size and reserved box.

All arithmetic is on sp integers.  Aspect-preserving sizes go through
:func:`in_hundreds`, which approximates ``a*n/d`` by expanding ``n/d`` to two
decimal places with truncating division.  The resulting sizes are therefore
slightly small, by design.
"""

from dataclasses import dataclass

from .epsbb import BoundingBox
from .errors import DimensionOverflow, GeometryError, NoBoundingBox
from .texdim import MAX_DIMEN

__all__ = [
    "SizePlan",
    "resolve_bbox",
    "hundredths",
    "in_hundreds",
    "compute_handw",
    "compute_resv",
    "plan_sizes",
]


@dataclass(frozen=True)
class SizePlan:
    bb: BoundingBox
    bbw: int
    bbh: int
    width: int
    height: int
    rwidth: int
    rheight: int


def resolve_bbox(opts, scan=None, strict=False, log=None):
    """Return the figure's bounding box.

    With all four corners given in *opts* the file is never touched.  If any
    corner is missing, ``scan(opts.file)`` supplies the box and its corners
    replace all four, explicit ones included.  This mirrors the original
    macros and is kept deliberately.
    """
    if opts.has_full_bb:
        box = BoundingBox(opts.bbllx, opts.bblly, opts.bburx, opts.bbury)
    else:
        if log is not None:
            log.append(f"psfig: searching {opts.file} for bounding box")
        if scan is None or not opts.file:
            raise NoBoundingBox(opts.file or None)
        box = scan(opts.file)
    if not strict and (box.width <= 0 or box.height <= 0):
        raise GeometryError(
            f"bounding box {tuple(box)} has non-positive extent "
            f"({box.width}sp x {box.height}sp)"
        )
    return box


def hundredths(a, n, d):
    """Unbounded core of :func:`in_hundreds` (no overflow check)."""
    if d == 0:
        raise ZeroDivisionError("in_hundreds: zero denominator")
    if a < 0 or n < 0 or d < 0:
        raise GeometryError(f"in_hundreds needs nonnegative operands, got {(a, n, d)}")
    q = n // d
    r = 10 * (n - q * d)
    d1 = r // d
    r = 10 * (r - d1 * d)
    d2 = r // d
    return a * q + (a // 10) * d1 + (a // 100) * d2


def in_hundreds(a, n, d):
    """Scale *a* by ``n/d`` keeping two decimal digits of the ratio.

    >>> in_hundreds(1000, 1, 3)
    330
    """
    result = hundredths(a, n, d)
    if result > MAX_DIMEN:
        raise DimensionOverflow(
            f"scaled size {result}sp exceeds \\maxdimen ({a}sp * {n}/{d})"
        )
    return result


def _check_size(name, value, strict):
    if value < 0 or (value == 0 and not strict):
        raise GeometryError(f"{name} must be positive, got {value}sp")


def compute_handw(opts, bbw, bbh, strict=False):
    """Resolve the rendered ``(width, height)``.

    Given both, they pass through; given one, the other follows the box's
    aspect ratio; given neither, the figure keeps its natural size.
    """
    if bbw <= 0 or bbh <= 0:
        raise GeometryError(f"bounding box extents must be positive, got {bbw}sp x {bbh}sp")
    width, height = opts.width, opts.height
    if height is not None and width is not None:
        pass
    elif height is not None:
        _check_size("height", height, strict)
        width = in_hundreds(height, bbw, bbh)
    elif width is not None:
        _check_size("width", width, strict)
        height = in_hundreds(width, bbh, bbw)
    else:
        width, height = bbw, bbh
    _check_size("width", width, strict)
    _check_size("height", height, strict)
    return width, height


def compute_resv(opts, width, height, strict=False):
    rwidth = width if opts.rwidth is None else opts.rwidth
    rheight = height if opts.rheight is None else opts.rheight
    _check_size("rwidth", rwidth, strict)
    _check_size("rheight", rheight, strict)
    return rwidth, rheight


def plan_sizes(opts, scan=None, strict=False, log=None):
    """Run bounding box, size and reserved-size resolution for one figure."""
    bb = resolve_bbox(opts, scan, strict=strict, log=log)
    bbw = bb.urx - bb.llx
    bbh = bb.ury - bb.lly
    width, height = compute_handw(opts, bbw, bbh, strict=strict)
    rwidth, rheight = compute_resv(opts, width, height, strict=strict)
    return SizePlan(bb, bbw, bbh, width, height, rwidth, rheight)

"""Reading %%BoundingBox comments from EPS files.

The scanner reads bytes lazily and stops at the first usable box line.
Strict mode mirrors the original macros and fails on the first box line it
cannot parse; lenient mode skips it and keeps looking.
"""

import io

from psfig import MalformedBoundingBox, NoBoundingBox, scan_bounding_box

samples = {
    "LF": b"%!PS-Adobe-3.0 EPSF-3.0\n%%BoundingBox: 0 0 72 72\n",
    "CRLF": b"%!PS\r\n%%Creator: demo\r\n%%BoundingBox: 10 20 110 220\r\n",
    "CR only": b"%!PS\r%%BoundingBox: 0 0 612 792\r",
    "deferred": b"%!PS\n%%BoundingBox: (atend)\nshowpage\n%%BoundingBox: 1 2 3 4\n",
    "no box": b"%!PS\nshowpage\n",
}

for name, data in samples.items():
    for strict in (False, True):
        mode = "strict" if strict else "lenient"
        try:
            box = scan_bounding_box(io.BytesIO(data), strict=strict)
        except MalformedBoundingBox as exc:
            print(f"{name:>8} {mode:>7}: malformed ({exc})")
        except NoBoundingBox as exc:
            print(f"{name:>8} {mode:>7}: {exc}")
        else:
            print(f"{name:>8} {mode:>7}: {tuple(box)} sp, {box.width} x {box.height}")

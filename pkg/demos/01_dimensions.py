"""TeX dimensions as integer scaled points.

Every length becomes a whole number of sp (65536 sp = 1pt). Conversion is
exact integer arithmetic, so the same input always gives the same bits.
"""

from psfig import MAX_DIMEN, format_pt, parse_dimension
from psfig.errors import DimensionError

for text in ["1pt", "1bp", "1in", "72bp", "2.54cm", "0.5pc", "12.345pt", "-3mm"]:
    sp = parse_dimension(text)
    print(f"{text:>9} = {sp:>10} sp = {format_pt(sp)}")

# 72bp and 1in land on the same sp value, which is why a 0 0 72 72 box is one inch.
assert parse_dimension("72bp") == parse_dimension("1in")

print(f"largest dimension: {MAX_DIMEN} sp = {format_pt(MAX_DIMEN)}")
for bad in ["16384pt", "1em", "1,5pt"]:
    try:
        parse_dimension(bad)
    except DimensionError as exc:
        print(f"{bad!r} rejected: {exc}")

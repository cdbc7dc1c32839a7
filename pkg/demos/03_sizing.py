"""How a figure's printed size is chosen.

Given only a height, the width follows from the box's aspect ratio, scaled
by an integer routine that keeps two decimal digits of the ratio. Wide
boxes keep their shape to within about 1%; tall ones can lose more because
the ratio's leading digits are all below one.
"""

from fractions import Fraction

from psfig import BoundingBox, format_pt, parse_options, plan_sizes

boxes = {
    "wide 144x72": BoundingBox(0, 0, 9472573, 4736286),
    "tall 72x144": BoundingBox(0, 0, 4736286, 9472573),
    "slim 10x81": BoundingBox(0, 0, 657817, 5328293),
}

for label, box in boxes.items():
    plan = plan_sizes(parse_options("file=fig.eps,height=1in"), lambda name: box)
    exact = Fraction(box.width, box.height) * plan.height
    error = abs(plan.width - exact) / exact
    print(f"{label:>12}: {format_pt(plan.width)} x {format_pt(plan.height)}"
          f"  (aspect error {float(error):.2%})")

# A partial explicit box is overwritten entirely by the file's box.
box = BoundingBox(0, 0, 4736286, 4736286)
plan = plan_sizes(parse_options("file=fig.eps,bbllx=999pt"), lambda name: box)
print("partial explicit box ->", tuple(plan.bb))

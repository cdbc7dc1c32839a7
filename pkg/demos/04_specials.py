"""The PostScript specials a figure turns into.

A full inclusion brackets the figure's plotfile with begin and end specials.
Clipping adds a doclip special right after the begin. A draft figure emits
no specials and only reserves space. The document-wide draft level decides
which one happens.
"""

from psfig import BoundingBox, DocumentState, emit_global, parse_options, psfig

box = BoundingBox(0, 0, 4736286, 4736286)


def files(name):
    return box


state = DocumentState()
for options in ["file=f.ps", "file=f.ps,clip=,prolog=head.pro,postlog=tail.pro"]:
    plan = psfig(parse_options(options), state, files)
    print(f"{options}:")
    for special in plan.specials:
        print(f"  \\special{{{special}}}")

draft = psfig(parse_options("file=f.ps"), state.psdraft(), files)
print(f"after \\psdraft: {draft.mode.value}, reserves {draft.reserved} sp, label {draft.label}")

cheap = psfig(parse_options("file=f.ps,cost=-1"), state.psdraft(), files)
print(f"cost=-1 under \\psdraft: {cheap.mode.value}")

print("global prolog:", emit_global("figtex.pro"))

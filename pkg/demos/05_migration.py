"""Rewriting a document from \\psfig to \\includegraphics.

Each resolvable \\psfig call becomes an \\includegraphics call with exact sp
sizes. State directives are commented out, and everything else in the file is
kept byte for byte. Running the migration twice changes nothing further.
"""

import io

from psfig import migrate, scan_bounding_box

FIGURES = {
    "wide.eps": b"%!PS\n%%BoundingBox: 0 0 144 72\n",
    "tall.eps": b"%!PS\r\n%%BoundingBox: 0 0 72 144\r\n",
}


def files(name):
    if name not in FIGURES:
        raise FileNotFoundError(2, "No such file or directory", name)
    return scan_bounding_box(io.BytesIO(FIGURES[name]))


document = r"""\documentclass{article}
\usepackage{psfig}
\begin{document}
\psfig{file=wide.eps,height=36pt}
\psdraft
\centerline{\psfig{figure=tall.eps,width=1in,clip=}}
\psfig{file=gone.eps}
\end{document}
"""

result = migrate(document, files, human=True)
print(result.text)
print(f"{result.changes} changes")
for diagnostic in result.diagnostics:
    print(diagnostic)

assert migrate(result.text, files).text == result.text

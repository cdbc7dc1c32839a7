"""Command line interface: ``psfig bbox|plan|scan|migrate``.

Exit status is 0 on success, 1 for domain errors (bad options, missing
bounding box, impossible geometry) and 2 for I/O errors.
"""

import argparse
import json
import os
import shutil
import sys
from dataclasses import dataclass, field

from . import __version__
from .emitter import BANNER, DEFAULT_PROLOG, DRAFT_LEVEL, FULL_LEVEL, DocumentState, Mode, psfig
from .epsbb import FileScanner, scan_file
from .errors import PsfigError
from .options import parse_options
from .texdim import format_sp
from .texscan import Kind, migrate, process_document, scan_document

PROLOG_ENV = "PSFIG_GLOBAL_PROLOG"

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2


@dataclass
class RunConfig:
    strict: bool = False
    draft: object = None  # None: follow the document; True/False: forced
    global_prolog: str = DEFAULT_PROLOG
    output_format: str = "text"
    search_paths: list = field(default_factory=list)
    verbose: bool = False

    @property
    def force_level(self):
        if self.draft is None:
            return None
        return DRAFT_LEVEL if self.draft else FULL_LEVEL


def _dump(record):
    return json.dumps(record, indent=2, ensure_ascii=False)


def _exit_code(exc):
    return EXIT_IO if isinstance(exc, OSError) else EXIT_DOMAIN


def _describe(exc):
    if isinstance(exc, OSError):
        return f"{exc.filename or ''}: {exc.strerror or exc}".lstrip(": ")
    return str(exc)


def plan_record(plan):
    """Structured form of an :class:`InclusionPlan`; field order is fixed."""
    sizes = plan.sizes
    return {
        "mode": plan.mode.value,
        "specials": list(plan.specials),
        "width": sizes.width,
        "height": sizes.height,
        "rwidth": plan.rwidth,
        "rheight": plan.rheight,
        "bb": list(sizes.bb),
        "logs": list(plan.logs),
        "label": plan.label,
    }


def plan_text(plan):
    lines = []
    if plan.mode is Mode.FULL:
        lines.extend(plan.specials)
    else:
        lines.append(f"draft: {plan.label}")
    lines.append(f"reserved: {format_sp(plan.rwidth)} {format_sp(plan.rheight)}")
    return lines


def cmd_bbox(path, cfg, out):
    box, tokens = scan_file(path, strict=cfg.strict, with_tokens=True)
    if cfg.output_format == "structured":
        print(_dump({"file": path, "bp": list(tokens), "sp": list(box)}), file=out)
    else:
        print(f"bp: {' '.join(tokens)} / sp: {' '.join(format_sp(v) for v in box)}", file=out)
    return EXIT_OK


def cmd_plan(options, cfg, out, err):
    opts = parse_options(options)
    scanner = FileScanner([os.curdir, *cfg.search_paths], strict=cfg.strict)
    level = cfg.force_level
    state = DocumentState() if level is None else DocumentState(level)
    plan = psfig(opts, state, scanner, strict=cfg.strict)
    if cfg.output_format == "structured":
        print(_dump(plan_record(plan)), file=out)
    else:
        for line in plan_text(plan):
            print(line, file=out)
        if cfg.verbose:
            for line in plan.logs:
                print(line, file=err)
    return EXIT_OK


def _directive_label(d):
    if d.arg is None:
        return f"\\{d.kind.value}"
    return f"\\{d.kind.value}{{{d.arg}}}"


def cmd_scan(texfiles, cfg, out, err):
    """Replay every directive of *texfiles*, threading state across files."""
    status = EXIT_OK
    records = []
    structured = cfg.output_format == "structured"

    def say(line):
        if not structured:
            print(line, file=out)

    counts = {"directives": 0, "full": 0, "draft": 0, "errors": 0}
    state = None
    for texfile in texfiles:
        try:
            with open(texfile, "rb") as fp:
                source = fp.read()
        except OSError as exc:
            say(f"{texfile}: error: {_describe(exc)}")
            records.append({"file": texfile, "error": _describe(exc)})
            counts["errors"] += 1
            status = max(status, EXIT_IO)
            continue
        diagnostics = []
        try:
            directives = scan_document(source, diagnostics)
        except PsfigError as exc:
            say(f"{texfile}: error: {exc}")
            records.append({"file": texfile, "line": exc.line, "error": str(exc)})
            counts["errors"] += 1
            status = max(status, EXIT_DOMAIN)
            continue
        base = os.path.dirname(os.path.abspath(texfile))
        scanner = FileScanner([base, *cfg.search_paths], strict=cfg.strict)
        outcomes, state = process_document(
            directives, scanner, state=state, strict=cfg.strict,
            prolog=cfg.global_prolog, force_level=cfg.force_level,
        )
        for diag in diagnostics:
            say(f"{texfile}:{diag.line}: {diag.severity}: {diag.message}")
            records.append({"file": texfile, "line": diag.line,
                            "diagnostic": diag.message, "severity": diag.severity})
        for o in outcomes:
            d = o.directive
            counts["directives"] += 1
            rec = {"file": texfile, "line": d.line, "directive": d.kind.value, "arg": d.arg}
            head = f"{texfile}:{d.line}: {_directive_label(d)}"
            if o.error is not None:
                counts["errors"] += 1
                status = max(status, _exit_code(o.error))
                rec["error"] = _describe(o.error)
                say(f"{head}: error: {_describe(o.error)}")
            elif d.kind is Kind.PSFIG:
                counts[o.plan.mode.value] += 1
                rec["plan"] = plan_record(o.plan)
                say(f"{head}: {o.plan.mode.value}")
                for line in plan_text(o.plan):
                    say(line)
            elif d.kind in (Kind.PSDRAFT, Kind.PSFULL):
                rec["draft_level"] = o.state.draft_level
                say(f"{head}: draft level {o.state.draft_level}")
            else:
                rec["specials"] = list(o.specials)
                say(f"{head}: global")
                for line in o.specials:
                    say(line)
            if cfg.verbose:
                for line in o.logs:
                    print(line, file=err)
            records.append(rec)
    summary = (f"summary: {counts['directives']} directives, {counts['full']} full, "
               f"{counts['draft']} draft, {counts['errors']} errors")
    if cfg.output_format == "structured":
        print(_dump({"sites": records, "summary": counts}), file=out)
    else:
        print(summary, file=out)
    return status


def cmd_migrate(texfiles, cfg, out, in_place=False, backup_suffix=".bak",
                suffix=".migrated", force=False, human=False):
    status = EXIT_OK
    if in_place and not backup_suffix and not force:
        print("error: refusing to rewrite in place without a backup (use --force)", file=out)
        return EXIT_DOMAIN
    for texfile in texfiles:
        try:
            with open(texfile, "rb") as fp:
                source = fp.read()
        except OSError as exc:
            print(f"{texfile}: error: {_describe(exc)}", file=out)
            status = max(status, EXIT_IO)
            continue
        base = os.path.dirname(os.path.abspath(texfile))
        scanner = FileScanner([base, *cfg.search_paths], strict=cfg.strict)
        try:
            result = migrate(source, scanner, strict=cfg.strict, human=human,
                             prolog=cfg.global_prolog)
        except PsfigError as exc:
            print(f"{texfile}: error: {exc}", file=out)
            status = max(status, EXIT_DOMAIN)
            continue
        if in_place:
            target = texfile
            if backup_suffix:
                shutil.copy2(texfile, texfile + backup_suffix)
        else:
            root, ext = os.path.splitext(texfile)
            target = root + suffix + ext
        try:
            with open(target, "wb") as fp:
                fp.write(result.text)
        except OSError as exc:
            print(f"{target}: error: {_describe(exc)}", file=out)
            status = max(status, EXIT_IO)
            continue
        for diag in result.diagnostics:
            print(f"{texfile}:{diag.line}: {diag.severity}: {diag.message}", file=out)
            if diag.severity == "error":
                status = max(status, EXIT_DOMAIN)
        print(f"{texfile}: {result.changes} changes -> {target}", file=out)
    return status


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strict", action="store_true",
                        help="reproduce the original first-match-or-die behaviour")
    gate = common.add_mutually_exclusive_group()
    gate.add_argument("--draft", dest="draft", action="store_const", const=True,
                      help="force draft placeholders")
    gate.add_argument("--full", dest="draft", action="store_const", const=False,
                      help="force full inclusion")
    common.add_argument("--format", dest="output_format", choices=("text", "structured"),
                        default="text")
    common.add_argument("--global-prolog", metavar="PATH",
                        help=f"prolog included by \\psfiginit (default ${PROLOG_ENV} "
                             f"or {DEFAULT_PROLOG})")
    common.add_argument("--search-path", metavar="DIR", action="append", default=[],
                        dest="search_paths", help="extra directory for figure files")
    common.add_argument("--verbose", action="store_true", help="write psfig log lines to stderr")

    parser = argparse.ArgumentParser(prog="psfig", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bbox", parents=[common], help="print an EPS file's bounding box")
    p.add_argument("file")
    p = sub.add_parser("plan", parents=[common], help="plan one \\psfig option string")
    p.add_argument("options")
    p = sub.add_parser("scan", parents=[common], help="replay the psfig directives of TeX files")
    p.add_argument("texfiles", nargs="+")
    p = sub.add_parser("migrate", parents=[common], help="rewrite \\psfig as \\includegraphics")
    p.add_argument("texfiles", nargs="+")
    p.add_argument("--in-place", action="store_true")
    p.add_argument("--backup-suffix", default=".bak",
                   help="backup suffix for --in-place; empty disables the backup")
    p.add_argument("--suffix", default=".migrated",
                   help="inserted before the extension of the output file")
    p.add_argument("--force", action="store_true",
                   help="allow --in-place without a backup")
    p.add_argument("--human", action="store_true",
                   help="add a comment with the sizes in points")
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        strict=args.strict,
        draft=args.draft,
        global_prolog=args.global_prolog or os.environ.get(PROLOG_ENV) or DEFAULT_PROLOG,
        output_format=args.output_format,
        search_paths=args.search_paths,
        verbose=args.verbose,
    )
    if cfg.verbose:
        print(BANNER, file=err)
    try:
        if args.command == "bbox":
            return cmd_bbox(args.file, cfg, out)
        if args.command == "plan":
            return cmd_plan(args.options, cfg, out, err)
        if args.command == "scan":
            return cmd_scan(args.texfiles, cfg, out, err)
        return cmd_migrate(args.texfiles, cfg, out, in_place=args.in_place,
                           backup_suffix=args.backup_suffix, suffix=args.suffix,
                           force=args.force, human=args.human)
    except (PsfigError, OSError) as exc:
        print(f"psfig: {_describe(exc)}", file=err)
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())

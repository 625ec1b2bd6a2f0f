"""Command-line surface: validate and analyse graded-algebra documents.

Exit codes: 0 success, 1 axiom/theorem finding, 2 missing input, 3 schema
violation.  Machine-format reports are canonical JSON with the timing field
stripped, so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from pathlib import Path

from . import catalog as catalog_mod
from .classify import graded_simple
from .connections import connection_classes, verify_witness
from .decompose import decompose
from .document import (
    algebra_to_document,
    build_algebra,
    canonical_json,
    load_path,
    validate_document,
)
from .errors import BihomalgError, SchemaError

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_MISSING = 2
EXIT_SCHEMA = 3


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _scalar_text(value) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    if value is None:
        return "null"
    return str(value)


def _inline(value) -> str | None:
    """Short lists of plain values render on one line."""
    if isinstance(value, list) and all(not isinstance(x, (dict, list)) for x in value):
        return "[" + ", ".join(_scalar_text(x) for x in value) + "]"
    return None


def _render_human(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in sorted(value):
            sub = value[key]
            flat = _inline(sub)
            if flat is not None:
                lines.append(f"{pad}{key}: {flat}")
            elif isinstance(sub, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_human(sub, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar_text(sub)}")
    elif isinstance(value, list):
        for sub in value:
            flat = _inline(sub)
            if flat is not None:
                lines.append(f"{pad}- {flat}")
            elif isinstance(sub, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_human(sub, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(sub)}")
    else:
        lines.append(f"{pad}{_scalar_text(value)}")
    return lines


def _emit(report: dict, fmt: str, elapsed_ms: float):
    if fmt == "machine":
        sys.stdout.write(canonical_json(report))
    else:
        report = dict(report)
        report["timing_ms"] = round(elapsed_ms, 3)
        sys.stdout.write("\n".join(_render_human(report)) + "\n")


def _load(path_str: str, lenient: bool):
    path = Path(path_str)
    if not path.exists():
        raise FileNotFoundError(path_str)
    doc = load_path(path)
    warnings = validate_document(doc, lenient=lenient)
    algebra = build_algebra(doc, lenient=lenient)
    return path, algebra, warnings


def _analysis_command(args, build_result) -> int:
    """Shared flow: load, validate the axioms, then run the command body."""
    started = time.perf_counter()
    try:
        path, algebra, warnings = _load(args.path, args.lenient)
    except FileNotFoundError:
        print(f"error: no such file: {args.path}", file=sys.stderr)
        return EXIT_MISSING
    except SchemaError as exc:
        print(f"schema error at {exc.location}: {exc.message}", file=sys.stderr)
        return EXIT_SCHEMA

    report = {
        "command": args.command,
        "input": str(path),
        "input_sha256": _sha256(path),
    }
    if warnings:
        report["warnings"] = warnings
    validation = algebra.validate()
    if not validation.passed:
        report["status"] = "finding"
        report["validation"] = validation.as_dict()
        _emit(report, args.format, (time.perf_counter() - started) * 1000)
        return EXIT_FINDING
    if args.command == "validate":
        report["status"] = "ok"
        report["validation"] = validation.as_dict()
        _emit(report, args.format, (time.perf_counter() - started) * 1000)
        return EXIT_OK
    try:
        report["result"] = build_result(algebra)
    except BihomalgError as exc:
        report["status"] = "finding"
        report["finding"] = {"error": type(exc).__name__, "detail": str(exc)}
        _emit(report, args.format, (time.perf_counter() - started) * 1000)
        return EXIT_FINDING
    report["status"] = "ok"
    _emit(report, args.format, (time.perf_counter() - started) * 1000)
    return EXIT_OK


def _cmd_validate(args) -> int:
    return _analysis_command(args, lambda algebra: None)


def _cmd_support(args) -> int:
    def body(algebra):
        return {
            "degrees": [
                {"degree": list(deg), "dim": comp.dim}
                for deg, comp in algebra.components.items()
            ],
            "support": [list(g) for g in algebra.support],
            "symmetric": algebra.support_symmetric(),
        }

    return _analysis_command(args, body)


def _cmd_classes(args) -> int:
    def body(algebra):
        partition = connection_classes(algebra)
        out = partition.as_dict(include_witnesses=True)
        if args.verify_witnesses:
            replays = []
            for (g, h), w in sorted(partition.witnesses.items()):
                problems = verify_witness(algebra, g, h, w)
                replays.append({"pair": [list(g), list(h)], "ok": not problems, "problems": problems})
            out["witness_replays"] = replays
            if any(not r["ok"] for r in replays):
                raise BihomalgError("a stored witness failed replay")
        return out

    return _analysis_command(args, body)


def _cmd_decompose(args) -> int:
    def body(algebra):
        return decompose(algebra).as_dict(include_bases=args.bases)

    return _analysis_command(args, body)


def _cmd_simplicity(args) -> int:
    def body(algebra):
        mode = "always" if args.oracle else "auto"
        return graded_simple(algebra, oracle=mode, dim_cap=args.dim_cap).as_dict()

    return _analysis_command(args, body)


def _cmd_catalog(args) -> int:
    started = time.perf_counter()
    if args.action == "list":
        report = {
            "command": "catalog",
            "status": "ok",
            "entries": [
                {"name": e.name, "summary": e.summary} for e in catalog_mod.CATALOG.values()
            ],
        }
        _emit(report, args.format, (time.perf_counter() - started) * 1000)
        return EXIT_OK
    if args.name not in catalog_mod.CATALOG:
        print(f"error: no catalog entry named {args.name!r}", file=sys.stderr)
        return EXIT_MISSING
    doc = algebra_to_document(catalog_mod.build(args.name))
    text = canonical_json(doc)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    out = Path(args.out)
    out.write_text(text, encoding="utf-8")
    report = {
        "command": "catalog",
        "status": "ok",
        "emitted": args.name,
        "output": str(out),
        "output_sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
    }
    _emit(report, args.format, (time.perf_counter() - started) * 1000)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihomalg",
        description="Construct, validate and decompose graded BiHom matrix algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("human", "machine"), default="human")
        p.add_argument("--lenient", action="store_true", help="warn on unknown document keys")

    for name, help_text in (
        ("validate", "check every structural axiom"),
        ("support", "support degrees, dimensions and symmetry"),
        ("classes", "connection classes with witnesses"),
        ("decompose", "graded ideals, complement and directness"),
        ("simplicity", "graded-simplicity verdicts"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path", help="input document (JSON)")
        common(p)
        if name == "classes":
            p.add_argument("--verify-witnesses", action="store_true")
        if name == "decompose":
            p.add_argument("--bases", action="store_true", help="include ideal bases")
        if name == "simplicity":
            p.add_argument("--oracle", action="store_true", help="cross-check by exhaustive enumeration")
            p.add_argument("--dim-cap", type=int, default=10)

    pc = sub.add_parser("catalog", help="list or emit built-in instances")
    pc.add_argument("action", choices=("list", "emit"))
    pc.add_argument("name", nargs="?", help="entry name (emit)")
    pc.add_argument("out", nargs="?", help="output path (emit); stdout when omitted")
    common(pc)
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "catalog":
        if args.action == "emit" and not args.name:
            print("error: catalog emit needs an entry name", file=sys.stderr)
            return EXIT_MISSING
        return _cmd_catalog(args)
    handler = {
        "validate": _cmd_validate,
        "support": _cmd_support,
        "classes": _cmd_classes,
        "decompose": _cmd_decompose,
        "simplicity": _cmd_simplicity,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())

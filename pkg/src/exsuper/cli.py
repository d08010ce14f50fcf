"""Command-line front end.  Every invocation writes exactly one JSON document.

Exit codes: 0 success, 1 a verification found mismatches, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import classifier, euler, harness
from .field import GENERIC, ScalarContext
from .lattice_forms import SuperType
from .reflection import chain

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


class UsageError(ValueError):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _zeta(text: str):
    if text == GENERIC:
        return GENERIC
    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"zeta must be an integer, a rational or 'generic', got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, choices=[t.value for t in SuperType])
    common.add_argument("--char", type=int, default=0, help="odd prime, or 0 for characteristic 0")
    common.add_argument("--zeta", type=_zeta, help="D(2|1;zeta) only: integer, rational (char 0) or 'generic'")
    common.add_argument("--out", default="-", help="output path (default: stdout)")

    parser = argparse.ArgumentParser(prog="exsuper", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("classify", "chain", "chi"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--weight", type=_ints, required=True)
    p = sub.add_parser("list", parents=[common])
    p.add_argument("--box", type=_ints, required=True)
    for name in ("verify", "sweep"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--box", type=_ints, required=True)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--amended", action="store_true",
                       help="use the amended F(3|1) d=2 side conditions")
    return parser


def _context(args) -> tuple[SuperType, ScalarContext]:
    kind = SuperType.parse(args.type)
    if args.zeta is not None and kind is not SuperType.D2_1:
        raise UsageError("--zeta is only allowed with --type d")
    if args.char < 0:
        raise UsageError("--char must be 0 or an odd prime")
    zeta = args.zeta
    if args.char:
        if zeta == GENERIC or (zeta is not None and zeta.denominator != 1):
            raise UsageError("in characteristic p, --zeta must be an integer")
        ctx = ScalarContext.fp(args.char, None if zeta is None else int(zeta))
    else:
        ctx = ScalarContext.char0(zeta)
    if args.command == "sweep":
        return kind, ctx
    if kind is SuperType.D2_1 and zeta is None and args.command != "chi":
        raise UsageError("--type d needs --zeta")
    if args.command != "chi" or args.char:
        ctx.validate(kind)
    for attr in ("weight", "box"):
        v = getattr(args, attr, None)
        if v is not None and len(v) != kind.rank:
            raise UsageError(f"--{attr} needs {kind.rank} values for --type {kind.value}")
    return kind, ctx


def _classify(kind, ctx, args):
    a = classifier.classify_by_reflections(args.weight, kind, ctx)
    if ctx.is_char0:
        b = classifier.classify_char0(args.weight, kind, ctx.zeta)
    else:
        b = classifier.classify_by_theorem(args.weight, kind, ctx)
    return {
        "type": kind.value,
        "ctx": ctx.to_json(),
        "weight": list(a.weight),
        "finite": a.finite,
        "method_a": a.to_json(),
        "method_b": b.to_json(),
        "agree": a.verdict is b.verdict,
    }, EXIT_OK


def _chain(kind, ctx, args):
    res = chain(args.weight, kind, ctx)
    return {"type": kind.value, "ctx": ctx.to_json(), "weight": list(args.weight),
            "nodes": res.to_json()}, EXIT_OK


def _list(kind, ctx, args):
    if min(args.box) < 0:
        raise UsageError("--box bounds must be nonnegative")
    return [list(w) for w in classifier.list_finite(kind, ctx, args.box)], EXIT_OK


def _verify(kind, ctx, args):
    if min(args.box) < 0:
        raise UsageError("--box bounds must be nonnegative")
    if ctx.is_char0:
        rep = harness.char0_check(kind, args.box, ctx.zeta)
    else:
        rep = harness.verify_box(kind, ctx, args.box, args.workers, args.amended)
    return rep.to_json(), EXIT_OK if rep.passed else EXIT_MISMATCH


def _sweep(kind, ctx, args):
    if kind is not SuperType.D2_1:
        raise UsageError("sweep runs over zeta and needs --type d")
    if args.zeta is not None:
        raise UsageError("sweep chooses zeta itself; drop --zeta")
    if min(args.box) < 0:
        raise UsageError("--box bounds must be nonnegative")
    if not args.char:
        raise UsageError("sweep needs a prime --char")
    reports = harness.zeta_sweep(args.char, args.box, args.workers)
    ok = all(r.passed for r in reports)
    return [r.to_json() for r in reports], EXIT_OK if ok else EXIT_MISMATCH


def _chi(kind, ctx, args):
    c = euler.euler_char(args.weight, kind)
    doc = euler.to_json(c, kind)
    doc.update(type=kind.value, weight=list(args.weight))
    return doc, EXIT_OK


_HANDLERS = {
    "classify": _classify, "chain": _chain, "list": _list,
    "verify": _verify, "sweep": _sweep, "chi": _chi,
}


def run(argv=None) -> tuple[object | None, int, str | None, str]:
    """Parse and dispatch; returns (document, exit code, error, output path)."""
    args = build_parser().parse_args(argv)
    try:
        kind, ctx = _context(args)
        doc, code = _HANDLERS[args.command](kind, ctx, args)
    except ValueError as exc:
        return None, EXIT_INVALID, str(exc), args.out
    return doc, code, None, args.out


def main(argv=None) -> int:
    try:
        doc, code, err, out = run(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2
        return int(exc.code or 0)
    if err is not None:
        print(f"exsuper: error: {err}", file=sys.stderr)
        return code
    text = json.dumps(doc, indent=2) + "\n"
    if out == "-":
        sys.stdout.write(text)
    else:
        # write-then-rename so a failure never leaves a partial document
        tmp = out + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out)
    return code


if __name__ == "__main__":
    sys.exit(main())

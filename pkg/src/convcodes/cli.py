"""Command-line front end.

Exit status: 0 success, 2 parameter error, 3 verification failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import specfile
from .bounds import lrc_access_bounds, mds_access_bounds
from .codes import Codeword
from .errors import ConvCodesError, ParameterError
from .field import PrimeField
from .golden import reproduce_example1, reproduce_example2
from .lrc_convert import LrcConvertibleCode, plan_lrc_conversion
from .mds_convert import plan_mds_conversion
from .verify import convert, verify_code

MASK64 = (1 << 64) - 1


class SplitMix64:
    """64-bit splitmix generator; ``next() % p`` gives message symbols."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


def seeded_messages(seed: int, count: int, length: int, p: int) -> list[list[int]]:
    rng = SplitMix64(seed)
    return [[rng.next() % p for _ in range(length)] for _ in range(count)]


def _parse_vectors(text: str, count: int, length: int) -> list[list[int]]:
    """``"1,2,3;4,5,6"``: vectors separated by ``;``, entries by ``,``."""
    try:
        vecs = [[int(x) for x in part.split(",")] for part in text.split(";")]
    except ValueError as exc:
        raise ParameterError(f"cannot parse vectors {text!r}") from exc
    if len(vecs) != count or any(len(v) != length for v in vecs):
        raise ParameterError(f"expected {count} vectors of length {length}")
    return vecs


def cmd_build(args) -> int:
    field = PrimeField(args.field) if args.field else None
    if args.kind == "mds":
        code = plan_mds_conversion(args.zeta, args.k, args.li, args.lf, field)
    else:
        if args.r is None:
            raise ParameterError("--r is required for --kind lrc")
        code = plan_lrc_conversion(args.zeta, args.k, args.r, args.li, args.lf, field)
    if args.out:
        specfile.save(code, args.out)
        print(f"wrote {args.out} (F_{code.field.p}, initial n={code.initial.n}, final n={code.final.n})")
    else:
        sys.stdout.write(specfile.dumps(code))
    return 0


def cmd_convert(args) -> int:
    code = specfile.load(args.spec)
    p, z = code.field.p, code.zeta
    if args.codewords:
        words = _parse_vectors(args.codewords, z, code.initial.n)
        initials = [Codeword(w, code.field, code.initial.points.points) for w in words]
    else:
        if args.messages:
            msgs = _parse_vectors(args.messages, z, code.initial.dim)
        else:
            msgs = seeded_messages(args.seed, z, code.initial.dim, p)
        initials = [code.initial.encode(m) for m in msgs]
    final, trace = convert(code, initials)
    init_pts = [code.initial.points.points] * z
    records = trace.records(init_pts, code.final.points.points)
    if args.json:
        json.dump({
            "read": trace.read_cost,
            "write": trace.write_cost,
            "total": trace.total,
            "final": list(final.symbols),
            "records": records,
        }, sys.stdout, indent=1)
        sys.stdout.write("\n")
        return 0
    for rec in records:
        extra = rec["source"] if rec["source"] is not None else rec["target"]
        if isinstance(extra, list):
            extra = ",".join(extra)
        print(f"{rec['coord']:>10} {rec['role']:<9} {extra or ''}".rstrip())
    print("final " + " ".join(str(s) for s in final.symbols))
    print(trace.summary())
    return 0


def cmd_verify(args) -> int:
    code = specfile.load(args.spec)
    results = verify_code(code, args.level, trials=args.trials, seed=args.seed)
    for res in results:
        print(res.line())
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 3 if failed else 0


def cmd_bounds(args) -> int:
    if args.kind == "mds":
        b = mds_access_bounds(args.ni, args.k, args.nf, args.zeta)
    else:
        if args.r is None or args.d is None:
            raise ParameterError("--r and --d are required for --kind lrc")
        b = lrc_access_bounds(args.ni, args.k, args.nf, args.zeta, args.r, args.d)
    print(f"read>={b.read_lower} write>={b.write_lower} total>={b.total_lower} ({b.regime_note})")
    return 0


def _repro(results) -> int:
    for res in results:
        print(res.line())
    return 3 if any(not r.ok for r in results) else 0


def cmd_repro1(args) -> int:
    return _repro(reproduce_example1(args.seed))


def cmd_repro2(args) -> int:
    return _repro(reproduce_example2(args.seed))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="convcodes", description="Merge-regime convertible codes over prime fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a convertible code pair and write its spec file")
    b.add_argument("--kind", choices=["mds", "lrc"], required=True)
    b.add_argument("--zeta", type=int, required=True)
    b.add_argument("--k", type=int, required=True, help="initial dimension (mds) or group count (lrc)")
    b.add_argument("--r", type=int, help="locality (lrc only)")
    b.add_argument("--li", type=int, required=True, help="initial parity count lI")
    b.add_argument("--lf", type=int, required=True, help="final parity count lF")
    b.add_argument("--field", type=int, help="prime modulus; smallest admissible if omitted")
    b.add_argument("--out", "-o", help="output path; stdout if omitted")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("convert", help="encode messages, convert and report access costs")
    c.add_argument("spec")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--messages", help='explicit messages, e.g. "1,2,3,4;5,6,7,8"')
    c.add_argument("--codewords", help="explicit initial codewords in the same format")
    c.add_argument("--json", action="store_true", help="emit machine-readable records")
    c.set_defaults(func=cmd_convert)

    v = sub.add_parser("verify", help="check the invariants of a spec file")
    v.add_argument("spec")
    v.add_argument("--level", choices=["quick", "full"], default="quick")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    bd = sub.add_parser("bounds", help="print access-cost lower bounds")
    bd.add_argument("--kind", choices=["mds", "lrc"], required=True)
    bd.add_argument("--ni", type=int, required=True)
    bd.add_argument("--k", type=int, required=True, help="initial dimension")
    bd.add_argument("--nf", type=int, required=True)
    bd.add_argument("--zeta", type=int, required=True)
    bd.add_argument("--r", type=int)
    bd.add_argument("--d", type=int, help="final minimum distance (lrc only)")
    bd.set_defaults(func=cmd_bounds)

    for name, fn, helptext in (
        ("repro-example1", cmd_repro1, "reproduce the MDS example over F_19"),
        ("repro-example2", cmd_repro2, "reproduce the LRC example over F_19"),
    ):
        r = sub.add_parser(name, help=helptext)
        r.add_argument("--seed", type=int, default=0)
        r.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConvCodesError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return exc.exit_status


if __name__ == "__main__":
    sys.exit(main())

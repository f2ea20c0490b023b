"""Command-line front end: ``python -m cubicmcm <command> ...``.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

import argparse
import sys

from . import betti as be
from . import io
from .charge_lattice import Charge, in_domain3, reduce3, reduce6
from .errors import CubicMCMError
from .fields import field_from_descriptor
from .matfac import (
    betti_from_mf,
    hesse,
    hesse_koszul_mf,
    moore_mf,
    point_search,
    rational_point_search,
    skyscraper_explicit,
    skyscraper_mf,
    verify_mf,
)


class UsageError(Exception):
    pass


def _descriptor(args, allow_reduce=False):
    """Build a descriptor from ``r d --variant``; returns (desc, shift)."""
    charge = Charge(args.r, args.d)
    if charge == (0, 0):
        raise UsageError("argument r/d: the zero charge has no module")
    k, reduced = reduce3(charge)
    if k and not allow_reduce:
        raise UsageError(f"argument r/d: {charge} is outside the fundamental domain "
                         f"(it reduces to {reduced} with k={k}; try 'reduce')")
    r, d = reduced
    on_ray = d == 0 or 3 * r == 2 * d
    if args.variant is None:
        if on_ray:
            raise UsageError(f"--variant is required: {reduced} lies on a special ray "
                             f"(choose generic or {'atiyah' if d == 0 else 'special'})")
        variant = be.Variant.GENERIC
    else:
        variant = be.Variant.parse(args.variant)
        if not on_ray and variant is not be.Variant.GENERIC:
            raise UsageError(f"--variant {args.variant}: {reduced} is not on a special ray")
        if variant is be.Variant.ATIYAH and d != 0 or variant is be.Variant.SPECIAL and 3 * r != 2 * d:
            raise UsageError(f"--variant {args.variant} does not fit the ray of {reduced}")
    return be.ObjectDescriptor(reduced, variant, args.label), k


def _curve(args):
    fld = field_from_descriptor(args.field)
    return hesse(fld.parse(args.psi), fld)


def _point(text, curve):
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 3:
        raise UsageError("--point needs three comma-separated coordinates")
    return tuple(curve.field.parse(p) for p in parts)


def cmd_betti(args, out):
    desc, k = _descriptor(args, allow_reduce=True)
    table = be.betti_table(desc)
    if args.format == "json":
        out(io.dumps({"descriptor": str(desc), "charge": list(desc.charge),
                      "input_charge": [args.r, args.d], "shift": k,
                      "variant": desc.variant.value, "betti": io.table_to_json(table)}))
    elif args.format == "tex":
        out(io.render_table_tex(table))
    else:
        title = f"{desc}  charge {desc.charge}"
        if k:
            title += f"  (input {Charge(args.r, args.d)} = sigma^-{k}; beta[i,j] = table(i, j-{k}))"
        out(io.render_table_text(table, title))


def cmd_reduce(args, out):
    charge = Charge(args.r, args.d)
    k, c = (reduce6 if args.order == 6 else reduce3)(charge)
    if args.format == "json":
        out(io.dumps({"k": k, "charge": list(c), "order": args.order}))
    else:
        out(f"k={k}, charge {c}")


def cmd_resolution(args, out):
    desc, _ = _descriptor(args)
    if args.format == "json":
        res = be.complete_resolution(desc, args.steps)
        out(io.dumps({"descriptor": str(desc), "positions": [
            {"i": i, "degrees": {str(j): m for j, m in sorted(deg.items())}} for i, deg in res]}))
    elif args.format == "tex":
        out(io.render_resolution_tex(desc, args.steps))
    else:
        out(f"{desc}: complete resolution, position i holds the free module")
        out(io.render_resolution_text(desc, args.steps))


def cmd_invariants(args, out):
    desc, _ = _descriptor(args, allow_reduce=True)
    data = be.hilbert_data(desc)
    ulrich = be.is_ulrich(desc)
    if args.format == "json":
        payload = io.hilbert_to_json(data)
        payload.update(descriptor=str(desc), ulrich=ulrich, bundle_rank=desc.r)
        out(io.dumps(payload))
    else:
        out(f"{desc}")
        out(f"P(t) = {data.P_text()}")
        out(f"B(t) = {data.B_text()}")
        out(f"e={data.e}, mu={data.mu}, rank={data.rank}")
        out(f"bundle rank={desc.r}, ulrich={'yes' if ulrich else 'no'}")


def cmd_hilbert(args, out):
    desc, _ = _descriptor(args, allow_reduce=True)
    coeffs = be.hilbert_coefficients(desc, args.terms)
    if args.format == "json":
        out(io.dumps({"descriptor": str(desc), "coefficients": coeffs}))
    else:
        out(" ".join(str(c) for c in coeffs))


def cmd_syzygy(args, out):
    desc, _ = _descriptor(args)
    image, shift = be.descriptor_syzygy(desc)
    if args.format == "json":
        out(io.dumps({"from": str(desc), "to": str(image), "charge": list(image.charge),
                      "variant": image.variant.value, "shift": shift}))
    else:
        out(f"syz {desc} = {image} twisted: beta[i,j] = table({image})(i, j-{shift})")


def _emit_mf(args, out, mf, curve):
    if args.format == "text":
        out(repr(mf.A))
        out(repr(mf.B))
    else:
        out(io.encode_mf(mf, curve.psi).rstrip("\n"))


def cmd_mf(args, out):
    if args.kind == "verify":
        doc = io.decode_mf(_read(args.file), verify=False)
        report = verify_mf(doc.mf)
        for line in report.lines():
            out(line)
        return 0 if report.ok else 1
    if args.kind == "betti":
        doc = io.decode_mf(_read(args.file), verify=not args.no_verify)
        table = betti_from_mf(doc.mf, args.side)
        out(io.render_table_text(table, f"coker {args.side.upper()}"))
        return 0
    curve = _curve(args)
    if args.kind == "koszul":
        mf = hesse_koszul_mf(curve)
    else:
        if args.point is None:
            raise UsageError(f"--point is required for mf {args.kind}")
        a = _point(args.point, curve)
        build = {"moore": moore_mf, "skyscraper": skyscraper_mf,
                 "explicit": skyscraper_explicit}[args.kind]
        mf = build(curve, a)
    _emit_mf(args, out, mf, curve)
    return 0


def cmd_points(args, out):
    curve = _curve(args)
    if curve.field.characteristic == 0:
        pts = rational_point_search(curve, args.bound, args.nonzero)
    else:
        pts = point_search(curve, args.nonzero)
    fmt = curve.field.format
    for p in pts:
        out(",".join(fmt(c) for c in p))


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cubicmcm",
        description="Betti tables and matrix factorizations of MCM modules over a plane cubic cone.")
    sub = parser.add_subparsers(dest="command", required=True)

    def charge_cmd(name, helptext, fn):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("r", type=int)
        p.add_argument("d", type=int)
        p.add_argument("--variant", choices=["generic", "atiyah", "special"])
        p.add_argument("--label", help="point label for the continuous families")
        p.add_argument("--format", choices=["text", "json", "tex"], default="text")
        p.set_defaults(fn=fn)
        return p

    charge_cmd("betti", "Betti table of the module with charge (r, d)", cmd_betti)
    p = charge_cmd("resolution", "complete resolution around homological degree 0", cmd_resolution)
    p.add_argument("--steps", type=int, default=3)
    charge_cmd("invariants", "Hilbert numerator, multiplicity, generators, rank", cmd_invariants)
    p = charge_cmd("hilbert", "dimensions of graded pieces", cmd_hilbert)
    p.add_argument("--terms", type=int, default=10)
    charge_cmd("syzygy", "family and twist of the first syzygy", cmd_syzygy)

    p = sub.add_parser("reduce", help="reduce a charge into the fundamental domain")
    p.add_argument("r", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--order", type=int, choices=[3, 6], default=3)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_reduce)

    def curve_args(p):
        p.add_argument("--field", default="q", help="q or fp:P")
        p.add_argument("--psi", default="0")

    p = sub.add_parser("mf", help="matrix factorizations of the Hesse cubic")
    p.add_argument("kind", choices=["koszul", "moore", "skyscraper", "explicit", "verify", "betti"])
    p.add_argument("file", nargs="?", help="MF document for verify/betti ('-' for stdin)")
    curve_args(p)
    p.add_argument("--point", help="a0,a1,a2")
    p.add_argument("--side", choices=["A", "B", "a", "b"], default="A")
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(fn=cmd_mf)

    p = sub.add_parser("points", help="enumerate points of the Hesse cubic")
    curve_args(p)
    p.add_argument("--nonzero", action="store_true", help="only points with a0*a1*a2 != 0")
    p.add_argument("--bound", type=int, default=10, help="coordinate bound over Q")
    p.set_defaults(fn=cmd_points)
    return parser


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)

    def out(text):
        stdout.write(text + "\n")

    try:
        if args.command == "mf" and args.kind in ("verify", "betti") and not args.file:
            raise UsageError(f"mf {args.kind} needs a document file")
        status = args.fn(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"cubicmcm: error: {exc}\n")
        return 2
    except (CubicMCMError, OSError) as exc:
        sys.stderr.write(f"cubicmcm: {type(exc).__name__}: {exc}\n")
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())

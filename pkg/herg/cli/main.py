"""``herg`` command line.

Exit codes: 0 on success, 1 when a verification fails or graphs are not
isomorphic, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from herg.cli.fileformat import read_herg, serialize, write_herg
from herg.cli.generator import corpus, gen
from herg.cli.suites import VerifySuite, run_suite
from herg.config import configure_logging
from herg.core.iso import canonical_form, canonical_key, isomorphic
from herg.duality.dual import dual
from herg.errors import HergError
from herg.poly.invariants import InvariantKind, invariant
from herg.poly.polynomial import duality_subst, expand_x
from herg.topology.faces import trace_boundary
from herg.topology.invariants import classify, components, embedding_signature

logger = logging.getLogger(__name__)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_info(args: argparse.Namespace) -> int:
    g = read_herg(args.file)
    faces = trace_boundary(g)
    cls = classify(g)
    sig = embedding_signature(g)
    k, _ = components(g)
    rows = [
        ("v", g.v),
        ("e", g.e),
        ("H", g.h),
        ("k", k),
        ("f_int", faces.f_int),
        ("f_ext", faces.f_ext),
        ("C_ext", faces.c_ext),
        ("V_int", cls.v_int),
        ("V_ext", cls.v_ext),
        ("chi", sig.chi),
        ("gamma", sig.genus),
        ("orientable", "true" if sig.orientable else "false"),
        ("punctures_proper", sig.punctures_proper),
        ("punctures_hproper", sig.punctures_hproper),
    ]
    for key, value in rows:
        print(f"{key} = {value}")
    return 0


def cmd_dual(args: argparse.Namespace) -> int:
    gd, _ = dual(read_herg(args.file))
    if args.output:
        write_herg(gd, args.output)
    else:
        sys.stdout.write(serialize(gd))
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    kind = InvariantKind(args.kind)
    p = invariant(read_herg(args.file), kind)
    r_kinds = (InvariantKind.RCUT, InvariantKind.RSPAN)
    if args.subst == "duality":
        if kind not in r_kinds:
            raise HergError(f"--subst duality applies to RCut and RSpan, not {kind.value}")
        p = duality_subst(p)
    elif args.expand_x:
        if kind not in r_kinds:
            raise HergError(f"--expand-x applies to RCut and RSpan, not {kind.value}")
        p = expand_x(p)
    print(p.to_string())
    return 0


def cmd_iso(args: argparse.Namespace) -> int:
    mapping = isomorphic(read_herg(args.first), read_herg(args.second), args.reflect)
    if mapping is None:
        print("not isomorphic")
        return 1
    print("isomorphic")
    for src, dst in sorted(mapping.items()):
        print(f"{src} -> {dst}")
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    g = gen(args.vertices, args.edges, args.halves, args.seed, args.twists)
    _emit(serialize(g), args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.corpus:
        graphs = list(corpus(args.max_edges, args.seed))
    elif args.file:
        graphs = [(args.file, read_herg(args.file))]
    else:
        raise HergError("verify needs FILE or --corpus")
    passed = failed = skipped = 0
    for label, g in graphs:
        report = run_suite(g, args.suite, label)
        for r in report.results:
            if r.status == "PASS":
                passed += 1
            elif r.status == "FAIL":
                failed += 1
            else:
                skipped += 1
            if r.status == "FAIL" or not args.quiet:
                detail = f"  ({r.detail})" if r.detail else ""
                print(f"{r.status:<4}  {label:<20}  {r.suite:<11}  {r.name}{detail}")
    print(f"{len(graphs)} graph(s): {passed} passed, {failed} failed, {skipped} skipped")
    return 1 if failed else 0


def cmd_classify(args: argparse.Namespace) -> int:
    cls = classify(read_herg(args.file))
    for name in cls.hr_internal:
        print(f"half {name} : internal")
    for name in cls.hr_external:
        print(f"half {name} : external")
    for name, kind in sorted(cls.edge_classes.items()):
        flag = " bridge" if name in cls.bridges else ""
        print(f"edge {name} : {kind}{flag}")
    for name, kind in sorted(cls.vertex_classes.items()):
        print(f"vertex {name} : {kind}")
    print(f"V_int = {cls.v_int}")
    print(f"V_ext = {cls.v_ext}")
    return 0


def cmd_canon(args: argparse.Namespace) -> int:
    g = read_herg(args.file)
    print(f"key = {canonical_key(g, args.reflect)}")
    print(f"form = {canonical_form(g, args.reflect)!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="herg", description=__doc__)
    parser.add_argument("--log-level", default=None, help="overrides HERG_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="counts, faces, genus and punctures")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("dual", help="write the geometric dual")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("poly", help="print a polynomial invariant")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=[k.value for k in InvariantKind])
    p.add_argument("--subst", choices=["duality"])
    p.add_argument("--expand-x", action="store_true", help="print in x instead of xm1 = x - 1")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("iso", help="exit 0 iff the two graphs are isomorphic")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--reflect", action="store_true", help="allow a global reflection")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("gen", help="seeded random graph")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--halves", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--twists", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", action="store_true")
    p.add_argument("--max-edges", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", default="all", choices=[s.value for s in VerifySuite])
    p.add_argument("-q", "--quiet", action="store_true", help="print failures only")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="internal/external classes")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("canon", help="canonical form and key")
    p.add_argument("file")
    p.add_argument("--reflect", action="store_true")
    p.set_defaults(func=cmd_canon)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        configure_logging(args.log_level)
        return int(args.func(args))
    except (ValueError, OSError) as exc:
        print(f"herg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""``polyforge`` command line.

Exit codes: 0 success, 1 a check failed (or ``iso`` found no isomorphism),
2 usage error, 3 the isomorphism size guard was hit.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import audit as au
from .constructions import ConstructedPolytope
from .errors import PolyforgeError, TooLarge, UsageError
from .expr import evaluate, parse
from .incidence import enumerate_face_lattice, validate_lattice
from .isomorphism import are_isomorphic


def _load(path: str) -> ConstructedPolytope:
    try:
        with open(path) as fh:
            return ConstructedPolytope.from_dict(json.load(fh))
    except (OSError, ValueError, KeyError) as e:
        raise UsageError(f"cannot read polytope from {path}: {e}") from None


def cmd_build(args) -> int:
    P = parse(args.spec)
    if args.emit == "fvector":
        print(json.dumps(list(P.f_vector())))
    else:
        print(json.dumps(P.to_dict()))
    return 0


def cmd_fvector(args) -> int:
    P = _load(args.file)
    print(json.dumps(list(enumerate_face_lattice(P.structure).f_vector())))
    return 0


def cmd_validate(args) -> int:
    P = _load(args.file)
    problems = validate_lattice(enumerate_face_lattice(P.structure))
    for p in problems:
        print(p)
    return 1 if problems else 0


def cmd_iso(args) -> int:
    a, b = _load(args.a), _load(args.b)
    try:
        same = are_isomorphic(a.structure, b.structure, max_vertices=args.max_vertices)
    except TooLarge as e:
        print(f"skipped: {e}", file=sys.stderr)
        return 3
    print("isomorphic" if same else "not isomorphic")
    return 0 if same else 1


def cmd_eval(args) -> int:
    print(evaluate(args.spec))
    return 0


def cmd_audit(args) -> int:
    cfg = au.SweepConfig(dmax=args.dmax, checks=args.checks, seed=args.seed,
                         iso_cross_check=args.iso_cross_check, samples=args.samples,
                         timing=not args.no_timing)
    result = au.audit(cfg)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(result, fh, indent=1, default=str)
    s = result["summary"]
    print(f"pass {s['pass']}  fail {s['fail']}  skipped {s['skipped']}")
    failed = sorted({r["claim_id"] for r in result["reports"] if r["status"] == "fail"})
    if failed:
        print("failing claims: " + ", ".join(failed))
    return 1 if s["fail"] else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polyforge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    b = sub.add_parser("build", help="construct a polytope from an expression")
    b.add_argument("spec")
    b.add_argument("--emit", choices=["json", "fvector"], default="json")
    b.set_defaults(fn=cmd_build)

    f = sub.add_parser("fvector", help="f-vector of a polytope JSON file")
    f.add_argument("file")
    f.set_defaults(fn=cmd_fvector)

    v = sub.add_parser("validate", help="lattice sanity checks on a polytope JSON file")
    v.add_argument("file")
    v.set_defaults(fn=cmd_validate)

    i = sub.add_parser("iso", help="combinatorial isomorphism of two polytope JSON files")
    i.add_argument("a")
    i.add_argument("b")
    i.add_argument("--max-vertices", type=int, default=64)
    i.set_defaults(fn=cmd_iso)

    e = sub.add_parser("eval", help="evaluate a closed form, e.g. phi:1,4,4")
    e.add_argument("spec")
    e.set_defaults(fn=cmd_eval)

    a = sub.add_parser("audit", help="sweep parameters and check every claim")
    a.add_argument("--dmax", type=int, default=8)
    a.add_argument("--checks", default="all", help="comma-separated claim ids, or 'all'")
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--samples", type=int, default=100,
                   help="random vertex sequences per polytope for prop3.2-ii")
    a.add_argument("--report", help="write the JSON report here")
    a.add_argument("--iso-cross-check", action="store_true",
                   help="also rebuild TA/Z with every admissible recursive facet")
    a.add_argument("--no-timing", action="store_true",
                   help="zero runtime_ms so reports are byte-for-byte reproducible")
    a.set_defaults(fn=cmd_audit)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"polyforge: {e}", file=sys.stderr)
        return 2
    except (PolyforgeError, KeyError) as e:
        print(f"polyforge: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

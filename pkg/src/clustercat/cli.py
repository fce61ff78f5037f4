"""Command line front end: verification reports, exports, HTTP serve mode.

verify runs any subset of the theorem checks for one type and prints a
verdict report; export writes atlases, quivers and hom tables; serve
starts the JSON API the explorer consumes.  Exit code is nonzero exactly
when a non-finding check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .cluster_algebra import Laurent, atlas, rebase
from .errors import CapExceededError, ContractViolationError, NotFiniteTypeError
from .quiver import alternating_quiver, appendix_report
from .repcat import cluster_category
from .root_system import DynkinType
from .tilting import (
    CONVENTION_FLIP,
    check_all_denominators,
    check_denominators,
    check_exchange,
    check_quiver_identity,
    check_relations,
)

CHECK_NAMES = (
    "quivers",
    "relations",
    "bb",
    "exchange",
    "denominators",
    "counts",
    "appendix",
    "winding",
)
LARGE_TYPES = {"E7", "E8"}


def _type_name(dtype: str, allow_large: bool) -> str:
    name = DynkinType.parse(dtype).name
    if name in LARGE_TYPES and not allow_large:
        raise CapExceededError(f"type {name} is gated; pass --allow-large")
    return name


def _terms(v: Laurent):
    return [[list(e), c] for e, c in v.sorted_terms()]


def atlas_dump(name: str) -> dict:
    """Whole-atlas JSON payload; cluster indices match verify --cluster ids."""
    at = atlas(name)
    variables = sorted(at.root_of.items(), key=lambda kv: kv[1])
    index = {v: i for i, (v, _) in enumerate(variables)}
    return {
        "type": name,
        "n": at.rs.n,
        "nu": at.rs.nu,
        "variables": [
            {"id": i, "root": list(root), "terms": _terms(v)}
            for i, (v, root) in enumerate(variables)
        ],
        "clusters": [
            sorted(index[v] for v in at.clusters[cid]) for cid in range(len(at.clusters))
        ],
        "edges": [[e.a, e.b] for e in at.edges],
    }


def homtable_dump(name: str) -> dict:
    cc = cluster_category(name)
    objs = cc.cobjects()
    return {
        "type": name,
        "objects": [list(o) for o in objs],
        "hom": [[cc.hom_C_dim(x, y) for y in objs] for x in objs],
        "ext": [[cc.ext_C_dim(x, y) for y in objs] for x in objs],
    }


def _denominator_listing(name: str, cid: int) -> list:
    at = atlas(name)
    mapping = rebase(at, cid)
    rows = [
        {"root": list(at.root_of[v]), "d": list(exp.denominator_exponents())}
        for v, exp in mapping.items()
    ]
    return sorted(rows, key=lambda r: r["root"])


def run_checks(name: str, checks, cluster: Optional[int] = None, flip: bool = CONVENTION_FLIP) -> dict:
    """Run the requested checks and collect one verdict per check.

    The exchange sweep backs both the bb and exchange verdicts and the
    relation sweep backs both relations and winding, so each heavy pass
    runs at most once.  winding is a finding, never a failure.
    """
    report = {"type": name, "convention_flip": flip, "checks": {}, "status": "pass"}
    shared: dict = {}

    def exchange_stats():
        if "exchange" not in shared:
            shared["exchange"] = check_exchange(name)
        return shared["exchange"]

    def relation_stats():
        if "relations" not in shared:
            shared["relations"] = check_relations(name)
        return shared["relations"]

    for check in checks:
        t0 = time.perf_counter()
        status = "pass"
        try:
            if check == "quivers":
                detail = check_quiver_identity(name, flip=flip)
            elif check == "relations":
                st = dict(relation_stats())
                st.pop("shortest_windings_all_one", None)
                st.pop("shortest_closed_paths", None)
                detail = st
            elif check == "bb":
                st = exchange_stats()
                detail = {
                    "edges": st["edges"],
                    "degenerate_sides": st["degenerate_sides"],
                    "negative_simple_views": st["negative_simple_views"],
                }
            elif check == "exchange":
                detail = {
                    "edges": exchange_stats()["edges"],
                    "identity": "z z' = prod(right) + prod(left)",
                }
            elif check == "denominators":
                if cluster is None:
                    detail = check_all_denominators(name)
                else:
                    detail = dict(check_denominators(name, cluster))
                    detail["vectors"] = _denominator_listing(name, cluster)
            elif check == "counts":
                at = atlas(name)
                if len(at.root_of) != at.rs.nu + at.rs.n:
                    raise ContractViolationError("variable count differs from nu + n")
                detail = {
                    "clusters": len(at.clusters),
                    "variables": len(at.root_of),
                    "nu": at.rs.nu,
                    "n": at.rs.n,
                }
            elif check == "appendix":
                detail = appendix_report(name)
            elif check == "winding":
                st = relation_stats()
                status = "finding"
                detail = {
                    "shortest_closed_paths": st["shortest_closed_paths"],
                    "all_windings_one": st["shortest_windings_all_one"],
                }
            else:
                raise ValueError(f"unknown check {check!r}")
        except (ContractViolationError, CapExceededError) as e:
            status = "fail"
            detail = {"error": str(e)}
        report["checks"][check] = {
            "status": status,
            "seconds": round(time.perf_counter() - t0, 3),
            "detail": detail,
        }
    if any(c["status"] == "fail" for c in report["checks"].values()):
        report["status"] = "fail"
    return report


def format_table(report: dict) -> str:
    lines = [
        f"type {report['type']}  flip={report['convention_flip']}  status={report['status']}"
    ]
    for nm, c in report["checks"].items():
        summary = "  ".join(
            f"{k}={v}" for k, v in c["detail"].items() if not isinstance(v, (list, dict))
        )
        lines.append(f"  {nm:<13}{c['status']:<9}{c['seconds']:>8.3f}s  {summary}")
    return "\n".join(lines)


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_verify(args) -> int:
    name = _type_name(args.type, args.allow_large)
    if args.checks == "all":
        checks = list(CHECK_NAMES)
    else:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in checks if c not in CHECK_NAMES]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
    if args.cluster is not None:
        at = atlas(name)
        if not 0 <= args.cluster < len(at.clusters):
            raise ValueError(f"cluster id out of range 0..{len(at.clusters) - 1}")
    flip = True if args.convention_flip else CONVENTION_FLIP
    report = run_checks(name, checks, cluster=args.cluster, flip=flip)
    if args.format == "json":
        _emit(json.dumps(report, indent=2), args.out)
    else:
        _emit(format_table(report), args.out)
    return 0 if report["status"] == "pass" else 1


def cmd_export(args) -> int:
    name = _type_name(args.type, args.allow_large)
    what = getattr(args, "what", "atlas")
    fmt = getattr(args, "format", "json")
    if what == "quiver":
        q = alternating_quiver(name)
        text = q.to_dot() if fmt == "dot" else json.dumps(q.to_json_dict(), indent=2)
    elif fmt == "dot":
        raise ValueError(f"{what} has no dot form")
    elif what == "atlas":
        text = json.dumps(atlas_dump(name), indent=2)
    elif what == "homtable":
        text = json.dumps(homtable_dump(name), indent=2)
    else:
        raise ValueError(f"unknown export {what!r}")
    _emit(text, args.out)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import build_app

    app = build_app(allow_large=args.allow_large, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    p = argparse.ArgumentParser(
        prog="clustercat",
        description="exact checks and exports for finite-type cluster algebras",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run theorem checks and report verdicts")
    pv.add_argument("--type", required=True, help="Dynkin type, e.g. A3 or D4")
    pv.add_argument("--checks", default="all", help=f"all or comma list of {','.join(CHECK_NAMES)}")
    pv.add_argument("--cluster", type=int, help="restrict denominators to one cluster id")
    pv.add_argument("--out", help="write the report here instead of stdout")
    pv.add_argument("--format", choices=("json", "table"), default="table")
    pv.add_argument("--allow-large", action="store_true", help="permit E7/E8 sweeps")
    pv.add_argument("--convention-flip", action="store_true",
                    help="compare quivers under the reversed orientation convention")

    pe = sub.add_parser("export", help="write atlases, quivers and hom tables")
    pe.add_argument("--type", required=True)
    pe.add_argument("--what", choices=("atlas", "quiver", "homtable"), required=True)
    pe.add_argument("--format", choices=("json", "dot"), default="json")
    pe.add_argument("--out")
    pe.add_argument("--allow-large", action="store_true")

    pc = sub.add_parser("clusters", help="shorthand for export --what atlas")
    pc.add_argument("--type", required=True)
    pc.add_argument("--out")
    pc.add_argument("--allow-large", action="store_true")

    ps = sub.add_parser("serve", help="start the explorer JSON API")
    ps.add_argument("--port", type=int, default=8377)
    ps.add_argument("--host", default="127.0.0.1")
    ps.add_argument("--static", help="directory of built explorer assets to mount at /")
    ps.add_argument("--allow-large", action="store_true")

    args = p.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command in ("export", "clusters"):
            return cmd_export(args)
        return cmd_serve(args)
    except (CapExceededError, NotFiniteTypeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 2 precondition failure or inapplicable input,
3 violated invariant (a genuine mathematical finding, not a usage error),
4 search timeout.
"""
from __future__ import annotations

import argparse
import inspect
import json
import sys

from . import bounds as bnd
from . import families as fam
from . import verify as vfy
from .directions import PointSet, direction_set, thm16_lower_bound
from .errors import InvariantViolation, PreconditionError
from .field import Field, build_field
from .graph import build_cyclotomic_graph, build_paley_graph, enumerate_max_cliques, is_clique, max_clique

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_INVARIANT = 3
EXIT_TIMEOUT = 4


def _strip_volatile(obj):
    """Drop wall-clock fields so identical runs emit identical bytes."""
    if isinstance(obj, dict):
        return {k: _strip_volatile(v) for k, v in obj.items() if k != "seconds"}
    if isinstance(obj, list):
        return [_strip_volatile(v) for v in obj]
    return obj


def _emit(payload: dict, fmt: str) -> None:
    payload = {"schema": 1, **_strip_volatile(payload)}
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "csv":
        import csv

        writer = csv.writer(sys.stdout)
        rows = _csv_rows(payload)
        writer.writerow(["key", "value"] if rows and len(rows[0]) == 2 else rows[0])
        for row in (rows if not rows or len(rows[0]) == 2 else rows[1:]):
            writer.writerow(row)
    else:
        for key, value in sorted(_flatten(payload)):
            print(f"{key} = {value}")


def _csv_rows(payload: dict) -> list[list]:
    certs = payload.get("certificates")
    if isinstance(certs, list) and certs and isinstance(certs[0], dict) \
            and "bound" in certs[0]:
        header = ["bound", "kind", "value", "applicable", "reason"]
        rows = [header]
        for c in certs:
            rows.append([c.get(k, "") for k in header])
        return rows
    return [[k, json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v]
            for k, v in sorted(_flatten(payload))]


def _flatten(obj, prefix: str = ""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}." if prefix or True else k)
    else:
        yield prefix.rstrip("."), obj


def _parse_set(spec: str, field: Field) -> frozenset[int]:
    """Explicit comma list, or `subfield:m` / `range:k` shorthand."""
    if spec.startswith("subfield:"):
        return frozenset(field.subfield_elements(int(spec.split(":", 1)[1])))
    if spec.startswith("range:"):
        k = int(spec.split(":", 1)[1])
        if not 0 < k <= field.q:
            raise PreconditionError(f"range size {k} out of 1..{field.q}")
        return frozenset(range(k))
    try:
        values = frozenset(int(tok) for tok in spec.split(",") if tok.strip())
    except ValueError as exc:
        raise PreconditionError(f"malformed set {spec!r}") from exc
    if not values:
        raise PreconditionError(f"empty set {spec!r}")
    return values


def _field_args(args) -> Field:
    return build_field(args.p, args.e, table_limit=args.table_limit)


def _cmd_field(args) -> tuple[dict, int]:
    return _field_args(args).to_json(), EXIT_OK


def _graph_from_args(args):
    field = _field_args(args)
    if getattr(args, "index_set", None):
        index = frozenset(int(t) for t in args.index_set.split(",") if t.strip())
        return build_cyclotomic_graph(field, args.d, index)
    return build_paley_graph(field, args.d)


def _cmd_graph(args) -> tuple[dict, int]:
    return _graph_from_args(args).to_json(), EXIT_OK


def _cmd_clique(args) -> tuple[dict, int]:
    graph = _graph_from_args(args)
    result = max_clique(graph, time_limit=args.time_limit)
    payload = {"graph": graph.to_json(), "clique": result.to_json()}
    if not result.optimal:
        return payload, EXIT_TIMEOUT
    if args.enumerate or args.contains is not None:
        required = () if args.contains in (None, "") else \
            tuple(int(t) for t in args.contains.split(","))
        cliques = enumerate_max_cliques(graph, required,
                                        time_limit=args.time_limit)
        payload["maximum_cliques"] = [list(c) for c in cliques]
        payload["count"] = len(cliques)
    return payload, EXIT_OK


def _cmd_bound(args) -> tuple[dict, int]:
    q = args.p ** args.e
    if args.all or not (args.thm11 or args.thm13 or args.prop41 or args.remark32):
        bundle = bnd.best_bounds(q, args.d)
        return bundle.to_json(), EXIT_OK
    certs = []
    if args.thm11:
        certs.append(bnd.thm11_bound(q, args.d))
    if args.thm13:
        certs.append(bnd.thm13_bound(q, args.d))
    if args.prop41:
        certs.append(bnd.prop41_certify(q, args.prop41, args.d))
    if args.remark32:
        index = frozenset(int(t) for t in args.remark32.split(","))
        certs.append(bnd.remark32_bound(q, args.d, index))
    payload = {"q": q, "d": args.d,
               "certificates": [c.to_json() for c in certs]}
    code = EXIT_OK if any(c.applicable for c in certs) else EXIT_PRECONDITION
    return payload, code


def _cmd_directions(args) -> tuple[dict, int]:
    field = _field_args(args)
    A = _parse_set(args.A, field)
    B = _parse_set(args.B, field)
    ds = direction_set(PointSet.cartesian(field, A, B))
    bound = thm16_lower_bound(len(A), len(B), field.q, field.p)
    payload = {
        "q": field.q, "m": len(A), "n": len(B),
        "size": ds.size, "bound": bound, "sharp": ds.size == bound,
        "directions": ds.to_json(),
    }
    if ds.size < bound:
        return payload, EXIT_INVARIANT
    return payload, EXIT_OK


def _cmd_family(args) -> tuple[dict, int]:
    name = args.family
    if name == "ex42":
        out = fam.family_ex42(args.params[0], args.params[1] if len(args.params) > 1 else 1)
    elif name == "ex43":
        out = fam.family_ex43(*args.params[:3])
    elif name == "ex44":
        out = fam.family_ex44(args.params[0])
    elif name == "ex45":
        out = fam.counterexample_ex45(args.params[0])
    else:
        out = fam.counterexample_ex46()
    payload = out.to_json()
    code = EXIT_PRECONDITION if isinstance(out, fam.FamilyRejection) else EXIT_OK
    return payload, code


def _cmd_verify(args) -> tuple[dict, int]:
    names = list(vfy.SUITES) if args.suite == "all" else [args.suite]
    offered = {"seed": args.seed, "trials": args.trials, "max_q": args.max_q,
               "exhaustive": args.exhaustive, "time_limit": args.time_limit}
    reports = []
    for name in names:
        fn = vfy.SUITES[name]
        params = inspect.signature(fn.__wrapped__).parameters
        kwargs = {k: v for k, v in offered.items() if k in params and v is not None}
        reports.append(fn(**kwargs))
    payload = {"reports": [r.to_json() for r in reports],
               "passed": all(r.passed for r in reports)}
    return payload, EXIT_OK if payload["passed"] else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gpaley")
    parser.add_argument("--format", choices=("json", "csv", "text"),
                        default="json")
    parser.add_argument("--workers", type=int, default=1,
                        help="worker count hint (current search is serial)")
    parser.add_argument("--table-limit", type=int, default=None,
                        help="max field size for full log/exp tables")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *, d=False):
        sp = sub.add_parser(name)
        sp.add_argument("p", type=int)
        sp.add_argument("e", type=int)
        if d:
            sp.add_argument("d", type=int)
        sp.set_defaults(func=func)
        return sp

    add("field", _cmd_field)

    sp = add("graph", _cmd_graph, d=True)
    sp.add_argument("--index-set", default=None,
                    help="comma list of cyclotomic classes (default {0})")

    sp = add("clique", _cmd_clique, d=True)
    sp.add_argument("--index-set", default=None)
    sp.add_argument("--enumerate", action="store_true",
                    help="list all maximum cliques")
    sp.add_argument("--contains", default=None,
                    help="comma list of required vertices for enumeration")
    sp.add_argument("--time-limit", type=float, default=60.0)

    sp = add("bound", _cmd_bound, d=True)
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--thm11", action="store_true")
    sp.add_argument("--thm13", action="store_true")
    sp.add_argument("--prop41", type=int, default=None, metavar="K",
                    help="subfield order to certify")
    sp.add_argument("--remark32", default=None, metavar="I",
                    help="comma list index set")

    sp = add("directions", _cmd_directions)
    sp.add_argument("--A", required=True,
                    help="comma list, subfield:m, or range:k")
    sp.add_argument("--B", required=True)

    sp = sub.add_parser("family")
    sp.add_argument("family", choices=("ex42", "ex43", "ex44", "ex45", "ex46"))
    sp.add_argument("params", type=int, nargs="*")
    sp.set_defaults(func=_cmd_family)

    sp = sub.add_parser("verify")
    sp.add_argument("suite", choices=tuple(vfy.SUITES) + ("all",))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=None)
    sp.add_argument("--max-q", type=int, default=None)
    sp.add_argument("--q", type=int, default=None,
                    help="accepted for suite selection; exhaustive sweeps "
                         "run at their fixed base fields")
    sp.add_argument("--exhaustive", action="store_true", default=None)
    sp.add_argument("--time-limit", type=float, default=None)
    sp.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.func(args)
    except (PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    _emit(payload, args.format)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

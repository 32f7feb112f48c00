"""Command line entry point ``nc``.

Exit codes: 0 success, 1 a proved check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijections import (
    PreconditionViolated,
    enumerate_quadrangulations,
    fold_central,
    fold_d,
    fold_diameter,
    format_quadrangulation,
    has_central_polygon,
    quad_to_tree,
    tree_to_quad,
    unfold_central,
    unfold_d,
    unfold_diameter,
)
from .formulas import family_count, family_of, family_qpoly
from .harness import (
    identity_lines,
    verify_family,
    verify_identities,
    verify_series,
)
from .ncgraph import (
    Family,
    NcPartition,
    count,
    count_fixed,
    enumerate_family,
    enumerate_fixed,
    format_graph,
    format_partition,
    rotate,
)

FAMILIES = ("connected", "tree", "forest", "dissection", "partition", "graph")


class UsageError(Exception):
    pass


def _formula_k(args) -> int | None:
    """The k-parameter of the family formula from --k / --c / --b."""
    tag = args.family
    if tag == "tree":
        return None
    if tag == "forest":
        k = args.c if args.c is not None else args.k
        if k is None:
            raise UsageError("forest needs --c COMPONENTS")
        return k
    if tag == "partition":
        if args.b is not None:
            return args.n - args.b
        if args.k is None:
            raise UsageError("partition needs --b BLOCKS or --k")
        return args.k
    if args.k is None:
        raise UsageError(f"{tag} needs --k")
    return args.k


def cmd_count(args, out) -> int:
    k = _formula_k(args)
    if args.method == "formula":
        print(family_count(args.family, args.n, k), file=out)
        return 0
    fam, edges = family_of(args.family, k, args.n)
    if args.fixed_d is None:
        print(count(args.n, edges, fam), file=out)
    else:
        print(count_fixed(args.n, edges, args.fixed_d, fam), file=out)
    return 0


def _as_json(obj) -> dict:
    if isinstance(obj, NcPartition):
        return {"n": obj.n, "blocks": [list(b) for b in obj.blocks]}
    return {"n": obj.n, "edges": [list(e) for e in obj.edges]}


def _as_text(obj) -> str:
    if isinstance(obj, NcPartition):
        return format_partition(obj)
    return format_graph(obj)


def cmd_enumerate(args, out) -> int:
    if args.family != "partition" and args.k is None and args.family not in ("tree", "forest"):
        raise UsageError(f"{args.family} needs --k")
    if args.family == "forest":
        if args.c is None:
            raise UsageError("forest needs --c COMPONENTS")
        fam = Family.forest(args.c)
    elif args.family == "partition":
        fam = Family.partition(args.b or 1)
    elif args.family == "graph":
        fam = Family.any_graph()
    else:
        fam = Family(args.family)
    k = args.k
    if args.family == "tree":
        k = args.n - 1
    elif args.family == "forest":
        k = args.n - args.c
    fams = [fam]
    if args.family == "partition" and args.b is None:
        fams = [Family.partition(b) for b in range(1, args.n + 1)]
    if args.fixed_d is None:
        items = [x for f in fams for x in enumerate_family(args.n, k, f)]
    else:
        items = [x for f in fams for x in enumerate_fixed(args.n, k, args.fixed_d, f)]
    if args.format == "json":
        json.dump([_as_json(x) for x in items], out)
        out.write("\n")
    else:
        for x in items:
            print(_as_text(x), file=out)
    return 0


def cmd_qpoly(args, out) -> int:
    q = family_qpoly(args.family, args.n, _formula_k(args))
    if not q.is_polynomial:
        print(f"{q.name} is not a polynomial", file=sys.stderr)
        print("numerator:", " ".join(map(str, q.numerator.coeffs)), file=out)
        print("denominator:", " ".join(map(str, q.denominator.coeffs)), file=out)
        return 1
    coeffs = q.quotient.coeffs or (0,)
    print(" ".join(map(str, coeffs)), file=out)
    return 0


def cmd_csp(args, out) -> int:
    report = verify_family(args.family, args.max_n, workers=args.workers)
    for line in report.lines():
        print(line, file=out)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
    if args.identities:
        reports = verify_identities(args.max_n, args.max_n)
        for line in identity_lines(reports):
            print(line, file=out)
        if not all(r.ok for r in reports):
            return 1
    return report.exit_code


def cmd_series(args, out) -> int:
    reports = verify_series(args.order)
    for line in identity_lines(reports):
        print(line, file=out)
    return 0 if all(r.ok for r in reports) else 1


# -- bijections ----------------------------------------------------------------

def _tree_quad(n: int, roundtrip: bool, out) -> bool:
    ok = True
    trees = 0
    for t in enumerate_family(n, n - 1, Family.tree()):
        q = tree_to_quad(t)
        trees += 1
        if roundtrip:
            ok &= quad_to_tree(q) == t
        else:
            print(f"{format_graph(t)}  ->  {format_quadrangulation(q)}", file=out)
    if roundtrip:
        quads = 0
        for q in enumerate_quadrangulations(2 * n):
            quads += 1
            ok &= tree_to_quad(quad_to_tree(q)) == q
        print(f"tree-quad n={n}: {trees} trees, {quads} quadrangulations, round trips {'ok' if ok else 'FAIL'}", file=out)
    return ok


def _with_diameter_at_1(g):
    m = g.n // 2
    for a, b in g.edges:
        if b - a == m:
            return rotate(g, g.n - (a - 1))
    return None


def _fold2(n: int, roundtrip: bool, out) -> bool:
    if n % 2:
        raise UsageError("fold2 needs even --n")
    ok = True
    seen = 0
    for k in range(n - 1, 2 * n - 2, 2):
        for g in enumerate_fixed(n, k, 2, Family.connected()):
            g = _with_diameter_at_1(g)
            h = fold_diameter(g)
            seen += 1
            if roundtrip:
                ok &= unfold_diameter(h) == g
            else:
                print(f"{format_graph(g)}  ->  {format_graph(h)}", file=out)
    if roundtrip:
        print(f"fold2 n={n}: {seen} graphs, round trips {'ok' if ok else 'FAIL'}", file=out)
    return ok


def _fold_d(n: int, d: int, roundtrip: bool, out) -> bool:
    if d is None or d < 3 or n % d:
        raise UsageError("fold-d needs --d >= 3 dividing --n")
    m = n // d
    ok = True
    folded = central = 0
    for k in range(n - 1, 2 * n - 2):
        for g in enumerate_fixed(n, k, d, Family.connected()):
            if has_central_polygon(g, d):
                central += 1
                for r in range(m):
                    h_g = rotate(g, r)
                    try:
                        h = fold_central(h_g, d)
                    except PreconditionViolated:
                        continue
                    break
                else:
                    ok = False
                    continue
                back = unfold_central(h, d)
                g_cmp = h_g
            else:
                folded += 1
                h = fold_d(g, d)
                back = unfold_d(h, d)
                g_cmp = g
            if roundtrip:
                ok &= back == g_cmp
            else:
                print(f"{format_graph(g)}  ->  {format_graph(h)}", file=out)
    if roundtrip:
        print(
            f"fold-d n={n} d={d}: {folded} folded, {central} with a central {d}-gon, "
            f"round trips {'ok' if ok else 'FAIL'}",
            file=out,
        )
    return ok


def cmd_bijection(args, out) -> int:
    if args.which == "tree-quad":
        ok = _tree_quad(args.n, args.roundtrip, out)
    elif args.which == "fold2":
        ok = _fold2(args.n, args.roundtrip, out)
    else:
        ok = _fold_d(args.n, args.d, args.roundtrip, out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nc", description="Cyclic sieving checks for non-crossing graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="closed-form count (or enumeration with --method enumerate)")
    c.add_argument("--family", choices=FAMILIES, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--c", type=int, help="components (forest)")
    c.add_argument("--b", type=int, help="blocks (partition)")
    c.add_argument("--method", choices=("formula", "enumerate"), default="formula")
    c.add_argument("--fixed-d", type=int, help="with --method enumerate: count rotation-fixed members")
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", help="list family members")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int)
    e.add_argument("--family", choices=FAMILIES, required=True)
    e.add_argument("--c", type=int, help="components (forest)")
    e.add_argument("--b", type=int, help="blocks (partition)")
    e.add_argument("--fixed-d", type=int)
    e.add_argument("--format", choices=("edges", "json"), default="edges")
    e.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("qpoly", help="q-analogue coefficients, low degree first")
    q.add_argument("--family", choices=FAMILIES, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int)
    q.add_argument("--c", type=int)
    q.add_argument("--b", type=int)
    q.set_defaults(func=cmd_qpoly)

    csp = sub.add_parser("csp", help="cyclic sieving checks")
    csp_sub = csp.add_subparsers(dest="action", required=True)
    v = csp_sub.add_parser("verify")
    v.add_argument("--family", choices=FAMILIES, required=True)
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--json", metavar="PATH")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--identities", action="store_true", help="also run the counting identities")
    v.set_defaults(func=cmd_csp)

    s = sub.add_parser("series", help="generating-function identities")
    s_sub = s.add_subparsers(dest="action", required=True)
    sv = s_sub.add_parser("verify")
    sv.add_argument("--order", type=int, required=True)
    sv.set_defaults(func=cmd_series)

    b = sub.add_parser("bijection", help="apply or round-trip a bijection")
    b.add_argument("--which", choices=("tree-quad", "fold2", "fold-d"), required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--d", type=int)
    b.add_argument("--roundtrip", action="store_true")
    b.set_defaults(func=cmd_bijection)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except ValueError as exc:
        print(f"nc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

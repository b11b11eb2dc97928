"""Command-line front end.

Exit status: 0 when the property holds or the computation finished, 1 when
the property fails (a witness is printed), 2 on bad input or a tripped
guard.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import canonical, codes, isometry, macwilliams, reconstruction
from .errors import GraphMetricError, NotAnIsometry, NotHierarchical
from .graph import format_graph, parse_graph, reverse
from .linalg import dual_code, format_code, format_map, parse_code, parse_map, vector_from_string
from .metric import format_weight_table, g_weight, parse_weight_table, weight_table


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _graph(path):
    return parse_graph(_read(path))


def _code(path):
    return parse_code(_read(path))


def _emit(args, human: str, record: dict):
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        sys.stdout.write(human if human.endswith("\n") else human + "\n")


def cmd_weight(args):
    g = _graph(args.graph)
    if args.word is not None:
        x = vector_from_string(args.word)
        w = g_weight(g, x)
    else:
        w = g_weight(g, {int(v) for v in args.support.split(",") if v.strip()})
    _emit(args, str(w), {"weight": w})
    return 0


def cmd_table(args):
    g = _graph(args.graph)
    t = weight_table(g)
    _emit(args, format_weight_table(t), {"n": t.n, "weights": {str(k): v for k, v in sorted(t.items())}})
    return 0


def cmd_canon(args):
    g = _graph(args.graph)
    if args.reduced:
        r = canonical.reduced_form(g)
        _emit(args, canonical.format_reduced_form(r), {
            "m": r.m, "h": r.h, "L": list(r.L), "level": list(r.level),
            "edges": [list(e) for e in r.hasse.edges], "pi": list(r.pi)})
    else:
        e = canonical.expanded_form(g)
        _emit(args, format_graph(e), {"n": e.n, "edges": [list(x) for x in e.edges]})
    return 0


def cmd_same_metric(args):
    same = canonical.same_metric(_graph(args.graph1), _graph(args.graph2))
    _emit(args, "same" if same else "different", {"holds": same})
    return 0 if same else 1


def cmd_isomorphic(args):
    sigma = canonical.metric_isomorphism(_graph(args.graph1), _graph(args.graph2))
    if sigma is None:
        _emit(args, "not isomorphic", {"holds": False})
        return 1
    _emit(args, "isomorphic via " + " ".join(map(str, sigma)), {"holds": True, "permutation": list(sigma)})
    return 0


def cmd_reconstruct(args):
    t = parse_weight_table(_read(args.table))
    t = reconstruction.recover_matching_weights(t)
    o = reconstruction.WeightOracle.from_table(t)
    g = reconstruction.infer_from_weight12(o)
    _emit(args, format_graph(g), {"n": g.n, "edges": [list(e) for e in g.edges], "queries": o.queries})
    return 0


def cmd_certificate(args):
    g = _graph(args.graph)
    cert = reconstruction.certificate(g)
    lines = [f"{' '.join(map(str, sorted(s))) or '-'} : {w}" for s, w in cert]
    record = {"entries": [[sorted(s), w] for s, w in cert]}
    status = 0
    if args.verify:
        ok = reconstruction.verify_certificate(cert, g.n)
        record["unique"] = ok
        lines.append("unique" if ok else "not unique")
        status = 0 if ok else 1
    _emit(args, "\n".join(lines), record)
    return status


def cmd_isometry_check(args):
    g, t = _graph(args.graph), parse_map(_read(args.map))
    ok = isometry.is_isometry(g, t)
    _emit(args, "isometry" if ok else "not an isometry", {"holds": ok})
    return 0 if ok else 1


def cmd_decompose_isometry(args):
    g, t = _graph(args.graph), parse_map(_read(args.map))
    try:
        d = isometry.decompose_isometry(g, t)
    except NotAnIsometry as exc:
        _emit(args, f"not an isometry: {exc}", {"holds": False, "reason": str(exc)})
        return 1
    human = "phi " + " ".join(map(str, d.phi)) + "\nn_part\n" + format_map(d.nmap)
    _emit(args, human, {"phi": list(d.phi), "n_part": [list(r) for r in d.nmap.matrix]})
    return 0


def cmd_group_order(args):
    g = _graph(args.graph)
    order = isometry.group_order(g, args.q)
    literal = isometry.product_order(g, args.q)
    human = f"{order}\n# |Aut| * |N| = {literal}"
    _emit(args, human, {"order": order, "aut_times_n": literal})
    return 0


def cmd_code_decompose(args):
    g, c = _graph(args.graph), _code(args.code)
    try:
        d = codes.canonical_decomposition(g, c)
    except NotHierarchical as exc:
        w = exc.witness
        _emit(args, f"not hierarchical: {exc}\n" + format_code(w),
              {"holds": False, "witness": [list(b) for b in w.basis]})
        return 1
    parts = [format_map(d.isometry).rstrip("\n")]
    for i, comp in enumerate(d.components, start=1):
        parts.append(f"# level {i}\n" + format_code(comp).rstrip("\n"))
    _emit(args, "\n".join(parts), {
        "isometry": [list(r) for r in d.isometry.matrix],
        "components": [[list(b) for b in comp.basis] for comp in d.components]})
    return 0


def cmd_min_distance(args):
    d = codes.min_distance(_graph(args.graph), _code(args.code))
    _emit(args, str(d), {"min_distance": d})
    return 0


def cmd_packing_radius(args):
    g, c = _graph(args.graph), _code(args.code)
    fn = codes.packing_radius_formula if args.formula else codes.packing_radius_bruteforce
    r = fn(g, c)
    _emit(args, str(r), {"packing_radius": r, "method": "formula" if args.formula else "brute"})
    return 0


def cmd_enumerator(args):
    g, c = _graph(args.graph), _code(args.code)
    if args.dual:
        g, c = reverse(g), dual_code(c)
    w = macwilliams.weight_enumerator(g, c)
    if args.json:
        print(w.to_json())
    else:
        print(w)
    return 0


def _check(args, res, what, fmt_witness):
    if res.holds:
        _emit(args, f"{what} holds", {"holds": True})
        return 0
    human, rec = fmt_witness(res.witness)
    _emit(args, f"{what} fails\n{human}", {"holds": False, "witness": rec})
    return 1


def cmd_udp(args):
    r = canonical.reduced_form(_graph(args.graph))
    return _check(args, macwilliams.udp_check(r), "UDP", lambda w: (
        f"S = {list(w[0])} (L {[r.L[b] for b in w[0]]}), S' = {list(w[1])} (L {[r.L[b] for b in w[1]]})",
        [list(w[0]), list(w[1])]))


def cmd_omega(args):
    r = canonical.reduced_form(_graph(args.graph))
    return _check(args, macwilliams.omega_check(r), "condition Omega", lambda w: (
        f"level {w[0]} has blocks {list(w[2])} all of size {w[1]}",
        {"level": w[0], "size": w[1], "blocks": list(w[2])}))


def cmd_macwilliams_check(args):
    g = _graph(args.graph)
    res = macwilliams.identity_check(g, args.max_dim, args.q)
    return _check(args, res, "MacWilliams identity", lambda w: (
        format_code(w[0]) + format_code(w[1]),
        [[list(b) for b in w[0].basis], [list(b) for b in w[1].basis]]))


def cmd_extension_check(args):
    g = _graph(args.graph)
    res = macwilliams.extension_check(g, args.dim_cap)
    return _check(args, res, "extension property", lambda w: (
        format_code(w.code) + format_code(w.image)
        + "".join(f"t({''.join(map(str, a))}) = {''.join(map(str, b))}\n" for a, b in zip(w.basis, w.images)),
        {"basis": [list(a) for a in w.basis], "images": [list(b) for b in w.images]}))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphmetric", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *files, **kw):
        sp = sub.add_parser(name, **kw)
        for f in files:
            sp.add_argument(f)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(func=fn)
        return sp

    sp = add("weight", cmd_weight, "graph", help="G-weight of a word or support")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--word", help="digits, coordinate 0 first, e.g. 1011")
    grp.add_argument("--support", help="comma separated vertices")
    add("table", cmd_table, "graph", help="full weight table")
    sp = add("canon", cmd_canon, "graph", help="canonical forms")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--expanded", action="store_true", default=True)
    grp.add_argument("--reduced", action="store_true")
    add("same-metric", cmd_same_metric, "graph1", "graph2")
    add("isomorphic", cmd_isomorphic, "graph1", "graph2")
    add("reconstruct", cmd_reconstruct, "table",
        help="expanded form from singleton and pair weights (a matching may be missing)")
    sp = add("certificate", cmd_certificate, "graph")
    sp.add_argument("--verify", action="store_true", help="check uniqueness (n <= 5)")
    add("isometry-check", cmd_isometry_check, "graph", "map")
    add("decompose-isometry", cmd_decompose_isometry, "graph", "map")
    sp = add("group-order", cmd_group_order, "graph")
    sp.add_argument("--q", type=int, default=2)
    add("code-decompose", cmd_code_decompose, "graph", "code")
    add("min-distance", cmd_min_distance, "graph", "code")
    sp = add("packing-radius", cmd_packing_radius, "graph", "code")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--formula", action="store_true")
    grp.add_argument("--brute", action="store_true")
    sp = add("enumerator", cmd_enumerator, "graph", "code")
    sp.add_argument("--dual", action="store_true", help="enumerate the dual code under the reverse graph")
    add("udp", cmd_udp, "graph")
    add("omega", cmd_omega, "graph")
    sp = add("macwilliams-check", cmd_macwilliams_check, "graph")
    sp.add_argument("--max-dim", type=int, default=2)
    sp.add_argument("--q", type=int, default=2)
    sp = add("extension-check", cmd_extension_check, "graph")
    sp.add_argument("--dim-cap", type=int, default=2)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphMetricError, ValueError, IndexError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

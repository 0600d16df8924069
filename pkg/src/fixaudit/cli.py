"""Command-line front end.

Exit codes: 0 success, 1 an audit found violations, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import coloring, fixation, planarity
from .audit import CLAIMS, AuditConfig, ConfigError, CorpusSpec, run_audit
from .audit.corpus import exhaustive_upto, family as family_source, ingest
from .audit.report import draw_graph, plot_audit_summary, render_text, write_reports
from .families import generate, parse_family
from .formats import FORMATS, emit_graph, parse_graph, parse_inline_edges
from .graph import CycleRef, GraphError


class UsageError(Exception):
    pass


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gen", metavar="FAMILY[:P,...]", help="generated family, e.g. cf_chain:3")
    src.add_argument("--edges", metavar="U-V,...", help='inline edge list, e.g. "0-1,1-2,0-2"')
    src.add_argument("--input", metavar="PATH", help="graph file ('-' for stdin)")
    p.add_argument("--format", choices=("edge-list", "graph6"), help="input format (default: by extension)")
    p.add_argument("--seed", type=int, help="seed for randomised families")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", metavar="PATH", help="write here; a .json suffix selects JSON")


def _load_graph(args):
    if args.gen:
        name, params = parse_family(args.gen)
        if name == "apollonian" and args.seed is not None and len(params) == 1:
            params = (params[0], args.seed)
        return generate(name, *params)
    if args.edges:
        return parse_inline_edges(args.edges)
    if args.input == "-":
        text = sys.stdin.read()
        fmt = args.format or "edge-list"
    else:
        path = Path(args.input)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from None
        fmt = args.format or ("graph6" if path.suffix in (".g6", ".graph6") else "edge-list")
    return parse_graph(text, fmt)


def _k(args, g):
    return args.k if args.k is not None else coloring.chromatic_number(g)


def _emit(args, payload: dict, text: str) -> None:
    if args.out and args.out.endswith(".json"):
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    elif args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _vertex_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated vertex ids, got {text!r}") from None


def cmd_chroma(args):
    g = _load_graph(args)
    chi = coloring.chromatic_number(g)
    _emit(args, {"chromatic_number": chi}, f"{chi}\n")
    return 0


def cmd_colorings(args):
    g = _load_graph(args)
    k = _k(args, g)
    cols = coloring.enumerate_colorings(g, k)
    payload = {"k": k, "count": len(cols), "colorings": [[list(c) for c in col.classes] for col in cols]}
    text = f"{len(cols)}\n"
    if args.list:
        text += "".join(" | ".join(" ".join(map(str, c)) for c in col.classes) + "\n" for col in cols)
    _emit(args, payload, text)
    return 0


def cmd_critical(args):
    g = _load_graph(args)
    k = _k(args, g)
    ans = coloring.is_k_critical(g, k)
    _emit(args, {"k": k, "critical": ans}, f"{str(ans).lower()}\n")
    return 0


def cmd_ci(args):
    g = _load_graph(args)
    k = _k(args, g)
    pairs = fixation.ci_pairs(g, k)
    rows = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            enum = (u, v) in pairs
            oracle = fixation.ci_pair_oracle(g, k, u, v)
            if enum or oracle:
                rows.append({"pair": [u, v], "enumeration": enum, "oracle": oracle})
    agree = all(r["enumeration"] == r["oracle"] for r in rows)
    lines = [f"{r['pair'][0]} {r['pair'][1]}" + ("" if r["enumeration"] == r["oracle"] else "  DISAGREE")
             for r in rows]
    lines.append(f"# {sum(r['enumeration'] for r in rows)} CI_{k} pair(s); methods agree: {'yes' if agree else 'no'}")
    _emit(args, {"k": k, "pairs": rows, "methods_agree": agree}, "\n".join(lines) + "\n")
    return 0


def cmd_fix(args):
    g = _load_graph(args)
    k = _k(args, g)
    if args.r or args.s:
        if not (args.r and args.s):
            raise UsageError("--r and --s must be given together")
        r, s = _vertex_list(args.r), _vertex_list(args.s)
        ans = fixation.is_color_fixed(g, k, r, s)
        _emit(args, {"k": k, "r": list(r), "s": list(s), "color_fixed": ans}, f"{str(ans).lower()}\n")
        return 0
    ref = CycleRef(_vertex_list(args.reference)) if args.reference else coloring.default_reference(g)
    labelings = coloring.pinned_labelings(g, ref, k)
    fixed = fixation.fixed_elements(g, ref, k, labelings)
    payload = {
        "k": k,
        "reference": list(ref.vertices),
        "labelings": [list(lab.colors) for lab in labelings],
        "fixed_vertices": {str(v): c for v, c in sorted(fixed.fixed_vertices.items())},
        "fixed_edges": [[u, v, list(c)] for (u, v), c in sorted(fixed.fixed_edges.items())],
    }
    lines = [f"reference {' '.join(map(str, ref.vertices))}; {len(labelings)} pinned labeling(s)"]
    lines += ["labeling " + " ".join(f"{v}:{c}" for v, c in enumerate(lab.colors)) for lab in labelings]
    lines.append("fixed vertices " + " ".join(f"{v}:{c}" for v, c in sorted(fixed.fixed_vertices.items())))
    lines.append("fixed edges " + " ".join(f"{u}-{v}:{a}{b}" for (u, v), (a, b) in sorted(fixed.fixed_edges.items())))
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def cmd_chains(args):
    g = _load_graph(args)
    inc = fixation.fixation_incidence(g, args.max_cycle_len)
    chains = fixation.extract_chains(inc)
    anomalies = fixation.chain_anomalies(inc)
    payload = {
        "incidence": [[v, list(c.vertices)] for v, c in sorted(inc.pairs, key=lambda p: (p[0], len(p[1]), p[1].vertices))],
        "chains": [ch.to_json() for ch in chains],
        "anomalies": anomalies,
    }
    lines = [f"{len(inc.pairs)} incidence pair(s), {len(chains)} chain(s)"]
    for ch in chains:
        nodes = " ".join(str(n) if isinstance(n, int) else "(" + ",".join(map(str, n.vertices)) + ")" for n in ch.nodes)
        extra = "".join(f" +{v}:({','.join(map(str, c.vertices))})" for v, c in sorted(ch.branches, key=lambda b: (b[0], b[1].vertices)))
        lines.append(f"chain {nodes}{extra}")
    lines += [f"anomaly {json.dumps(a)}" for a in anomalies]
    _emit(args, payload, "\n".join(lines) + "\n")
    if args.figure:
        draw_graph(g, args.figure, chains, title=f"{len(chains)} fixation chain(s)")
    return 0


def cmd_adjaceable(args):
    g = _load_graph(args)
    ans = planarity.adjaceable(g, args.u, args.v)
    _emit(args, {"u": args.u, "v": args.v, "adjaceable": ans}, f"{str(ans).lower()}\n")
    return 0


def cmd_gen(args):
    name, params = parse_family(args.family)
    if name == "apollonian" and args.seed is not None and len(params) == 1:
        params = (params[0], args.seed)
    g = generate(name, *params)
    _write_graph(args, emit_graph(g, args.to))
    return 0


def cmd_convert(args):
    g = _load_graph(args)
    _write_graph(args, emit_graph(g, args.to))
    return 0


def _write_graph(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _corpus_spec(args) -> CorpusSpec:
    sources = []
    if args.exhaustive is not None:
        sources += exhaustive_upto(args.exhaustive, args.min_order)
    for fam in args.family or ():
        sources.append(family_source(fam))
    for path in args.ingest or ():
        sources.append(ingest(path))
    if not sources:
        raise UsageError("audit needs at least one of --exhaustive, --family, --ingest")
    filters = []
    if args.connected:
        filters.append("connected")
    if args.planar:
        filters.append("planar")
    if args.chromatic is not None:
        filters.append(f"chromatic={args.chromatic}")
    return CorpusSpec(tuple(sources), tuple(filters))


def cmd_audit(args):
    claims = list(CLAIMS) if args.claims == ["all"] else args.claims
    for c in claims:
        if c not in CLAIMS:
            raise UsageError(f"unknown claim {c!r}; choose from {', '.join(CLAIMS)} or 'all'")
    spec = _corpus_spec(args)
    cfg = AuditConfig(max_cycle_len=args.max_cycle_len, minimize=not args.no_minimize, jobs=args.jobs)

    def progress(i, total):
        if args.progress and (i == total or i % 100 == 0):
            print(f"\r{i}/{total}", end="\n" if i == total else "", file=sys.stderr)

    reports = [run_audit(c, spec, cfg, progress) for c in claims]
    if args.out:
        write_reports(reports, args.out)
    sys.stdout.write("".join(render_text(r) for r in reports))
    if args.csv:
        write_reports(reports, args.csv if args.csv.endswith(".csv") else args.csv + ".csv")
    if args.figure:
        plot_audit_summary(reports, args.figure)
    return 1 if any(r.violations for r in reports) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fixaudit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chroma", help="chromatic number")
    _add_graph_input(p)
    _add_output(p)
    p.set_defaults(func=cmd_chroma)

    p = sub.add_parser("colorings", help="count or list proper partitions")
    _add_graph_input(p)
    p.add_argument("--k", type=int)
    p.add_argument("--list", action="store_true")
    _add_output(p)
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("critical", help="k-criticality")
    _add_graph_input(p)
    p.add_argument("--k", type=int)
    _add_output(p)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("ci", help="CI pairs by enumeration, cross-checked by the chromatic oracle")
    _add_graph_input(p)
    p.add_argument("--k", type=int)
    _add_output(p)
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("fix", help="color fixation query or fixed elements under a reference triangle")
    _add_graph_input(p)
    p.add_argument("--k", type=int)
    p.add_argument("--reference", metavar="A,B,C", help="reference odd cycle (default: least triangle)")
    p.add_argument("--r", metavar="V,...", help="fixing vertex set")
    p.add_argument("--s", metavar="V,...", help="fixed vertex set")
    _add_output(p)
    p.set_defaults(func=cmd_fix)

    p = sub.add_parser("chains", help="fixation incidence and chains")
    _add_graph_input(p)
    p.add_argument("--max-cycle-len", type=int)
    p.add_argument("--figure", metavar="PNG", help="draw the graph with chain vertex nodes highlighted")
    _add_output(p)
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("adjaceable", help="can u and v be joined keeping the graph planar")
    _add_graph_input(p)
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    _add_output(p)
    p.set_defaults(func=cmd_adjaceable)

    p = sub.add_parser("gen", help="generate a family member")
    p.add_argument("family", metavar="FAMILY[:P,...]")
    p.add_argument("--seed", type=int)
    p.add_argument("--to", choices=FORMATS, default="edge-list")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("convert", help="convert between graph formats")
    _add_graph_input(p)
    p.add_argument("--to", choices=FORMATS, required=True)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("audit", help="audit claims over a corpus")
    p.add_argument("claims", nargs="+", metavar="CLAIM", help=f"{', '.join(CLAIMS)} or 'all'")
    p.add_argument("--exhaustive", type=int, metavar="N", help="all connected graphs on MIN..N vertices")
    p.add_argument("--min-order", type=int, default=1, metavar="MIN")
    p.add_argument("--family", action="append", metavar="FAMILY[:P,...]")
    p.add_argument("--ingest", action="append", metavar="PATH", help="graph6 file, one graph per line")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--planar", action="store_true")
    p.add_argument("--chromatic", type=int, metavar="K")
    p.add_argument("--max-cycle-len", type=int)
    p.add_argument("--no-minimize", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", metavar="PATH", help=".json, .csv or text report")
    p.add_argument("--csv", metavar="PATH", help="also write violations as CSV")
    p.add_argument("--figure", metavar="PNG", help="bar chart of instances and violations")
    p.add_argument("--progress", action="store_true", help="counter on stderr")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ConfigError) as exc:
        print(f"fixaudit {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

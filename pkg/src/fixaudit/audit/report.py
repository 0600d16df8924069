"""Report writers: JSON, CSV, plain text and matplotlib figures."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .harness import AuditReport  # noqa: E402

CSV_FIELDS = ("claim", "graph6", "kind", "witness", "minimized_graph6")


def to_json_text(reports) -> str:
    if isinstance(reports, AuditReport):
        payload = reports.to_json()
    else:
        payload = [r.to_json() for r in reports]
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def to_csv_text(reports) -> str:
    if isinstance(reports, AuditReport):
        reports = [reports]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in reports:
        for v in r.violations:
            writer.writerow([
                r.claim,
                v["graph6"],
                v["witness"].get("kind", ""),
                json.dumps(v["witness"], sort_keys=True),
                v.get("minimized_graph6") or "",
            ])
    return buf.getvalue()


def render_text(report: AuditReport) -> str:
    verdict = "PASS" if report.passed else "VIOLATIONS"
    lines = [
        f"claim {report.claim}: {verdict}",
        f"  corpus: {', '.join(report.corpus['sources'])}"
        + (f" | filters: {', '.join(report.corpus['filters'])}" if report.corpus["filters"] else ""),
        f"  graphs checked: {report.graphs_checked}  skipped: {report.skipped}",
        f"  instances checked: {report.instances_checked}  violations: {len(report.violations)}",
        f"  runtime: {report.runtime_ms:.1f} ms",
    ]
    kinds = Counter(v["witness"].get("kind", "?") for v in report.violations)
    for kind, count in sorted(kinds.items()):
        lines.append(f"    {kind}: {count}")
    for v in report.violations[:5]:
        mini = v.get("minimized_graph6")
        lines.append(f"    e.g. {v['graph6']} {json.dumps(v['witness'], sort_keys=True)}"
                     + (f" -> {mini}" if mini else ""))
    return "\n".join(lines) + "\n"


def write_reports(reports, path) -> None:
    """Format chosen by extension: .json, .csv, anything else is text."""
    path = Path(path)
    if isinstance(reports, AuditReport):
        reports = [reports]
    if path.suffix == ".json":
        text = to_json_text(reports[0] if len(reports) == 1 else reports)
    elif path.suffix == ".csv":
        text = to_csv_text(reports)
    else:
        text = "".join(render_text(r) for r in reports)
    path.write_text(text, encoding="utf-8")


def plot_audit_summary(reports, path) -> None:
    """Bar chart of instances checked against violations found, per claim."""
    if isinstance(reports, AuditReport):
        reports = [reports]
    claims = [r.claim for r in reports]
    checked = [r.instances_checked for r in reports]
    bad = [len(r.violations) for r in reports]
    x = range(len(claims))
    fig, ax = plt.subplots(figsize=(max(4, 0.9 * len(claims) + 2), 3.5))
    ax.bar([i - 0.2 for i in x], [c + 1 for c in checked], width=0.4, label="instances checked", color="#4c72b0")
    ax.bar([i + 0.2 for i in x], [b + 1 for b in bad], width=0.4, label="violations", color="#c44e52")
    ax.set_yscale("log")
    ax.set_ylabel("count + 1")
    ax.set_xticks(list(x))
    ax.set_xticklabels(claims)
    ax.legend(frameon=False, fontsize=8)
    ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def draw_graph(g, path, chains=(), title: str | None = None) -> None:
    """Draw ``g`` (planar layout when possible) with chain vertex nodes highlighted."""
    import networkx as nx

    from ..planarity import is_planar, to_networkx

    h = to_networkx(g)
    pos = nx.planar_layout(h) if is_planar(g) else nx.spring_layout(h, seed=0)
    palette = plt.get_cmap("tab10")
    node_color = ["#dddddd"] * g.n
    for i, ch in enumerate(chains):
        for v in ch.vertex_nodes:
            node_color[v] = palette(i % 10)
    fig, ax = plt.subplots(figsize=(5, 5))
    nx.draw_networkx_edges(h, pos, ax=ax, edge_color="#888888")
    nx.draw_networkx_nodes(h, pos, ax=ax, node_color=node_color, edgecolors="black", node_size=320)
    nx.draw_networkx_labels(h, pos, ax=ax, font_size=8)
    if title:
        ax.set_title(title, fontsize=10)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)

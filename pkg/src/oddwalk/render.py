"""DOT, TikZ, and JSON emitters for gadgets, graphs, and level quotients.

Gadget renderings color vertices by birth level: the top-level join path
gets the current level's color, copied vertices keep the color of the level
they were born at.  Headers record the parameter prefix and a size note:
this recursion is based at a single vertex, and an otherwise identical
recursion based at a single edge yields larger counts (38 instead of 30
vertices for the prefix 1,3,5), so both totals are stated to avoid
confusion when comparing drawings from elsewhere.
"""

from __future__ import annotations

from .gadget import PathGadget
from .graphs import WitnessedGraph
from .limitgraph import LevelQuotient

PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def _edge_base_count(prefix) -> int:
    count = 2
    for c in prefix:
        count = 2 * count + c + 1
    return count


def _prefix_text(prefix) -> str:
    return ",".join(map(str, prefix)) if prefix else "(empty)"


def _gadget_header(g: PathGadget, comment: str) -> list[str]:
    return [
        f"{comment} path gadget for c={_prefix_text(g.prefix)}: "
        f"{g.vertex_count} vertices, {g.edge_count} edges",
        f"{comment} size note: recursion based at a single vertex; an "
        f"edge-based variant yields {_edge_base_count(g.prefix)} vertices "
        f"for this prefix",
    ]


def gadget_to_dot(g: PathGadget) -> str:
    lines = _gadget_header(g, "//")
    lines += ["graph gadget {", "  rankdir=LR;",
              '  node [style=filled, fontcolor=white];']
    for i, v in enumerate(g.vertices):
        color = PALETTE[g.birth_level(v) % len(PALETTE)]
        lines.append(f'  n{i} [label="{v.label}", fillcolor="{color}"];')
    for i in range(g.edge_count):
        lines.append(f"  n{i} -- n{i + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def gadget_to_tikz(g: PathGadget) -> str:
    lines = _gadget_header(g, "%")
    used = sorted({g.birth_level(v) for v in g.vertices})
    for m in used:
        color = PALETTE[m % len(PALETTE)].lstrip("#").upper()
        lines.append(f"\\definecolor{{lvl{m}}}{{HTML}}{{{color}}}")
    lines.append("\\begin{tikzpicture}[x=0.9cm]")
    for i, v in enumerate(g.vertices):
        m = g.birth_level(v)
        lines.append(
            f"  \\node[circle, draw, fill=lvl{m}, text=white, "
            f"inner sep=1pt, font=\\tiny] (n{i}) at ({i}, 0) {{{v.label}}};")
    for i in range(g.edge_count):
        lines.append(f"  \\draw (n{i}) -- (n{i + 1});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def gadget_to_json_dict(g: PathGadget) -> dict:
    return {
        "c": list(g.prefix),
        "oddPrefix": g.odd_prefix,
        "vertexCount": g.vertex_count,
        "edgeCount": g.edge_count,
        "sizeNote": ("single-vertex base recursion; an edge-based variant "
                     f"yields {_edge_base_count(g.prefix)} vertices"),
        "vertices": [{"label": v.label, "k": v.k,
                      "t": "".join(map(str, v.t)),
                      "birthLevel": g.birth_level(v)}
                     for v in g.vertices],
        "edges": [[g.vertices[i].label, g.vertices[i + 1].label]
                  for i in range(g.edge_count)],
    }


def gadget_to_text(g: PathGadget) -> str:
    lines = _gadget_header(g, "#")
    lines.append(" -- ".join(v.label for v in g.vertices))
    return "\n".join(lines) + "\n"


def graph_to_dot(g: WitnessedGraph) -> str:
    lines = [f"// witnessed graph: {len(g.vertices)} vertices, "
             f"{len(g.witnesses)} witnesses",
             "graph g {"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for w in g.witnesses:
        u, v = g.ends[w]
        lines.append(f'  "{u}" -- "{v}" [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_tikz(g: WitnessedGraph) -> str:
    lines = [f"% witnessed graph: {len(g.vertices)} vertices, "
             f"{len(g.witnesses)} witnesses",
             "\\begin{tikzpicture}[x=1.2cm]"]
    for i, v in enumerate(g.vertices):
        lines.append(
            f"  \\node[circle, draw, inner sep=1pt, font=\\small] "
            f"(v{i}) at ({i}, 0) {{{v}}};")
    index = {v: i for i, v in enumerate(g.vertices)}
    for w in g.witnesses:
        u, v = g.ends[w]
        lines.append(
            f"  \\draw (v{index[u]}) to[bend left] (v{index[v]});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def quotient_to_dot(q: LevelQuotient) -> str:
    g = q.gadget
    lines = [f"// level quotient for c={_prefix_text(q.prefix)}: "
             f"{g.vertex_count} classes",
             "graph quotient {", "  rankdir=LR;"]
    for i, (m, k, t) in enumerate(q.classes):
        bits = "".join(map(str, t)) or "-"
        color = PALETTE[m % len(PALETTE)]
        lines.append(
            f'  n{i} [label="m={m} k={k} t={bits}", style=filled, '
            f'fontcolor=white, fillcolor="{color}"];')
    for i in range(g.edge_count):
        lines.append(f"  n{i} -- n{i + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"

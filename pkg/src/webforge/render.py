"""Diagram export: radial layout, DOT, TikZ, and matplotlib figures.

Layout is purely radial: boundary vertices sit on the unit circle at
their slot angles and interior vertices settle by fixed-boundary
barycentric averaging.  No layout logic beyond the stored rotation
system is applied; exports are deterministic.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .webs import WHITE, WebDiagram


def layout(w: WebDiagram) -> dict[int, tuple[float, float]]:
    """Vertex id -> (x, y), boundary on the unit circle, ccw from east."""
    pos: dict[int, tuple[float, float]] = {}
    for a in range(1, w.n + 1):
        theta = 2 * math.pi * (a - 1) / w.n
        pos[a] = (math.cos(theta), math.sin(theta))
    interior = w.interior()
    if not interior:
        return pos

    adj: dict[int, list[int]] = {v: [] for v in interior}
    for _, u, v, _ in w.edges:
        if u in adj:
            adj[u].append(v)
        if v in adj:
            adj[v].append(u)

    # Seed each interior vertex near the centroid of its boundary
    # neighbours, nudged by its id so coincident seeds separate.
    for i, v in enumerate(sorted(interior)):
        bnd = [pos[u] for u in adj[v] if u in pos]
        if bnd:
            cx = sum(p[0] for p in bnd) / len(bnd)
            cy = sum(p[1] for p in bnd) / len(bnd)
        else:
            cx = cy = 0.0
        angle = 0.7 * i
        pos[v] = (0.6 * cx + 0.05 * math.cos(angle), 0.6 * cy + 0.05 * math.sin(angle))

    for _ in range(300):
        for v in interior:
            xs = [pos[u][0] for u in adj[v]]
            ys = [pos[u][1] for u in adj[v]]
            if xs:
                pos[v] = (sum(xs) / len(xs), sum(ys) / len(ys))
    return pos


def _weight_label(weights, eid) -> str | None:
    if weights is None:
        return None
    wt = weights.get(eid)
    if wt is None or wt == 1:
        return None
    return str(wt)


def to_dot(w: WebDiagram, weights=None) -> str:
    """Graphviz source with pinned radial positions."""
    pos = layout(w)
    lines = ["graph web {", "  layout=neato;", "  node [fontsize=10];"]
    for a in range(1, w.n + 1):
        x, y = pos[a]
        lines.append(
            f'  v{a} [label="{a}", shape=plaintext, pos="{2 * x:.3f},{2 * y:.3f}!"];')
    for v, c in w.colors:
        x, y = pos[v]
        fill = "white" if c == WHITE else "black"
        font = ', fontcolor="white"' if c != WHITE else ""
        lines.append(
            f'  v{v} [label="", shape=circle, width=0.18, style=filled, '
            f'fillcolor="{fill}"{font}, pos="{2 * x:.3f},{2 * y:.3f}!"];')
    for e, u, v, m in w.edges:
        attrs = []
        if m > 1:
            attrs.append(f'label="{m}"')
            attrs.append("penwidth=2")
        lbl = _weight_label(weights, e)
        if lbl is not None:
            attrs.append(f'xlabel="{lbl}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  v{u} -- v{v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_tikz(w: WebDiagram, weights=None) -> str:
    """Standalone tikzpicture with the same radial coordinates."""
    pos = layout(w)
    lines = [
        "\\begin{tikzpicture}[scale=2.2]",
        "  \\draw[dashed, gray] (0,0) circle (1);",
    ]
    for e, u, v, m in w.edges:
        style = "very thick" if m > 1 else "thick"
        xu, yu = pos[u]
        xv, yv = pos[v]
        mid = ""
        if m > 1:
            mid = f" node[midway, fill=white, inner sep=1pt] {{\\scriptsize {m}}}"
        lbl = _weight_label(weights, e)
        if lbl is not None:
            mid += f" node[midway, above, sloped] {{\\tiny {lbl}}}"
        lines.append(
            f"  \\draw[{style}] ({xu:.3f},{yu:.3f}) -- ({xv:.3f},{yv:.3f}){mid};")
    for a in range(1, w.n + 1):
        x, y = pos[a]
        lines.append(
            f"  \\node[circle, fill, inner sep=1.2pt, "
            f"label={{{360 * (a - 1) / w.n:.0f}:{a}}}] at ({x:.3f},{y:.3f}) {{}};")
    for v, c in w.colors:
        x, y = pos[v]
        fill = "fill=white, draw" if c == WHITE else "fill=black"
        lines.append(
            f"  \\node[circle, {fill}, inner sep=2pt] at ({x:.3f},{y:.3f}) {{}};")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def draw_web(w: WebDiagram, path: str, title: str | None = None, weights=None) -> str:
    """Render the diagram to an image file and return the path."""
    pos = layout(w)
    fig, ax = plt.subplots(figsize=(5, 5))
    circle = plt.Circle((0, 0), 1.0, fill=False, linestyle="--",
                        color="0.7", linewidth=0.8)
    ax.add_patch(circle)
    for e, u, v, m in w.edges:
        xu, yu = pos[u]
        xv, yv = pos[v]
        ax.plot([xu, xv], [yu, yv], color="0.2", linewidth=1.0 + 0.8 * (m - 1),
                zorder=1)
        labels = []
        if m > 1:
            labels.append(str(m))
        lbl = _weight_label(weights, e)
        if lbl is not None:
            labels.append(lbl)
        if labels:
            ax.annotate("/".join(labels), ((xu + xv) / 2, (yu + yv) / 2),
                        fontsize=8, ha="center", va="center",
                        bbox=dict(boxstyle="round,pad=0.1", fc="white", ec="none"),
                        zorder=3)
    for a in range(1, w.n + 1):
        x, y = pos[a]
        ax.scatter([x], [y], s=30, color="black", zorder=2)
        ax.annotate(str(a), (1.12 * x, 1.12 * y), fontsize=9,
                    ha="center", va="center")
    for v, c in w.colors:
        x, y = pos[v]
        face = "white" if c == WHITE else "black"
        ax.scatter([x], [y], s=90, facecolor=face, edgecolor="black",
                   linewidth=1.0, zorder=2)
    if title:
        ax.set_title(title, fontsize=10)
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path

"""Figure rendering for graph reports: circular layouts and degree histograms."""

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

LABEL_LIMIT = 48


def save_graph_figure(g, path, title: str | None = None) -> str:
    """Draw the graph on a circle and write it to path; returns the path."""
    n = g.n
    xs = [math.cos(2 * math.pi * k / n - math.pi / 2) for k in range(n)]
    ys = [math.sin(2 * math.pi * k / n - math.pi / 2) for k in range(n)]

    fig, ax = plt.subplots(figsize=(6.4, 6.4))
    for u, v in g.edges():
        ax.plot([xs[u], xs[v]], [ys[u], ys[v]], color="#4878a8", linewidth=0.8, alpha=0.7, zorder=1)
    ax.scatter(xs, ys, s=60, color="#20324c", zorder=2)

    ring = getattr(g, "ring", None)
    if n <= LABEL_LIMIT:
        for k in range(n):
            label = str(ring.element(k)) if ring is not None else str(k)
            ax.annotate(
                label,
                (1.12 * xs[k], 1.12 * ys[k]),
                ha="center",
                va="center",
                fontsize=8,
            )
    if title is None and ring is not None:
        title = f"{ring.spec.text()}  (order {g.n}, degree {g.reg_degree})"
    if title:
        ax.set_title(title)
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)


def save_degree_histogram(g, path, title: str | None = None) -> str:
    """Bar chart of the degree distribution (a single spike for these graphs)."""
    counts = {}
    for u in range(g.n):
        d = g.degree(u)
        counts[d] = counts.get(d, 0) + 1
    degrees = sorted(counts)

    fig, ax = plt.subplots(figsize=(5.2, 3.6))
    ax.bar([str(d) for d in degrees], [counts[d] for d in degrees], color="#4878a8")
    ax.set_xlabel("degree")
    ax.set_ylabel("vertices")
    ring = getattr(g, "ring", None)
    if title is None and ring is not None:
        title = f"degree distribution of {ring.spec.text()}"
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)

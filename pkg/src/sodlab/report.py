"""Rendering of verification reports: delimited files and figures.

Matplotlib is imported lazily so that the computational paths never pay
for it; figures are always written to files (Agg backend), never shown.
"""

from __future__ import annotations

import csv
import os

_STATUS_COLORS = {"pass": "#2a9d8f", "fail": "#e76f51", "inconclusive": "#e9c46a"}


def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def write_checks_csv(checks, path):
    """One row per check: name, status, detail."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name", "status", "detail"])
        for check in checks:
            writer.writerow([check["name"], check["status"], check["detail"]])


def write_checks_figure(checks, path, title=""):
    """Horizontal status strip, one bar per check."""
    plt = _plt()
    names = [c["name"] for c in checks]
    colors = [_STATUS_COLORS.get(c["status"], "#888888") for c in checks]
    height = max(1.5, 0.32 * len(names) + 0.8)
    fig, ax = plt.subplots(figsize=(8, height))
    ax.barh(range(len(names)), [1] * len(names), color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xticks([])
    for spine in ax.spines.values():
        spine.set_visible(False)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_components_csv(components, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["position", "i", "lambda", "aSequence", "target", "kernel"])
        for pos, comp in enumerate(components):
            lam = ",".join(str(p) for p in comp.lam) if comp.lam else "0"
            seq = ",".join(str(a) for a in comp.a_seq)
            writer.writerow([pos, comp.i, lam, seq, comp.target, comp.kernel])


def write_components_figure(components, r, d, path):
    """Grid of Young diagrams, one cell per component in order."""
    plt = _plt()
    count = len(components)
    cols = min(8, max(count, 1))
    rows = (count + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(1.6 * cols, 1.8 * rows))
    axes = getattr(axes, "flat", [axes])
    axes = list(axes)
    for ax in axes[count:]:
        ax.axis("off")
    for pos, (comp, ax) in enumerate(zip(components, axes)):
        ax.set_xlim(-0.5, max(r, 1) + 0.5)
        ax.set_ylim(-max(r, 1) - 0.5, 0.5)
        ax.set_aspect("equal")
        ax.axis("off")
        for row_idx, width in enumerate(comp.lam):
            for col_idx in range(width):
                ax.add_patch(plt.Rectangle(
                    (col_idx, -row_idx - 1), 1, 1,
                    facecolor="#457b9d", edgecolor="white",
                ))
        if not comp.lam:
            ax.plot([0], [-0.5], marker="o", color="#adb5bd", markersize=3)
        lam = ",".join(str(p) for p in comp.lam) if comp.lam else "0"
        ax.set_title(f"{pos}: ({comp.i},({lam}))", fontsize=7)
    fig.suptitle(f"components for r={r}, d={d}", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_table_csv(table, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["copies", "target", "index", "virtualDim"])
        for row in table.rows:
            writer.writerow([row.copies, row.target, row.index,
                             "" if row.virtual_dim is None else row.virtual_dim])


def write_table_figure(table, path):
    """Bar chart of copy counts (and virtual dimensions when present)."""
    plt = _plt()
    labels = [row.target for row in table.rows]
    copies = [row.copies for row in table.rows]
    fig, ax = plt.subplots(figsize=(max(4, 1.0 * len(labels)), 3.2))
    bars = ax.bar(range(len(labels)), copies, color="#457b9d")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, fontsize=8, rotation=30, ha="right")
    ax.set_ylabel("copies")
    for bar, row in zip(bars, table.rows):
        if row.virtual_dim is not None:
            ax.text(bar.get_x() + bar.get_width() / 2, bar.get_height(),
                    f"vdim {row.virtual_dim}", ha="center", va="bottom",
                    fontsize=7)
    ax.set_title(table.title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report(report, figures_dir, stem):
    """Write the CSV and PNG pair for a verification report."""
    os.makedirs(figures_dir, exist_ok=True)
    checks = [c for c in report["checks"]]
    csv_path = os.path.join(figures_dir, f"{stem}.csv")
    png_path = os.path.join(figures_dir, f"{stem}.png")
    write_checks_csv(checks, csv_path)
    write_checks_figure(checks, png_path, title=report.get("command", ""))
    return [csv_path, png_path]

"""Delimited output and figures for search reports.

CSV columns are q,k,r,exists,witness with the witness rendered as
space-separated scalar encodings so the file stays one row per field.
The frontier figure plots the empirical existence verdicts against the
guaranteed-existence threshold B(k, r).
"""

import csv
from pathlib import Path
from typing import Iterable, Sequence, TextIO, Union

from .bounds import existence_threshold
from .search import FrontierRow, SearchReport

CSV_HEADER = ("q", "k", "r", "exists", "witness")


def _render_exists(exists) -> str:
    if exists is None:
        return "unknown"
    return "true" if exists else "false"


def _render_witness(witness) -> str:
    return " ".join(str(v) for v in witness) if witness else ""


def _rows(items: Iterable[Union[SearchReport, FrontierRow]]):
    for it in items:
        witness = it.first_witness if isinstance(it, SearchReport) else it.witness
        yield (it.q, it.k, it.r, _render_exists(it.exists), _render_witness(witness))


def write_csv(items: Sequence[Union[SearchReport, FrontierRow]],
              out: Union[str, Path, TextIO]) -> None:
    """Write search/frontier rows as CSV to a path or open text stream."""
    if isinstance(out, (str, Path)):
        with open(out, "w", newline="") as fh:
            write_csv(items, fh)
        return
    writer = csv.writer(out)
    writer.writerow(CSV_HEADER)
    for row in _rows(items):
        writer.writerow(row)


def render_frontier_figure(rows: Sequence[FrontierRow], path: Union[str, Path]) -> Path:
    """Plot the existence frontier for one (k, r) and save it to ``path``.

    Green markers: a super-regular scalar set exists; red: exhaustively
    ruled out; gray: undecided within budget.  The dashed line marks the
    threshold above which existence is guaranteed.
    """
    if not rows:
        raise ValueError("no rows to plot")
    k, r = rows[0].k, rows[0].r
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.0, 3.2))
    groups = {
        True: (1.0, "exists", "tab:green", "o"),
        False: (0.0, "none", "tab:red", "x"),
        None: (0.5, "unknown", "0.6", "s"),
    }
    for verdict, (y, label, color, marker) in groups.items():
        qs = [row.q for row in rows if row.exists is verdict]
        if qs:
            ax.scatter(qs, [y] * len(qs), c=color, marker=marker,
                       label=label, zorder=3)
    threshold = existence_threshold(k, r)
    ax.axvline(threshold, color="tab:blue", linestyle="--", linewidth=1,
               label=f"guaranteed above B={threshold}")
    ax.set_yticks([0, 1])
    ax.set_yticklabels(["no", "yes"])
    ax.set_xlabel("field size q")
    ax.set_ylabel("super-regular set exists")
    ax.set_title(f"{k} x {r} Vandermonde super-regularity frontier")
    ax.legend(loc="center right", fontsize=8)
    ax.grid(True, axis="x", alpha=0.3)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path

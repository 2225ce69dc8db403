"""Report rendering: delimited data plus matplotlib figures.

``write_report(n, k, outdir)`` writes, side by side, a CSV and a PNG for
the dimension-statistic distribution on W(n,k) and for the Hilbert
series of the three-family quotients at (n, k).  Figures are rendered
headlessly (Agg) so the command works in batch environments.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .qseries import QPoly
from .quotient import RingSpec, hilbert_series
from .words import mahonian_closed_form, mahonian_distribution


def _write_series_csv(path: Path, header: tuple[str, str], series: QPoly) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for degree, coeff in enumerate(series.to_json()):
            writer.writerow([degree, coeff])


def _bar_figure(path: Path, series: QPoly, title: str, ylabel: str) -> None:
    coeffs = series.to_json() or [0]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(range(len(coeffs)), coeffs, color="#4878a8", edgecolor="black", linewidth=0.6)
    ax.set_xlabel("degree")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.set_xticks(range(len(coeffs)))
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(n: int, k: int, outdir: str | Path) -> list[Path]:
    """Render the (n, k) distributions; returns the written paths."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    mahonian = mahonian_distribution(n, k)
    if mahonian != mahonian_closed_form(n, k):
        raise AssertionError(f"Mahonian identity falsified at ({n}, {k})")
    csv_path = out / f"mahonian_n{n}_k{k}.csv"
    _write_series_csv(csv_path, ("dimension", "words"), mahonian)
    png_path = out / f"mahonian_n{n}_k{k}.png"
    _bar_figure(
        png_path,
        mahonian,
        f"dimension statistic on W({n},{k})",
        "number of words",
    )
    written += [csv_path, png_path]

    hilbert = hilbert_series(RingSpec.R(n, k))
    csv_path = out / f"hilbert_R_n{n}_k{k}.csv"
    _write_series_csv(csv_path, ("degree", "rank"), hilbert)
    png_path = out / f"hilbert_R_n{n}_k{k}.png"
    _bar_figure(
        png_path,
        hilbert,
        f"Hilbert series of the (n,k)=({n},{k}) quotient",
        "graded rank",
    )
    written += [csv_path, png_path]
    return written

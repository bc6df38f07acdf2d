"""Report figures and their CSV companions (headless backend)."""

from __future__ import annotations

import csv
from collections import Counter
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
from matplotlib import pyplot as plt  # noqa: E402


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    return path


def _bar(path: Path, labels: Sequence[str], values: Sequence[float], title: str, ylabel: str) -> Path:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(range(len(values)), values, color="#4c72b0")
    ax.set_xticks(range(len(values)))
    ax.set_xticklabels(labels, rotation=30, ha="right")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def theorem_figures(rows: Sequence[dict], out_dir: str | Path) -> list[Path]:
    """``rows`` carry ``index, family, n, m, max_degree, witness`` per corpus instance."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = [write_csv(out / "theorem.csv", ["index", "family", "n", "m", "max_degree", "witness"],
                       [[r["index"], r["family"], r["n"], r["m"], r["max_degree"], r["witness"]]
                        for r in rows])]
    counts = Counter(r["witness"] for r in rows)
    labels = sorted(counts)
    paths.append(_bar(out / "witness_types.png", labels, [counts[x] for x in labels],
                      "Witness type per instance", "instances"))
    fig, ax = plt.subplots(figsize=(5, 4))
    for fam in sorted({r["family"] for r in rows}):
        pts = [r for r in rows if r["family"] == fam]
        ax.scatter([r["n"] for r in pts], [r["max_degree"] for r in pts], s=12, label=fam)
    ax.set_xlabel("vertices")
    ax.set_ylabel("maximum degree")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(out / "corpus_degrees.png", dpi=120)
    plt.close(fig)
    paths.append(out / "corpus_degrees.png")
    return paths


def ledger_figures(ledger_dict: dict, signatures: Sequence[str], out_dir: str | Path) -> list[Path]:
    """Charges per element before and after discharging, and face signature counts."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    elems = ledger_dict["elements"]
    names = list(elems)
    paths = [write_csv(out / "charges.csv", ["element", "initial", "final"],
                       [[k, elems[k]["initial"], elems[k]["final"]] for k in names])]

    def val(s: str) -> float:
        p, q = s.split("/")
        return int(p) / int(q)

    fig, ax = plt.subplots(figsize=(7, 3.5))
    xs = range(len(names))
    ax.plot(xs, [val(elems[k]["initial"]) for k in names], ".", label="initial", alpha=0.6)
    ax.plot(xs, [val(elems[k]["final"]) for k in names], ".", label="final", alpha=0.8)
    ax.axhline(0, color="grey", lw=0.8)
    ax.set_xlabel("element (vertices, then faces)")
    ax.set_ylabel("charge")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out / "charges.png", dpi=120)
    plt.close(fig)
    paths.append(out / "charges.png")
    counts = Counter(signatures)
    labels = sorted(counts, key=lambda s: (len(s), s))
    paths.append(_bar(out / "face_signatures.png", labels, [counts[x] for x in labels],
                      "Face signatures", "faces"))
    return paths

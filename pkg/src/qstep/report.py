"""Delimited field output and the rendered figure companion."""

from __future__ import annotations

from pathlib import Path

from .scattering import ScatteringSolution
from .wavefield import WaveSample, sample_grid

CSV_HEADER = "x,phi0,phi1,phi2,phi3,rho,j"


def format_field_csv(samples: list[WaveSample]) -> str:
    """CSV text with 17-significant-digit fields; round-trips exactly."""
    lines = [CSV_HEADER]
    for s in samples:
        lines.append(
            ",".join(
                format(value, ".17g")
                for value in (s.x, s.phi0, s.phi1, s.phi2, s.phi3, s.rho, s.j)
            )
        )
    return "\n".join(lines) + "\n"


def write_report(
    sol: ScatteringSolution,
    x_min: float,
    x_max: float,
    n: int,
    out_dir: str,
    stem: str = "field",
) -> tuple[Path, Path]:
    """Write <stem>.csv and the rendered <stem>.png next to each other."""
    samples = sample_grid(sol, x_min, x_max, n)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"{stem}.csv"
    csv_path.write_text(format_field_csv(samples), encoding="utf-8")
    png_path = out / f"{stem}.png"
    _render_components_png(sol, samples, png_path)
    return csv_path, png_path


def _render_components_png(sol: ScatteringSolution, samples: list[WaveSample], path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [s.x for s in samples]
    series = [
        ("phi0", [s.phi0 for s in samples]),
        ("phi1", [s.phi1 for s in samples]),
        ("phi2", [s.phi2 for s in samples]),
        ("phi3", [s.phi3 for s in samples]),
    ]
    fig, axes = plt.subplots(4, 1, sharex=True, figsize=(7.0, 9.0))
    for ax, (label, values) in zip(axes, series):
        ax.plot(xs, values, lw=1.2)
        ax.axvline(0.0, color="0.6", lw=0.8, ls="--")
        ax.axhline(0.0, color="0.85", lw=0.6)
        ax.set_ylabel(label)
    p = sol.params
    axes[0].set_title(
        f"zone {sol.zone.value}:  E = {p.energy:g},  V = ({p.v1:g}, {p.v2:g}, {p.v3:g})"
    )
    axes[-1].set_xlabel("sqrt(V0) x")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

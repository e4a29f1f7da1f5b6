"""Delimited output formatting and figure rendering."""

from qstep import StepPotential, sample_grid, solve_step
from qstep.report import CSV_HEADER, format_field_csv, write_report


def test_csv_round_trip_precision(zone_a_solution):
    samples = sample_grid(zone_a_solution, -2.0, 2.0, 9)
    text = format_field_csv(samples)
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 10
    for line, sample in zip(lines[1:], samples):
        x, phi0, phi1, phi2, phi3, rho, j = map(float, line.split(","))
        # 17 significant digits reproduce the doubles exactly
        assert x == sample.x
        assert (phi0, phi1, phi2, phi3) == (sample.phi0, sample.phi1, sample.phi2, sample.phi3)
        assert rho == sample.rho and j == sample.j


def test_write_report_creates_both_artifacts(tmp_path):
    sol = solve_step(StepPotential(0.2, 1.0, 0.0), 0.6)
    csv_path, png_path = write_report(sol, -6.0, 6.0, 101, tmp_path, stem="zone_c")
    assert csv_path.name == "zone_c.csv"
    assert png_path.name == "zone_c.png"
    assert csv_path.read_text().count("\n") == 102
    assert png_path.stat().st_size > 1000

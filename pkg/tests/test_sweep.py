import csv

import pytest

from luminous.errors import SizeLimitError
from luminous.sweep import format_text, render_figure, report_dict, run_sweep, write_csv


class TestRunSweep:
    def test_covers_every_grid(self):
        report = run_sweep(6)
        assert len(report.cells) == 36
        assert {(c.m, c.n) for c in report.cells} == {
            (m, n) for m in range(1, 7) for n in range(1, 7)
        }

    def test_cell_lookup(self):
        report = run_sweep(5)
        cell = report.cell(2, 5)
        assert (cell.m, cell.n) == (2, 5)
        assert cell.singular and cell.conditions == ("C1",)

    def test_singular_cells_have_even_zero_determinant(self):
        report = run_sweep(6)
        for cell in report.cells:
            if cell.singular:
                assert cell.nullity > 0
                assert not cell.det_odd

    def test_parity_consistent_with_nullity(self):
        # an odd determinant forces full rank mod 2
        report = run_sweep(6)
        for cell in report.cells:
            if cell.det_odd:
                assert cell.nullity == 0

    def test_discrepancy_flag(self):
        report = run_sweep(6)
        for cell in report.cells:
            assert cell.discrepant == (not cell.singular and cell.nullity > 0)

    def test_side_cap(self):
        with pytest.raises(SizeLimitError):
            run_sweep(17)


class TestRendering:
    def test_text_has_discrepancy_section(self):
        text = format_text(run_sweep(4))
        assert "discrepancies" in text
        assert "  4   4      yes" in text  # 4x4 row, singular via C3

    def test_report_dict_shape(self):
        d = report_dict(run_sweep(3))
        assert d["max"] == 3
        assert len(d["cells"]) == 9
        assert {"m", "n", "singular", "conditions", "nullity", "det_parity"} == set(
            d["cells"][0]
        )
        assert isinstance(d["discrepancies"], list)

    def test_csv_written(self, tmp_path):
        report = run_sweep(4)
        path = tmp_path / "sweep.csv"
        write_csv(report, path)
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["m", "n", "singular", "conditions", "nullity", "det_parity"]
        assert len(rows) == 17
        assert rows[1][:2] == ["1", "1"]

    def test_figure_written(self, tmp_path):
        path = tmp_path / "sweep.png"
        render_figure(run_sweep(4), path)
        assert path.stat().st_size > 1000
        assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

"""Acceptance of the plotting component: all nine sets render from a fresh run."""

import pytest

from numcoh_plots.cli import main
from numcoh_plots.recipes import RECIPES, SchemaError
from numcoh_plots.render import render, render_all


class TestRenderAll:
    def test_all_nine_sets_render_one_image_per_panel(self, dataset_dir, tmp_path):
        written = render_all(dataset_dir, tmp_path)
        expected = sum(len(r.inputs) for r in RECIPES.values())
        assert len(written) == expected == 47
        for path in written:
            assert path.exists() and path.stat().st_size > 0
        # one image per CSV sub-panel, names mirroring the inputs
        assert (tmp_path / "fig1.png").exists()
        assert (tmp_path / "fig4_vacuum.png").exists()
        assert (tmp_path / "fig8_eta0.8_taupi2.png").exists()
        assert (tmp_path / "fig9_eta0.1_taupi4shift.png").exists()

    def test_cli_end_to_end(self, dataset_dir, tmp_path):
        code = main(["--in-dir", str(dataset_dir), "--out-dir", str(tmp_path)])
        assert code == 0
        assert len(list(tmp_path.glob("*.png"))) == 47

    def test_cli_single_figure(self, dataset_dir, tmp_path):
        code = main(["--in-dir", str(dataset_dir), "--out-dir", str(tmp_path), "--figure", "fig6"])
        assert code == 0
        assert sorted(p.name for p in tmp_path.glob("*.png")) == [
            "fig6a.png",
            "fig6b.png",
            "fig6c.png",
            "fig6d.png",
        ]


class TestSchemaFailures:
    def test_empty_csv_aborts_with_named_error(self, dataset_dir, tmp_path):
        broken = tmp_path / "broken_in"
        broken.mkdir()
        for name in RECIPES["fig6"].inputs:
            (broken / name).write_text((dataset_dir / name).read_text())
        (broken / "fig6a.csv").write_text("")
        with pytest.raises(SchemaError, match="fig6a.csv"):
            render(RECIPES["fig6"], broken, tmp_path / "out")

    def test_missing_file_nonzero_exit(self, tmp_path, capsys):
        code = main(["--in-dir", str(tmp_path / "nowhere"), "--out-dir", str(tmp_path / "out")])
        assert code == 1
        assert "schema error" in capsys.readouterr().err

    def test_wrong_columns_nonzero_exit(self, dataset_dir, tmp_path, capsys):
        broken = tmp_path / "broken_in"
        broken.mkdir()
        for name in RECIPES["fig9"].inputs:
            (broken / name).write_text((dataset_dir / name).read_text())
        (broken / "fig9_eta0.1_tau0.csv").write_text("n,prob\n0,0.5\n1,0.5\n")
        code = main(
            ["--in-dir", str(broken), "--out-dir", str(tmp_path / "out"), "--figure", "fig9"]
        )
        assert code == 1
        err = capsys.readouterr().err
        assert "p_n" in err

import pytest

from discprox.cli import main

FIG2 = "A 0 0 2\nB 2 0 2\n"
FIG3 = "A 0 0 3\nB 2 0 2\n"


@pytest.fixture
def fig2_scene(tmp_path):
    path = tmp_path / "fig2.scene"
    path.write_text(FIG2)
    return str(path)


@pytest.fixture
def fig3_scene(tmp_path):
    path = tmp_path / "fig3.scene"
    path.write_text(FIG3)
    return str(path)


def test_card_disc(capsys):
    assert main(["card", "--disc", "3"]) == 0
    out = capsys.readouterr().out
    assert "disc\t3\t25\t25\tok" in out


def test_card_circle_zero(capsys):
    assert main(["card", "--circle", "0"]) == 0
    out = capsys.readouterr().out
    assert "circle\t0\tundefined (closed form requires r >= 1)\t1\tskipped" in out


def test_card_above_cap(capsys):
    assert main(["card", "--disc", "100000"]) == 0
    out = capsys.readouterr().out
    assert "disc\t100000\t20000200001\tskipped (enumeration cap)\tskipped" in out


def test_card_raised_cap(capsys):
    assert main(["card", "--circle", "5000", "--enum-cap", "5000"]) == 0
    assert "circle\t5000\t20000\t20000\tok" in capsys.readouterr().out


def test_card_without_radius_is_usage_error(capsys):
    assert main(["card"]) == 1


def test_metric_fig2(fig2_scene, capsys):
    assert main(["metric", "--scene", fig2_scene, "A", "B"]) == 0
    out = capsys.readouterr().out
    assert "card_a=13" in out
    assert "card_b=13" in out
    assert "card_intersection=5" in out
    assert "m=16" in out
    assert "hausdorff=2" in out
    assert "regime: thm1+thm3+collinear" in out
    assert "closed thm1: 16 agree" in out
    assert "closed thm3: 16 agree" in out


def test_metric_identical_discs(tmp_path, capsys):
    path = tmp_path / "same.scene"
    path.write_text("A 0 0 2\nB 0 0 2\n")
    assert main(["metric", "--scene", str(path), "A", "B"]) == 0
    out = capsys.readouterr().out
    assert "m=0" in out and "hausdorff=0" in out
    assert "no closed form applies" in out


def test_metric_disjoint(tmp_path, capsys):
    path = tmp_path / "far.scene"
    path.write_text("A 0 0 1\nB 9 9 1\n")
    assert main(["metric", "--scene", str(path), "A", "B"]) == 0
    out = capsys.readouterr().out
    assert "m=10" in out
    assert "regime: disjoint" in out


def test_metric_unknown_label(fig2_scene, capsys):
    assert main(["metric", "--scene", fig2_scene, "A", "Z"]) == 1


def test_metric_missing_scene(capsys):
    assert main(["metric", "--scene", "/nonexistent.scene", "A", "B"]) == 2


def test_metric_invalid_scene(tmp_path, capsys):
    path = tmp_path / "bad.scene"
    path.write_text("A 0 zz 2\n")
    assert main(["metric", "--scene", str(path), "A", "B"]) == 2
    assert "line 1" in capsys.readouterr().err


def test_verify_sound_formulas(tmp_path, capsys):
    out_path = tmp_path / "report.tsv"
    code = main(["verify", "--max-radius", "4", "--max-offset", "8",
                 "--formulas", "thm1,thm2,thm3", "--out", str(out_path)])
    assert code == 0
    assert "disagreements=0" in capsys.readouterr().out
    assert out_path.read_text() == "R1\tR2\tgamma\tdelta\tregime\toracle_m\tclosed_m\tformula\n"


def test_verify_corollary_disagrees(tmp_path, capsys):
    out_path = tmp_path / "report.tsv"
    code = main(["verify", "--max-radius", "4", "--max-offset", "4",
                 "--formulas", "corollary", "--out", str(out_path)])
    assert code == 3
    report = out_path.read_text()
    assert "3\t2\t2\t0\tthm2+corollary+collinear\t22\t-22\tcorollary" in report
    assert "3\t2\t2\t0\tthm2+corollary+collinear\t22\t26\tcorollary_signfix" in report


def test_verify_zero_radius(capsys):
    assert main(["verify", "--max-radius", "0", "--max-offset", "4"]) == 0
    assert "pairs_checked=0" in capsys.readouterr().out


def test_verify_bad_formula(capsys):
    assert main(["verify", "--max-radius", "2", "--max-offset", "2",
                 "--formulas", "thm9"]) == 1


def test_verify_unwritable_out(capsys):
    assert main(["verify", "--max-radius", "2", "--max-offset", "2",
                 "--out", "/nonexistent-dir/report.tsv"]) == 2


def test_render_ascii_stdout(fig2_scene, capsys):
    assert main(["render", "--scene", fig2_scene]) == 0
    out = capsys.readouterr().out
    assert out.count("X") == 5
    assert ".11XXX22." in out


def test_render_fig3_boundaries(fig3_scene, capsys):
    assert main(["render", "--scene", fig3_scene, "--boundaries"]) == 0
    out = capsys.readouterr().out
    assert out.count("X") == 0 and "o" in out


def test_render_pixmap_to_file(fig2_scene, tmp_path):
    out_path = tmp_path / "fig2.ppm"
    assert main(["render", "--scene", fig2_scene, "--format", "pixmap",
                 "--out", str(out_path)]) == 0
    assert out_path.read_text().startswith("P3\n9 7\n255\n")


def test_render_vector(fig3_scene, capsys):
    assert main(["render", "--scene", fig3_scene, "--format", "vector"]) == 0
    assert capsys.readouterr().out.count('fill="rgb(0,255,0)"') == 8


def test_render_unsupported_format(fig2_scene):
    assert main(["render", "--scene", fig2_scene, "--format", "tiff"]) == 1


def test_no_command_is_usage_error():
    assert main([]) == 1

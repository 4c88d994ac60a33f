from curvlab.curvature import steinerberger_curvature
from curvlab.families import cycle, star
from curvlab.figures import draw_curvature, draw_scan_summary
from curvlab.search import scan_graphs


class TestFigures:
    def test_curvature_figure_renders(self, tmp_path):
        g = star(3)
        sol = steinerberger_curvature(g)
        out = tmp_path / "star.png"
        draw_curvature(g, sol, str(out), title="star")
        assert out.exists() and out.stat().st_size > 1000

    def test_curvature_figure_deterministic(self, tmp_path):
        g = cycle(5)
        sol = steinerberger_curvature(g)
        a, b = tmp_path / "a.png", tmp_path / "b.png"
        draw_curvature(g, sol, str(a))
        draw_curvature(g, sol, str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_scan_summary_renders(self, tmp_path):
        res = scan_graphs(2, 5, "bm-sharp")
        out = tmp_path / "scan.png"
        draw_scan_summary(res, str(out))
        assert out.exists() and out.stat().st_size > 1000

    def test_cli_figure_option(self, tmp_path):
        import subprocess
        import sys

        out = tmp_path / "c6.png"
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "curvlab.cli",
                "curvature",
                "family:cycle(6)",
                "--figure",
                str(out),
            ],
            capture_output=True,
            timeout=300,
        )
        assert proc.returncode == 0
        assert out.exists() and out.stat().st_size > 1000

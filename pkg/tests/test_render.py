"""Layout and diagram export formats."""

import math

from conftest import five_web
from webforge.matchings import NoncrossingMatching
from webforge.webs import claw_web, sl2_web_of_matching
from webforge.render import draw_web, layout, to_dot, to_tikz


class TestLayout:
    def test_boundary_on_circle(self):
        w = sl2_web_of_matching(
            NoncrossingMatching(k=2, arcs=((1, 2), (3, 4))))
        pos = layout(w)
        for a in range(1, 5):
            x, y = pos[a]
            assert math.isclose(x * x + y * y, 1.0, abs_tol=1e-9)
        assert pos[1] == (1.0, 0.0)

    def test_interior_inside(self):
        pos = layout(five_web())
        for v in five_web().interior():
            x, y = pos[v]
            assert x * x + y * y < 1.0


class TestDot:
    def test_tokens(self):
        w = claw_web({1, 2, 3}, k=3)
        src = to_dot(w)
        assert src.startswith("graph web {")
        assert "layout=neato" in src
        assert src.count(" -- ") == 3
        assert 'pos="' in src

    def test_weight_labels(self):
        from fractions import Fraction
        w = claw_web({1, 2}, k=2)
        eids = [e for e, *_ in w.edges]
        src = to_dot(w, {eids[0]: Fraction(1, 3), eids[1]: Fraction(1)})
        assert 'xlabel="1/3"' in src
        # unit weights stay unlabeled
        assert src.count("xlabel") == 1


class TestTikz:
    def test_tokens(self):
        src = to_tikz(five_web())
        assert src.startswith("\\begin{tikzpicture}")
        assert src.rstrip().endswith("\\end{tikzpicture}")
        assert "circle (1)" in src
        # doubled edges carry a midway multiplicity label
        assert "\\scriptsize 2" in src


class TestDraw:
    def test_writes_png(self, tmp_path):
        out = tmp_path / "web.png"
        got = draw_web(five_web(), str(out), title="fixture")
        assert got == str(out)
        assert out.stat().st_size > 0
        assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

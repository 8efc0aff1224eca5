"""SVG rendering: structure, determinism, exact labels, dimension guard."""

import pytest

from catalog import CONFIGS, build, fan_f2_cones
from toricval import DimensionTooHigh, fan_from_cones, slice_complex, weight_subdivision
from toricval.svg import render_slice_complex, render_slice_polyhedron, render_subdivision, render_svg


def test_header_and_size():
    svg = render_slice_polyhedron(build("C1").slice())
    assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600"')
    assert svg.rstrip().endswith("</svg>")


def test_vertex_labels_exact():
    svg = render_slice_polyhedron(build("C1").slice())
    assert ">(0)<" in svg
    assert ">(1)<" in svg


def test_irrational_label_exact():
    svg = render_slice_polyhedron(build("C1S").slice())
    assert ">(sqrt(2))<" in svg


def test_two_dim_box_labels():
    svg = render_slice_polyhedron(build("BOXS2").slice())
    assert ">(1, sqrt(2))<" in svg
    assert "<polygon" in svg


def test_recession_rays_drawn_dashed():
    svg = render_slice_polyhedron(build("QUADZ").slice())
    assert "stroke-dasharray" in svg


def test_dimension_guard():
    with pytest.raises(DimensionTooHigh):
        render_slice_polyhedron(build("SIMP3").slice())


def test_slice_complex_render():
    sc = slice_complex(fan_from_cones(fan_f2_cones()))
    svg = render_slice_complex(sc)
    assert svg.count("<line") >= 1
    assert ">(0)<" in svg and ">(1)<" in svg


def test_subdivision_render_heights_noted():
    cfg = CONFIGS["square"]()
    svg = render_subdivision(weight_subdivision(cfg), cfg)
    assert svg.count("<polygon") == 2
    assert "a=1" in svg and "a=0" in svg


def test_render_dispatch():
    cfg = CONFIGS["P1"]()
    assert render_svg(weight_subdivision(cfg), cfg) == render_subdivision(
        weight_subdivision(cfg), cfg
    )
    sl = build("C1").slice()
    assert render_svg(sl) == render_slice_polyhedron(sl)


def test_render_deterministic():
    sc = slice_complex(fan_from_cones(fan_f2_cones()))
    assert render_slice_complex(sc) == render_slice_complex(sc)
    cfg = CONFIGS["squareS2"]()
    assert render_subdivision(weight_subdivision(cfg), cfg) == render_subdivision(
        weight_subdivision(cfg), cfg
    )

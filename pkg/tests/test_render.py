import numpy as np
import pytest

from coinfrac import GeometricFamilySpec
from coinfrac.enumeration import DivisionSet
from coinfrac.errors import DomainError
from coinfrac.ifs import construct_inductive
from coinfrac.render import RenderSpec, decode_pgm, encode_pgm, rasterize, render_pgm, render_svg, write_image


def family(r, c, m, s=3):
    return construct_inductive(GeometricFamilySpec(r, c, m), s)


def test_three_points_three_pixels():
    img = rasterize(family(2, 1, 1), RenderSpec(64, 64))
    assert np.count_nonzero(img) == 3
    assert set(np.unique(img).tolist()) == {0, 255}


def test_triangle_orientation():
    img = rasterize(family(2, 1, 1), RenderSpec(64, 64, margin=0.1))
    rows, cols = np.nonzero(img)
    # Apex (second player) on top, base corners on the bottom row.
    top = rows.min()
    assert (rows == top).sum() == 1 and (rows == rows.max()).sum() == 2
    assert cols[rows == top][0] == 32


def test_multiplicity_levels_overlapping_family():
    d = family(3, 3, 4)
    img = rasterize(d, RenderSpec(512, 512, mode="multiplicity"))
    levels = np.unique(img)
    # Multiplicities 1..7 and 9 occur (8 never does); plus the background.
    assert len(levels) == 9
    assert levels.max() == 255 and levels.min() == 0
    assert set(levels.tolist()) == {0} | {255 * k // 9 for k in (1, 2, 3, 4, 5, 6, 7, 9)}


def test_deterministic_bytes():
    spec = RenderSpec(128, 96)
    assert render_pgm(family(3, 2, 3), spec) == render_pgm(family(3, 2, 3), spec)


def test_pgm_header_and_round_trip():
    img = rasterize(family(2, 1, 3), RenderSpec(40, 30))
    data = encode_pgm(img)
    assert data.startswith(b"P5\n40 30\n255\n")
    assert len(data) == len(b"P5\n40 30\n255\n") + 40 * 30
    assert np.array_equal(decode_pgm(data), img)


def test_single_point_centered():
    img = rasterize(family(2, 1, 0), RenderSpec(32, 32))
    assert list(zip(*np.nonzero(img))) == [(16, 16)]


def test_two_players_on_midline():
    img = rasterize(family(2, 1, 4, s=2), RenderSpec(64, 32, margin=0))
    rows, cols = np.nonzero(img)
    assert set(rows.tolist()) == {16}
    assert len(cols) == 16 and cols.min() == 0 and cols.max() == 63


def test_four_players_project():
    img = rasterize(family(2, 1, 3, s=4), RenderSpec(64, 64))
    assert np.count_nonzero(img) > 0


def test_spec_validation():
    for bad in (dict(width=8), dict(height=15), dict(margin=0.5), dict(margin=-0.1), dict(mode="color")):
        with pytest.raises(DomainError):
            RenderSpec(**bad)
    assert RenderSpec.from_size("300x200") == RenderSpec(300, 200)
    with pytest.raises(DomainError):
        RenderSpec.from_size("300")


def test_empty_and_one_player_rejected():
    with pytest.raises(DomainError):
        rasterize(DivisionSet(3, 0, np.zeros((0, 3)), []), RenderSpec())
    with pytest.raises(DomainError):
        rasterize(family(2, 1, 2, s=1), RenderSpec())


def test_svg(tmp_path):
    d = family(2, 1, 2)
    svg = render_svg(d, RenderSpec(64, 64))
    assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    assert svg.count("<circle") == len(d)
    assert svg == render_svg(d, RenderSpec(64, 64))
    write_image(d, RenderSpec(64, 64), tmp_path / "x.svg")
    assert (tmp_path / "x.svg").read_text() == svg
    write_image(d, RenderSpec(64, 64), tmp_path / "x.pgm")
    assert (tmp_path / "x.pgm").read_bytes() == render_pgm(d, RenderSpec(64, 64))

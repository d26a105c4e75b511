"""Named pipelines reproducing the point-set figures as PGM images."""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .coins import GeometricFamilySpec, make_cent
from .enumeration import DivisionSet, enumerate_divisions
from .ifs import construct_inductive
from .render import RenderSpec, render_pgm


@dataclass(frozen=True)
class Figure:
    name: str
    caption: str
    build: Callable[[], DivisionSet]
    spec: RenderSpec


def _family(r, c, m, players=3):
    return lambda: construct_inductive(GeometricFamilySpec(r, c, m), players)


FIGURES: tuple[Figure, ...] = (
    Figure("fig1a", "D_1, three players", _family(2, 1, 1), RenderSpec(64, 64)),
    Figure("fig1b", "D_2, three players", _family(2, 1, 2), RenderSpec(64, 64)),
    Figure("fig1c", "D_7, three players: Sierpinski gasket", _family(2, 1, 7), RenderSpec(512, 512)),
    Figure("fig2a", "S_3,4 (r=3, c=2, m=4)", _family(3, 2, 4), RenderSpec(256, 256)),
    Figure("fig2b", "S_4,3 (r=4, c=3, m=3)", _family(4, 3, 3), RenderSpec(256, 256)),
    Figure("fig2c", "S_5,3 (r=5, c=4, m=3)", _family(5, 4, 3), RenderSpec(256, 256)),
    Figure("fig3a", "r=5, c=3, m=3: totally disconnected", _family(5, 3, 3), RenderSpec(256, 256)),
    Figure("fig3b", "r=4, c=3, m=3: finitely ramified", _family(4, 3, 3), RenderSpec(256, 256)),
    Figure("fig3c", "r=3, c=3, m=3: infinitely ramified", _family(3, 3, 3), RenderSpec(256, 256)),
    Figure("fig4", "r=3, c=3, m=4 shaded by multiplicity", _family(3, 3, 4),
           RenderSpec(256, 256, mode="multiplicity")),
    Figure("fig5", "US cent coin set, three players", lambda: enumerate_divisions(make_cent(), 3),
           RenderSpec(256, 256)),
    Figure("fig6", "D_6 among four players, top view", _family(2, 1, 6, players=4), RenderSpec(256, 256)),
    Figure("fig7a", "S_3,1,4, three players", _family(3, 1, 4), RenderSpec(256, 256)),
    Figure("fig7b", "S_3,1,4, two players: Cantor set", _family(3, 1, 4, players=2), RenderSpec(256, 64)),
)


def figure(name: str) -> Figure:
    for fig in FIGURES:
        if fig.name == name:
            return fig
    raise KeyError(name)


def reproduce_figures(outdir: str | os.PathLike, names=None) -> dict[str, Path]:
    """Render the selected figures (all by default) into ``outdir/<name>.pgm``."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = {}
    for fig in FIGURES:
        if names is not None and fig.name not in names:
            continue
        path = outdir / f"{fig.name}.pgm"
        path.write_bytes(render_pgm(fig.build(), fig.spec))
        written[fig.name] = path
    return written

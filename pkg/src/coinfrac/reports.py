"""Plain-text reports behind the ``analyze`` and ``convergence`` subcommands."""
from __future__ import annotations

from dataclasses import dataclass

from .analysis import classify, hausdorff_distance, similarity_dimension
from .coins import GeometricFamilySpec, make_geometric
from .enumeration import DEFAULT_CAP, is_complete
from .errors import DomainError
from .ifs import construct_inductive, scale


def analyze(spec: GeometricFamilySpec, players: int, *, cap: int = DEFAULT_CAP) -> dict[str, str]:
    """Ordered ``key -> value`` summary of one family and player count."""
    dim = similarity_dimension(spec.r, spec.c, players)
    divisions = construct_inductive(spec, players, cap=cap)
    return {
        "family": str(spec),
        "players": str(players),
        "amount": str(spec.amount),
        "dimension": f"{dim.value:.12f}" if dim.defined else "undefined: overlap",
        "maps": str(dim.n_maps),
        "class": str(classify(spec.r, spec.c)),
        "complete": str(is_complete(make_geometric(spec))).lower(),
        "points": str(len(divisions)),
        "ways": str(divisions.weight),
        "max_multiplicity": str(divisions.max_multiplicity),
    }


def format_report(report: dict[str, str]) -> str:
    return "".join(f"{k}: {v}\n" for k, v in report.items())


@dataclass(frozen=True)
class ConvergenceStep:
    m: int
    distance: float
    ratio: float | None


def convergence(r: int, c: int, players: int, m_max: int, *, cap: int = DEFAULT_CAP) -> list[ConvergenceStep]:
    """Hausdorff distances between consecutive scaled division sets.

    Step ``m`` compares ``r**-m * D_m`` with ``r**-(m+1) * D_(m+1)`` for
    ``m = 1 .. m_max - 1``; ``ratio`` is the quotient with the previous step.
    """
    if m_max < 2:
        raise DomainError(f"m_max must be >= 2, got {m_max}")
    scaled = []
    for m in range(1, m_max + 1):
        spec = GeometricFamilySpec(r, c, m)
        scaled.append(scale(construct_inductive(spec, players, cap=cap), spec))
    steps: list[ConvergenceStep] = []
    for m in range(1, m_max):
        d = hausdorff_distance(scaled[m - 1], scaled[m])
        prev = steps[-1].distance if steps else None
        ratio = d / prev if prev else None
        steps.append(ConvergenceStep(m, d, ratio))
    return steps


def format_convergence(steps: list[ConvergenceStep]) -> str:
    lines = []
    for step in steps:
        line = f"m={step.m} distance={step.distance:.12f}"
        if step.ratio is not None:
            line += f" ratio={step.ratio:.6f}"
        lines.append(line)
    return "\n".join(lines) + "\n"

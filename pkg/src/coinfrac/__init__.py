"""Fractal point sets arising from dividing coins among players."""
from .analysis import (
    DimensionResult,
    RamificationClass,
    cantor_dimension,
    cantor_phi,
    classify,
    hausdorff_distance,
    is_cantor_digit_string,
    similarity_dimension,
)
from .coins import CoinSet, GeometricFamilySpec, amount, make_cent, make_geometric
from .embedding import EmbeddedPoint, embed, embed_array, embed_set
from .enumeration import (
    DivisionSet,
    enumerate_divisions,
    is_complete,
    multiplicity_stratum,
    unreachable_amounts,
)
from .errors import CoinfracError, DomainError, RangeError, ResourceLimitError
from .estimators import CoinDivisionFractal, SimplexEmbedding
from .ifs import (
    GeneratorSet,
    IfsSystem,
    RationalPointSet,
    apply_F,
    construct_inductive,
    generator_set,
    iterate_F,
    scale,
)

__version__ = "0.1.0"

__all__ = [
    "CoinDivisionFractal",
    "CoinSet",
    "CoinfracError",
    "DimensionResult",
    "DivisionSet",
    "DomainError",
    "EmbeddedPoint",
    "GeneratorSet",
    "GeometricFamilySpec",
    "IfsSystem",
    "RamificationClass",
    "RangeError",
    "RationalPointSet",
    "ResourceLimitError",
    "SimplexEmbedding",
    "amount",
    "apply_F",
    "cantor_dimension",
    "cantor_phi",
    "classify",
    "construct_inductive",
    "embed",
    "embed_array",
    "embed_set",
    "enumerate_divisions",
    "generator_set",
    "hausdorff_distance",
    "is_cantor_digit_string",
    "is_complete",
    "iterate_F",
    "make_cent",
    "make_geometric",
    "multiplicity_stratum",
    "scale",
    "similarity_dimension",
    "unreachable_amounts",
]

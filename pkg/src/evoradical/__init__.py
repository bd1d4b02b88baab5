"""Absorption radical and related invariants of finite-dimensional evolution algebras."""

from .algebra import BasisIdeal, Element, EvolutionAlgebra, annihilator, multiply, scalar, support
from .decompose import DecompositionVerdict, Verdict, complement_not_ideal_check, decide
from .digraph import (
    DiGraph,
    VertexClassification,
    classify_vertices,
    descendants_1,
    descendants_all,
    descendants_m,
    from_algebra,
    full_subgraph,
    is_acyclic,
    is_connected,
    weak_components,
)
from .errors import (
    DimensionMismatch,
    EvolutionAlgebraError,
    InternalConsistencyError,
    NotAnIdeal,
    OracleDimensionError,
    ParseError,
    PreconditionError,
)
from .io import emit_dot, parse_algebra, serialize_algebra
from .quotient import QuotientDecomposition, quotient_by_radical, split_by_ideal
from .radical import (
    LambdaChain,
    RadicalReport,
    absorption_radical_graph,
    absorption_radical_series,
    has_absorption,
    is_basis_ideal,
    is_nilpotent,
    lambda_chain,
    nilpotent_ideal_in_radical,
    nilpotent_type,
    radical_equals_annihilator,
    radical_report,
    upper_annihilator,
)

__version__ = "0.1.0"

"""Certificates of (in)decomposability relative to the supplied natural basis.

Only sufficient conditions are available for degenerate algebras, so the
verdict is three-valued.  Rules are tried in a fixed order and the first
one that fires names the verdict:

1. ``disconnected-graph``: the associated graph splits, giving an explicit
   direct sum of two basis ideals.
2. ``nondegenerate-connected``: zero annihilator and connected graph.
3. ``nilpotent-dim-ann-1``: nilpotent with one-dimensional annihilator.
4. ``radical-indecomposable-quotient-connected``: connected graph,
   connected graph for ``A/rad(A)``, and ``rad(A)`` itself certified
   indecomposable (recursively).

Anything else is ``Unknown``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import EvolutionAlgebra, annihilator
from .digraph import from_algebra, is_connected, weak_components
from .errors import InternalConsistencyError, PreconditionError
from .quotient import split_by_ideal
from .radical import absorption_radical_graph, is_nilpotent


class Verdict(str, enum.Enum):
    DECOMPOSABLE = "Decomposable"
    INDECOMPOSABLE = "Indecomposable"
    UNKNOWN = "Unknown"


RULE_DISCONNECTED = "disconnected-graph"
RULE_NONDEGENERATE = "nondegenerate-connected"
RULE_NILPOTENT_ANN_1 = "nilpotent-dim-ann-1"
RULE_RADICAL_QUOTIENT = "radical-indecomposable-quotient-connected"
RULE_NONE = "no-applicable-rule"


@dataclass(frozen=True)
class DecompositionVerdict:
    verdict: Verdict
    rule: str
    witness: tuple[frozenset[int], frozenset[int]] | None = None


def decide(alg: EvolutionAlgebra) -> DecompositionVerdict:
    if alg.dim < 1:
        raise ValueError("decomposability is undefined for the zero-dimensional algebra")
    g = from_algebra(alg)
    comps = weak_components(g)
    if len(comps) > 1:
        first = comps[0]
        return DecompositionVerdict(
            Verdict.DECOMPOSABLE, RULE_DISCONNECTED, (first, frozenset(range(alg.dim)) - first)
        )

    ann = annihilator(alg).indices
    if not ann:
        return DecompositionVerdict(Verdict.INDECOMPOSABLE, RULE_NONDEGENERATE)

    if len(ann) == 1 and is_nilpotent(alg):
        return DecompositionVerdict(Verdict.INDECOMPOSABLE, RULE_NILPOTENT_ANN_1)

    rad = absorption_radical_graph(alg).indices
    # rad == whole algebra would recurse on alg itself
    if len(rad) < alg.dim:
        split = split_by_ideal(alg, rad)
        if (
            is_connected(from_algebra(split.quotient_algebra))
            and decide(split.ideal_algebra).verdict is Verdict.INDECOMPOSABLE
        ):
            return DecompositionVerdict(Verdict.INDECOMPOSABLE, RULE_RADICAL_QUOTIENT)

    return DecompositionVerdict(Verdict.UNKNOWN, RULE_NONE)


def complement_not_ideal_witness(alg: EvolutionAlgebra) -> int:
    """A basis index ``j`` outside the radical whose square meets the radical.

    Such a ``j`` shows that the span of the non-radical basis vectors is not
    an ideal.  Requires a degenerate algebra, different from its radical,
    with connected associated graph.
    """
    rad = absorption_radical_graph(alg).indices
    if (
        alg.dim < 1
        or not annihilator(alg).indices
        or len(rad) == alg.dim
        or not is_connected(from_algebra(alg))
    ):
        raise PreconditionError("preconditions unmet: need degenerate, A != rad(A), connected graph")
    for j in range(alg.dim):
        if j not in rad and alg.square_supports[j] & rad:
            return j
    raise InternalConsistencyError("internal: no edge from the complement into the radical")


def complement_not_ideal_check(alg: EvolutionAlgebra) -> bool:
    complement_not_ideal_witness(alg)
    return True

"""Upper annihilating series and the absorption radical.

Two independent routes to the radical are provided: iterating the index
sets ``lambda_k`` until they stabilise, and collecting the acyclic vertices
of the associated graph.  They always agree; ``radical_report`` checks that
on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import BasisIdeal, EvolutionAlgebra, annihilator
from .digraph import classify_vertices, from_algebra, full_subgraph, is_acyclic
from .errors import InternalConsistencyError, NotAnIdeal


@dataclass(frozen=True)
class LambdaChain:
    """``lambda_1 <= lambda_2 <= ...`` recorded through the first repeat.

    With ``lambda_0`` taken as the empty set, ``asi`` is the least ``q`` such
    that ``lambda_q == lambda_{q+1}``.  A non-degenerate algebra therefore has
    ``chain == (frozenset(),)`` and ``asi == 0``.
    """

    chain: tuple[frozenset[int], ...]
    asi: int

    @property
    def series(self) -> list[frozenset[int]]:
        """The strictly increasing part ``lambda_1 .. lambda_asi``."""
        return list(self.chain[: self.asi])

    @property
    def stable(self) -> frozenset[int]:
        return self.chain[-1]

    def term(self, i: int) -> frozenset[int]:
        if i < 0:
            raise ValueError("index must be non-negative")
        if i == 0 or self.asi == 0:
            return frozenset()
        return self.chain[min(i, self.asi) - 1]


@dataclass(frozen=True)
class RadicalReport:
    lambda_chain: LambdaChain
    radical: BasisIdeal
    acyclic_vertices: frozenset[int]
    nilpotent_type: list[int] | None

    @property
    def asi(self) -> int:
        return self.lambda_chain.asi


def lambda_chain(alg: EvolutionAlgebra) -> LambdaChain:
    supports = alg.square_supports
    prev: frozenset[int] = frozenset()
    current = frozenset(i for i, s in enumerate(supports) if not s)
    chain = [current]
    while current != prev:
        prev = current
        current = frozenset(i for i, s in enumerate(supports) if s <= prev)
        chain.append(current)
    return LambdaChain(tuple(chain), len(chain) - 1)


def upper_annihilator(alg: EvolutionAlgebra, i: int) -> BasisIdeal:
    """``ann^(i)(A)`` as a basis ideal; ``ann^(0)`` is zero."""
    return BasisIdeal(lambda_chain(alg).term(i))


def absorption_radical_series(alg: EvolutionAlgebra) -> BasisIdeal:
    return BasisIdeal(lambda_chain(alg).stable, has_absorption=True)


def absorption_radical_graph(alg: EvolutionAlgebra) -> BasisIdeal:
    return BasisIdeal(classify_vertices(from_algebra(alg)).acyclic, has_absorption=True)


def is_basis_ideal(alg: EvolutionAlgebra, S: Iterable[int]) -> bool:
    S = frozenset(S)
    supports = alg.square_supports
    return all(supports[i] <= S for i in S)


def _require_ideal(alg, S):
    S = frozenset(S)
    if not all(0 <= i < alg.dim for i in S):
        raise ValueError(f"indices out of range for dimension {alg.dim}: {sorted(S)}")
    if not is_basis_ideal(alg, S):
        raise NotAnIdeal(S)
    return S


def has_absorption(alg: EvolutionAlgebra, S: Iterable[int]) -> bool:
    """Whether the basis ideal ``span{e_i : i in S}`` has the absorption property.

    It does iff no ``j`` outside ``S`` has all its first-generation
    descendants in ``S``.  A sink outside ``S`` counts as a violation
    (the empty set is contained in ``S``).
    """
    S = _require_ideal(alg, S)
    supports = alg.square_supports
    return not any(supports[j] <= S for j in range(alg.dim) if j not in S)


def radical_report(alg: EvolutionAlgebra) -> RadicalReport:
    chain = lambda_chain(alg)
    acyclic = classify_vertices(from_algebra(alg)).acyclic
    if chain.stable != acyclic:
        raise InternalConsistencyError(
            f"internal: radical algorithms disagree (series {sorted(chain.stable)}, graph {sorted(acyclic)})"
        )
    nil_type = None
    if len(acyclic) == alg.dim:
        sizes = [0] + [len(s) for s in chain.series]
        nil_type = [b - a for a, b in zip(sizes, sizes[1:])]
    return RadicalReport(chain, BasisIdeal(acyclic, has_absorption=True), acyclic, nil_type)


def nilpotent_type(alg: EvolutionAlgebra) -> list[int] | None:
    return radical_report(alg).nilpotent_type


def is_nilpotent(alg: EvolutionAlgebra) -> bool:
    return is_acyclic(from_algebra(alg))


def radical_equals_annihilator(alg: EvolutionAlgebra) -> bool:
    g = from_algebra(alg)
    cls = classify_vertices(g)
    ann = annihilator(alg).indices
    by_cycles = all(i in cls.cyclic for i in range(alg.dim) if i not in ann)
    if by_cycles != (cls.acyclic == ann):
        raise InternalConsistencyError("internal: rad = ann criterion disagrees with direct comparison")
    return by_cycles


def nilpotent_ideal_in_radical(alg: EvolutionAlgebra, S: Iterable[int]) -> bool:
    """Whether the basis ideal on ``S`` is nilpotent, i.e. its graph has no cycle.

    For ideals with the extension property this is the same as lying inside
    the radical, which is checked as well.
    """
    S = _require_ideal(alg, S)
    g = from_algebra(alg)
    nilpotent = is_acyclic(full_subgraph(g, S))
    if nilpotent != (S <= classify_vertices(g).acyclic):
        raise InternalConsistencyError("internal: nilpotent ideal not contained in radical")
    return nilpotent

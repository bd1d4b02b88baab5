"""Splitting an evolution algebra along a basis ideal.

Reordering the basis so that the ideal's indices come first puts the
structure matrix in lower block-triangular form::

    [ M_ideal    0      ]
    [ X          M_quot ]

The zero upper-right block is exactly the statement that the index set is
closed under first-generation descendants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import EvolutionAlgebra
from .digraph import from_algebra, full_subgraph
from .errors import InternalConsistencyError
from .radical import _require_ideal, absorption_radical_graph

QUOTIENT_MARK = "~"

Block = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class QuotientDecomposition:
    ideal_algebra: EvolutionAlgebra
    quotient_algebra: EvolutionAlgebra
    coupling: Block
    permutation: tuple[int, ...]

    @property
    def ideal_indices(self) -> tuple[int, ...]:
        return self.permutation[: self.ideal_algebra.dim]

    @property
    def quotient_indices(self) -> tuple[int, ...]:
        return self.permutation[self.ideal_algebra.dim :]

    def reordered_matrix(self) -> Block:
        """The block matrix in permuted order."""
        m = self.quotient_algebra.dim
        zero = (Fraction(0),) * m
        top = tuple(row + zero for row in self.ideal_algebra.matrix)
        bottom = tuple(x + q for x, q in zip(self.coupling, self.quotient_algebra.matrix))
        return top + bottom

    def reassemble(self) -> Block:
        """Undo the permutation, giving back the original structure matrix."""
        blocks = self.reordered_matrix()
        n = len(self.permutation)
        pos = {orig: p for p, orig in enumerate(self.permutation)}
        return tuple(tuple(blocks[pos[i]][pos[j]] for j in range(n)) for i in range(n))


def split_by_ideal(alg: EvolutionAlgebra, S: Iterable[int]) -> QuotientDecomposition:
    S = _require_ideal(alg, S)
    inside = sorted(S)
    outside = [i for i in range(alg.dim) if i not in S]
    ideal = EvolutionAlgebra(alg.submatrix(inside, inside), tuple(alg.labels[i] for i in inside))
    quot = EvolutionAlgebra(
        alg.submatrix(outside, outside),
        tuple(QUOTIENT_MARK + alg.labels[i] for i in outside),
    )
    return QuotientDecomposition(ideal, quot, alg.submatrix(outside, inside), tuple(inside + outside))


def quotient_by_radical(alg: EvolutionAlgebra) -> QuotientDecomposition:
    rad = absorption_radical_graph(alg).indices
    dec = split_by_ideal(alg, rad)
    g = from_algebra(alg)
    rest = frozenset(range(alg.dim)) - rad
    if from_algebra(dec.ideal_algebra) != full_subgraph(g, rad) or from_algebra(
        dec.quotient_algebra
    ) != full_subgraph(g, rest):
        raise InternalConsistencyError("internal: radical/quotient graphs are not full subgraphs")
    return dec

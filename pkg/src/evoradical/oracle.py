"""Brute-force cross-checks for small dimension.

Nothing here touches the graph search or the lambda recursion.  The
radical is found by intersecting every absorbing basis ideal, the series by
repeatedly taking annihilators of quotients, and acyclicity by boolean
matrix powers.  Subsets are bitmasks; everything is exponential in the
dimension, hence ``MAX_ORACLE_DIM``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import EvolutionAlgebra, multiply, support
from .digraph import DiGraph
from .errors import OracleDimensionError
from .quotient import split_by_ideal

MAX_ORACLE_DIM = 16


@dataclass(frozen=True)
class OracleReport:
    radical_by_intersection: frozenset[int]
    annihilator_series_by_quotient: list[frozenset[int]]
    acyclicity_by_matrix_power: bool
    basis_split_found: tuple[frozenset[int], frozenset[int]] | None


def _check_dim(alg):
    if alg.dim > MAX_ORACLE_DIM:
        raise OracleDimensionError(
            f"dimension too large for oracle: {alg.dim} > {MAX_ORACLE_DIM}"
        )


def _square_masks(alg: EvolutionAlgebra) -> list[int]:
    masks = []
    for i in range(alg.dim):
        e = alg.basis_element(i)
        masks.append(sum(1 << k for k in support(multiply(alg, e, e))))
    return masks


def _indices(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _closed(sq: list[int], mask: int) -> bool:
    # I*A lies in I iff e_i*e_i lies in I for every i in I
    return all(sq[i] & ~mask == 0 for i in range(len(sq)) if mask >> i & 1)


def _absorbing(sq: list[int], mask: int) -> bool:
    # x*A lies in I iff e_k*e_k lies in I for every k in supp(x), since x*e_k = x_k e_k^2;
    # so the absorbed elements are spanned by those e_k, and all of them must be in I
    return all(mask >> k & 1 for k in range(len(sq)) if sq[k] & ~mask == 0)


def oracle_radical_intersection(alg: EvolutionAlgebra) -> frozenset[int]:
    _check_dim(alg)
    sq = _square_masks(alg)
    full = (1 << alg.dim) - 1
    meet = full
    for mask in range(full + 1):
        if _closed(sq, mask) and _absorbing(sq, mask):
            meet &= mask
    return _indices(meet)


def oracle_series_by_quotient(alg: EvolutionAlgebra) -> list[frozenset[int]]:
    """``ann^(i)`` for ``i = 1 .. asi`` via ``ann(A / ann^(i-1))``."""
    _check_dim(alg)
    series: list[frozenset[int]] = []
    current: frozenset[int] = frozenset()
    while True:
        split = split_by_ideal(alg, current)
        quot = split.quotient_algebra
        zero_rows = [t for t, row in enumerate(quot.matrix) if all(w == 0 for w in row)]
        if not zero_rows:
            return series
        offset = split.ideal_algebra.dim
        current = current | {split.permutation[offset + t] for t in zero_rows}
        series.append(current)


def oracle_basis_split(alg: EvolutionAlgebra) -> tuple[frozenset[int], frozenset[int]] | None:
    """First pair of complementary nonempty basis ideals, by increasing bitmask."""
    _check_dim(alg)
    sq = _square_masks(alg)
    full = (1 << alg.dim) - 1
    for mask in range(1, full):
        if _closed(sq, mask) and _closed(sq, full ^ mask):
            return _indices(mask), _indices(full ^ mask)
    return None


def oracle_acyclicity(g: DiGraph) -> bool:
    """True iff the n-th boolean power of the adjacency matrix vanishes."""
    rows = [sum(1 << k for k in range(g.n) if g.adj[i][k]) for i in range(g.n)]
    power = rows
    for _ in range(g.n - 1):
        power = [_bool_row_times(r, rows) for r in power]
    return not any(power)


def _bool_row_times(row: int, rows: list[int]) -> int:
    out = 0
    j = 0
    while row:
        if row & 1:
            out |= rows[j]
        row >>= 1
        j += 1
    return out


def oracle_report(alg: EvolutionAlgebra) -> OracleReport:
    g = DiGraph(alg.dim, tuple(tuple(w != 0 for w in row) for row in alg.matrix))
    return OracleReport(
        oracle_radical_intersection(alg),
        oracle_series_by_quotient(alg),
        oracle_acyclicity(g),
        oracle_basis_split(alg),
    )


def random_algebra(
    rng: random.Random, dim: int, p_zero_row: float = 0.3, p_entry: float = 0.4
) -> EvolutionAlgebra:
    """Random structure matrix with entries in ``{-3..3} \\ {0}``.

    Each row is zero with probability ``p_zero_row``; otherwise each entry is
    nonzero with probability ``p_entry``.
    """
    values = (-3, -2, -1, 1, 2, 3)
    rows = []
    for _ in range(dim):
        if rng.random() < p_zero_row:
            rows.append((Fraction(0),) * dim)
        else:
            rows.append(
                tuple(Fraction(rng.choice(values)) if rng.random() < p_entry else Fraction(0) for _ in range(dim))
            )
    return EvolutionAlgebra(tuple(rows))

"""Evolution algebras over the rationals, relative to a fixed natural basis.

Row ``i`` of the structure matrix holds the coefficients of ``e_i * e_i``;
distinct basis elements multiply to zero.  Scalars are ``fractions.Fraction``
so that every zero test is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EvolutionAlgebraError

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions and literals such as ``"-2/3"``.  Floats are
    refused: a rounded structure constant could change the zero pattern.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


@dataclass(frozen=True)
class Element:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(scalar(c) for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def __add__(self, other: Element) -> Element:
        if len(self) != len(other):
            raise DimensionMismatch(len(self), len(other))
        return Element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def __neg__(self) -> Element:
        return Element(tuple(-a for a in self.coords))

    def __rmul__(self, c) -> Element:
        c = scalar(c)
        return Element(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    @classmethod
    def zero(cls, dim: int) -> Element:
        return cls((ZERO,) * dim)

    @classmethod
    def basis(cls, dim: int, i: int) -> Element:
        return cls(tuple(ONE if k == i else ZERO for k in range(dim)))


@dataclass(frozen=True)
class EvolutionAlgebra:
    """An evolution algebra given by its structure matrix.

    ``matrix[i][k]`` is the coefficient of ``e_k`` in ``e_i**2``.  Labels
    default to ``e1 .. en``.  Dimension 0 is allowed (the zero space) so that
    quotients by the whole algebra need no special casing.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        rows = tuple(tuple(scalar(w) for w in row) for row in self.matrix)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise EvolutionAlgebraError(
                    f"structure matrix must be square: row {i} has {len(row)} entries, expected {n}"
                )
        labels = tuple(self.labels) if self.labels else tuple(f"e{i + 1}" for i in range(n))
        if len(labels) != n:
            raise EvolutionAlgebraError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise EvolutionAlgebraError("labels must be pairwise distinct")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], labels: Sequence[str] = ()) -> EvolutionAlgebra:
        return cls(tuple(tuple(r) for r in rows), tuple(labels))

    @classmethod
    def from_squares(cls, dim: int, squares: dict[int, dict[int, object]], labels=()) -> EvolutionAlgebra:
        """Build from sparse rules ``{i: {k: w_ik}}`` (0-based); missing rows are zero."""
        rows = [[ZERO] * dim for _ in range(dim)]
        for i, terms in squares.items():
            for k, w in terms.items():
                rows[i][k] = scalar(w)
        return cls.from_rows(rows, labels)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @cached_property
    def square_supports(self) -> tuple[frozenset[int], ...]:
        """Indices ``k`` with ``w_ik != 0``, one set per row."""
        return tuple(frozenset(k for k, w in enumerate(row) if w) for row in self.matrix)

    def basis_element(self, i: int) -> Element:
        return Element.basis(self.dim, i)

    def element(self, coords: Iterable) -> Element:
        x = Element(tuple(coords))
        if len(x) != self.dim:
            raise DimensionMismatch(self.dim, len(x))
        return x

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(self.matrix[i][j] for j in cols) for i in rows)

    def __str__(self):
        parts = []
        for i, row in enumerate(self.matrix):
            terms = [f"{w}*{self.labels[k]}" if w != 1 else self.labels[k] for k, w in enumerate(row) if w]
            parts.append(f"{self.labels[i]}^2 = {' + '.join(terms) if terms else '0'}")
        return "; ".join(parts)


@dataclass(frozen=True)
class BasisIdeal:
    """``span{e_i : i in indices}``.

    A subspace spanned by part of the natural basis always has the extension
    property, so that flag is fixed at True.
    """

    indices: frozenset[int]
    is_ideal: bool = True
    has_absorption: bool | None = None
    has_extension: bool = True

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(self.indices))

    def __len__(self):
        return len(self.indices)

    def __contains__(self, i):
        return i in self.indices

    def __iter__(self):
        return iter(sorted(self.indices))

    def labels(self, alg: EvolutionAlgebra) -> list[str]:
        return [alg.labels[i] for i in sorted(self.indices)]


def multiply(alg: EvolutionAlgebra, x: Element, y: Element) -> Element:
    """Product in the algebra: ``z_k = sum_i x_i * y_i * w_ik``."""
    n = alg.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(n, len(x) if len(x) != n else len(y))
    z = [ZERO] * n
    for i, (a, b) in enumerate(zip(x.coords, y.coords)):
        if not a or not b:
            continue
        c = a * b
        for k in alg.square_supports[i]:
            z[k] += c * alg.matrix[i][k]
    return Element(tuple(z))


def support(x: Element) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(x.coords) if c)


def annihilator(alg: EvolutionAlgebra) -> BasisIdeal:
    """``ann(A)``: spanned by the basis elements squaring to zero."""
    return BasisIdeal(frozenset(i for i, row in enumerate(alg.matrix) if not any(row)))

"""Companion matrices, their small powers, and column-mask decompositions.

Every decomposition splits a matrix ``T`` into parts with pairwise disjoint
column supports.  Then ``X Y^H = 0`` for distinct parts, hence

    ||T||_2^2 = ||T T^H||_2 = ||sum X X^H||_2 <= sum ||X X^H||_2,

which is the inequality behind each closed-form bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import DimensionMismatch, PreconditionViolation
from .qmat import QMatrix, conj_transpose, mask_columns, mat_mul
from .qpoly import LeftPolynomial, RightPolynomial, _check_bound_input, auxiliary_polynomial


class Decomposition(enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    LEMMA2 = "LEMMA2"


@dataclass(frozen=True)
class DecompositionParts:
    parts: tuple[QMatrix, ...]
    target: QMatrix

    def sums_exactly(self) -> bool:
        total = self.parts[0]
        for p in self.parts[1:]:
            total = total + p
        return total == self.target

    def cross_products_vanish(self) -> bool:
        return all(
            mat_mul(X, conj_transpose(Y)).is_zero()
            for X, Y in permutations(self.parts, 2)
        )


def _check_companion_input(f, min_degree: int = 2) -> None:
    if not f.is_monic():
        raise PreconditionViolation("companion matrix needs a monic polynomial")
    if f.degree < min_degree:
        raise PreconditionViolation(f"companion matrix needs degree >= {min_degree}")


def companion_right(f: RightPolynomial) -> QMatrix:
    """Subdiagonal ones, last column ``(-q_1, ..., -q_n)``."""
    _check_companion_input(f)
    n = f.degree
    d = np.zeros((n, n, 4))
    d[np.arange(1, n), np.arange(n - 1), 0] = 1.0
    for j in range(1, n + 1):
        d[j - 1, n - 1] = (-f.q(j)).to_list()
    return QMatrix(d)


def companion_left(f: LeftPolynomial) -> QMatrix:
    """Superdiagonal ones, bottom row ``(-q_1, ..., -q_n)``."""
    _check_companion_input(f)
    n = f.degree
    d = np.zeros((n, n, 4))
    d[np.arange(n - 1), np.arange(1, n), 0] = 1.0
    for j in range(1, n + 1):
        d[n - 1, j - 1] = (-f.q(j)).to_list()
    return QMatrix(d)


def companion_power(C: QMatrix, k: int) -> QMatrix:
    if C.rows != C.cols:
        raise DimensionMismatch(f"power of non-square {C.shape}")
    if k not in (1, 2, 3):
        raise PreconditionViolation(f"power {k} not in {{1, 2, 3}}")
    out = C
    for _ in range(k - 1):
        out = mat_mul(out, C)
    return out


def lemma2_matrix(f: RightPolynomial) -> QMatrix:
    """``n x n`` matrix with subdiagonal ones and last column ``(0, -q_1, ..., -q_(n-1))``."""
    n = f.degree
    d = np.zeros((n, n, 4))
    d[np.arange(1, n), np.arange(n - 1), 0] = 1.0
    for j in range(1, n):
        d[j, n - 1] = (-f.q(j)).to_list()
    return QMatrix(d)


def _split_trailing(T: QMatrix, k: int) -> tuple[QMatrix, ...]:
    """Last column, second-to-last, ..., k single columns, then the rest."""
    n = T.cols
    parts = [mask_columns(T, [n - 1 - i]) for i in range(k)]
    parts.append(mask_columns(T, range(n - k)))
    return tuple(parts)


def decomposition_parts(f: RightPolynomial, which) -> DecompositionParts:
    """Column-mask split of the matrix behind one bound.

    ``T1``: ``C`` into the last column and the shift part.
    ``T2``: ``C^3`` into its last three columns and the shift part.
    ``T3``: ``C_aux^2`` into its last two columns and the shift part.
    ``T4``: ``C_aux^3`` into its last three columns and the shift part.
    ``LEMMA2``: the Lemma-2 matrix into its last column and the shift part.

    Parts are listed last column first; the shift part always comes last.
    """
    which = Decomposition(which)
    _check_bound_input(f, 3 if which is Decomposition.T2 else 2)
    if which is Decomposition.T1:
        target = companion_right(f)
        k = 1
    elif which is Decomposition.T2:
        target = companion_power(companion_right(f), 3)
        k = 3
    elif which is Decomposition.T3:
        target = companion_power(companion_right(auxiliary_polynomial(f)), 2)
        k = 2
    elif which is Decomposition.T4:
        target = companion_power(companion_right(auxiliary_polynomial(f)), 3)
        k = 3
    else:
        target = lemma2_matrix(f)
        k = 1
    return DecompositionParts(_split_trailing(target, k), target)

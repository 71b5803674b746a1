"""Dense quaternion matrices.

Entries live in a float array of shape ``(rows, cols, 4)`` holding the
``(w, x, y, z)`` components.  Spectral quantities go through the complex
adjoint: writing ``A = A1 + A2 j`` with complex ``A1, A2``,

    chi(A) = [[A1, A2], [-conj(A2), conj(A1)]]

is an injective ring homomorphism, its singular values are those of ``A``
(each repeated twice), and its eigenvalues are the standard representatives
of the right eigenvalue classes of ``A`` together with their conjugates.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import ConvergenceFailure, DimensionMismatch
from .quat import Quaternion


def qmul_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product over trailing axes of length 4."""
    a0, a1, a2, a3 = np.moveaxis(a, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


class QMatrix:
    """Immutable ``rows x cols`` quaternion matrix."""

    __slots__ = ("_data",)

    def __init__(self, data):
        arr = np.array(data, dtype=float)
        if arr.ndim != 3 or arr.shape[2] != 4 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionMismatch(f"expected shape (rows, cols, 4), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("non-finite entry in quaternion matrix")
        arr.setflags(write=False)
        self._data = arr

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence) -> "QMatrix":
        """Build from a row-major list of quaternions (or 4-sequences)."""
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        data = np.array([Quaternion.coerce(e).to_list() for e in entries], dtype=float)
        return cls(data.reshape(rows, cols, 4))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        nrows, ncols = len(rows), len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls.from_entries(nrows, ncols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(np.zeros((rows, cols, 4)))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        data = np.zeros((n, n, 4))
        data[np.arange(n), np.arange(n), 0] = 1.0
        return cls(data)

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx) -> Quaternion:
        i, j = idx
        return Quaternion(*self._data[i, j])

    def entries(self) -> list[Quaternion]:
        return [Quaternion(*v) for v in self._data.reshape(-1, 4)]

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._data == other._data))

    __hash__ = None

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return QMatrix(self._data + other._data)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return QMatrix(self._data - other._data)

    def __neg__(self) -> "QMatrix":
        return QMatrix(-self._data)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        return mat_mul(self, other)

    @property
    def H(self) -> "QMatrix":
        return conj_transpose(self)

    def is_zero(self) -> bool:
        return not np.any(self._data)

    def max_abs(self) -> float:
        return float(np.max(np.linalg.norm(self._data, axis=2)))

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": self._data.reshape(-1, 4).tolist(),
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "QMatrix":
        return cls.from_entries(int(obj["rows"]), int(obj["cols"]), obj["entries"])

    def __repr__(self):
        return f"QMatrix(rows={self.rows}, cols={self.cols})"


def mat_mul(A: QMatrix, B: QMatrix) -> QMatrix:
    """Matrix product ``A B`` with factor order preserved in every entry."""
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    prods = qmul_arrays(A.data[:, :, None, :], B.data[None, :, :, :])
    return QMatrix(prods.sum(axis=1))


def conj_transpose(A: QMatrix) -> QMatrix:
    d = np.swapaxes(A.data, 0, 1).copy()
    d[..., 1:] *= -1.0
    return QMatrix(d)


def entry_norms(A: QMatrix) -> tuple[float, float, float]:
    """Return ``(||A||_1, ||A||_inf, ||A||_F)``.

    The 1-norm is the largest column sum of entry moduli, the inf-norm the
    largest row sum.
    """
    mods = np.linalg.norm(A.data, axis=2)
    one = float(np.max(mods.sum(axis=0)))
    inf = float(np.max(mods.sum(axis=1)))
    fro = float(np.linalg.norm(mods))
    return one, inf, fro


def complex_adjoint(A: QMatrix) -> np.ndarray:
    """The ``2m x 2n`` complex matrix ``[[A1, A2], [-conj(A2), conj(A1)]]``."""
    d = A.data
    a1 = d[..., 0] + 1j * d[..., 1]
    a2 = d[..., 2] + 1j * d[..., 3]
    return np.block([[a1, a2], [-np.conj(a2), np.conj(a1)]])


def from_complex_adjoint(chi: np.ndarray) -> QMatrix:
    """Inverse of :func:`complex_adjoint` (reads the top block row)."""
    m, n = chi.shape[0] // 2, chi.shape[1] // 2
    a1, a2 = chi[:m, :n], chi[:m, n:]
    return QMatrix(np.stack([a1.real, a1.imag, a2.real, a2.imag], axis=-1))


def singular_values(A: QMatrix) -> np.ndarray:
    """Singular values of ``chi(A)`` in descending order (each appears twice)."""
    try:
        return np.linalg.svd(complex_adjoint(A), compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"SVD did not converge: {exc}") from exc


def spectral_norm(A: QMatrix) -> float:
    return float(singular_values(A)[0])


def right_spectral_radius(A: QMatrix) -> float:
    """Largest modulus of a right eigenvalue of a square matrix."""
    if A.rows != A.cols:
        raise DimensionMismatch(f"right spectral radius of non-square {A.shape}")
    try:
        eig = np.linalg.eigvals(complex_adjoint(A))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"eigenvalue iteration did not converge: {exc}") from exc
    return float(np.max(np.abs(eig)))


def mask_columns(A: QMatrix, cols) -> QMatrix:
    """Copy of ``A`` with every column outside ``cols`` set to zero."""
    d = np.zeros_like(A.data)
    idx = list(cols)
    d[:, idx, :] = A.data[:, idx, :]
    return QMatrix(d)

"""Floating-point quaternion scalars.

A quaternion ``w + x i + y j + z k`` is stored as four doubles.  Products
follow Hamilton's rules ``i^2 = j^2 = k^2 = ijk = -1``; multiplication is
not commutative, so the order of operands always matters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True, slots=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"non-finite quaternion component {name}={v!r}")
            object.__setattr__(self, name, v)

    @classmethod
    def from_seq(cls, seq: Sequence[float]) -> "Quaternion":
        if len(seq) != 4:
            raise ValueError(f"expected 4 components, got {len(seq)}")
        return cls(*seq)

    @classmethod
    def coerce(cls, value) -> "Quaternion":
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, (int, float)):
            return cls(value)
        return cls.from_seq(value)

    def to_list(self) -> list[float]:
        return [self.w, self.x, self.y, self.z]

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    @property
    def real(self) -> float:
        return self.w

    @property
    def imag_abs(self) -> float:
        return math.hypot(self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return self.w == 0.0 and self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __add__(self, other):
        o = _as_quat(other)
        if o is None:
            return NotImplemented
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_quat(other)
        if o is None:
            return NotImplemented
        return Quaternion(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __rsub__(self, other):
        o = _as_quat(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return q_mul(self, other)
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # only reals reach here; they commute
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def __abs__(self):
        return q_abs(self)

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def __str__(self):
        return f"{self.w:g}{self.x:+g}i{self.y:+g}j{self.z:+g}k"


def _as_quat(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(value)
    return None


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def q_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a * b``."""
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def q_conj(a: Quaternion) -> Quaternion:
    return Quaternion(a.w, -a.x, -a.y, -a.z)


def q_abs(a: Quaternion) -> float:
    # math.hypot scales internally, so no overflow for large components
    return math.hypot(a.w, a.x, a.y, a.z)


def q_abs2(a: Quaternion) -> float:
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z


def q_inv(a: Quaternion) -> Quaternion:
    """Multiplicative inverse ``conj(a) / |a|^2``.

    Raises ZeroDivisionError for the zero quaternion.
    """
    if a.is_zero():
        raise ZeroDivisionError("quaternion inverse of zero")
    m = q_abs(a)
    # divide twice by |a| rather than once by |a|^2 to avoid underflow
    c = q_conj(a)
    return Quaternion(c.w / m / m, c.x / m / m, c.y / m / m, c.z / m / m)


def q_sum(values: Iterable[Quaternion]) -> Quaternion:
    w = x = y = z = 0.0
    for v in values:
        w += v.w
        x += v.x
        y += v.y
        z += v.z
    return Quaternion(w, x, y, z)

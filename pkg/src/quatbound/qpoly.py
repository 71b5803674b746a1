"""Right and left quaternion polynomials.

Coefficients are stored in ascending order: ``coeffs[i]`` goes with ``z^i``.
A right polynomial is ``f(z) = sum z^i a_i`` (variable on the left of every
coefficient), a left polynomial is ``sum a_i z^i``.

The bound formulas use 1-based, constant-first names ``q_1, ..., q_n`` for
a monic right polynomial ``z^n + z^(n-1) q_n + ... + z q_2 + q_1``, so
``q_j = coeffs[j - 1]`` and ``coeffs[n] = 1``.  :meth:`RightPolynomial.q`
gives that view with ``q_j = 0`` for ``j <= 0``.
"""

from __future__ import annotations

from typing import Iterable

from .errors import PreconditionViolation, ZeroLeading, ZeroPolynomial
from .quat import ONE, ZERO, Quaternion, q_inv, q_mul, q_sum


def _trimmed(coeffs: Iterable) -> tuple[Quaternion, ...]:
    cs = [Quaternion.coerce(c) for c in coeffs]
    while cs and cs[-1].is_zero():
        cs.pop()
    if not cs:
        raise ZeroPolynomial("all coefficients are zero")
    return tuple(cs)


class _Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = _trimmed(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Quaternion:
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return self.leading == ONE

    def is_real(self) -> bool:
        return all(c.x == 0.0 and c.y == 0.0 and c.z == 0.0 for c in self.coeffs)

    def q(self, j: int) -> Quaternion:
        """1-based coefficient ``q_j = coeffs[j-1]``; zero for ``j <= 0``."""
        if j <= 0:
            return ZERO
        return self.coeffs[j - 1]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def to_dict(self) -> dict:
        return {"coefficients": [c.to_list() for c in self.coeffs]}

    def __repr__(self):
        return f"{type(self).__name__}({[c.to_list() for c in self.coeffs]})"


class RightPolynomial(_Polynomial):
    """``f(z) = sum_i z^i coeffs[i]``."""

    __slots__ = ()

    def __call__(self, z: Quaternion) -> Quaternion:
        return evaluate_right(self, z)


class LeftPolynomial(_Polynomial):
    """``f(z) = sum_i coeffs[i] z^i``."""

    __slots__ = ()

    def __call__(self, z: Quaternion) -> Quaternion:
        return evaluate_left(self, z)


def monomial_minus(a: Quaternion) -> RightPolynomial:
    """The linear right polynomial ``z - a``."""
    return RightPolynomial([-a, ONE])


def evaluate_right(f: RightPolynomial, z: Quaternion) -> Quaternion:
    # a0 + z (a1 + z (a2 + ...)): z stays on the left of every coefficient
    acc = ZERO
    for c in reversed(f.coeffs):
        acc = q_mul(z, acc) + c
    return acc


def evaluate_left(f: LeftPolynomial, z: Quaternion) -> Quaternion:
    acc = ZERO
    for c in reversed(f.coeffs):
        acc = q_mul(acc, z) + c
    return acc


def star_product(f: RightPolynomial, g: RightPolynomial) -> RightPolynomial:
    """Convolution product: ``c_k = sum_{i+j=k} f_i g_j`` with ``f_i`` on the left."""
    out = [ZERO] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = out[i + j] + q_mul(a, b)
    return RightPolynomial(out)


def normalize_monic(f: RightPolynomial) -> RightPolynomial:
    """Right-multiply every coefficient by the inverse of the leading one.

    ``f(z) c = 0`` iff ``f(z) = 0``, so the zero set is unchanged.
    """
    lead = f.leading
    if lead.is_zero():
        raise ZeroLeading("leading coefficient is zero")
    if lead == ONE:
        return f
    inv = q_inv(lead)
    cs = [q_mul(c, inv) for c in f.coeffs[:-1]]
    return RightPolynomial(cs + [ONE])


def deflate_zero_constant(f: RightPolynomial) -> tuple[RightPolynomial, int]:
    """Split ``f = z^k * g`` with ``g(0) != 0``; returns ``(g, k)``."""
    k = 0
    while f.coeffs[k].is_zero():
        k += 1
    return RightPolynomial(f.coeffs[k:]), k


def auxiliary_coefficients(f: RightPolynomial) -> list[Quaternion]:
    """``[v_1, ..., v_n]`` with ``v_j = q_j q_n - q_(j-1)`` and ``q_0 = 0``."""
    n = f.degree
    qn = f.q(n)
    return [q_mul(f.q(j), qn) - f.q(j - 1) for j in range(1, n + 1)]


def _check_bound_input(f: RightPolynomial, min_degree: int = 2) -> None:
    if not f.is_monic():
        raise PreconditionViolation("polynomial must be monic")
    if f.degree < min_degree:
        raise PreconditionViolation(f"degree {f.degree} < {min_degree}")
    if f.coeffs[0].is_zero():
        raise PreconditionViolation("constant term must be nonzero (deflate first)")


def auxiliary_polynomial(f: RightPolynomial) -> RightPolynomial:
    """``z^(n+1) - z^(n-1) v_n - ... - z v_2 - v_1``.

    This is ``-(f * (q_n - z))``; its zeros are those of ``f`` plus ``q_n``.
    """
    _check_bound_input(f)
    v = auxiliary_coefficients(f)
    return RightPolynomial([-vj for vj in v] + [ZERO, ONE])


def power_sum_right(f: RightPolynomial, z: Quaternion) -> Quaternion:
    """Direct ``sum z^i a_i`` without nesting; used to cross-check :func:`evaluate_right`."""
    terms = []
    zp = ONE
    for c in f.coeffs:
        terms.append(q_mul(zp, c))
        zp = q_mul(zp, z)
    return q_sum(terms)

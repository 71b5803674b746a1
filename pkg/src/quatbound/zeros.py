"""Zero oracle for right quaternion polynomials.

The method is independent of companion matrices and norms.  For
``f(z) = sum z^i a_i`` the real polynomial ``p_k = sum_{i+j=k} conj(a_i) a_j``
vanishes at a complex number ``s + t i`` whenever ``f`` has a zero in the
conjugacy class ``{s + t u : u unit pure}``.  Each candidate class is then
settled by reducing ``f`` modulo ``z^2 - 2 s z + s^2 + t^2``, which turns
``f`` into ``z B + C`` on the whole class:

* ``B = C = 0``: every point of the class is a zero (spherical),
* ``B != 0``: the single candidate ``z = -C B^-1``, accepted on its residual,
* otherwise: no zero in the class.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, NonRealCoefficient, PreconditionViolation
from .qpoly import (
    RightPolynomial,
    deflate_zero_constant,
    evaluate_right,
    monomial_minus,
    normalize_monic,
    star_product,
)
from .quat import ONE, ZERO, Quaternion, q_abs, q_conj, q_inv, q_mul

RESIDUAL_TOL = 1e-8
B_TOL = 1e-10
MERGE_TOL = 1e-7
CLUSTER_TOL = 1e-6


def residual_tol() -> float:
    """Relative residual threshold; ``QUATBOUND_TOL`` overrides the default."""
    raw = os.environ.get("QUATBOUND_TOL")
    if raw is None:
        return RESIDUAL_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise PreconditionViolation(f"QUATBOUND_TOL={raw!r} is not a number") from None
    if not (tol > 0 and math.isfinite(tol)):
        raise PreconditionViolation(f"QUATBOUND_TOL={raw!r} must be positive")
    return tol


class ZeroKind(enum.Enum):
    ISOLATED = "ISOLATED"
    SPHERICAL = "SPHERICAL"
    REAL = "REAL"
    NONE = "NONE"


@dataclass(frozen=True)
class ZeroClass:
    s: float
    t: float
    kind: ZeroKind
    witness: Quaternion
    residual: float

    @property
    def modulus(self) -> float:
        return math.hypot(self.s, self.t)

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "kind": self.kind.value,
            "witness": self.witness.to_list(),
            "residual": self.residual,
        }


@dataclass(frozen=True)
class ZeroSet:
    classes: tuple[ZeroClass, ...]
    max_modulus: float
    empty: bool

    def zeros(self) -> list[ZeroClass]:
        return [c for c in self.classes if c.kind is not ZeroKind.NONE]

    def to_dict(self) -> dict:
        return {
            "classes": [c.to_dict() for c in self.classes],
            "max_modulus": self.max_modulus,
            "empty": self.empty,
        }


def residual_scale(f: RightPolynomial, z: Quaternion) -> float:
    """``1 + sum |a_i| |z|^i``, the natural size of ``f(z)``."""
    r = q_abs(z)
    return 1.0 + sum(q_abs(c) * r**i for i, c in enumerate(f.coeffs))


def companion_polynomial(f: RightPolynomial) -> np.ndarray:
    """Ascending real coefficients of ``sum_{i+j=k} conj(a_i) a_j``."""
    a = f.coeffs
    n = len(a)
    scale = sum(q_abs(c) for c in a) ** 2
    out = np.zeros(2 * n - 1)
    for k in range(2 * n - 1):
        acc = ZERO
        for i in range(max(0, k - n + 1), min(k, n - 1) + 1):
            acc = acc + q_mul(q_conj(a[i]), a[k - i])
        if max(abs(acc.x), abs(acc.y), abs(acc.z)) > 1e-12 * scale:
            raise NonRealCoefficient(f"coefficient {k} of the companion polynomial is {acc}")
        out[k] = acc.w
    return out


def _cluster(roots: np.ndarray, tol: float) -> list[tuple[complex, int]]:
    """Group roots closer than ``tol * max(1, |r|)`` and average each group."""
    remaining = sorted(roots.tolist(), key=lambda r: (r.real, r.imag))
    groups: list[list[complex]] = []
    for r in remaining:
        for g in groups:
            c = sum(g) / len(g)
            if abs(r - c) <= tol * max(1.0, abs(c)):
                g.append(r)
                break
        else:
            groups.append([r])
    return [(complex(sum(g) / len(g)), len(g)) for g in groups]


def _polish(p_desc: np.ndarray, r: complex, steps: int = 3) -> complex:
    dp = np.polyder(p_desc)
    best, best_res = r, abs(np.polyval(p_desc, r))
    for _ in range(steps):
        d = np.polyval(dp, r)
        if d == 0:
            break
        r = r - np.polyval(p_desc, r) / d
        res = abs(np.polyval(p_desc, r))
        if res < best_res:
            best, best_res = r, res
    return complex(best)


def complex_roots(p: np.ndarray) -> list[complex]:
    """All complex roots of a real polynomial (ascending coefficients).

    Roots come from the eigenvalues of the companion matrix.  Clusters of
    nearby roots (multiple roots smeared by rounding) are replaced by their
    mean, which is accurate to working precision; simple roots get a few
    Newton steps.  The output is closed under conjugation.
    """
    p = np.trim_zeros(np.asarray(p, dtype=float), "b")
    if len(p) < 2:
        raise PreconditionViolation("degree must be >= 1")
    desc = p[::-1]
    try:
        raw = np.roots(desc)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"root extraction failed: {exc}") from exc
    if not np.all(np.isfinite(raw)):
        raise ConvergenceFailure("non-finite root")
    out: list[complex] = []
    for r, mult in _cluster(raw.astype(complex), CLUSTER_TOL):
        if mult == 1:
            r = _polish(desc, r)
        if abs(r.imag) <= CLUSTER_TOL * max(1.0, abs(r)):
            out.extend([complex(r.real, 0.0)] * mult)
        elif r.imag > 0:
            out.extend([r] * mult)
            out.extend([r.conjugate()] * mult)
    return out


def _reduce(f: RightPolynomial, s: float, t: float) -> tuple[Quaternion, Quaternion, float]:
    """``(B, C, scale)`` with ``f(z) = z B + C`` on the class of ``s + t i``."""
    norm = s * s + t * t
    beta, gamma = 0.0, 1.0
    B = ZERO
    C = ZERO
    scale = 1.0
    for a in f.coeffs:
        B = B + beta * a
        C = C + gamma * a
        scale += (abs(beta) + abs(gamma)) * q_abs(a)
        beta, gamma = 2.0 * s * beta + gamma, -norm * beta
    return B, C, scale


def classify_class(f: RightPolynomial, s: float, t: float) -> ZeroClass:
    if t < 0:
        raise PreconditionViolation("t must be nonnegative")
    tol = residual_tol()
    if t == 0.0:
        w = Quaternion(s)
        val = evaluate_right(f, w)
        res = q_abs(val)
        kind = ZeroKind.REAL if res <= tol * residual_scale(f, w) else ZeroKind.NONE
        return ZeroClass(s, 0.0, kind, w, res)

    B, C, scale = _reduce(f, s, t)
    if q_abs(B) > B_TOL * scale:
        w = q_mul(-C, q_inv(B))
        res = q_abs(evaluate_right(f, w))
        mismatch = abs(w.w - s) + abs(w.imag_abs - t)
        ok = res <= tol * residual_scale(f, w) and mismatch <= 1e-8 * (1.0 + q_abs(w))
        return ZeroClass(s, t, ZeroKind.ISOLATED if ok else ZeroKind.NONE, w, res)

    w = Quaternion(s, t)
    res = q_abs(evaluate_right(f, w))
    if q_abs(C) <= tol * scale and res <= tol * residual_scale(f, w):
        return ZeroClass(s, t, ZeroKind.SPHERICAL, w, res)
    return ZeroClass(s, t, ZeroKind.NONE, w, res)


def _candidate_classes(roots: list[complex]) -> list[tuple[float, float]]:
    out: list[tuple[float, float]] = []
    for r in sorted(roots, key=lambda r: (r.real, abs(r.imag))):
        s, t = float(r.real), float(abs(r.imag))
        if any(abs(s - s2) <= MERGE_TOL and abs(t - t2) <= MERGE_TOL for s2, t2 in out):
            continue
        out.append((s, t))
    return out


def find_zeros(f: RightPolynomial) -> ZeroSet:
    g, k = deflate_zero_constant(normalize_monic(f))
    classes: list[ZeroClass] = []
    if k:
        classes.append(ZeroClass(0.0, 0.0, ZeroKind.REAL, ZERO, 0.0))
    if g.degree >= 1:
        roots = complex_roots(companion_polynomial(g))
        for s, t in _candidate_classes(roots):
            classes.append(classify_class(g, s, t))
    classes.sort(key=lambda c: (c.s, c.t))
    found = [c.modulus for c in classes if c.kind is not ZeroKind.NONE]
    return ZeroSet(tuple(classes), max(found, default=0.0), not found)


def max_zero_modulus(f: RightPolynomial) -> float:
    return find_zeros(f).max_modulus


def random_quaternion(rng: np.random.Generator, max_abs: float) -> Quaternion:
    """Uniform direction, radius uniform in ``[0, max_abs]``."""
    v = rng.standard_normal(4)
    v /= np.linalg.norm(v)
    return Quaternion(*(v * max_abs * rng.uniform()))


def random_polynomial_with_known_zero(degree: int, seed: int, max_coeff: float):
    """Return ``((z - a) * h, a)`` for random ``a`` and random monic ``h``.

    Since ``z - a`` is the left factor, ``a`` is a zero of the product.
    Draws use numpy's PCG64 generator seeded with ``seed``.
    """
    if degree < 1:
        raise PreconditionViolation("degree must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    a = random_quaternion(rng, max_coeff)
    h = RightPolynomial([random_quaternion(rng, max_coeff) for _ in range(degree - 1)] + [ONE])
    return star_product(monomial_minus(a), h), a

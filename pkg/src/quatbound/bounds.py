"""Upper bounds on the moduli of zeros of monic right quaternion polynomials.

Closed forms (``f = z^n + z^(n-1) q_n + ... + z q_2 + q_1``, ``q_0 = q_-1 = 0``,
``v_j = q_j q_n - q_(j-1)``):

* ``cauchy``  ``1 + max |q_j|``
* ``t1``      ``sqrt(sum_j |q_j - q_(j-1)|^2) + sqrt(1 + sum_(j<n) |q_j|^2)``
* ``t2``      ``(1 + a + b + sum |q_j|^2)^(1/6)`` with ``a`` the squared norm of
  the last column of ``C^3`` and ``b = sum |q_j q_n - q_(j-1)|^2``
* ``t3``      ``(1 + 2 sum |v_j|^2)^(1/4)``
* ``t4``      ``(1 + g + 2 sum |v_j|^2)^(1/6)``

The numeric baselines are the 1, inf and Frobenius norms of the companion
matrix and ``||C^k||_2^(1/k)`` for ``k = 1, 2, 3``, for both the companion
matrix of ``f`` and of its auxiliary polynomial.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .companion import companion_power, companion_right
from .errors import PreconditionViolation
from .qmat import entry_norms, spectral_norm
from .qpoly import (
    RightPolynomial,
    _check_bound_input,
    auxiliary_coefficients,
    auxiliary_polynomial,
    deflate_zero_constant,
    normalize_monic,
)
from .quat import ZERO, q_abs, q_abs2, q_mul


class T4Variant(enum.Enum):
    THEOREM = "theorem"
    MATRIX = "matrix"


BOUND_NAMES = (
    "cauchy",
    "t1",
    "t2",
    "t3",
    "t4_theorem",
    "t4_matrix",
    "norm1",
    "norm_inf",
    "norm_fro",
    "spec1",
    "spec2",
    "spec3",
    "spec1_aux",
    "spec2_aux",
    "spec3_aux",
)

# entries whose soundness follows from the column-mask argument or a norm
# inequality; t4_theorem reorders a product and is carried for reference
SOUND_BOUNDS = tuple(name for name in BOUND_NAMES if name != "t4_theorem")


@dataclass(frozen=True)
class Inapplicable:
    reason: str

    def __str__(self):
        return f"inapplicable({self.reason})"


@dataclass
class BoundReport:
    entries: dict[str, object]
    best: float
    best_name: str | None
    alpha_t1: float | None = None
    alpha_t2: float | None = None
    beta_t2: float | None = None
    gamma_theorem: float | None = None
    gamma_matrix: float | None = None
    t4_variant: T4Variant = T4Variant.MATRIX
    degree: int = 0
    origin_zeros: int = 0
    notes: list[str] = field(default_factory=list)

    def applicable(self) -> dict[str, float]:
        return {k: v for k, v in self.entries.items() if isinstance(v, float)}

    def value(self, name: str) -> float | None:
        v = self.entries.get(name)
        return v if isinstance(v, float) else None

    @property
    def t4(self):
        return self.entries[f"t4_{self.t4_variant.value}"]

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "origin_zeros": self.origin_zeros,
            "t4_variant": self.t4_variant.value,
            "entries": {
                k: (v if isinstance(v, float) else str(v)) for k, v in self.entries.items()
            },
            "intermediates": {
                "alpha_t1": self.alpha_t1,
                "alpha_t2": self.alpha_t2,
                "beta_t2": self.beta_t2,
                "gamma_theorem": self.gamma_theorem,
                "gamma_matrix": self.gamma_matrix,
            },
            "best": self.best,
            "best_name": self.best_name,
            "notes": list(self.notes),
        }


def _require_monic(f: RightPolynomial) -> None:
    if not f.is_monic():
        raise PreconditionViolation("polynomial must be monic")


def cauchy_bound(f: RightPolynomial) -> float:
    _require_monic(f)
    return 1.0 + max((q_abs(c) for c in f.coeffs[:-1]), default=0.0)


def theorem1_alpha(f: RightPolynomial) -> float:
    n = f.degree
    return math.sqrt(sum(q_abs2(f.q(j) - f.q(j - 1)) for j in range(1, n + 1)))


def theorem1_bound(f: RightPolynomial) -> float:
    _check_bound_input(f)
    n = f.degree
    d = sum(q_abs2(f.q(j)) for j in range(1, n))
    return theorem1_alpha(f) + math.sqrt(1.0 + d)


def theorem2_terms(f: RightPolynomial) -> tuple[float, float]:
    """``(alpha, beta)`` of the cubic-power bound."""
    n = f.degree
    qn, qn1 = f.q(n), f.q(n - 1)
    qn2 = q_mul(qn, qn)
    alpha = 0.0
    beta = 0.0
    for j in range(1, n + 1):
        qj = f.q(j)
        entry = q_mul(qj, qn1) - q_mul(qj, qn2) + q_mul(f.q(j - 1), qn) - f.q(j - 2)
        alpha += q_abs2(entry)
        beta += q_abs2(q_mul(qj, qn) - f.q(j - 1))
    return alpha, beta


def theorem2_bound(f: RightPolynomial) -> float:
    _check_bound_input(f, 3)
    alpha, beta = theorem2_terms(f)
    s = sum(q_abs2(c) for c in f.coeffs[:-1])
    return (1.0 + alpha + beta + s) ** (1.0 / 6.0)


def theorem3_bound(f: RightPolynomial) -> float:
    _check_bound_input(f)
    v = auxiliary_coefficients(f)
    return (1.0 + 2.0 * sum(q_abs2(x) for x in v)) ** 0.25


def theorem4_gamma(f: RightPolynomial, variant=T4Variant.MATRIX) -> float:
    variant = T4Variant(variant)
    v = auxiliary_coefficients(f)
    n = len(v)

    def vv(j):
        # 1-based, v_(n+1) = 0
        return v[j - 1] if 1 <= j <= n else ZERO

    vn = vv(n)
    gamma = q_abs2(q_mul(vv(1), vn)) + q_abs2(q_mul(vv(2), vn))
    for j in range(1, n):
        if variant is T4Variant.THEOREM:
            term = vv(j) + q_mul(vn, vv(j + 2))
        else:
            term = vv(j) + q_mul(vv(j + 2), vn)
        gamma += q_abs2(term)
    return gamma


def theorem4_bound(f: RightPolynomial, variant=T4Variant.MATRIX) -> float:
    _check_bound_input(f)
    v = auxiliary_coefficients(f)
    gamma = theorem4_gamma(f, variant)
    return (1.0 + gamma + 2.0 * sum(q_abs2(x) for x in v)) ** (1.0 / 6.0)


def norm_bounds(f: RightPolynomial) -> dict[str, float]:
    _check_bound_input(f)
    C = companion_right(f)
    one, inf, fro = entry_norms(C)
    out = {"norm1": one, "norm_inf": inf, "norm_fro": fro}
    for suffix, M in (("", C), ("_aux", companion_right(auxiliary_polynomial(f)))):
        for k in (1, 2, 3):
            out[f"spec{k}{suffix}"] = spectral_norm(companion_power(M, k)) ** (1.0 / k)
    return out


def best_bound(f: RightPolynomial, t4_variant=T4Variant.MATRIX) -> BoundReport:
    """Normalize, deflate the origin, and evaluate every applicable bound.

    ``best`` is the minimum over the sound entries plus the selected Theorem-4
    variant.
    """
    t4_variant = T4Variant(t4_variant)
    g, k = deflate_zero_constant(normalize_monic(f))
    n = g.degree
    entries: dict[str, object] = {}
    notes: list[str] = []
    report = BoundReport(entries, 0.0, None, t4_variant=t4_variant, degree=n, origin_zeros=k)
    if k:
        notes.append(f"deflated {k} zero(s) at the origin")

    entries["cauchy"] = cauchy_bound(g)
    if n < 2:
        reason = "degree<2"
        for name in BOUND_NAMES[1:]:
            entries[name] = Inapplicable(reason)
    else:
        entries["t1"] = theorem1_bound(g)
        report.alpha_t1 = theorem1_alpha(g)
        if n >= 3:
            entries["t2"] = theorem2_bound(g)
            report.alpha_t2, report.beta_t2 = theorem2_terms(g)
        else:
            entries["t2"] = Inapplicable("degree<3")
            notes.append("t1, t3, t4 evaluated at degree 2, below the stated range n >= 3")
        entries["t3"] = theorem3_bound(g)
        report.gamma_theorem = theorem4_gamma(g, T4Variant.THEOREM)
        report.gamma_matrix = theorem4_gamma(g, T4Variant.MATRIX)
        entries["t4_theorem"] = theorem4_bound(g, T4Variant.THEOREM)
        entries["t4_matrix"] = theorem4_bound(g, T4Variant.MATRIX)
        entries.update(norm_bounds(g))

    report.entries = {name: entries[name] for name in BOUND_NAMES}
    candidates = [
        (v, name)
        for name, v in report.entries.items()
        if isinstance(v, float)
        and (name in SOUND_BOUNDS and name != "t4_matrix" or name == f"t4_{t4_variant.value}")
    ]
    if n == 0:
        # only the origin zeros remain
        report.best, report.best_name = 0.0, None
    else:
        report.best, report.best_name = min(candidates)
    report.notes = notes
    return report


def norm_domination(f: RightPolynomial, rtol: float = 1e-8) -> dict[str, tuple[float, float, bool]]:
    """Compare each closed form with the spectral norm it was derived from.

    Returns ``name -> (closed form power, spectral norm, holds)``.
    """
    _check_bound_input(f)
    C = companion_right(f)
    Caux = companion_right(auxiliary_polynomial(f))
    out = {}
    c1 = spectral_norm(C)
    t1 = theorem1_bound(f)
    out["t1"] = (t1, c1, t1 >= c1 - rtol * max(1.0, c1))
    if f.degree >= 3:
        c3 = spectral_norm(companion_power(C, 3))
        t2 = theorem2_bound(f) ** 3
        out["t2"] = (t2, c3, t2 >= c3 * (1 - rtol))
    a2 = spectral_norm(companion_power(Caux, 2))
    t3 = theorem3_bound(f) ** 2
    out["t3"] = (t3, a2, t3 >= a2 * (1 - rtol))
    a3 = spectral_norm(companion_power(Caux, 3))
    t4 = theorem4_bound(f, T4Variant.MATRIX) ** 3
    out["t4_matrix"] = (t4, a3, t4 >= a3 * (1 - rtol))
    return out

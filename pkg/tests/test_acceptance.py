"""Exit criteria. Each test records one PASS/FAIL line shown in the terminal summary."""

import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from quatbound.bounds import (
    T4Variant,
    best_bound,
    cauchy_bound,
    norm_domination,
    theorem1_bound,
    theorem2_bound,
    theorem3_bound,
    theorem4_bound,
)
from quatbound.companion import Decomposition, decomposition_parts, lemma2_matrix
from quatbound.qmat import conj_transpose, mat_mul, spectral_norm
from quatbound.qpoly import RightPolynomial, evaluate_right, monomial_minus, star_product
from quatbound.quat import I, J, ONE, Quaternion, q_abs, q_abs2, q_mul
from quatbound.zeros import (
    ZeroKind,
    find_zeros,
    random_polynomial_with_known_zero,
    residual_scale,
)

from conftest import ACCEPTANCE_LINES, rand_matrix, rand_monic, rand_quat, rpoly

SWEEP_ARGS = ["verify", "--degrees", "3,4,5,6,7,8", "--trials", "1000", "--seed", "1", "--max-coeff", "5"]


def record(label, ok, detail=""):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
    assert ok, f"{label}: {detail}"


@pytest.fixture(scope="module")
def sweeps():
    """Two independent runs of the criterion-1 sweep, each timed on its own."""
    cmd = [sys.executable, "-m", "quatbound", *SWEEP_ARGS]
    results = []
    for _ in range(2):
        start = time.perf_counter()
        p = subprocess.run(cmd, capture_output=True)
        results.append((p.returncode, p.stdout, p.stderr, time.perf_counter() - start))
    return results


@pytest.fixture(scope="module")
def polys500():
    rng = np.random.default_rng(500)
    return [
        rand_monic(rng, int(rng.integers(3, 9)), scale=float(rng.uniform(0.1, 5)))
        for _ in range(500)
    ]


def test_c1_soundness_sweep(sweeps):
    code, out, err, elapsed = sweeps[0]
    summary = json.loads(out)
    ok = code == 0 and summary["failed"] == 0 and summary["passed"] == 6000 and elapsed < 120
    record(
        "C1 soundness sweep",
        ok,
        f"{summary['passed']}/{summary['total']} pass, exit {code}, {elapsed:.1f}s",
    )


def test_c2_hand_values():
    z2, z3 = rpoly(1, 0, 1), rpoly(1, 0, 0, 1)
    checks = [
        (cauchy_bound(z2), 2.0),
        (theorem1_bound(z2), 2 * math.sqrt(2)),
        (theorem3_bound(z2), 3**0.25),
        (theorem4_bound(z2, T4Variant.MATRIX), 4 ** (1 / 6)),
        (theorem4_bound(z2, T4Variant.THEOREM), 4 ** (1 / 6)),
        (theorem1_bound(z3), 2 * math.sqrt(2)),
        (theorem2_bound(z3), 4 ** (1 / 6)),
        (theorem3_bound(z3), 3**0.25),
        (theorem4_bound(z3, T4Variant.MATRIX), 4 ** (1 / 6)),
        (theorem4_bound(z3, T4Variant.THEOREM), 4 ** (1 / 6)),
    ]
    worst = max(abs(a - b) for a, b in checks)
    record("C2 hand-derived values", worst <= 1e-12, f"max abs error {worst:.2e}")


def test_c3_lemma1():
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(2, 9))
        A = rand_matrix(rng, n, n, scale=float(rng.uniform(0.1, 10)))
        s = spectral_norm(A)
        AH = conj_transpose(A)
        worst = max(
            worst,
            abs(s**2 - spectral_norm(mat_mul(AH, A))) / s**2,
            abs(s**2 - spectral_norm(mat_mul(A, AH))) / s**2,
            abs(s - spectral_norm(AH)) / s,
        )
    record("C3 Lemma 1 identities", worst <= 1e-8, f"max rel error {worst:.2e} over 200 matrices")


def test_c4_lemma2():
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(3, 11))
        f = rand_monic(rng, n, scale=float(rng.uniform(0.1, 5)))
        d = sum(q_abs2(f.q(j)) for j in range(1, n))
        worst = max(worst, abs(spectral_norm(lemma2_matrix(f)) ** 2 - (1 + d)) / (1 + d))
    record("C4 Lemma 2 equality", worst <= 1e-8, f"max rel error {worst:.2e} over 200 cases")


def test_c5_norm_domination(polys500):
    bad = []
    for f in polys500:
        for name, (lhs, rhs, ok) in norm_domination(f, rtol=1e-8).items():
            if not ok:
                bad.append((name, lhs, rhs))
    record("C5 norm domination", not bad, f"{len(bad)} violations over 500 polynomials x 4 checks")


def test_c6_decomposition_exactness(polys500):
    bad = 0
    count = 0
    for f in polys500:
        for which in Decomposition:
            parts = decomposition_parts(f, which)
            count += 1
            if not (parts.sums_exactly() and parts.cross_products_vanish()):
                bad += 1
    record("C6 decomposition exactness", bad == 0, f"{bad}/{count} decompositions inexact")


def test_c7_oracle_integrity():
    rng = np.random.default_rng(7)
    f = rpoly(1, 0, 1)
    zs = find_zeros(f)
    (c,) = zs.classes
    sphere_ok = c.kind is ZeroKind.SPHERICAL and abs(c.s) < 1e-12 and abs(c.t - 1) < 1e-12
    for _ in range(8):
        v = rng.standard_normal(3)
        w = Quaternion(c.s, *(c.t * v / np.linalg.norm(v)))
        sphere_ok &= q_abs(evaluate_right(f, w)) <= 1e-8 * residual_scale(f, w)

    prod = find_zeros(star_product(monomial_minus(I), monomial_minus(2 * J)))
    pair_ok = [k.kind for k in prod.classes] == [ZeroKind.ISOLATED] * 2 and np.allclose(
        sorted(k.modulus for k in prod.classes), [1, 2], atol=1e-12
    )

    missing = 0
    for degree in range(1, 9):
        for seed in range(25):
            g, a = random_polynomial_with_known_zero(degree, 1000 * degree + seed, 5.0)
            hit = [
                k
                for k in find_zeros(g).zeros()
                if abs(k.s - a.w) < 1e-7 * (1 + q_abs(a)) and abs(k.t - a.imag_abs) < 1e-7 * (1 + q_abs(a))
            ]
            if not hit or hit[0].residual > 1e-8 * residual_scale(g, hit[0].witness):
                missing += 1
    record(
        "C7 oracle integrity",
        sphere_ok and pair_ok and missing == 0,
        f"sphere={sphere_ok} isolated-pair={pair_ok} planted misses={missing}/200",
    )


def test_c8_theorem_a1():
    rng = np.random.default_rng(8)
    worst = 0.0
    for _ in range(200):
        f = RightPolynomial([rand_quat(rng) for _ in range(int(rng.integers(1, 5)))] + [ONE])
        g = RightPolynomial([rand_quat(rng) for _ in range(int(rng.integers(1, 6)))])
        fg = star_product(f, g)
        for c in find_zeros(f).zeros():
            worst = max(worst, q_abs(evaluate_right(fg, c.witness)) / residual_scale(fg, c.witness))

    real_f = RightPolynomial([Quaternion(x) for x in rng.standard_normal(4)])
    g = RightPolynomial([rand_quat(rng) for _ in range(4)])
    fg = star_product(real_f, g)
    worst_pt = 0.0
    for _ in range(100):
        z = rand_quat(rng)
        diff = evaluate_right(fg, z) - q_mul(evaluate_right(real_f, z), evaluate_right(g, z))
        worst_pt = max(worst_pt, q_abs(diff) / residual_scale(fg, z))
    record(
        "C8 Theorem A1",
        worst <= 1e-8 and worst_pt <= 1e-12,
        f"max scaled residual {worst:.2e}; pointwise {worst_pt:.2e}",
    )


def test_c9_determinism(sweeps):
    (c1, out1, _, _), (c2, out2, _, _) = sweeps
    record("C9 determinism", c1 == c2 == 0 and out1 == out2, f"{len(out1)} bytes, identical={out1 == out2}")

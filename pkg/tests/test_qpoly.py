import numpy as np
import pytest

from quatbound.errors import PreconditionViolation, ZeroPolynomial
from quatbound.qpoly import (
    LeftPolynomial,
    RightPolynomial,
    auxiliary_polynomial,
    deflate_zero_constant,
    evaluate_left,
    evaluate_right,
    monomial_minus,
    normalize_monic,
    power_sum_right,
    star_product,
)
from quatbound.quat import I, J, K, ONE, ZERO, Quaternion, q_abs, q_mul
from quatbound.zeros import find_zeros

from conftest import rand_monic, rand_quat, rpoly


def scale_of(f, z):
    return 1.0 + sum(q_abs(c) * q_abs(z) ** i for i, c in enumerate(f.coeffs))


def test_constructor_trims_and_rejects_zero():
    f = RightPolynomial([ONE, ZERO, ONE, ZERO, ZERO])
    assert f.degree == 2
    assert f.is_monic()
    with pytest.raises(ZeroPolynomial):
        RightPolynomial([ZERO, ZERO])
    with pytest.raises(ZeroPolynomial):
        RightPolynomial([])


def test_evaluate_right_examples(rng):
    assert evaluate_right(rpoly(1, 0, 1), J) == ZERO
    # z i at z = j is j i = -k
    assert evaluate_right(RightPolynomial([ZERO, I]), J) == -K
    f = rand_monic(rng, 4)
    assert evaluate_right(f, ZERO) == f.coeffs[0]


def test_evaluate_left_examples(rng):
    assert evaluate_left(LeftPolynomial([ZERO, I]), J) == K
    f = LeftPolynomial([rand_quat(rng) for _ in range(3)])
    assert evaluate_left(f, ZERO) == f.coeffs[0]
    real = [Quaternion(c) for c in rng.standard_normal(5)]
    fl, fr = LeftPolynomial(real), RightPolynomial(real)
    for _ in range(50):
        z = rand_quat(rng)
        assert q_abs(evaluate_left(fl, z) - evaluate_right(fr, z)) < 1e-13 * scale_of(fr, z)


def test_left_and_right_differ():
    coeffs = [ZERO, I]
    assert evaluate_left(LeftPolynomial(coeffs), J) != evaluate_right(RightPolynomial(coeffs), J)


def test_nested_matches_power_sum(rng):
    for _ in range(100):
        f = RightPolynomial([rand_quat(rng) for _ in range(int(rng.integers(1, 8)))])
        z = rand_quat(rng)
        assert q_abs(evaluate_right(f, z) - power_sum_right(f, z)) <= 1e-12 * scale_of(f, z)


def test_star_product_examples(rng):
    assert star_product(monomial_minus(I), rpoly(I, 1)) == rpoly(1, 0, 1)
    f = rand_monic(rng, 3)
    assert star_product(f, rpoly(1)) == f


def test_star_product_real_left_factor_is_pointwise(rng):
    f = RightPolynomial([Quaternion(c) for c in rng.standard_normal(4)])
    g = RightPolynomial([rand_quat(rng) for _ in range(3)])
    fg = star_product(f, g)
    for _ in range(100):
        z = rand_quat(rng)
        lhs = evaluate_right(fg, z)
        rhs = q_mul(evaluate_right(f, z), evaluate_right(g, z))
        assert q_abs(lhs - rhs) <= 1e-12 * scale_of(fg, z)


def test_star_product_not_pointwise_in_general():
    f, g = monomial_minus(I), monomial_minus(J)
    z = K
    assert evaluate_right(star_product(f, g), z) != q_mul(evaluate_right(f, z), evaluate_right(g, z))


def test_star_product_associative_and_degree(rng):
    for _ in range(30):
        f, g, h = (RightPolynomial([rand_quat(rng) for _ in range(int(rng.integers(1, 6)))]) for _ in range(3))
        a = star_product(star_product(f, g), h)
        b = star_product(f, star_product(g, h))
        assert a.degree == b.degree == f.degree + g.degree + h.degree
        scale = max(q_abs(c) for c in a.coeffs)
        assert max(q_abs(x - y) for x, y in zip(a.coeffs, b.coeffs)) < 1e-12 * scale


def test_theorem_a1_left_factor(rng):
    for _ in range(30):
        f = rand_monic(rng, int(rng.integers(1, 4)))
        g = RightPolynomial([rand_quat(rng) for _ in range(int(rng.integers(1, 4)))])
        fg = star_product(f, g)
        for c in find_zeros(f).zeros():
            assert q_abs(evaluate_right(fg, c.witness)) <= 1e-9 * scale_of(fg, c.witness)


def test_normalize_monic():
    assert normalize_monic(rpoly(2, 0, 2)) == rpoly(1, 0, 1)
    f = rpoly(K, 1)
    assert normalize_monic(f) is f
    # z j + k -> z + k j^-1 = z - k j = z + i
    assert normalize_monic(RightPolynomial([K, J])) == RightPolynomial([I, ONE])


def test_normalize_preserves_zeros(rng):
    for _ in range(50):
        f = RightPolynomial([rand_quat(rng) for _ in range(3)])
        g = normalize_monic(f)
        assert g.is_monic()
        for c in find_zeros(g).zeros():
            assert q_abs(evaluate_right(f, c.witness)) <= 1e-8 * scale_of(f, c.witness)


def test_deflate():
    assert deflate_zero_constant(rpoly(0, 1, 0, 1)) == (rpoly(1, 0, 1), 1)
    assert deflate_zero_constant(rpoly(1, 0, 1)) == (rpoly(1, 0, 1), 0)
    assert deflate_zero_constant(rpoly(0, 0, 1)) == (rpoly(1), 2)


def test_auxiliary_examples():
    assert auxiliary_polynomial(rpoly(1, 0, 1)) == rpoly(0, 1, 0, 1)
    # v = (0, -1, 0): z^4 - z^2 v_3 - z v_2 - v_1 = z^4 + z
    assert auxiliary_polynomial(rpoly(1, 0, 0, 1)) == rpoly(0, 1, 0, 0, 1)
    with pytest.raises(PreconditionViolation):
        auxiliary_polynomial(rpoly(1, 0, 2))
    with pytest.raises(PreconditionViolation):
        auxiliary_polynomial(rpoly(0, 1, 1))


def test_auxiliary_is_negated_star_product(rng):
    for n in range(2, 7):
        f = rand_monic(rng, n)
        qn = f.coeffs[-2]
        prod = star_product(f, RightPolynomial([qn, -ONE]))
        aux = auxiliary_polynomial(f)
        assert aux.degree == n + 1
        assert max(q_abs(a + b) for a, b in zip(aux.coeffs, prod.coeffs)) < 1e-12 * (1 + q_abs(qn)) ** 2 * 10


def test_auxiliary_contains_zeros(rng):
    for _ in range(50):
        f = rand_monic(rng, 3, scale=2.0)
        aux = auxiliary_polynomial(f)
        for c in find_zeros(f).zeros():
            assert q_abs(evaluate_right(aux, c.witness)) <= 1e-9 * scale_of(aux, c.witness)


def test_auxiliary_extra_zero_is_conjugate_of_qn(rng):
    # the extra zero is f(z0) q_n f(z0)^-1, in the class of q_n but not q_n itself
    for _ in range(20):
        f = rand_monic(rng, 3)
        qn = f.coeffs[-2]
        aux_classes = find_zeros(auxiliary_polynomial(f)).zeros()
        f_classes = find_zeros(f).zeros()
        assert len(aux_classes) == len(f_classes) + 1
        assert any(abs(c.s - qn.w) < 1e-7 and abs(c.t - qn.imag_abs) < 1e-7 for c in aux_classes)


def test_paper_index_view():
    f = rpoly(5, 6, 7, 1)
    assert f.q(0) == ZERO and f.q(-1) == ZERO
    assert f.q(1) == Quaternion(5) and f.q(3) == Quaternion(7) and f.q(4) == ONE


def test_json_shape():
    assert rpoly(1, 0, 1).to_dict() == {"coefficients": [[1, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]]}

"""Upper bounds for the zeros of quaternion polynomials, with a zero oracle to check them."""

from .bounds import (
    BoundReport,
    T4Variant,
    best_bound,
    cauchy_bound,
    norm_bounds,
    theorem1_bound,
    theorem2_bound,
    theorem3_bound,
    theorem4_bound,
)
from .companion import companion_left, companion_power, companion_right, decomposition_parts
from .qmat import QMatrix, complex_adjoint, conj_transpose, entry_norms, mat_mul, right_spectral_radius, spectral_norm
from .qpoly import (
    LeftPolynomial,
    RightPolynomial,
    auxiliary_polynomial,
    deflate_zero_constant,
    evaluate_left,
    evaluate_right,
    normalize_monic,
    star_product,
)
from .quat import I, J, K, ONE, ZERO, Quaternion, q_abs, q_conj, q_inv, q_mul
from .zeros import ZeroClass, ZeroKind, ZeroSet, find_zeros, max_zero_modulus, random_polynomial_with_known_zero

__version__ = "0.1.0"

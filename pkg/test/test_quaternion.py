import math

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from app.core.errors import DomainError, LengthMismatch
from app.core.quaternion import (
    I,
    J,
    K,
    ONE,
    ZERO,
    Quaternion,
    add,
    conj,
    embed,
    inner,
    left_matrix,
    mul,
    norm,
    qconj,
    qinner,
    qinner_real,
    qmatmul,
    qmul,
    qnorm,
    qsigma,
    sigma,
    to_quaternions,
    unembed,
)


# =========================
# 1. SCALAR OPERATIONS
# =========================

def test_add_is_componentwise():
    assert add(ONE, I) == Quaternion(1, 1, 0, 0)
    q = Quaternion(1, 2, 3, 4)
    assert add(q, ZERO) == q
    assert add(q, Quaternion(-1, -2, -3, -4)) == ZERO


def test_unit_products():
    assert mul(I, J) == K
    assert mul(J, I) == -K
    assert mul(J, K) == I
    assert mul(K, I) == J
    for unit in (I, J, K):
        assert mul(unit, unit) == -ONE
    assert mul(mul(I, J), K) == -ONE


def test_product_expansion():
    assert mul(ONE + I, ONE + J) == Quaternion(1, 1, 1, 1)


def test_product_with_conjugate_is_squared_norm():
    q = Quaternion(1, 1, 1, 1)
    assert mul(q, conj(q)) == Quaternion(4, 0, 0, 0)


def test_conjugate():
    assert conj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4)
    assert conj(conj(Quaternion(1, 2, 3, 4))) == Quaternion(1, 2, 3, 4)
    assert conj(Quaternion(5)) == Quaternion(5)


def test_norm():
    assert norm(Quaternion(1, 1, 1, 1)) == 2.0
    assert norm(ZERO) == 0.0
    assert abs(Quaternion(0, 3, 0, 4)) == 5.0


def test_sigma_values():
    assert sigma(Quaternion(2)) == ONE
    assert sigma(Quaternion(1, 1, 1, 1)) == Quaternion(0.5, 0.5, 0.5, 0.5)
    assert math.isclose(norm(sigma(Quaternion(0.3, -2, 7, 1e-3))), 1.0, abs_tol=1e-15)


def test_sigma_of_zero_raises():
    with pytest.raises(DomainError):
        sigma(ZERO)


def test_components_must_be_finite():
    with pytest.raises(DomainError):
        Quaternion(float("inf"))
    with pytest.raises(DomainError):
        Quaternion(0, float("nan"))


def test_operators_follow_functions():
    p, q = Quaternion(1, 2, 3, 4), Quaternion(-2, 0.5, 1, 0)
    assert p * q == mul(p, q)
    assert p + q == add(p, q)
    assert p - p == ZERO
    assert 2 * p == Quaternion(2, 4, 6, 8)
    assert p.re == 1 and p.ve == (2, 3, 4)


def test_inner_products():
    assert inner([I], [J]) == K
    x = [sigma(Quaternion(1, 2, 0, -1)), J, Quaternion(-1)]
    assert inner(x, x).isclose(Quaternion(3), atol=1e-12)


def test_inner_length_mismatch():
    with pytest.raises(LengthMismatch):
        inner([ONE, I], [ONE])


# =========================
# 2. ALGEBRAIC PROPERTIES (10,000 inputs)
# =========================

def _triple(rng, unit_quaternions):
    idx = rng.permutation(len(unit_quaternions))
    return unit_quaternions, unit_quaternions[idx], unit_quaternions[idx[::-1]]


def test_associativity(rng, unit_quaternions):
    a, b, c = _triple(rng, unit_quaternions)
    assert_allclose(qmul(qmul(a, b), c), qmul(a, qmul(b, c)), rtol=0, atol=1e-12)


def test_norm_is_multiplicative(rng):
    p = rng.normal(size=(10_000, 4))
    q = rng.normal(size=(10_000, 4))
    assert_allclose(qnorm(qmul(p, q)), qnorm(p) * qnorm(q), rtol=1e-12)


def test_conjugation_reverses_order_exactly(rng):
    p = rng.integers(-9, 10, size=(10_000, 4)).astype(float)
    q = rng.integers(-9, 10, size=(10_000, 4)).astype(float)
    assert_array_equal(qconj(qmul(p, q)), qmul(qconj(q), qconj(p)))


def test_sigma_is_idempotent(rng):
    q = rng.normal(size=(10_000, 4)) * rng.uniform(0.01, 100, size=(10_000, 1))
    once, valid = qsigma(q)
    twice, valid_again = qsigma(once)
    assert valid.all() and valid_again.all()
    assert_allclose(twice, once, rtol=0, atol=1e-12)
    assert_allclose(qnorm(once), 1.0, rtol=0, atol=1e-12)


def test_inner_is_hermitian(rng):
    x = rng.normal(size=(10_000, 5, 4))
    y = rng.normal(size=(10_000, 5, 4))
    assert_allclose(qinner(x, y), qconj(qinner(y, x)), rtol=0, atol=1e-12)


def test_real_part_of_inner_is_flat_dot_product(rng):
    x = rng.normal(size=(8, 4))
    y = rng.normal(size=(8, 4))
    assert math.isclose(qinner(x, y)[0], qinner_real(x, y), abs_tol=1e-12)
    assert math.isclose(qinner_real(x, y), float(x.ravel() @ y.ravel()), abs_tol=1e-12)


# =========================
# 3. ARRAY LEVEL AGAINST SCALAR LEVEL
# =========================

def test_array_product_matches_scalar_product(rng):
    p = rng.normal(size=(200, 4))
    q = rng.normal(size=(200, 4))
    expected = np.array([mul(a, b).as_tuple() for a, b in zip(to_quaternions(p), to_quaternions(q))])
    assert_allclose(qmul(p, q), expected, rtol=0, atol=1e-14)


def test_array_inner_matches_scalar_inner(rng):
    x = rng.normal(size=(6, 4))
    y = rng.normal(size=(6, 4))
    expected = inner(to_quaternions(x), to_quaternions(y)).to_array()
    assert_allclose(qinner(x, y), expected, rtol=0, atol=1e-12)


def test_qsigma_flags_degenerate_entries():
    a = np.array([[0.0, 0.0, 0.0, 0.0], [np.inf, 0.0, 0.0, 0.0], [np.nan, 1.0, 0.0, 0.0], [0.0, 3.0, 0.0, 4.0]])
    unit, valid = qsigma(a)
    assert_array_equal(valid, [False, False, False, True])
    assert_allclose(unit[3], [0.0, 0.6, 0.0, 0.8])


def test_left_matrix_multiplies_from_the_left(rng):
    p = rng.normal(size=(500, 4))
    q = rng.normal(size=(500, 4))
    assert_allclose(np.einsum("nij,nj->ni", left_matrix(p), q), qmul(p, q), rtol=0, atol=1e-12)


def test_matrix_product_matches_entrywise_sums(rng):
    a = rng.normal(size=(3, 5, 4))
    b = rng.normal(size=(5, 2, 4))
    expected = np.sum(qmul(a[:, :, None, :], b[None, :, :, :]), axis=1)
    assert_allclose(qmatmul(a, b), expected, rtol=0, atol=1e-12)


def test_embedding_is_a_homomorphism(rng):
    a = rng.normal(size=(4, 3, 4))
    b = rng.normal(size=(3, 4, 4))
    assert_allclose(embed(qmatmul(a, b)), embed(a) @ embed(b), rtol=0, atol=1e-12)
    assert_allclose(unembed(embed(a)), a, rtol=0, atol=0)


def test_matrix_product_dimension_mismatch(rng):
    with pytest.raises(LengthMismatch):
        qmatmul(rng.normal(size=(2, 3, 4)), rng.normal(size=(2, 3, 4)))


def test_qsigma_floor_marks_small_potentials_invalid():
    a = np.array([[5.5e-17, 0.0, 0.0, 0.0], [1e-9, 0.0, 0.0, 0.0], [0.0, 3.0, 0.0, 4.0]])
    unit, valid = qsigma(a, floor=np.array([1e-12, 1e-12, 5.0]))
    assert_array_equal(valid, [False, True, False])
    assert_allclose(unit[1], [1.0, 0.0, 0.0, 0.0])
    _, valid = qsigma(a, floor=1e-12)
    assert_array_equal(valid, [False, True, True])

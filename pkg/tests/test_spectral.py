"""Spectral module: path operators, eigensolver, closed forms."""

import math

import numpy as np
import pytest

from girthcut.spectral import (
    b_min_eigenvalue,
    beta_to_alpha,
    closed_form_w,
    min_eigenpair,
    path_operator,
    quadratic_form,
    sigma_closed_form,
)


def dense_operator(d: int, k: int, variant: str = "A") -> np.ndarray:
    """Independent dense construction straight from the definition."""
    a = 1.0 / math.sqrt(d)
    b = math.sqrt(d - 1.0) / d
    mat = np.zeros((k, k))
    for i in range(k - 1):
        coupling = a if (variant == "A" and i == 0) else b
        mat[i, i + 1] = mat[i + 1, i] = coupling
    return mat


def test_path_operator_entries():
    op = path_operator(4, 3, "A")
    assert op.a == pytest.approx(0.5, abs=0)
    assert op.b == pytest.approx(math.sqrt(3) / 4, abs=1e-16)
    assert list(op.offdiagonal()) == [op.a, op.b]

    op = path_operator(3, 2, "A")
    assert op.a == pytest.approx(1 / math.sqrt(3), abs=1e-16)
    assert op.b == pytest.approx(math.sqrt(2) / 3, abs=1e-16)

    op_b = path_operator(3, 5, "B")
    assert np.allclose(op_b.offdiagonal(), math.sqrt(2) / 3, atol=1e-16)


def test_path_operator_couplings_ordered():
    for d in range(3, 25):
        op = path_operator(d, 4)
        assert 0.0 < op.b <= op.a < 1.0


@pytest.mark.parametrize("d, k, variant", [(2, 3, "A"), (1, 1, "A"), (3, 0, "A"), (3, -1, "B")])
def test_path_operator_domain_errors(d, k, variant):
    with pytest.raises(ValueError):
        path_operator(d, k, variant)


def test_path_operator_unknown_variant():
    with pytest.raises(ValueError):
        path_operator(3, 3, "C")


def test_min_eigenpair_k1():
    pair = min_eigenpair(path_operator(5, 1))
    assert pair.value == 0.0
    assert np.array_equal(pair.vector, [1.0])


@pytest.mark.parametrize("d", range(3, 9))
def test_min_eigenpair_k2_exact(d):
    pair = min_eigenpair(path_operator(d, 2))
    assert pair.value == pytest.approx(-1 / math.sqrt(d), abs=1e-12)
    assert pair.vector[0] > 0  # sign convention
    assert np.allclose(pair.vector, [1 / math.sqrt(2), -1 / math.sqrt(2)], atol=1e-12)


def test_min_eigenpair_a3_d3():
    pair = min_eigenpair(path_operator(3, 3))
    assert pair.value == pytest.approx(-math.sqrt(5) / 3, abs=1e-12)


def test_oracle_equivalence_grid():
    for d in range(3, 11):
        for k in range(2, 13):
            pair = min_eigenpair(path_operator(d, k))
            oracle_vals, oracle_vecs = np.linalg.eigh(dense_operator(d, k))
            assert pair.value == pytest.approx(oracle_vals[0], abs=1e-10)
            overlap = abs(float(np.dot(pair.vector, oracle_vecs[:, 0])))
            assert overlap == pytest.approx(1.0, abs=1e-9)


def test_eigenpair_residual_and_norm_grid():
    for d in range(3, 21):
        for k in range(2, 31):
            op = path_operator(d, k)
            pair = min_eigenpair(op)
            assert abs(np.linalg.norm(pair.vector) - 1.0) <= 1e-12
            residual = dense_operator(d, k) @ pair.vector - pair.value * pair.vector
            assert np.abs(residual).max() <= 1e-12


def test_eigenvalue_bounded_and_monotone_in_k():
    for d in (3, 5, 11):
        previous = 0.0
        for k in range(2, 31):
            lam = min_eigenpair(path_operator(d, k)).value
            assert -1.0 <= lam < 0.0
            assert lam <= previous + 1e-13
            previous = lam


def test_b_min_eigenvalue_closed_form():
    assert b_min_eigenvalue(path_operator(3, 3, "B")) == pytest.approx(-2 / 3, abs=1e-15)
    assert b_min_eigenvalue(path_operator(7, 1, "B")) == pytest.approx(0.0, abs=1e-15)


def test_b_min_eigenvalue_matches_numeric():
    for d in range(3, 21):
        for k in range(2, 31):
            op = path_operator(d, k, "B")
            assert abs(min_eigenpair(op).value - b_min_eigenvalue(op)) <= 1e-12


def test_b_min_eigenvalue_variant_guard():
    with pytest.raises(ValueError):
        b_min_eigenvalue(path_operator(3, 3, "A"))


def test_closed_form_w_values():
    assert np.allclose(closed_form_w(3), [0.5, -1 / math.sqrt(2), 0.5], atol=1e-15)
    assert np.allclose(closed_form_w(1), [1.0], atol=1e-15)
    assert np.allclose(closed_form_w(2), [1 / math.sqrt(2), -1 / math.sqrt(2)], atol=1e-15)


def test_closed_form_w_is_b_eigenvector():
    for k in range(1, 41):
        w = closed_form_w(k)
        assert abs(np.linalg.norm(w) - 1.0) <= 1e-12
        for d in (3, 10):
            op = path_operator(d, k, "B")
            residual = dense_operator(d, k, "B") @ w - b_min_eigenvalue(op) * w
            assert np.abs(residual).max() <= 1e-12


def test_quadratic_form_examples():
    op = path_operator(3, 3)
    w = closed_form_w(3)
    a, b = op.a, op.b
    expected = 2 * (a - b) * w[0] * w[1] + 2 * b * math.cos(3 * math.pi / 4)
    assert quadratic_form(op, w) == pytest.approx(expected, abs=1e-15)
    assert expected == pytest.approx(-0.7415816, abs=5e-8)

    assert quadratic_form(op, np.zeros(3)) == 0.0

    op_b = path_operator(3, 3, "B")
    assert quadratic_form(op_b, w) == pytest.approx(b_min_eigenvalue(op_b), abs=1e-15)


def test_quadratic_form_length_mismatch():
    with pytest.raises(ValueError):
        quadratic_form(path_operator(3, 3), np.ones(4))


def test_sigma_closed_form_identity_grid():
    for d in range(3, 21):
        for k in range(2, 31):
            qf = quadratic_form(path_operator(d, k), closed_form_w(k))
            assert abs(sigma_closed_form(d, k) - qf) <= 1e-12


def test_sigma_closed_form_strictly_below_envelope():
    # The correction term is negative, so sigma sits strictly below the
    # uniform-coupling envelope -2 sqrt(d-1)/d cos(pi/(k+1)).
    for d in range(3, 21):
        for k in range(2, 31):
            envelope = -(2 * math.sqrt(d - 1) / d) * math.cos(math.pi / (k + 1))
            assert sigma_closed_form(d, k) < envelope


def test_minimum_chain_grid():
    # lambda_min(A_k) <= w^T A_k w <= lambda_min(B_k), with the middle value
    # strictly below the envelope.
    for d in range(3, 21):
        for k in range(2, 31):
            lam = min_eigenpair(path_operator(d, k)).value
            qf = quadratic_form(path_operator(d, k), closed_form_w(k))
            b_lam = b_min_eigenvalue(path_operator(d, k, "B"))
            assert lam <= qf + 1e-12
            assert qf <= b_lam + 1e-15


def test_sigma_closed_form_table_entry():
    value = sigma_closed_form(3, 3)
    b = math.sqrt(2) / 3
    assert math.floor(value / (-2 * b) * 1e5) / 1e5 == 0.78656


def test_sigma_closed_form_domain():
    with pytest.raises(ValueError):
        sigma_closed_form(2, 3)
    with pytest.raises(ValueError):
        sigma_closed_form(3, 1)


def test_beta_to_alpha_k2():
    beta = np.array([1 / math.sqrt(2), -1 / math.sqrt(2)])
    profile = beta_to_alpha(beta, 3)
    assert np.allclose(profile.alphas, [1 / math.sqrt(2), -1 / math.sqrt(6)], atol=1e-15)
    assert profile.sigma == pytest.approx(-1 / math.sqrt(3), abs=1e-15)


def test_beta_to_alpha_basis_vector():
    beta = np.zeros(5)
    beta[0] = 1.0
    profile = beta_to_alpha(beta, 4)
    assert np.allclose(profile.alphas, beta, atol=0)
    assert profile.sigma == 0.0


def test_beta_to_alpha_min_eigenvector():
    pair = min_eigenpair(path_operator(3, 3))
    profile = beta_to_alpha(pair.vector, 3)
    oracle = np.linalg.eigvalsh(dense_operator(3, 3))[0]
    assert profile.sigma == pytest.approx(oracle, abs=1e-12)
    assert profile.sigma == pytest.approx(-math.sqrt(5) / 3, abs=1e-12)


def test_beta_to_alpha_rejects_non_unit():
    with pytest.raises(ValueError):
        beta_to_alpha(np.array([1.0, 1.0]), 3)


def test_beta_to_alpha_norm_constraint_random():
    # Shell-weighted norm of alphas equals 1 for any unit beta.
    rng = np.random.default_rng(11)
    for d in (3, 4, 7):
        for k in (2, 3, 6, 10):
            beta = rng.normal(size=k)
            beta /= np.linalg.norm(beta)
            profile = beta_to_alpha(beta, d)
            shells = np.ones(k)
            shells[1:] = d * (d - 1.0) ** np.arange(k - 1)
            weighted = float(np.dot(shells, profile.alphas**2))
            assert weighted == pytest.approx(1.0, abs=1e-12)

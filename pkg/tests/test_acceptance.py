"""Acceptance suite: one test per primary criterion, pinned tolerances.

Each test prints a single PASS/FAIL line (visible with ``pytest -s``)
naming the criterion; pytest status reflects the same outcome.
"""

import functools
import io
import math
import time
from contextlib import redirect_stdout

import numpy as np

from girthcut.bounds import lyons_xi, normalized_value, relative_expectation, dominance_threshold
from girthcut.cli import main
from girthcut.graph import builtin
from girthcut.rounding import expected_cut_exact, gaussian_draw, monte_carlo, projections
from girthcut.solution import build_vectors, materialize, optimal_profile
from girthcut.spectral import (
    b_min_eigenvalue,
    closed_form_w,
    min_eigenpair,
    path_operator,
    quadratic_form,
    sigma_closed_form,
)

TABLE1_CSV = """k,d,xi_ev,xi_lyons
3,3,0.78656,0.75000
3,4,0.76180,0.72727
3,5,0.74883,0.71428
3,6,0.74085,0.70588
3,7,0.73543,0.70000
3,8,0.73151,0.69565
3,9,0.72855,0.69230
4,3,0.85927,0.81818
"""


def criterion(name):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                result = fn(*args, **kwargs)
            except BaseException:
                print(f"[FAIL] {name}")
                raise
            print(f"[PASS] {name}")
            return result

        return wrapper

    return decorate


@criterion("table-1 reproduction (16 values, 5-decimal truncation, < 1 s)")
def test_table1_reproduction():
    start = time.perf_counter()
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main(["table", "--format", "csv"])
    elapsed = time.perf_counter() - start
    assert code == 0
    assert buffer.getvalue() == TABLE1_CSV
    assert elapsed < 1.0


@criterion("closed-form spectral identities (1e-12 on d=3..20, k=2..30, < 1 s)")
def test_closed_form_spectral_identities():
    start = time.perf_counter()
    for d in range(3, 21):
        for k in range(2, 31):
            op_b = path_operator(d, k, "B")
            numeric = min_eigenpair(op_b).value
            closed = 2.0 * op_b.b * math.cos(k * math.pi / (k + 1))
            assert abs(numeric - closed) <= 1e-12

            qf = quadratic_form(path_operator(d, k, "A"), closed_form_w(k))
            assert abs(qf - sigma_closed_form(d, k)) <= 1e-12
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0


@criterion("inequality chain lam_min(A_k) <= w^T A_k w < envelope (d=3..20, k=2..30)")
def test_inequality_chain():
    for d in range(3, 21):
        for k in range(2, 31):
            lam = min_eigenpair(path_operator(d, k, "A")).value
            qf = quadratic_form(path_operator(d, k, "A"), closed_form_w(k))
            envelope = -(2.0 * math.sqrt(d - 1.0) / d) * math.cos(math.pi / (k + 1))
            assert lam <= qf + 1e-12
            assert qf < envelope
            # footnote chain: the quadratic form never exceeds the uniform
            # operator's minimum eigenvalue
            assert qf <= b_min_eigenvalue(path_operator(d, k, "B")) + 1e-15


@criterion("dominance grid xi_ev > xi_lyons (d=3..64, k=3..32) and thresholds")
def test_dominance_grid_and_thresholds():
    for d in range(3, 65):
        for k in range(3, 33):
            xi_ev = relative_expectation(sigma_closed_form(d, k), d)
            assert xi_ev > lyons_xi(d, k)
    assert abs(dominance_threshold(3) - 9.26) <= 0.01
    assert abs(dominance_threshold(4) - 3.82) <= 0.01
    assert abs(dominance_threshold(5) - 2.75) <= 0.01


@criterion("feasibility on cages: unit norms 1e-12, uniform products 1e-10, PSD -1e-9")
def test_feasibility_on_cages():
    for name, k in (("heawood", 3), ("tutte_coxeter", 4)):
        g = builtin(name)
        profile = optimal_profile(3, k)
        sol = build_vectors(g, profile, "strict")
        dense = materialize(sol)
        assert np.abs(np.linalg.norm(dense, axis=1) - 1.0).max() <= 1e-12
        lam = min_eigenpair(path_operator(3, k, "A")).value
        assert np.abs(sol.edge_products - lam).max() <= 1e-10
        gram = dense @ dense.T
        assert np.linalg.eigvalsh(gram).min() >= -1e-9


@criterion("rounding consistency: N=1e6 on heawood within 3 SE of 0.7677, < 30 s")
def test_rounding_consistency():
    sol = build_vectors(builtin("heawood"), optimal_profile(3, 3), "strict")
    exact_fraction = expected_cut_exact(sol) / sol.graph.m
    assert abs(exact_fraction - math.acos(-math.sqrt(5) / 3) / math.pi) <= 1e-12
    assert abs(exact_fraction - 0.7677) <= 1e-4
    start = time.perf_counter()
    report = monte_carlo(sol, 1_000_000, seed=42)
    elapsed = time.perf_counter() - start
    assert abs(report.mean_fraction - exact_fraction) <= 3 * report.std_error
    assert elapsed < 30.0


@criterion("factor-of-i.i.d. identity vs materialized dot products (1e-12, all builtins)")
def test_factor_identity_all_builtins():
    ks = {"petersen": 2, "heawood": 3, "pappus": 3, "mcgee": 3, "tutte_coxeter": 4}
    for name, k in ks.items():
        sol = build_vectors(builtin(name), optimal_profile(3, k), "strict")
        dense = materialize(sol)
        for seed in (0, 42):
            z = gaussian_draw(sol, seed, 0)
            x = projections(sol, seed, 0)
            assert np.abs(x - dense @ z).max() <= 1e-12


@criterion("normalized values: c_8 = 0.454 +/- 0.001 and c_inf = sqrt(2)/pi +/- 1e-3")
def test_normalized_values():
    c8 = normalized_value(8, sigma_closed_form(8, 3))
    assert abs(c8 - 0.454) <= 1e-3
    c_limit = normalized_value(10**6, sigma_closed_form(10**6, 3))
    assert abs(c_limit - math.sqrt(2) / math.pi) <= 1e-3

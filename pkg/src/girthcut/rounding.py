"""Hyperplane rounding: exact expectation and deterministic Monte Carlo.

A random hyperplane cut of the radial vector solution is sampled without
ever materializing the vectors: per sample, one i.i.d. standard normal z_j
is drawn per vertex and vertex i's projection is the weighted sum of z
over its ball.  This is the same distribution as projecting the explicit
vectors onto a random Gaussian direction.

Randomness is keyed by (seed, sample index, vertex index), so a report is
a pure function of (solution, N, seed): block size, worker count, and
execution order cannot change it.  Sample ties at exactly zero go to the
positive side.

The sampling loop runs on the compiled kernel when the extension built,
otherwise on the numpy fallback.  Set GIRTHCUT_KERNEL=python|compiled to
force a backend and GIRTHCUT_THREADS to cap sampler parallelism.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from types import ModuleType

import numpy as np

from . import _kernel_py
from .graph import Graph
from .solution import VectorSolution

try:
    from . import _kernel_cy
except ImportError:  # extension not built; numpy fallback only
    _kernel_cy = None

__all__ = [
    "Cut",
    "RoundingReport",
    "expected_cut_exact",
    "hyperplane_round",
    "monte_carlo",
    "cut_size",
    "gaussian_draw",
    "projections",
    "active_kernel",
    "kernel_name",
]

_MASK64 = (1 << 64) - 1


def active_kernel() -> ModuleType:
    """Kernel module in use; honors the GIRTHCUT_KERNEL override."""
    choice = os.environ.get("GIRTHCUT_KERNEL", "auto")
    if choice == "python":
        return _kernel_py
    if choice == "compiled":
        if _kernel_cy is None:
            raise RuntimeError("compiled kernel requested but the extension is not built")
        return _kernel_cy
    if choice == "auto":
        return _kernel_cy if _kernel_cy is not None else _kernel_py
    raise ValueError(f"GIRTHCUT_KERNEL must be 'python', 'compiled' or 'auto', got {choice!r}")


def kernel_name() -> str:
    return active_kernel().KERNEL_NAME


@dataclass(eq=False)
class Cut:
    """Two-sided vertex assignment (0/1 labels) and its cut size."""

    assignment: np.ndarray
    size: int


@dataclass(eq=False)
class RoundingReport:
    samples: int
    mean_fraction: float
    std_error: float
    best: Cut
    seed: int


def expected_cut_exact(solution: VectorSolution) -> float:
    """Exact expected cut size (1/pi) sum over edges of arccos(v_i . v_j)."""
    products = np.clip(solution.edge_products, -1.0, 1.0)
    return float(np.arccos(products).sum() / math.pi)


def gaussian_draw(solution: VectorSolution, seed: int, index: int = 0) -> np.ndarray:
    """The per-vertex i.i.d. normal draw z for one sample index."""
    kern = active_kernel()
    return kern.gaussian_matrix(seed & _MASK64, index, 1, solution.graph.n)[0]


def projections(solution: VectorSolution, seed: int, index: int = 0) -> np.ndarray:
    """Per-vertex projections x_i = sum over i's ball of weight * z_j."""
    kern = active_kernel()
    indptr, cols, weights = solution.projection_csr()
    return kern.projection_block(
        seed & _MASK64, index, 1, indptr, cols, weights, solution.graph.n
    )[0]


def _edge_endpoints(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    edges = g.edges
    return np.ascontiguousarray(edges[:, 0]), np.ascontiguousarray(edges[:, 1])


def hyperplane_round(solution: VectorSolution, seed: int, index: int = 0) -> Cut:
    """One rounded cut; vertex i joins side 1 when its projection is >= 0."""
    x = projections(solution, seed, index)
    labels = (x >= 0.0).astype(np.uint8)
    eu, ev = _edge_endpoints(solution.graph)
    size = int((labels[eu] != labels[ev]).sum())
    return Cut(assignment=labels, size=size)


def cut_size(g: Graph, assignment) -> int:
    """Number of edges whose endpoints get different labels."""
    labels = np.asarray(assignment)
    if labels.shape != (g.n,):
        raise ValueError(f"assignment must have length {g.n}, got shape {labels.shape}")
    labels = labels != 0
    eu, ev = _edge_endpoints(g)
    return int((labels[eu] != labels[ev]).sum())


def _resolve_threads(threads: int | None) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("GIRTHCUT_THREADS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"GIRTHCUT_THREADS must be an integer, got {env!r}") from None
    return min(4, os.cpu_count() or 1)


def monte_carlo(
    solution: VectorSolution,
    samples: int,
    seed: int = 0,
    threads: int | None = None,
) -> RoundingReport:
    """Round ``samples`` independent hyperplanes and aggregate statistics.

    Per-sample randomness is derived from (seed, sample index), so the
    report is identical for any worker count or block schedule.  With a
    single sample the standard error is reported as NaN.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    kern = active_kernel()
    indptr, cols, weights = solution.projection_csr()
    g = solution.graph
    eu, ev = _edge_endpoints(g)
    seed_key = seed & _MASK64

    nnz = cols.shape[0]
    block = max(1, min(8192, (1 << 22) // max(nnz, 1)))
    tasks = [(s0, min(block, samples - s0)) for s0 in range(0, samples, block)]

    def run(task: tuple[int, int]) -> np.ndarray:
        s0, cnt = task
        return kern.cut_size_block(seed_key, s0, cnt, indptr, cols, weights, eu, ev, g.n)

    nthreads = _resolve_threads(threads)
    if nthreads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            parts = list(pool.map(run, tasks))
    else:
        parts = [run(t) for t in tasks]
    sizes = np.concatenate(parts)

    mean_fraction = float(sizes.sum()) / (samples * g.m)
    if samples > 1:
        std_error = float(np.std(sizes / g.m, ddof=1) / math.sqrt(samples))
    else:
        std_error = math.nan

    best_index = int(np.argmax(sizes))
    best = hyperplane_round(solution, seed, best_index)
    if best.size != int(sizes[best_index]):
        raise ArithmeticError("best-cut replay disagrees with the sampled size")
    return RoundingReport(
        samples=samples,
        mean_fraction=mean_fraction,
        std_error=std_error,
        best=best,
        seed=int(seed),
    )

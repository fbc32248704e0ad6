"""Per-vertex unit vectors built from radial coefficient profiles.

Vertex i's vector assigns weight alpha_l to every vertex at distance l < k
from i and zero elsewhere.  Vectors are never materialized at full length;
everything downstream (edge inner products, rounding projections) works on
the truncated BFS balls, whose size is O(d (d-1)^(k-2)) regardless of n.

Two construction modes:

* strict: requires a verified certificate with girth >= 2k; every ball is
  then tree-like, vectors have unit norm analytically, and every edge
  inner product equals the profile's sigma.
* practical: any k on any regular graph; each vector is explicitly divided
  by its computed norm and edge products are whatever they are (no
  guarantee attaches).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CertificationError
from .graph import Graph, _ball_arrays, _common_degree, certify
from .spectral import (
    CoefficientProfile,
    beta_to_alpha,
    closed_form_w,
    min_eigenpair,
    path_operator,
)

__all__ = [
    "VectorSolution",
    "optimal_profile",
    "closed_form_profile",
    "build_vectors",
    "sdp_objective",
    "materialize",
]

_NORM_TOL = 1e-12
_EDGE_TOL = 1e-10


def optimal_profile(d: int, k: int) -> CoefficientProfile:
    """Best radial profile: scaled coefficients from the minimum eigenpair.

    ``sigma`` is the minimum eigenvalue itself, the most negative edge
    inner product any radius-k radial profile can achieve.
    """
    pair = min_eigenpair(path_operator(d, k, "A"))
    profile = beta_to_alpha(pair.vector, d)
    return CoefficientProfile(d=d, k=k, alphas=profile.alphas, sigma=pair.value)


def closed_form_profile(d: int, k: int) -> CoefficientProfile:
    """Closed-form profile from the sine eigenvector; no eigensolve needed.

    Slightly weaker than :func:`optimal_profile` (its sigma is the
    quadratic form of the sine vector, not the true minimum) but available
    in closed form for every k.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return beta_to_alpha(closed_form_w(k), d)


@dataclass
class VectorSolution:
    """Implicit unit vectors for every vertex plus cached edge products."""

    graph: Graph
    profile: CoefficientProfile
    mode: str
    norms: np.ndarray = field(repr=False)
    edge_products: np.ndarray = field(repr=False)
    # Flattened per-vertex balls: vertex i's support is cols[indptr[i]:indptr[i+1]]
    # with the (normalized) coefficients in weights at the same positions.
    _indptr: np.ndarray = field(repr=False)
    _cols: np.ndarray = field(repr=False)
    _weights: np.ndarray = field(repr=False)

    def projection_csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """CSR triple (indptr, cols, weights) used by the rounding kernels."""
        return self._indptr, self._cols, self._weights


def build_vectors(g: Graph, profile: CoefficientProfile, mode: str = "strict") -> VectorSolution:
    """Build the vector solution for ``profile`` on ``g``.

    Strict mode demands certify(g).k_max >= profile.k and matching degree;
    practical mode only demands d-regularity and renormalizes explicitly.
    """
    if mode not in ("strict", "practical"):
        raise ValueError(f"mode must be 'strict' or 'practical', got {mode!r}")
    k = profile.k
    if mode == "strict":
        cert = certify(g)
        d = cert.d
        if cert.k_max < k:
            raise CertificationError(
                f"girth {cert.girth} < 2k = {2 * k}: strict construction needs girth >= 2k"
            )
    else:
        d = _common_degree(g)
    if d != profile.d:
        raise CertificationError(
            f"profile is for degree {profile.d} but graph is {d}-regular"
        )

    n = g.n
    alphas = profile.alphas
    indptr = np.zeros(n + 1, dtype=np.int64)
    ball_verts: list[np.ndarray] = []
    ball_weights: list[np.ndarray] = []
    norms = np.ones(n)
    for i in range(n):
        verts, dists = _ball_arrays(g, i, k - 1)
        w = alphas[dists]
        nrm2 = float(np.dot(w, w))
        if mode == "strict":
            if abs(nrm2 - 1.0) > _NORM_TOL:
                raise ArithmeticError(
                    f"vertex {i}: strict-mode norm^2 = {nrm2!r} deviates from 1"
                )
        else:
            norms[i] = math.sqrt(nrm2)
            w = w / norms[i]
        ball_verts.append(verts)
        ball_weights.append(w)
        indptr[i + 1] = indptr[i] + verts.shape[0]

    cols = np.concatenate(ball_verts) if n else np.zeros(0, dtype=np.int64)
    weights = np.concatenate(ball_weights) if n else np.zeros(0)

    # Edge inner products over the intersection of the two supports.
    lookup = [dict(zip(v.tolist(), w.tolist()))
              for v, w in zip(ball_verts, ball_weights)]
    products = np.zeros(g.m)
    for e, (u, v) in enumerate(g.edges):
        du, dv = lookup[u], lookup[v]
        if len(dv) < len(du):
            du, dv = dv, du
        products[e] = sum(w * dv.get(x, 0.0) for x, w in du.items())

    if mode == "strict" and g.m:
        worst = np.abs(products - profile.sigma).max()
        if worst > _EDGE_TOL:
            raise ArithmeticError(
                f"strict-mode edge product deviates from sigma by {worst:.3e}"
            )

    for arr in (norms, products, indptr, cols, weights):
        arr.setflags(write=False)
    return VectorSolution(
        graph=g,
        profile=profile,
        mode=mode,
        norms=norms,
        edge_products=products,
        _indptr=indptr,
        _cols=cols,
        _weights=weights,
    )


def sdp_objective(solution: VectorSolution) -> float:
    """Relaxation objective (1/2) sum over edges of (1 - v_i . v_j)."""
    return 0.5 * float((1.0 - solution.edge_products).sum())


def materialize(solution: VectorSolution, max_n: int = 2000) -> np.ndarray:
    """Dense (n, n) matrix whose row i is the explicit vector of vertex i.

    Only sensible for small graphs (Gram checks, identity tests); refuses
    anything larger than ``max_n`` vertices.
    """
    n = solution.graph.n
    if n > max_n:
        raise ValueError(f"refusing to materialize {n} vectors of dimension {n}")
    indptr, cols, weights = solution.projection_csr()
    dense = np.zeros((n, n))
    for i in range(n):
        dense[i, cols[indptr[i]:indptr[i + 1]]] = weights[indptr[i]:indptr[i + 1]]
    return dense

"""Tridiagonal path operators and their minimum eigenpairs.

The common inner product achievable between adjacent unit vectors in the
radial construction is the minimum eigenvalue of a k x k symmetric
tridiagonal matrix with zero diagonal whose off-diagonal couplings are
determined by the degree d:

* variant "A": first coupling a = 1/sqrt(d), all remaining couplings
  b = sqrt(d-1)/d;
* variant "B": every coupling equal to b (a Toeplitz matrix whose spectrum
  is known in closed form).

The solver is self-contained: Sturm-sequence bisection for the eigenvalue
plus inverse iteration for the eigenvector.  numpy is used only as the
array container, never as an eigensolver, so tests can use a dense LAPACK
eigensolver as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PathOperator",
    "Eigenpair",
    "CoefficientProfile",
    "path_operator",
    "min_eigenpair",
    "b_min_eigenvalue",
    "closed_form_w",
    "quadratic_form",
    "sigma_closed_form",
    "beta_to_alpha",
]

# Smallest magnitude admitted for a pivot or Sturm iterate; the matrices
# have entries below 1, so this only guards exact-zero hits.
_PIVMIN = 1e-40

_BISECT_TOL = 1e-15
_RESIDUAL_TOL = 1e-12


@dataclass(frozen=True)
class PathOperator:
    """Symmetric tridiagonal operator with zero diagonal.

    ``a`` sits at position (0, 1) and ``b`` on every other off-diagonal
    entry; variant "B" uses ``b`` everywhere.
    """

    k: int
    d: int
    a: float
    b: float
    variant: str

    def offdiagonal(self) -> np.ndarray:
        """Off-diagonal couplings as a length k-1 array."""
        e = np.full(self.k - 1, self.b)
        if self.variant == "A" and self.k > 1:
            e[0] = self.a
        return e

    def to_dense(self) -> np.ndarray:
        """Dense k x k matrix, mainly for inspection."""
        m = np.zeros((self.k, self.k))
        e = self.offdiagonal()
        for i in range(self.k - 1):
            m[i, i + 1] = m[i + 1, i] = e[i]
        return m


@dataclass(frozen=True)
class Eigenpair:
    value: float
    vector: np.ndarray


@dataclass(frozen=True)
class CoefficientProfile:
    """Radial coefficients alpha_0..alpha_{k-1} defining every vertex vector.

    ``sigma`` is the common edge inner product the profile achieves on a
    d-regular graph of girth >= 2k.
    """

    d: int
    k: int
    alphas: np.ndarray
    sigma: float


def path_operator(d: int, k: int, variant: str = "A") -> PathOperator:
    """Construct the k x k path operator for degree ``d``.

    Raises ``ValueError`` for d < 3, k < 1 or an unknown variant.
    """
    if d < 3:
        raise ValueError(f"degree must be >= 3, got {d}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if variant not in ("A", "B"):
        raise ValueError(f"variant must be 'A' or 'B', got {variant!r}")
    a = 1.0 / math.sqrt(d)
    b = math.sqrt(d - 1.0) / d
    return PathOperator(k=k, d=d, a=a, b=b, variant=variant)


def _tridiagonal_apply(e: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Matrix-vector product using only the off-diagonal couplings."""
    out = np.zeros_like(x)
    out[:-1] += e * x[1:]
    out[1:] += e * x[:-1]
    return out


def _count_below(e2: np.ndarray, x: float) -> int:
    """Number of eigenvalues strictly below ``x`` (Sturm sequence count)."""
    count = 0
    q = -x
    if q < 0.0:
        count += 1
    for c in e2:
        if abs(q) < _PIVMIN:
            q = _PIVMIN if q >= 0.0 else -_PIVMIN
        q = -x - c / q
        if q < 0.0:
            count += 1
    return count


def _bisect_smallest(e2: np.ndarray) -> float:
    """Smallest eigenvalue via bisection on the Sturm count.

    Couplings are below 1, so all eigenvalues lie in (-2, 2).
    """
    lo, hi = -2.0, 2.0
    while hi - lo > _BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if _count_below(e2, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _solve_shifted(e: np.ndarray, lam: float, rhs: np.ndarray) -> np.ndarray:
    """Solve (T - lam*I) y = rhs by tridiagonal LU with partial pivoting.

    The shifted matrix is nearly singular by design (lam is an accurate
    eigenvalue); pivoting keeps the elimination stable and the large
    solution is exactly what inverse iteration wants.
    """
    k = rhs.shape[0]
    diag = np.full(k, -lam)
    sub = e.copy()
    sup = e.copy()
    sup2 = np.zeros(k - 2) if k > 2 else np.zeros(0)
    x = rhs.astype(float).copy()

    for i in range(k - 1):
        if abs(diag[i]) >= abs(sub[i]):
            if abs(diag[i]) < _PIVMIN:
                diag[i] = _PIVMIN
            f = sub[i] / diag[i]
            diag[i + 1] -= f * sup[i]
            x[i + 1] -= f * x[i]
        else:
            # Swap rows i and i+1, then eliminate.
            f = diag[i] / sub[i]
            diag[i] = sub[i]
            t = diag[i + 1]
            diag[i + 1] = sup[i] - f * t
            sup[i] = t
            if i < k - 2:
                sup2[i] = sup[i + 1]
                sup[i + 1] = -f * sup[i + 1]
            x[i], x[i + 1] = x[i + 1], x[i] - f * x[i + 1]

    if abs(diag[k - 1]) < _PIVMIN:
        diag[k - 1] = _PIVMIN
    x[k - 1] /= diag[k - 1]
    if k > 1:
        x[k - 2] = (x[k - 2] - sup[k - 2] * x[k - 1]) / diag[k - 2]
    for i in range(k - 3, -1, -1):
        x[i] = (x[i] - sup[i] * x[i + 1] - sup2[i] * x[i + 2]) / diag[i]
    return x


def _fix_sign(v: np.ndarray) -> np.ndarray:
    """Sign convention: first entry of non-negligible magnitude is positive."""
    scale = np.abs(v).max()
    for value in v:
        if abs(value) > 1e-12 * scale:
            return -v if value < 0.0 else v
    return v


def min_eigenpair(op: PathOperator) -> Eigenpair:
    """Algebraically smallest eigenvalue of ``op`` with a unit eigenvector.

    The eigenvalue comes from Sturm bisection (absolute accuracy well
    below 1e-14); the eigenvector from inverse iteration started at a
    fixed oscillating vector, normalized and sign-fixed.
    """
    if op.k == 1:
        return Eigenpair(0.0, np.ones(1))
    e = op.offdiagonal()
    lam = _bisect_smallest(e * e)

    # Minimum eigenvectors of these operators oscillate, so an alternating
    # start has large overlap; the taper avoids accidental orthogonality.
    v = np.array([(-1.0) ** i * (1.0 + 0.001 * i) for i in range(op.k)])
    v /= np.linalg.norm(v)
    for _ in range(4):
        v = _solve_shifted(e, lam, v)
        v /= np.linalg.norm(v)
        residual = np.abs(_tridiagonal_apply(e, v) - lam * v).max()
        if residual <= 1e-13:
            break
    v = _fix_sign(v)

    residual = np.abs(_tridiagonal_apply(e, v) - lam * v).max()
    if residual > _RESIDUAL_TOL:
        raise ArithmeticError(
            f"inverse iteration residual {residual:.3e} exceeds {_RESIDUAL_TOL}"
        )
    v.setflags(write=False)
    return Eigenpair(lam, v)


def b_min_eigenvalue(op: PathOperator) -> float:
    """Minimum eigenvalue of the uniform-coupling variant, in closed form.

    For the Toeplitz operator the spectrum is 2b*cos(j*pi/(k+1)); the
    smallest value is 2b*cos(k*pi/(k+1)).
    """
    if op.variant != "B":
        raise ValueError("closed-form eigenvalue applies to variant 'B' only")
    return 2.0 * op.b * math.cos(op.k * math.pi / (op.k + 1))


def closed_form_w(k: int) -> np.ndarray:
    """Closed-form minimum eigenvector of the uniform-coupling operator.

    Entry ``l`` is sqrt(2/(k+1)) * sin((l+1)*k*pi/(k+1)); the result has
    unit Euclidean norm.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ell = np.arange(1, k + 1, dtype=float)
    w = math.sqrt(2.0 / (k + 1)) * np.sin(ell * k * math.pi / (k + 1))
    w.setflags(write=False)
    return w


def quadratic_form(op: PathOperator, x: np.ndarray) -> float:
    """Evaluate x^T M x through the tridiagonal structure."""
    x = np.asarray(x, dtype=float)
    if x.shape != (op.k,):
        raise ValueError(f"vector of length {op.k} required, got shape {x.shape}")
    if op.k == 1:
        return 0.0
    e = op.offdiagonal()
    return float(2.0 * np.dot(e, x[:-1] * x[1:]))


def sigma_closed_form(d: int, k: int) -> float:
    """Edge inner product achieved by the closed-form coefficient choice.

    Algebraically identical to ``quadratic_form(A_k, closed_form_w(k))``:

        -(2 sqrt(d-1)/d) * ( cos(pi/(k+1))
            + (sqrt(d/(d-1)) - 1) * (2/(k+1)) * sin(pi/(k+1)) * sin(2 pi/(k+1)) )
    """
    if d < 3:
        raise ValueError(f"degree must be >= 3, got {d}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    t = math.pi / (k + 1)
    correction = (math.sqrt(d / (d - 1.0)) - 1.0) * (2.0 / (k + 1)) \
        * math.sin(t) * math.sin(2.0 * t)
    return -(2.0 * math.sqrt(d - 1.0) / d) * (math.cos(t) + correction)


def beta_to_alpha(beta: np.ndarray, d: int) -> CoefficientProfile:
    """Convert a unit vector of scaled coefficients to radial coefficients.

    alpha_0 = beta_0 and alpha_l = beta_l / sqrt(d (d-1)^(l-1)) for l >= 1,
    so the radial coefficients satisfy the shell-weighted unit-norm
    constraint alpha_0^2 + sum_l d (d-1)^(l-1) alpha_l^2 = 1.  ``sigma`` is
    the quadratic form of ``beta`` against the variant-"A" operator.
    """
    beta = np.asarray(beta, dtype=float)
    if beta.ndim != 1 or beta.shape[0] < 1:
        raise ValueError("beta must be a 1-d array of length >= 1")
    norm = np.linalg.norm(beta)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"beta must be a unit vector, got norm {norm!r}")
    if d < 3:
        raise ValueError(f"degree must be >= 3, got {d}")
    k = beta.shape[0]
    scale = np.ones(k)
    if k > 1:
        scale[1:] = np.sqrt(d * (d - 1.0) ** np.arange(k - 1, dtype=float))
    alphas = beta / scale
    sigma = quadratic_form(path_operator(d, k, "A"), beta)
    alphas.setflags(write=False)
    return CoefficientProfile(d=d, k=k, alphas=alphas, sigma=sigma)

"""Pure-Python (numpy) sampling kernel.

Fallback twin of the compiled kernel in ``_kernel_cy.pyx``; the integer
mixing, uniform-to-normal conversion, and accumulation order are kept in
sync so both backends produce the same draws for the same
(seed, sample index, vertex index) keys.

Randomness is counter-based: each (seed, sample, vertex) cell is hashed to
a 64-bit word with the splitmix64 finalizer, mapped to a uniform in (0,1),
and converted to a standard normal by inverting the normal CDF
(rational-polynomial approximations for the central region and moderate
tails, Newton refinement on erfc beyond).  No generator state exists, so
samples can be evaluated in any order or in parallel with identical
results.
"""

from __future__ import annotations

import math

import numpy as np

KERNEL_NAME = "python"

_U = np.uint64
_GAMMA1 = _U(0x9E3779B97F4A7C15)
_GAMMA2 = _U(0xD1B54A32D192ED03)
_MULT1 = _U(0xBF58476D1CE4E5B9)
_MULT2 = _U(0x94D049BB133111EB)
_INV52 = 1.0 / 4503599627370496.0  # 2^-52
_MASK64 = (1 << 64) - 1

# Inverse normal CDF coefficients (central |q| <= 0.425, moderate tail
# r = sqrt(-ln(pmin)) <= 5).  Keep in sync with _kernel_cy.pyx.
_A = (3.3871328727963666080e0, 1.3314166789178437745e2, 1.9715909503065514427e3,
      1.3731693765509461125e4, 4.5921953931549871457e4, 6.7265770927008700853e4,
      3.3430575583588128105e4, 2.5090809287301226727e3)
_B = (4.2313330701600911252e1, 6.8718700749205790830e2, 5.3941960214247511077e3,
      2.1213794301586595867e4, 3.9307895800092710610e4, 2.8729085735721942674e4,
      5.2264952788528545610e3)
_C = (1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
      3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4)
_D = (2.05319162663775882187e0, 1.67638483018380384940e0, 6.89767334985100004550e-1,
      1.48103976427480074590e-1, 1.51986665636164571966e-2, 5.47593808499534494600e-4,
      1.05075007164441684324e-9)

_LN_2PI = 1.8378770664093453
_INV_SQRT_2PI = 0.3989422804014327
_INV_SQRT_2 = 0.7071067811865475


def _mix64(x: np.ndarray) -> np.ndarray:
    x = x ^ (x >> _U(30))
    x = x * _MULT1
    x = x ^ (x >> _U(27))
    x = x * _MULT2
    return x ^ (x >> _U(31))


def _mix64_int(x: int) -> int:
    """splitmix64 finalizer on plain ints (numpy 0-d scalars warn on overflow)."""
    x &= _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _polynomials(r, num, den):
    acc = np.full_like(r, num[-1])
    for c in num[-2::-1]:
        acc = acc * r + c
    dcc = np.full_like(r, den[-1])
    for c in den[-2::-1]:
        dcc = dcc * r + c
    dcc = dcc * r + 1.0
    return acc, dcc


def _far_tail(pmin: float) -> float:
    """Inverse upper-tail quantile for pmin < exp(-25).

    Asymptotic seed z^2 ~ 2L - ln(2 pi) - ln(...) followed by Newton steps
    on 0.5*erfc(z/sqrt(2)) = pmin.  Scalar libm arithmetic so the compiled
    twin is bit-identical.
    """
    big = -2.0 * math.log(pmin) - _LN_2PI
    z = math.sqrt(big - math.log(big))
    for _ in range(4):
        density = math.exp(-0.5 * z * z) * _INV_SQRT_2PI
        z = z + (0.5 * math.erfc(z * _INV_SQRT_2) - pmin) / density
    return z


def _inverse_normal_cdf(p: np.ndarray) -> np.ndarray:
    q = p - 0.5
    out = np.empty_like(p)

    central = np.abs(q) <= 0.425
    if central.any():
        qc = q[central]
        r = 0.180625 - qc * qc
        num, den = _polynomials(r, _A, _B)
        out[central] = (qc * num) / den

    tail = ~central
    if tail.any():
        qt = q[tail]
        pmin = np.where(qt < 0.0, p[tail], 1.0 - p[tail])
        r = np.sqrt(-np.log(pmin))
        z = np.empty_like(r)
        near = r <= 5.0
        num, den = _polynomials(r[near] - 1.6, _C, _D)
        z[near] = num / den
        far = ~near
        if far.any():
            z[far] = [_far_tail(float(v)) for v in pmin[far]]
        out[tail] = np.where(qt < 0.0, -z, z)
    return out


def gaussian_matrix(seed: int, start: int, count: int, n: int) -> np.ndarray:
    """Standard normal draws for samples [start, start+count) x vertices [0, n)."""
    premix = _U(_mix64_int(seed))
    s = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    h = _mix64(premix ^ (s * _GAMMA1))
    v = np.arange(1, n + 1, dtype=np.uint64) * _GAMMA2
    cells = _mix64(h[:, None] ^ v[None, :])
    # 52-bit resolution keeps u strictly inside (0, 1): (x + 0.5) is exact
    # below 2^52 and the maximum is 1 - 2^-53.
    u = ((cells >> _U(12)) + 0.5) * _INV52
    return _inverse_normal_cdf(u)


def projection_block(seed, start, count, indptr, cols, weights, n) -> np.ndarray:
    """Rounding projections x[s, i] = sum over i's support of weight * z[s, j]."""
    z = gaussian_matrix(seed, start, count, n)
    prod = z[:, cols] * weights
    return np.add.reduceat(prod, indptr[:-1], axis=1)


def cut_size_block(seed, start, count, indptr, cols, weights, eu, ev, n) -> np.ndarray:
    """Cut sizes of the sign cuts for samples [start, start+count)."""
    x = projection_block(seed, start, count, indptr, cols, weights, n)
    labels = x >= 0.0
    return (labels[:, eu] != labels[:, ev]).sum(axis=1, dtype=np.int64)

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sampling kernel; behavioral twin of ``_kernel_py``.

Same counter-based keying (splitmix64 finalizer over (seed, sample,
vertex)) and the same inverse normal CDF, evaluated scalar-wise with the
GIL released.  Keep constants and operation order in sync with
_kernel_py.py.
"""

from libc.math cimport erfc, exp, log, sqrt
from libc.stdint cimport int64_t, uint64_t, uint8_t

import numpy as np

KERNEL_NAME = "compiled"

cdef uint64_t GAMMA1 = <uint64_t>0x9E3779B97F4A7C15
cdef uint64_t GAMMA2 = <uint64_t>0xD1B54A32D192ED03
cdef uint64_t MULT1 = <uint64_t>0xBF58476D1CE4E5B9
cdef uint64_t MULT2 = <uint64_t>0x94D049BB133111EB
cdef double INV52 = 1.0 / 4503599627370496.0


cdef inline uint64_t mix64(uint64_t x) nogil:
    x ^= x >> 30
    x = x * MULT1
    x ^= x >> 27
    x = x * MULT2
    return x ^ (x >> 31)


cdef double LN_2PI = 1.8378770664093453
cdef double INV_SQRT_2PI = 0.3989422804014327
cdef double INV_SQRT_2 = 0.7071067811865475


cdef inline double far_tail(double pmin) nogil:
    # Inverse upper-tail quantile for pmin < exp(-25): asymptotic seed plus
    # Newton steps on 0.5*erfc(z/sqrt(2)) = pmin.
    cdef double big = -2.0 * log(pmin) - LN_2PI
    cdef double z = sqrt(big - log(big))
    cdef double density
    cdef int i
    for i in range(4):
        density = exp(-0.5 * z * z) * INV_SQRT_2PI
        z = z + (0.5 * erfc(z * INV_SQRT_2) - pmin) / density
    return z


cdef inline double inverse_normal_cdf(double p) nogil:
    cdef double q = p - 0.5
    cdef double r, num, den, z
    if q <= 0.425 and q >= -0.425:
        r = 0.180625 - q * q
        num = (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r
                    + 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r
                  + 1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r
                + 1.3314166789178437745e2) * r + 3.3871328727963666080e0)
        den = (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r
                    + 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r
                  + 5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r
                + 4.2313330701600911252e1) * r + 1.0)
        return (q * num) / den
    if q < 0.0:
        r = p
    else:
        r = 1.0 - p
    z = sqrt(-log(r))
    if z <= 5.0:
        z = z - 1.6
        num = (((((((7.74545014278341407640e-4 * z + 2.27238449892691845833e-2) * z
                    + 2.41780725177450611770e-1) * z + 1.27045825245236838258e0) * z
                  + 3.64784832476320460504e0) * z + 5.76949722146069140550e0) * z
                + 4.63033784615654529590e0) * z + 1.42343711074968357734e0)
        den = (((((((1.05075007164441684324e-9 * z + 5.47593808499534494600e-4) * z
                    + 1.51986665636164571966e-2) * z + 1.48103976427480074590e-1) * z
                  + 6.89767334985100004550e-1) * z + 1.67638483018380384940e0) * z
                + 2.05319162663775882187e0) * z + 1.0)
        z = num / den
    else:
        z = far_tail(r)
    if q < 0.0:
        return -z
    return z


cdef inline uint64_t sample_key(uint64_t premix, int64_t sample) nogil:
    return mix64(premix ^ ((<uint64_t>(sample + 1)) * GAMMA1))


cdef inline double cell_normal(uint64_t h, int64_t vertex) nogil:
    cdef uint64_t cell = mix64(h ^ ((<uint64_t>(vertex + 1)) * GAMMA2))
    return inverse_normal_cdf((<double>(cell >> 12) + 0.5) * INV52)


def gaussian_matrix(seed, int64_t start, int64_t count, int64_t n):
    """Standard normal draws for samples [start, start+count) x vertices [0, n)."""
    cdef uint64_t premix = mix64(<uint64_t>seed)
    out = np.empty((count, n), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef uint64_t h
    cdef int64_t s, v
    with nogil:
        for s in range(count):
            h = sample_key(premix, start + s)
            for v in range(n):
                o[s, v] = cell_normal(h, v)
    return out


def projection_block(seed, int64_t start, int64_t count,
                     const int64_t[::1] indptr, const int64_t[::1] cols, const double[::1] weights,
                     int64_t n):
    """Rounding projections x[s, i] = sum over i's support of weight * z[s, j]."""
    cdef uint64_t premix = mix64(<uint64_t>seed)
    out = np.empty((count, n), dtype=np.float64)
    zbuf = np.empty(n, dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef double[::1] z = zbuf
    cdef uint64_t h
    cdef int64_t s, v, t
    cdef double acc
    with nogil:
        for s in range(count):
            h = sample_key(premix, start + s)
            for v in range(n):
                z[v] = cell_normal(h, v)
            for v in range(n):
                acc = 0.0
                for t in range(indptr[v], indptr[v + 1]):
                    acc += weights[t] * z[cols[t]]
                o[s, v] = acc
    return out


def cut_size_block(seed, int64_t start, int64_t count,
                   const int64_t[::1] indptr, const int64_t[::1] cols, const double[::1] weights,
                   const int64_t[::1] eu, const int64_t[::1] ev, int64_t n):
    """Cut sizes of the sign cuts for samples [start, start+count)."""
    cdef uint64_t premix = mix64(<uint64_t>seed)
    cdef int64_t m = eu.shape[0]
    sizes = np.empty(count, dtype=np.int64)
    zbuf = np.empty(n, dtype=np.float64)
    labbuf = np.empty(n, dtype=np.uint8)
    cdef int64_t[::1] out = sizes
    cdef double[::1] z = zbuf
    cdef uint8_t[::1] lab = labbuf
    cdef uint64_t h
    cdef int64_t s, v, t, e, c
    cdef double acc
    with nogil:
        for s in range(count):
            h = sample_key(premix, start + s)
            for v in range(n):
                z[v] = cell_normal(h, v)
            for v in range(n):
                acc = 0.0
                for t in range(indptr[v], indptr[v + 1]):
                    acc += weights[t] * z[cols[t]]
                lab[v] = 1 if acc >= 0.0 else 0
            c = 0
            for e in range(m):
                if lab[eu[e]] != lab[ev[e]]:
                    c += 1
            out[s] = c
    return sizes

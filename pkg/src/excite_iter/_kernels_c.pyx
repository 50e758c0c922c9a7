# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Riccati sweep for the quartic double well.

Same contract as excite_iter._kernels_py.riccati_sweep; see that module for
documentation.
"""

import numpy as np

DEF BLOWUP_LIMIT = 1e12


def riccati_sweep(double x_start, double h, int n_steps, double g,
                  double e, double s_init, double sp_init):
    s_arr = np.empty(n_steps + 1)
    sp_arr = np.empty(n_steps + 1)
    cdef double[::1] s = s_arr
    cdef double[::1] sp = sp_arr
    cdef double gg = g * g
    cdef double a = s_init
    cdef double b = sp_init
    cdef double t, t2, tm, tp, vm
    cdef double k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b, b2, b3, b4
    cdef int i
    s[0] = s_init
    sp[0] = sp_init
    for i in range(n_steps):
        t = x_start + i * h

        t2 = t * t - 1.0
        k1a = b
        k1b = b * b - gg * t2 * t2 + 2.0 * e

        tm = t + 0.5 * h
        t2 = tm * tm - 1.0
        vm = gg * t2 * t2 - 2.0 * e
        b2 = b + 0.5 * h * k1b
        k2a = b2
        k2b = b2 * b2 - vm

        b3 = b + 0.5 * h * k2b
        k3a = b3
        k3b = b3 * b3 - vm

        tp = t + h
        t2 = tp * tp - 1.0
        b4 = b + h * k3b
        k4a = b4
        k4b = b4 * b4 - gg * t2 * t2 + 2.0 * e

        a += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a)
        b += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)
        s[i + 1] = a
        sp[i + 1] = b
        if b > BLOWUP_LIMIT or b < -BLOWUP_LIMIT:
            # leave a deterministic tail; entries past a node are meaningless
            s_arr[i + 2:] = np.nan
            sp_arr[i + 2:] = np.nan
            return s_arr, sp_arr, i + 1
    return s_arr, sp_arr, -1

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pure``, on int64 data.

Callers are responsible for the magnitude guards (see ``kernels.__init__``):
tree coordinates stay below 2**62 and planar coordinates below 2**29, so
orientation values fit in int64 and their cross products fit in __int128.
"""

import numpy as np
from libc.stdint cimport int64_t, uint8_t

cdef extern from *:
    ctypedef long long i128 "__int128"


def expand_tree(int64_t[::1] c0, int64_t[::1] g0, int64_t[::1] kst0, bint trunk0, int depth):
    cdef Py_ssize_t n = (1 << (depth + 1)) - 1
    cdef Py_ssize_t internal = (1 << depth) - 1
    C_arr = np.empty((n, 9), dtype=np.int64)
    G_arr = np.empty((n, 9), dtype=np.int64)
    K_arr = np.empty((n, 3), dtype=np.int64)
    T_arr = np.zeros(n, dtype=np.uint8)
    cdef int64_t[:, ::1] C = C_arr
    cdef int64_t[:, ::1] G = G_arr
    cdef int64_t[:, ::1] K = K_arr
    cdef uint8_t[::1] TR = T_arr
    cdef Py_ssize_t q, a, b, x
    for x in range(9):
        C[0, x] = c0[x]
        G[0, x] = g0[x]
    for x in range(3):
        K[0, x] = kst0[x]
    TR[0] = 1 if trunk0 else 0
    with nogil:
        for q in range(internal):
            a = 2 * q + 1
            b = a + 1
            for x in range(3):
                # S child: cK' = -cS, cS' = cK + 2cS, cT' = cT; gK' = 2gK - gS, gS' = gK, gT' = gT
                C[a, x] = -C[q, 3 + x]
                C[a, 3 + x] = C[q, x] + 2 * C[q, 3 + x]
                C[a, 6 + x] = C[q, 6 + x]
                G[a, x] = 2 * G[q, x] - G[q, 3 + x]
                G[a, 3 + x] = G[q, x]
                G[a, 6 + x] = G[q, 6 + x]
                if TR[q]:
                    C[b, x] = -C[q, 6 + x]
                    C[b, 3 + x] = C[q, 3 + x] + 2 * C[q, 6 + x]
                    C[b, 6 + x] = C[q, x]
                    G[b, x] = 2 * G[q, 3 + x] - G[q, 6 + x]
                    G[b, 3 + x] = G[q, 3 + x]
                    G[b, 6 + x] = G[q, x]
                else:
                    C[b, x] = -C[q, 6 + x]
                    C[b, 3 + x] = C[q, x] + 2 * C[q, 6 + x]
                    C[b, 6 + x] = C[q, 3 + x]
                    G[b, x] = 2 * G[q, x] - G[q, 6 + x]
                    G[b, 3 + x] = G[q, x]
                    G[b, 6 + x] = G[q, 3 + x]
            K[a, 0] = K[q, 1]
            K[a, 1] = K[q, 0]
            K[a, 2] = K[q, 2]
            TR[a] = TR[q]
            if TR[q]:
                K[b, 0] = K[q, 2]
                K[b, 1] = K[q, 1]
                K[b, 2] = K[q, 0]
            else:
                K[b, 0] = K[q, 2]
                K[b, 1] = K[q, 0]
                K[b, 2] = K[q, 1]
            TR[b] = 0
    return C_arr, G_arr, K_arr, T_arr


cdef inline int64_t orient(int64_t ax, int64_t ay, int64_t bx, int64_t by,
                           int64_t cx, int64_t cy) nogil:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


cdef inline int sgn(int64_t x) nogil:
    return (x > 0) - (x < 0)


cdef bint same_vertex_set(int64_t[:, ::1] T, Py_ssize_t i, Py_ssize_t j) nogil:
    cdef int u, v
    cdef bint found
    for u in range(3):
        found = False
        for v in range(3):
            if T[i, 2 * u] == T[j, 2 * v] and T[i, 2 * u + 1] == T[j, 2 * v + 1]:
                found = True
        if not found:
            return False
    return True


cdef bint pair_ok(int64_t[:, ::1] T, Py_ssize_t i, Py_ssize_t j) nogil:
    cdef Py_ssize_t P, Q, tmp
    cdef int e, v, side, n_on, pos_gt
    cdef int64_t p0x, p0y, p1x, p1y, p2x, p2y, dx, dy, span, t, t0, t1, lo, hi
    cdef int64_t vals[3]
    cdef int64_t onx[3]
    cdef int64_t ony[3]
    if same_vertex_set(T, i, j):
        return True
    P = i
    Q = j
    for tmp in range(2):
        for e in range(3):
            p0x = T[P, 2 * e]
            p0y = T[P, 2 * e + 1]
            p1x = T[P, 2 * ((e + 1) % 3)]
            p1y = T[P, 2 * ((e + 1) % 3) + 1]
            p2x = T[P, 2 * ((e + 2) % 3)]
            p2y = T[P, 2 * ((e + 2) % 3) + 1]
            side = sgn(orient(p0x, p0y, p1x, p1y, p2x, p2y))
            pos_gt = 0
            n_on = 0
            for v in range(3):
                vals[v] = side * orient(p0x, p0y, p1x, p1y, T[Q, 2 * v], T[Q, 2 * v + 1])
                if vals[v] > 0:
                    pos_gt = 1
                elif vals[v] == 0:
                    onx[n_on] = T[Q, 2 * v]
                    ony[n_on] = T[Q, 2 * v + 1]
                    n_on += 1
            if pos_gt:
                continue
            if n_on == 0:
                return True
            dx = p1x - p0x
            dy = p1y - p0y
            span = dx * dx + dy * dy
            if n_on == 1:
                t = (onx[0] - p0x) * dx + (ony[0] - p0y) * dy
                if t < 0 or t > span:
                    return True
                return t == 0 or t == span
            t0 = (onx[0] - p0x) * dx + (ony[0] - p0y) * dy
            t1 = (onx[1] - p0x) * dx + (ony[1] - p0y) * dy
            if t0 > t1:
                t0, t1 = t1, t0
            lo = t0 if t0 > 0 else 0
            hi = t1 if t1 < span else span
            if lo > hi:
                return True
            if lo == hi:
                return (lo == 0 or lo == span) and (lo == t0 or lo == t1)
            return lo == 0 and hi == span and lo == t0 and hi == t1
        P = j
        Q = i
    return False


def triangle_pairs(int64_t[:, ::1] T):
    cdef Py_ssize_t n = T.shape[0]
    cdef Py_ssize_t i, j
    cdef int v
    box_arr = np.empty((n, 4), dtype=np.int64)
    cdef int64_t[:, ::1] box = box_arr
    for i in range(n):
        box[i, 0] = min(T[i, 0], T[i, 2], T[i, 4])
        box[i, 1] = max(T[i, 0], T[i, 2], T[i, 4])
        box[i, 2] = min(T[i, 1], T[i, 3], T[i, 5])
        box[i, 3] = max(T[i, 1], T[i, 3], T[i, 5])
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            if box[i, 1] < box[j, 0] or box[j, 1] < box[i, 0] or box[i, 3] < box[j, 2] or box[j, 3] < box[i, 2]:
                continue
            if not pair_ok(T, i, j):
                bad.append((i, j))
    return bad


cdef bint ray_hits(int64_t bx, int64_t by, int64_t dx, int64_t dy,
                   int64_t[:, ::1] T, Py_ssize_t j) nogil:
    cdef int64_t lo_n = 0, lo_d = 1, hi_n = 1, hi_d = 0
    cdef bint strict = True
    cdef int e, side
    cdef int64_t ax, ay, cx, cy, ox, oy, f0, f1, n_, d_
    cdef i128 c
    for e in range(3):
        ax = T[j, 2 * e]
        ay = T[j, 2 * e + 1]
        cx = T[j, 2 * ((e + 1) % 3)]
        cy = T[j, 2 * ((e + 1) % 3) + 1]
        ox = T[j, 2 * ((e + 2) % 3)]
        oy = T[j, 2 * ((e + 2) % 3) + 1]
        side = sgn(orient(ax, ay, cx, cy, ox, oy))
        f0 = side * orient(ax, ay, cx, cy, bx, by)
        f1 = side * ((cx - ax) * dy - (cy - ay) * dx)
        if f1 == 0:
            if f0 < 0:
                return False
        elif f1 > 0:
            n_ = -f0
            d_ = f1
            if <i128> n_ * lo_d > <i128> lo_n * d_:
                lo_n = n_
                lo_d = d_
                strict = False
        else:
            n_ = f0
            d_ = -f1
            if hi_d == 0 or <i128> n_ * hi_d < <i128> hi_n * d_:
                hi_n = n_
                hi_d = d_
    if hi_d == 0:
        return True
    c = <i128> lo_n * hi_d - <i128> hi_n * lo_d
    return c < 0 or (c == 0 and not strict)


def rays_vs_triangles(int64_t[:, ::1] R, int64_t[:, ::1] T):
    cdef Py_ssize_t m = R.shape[0]
    cdef Py_ssize_t n = T.shape[0]
    cdef Py_ssize_t r, j
    hits = []
    for r in range(m):
        for j in range(n):
            if ray_hits(R[r, 0], R[r, 1], R[r, 2], R[r, 3], T, j):
                hits.append((r, j))
    return hits

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: visibility predicate, leftmost-seer sweep, greedy solver."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, int8_t, uint8_t

cnp.import_array()

cdef int8_t _RC = 1


cdef inline int64_t cross(const int64_t[::1] xs, const int64_t[::1] ys,
                          Py_ssize_t a, Py_ssize_t b, Py_ssize_t c) noexcept nogil:
    return (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a])


def sees(const int64_t[::1] xs, const int64_t[::1] ys, Py_ssize_t i, Py_ssize_t j):
    cdef Py_ssize_t k
    if i > j:
        i, j = j, i
    if i == j or xs[i] == xs[j]:
        return True
    for k in range(i + 1, j):
        if cross(xs, ys, i, j, k) > 0:
            return False
    return True


def visibility_matrix(const int64_t[::1] xs, const int64_t[::1] ys):
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, j, k
    cdef bint ok
    out = np.eye(n, dtype=np.uint8)
    cdef uint8_t[:, ::1] vis = out
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                ok = True
                if xs[i] != xs[j]:
                    for k in range(i + 1, j):
                        if cross(xs, ys, i, j, k) > 0:
                            ok = False
                            break
                vis[i, j] = ok
                vis[j, i] = ok
    return out.astype(bool)


def leftmost_visible(const int64_t[::1] xs, const int64_t[::1] ys, const int8_t[::1] classes):
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, top = 0
    out = np.full(n, -1, dtype=np.int64)
    stack_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] left = out
    cdef int64_t[::1] stack = stack_arr
    with nogil:
        for i in range(n):
            while top >= 2 and cross(xs, ys, stack[top - 2], stack[top - 1], i) >= 0:
                top -= 1
            if classes[i] == _RC:
                left[i] = stack[top - 1] if top > 0 else i
            stack[top] = i
            top += 1
    return out


def visible_left(const int64_t[::1] xs, const int64_t[::1] ys, Py_ssize_t i, Py_ssize_t stop):
    cdef Py_ssize_t u, piv = -1
    out = []
    for u in range(i - 1, stop - 1, -1):
        if piv < 0 or cross(xs, ys, i, piv, u) <= 0:
            out.append(u)
            piv = u
    return out


def solve_right_fast(const int64_t[::1] xs, const int64_t[::1] ys,
                     const int8_t[::1] classes, const int64_t[::1] left):
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, u, li, g, piv, found, anchor
    cdef Py_ssize_t ng = 0
    cdef int64_t visits = 0
    cdef bint degenerate = False

    prev_arr = np.arange(-1, n - 1, dtype=np.int64)
    next_arr = np.arange(1, n + 1, dtype=np.int64)
    guard_arr = np.zeros(n, dtype=np.uint8)
    assign_arr = np.full(n, -1, dtype=np.int64)
    guards_arr = np.empty(n, dtype=np.int64)
    wit_arr = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] prev = prev_arr
    cdef int64_t[::1] nxt = next_arr
    cdef uint8_t[::1] is_guard = guard_arr
    cdef int64_t[::1] assign = assign_arr
    cdef int64_t[::1] guards = guards_arr
    cdef int64_t[::1] witnesses = wit_arr

    with nogil:
        for i in range(n):
            if classes[i] != _RC:
                continue
            visits += 1
            li = left[i]
            found = -1
            if li < i:
                piv = -1
                u = prev[i]
                while u >= li:
                    visits += 1
                    if piv < 0 or cross(xs, ys, i, piv, u) <= 0:
                        if is_guard[u]:
                            found = u
                            break
                        piv = u
                    if u == li:
                        break
                    u = prev[u]
            if found < 0:
                g = li
                if i + 1 < n:
                    visits += 1
                    if ys[i + 1] > ys[li]:
                        g = i + 1
                is_guard[g] = 1
                guards[ng] = g
                witnesses[ng] = i
                ng += 1
                if classes[g] <= _RC:
                    degenerate = True
                anchor = li
                found = g
            else:
                anchor = found
            assign[i] = found
            if anchor < i:
                prev[i] = anchor
                nxt[anchor] = i
    return (
        np.sort(guards_arr[:ng]),
        assign_arr,
        wit_arr[:ng].copy(),
        int(visits),
        bool(degenerate),
    )

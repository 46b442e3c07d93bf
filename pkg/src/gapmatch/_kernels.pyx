# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled scan kernels for the column-wise and row-wise matchers."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint8_t, uint64_t, int32_t, int64_t
from libcpp.vector cimport vector

cnp.import_array()

cdef enum:
    W = 64


cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int msb(uint64_t x) noexcept nogil:
    return 63 - __builtin_clzll(x)


def column_scan(const uint8_t[::1] text,
                const int32_t[:, ::1] delta,
                const uint64_t[:, ::1] bstate,
                const int64_t[::1] gj_ptr,
                const int64_t[::1] gj_gap,
                const uint64_t[::1] gj_cmask,
                const uint64_t[::1] imask,
                const uint64_t[::1] mmask,
                Py_ssize_t ring_len,
                const int32_t[::1] bit_pattern):
    cdef Py_ssize_t n = text.shape[0]
    cdef Py_ssize_t nwords = imask.shape[0]
    if ring_len <= 0 or ring_len & (ring_len - 1):
        raise ValueError("ring_len must be a power of two")
    cdef uint64_t[:, ::1] ring = np.zeros((ring_len, nwords), dtype=np.uint64)
    cdef vector[int32_t] pats
    cdef vector[int64_t] ends
    cdef vector[int32_t] found
    cdef Py_ssize_t i, j, e, slot, src, k
    cdef Py_ssize_t rmask = ring_len - 1
    cdef int32_t q = 0
    cdef uint64_t h, d, carry, rep
    cdef bint any_match
    cdef int b

    with nogil:
        for i in range(n):
            q = delta[q, text[i]]
            slot = i & rmask
            carry = 0
            any_match = False
            for j in range(nwords):
                h = 0
                for e in range(gj_ptr[j], gj_ptr[j + 1]):
                    src = (i - gj_gap[e]) & rmask
                    h |= ring[src, j] & gj_cmask[e]
                d = ((h << 1) | carry | imask[j]) & bstate[q, j]
                carry = h >> (W - 1)
                ring[slot, j] = d
                if d & mmask[j]:
                    any_match = True
            if any_match:
                found.clear()
                j = nwords - 1
                while j >= 0:
                    rep = ring[slot, j] & mmask[j]
                    while rep:
                        b = msb(rep)
                        found.push_back(<int32_t>(j * W + b))
                        rep &= ~((<uint64_t>1) << b)
                    j -= 1
                k = <Py_ssize_t>found.size() - 1
                while k >= 0:
                    pats.push_back(bit_pattern[found[k]])
                    ends.push_back(i)
                    k -= 1

    out_p = np.empty(pats.size(), dtype=np.int32)
    out_e = np.empty(ends.size(), dtype=np.int64)
    cdef int32_t[::1] op = out_p
    cdef int64_t[::1] oe = out_e
    for k in range(<Py_ssize_t>pats.size()):
        op[k] = pats[k]
        oe[k] = ends[k]
    return out_p, out_e


def row_scan(const uint8_t[::1] text,
             const uint8_t[::1] sym,
             const int64_t[::1] gapp1,
             const int64_t[::1] row_start,
             Py_ssize_t window):
    cdef Py_ssize_t n = text.shape[0]
    cdef Py_ssize_t nrows = sym.shape[0]
    cdef Py_ssize_t npat = row_start.shape[0] - 1
    cdef Py_ssize_t nchunks = (n + W - 1) // W
    cdef uint64_t V[256]
    cdef uint64_t[::1] dwin = np.zeros(max(nrows, 1) * window, dtype=np.uint64)
    cdef vector[int32_t] pats
    cdef vector[int64_t] ends
    cdef Py_ssize_t c, i, base, stop, slot, k, r, r0, r1, prev, ia, ib, qw
    cdef int s
    cdef uint64_t word, a, bw, m
    cdef int64_t g

    for r in range(nrows):
        if gapp1[r] // W + 2 > window:
            raise ValueError("chunk window too small for the largest gap")
    for i in range(256):
        V[i] = 0
    with nogil:
        for c in range(nchunks):
            base = c * W
            stop = base + W
            if stop > n:
                stop = n
            for i in range(base, stop):
                V[text[i]] |= (<uint64_t>1) << (i - base)
            slot = c % window
            for k in range(npat):
                r0 = row_start[k]
                r1 = row_start[k + 1]
                word = V[sym[r0]]
                dwin[r0 * window + slot] = word
                r = r0 + 1
                while r < r1:
                    g = gapp1[r]
                    qw = g // W
                    s = g % W
                    prev = (r - 1) * window
                    ia = c - qw - 1
                    ib = c - qw
                    a = dwin[prev + ia % window] if ia >= 0 else 0
                    bw = dwin[prev + ib % window] if ib >= 0 else 0
                    if s:
                        m = (a >> (W - s)) | (bw << s)
                    else:
                        m = bw
                    word = V[sym[r]] & m
                    dwin[r * window + slot] = word
                    r += 1
                while word:
                    pats.push_back(<int32_t>k)
                    ends.push_back(base + __builtin_ctzll(word))
                    word &= word - 1
            for i in range(base, stop):
                V[text[i]] = 0

    out_p = np.empty(pats.size(), dtype=np.int32)
    out_e = np.empty(ends.size(), dtype=np.int64)
    cdef int32_t[::1] op = out_p
    cdef int64_t[::1] oe = out_e
    for k in range(<Py_ssize_t>pats.size()):
        op[k] = pats[k]
        oe[k] = ends[k]
    return out_p, out_e

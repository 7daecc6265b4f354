# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled profile propagation kernel.

Same contract as kernels.pure.path_propagate, restricted to targets with at
most 64 vertices and 64 witnesses so domains fit machine words.
"""

from libc.stdlib cimport free, malloc


def path_propagate(vmasks, wmasks, wit_ends):
    cdef Py_ssize_t t = len(vmasks)
    cdef Py_ssize_t edges = len(wmasks)
    cdef Py_ssize_t nw = len(wit_ends)
    cdef unsigned long long *vm = <unsigned long long *> malloc(t * sizeof(unsigned long long))
    cdef unsigned long long *wm = NULL
    cdef int *ea = NULL
    cdef int *eb = NULL
    if edges > 0:
        wm = <unsigned long long *> malloc(edges * sizeof(unsigned long long))
    if nw > 0:
        ea = <int *> malloc(nw * sizeof(int))
        eb = <int *> malloc(nw * sizeof(int))
    if vm == NULL or (edges > 0 and wm == NULL) or (nw > 0 and (ea == NULL or eb == NULL)):
        free(vm); free(wm); free(ea); free(eb)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef unsigned long long m, low, allowed, keep, left, right
    cdef int a, b, idx
    try:
        for i in range(t):
            vm[i] = vmasks[i]
        for i in range(edges):
            wm[i] = wmasks[i]
        for j in range(nw):
            ea[j] = wit_ends[j][0]
            eb[j] = wit_ends[j][1]
        for i in range(edges):
            left = vm[i]
            allowed = 0
            keep = 0
            m = wm[i]
            while m:
                low = m & (~m + 1)
                m ^= low
                idx = _bit_index(low)
                a = ea[idx]
                b = eb[idx]
                if (left >> a) & 1:
                    allowed |= (<unsigned long long> 1) << b
                    keep |= low
                if (left >> b) & 1:
                    allowed |= (<unsigned long long> 1) << a
                    keep |= low
            wm[i] = keep
            vm[i + 1] &= allowed
        for i in range(edges - 1, -1, -1):
            right = vm[i + 1]
            allowed = 0
            m = wm[i]
            while m:
                low = m & (~m + 1)
                m ^= low
                idx = _bit_index(low)
                a = ea[idx]
                b = eb[idx]
                if (right >> a) & 1:
                    allowed |= (<unsigned long long> 1) << b
                if (right >> b) & 1:
                    allowed |= (<unsigned long long> 1) << a
            vm[i] &= allowed
            left = vm[i]
            keep = 0
            m = wm[i]
            while m:
                low = m & (~m + 1)
                m ^= low
                idx = _bit_index(low)
                a = ea[idx]
                b = eb[idx]
                if (((left >> a) & 1 and (right >> b) & 1)
                        or ((left >> b) & 1 and (right >> a) & 1)):
                    keep |= low
            wm[i] = keep
        out_v = [vm[i] for i in range(t)]
        out_w = [wm[i] for i in range(edges)]
    finally:
        free(vm)
        free(wm)
        free(ea)
        free(eb)
    return out_v, out_w


cdef inline int _bit_index(unsigned long long low) noexcept:
    cdef int idx = 0
    while low > 1:
        low >>= 1
        idx += 1
    return idx

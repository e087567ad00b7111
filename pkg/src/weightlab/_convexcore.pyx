# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: scan all 2^n root subsets for convexity.

The witness tables of weightlab.convex reduce every cone-membership
query to bitmask subset tests; this module just runs the full scan in C.
"""

from libc.stdlib cimport free, malloc


def enumerate_masks(int n, witnesses):
    """Bitmasks of all convex subsets, ascending.

    witnesses: per root index, iterable of witness bitmasks (each a mask
    of a minimal generating set whose cone contains that root).
    """
    if n < 0 or n > 25:
        raise ValueError("root count out of range for the full scan")

    cdef unsigned int total = 0
    cdef int r
    for r in range(n):
        total += len(witnesses[r])

    cdef unsigned int* data = <unsigned int*> malloc(total * sizeof(unsigned int))
    cdef unsigned int* offsets = <unsigned int*> malloc((n + 1) * sizeof(unsigned int))
    if data == NULL or offsets == NULL:
        free(data)
        free(offsets)
        raise MemoryError()

    cdef unsigned int pos = 0
    for r in range(n):
        offsets[r] = pos
        for w in witnesses[r]:
            data[pos] = <unsigned int> w
            pos += 1
    offsets[n] = pos

    cdef list out = []
    cdef unsigned long long t
    cdef unsigned long long limit = 1ULL << n
    cdef unsigned int mask, w32, k
    cdef bint ok
    try:
        t = 0
        while t < limit:
            mask = <unsigned int> t
            ok = True
            for r in range(n):
                if (mask >> r) & 1u:
                    continue
                for k in range(offsets[r], offsets[r + 1]):
                    w32 = data[k]
                    if (w32 & mask) == w32:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(mask)
            t += 1
    finally:
        free(data)
        free(offsets)
    return out

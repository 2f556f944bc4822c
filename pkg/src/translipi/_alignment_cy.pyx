# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Levenshtein alignment kernel.

Semantics must match ``_alignment_py.align_counts`` exactly: unit costs and
a backtrace that prefers hit, then substitution, then insertion, then
deletion on equal cost.
"""

from libc.stdlib cimport free, malloc


def align_counts(ref, hyp):
    """Minimum-edit alignment counts (hits, substitutions, deletions, insertions)."""
    cdef Py_ssize_t n = len(ref)
    cdef Py_ssize_t m = len(hyp)
    cdef Py_ssize_t width = m + 1
    cdef Py_ssize_t i, j
    cdef int best, up, left, cost
    cdef int hits = 0, subs = 0, dels = 0, ins = 0

    cdef long* a = <long*> malloc(n * sizeof(long)) if n else NULL
    cdef long* b = <long*> malloc(m * sizeof(long)) if m else NULL
    cdef int* mat = <int*> malloc((n + 1) * width * sizeof(int))
    if mat == NULL or (n and a == NULL) or (m and b == NULL):
        free(a); free(b); free(mat)
        raise MemoryError()

    try:
        for i in range(n):
            a[i] = ref[i]
        for j in range(m):
            b[j] = hyp[j]

        for j in range(width):
            mat[j] = <int> j
        for i in range(1, n + 1):
            mat[i * width] = <int> i
            for j in range(1, width):
                best = mat[(i - 1) * width + (j - 1)] + (a[i - 1] != b[j - 1])
                up = mat[(i - 1) * width + j] + 1
                if up < best:
                    best = up
                left = mat[i * width + (j - 1)] + 1
                if left < best:
                    best = left
                mat[i * width + j] = best

        i = n
        j = m
        while i > 0 or j > 0:
            cost = mat[i * width + j]
            if i > 0 and j > 0 and a[i - 1] == b[j - 1] and mat[(i - 1) * width + (j - 1)] == cost:
                hits += 1
                i -= 1
                j -= 1
            elif i > 0 and j > 0 and mat[(i - 1) * width + (j - 1)] + 1 == cost:
                subs += 1
                i -= 1
                j -= 1
            elif j > 0 and mat[i * width + (j - 1)] + 1 == cost:
                ins += 1
                j -= 1
            else:
                dels += 1
                i -= 1
    finally:
        free(a)
        free(b)
        free(mat)
    return hits, subs, dels, ins

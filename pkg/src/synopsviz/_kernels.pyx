# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot loops.

Must stay numerically interchangeable with _kernels_py: plain left-to-right
IEEE double accumulation, no reassociation, no fast-math.
"""

IMPLEMENTATION = "cython"


def slice_stats(double[::1] values, Py_ssize_t start, Py_ssize_t stop):
    """Sum, raw sum-of-squares and centered second moment of a slice.

    Two passes: the centered M2 (sum of squared deviations from the slice
    mean) keeps variance well-conditioned at any value scale, while the raw
    sum of squares remains the exactly-additive mergeable carrier.
    """
    cdef double total = 0.0
    cdef double total_sq = 0.0
    cdef double m2 = 0.0
    cdef double mean, v, d
    cdef Py_ssize_t i
    for i in range(start, stop):
        total += values[i]
    mean = total / (stop - start)
    for i in range(start, stop):
        v = values[i]
        total_sq += v * v
        d = v - mean
        m2 += d * d
    return total, total_sq, m2


def degree_counts(
    long long[::1] subjects,
    long long[::1] objects,
    signed char[::1] kinds,
    long long[::1] out_counts,
    long long[::1] in_counts,
):
    """Count entity-graph degrees (edge = IRI subject and IRI object).

    Increments out_counts[s]/in_counts[o] per edge triple; returns the
    number of edge triples. Kind code 0 means IRI.
    """
    cdef long long edges = 0
    cdef Py_ssize_t i
    cdef long long s, o
    for i in range(subjects.shape[0]):
        s = subjects[i]
        o = objects[i]
        if kinds[s] == 0 and kinds[o] == 0:
            out_counts[s] += 1
            in_counts[o] += 1
            edges += 1
    return edges

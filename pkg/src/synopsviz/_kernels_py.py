"""Pure-Python kernels, interchangeable with the compiled extension.

Accumulation order is strictly left to right in both implementations so the
two produce bit-identical floating point results; do not replace the loops
with math.fsum or builtins that reassociate.
"""

IMPLEMENTATION = "python"


def slice_stats(values, start, stop):
    """Sum, raw sum-of-squares and centered second moment of a slice.

    Two passes: the centered M2 (sum of squared deviations from the slice
    mean) keeps variance well-conditioned at any value scale, while the raw
    sum of squares remains the exactly-additive mergeable carrier.
    """
    total = 0.0
    for i in range(start, stop):
        total += values[i]
    mean = total / (stop - start)
    total_sq = 0.0
    m2 = 0.0
    for i in range(start, stop):
        v = values[i]
        total_sq += v * v
        d = v - mean
        m2 += d * d
    return total, total_sq, m2


def degree_counts(subjects, objects, kinds, out_counts, in_counts):
    """Count entity-graph degrees (edge = IRI subject and IRI object).

    Increments out_counts[s]/in_counts[o] per edge triple; returns the
    number of edge triples. Kind code 0 means IRI.
    """
    edges = 0
    for i in range(len(subjects)):
        s = subjects[i]
        o = objects[i]
        if kinds[s] == 0 and kinds[o] == 0:
            out_counts[s] += 1
            in_counts[o] += 1
            edges += 1
    return edges

"""The compiled and pure-Python kernels must agree bit for bit."""

import random
from array import array

import pytest

from synopsviz import _kernels_py

try:
    from synopsviz import _kernels
except ImportError:
    _kernels = None

needs_compiled = pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")


@needs_compiled
def test_slice_stats_bit_identical():
    rng = random.Random(123)
    for scale in (1.0, 1e-6, 1e12, 1.5e12):
        values = array("d", [rng.uniform(0.9, 1.1) * scale for _ in range(5000)])
        for _ in range(50):
            a = rng.randrange(0, len(values))
            b = rng.randrange(a + 1, len(values) + 1)
            assert _kernels.slice_stats(values, a, b) == _kernels_py.slice_stats(values, a, b)


@needs_compiled
def test_slice_stats_trivial_cases():
    values = array("d", [2.0, 4.0, 6.0])
    total, total_sq, m2 = _kernels.slice_stats(values, 0, 3)
    assert (total, total_sq) == (12.0, 56.0)
    assert m2 == 8.0  # (2-4)^2 + 0 + (6-4)^2
    assert _kernels.slice_stats(values, 1, 2) == (4.0, 16.0, 0.0)


@needs_compiled
def test_degree_counts_agree():
    rng = random.Random(5)
    n_terms = 50
    kinds = array("b", [rng.randrange(3) for _ in range(n_terms)])
    subjects = array("q", [rng.randrange(n_terms) for _ in range(400)])
    objects = array("q", [rng.randrange(n_terms) for _ in range(400)])

    out_a, in_a = array("q", [0] * n_terms), array("q", [0] * n_terms)
    out_b, in_b = array("q", [0] * n_terms), array("q", [0] * n_terms)
    edges_a = _kernels.degree_counts(subjects, objects, kinds, out_a, in_a)
    edges_b = _kernels_py.degree_counts(subjects, objects, kinds, out_b, in_b)
    assert edges_a == edges_b
    assert list(out_a) == list(out_b)
    assert list(in_a) == list(in_b)
    assert edges_a == sum(
        1 for i in range(400) if kinds[subjects[i]] == 0 and kinds[objects[i]] == 0
    )

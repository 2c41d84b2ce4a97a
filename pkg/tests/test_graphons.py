import math

import pytest

from homcommon.graphs import (BudgetExceededError, disjoint_union, hom_count,
                              make_family, random_graph)
from homcommon.graphons import (StepKernel, complement, constant_kernel,
                                density, kernel_from_graph, kernel_from_json,
                                kernel_to_json, one_minus, sample_graphon,
                                sample_kernel, shift)

K2 = make_family("path", 2)
K3 = make_family("complete", 3)
C5 = make_family("cycle", 5)


def test_kernel_invariants():
    with pytest.raises(ValueError):
        StepKernel((0.5, 0.4), ((0.1, 0.2), (0.2, 0.3)))  # measures sum != 1
    with pytest.raises(ValueError):
        StepKernel((0.5, 0.5), ((0.1, 0.2), (0.3, 0.4)))  # asymmetric
    with pytest.raises(ValueError):
        StepKernel((1.0,), ((1.5,),), graphon=True)  # graphon value out of range
    StepKernel((1.0,), ((1.5,),))  # fine as a plain kernel


def test_density_constant_kernels():
    assert density(K2, constant_kernel(0.37)) == pytest.approx(0.37, abs=1e-15)
    assert density(C5, constant_kernel(0.5)) == pytest.approx(1 / 32, abs=1e-15)
    assert density(make_family("path", 1), constant_kernel(0.3)) == 1.0


def test_density_matches_hom_counts():
    w = kernel_from_graph(K3)
    assert density(K3, w) == pytest.approx(hom_count(K3, K3) / 3**3, abs=1e-12)
    for s in range(10):
        g = random_graph(4, 40 + s)
        w = kernel_from_graph(g)
        for h in (K2, K3, C5, make_family("path", 4)):
            expect = hom_count(h, g) / g.vertex_count**h.vertex_count
            assert density(h, w) == pytest.approx(expect, abs=1e-12)


def test_density_in_unit_interval_and_multiplicative(graphon_suite):
    p3 = make_family("path", 3)
    both = disjoint_union(K3, p3)
    for w in graphon_suite[:30]:
        d = density(both, w)
        assert -1e-12 <= d <= 1 + 1e-12
        assert d == pytest.approx(density(K3, w) * density(p3, w), abs=1e-12)


def test_density_budget():
    with pytest.raises(BudgetExceededError):
        density(C5, sample_graphon(0, 4), budget=3)


def test_complement():
    half = constant_kernel(0.5)
    assert complement(half) == half
    w = constant_kernel(0.3)
    assert complement(w).values == ((0.7,),)
    g = sample_graphon(5, 4)
    assert complement(complement(g)) == g
    with pytest.raises(ValueError):
        complement(shift(constant_kernel(0.5), 0.25))


def test_shift():
    w = sample_graphon(3, 3)
    zero = shift(constant_kernel(0.4), 0.4)
    assert all(abs(v) < 1e-15 for row in zero.values for v in row)
    assert not zero.graphon
    assert shift(w, 0.0) == w
    u = shift(w, density(K2, w))
    assert density(K2, u) == pytest.approx(0.0, abs=1e-12)


def test_sample_graphon_deterministic_and_valid():
    for seed in range(100):
        w = sample_graphon(seed, 4)
        assert w == sample_graphon(seed, 4)
        assert w.graphon
        assert 1 <= w.block_count <= 4
        assert abs(math.fsum(w.measures) - 1.0) < 1e-12
    assert sample_graphon(0, 4) != sample_graphon(1, 4)


def test_sample_kernel_range():
    for seed in range(20):
        w = sample_kernel(seed, 4, -1.0, 2.0)
        assert not w.graphon
        assert all(-1.0 <= v <= 2.0 for row in w.values for v in row)
        assert w == sample_kernel(seed, 4, -1.0, 2.0)


def test_path_inequalities(graphon_suite):
    """Odd-ended path power inequalities plus the t(P5) >= t(K2) t(P4) corollary."""
    paths = {k: make_family("path", k) for k in (1, 2, 3, 4, 5)}
    for w in graphon_suite:
        t = {k: density(p, w) for k, p in paths.items()}
        assert t[1] == pytest.approx(1.0, abs=1e-12)
        assert t[1] ** 3 * t[5] - t[2] ** 4 >= -1e-9
        assert t[1] * t[5] ** 3 - t[4] ** 4 >= -1e-9
        assert t[3] * t[5] - t[4] ** 2 >= -1e-9
        assert t[5] - t[2] * t[4] >= -1e-9


def test_one_minus_on_kernels():
    w = sample_kernel(7, 3, -1.0, 2.0)
    v = one_minus(w)
    assert v.values[0][0] == pytest.approx(1.0 - w.values[0][0])
    assert not v.graphon
    assert one_minus(sample_graphon(7, 3)).graphon


def test_kernel_json_round_trip():
    for seed in range(5):
        w = sample_graphon(seed, 4)
        assert kernel_from_json(kernel_to_json(w)) == w
    with pytest.raises(ValueError):
        kernel_from_json({"measures": [1.0]})

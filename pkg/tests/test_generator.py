import numpy as np
import pytest

from cliquekernel.generator import GenSpec, default_edge_count, generate, splitmix64

from conftest import check_invariants


def test_splitmix64_reference_values():
    # First outputs for seed 0 of the reference C implementation.
    assert splitmix64(0, 0, 3).tolist() == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def _splitmix64_scalar(seed, count):
    mask = (1 << 64) - 1
    state, out = seed, []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & mask
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & mask
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & mask
        out.append(z ^ (z >> 31))
    return out


@pytest.mark.parametrize("seed", [0, 1, 2**63 + 12345, 2**64 - 1])
def test_splitmix64_matches_sequential_recurrence(seed):
    assert splitmix64(seed, 0, 40).tolist() == _splitmix64_scalar(seed, 40)


def test_splitmix64_blocks_are_consistent():
    whole = splitmix64(99, 0, 50)
    assert np.array_equal(np.concatenate([splitmix64(99, 0, 20), splitmix64(99, 20, 30)]), whole)


@pytest.mark.parametrize("n, m", [(100, 4750), (500, 123750), (1900, 1800250)])
def test_default_edge_count(n, m):
    assert default_edge_count(n) == m


def test_default_edge_count_rejects_small_n():
    with pytest.raises(ValueError):
        default_edge_count(6)


def test_minimum_edges_is_the_path():
    for seed in range(5):
        g = generate(GenSpec(5, 4, seed))
        assert list(g.edges()) == [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_maximum_edges_is_complete():
    assert generate(GenSpec(5, 10, 1)).edge_count == 10


def test_deterministic():
    a = generate(GenSpec(8, default_edge_count(8), 1))
    b = generate(GenSpec(8, default_edge_count(8), 1))
    assert np.array_equal(a.adj, b.adj)
    c = generate(GenSpec(8, default_edge_count(8), 2))
    assert a.edge_count == c.edge_count


@pytest.mark.parametrize("n, m, seed", [(2, 1, 0), (10, 9, 3), (30, 200, 4), (64, 2016, 5), (200, 19000, 6)])
def test_structure(n, m, seed):
    g = generate(GenSpec(n, m, seed))
    check_invariants(g)
    assert g.edge_count == m
    assert all(g.is_edge(i, i + 1) for i in range(n - 1))


@pytest.mark.parametrize("n, m", [(1, 0), (5, 3), (5, 11)])
def test_infeasible_specs(n, m):
    with pytest.raises(ValueError):
        GenSpec(n, m, 0)


def test_skewed_sampler_has_larger_degree_variance():
    n, m = 600, 6000
    skewed = [generate(GenSpec(n, m, s)).degrees().var() for s in range(3)]
    uniform = [generate(GenSpec(n, m, s), skew=1.0).degrees().var() for s in range(3)]
    assert min(skewed) > max(uniform)

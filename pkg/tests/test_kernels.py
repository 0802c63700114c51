from __future__ import annotations

import numpy as np
import pytest

from chiforge import _accel, kernels
from chiforge.generators import class_masks, pattern_table
from chiforge.graph import Graph
from chiforge.oracles import chromatic_number, clique_number
from chiforge.patterns import CATALOG, CLI_CLASSES, PatternId, find_induced, is_free, is_perfect_small

needs_numba = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")


def test_pair_bit_matches_graph6_order():
    g = Graph.from_mask(5, 1 << kernels.pair_bit(2, 4))
    assert g.edges() == [(2, 4)]
    assert kernels.pair_bit(4, 2) == kernels.pair_bit(2, 4)
    for m in (0, 1, 0b1011, (1 << 10) - 1):
        assert Graph.from_mask(5, m).edge_mask() == m


def test_iso_table_counts():
    # labeled copies on p vertices: p! / |Aut|
    assert int(pattern_table(PatternId.TWO_K2).sum()) == 3
    assert int(pattern_table(PatternId.C4).sum()) == 3
    assert int(pattern_table(PatternId.P4).sum()) == 12
    assert int(pattern_table(PatternId.C5).sum()) == 12
    assert int(pattern_table(PatternId.K5).sum()) == 1


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 61), (5, 834), (6, 19258)])
def test_2k2_free_labeled_counts(n, count):
    assert len(class_masks(n, "2k2")) == count


def test_unfiltered_counts():
    for n in range(6):
        assert len(class_masks(n)) == 2 ** (n * (n - 1) // 2)


@pytest.mark.parametrize("backend", ["numpy", pytest.param("numba", marks=needs_numba)])
@pytest.mark.parametrize("n", [4, 5])
def test_kernel_filter_matches_is_free(backend, n):
    masks = class_masks(n, backend=backend)
    for name in CLI_CLASSES:
        got = set(class_masks(n, name, backend=backend).tolist())
        want = {int(m) for m in masks if is_free(Graph.from_mask(n, int(m)), name).member}
        assert got == want, name


@pytest.mark.slow
def test_kernel_filter_matches_detector_n6():
    masks = class_masks(6)
    for pid in PatternId:
        p = CATALOG[pid][0]
        hit = kernels.contains_pattern(masks, 6, p, pattern_table(pid))
        for m, h in zip(masks.tolist(), hit.tolist()):
            assert h == (find_induced(Graph.from_mask(6, m), pid) is not None), (m, pid)


@needs_numba
@pytest.mark.parametrize("n", [5, 6, 7])
def test_backends_agree_on_contains(n):
    rng = np.random.default_rng(n)
    masks = rng.integers(0, 1 << kernels.num_pairs(n), size=4000, dtype=np.int64)
    for pid in (PatternId.TWO_K2, PatternId.GEM, PatternId.P2_U_P4, PatternId.C5):
        p = CATALOG[pid][0]
        a = kernels.contains_pattern(masks, n, p, pattern_table(pid), backend="numba")
        b = kernels.contains_pattern(masks, n, p, pattern_table(pid), backend="numpy")
        assert np.array_equal(a, b)


@needs_numba
@pytest.mark.parametrize("n", [1, 4, 6])
def test_backends_agree_on_chi_omega(n):
    masks = class_masks(n) if n < 6 else np.arange(0, 1 << 15, 7, dtype=np.int64)
    a = kernels.subset_chi_omega(masks, n, backend="numba")
    b = kernels.subset_chi_omega(masks, n, backend="numpy")
    for x, y in zip(a, b):
        assert np.array_equal(x, y)


@pytest.mark.parametrize("backend", ["numpy", pytest.param("numba", marks=needs_numba)])
def test_chi_omega_matches_oracles(backend):
    n = 6
    masks = np.arange(0, 1 << 15, 13, dtype=np.int64)
    chi, omega, perfect = kernels.subset_chi_omega(masks, n, backend=backend)
    for m, c, w, p in zip(masks.tolist(), chi.tolist(), omega.tolist(), perfect.tolist()):
        g = Graph.from_mask(n, m)
        assert (c, w) == (chromatic_number(g), clique_number(g)), m
        assert p == is_perfect_small(g), m


@pytest.mark.parametrize("backend", ["numpy", pytest.param("numba", marks=needs_numba)])
def test_extend_free_builds_next_level(backend):
    table = pattern_table(PatternId.TWO_K2)
    for n in (3, 4, 5):
        parents = class_masks(n, "2k2")
        children = kernels.extend_free(parents, n, 4, table, backend=backend)
        assert sorted(children.tolist()) == class_masks(n + 1, "2k2").tolist()


def test_mask_width_guard():
    with pytest.raises(ValueError):
        kernels.contains_pattern(np.zeros(1, dtype=np.int64), 12, 4, pattern_table(PatternId.C4))
    with pytest.raises(ValueError):
        kernels.subset_chi_omega(np.zeros(1, dtype=np.int64), 5, backend="gpu")

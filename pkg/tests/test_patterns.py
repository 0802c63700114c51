from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import given

from chiforge.errors import BudgetExceeded
from chiforge.graph import Graph, complement, induced, join, new_graph
from chiforge.oracles import chromatic_number, clique_number
from chiforge.patterns import (
    CATALOG,
    CLI_CLASSES,
    REGISTRY,
    PatternId,
    all_diamonds,
    find_c4,
    find_c5,
    find_diamond,
    find_induced,
    get_class,
    is_chordal,
    is_cograph,
    is_free,
    is_induced_copy,
    is_perfect_small,
    is_pseudo_split,
    is_split,
    pattern_graph,
)

from conftest import NAMED, clique, cycle, graphs, path


def _labeled_copies(pid: PatternId) -> set[tuple[int, ...]]:
    """Edge signatures of every relabeling of a catalog pattern on 0..p-1."""
    p, edges = CATALOG[pid]
    pairs = [(i, j) for j in range(p) for i in range(j)]
    out = set()
    for perm in permutations(range(p)):
        es = {frozenset((perm[a], perm[b])) for a, b in edges}
        out.add(tuple(frozenset(q) in es for q in pairs))
    return out


def _brute_contains(g: Graph, pid: PatternId, copies) -> bool:
    p = CATALOG[pid][0]
    for sub in combinations(range(g.n), p):
        sig = tuple(g.has_edge(sub[i], sub[j]) for j in range(p) for i in range(j))
        if sig in copies:
            return True
    return False


def test_catalog_sizes():
    expect = {
        PatternId.TWO_K2: (4, 2), PatternId.P4: (4, 3), PatternId.C4: (4, 4), PatternId.C5: (5, 5),
        PatternId.P2_U_P3: (5, 3), PatternId.P2_U_P4: (6, 4), PatternId.P4_U_K1: (5, 3),
        PatternId.DIAMOND: (4, 5), PatternId.PAW: (4, 4), PatternId.GEM: (5, 7),
        PatternId.WHEEL4: (5, 8), PatternId.PARAGLIDER: (5, 7), PatternId.HVN: (5, 8),
        PatternId.K5_MINUS_E: (5, 9), PatternId.K4: (4, 6), PatternId.K5: (5, 10),
        PatternId.K1_3: (4, 3),
    }
    assert set(expect) == set(PatternId)
    for pid, (p, m) in expect.items():
        h = pattern_graph(pid)
        assert (h.n, h.num_edges) == (p, m), pid


def test_join_forms():
    k1 = new_graph(1)
    assert join(path(4), k1) == pattern_graph(PatternId.GEM)
    assert join(cycle(4), k1) == pattern_graph(PatternId.WHEEL4)
    assert join(pattern_graph(PatternId.PAW), k1) == pattern_graph(PatternId.HVN)
    assert join(pattern_graph(PatternId.DIAMOND), k1) == pattern_graph(PatternId.K5_MINUS_E)
    assert complement(pattern_graph(PatternId.P2_U_P3)) == pattern_graph(PatternId.PARAGLIDER)


def test_find_induced_examples():
    assert find_induced(cycle(5), PatternId.GEM) is None
    w = find_induced(cycle(5), PatternId.P4)
    assert w is not None and is_induced_copy(cycle(5), w)
    assert w.vertices == (0, 1, 2, 3)
    assert find_induced(NAMED["gem"], PatternId.TWO_K2) is None


def test_is_free_examples():
    assert is_free(cycle(5), "2k2-gem").member
    v = is_free(NAMED["2K2"], "2k2-gem")
    assert not v.member and v.witness.pattern is PatternId.TWO_K2
    assert sorted(v.witness.vertices) == [0, 1, 2, 3]
    v = is_free(clique(5), "2k2-k5")
    assert not v and v.witness.pattern is PatternId.K5


def test_is_free_reports_first_catalog_pattern():
    g = join(NAMED["2K2"], new_graph(1))
    v = is_free(g, "2k2-gem")
    assert not v.member and v.witness.pattern is PatternId.TWO_K2


def test_specialised_finders():
    w = find_c5(cycle(5))
    assert w is not None and sorted(w.vertices) == list(range(5))
    assert is_induced_copy(cycle(5), w)
    assert find_c4(clique(4)) is None
    d = find_diamond(NAMED["diamond"])
    v1, v2, v3, v4 = d.vertices
    degs = NAMED["diamond"].degrees()
    assert {degs[v2], degs[v4]} == {3} and {degs[v1], degs[v3]} == {2}
    assert not NAMED["diamond"].has_edge(v1, v3)


def test_all_diamonds_are_labeled_copies():
    g = NAMED["K5-e"]
    ds = all_diamonds(g)
    assert ds and all(is_induced_copy(g, d) for d in ds)
    assert find_diamond(g) == ds[0]


def test_perfect_small_examples():
    assert not is_perfect_small(cycle(5))
    assert is_perfect_small(cycle(6))
    assert is_perfect_small(NAMED["gem"])
    assert not is_perfect_small(NAMED["C7-bar"])
    assert not is_perfect_small(cycle(7))
    with pytest.raises(BudgetExceeded):
        is_perfect_small(cycle(13))


def test_recognizer_examples():
    paw = pattern_graph(PatternId.PAW)
    assert is_split(paw)
    assert is_pseudo_split(cycle(5)) and not is_split(cycle(5))
    assert not is_cograph(path(4))
    assert is_chordal(paw) and not is_chordal(cycle(4))


def test_registry_names():
    assert set(CLI_CLASSES) <= set(REGISTRY)
    with pytest.raises(KeyError, match="2k2-gem"):
        get_class("nope")


@pytest.mark.parametrize("name, omega, value", [
    ("2k2", 3, 6), ("2k2-gem", 3, 5), ("2k2-wheel4", 2, 7), ("2k2-hvn", 2, 5),
    ("2k2-k5e", 2, 6), ("2k2-k5", 3, 7), ("2k2-k5", 4, 9), ("p2p4", 3, 12),
    ("pseudo-split", 2, 3), ("split", 4, 4), ("2k2-paraglider", 2, 3),
])
def test_bound_values(name, omega, value):
    assert get_class(name).bound(omega) == value


def test_cubic_bound_formula():
    for w in range(12):
        assert get_class("p2p4").bound(w) == (w ** 3 - w ** 2 + 2 * w) // 2 == (w * (w - 1) // 2) * w + w


@pytest.mark.parametrize("n", [4, 5])
def test_detector_matches_brute_force_exhaustive(n):
    pairs = n * (n - 1) // 2
    copies = {pid: _labeled_copies(pid) for pid in PatternId}
    for mask in range(1 << pairs):
        g = Graph.from_mask(n, mask)
        for pid in PatternId:
            assert (find_induced(g, pid) is not None) == _brute_contains(g, pid, copies[pid]), (mask, pid)


@pytest.mark.slow
def test_detector_matches_brute_force_n6():
    copies = {pid: _labeled_copies(pid) for pid in PatternId}
    for mask in range(1 << 15):
        g = Graph.from_mask(6, mask)
        for pid in PatternId:
            assert (find_induced(g, pid) is not None) == _brute_contains(g, pid, copies[pid]), (mask, pid)


@given(graphs(max_n=8))
def test_witness_soundness(g):
    for pid in PatternId:
        w = find_induced(g, pid)
        if w is not None:
            assert is_induced_copy(g, w)
            h, _ = induced(g, w.mask)
            assert h.num_edges == pattern_graph(pid).num_edges


@pytest.mark.parametrize("pid", [PatternId.P4, PatternId.PAW, PatternId.DIAMOND])
@given(g=graphs(max_n=7))
def test_witness_is_lexicographically_first(pid, g):
    h = pattern_graph(pid)
    first = None
    for emb in permutations(range(g.n), h.n):
        if all(g.has_edge(emb[i], emb[j]) == h.has_edge(i, j) for j in range(h.n) for i in range(j)):
            first = emb
            break
    w = find_induced(g, pid)
    assert (w.vertices if w else None) == first


@given(graphs(max_n=9))
def test_complement_duality_p2p3_paraglider(g):
    a = find_induced(g, PatternId.P2_U_P3) is not None
    b = find_induced(complement(g), PatternId.PARAGLIDER) is not None
    assert a == b


@given(graphs(max_n=8))
def test_perfection_self_complementary(g):
    assert is_perfect_small(g) == is_perfect_small(complement(g))


@given(graphs(max_n=9))
def test_split_chain(g):
    if is_split(g):
        assert is_pseudo_split(g)
        assert is_chordal(g)
    if is_pseudo_split(g):
        assert is_free(g, "2k2").member


@given(graphs(max_n=8))
def test_cograph_is_perfect(g):
    if is_cograph(g):
        assert is_perfect_small(g)
        assert chromatic_number(g) == clique_number(g)


@given(graphs(max_n=9))
def test_chordal_matches_hole_scan(g):
    has_hole = any(find_induced(g, pid) is not None for pid in (PatternId.C4, PatternId.C5))
    if has_hole:
        assert not is_chordal(g)

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiforge.errors import BudgetExceeded, GraphError
from chiforge.generators import (
    c5_expansion_family,
    class_masks,
    enumerate_labeled,
    random_2k2_free,
    random_in_class,
    read_corpus,
)
from chiforge.graph import new_graph, write_graph6
from chiforge.oracles import chromatic_number, clique_number
from chiforge.patterns import CLI_CLASSES, is_free

from conftest import cycle


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_labeled(3)) == 8
    assert sum(1 for _ in enumerate_labeled(4, "2k2")) == 61
    graphs = list(enumerate_labeled(0))
    assert len(graphs) == 1 and graphs[0].n == 0
    for n in range(6):
        assert sum(1 for _ in enumerate_labeled(n)) == 2 ** (n * (n - 1) // 2)


def test_enumerate_is_in_mask_order_and_distinct():
    items = list(enumerate_labeled(4).indexed())
    assert [m for m, _ in items] == list(range(64))
    assert len({g for _, g in items}) == 64
    assert all(g.edge_mask() == m for m, g in items)


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded, match="read_corpus"):
        enumerate_labeled(8)


@pytest.mark.parametrize("cls", CLI_CLASSES)
def test_filtered_stream_members(cls):
    for g in enumerate_labeled(5, cls):
        assert is_free(g, cls).member


def test_pinned_class_counts_n5():
    counts = {c: len(class_masks(5, c)) for c in CLI_CLASSES}
    assert counts == {
        "2k2": 834, "2k2-gem": 774, "2k2-wheel4": 819, "2k2-paraglider": 804, "2k2-hvn": 804,
        "2k2-k5e": 824, "2k2-k5": 833, "p2p4": 1024, "pseudo-split": 644, "split": 632,
    }


def test_c5_expansion_examples():
    assert c5_expansion_family((1, 1, 1, 1, 1)) == cycle(5)
    g = c5_expansion_family((2, 1, 1, 1, 1))
    assert (g.n, clique_number(g), chromatic_number(g)) == (6, 2, 3)
    g = c5_expansion_family((2, 2, 2, 2, 2))
    assert (g.n, clique_number(g), chromatic_number(g)) == (10, 2, 3)
    with pytest.raises(GraphError):
        c5_expansion_family((0, 1, 1, 1, 1))
    with pytest.raises(GraphError):
        c5_expansion_family((1, 1, 1, 1))


@given(st.tuples(*[st.integers(1, 4)] * 5))
def test_c5_expansion_size_and_omega(sizes):
    g = c5_expansion_family(sizes)
    assert g.n == sum(sizes) and clique_number(g) == 2


def test_random_in_class():
    g = random_in_class(5, "2k2", seed=1)
    assert g is not None and is_free(g, "2k2").member
    g = random_in_class(4, "2k2-k5", seed=3)
    assert g.n == 4 and is_free(g, "2k2").member
    assert random_in_class(6, "2k2-gem", 9) == random_in_class(6, "2k2-gem", 9)
    assert random_in_class(9, "split", 0, attempts=0) is None


@given(st.integers(1, 40), st.integers(0, 2**32 - 1))
def test_random_2k2_free_is_member_and_deterministic(n, seed):
    g = random_2k2_free(n, seed)
    assert g.n == n and is_free(g, "2k2").member
    assert random_2k2_free(n, seed) == g


def test_read_corpus(tmp_path):
    p = tmp_path / "three.g6"
    lines = [write_graph6(g) for g in (cycle(5), new_graph(1), new_graph(3, [(0, 1)]))]
    p.write_text("\n".join(lines) + "\n")
    s = read_corpus(p)
    assert [write_graph6(g) for g in s] == lines and s.errors == []

    empty = tmp_path / "empty.g6"
    empty.write_text("")
    assert list(read_corpus(empty)) == []

    bad = tmp_path / "bad.g6"
    bad.write_text(f"{lines[0]}\nD?{{{{\n{lines[2]}\n")
    s = read_corpus(bad)
    got = list(s.indexed())
    assert [i for i, _ in got] == [1, 3]
    assert len(s.errors) == 1 and s.errors[0].line == 2
    assert "line 2" in str(s.errors[0])

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiforge.errors import BudgetExceeded
from chiforge.generators import c5_expansion_family, random_2k2_free
from chiforge.graph import complement, disjoint_union, induced, is_clique, is_independent, is_proper, new_graph
from chiforge.oracles import (
    check_clique_certificate,
    check_coloring_certificate,
    chromatic_exact,
    chromatic_number,
    clique_cover_exact,
    clique_number,
    dsatur_greedy,
    independence_number,
    max_clique,
)
from chiforge.patterns import is_perfect_small

from conftest import NAMED, clique, cycle, edgeless, graphs


def brute_omega(g) -> int:
    best = 0
    for s in range(1 << g.n):
        if s.bit_count() > best and is_clique(g, s):
            best = s.bit_count()
    return best


def brute_chi(g) -> int:
    """Minimum number of stable sets covering V, by DP over vertex subsets."""
    full = (1 << g.n) - 1
    stable = [is_independent(g, s) for s in range(full + 1)]
    inf = g.n + 1
    dp = [inf] * (full + 1)
    dp[0] = 0
    for s in range(1, full + 1):
        low = s & -s
        rest = s & ~low
        # the stable set containing the lowest vertex of s
        t = rest
        while True:
            part = t | low
            if stable[part] and dp[s & ~part] + 1 < dp[s]:
                dp[s] = dp[s & ~part] + 1
            if t == 0:
                break
            t = (t - 1) & rest
    return dp[full]


def k33():
    return new_graph(6, [(i, j) for i in range(3) for j in range(3, 6)])


def test_max_clique_examples():
    assert clique_number(clique(5)) == 5
    assert clique_number(cycle(5)) == 2
    r = max_clique(NAMED["paraglider"])
    assert r.value == 3 and check_clique_certificate(NAMED["paraglider"], r)


def test_chromatic_examples():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(k33()) == 2
    assert chromatic_number(c5_expansion_family((2, 1, 1, 1, 1))) == 3
    assert chromatic_number(new_graph(0)) == 0
    assert chromatic_number(edgeless(4)) == 1


def test_alpha_theta_examples():
    assert independence_number(clique(5)).value == 1
    assert clique_cover_exact(clique(5)).value == 1
    assert independence_number(cycle(5)).value == 2
    assert clique_cover_exact(cycle(5)).value == 3
    r = clique_cover_exact(NAMED["paraglider"])
    assert r.value == 2
    # color classes of the certificate are cliques of the paraglider
    p = NAMED["paraglider"]
    for c in set(r.certificate.colors):
        cls = sum(1 << v for v, x in enumerate(r.certificate.colors) if x == c)
        assert is_clique(p, cls)


def test_budget_exhaustion_is_an_error():
    g = random_2k2_free(40, 3)
    with pytest.raises(BudgetExceeded) as info:
        chromatic_exact(g, budget=1)
    assert info.value.best is not None
    dense = new_graph(40, [(i, j) for j in range(40) for i in range(j) if (i * 7 + j * 13) % 5 < 3])
    with pytest.raises(BudgetExceeded) as info:
        max_clique(dense, budget=1)
    assert info.value.best >= 1


def test_beyond_one_word():
    g = disjoint_union(clique(6), cycle(70))
    assert clique_number(g) == 6
    assert chromatic_number(g) == 6


@given(graphs(max_n=7))
def test_oracles_match_brute_force(g):
    assert clique_number(g) == brute_omega(g)
    assert chromatic_number(g) == brute_chi(g)


@given(graphs(max_n=10))
def test_sandwich_and_certificates(g):
    w = max_clique(g)
    c = chromatic_exact(g)
    assert check_clique_certificate(g, w)
    assert check_coloring_certificate(g, c)
    assert w.value <= c.value <= dsatur_greedy(g).k


@given(graphs(max_n=10))
def test_duality(g):
    h = complement(g)
    assert chromatic_number(g) == clique_cover_exact(h).value
    assert clique_number(g) == independence_number(h).value
    s = independence_number(g).certificate
    assert is_independent(g, s)


@given(graphs(min_n=1, max_n=10), st.data())
def test_monotone_under_induced(g, data):
    s = data.draw(st.integers(0, g.all))
    h, _ = induced(g, s)
    assert chromatic_number(h) <= chromatic_number(g)
    assert clique_number(h) <= clique_number(g)


@given(graphs(max_n=6))
def test_perfection_matches_definition(g):
    definitional = all(
        chromatic_number(h) == clique_number(h)
        for h in (induced(g, s)[0] for s in range(1 << g.n))
    )
    assert is_perfect_small(g) == definitional


@given(graphs(max_n=12))
def test_dsatur_is_proper(g):
    assert is_proper(g, dsatur_greedy(g))


def test_deterministic_results():
    g = random_2k2_free(18, 11)
    a, b = chromatic_exact(g), chromatic_exact(g)
    assert a.certificate == b.certificate and a.value == b.value

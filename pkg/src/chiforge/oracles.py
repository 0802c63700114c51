"""Exact omega, alpha, chi and theta with certificates.

Both searches count nodes against a budget (default 10**7, overridable with
the ``CHIFORGE_BUDGET`` environment variable or per call). Running out is a
``BudgetExceeded`` error carrying the best bound found, never a silent
approximation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Any

from chiforge.errors import BudgetExceeded
from chiforge.graph import Coloring, Graph, bits, complement, is_clique, is_proper, popcount

DEFAULT_BUDGET = 10_000_000
_CACHE_MAX_N = 10
_CACHE_LIMIT = 1 << 18


def resolve_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("CHIFORGE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class ExactResult:
    value: int
    certificate: Any  # vertex-set mask for omega/alpha, Coloring for chi/theta
    nodes_explored: int


def _color_sort(adj, p: int) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring of P; returns vertices with their color bound."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    while p:
        color += 1
        q = p
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            p &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique_mask(g: Graph, budget: int) -> tuple[int, int]:
    adj = g.adj
    # greedy start: repeatedly take the highest-degree candidate
    best = 0
    cand = g.all
    while cand:
        v = max(bits(cand), key=lambda u: (popcount(adj[u] & cand), -u))
        best |= 1 << v
        cand &= adj[v]
    best_size = popcount(best)
    nodes = 0

    def expand(r: int, r_size: int, p: int) -> None:
        nonlocal best, best_size, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(
                f"max_clique budget {budget} exhausted", best=best_size, certificate=best
            )
        order, bounds = _color_sort(adj, p)
        for idx in range(len(order) - 1, -1, -1):
            if r_size + bounds[idx] <= best_size:
                return
            v = order[idx]
            nr = r | (1 << v)
            np_ = p & adj[v]
            if np_:
                expand(nr, r_size + 1, np_)
            elif r_size + 1 > best_size:
                best, best_size = nr, r_size + 1
            p &= ~(1 << v)

    if g.n:
        expand(0, 0, g.all)
    return best, nodes


_clique_cache: dict[Graph, tuple[int, int]] = {}
_chi_cache: dict[Graph, tuple[Coloring, int]] = {}


def max_clique(g: Graph, budget: int | None = None) -> ExactResult:
    """Maximum clique by branch and bound with greedy-coloring pruning."""
    if g.n <= _CACHE_MAX_N and g in _clique_cache:
        mask, nodes = _clique_cache[g]
        return ExactResult(popcount(mask), mask, nodes)
    mask, nodes = _max_clique_mask(g, resolve_budget(budget))
    if g.n <= _CACHE_MAX_N:
        if len(_clique_cache) > _CACHE_LIMIT:
            _clique_cache.clear()
        _clique_cache[g] = (mask, nodes)
    return ExactResult(popcount(mask), mask, nodes)


def clique_number(g: Graph, budget: int | None = None) -> int:
    return max_clique(g, budget).value


def dsatur_greedy(g: Graph) -> Coloring:
    """Greedy DSATUR: max saturation, then max degree, then lowest index; lowest color."""
    n = g.n
    adj = g.adj
    colors = [-1] * n
    nbr_colors = [0] * n  # bitmask of colors present in the neighbourhood
    uncolored = g.all
    while uncolored:
        v = max(
            bits(uncolored),
            key=lambda u: (popcount(nbr_colors[u]), popcount(adj[u] & uncolored), -u),
        )
        free = ~nbr_colors[v]
        c = (free & -free).bit_length() - 1
        colors[v] = c
        uncolored &= ~(1 << v)
        for w in bits(adj[v]):
            nbr_colors[w] |= 1 << c
    return Coloring(tuple(colors))


def _chromatic_search(g: Graph, budget: int) -> tuple[Coloring, int]:
    n = g.n
    if n == 0:
        return Coloring(()), 0
    adj = g.adj
    clique = _max_clique_mask(g, budget)[0]
    lb = popcount(clique)
    best = dsatur_greedy(g)
    best_k = best.k
    if best_k == lb:
        return best, 0

    colors = [-1] * n
    # colour the clique first: fixes lb colours and breaks palette symmetry
    classes = []
    for c, v in enumerate(bits(clique)):
        colors[v] = c
        classes.append(1 << v)
    uncolored = g.all & ~clique
    nodes = 0
    done = False

    def search(uncolored: int, used: int) -> None:
        nonlocal best, best_k, nodes, done
        if done:
            return
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(
                f"chromatic_exact budget {budget} exhausted", best=best_k, certificate=best
            )
        if not uncolored:
            best = Coloring(tuple(colors))
            best_k = used
            if best_k == lb:
                done = True
            return
        # DSATUR branching vertex: max saturation, ties to max uncolored degree, then lowest index
        v = -1
        key = (-1, -1)
        for u in bits(uncolored):
            sat = 0
            for c in range(used):
                if classes[c] & adj[u]:
                    sat += 1
            k = (sat, popcount(adj[u] & uncolored))
            if k > key:
                key, v = k, u
        if key[0] == used and used + 1 >= best_k:
            return
        rest = uncolored & ~(1 << v)
        for c in range(used):
            if classes[c] & adj[v]:
                continue
            colors[v] = c
            classes[c] |= 1 << v
            search(rest, used)
            classes[c] &= ~(1 << v)
            colors[v] = -1
            if done:
                return
        if used + 1 < best_k:
            colors[v] = used
            classes.append(1 << v)
            search(rest, used + 1)
            classes.pop()
            colors[v] = -1

    search(uncolored, lb)
    return best, nodes


def chromatic_exact(g: Graph, budget: int | None = None) -> ExactResult:
    """Exact chromatic number by DSATUR-ordered branch and bound."""
    if g.n <= _CACHE_MAX_N and g in _chi_cache:
        col, nodes = _chi_cache[g]
        return ExactResult(col.k, col, nodes)
    col, nodes = _chromatic_search(g, resolve_budget(budget))
    col = col.compact()
    if g.n <= _CACHE_MAX_N:
        if len(_chi_cache) > _CACHE_LIMIT:
            _chi_cache.clear()
        _chi_cache[g] = (col, nodes)
    return ExactResult(col.k, col, nodes)


def chromatic_number(g: Graph, budget: int | None = None) -> int:
    return chromatic_exact(g, budget).value


def independence_number(g: Graph, budget: int | None = None) -> ExactResult:
    """alpha(G) = omega(complement of G); the certificate is a stable set of G."""
    return max_clique(complement(g), budget)


def clique_cover_exact(g: Graph, budget: int | None = None) -> ExactResult:
    """theta(G) = chi(complement of G); color classes of the certificate are cliques of G."""
    return chromatic_exact(complement(g), budget)


def check_clique_certificate(g: Graph, r: ExactResult) -> bool:
    return is_clique(g, r.certificate) and popcount(r.certificate) == r.value


def check_coloring_certificate(g: Graph, r: ExactResult) -> bool:
    return is_proper(g, r.certificate) and r.certificate.k == r.value

"""Graph corpora: exhaustive labeled enumeration, random members, families, files."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from chiforge import kernels
from chiforge.errors import BudgetExceeded, GraphError, ParseError
from chiforge.graph import Graph, expansion, new_graph, read_graph6
from chiforge.patterns import CATALOG, ClassSpec, get_class, is_free

MAX_EXHAUSTIVE_N = 7
P_SWEEP = (0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8)


@dataclass
class GraphStream:
    """Single-consumer stream of ``(index, Graph)`` with a source tag.

    Iterating yields graphs; ``indexed()`` keeps the index (edge mask, sample
    number or 1-based line number). Parse problems of file streams collect in
    ``errors`` while the stream carries on.
    """

    source: str
    items: Iterable[tuple[int, Graph]]
    errors: list[ParseError] = field(default_factory=list)

    def indexed(self) -> Iterator[tuple[int, Graph]]:
        yield from self.items

    def __iter__(self) -> Iterator[Graph]:
        for _, g in self.items:
            yield g


@lru_cache(maxsize=None)
def pattern_table(pid) -> np.ndarray:
    p, edges = CATALOG[pid]
    return kernels.iso_table(p, edges)


def class_masks(n: int, spec: ClassSpec | str | None = None, backend: str | None = None) -> np.ndarray:
    """Sorted edge masks of all labeled members on ``n <= 7`` vertices."""
    if n > MAX_EXHAUSTIVE_N:
        raise BudgetExceeded(
            f"labeled enumeration stops at n={MAX_EXHAUSTIVE_N}; feed larger graphs via read_corpus"
        )
    masks = np.arange(1 << kernels.num_pairs(n), dtype=np.int64)
    if spec is None:
        return masks
    if isinstance(spec, str):
        spec = get_class(spec)
    for pid in spec.forbidden:
        p = CATALOG[pid][0]
        masks = masks[~kernels.contains_pattern(masks, n, p, pattern_table(pid), backend)]
    return masks


def enumerate_labeled(n: int, filter: ClassSpec | str | None = None) -> GraphStream:
    """All labeled graphs on ``n`` vertices in edge-mask order, optionally filtered."""
    masks = class_masks(n, filter)
    tag = f"exhaustive({n})" + (f"|{filter if isinstance(filter, str) else filter.name}" if filter else "")
    return GraphStream(tag, ((int(m), Graph.from_mask(n, int(m))) for m in masks))


def c5_expansion_family(sizes: tuple[int, int, int, int, int]) -> Graph:
    """C5 with vertex i blown up into an independent set of ``sizes[i]`` vertices."""
    if len(sizes) != 5:
        raise GraphError(f"need five part sizes, got {len(sizes)}")
    c5 = new_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    g = expansion(c5, [(s, "independent") for s in sizes])
    return Graph(g.n, g.adj, label="C5(" + ",".join(map(str, sizes)) + ")")


def _gnp(n: int, p: float, rng: np.random.Generator) -> Graph:
    adj = [0] * n
    draws = rng.random(n * (n - 1) // 2)
    k = 0
    for j in range(n):
        for i in range(j):
            if draws[k] < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def random_in_class(
    n: int, spec: ClassSpec | str, seed: int, attempts: int = 10_000
) -> Graph | None:
    """First G(n, p) sample in the class, p cycling through 0.2..0.8; None if none found."""
    if isinstance(spec, str):
        spec = get_class(spec)
    rng = np.random.default_rng(seed)
    for t in range(attempts):
        g = _gnp(n, P_SWEEP[t % len(P_SWEEP)], rng)
        if is_free(g, spec).member:
            return g
    return None


def random_2k2_free(n: int, seed: int) -> Graph:
    """A random 2K2-free graph, as the complement of a random C4-free graph.

    Pairs are offered in random order with a random acceptance rate; an edge
    uv joins the C4-free graph H unless some a ~ u, b ~ v, a ~ b closes an
    induced C4 u-v-b-a. Existing induced C4s can never appear later, so H
    stays C4-free throughout and G = complement(H) is 2K2-free.
    """
    rng = np.random.default_rng(seed)
    adj = [0] * n
    pairs = [(i, j) for j in range(n) for i in range(j)]
    order = rng.permutation(len(pairs))
    rate = rng.uniform(0.15, 1.0)
    for k in order:
        if rng.random() >= rate:
            continue
        u, v = pairs[k]
        # a in N(u) \ N[v], b in N(v) \ N[u], a ~ b
        a_side = adj[u] & ~adj[v] & ~(1 << v)
        b_side = adj[v] & ~adj[u] & ~(1 << u)
        closes = False
        while a_side:
            low = a_side & -a_side
            a = low.bit_length() - 1
            if adj[a] & b_side:
                closes = True
                break
            a_side ^= low
        if not closes:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(adj)), label=f"random2k2({n},{seed})")


def read_corpus(path: str | Path) -> GraphStream:
    """Stream a graph6 file; bad lines become ``ParseError`` entries tagged with their line."""
    path = Path(path)
    stream = GraphStream(f"file({path})", ())

    def gen():
        with path.open("rb") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line:
                    continue
                try:
                    g = read_graph6(line)
                except ParseError as exc:
                    stream.errors.append(ParseError(exc.reason, exc.offset, lineno))
                    continue
                yield lineno, g

    stream.items = gen()
    return stream

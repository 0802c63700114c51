"""Immutable simple graphs on bitset adjacency, colorings, and file formats.

Vertex sets are plain Python ints used as bitsets (bit ``v`` set means vertex
``v`` is a member). Python ints have no width limit, so the same code path
serves the small graphs of the exhaustive sweeps and the larger oracle inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from chiforge.errors import ColoringError, GraphError, ParseError

VertexSet = int

GRAPH6_HEADER = ">>graph6<<"


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex set in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@lru_cache(maxsize=None)
def _pair_order(n: int) -> tuple[tuple[int, int], ...]:
    # graph6 / edge-mask order: column-major upper triangle.
    return tuple((i, j) for j in range(1, n) for i in range(j))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    @property
    def all(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbors(self, v: int, within: VertexSet | None = None) -> VertexSet:
        return self.adj[v] if within is None else self.adj[v] & within

    def edge_mask(self) -> int:
        """Pack the graph into an edge mask (bit k = k-th pair in graph6 order)."""
        m = 0
        for k, (i, j) in enumerate(_pair_order(self.n)):
            if (self.adj[i] >> j) & 1:
                m |= 1 << k
        return m

    @classmethod
    def from_mask(cls, n: int, mask: int, label: str | None = None) -> "Graph":
        adj = [0] * n
        k = 0
        while mask:
            if mask & 1:
                i, j = _pair_order(n)[k]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            mask >>= 1
            k += 1
        return cls(n, tuple(adj), label)

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"Graph(n={self.n}, m={self.num_edges}{tag}, g6={write_graph6(self)!r})"


def new_graph(n: int, edges: Iterable[Sequence[int]] = (), label: str | None = None) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), label)


def complement(g: Graph) -> Graph:
    full = g.all
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)), g.label)


def induced(g: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``; vertex i of the result is the i-th smallest of ``s``.

    Returns the graph and the index map from new to old vertex ids.
    """
    verts = tuple(bits(s))
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        a = 0
        for w in bits(g.adj[v] & s):
            a |= 1 << pos[w]
        adj.append(a)
    return Graph(len(verts), tuple(adj)), verts


def relabel_back(mask: VertexSet, index_map: Sequence[int]) -> VertexSet:
    """Map a vertex set of an induced subgraph back to the parent's ids."""
    out = 0
    for i in bits(mask):
        out |= 1 << index_map[i]
    return out


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(a << offset for a in h.adj)
        offset += h.n
    return Graph(offset, tuple(adj))


def join(*graphs: Graph) -> Graph:
    """Disjoint union plus every edge between different parts."""
    u = disjoint_union(*graphs)
    full = u.all
    adj = list(u.adj)
    offset = 0
    for h in graphs:
        block = ((1 << h.n) - 1) << offset
        for v in range(offset, offset + h.n):
            adj[v] |= full & ~block
        offset += h.n
    return Graph(u.n, tuple(adj))


def expansion(g: Graph, parts: Sequence[tuple[int, str]]) -> Graph:
    """Replace vertex i by a clique or independent set of ``parts[i][0]`` vertices.

    Vertices of blocks i and j are adjacent exactly when i ~ j in ``g``.
    """
    if len(parts) != g.n:
        raise GraphError(f"expansion needs {g.n} parts, got {len(parts)}")
    offsets = []
    total = 0
    for i, (size, kind) in enumerate(parts):
        if size < 1:
            raise GraphError(f"expansion part {i} is empty; every part needs order >= 1")
        if kind not in ("clique", "independent"):
            raise GraphError(f"expansion part {i} has unknown kind {kind!r}")
        offsets.append(total)
        total += size
    block = [((1 << size) - 1) << offsets[i] for i, (size, _) in enumerate(parts)]
    adj = [0] * total
    for i, (size, kind) in enumerate(parts):
        outside = 0
        for j in bits(g.adj[i]):
            outside |= block[j]
        for v in range(offsets[i], offsets[i] + size):
            inner = block[i] & ~(1 << v) if kind == "clique" else 0
            adj[v] = outside | inner
    return Graph(total, tuple(adj))


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of ``g[within]`` as vertex sets, ordered by lowest vertex."""
    rest = g.all if within is None else within
    out = []
    while rest:
        frontier = rest & -rest
        comp = frontier
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph, within: VertexSet | None = None) -> bool:
    return len(components(g, within)) <= 1


def is_clique(g: Graph, s: VertexSet) -> bool:
    return all((s & ~g.adj[v] & ~(1 << v)) == 0 for v in bits(s))


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all((g.adj[v] & s) == 0 for v in bits(s))


def cross_edges(g: Graph, s: VertexSet, t: VertexSet) -> list[tuple[int, int]]:
    """The edge set [S, T] for disjoint S and T."""
    return [(u, v) for u in bits(s) for v in bits(g.adj[u] & t)]


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def classes(self) -> list[VertexSet]:
        out = [0] * self.k
        for v, c in enumerate(self.colors):
            out[c] |= 1 << v
        return out

    def compact(self) -> "Coloring":
        """Renumber colors 0..k-1 in order of first use."""
        remap: dict[int, int] = {}
        return Coloring(tuple(remap.setdefault(c, len(remap)) for c in self.colors))


def is_proper(g: Graph, c: Coloring) -> bool:
    if len(c.colors) != g.n:
        raise ColoringError(f"coloring covers {len(c.colors)} vertices, graph has {g.n}")
    if any(x < 0 for x in c.colors):
        raise ColoringError("color indices must be non-negative")
    cols = c.colors
    for u in range(g.n):
        cu = cols[u]
        for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
            if cols[v] == cu:
                return False
    return True


# --- graph6 -----------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for i, j in _pair_order(g.n):
        acc = (acc << 1) | ((g.adj[i] >> j) & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(63 + acc))
            acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def read_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip("\r\n")
    base = 0
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not line:
        raise ParseError("empty graph6 line", offset=base)
    for k, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} outside graph6 range 63..126", offset=base + k)
    vals = [ord(ch) - 63 for ch in line]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise ParseError("truncated vertex count", offset=base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise ParseError("truncated vertex count", offset=base + len(vals))
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise ParseError(
            f"expected {need} data bytes for n={n}, found {len(vals) - pos}",
            offset=base + min(len(vals), pos + need),
        )
    adj = [0] * n
    k = 0
    for i, j in _pair_order(n):
        byte = vals[pos + k // 6]
        if (byte >> (5 - k % 6)) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k += 1
    return Graph(n, tuple(adj))


# --- DIMACS .col --------------------------------------------------------------


def read_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 3 or parts[1] not in ("edge", "col"):
                raise ParseError(f"bad problem line {raw!r}", line=lineno)
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", line=lineno)
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if u != v:
                edges.append((u, v))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", line=lineno)
    if n is None:
        raise ParseError("missing 'p edge' line")
    try:
        return new_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.num_edges}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"

"""Block colorers for the structured pieces produced by the decompositions."""

from __future__ import annotations

from dataclasses import dataclass, field

from chiforge.errors import (
    BoundViolated,
    NotChordal,
    NotCograph,
    NotInClass,
    NotMultipartite,
    NotPseudoSplit,
)
from chiforge.graph import (
    Coloring,
    Graph,
    bits,
    complement,
    components,
    induced,
    is_clique,
    is_independent,
)
from chiforge.oracles import chromatic_exact, clique_number
from chiforge.patterns import PatternId, Witness, find_c5, find_induced, is_peo, mcs_order


@dataclass
class Cotree:
    kind: str  # "leaf" | "union" | "join"
    vertex: int = -1
    children: list["Cotree"] = field(default_factory=list)

    def leaves(self) -> list[int]:
        if self.kind == "leaf":
            return [self.vertex]
        return [v for c in self.children for v in c.leaves()]


def build_cotree(g: Graph) -> Cotree:
    """Cotree by alternating component / co-component splits."""
    if g.n == 0:
        return Cotree("union")
    co = complement(g)

    def rec(s: int) -> Cotree:
        if s & (s - 1) == 0:
            return Cotree("leaf", s.bit_length() - 1)
        parts = components(g, s)
        if len(parts) > 1:
            return Cotree("union", children=[rec(p) for p in parts])
        parts = components(co, s)
        if len(parts) > 1:
            return Cotree("join", children=[rec(p) for p in parts])
        h, idx = induced(g, s)
        w = find_induced(h, PatternId.P4)
        if w is not None:
            w = Witness(w.pattern, tuple(idx[v] for v in w.vertices))
        raise NotCograph(
            f"vertex set {list(bits(s))} is connected in the graph and its complement",
            witness=w,
        )

    return rec(g.all)


def color_cograph(g: Graph) -> Coloring:
    """Optimal coloring of a P4-free graph: unions share colors, joins stack them."""
    colors = [0] * g.n

    def paint(t: Cotree, base: int) -> int:
        if t.kind == "leaf":
            colors[t.vertex] = base
            return 1
        if t.kind == "union":
            return max((paint(c, base) for c in t.children), default=0)
        used = 0
        for c in t.children:
            used += paint(c, base + used)
        return used

    paint(build_cotree(g), 0)
    return Coloring(tuple(colors))


def color_chordal(g: Graph) -> Coloring:
    """Greedy in maximum-cardinality-search order, i.e. reverse of a perfect elimination order."""
    order = mcs_order(g)
    if not is_peo(g, order[::-1]):
        raise NotChordal("maximum cardinality search did not yield a perfect elimination order")
    colors = [-1] * g.n
    for v in order:
        used = 0
        for w in bits(g.adj[v]):
            if colors[w] >= 0:
                used |= 1 << colors[w]
        free = ~used
        colors[v] = (free & -free).bit_length() - 1
    return Coloring(tuple(colors))


def color_pseudo_split(g: Graph) -> Coloring:
    """At most omega+1 colors on a (2K2, C4)-free graph.

    Without an induced C5 the graph is split and chordal coloring is optimal.
    Otherwise every other vertex sees all of the C5 (clique side) or none of
    it (stable side); the clique side takes its own colors, the C5 three more,
    and the stable side reuses a C5 color.
    """
    w = find_c5(g)
    if w is None:
        try:
            return color_chordal(g)
        except NotChordal as exc:
            raise NotPseudoSplit(f"no C5 but not chordal: {exc}") from exc
    cyc = w.vertices
    cmask = w.mask
    k_side = s_side = 0
    for v in bits(g.all & ~cmask):
        seen = g.adj[v] & cmask
        if seen == cmask:
            k_side |= 1 << v
        elif seen == 0:
            s_side |= 1 << v
        else:
            raise NotPseudoSplit(
                f"vertex {v} sees {list(bits(seen))} of the C5 {list(cyc)}",
                witness=w,
            )
    if not is_clique(g, k_side):
        raise NotPseudoSplit(f"vertices complete to the C5 {list(bits(k_side))} are not a clique")
    if not is_independent(g, s_side):
        raise NotPseudoSplit(f"vertices anticomplete to the C5 {list(bits(s_side))} are not stable")
    colors = [0] * g.n
    base = 0
    for v in bits(k_side):
        colors[v] = base
        base += 1
    for pos, v in enumerate(cyc):
        colors[v] = base + (2 if pos == 4 else pos % 2)
    for v in bits(s_side):
        colors[v] = base
    return Coloring(tuple(colors))


def max_bipartite_matching(left: list[int], right_adj: dict[int, int]) -> dict[int, int]:
    """Augmenting-path matching; ``right_adj[u]`` is the bitset of u's partners."""
    match_r: dict[int, int] = {}

    def augment(u: int, seen: int) -> tuple[bool, int]:
        for r in bits(right_adj[u] & ~seen):
            seen |= 1 << r
            if r not in match_r:
                match_r[r] = u
                return True, seen
            ok, seen = augment(match_r[r], seen)
            if ok:
                match_r[r] = u
                return True, seen
        return False, seen

    for u in left:
        augment(u, 0)
    return {u: r for r, u in match_r.items()}


def color_cobipartite(g: Graph, sides: tuple[int, int]) -> Coloring:
    """Optimal coloring of a graph covered by two cliques, via maximum matching of
    the non-edges across the sides."""
    a, b = sides
    if a & b or (a | b) != g.all:
        raise NotInClass("co-bipartite sides must partition the vertex set")
    for name, s in (("first", a), ("second", b)):
        if not is_clique(g, s):
            raise NotInClass(f"{name} side {list(bits(s))} is not a clique")
    left = list(bits(a))
    partners = {u: b & ~g.adj[u] for u in left}
    matching = max_bipartite_matching(left, partners)
    colors = [-1] * g.n
    c = 0
    for u in left:
        colors[u] = c
        if u in matching:
            colors[matching[u]] = c
        c += 1
    for v in bits(b):
        if colors[v] < 0:
            colors[v] = c
            c += 1
    return Coloring(tuple(colors))


def multipartite_parts(g: Graph) -> list[int] | None:
    """The parts of a complete multipartite graph, or None if it is not one."""
    parts = components(complement(g))
    for p in parts:
        if not is_independent(g, p):
            return None
    return parts


def color_multipartite(g: Graph) -> Coloring:
    parts = multipartite_parts(g)
    if parts is None:
        raise NotMultipartite("complement is not a disjoint union of cliques")
    colors = [0] * g.n
    for i, p in enumerate(parts):
        for v in bits(p):
            colors[v] = i
    return Coloring(tuple(colors))


def color_exact_assert(g: Graph, bound: int, budget: int | None = None) -> Coloring:
    """Optimal coloring; raises ``BoundViolated`` if it needs more than ``bound`` colors."""
    r = chromatic_exact(g, budget)
    if r.value > bound:
        raise BoundViolated(r.value, bound)
    return r.certificate


def _paste(colors: list[int], index_map, sub: Coloring, offset: int = 0) -> None:
    for i, c in enumerate(sub.colors):
        colors[index_map[i]] = c + offset


def color_paw_block(g: Graph) -> Coloring:
    """At most omega+1 colors on a (2K2, paw)-free graph.

    Each component is complete multipartite or triangle-free; components share
    one palette.
    """
    colors = [0] * g.n
    for comp in components(g):
        h, idx = induced(g, comp)
        if h.n == 1:
            continue
        if multipartite_parts(h) is not None:
            _paste(colors, idx, color_multipartite(h))
            continue
        if clique_number(h) >= 3:
            raise NotInClass(
                f"component {list(idx)} has a triangle but is not complete multipartite",
                witness=find_induced(g, PatternId.PAW),
            )
        try:
            _paste(colors, idx, color_exact_assert(h, 3))
        except BoundViolated as exc:
            raise NotInClass(f"triangle-free component {list(idx)} needs {exc.chi} colors") from exc
    return Coloring(tuple(colors))


def color_diamond_block(g: Graph) -> Coloring:
    """At most omega+1 colors on a (2K2, diamond)-free graph, by bounded exact search."""
    omega = clique_number(g)
    try:
        return color_exact_assert(g, omega + 1)
    except BoundViolated as exc:
        raise NotInClass(f"diamond block needs {exc.chi} > omega+1 = {omega + 1} colors") from exc

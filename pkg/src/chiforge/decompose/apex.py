"""Apex combinator: a (2K2, K1+H)-free graph from a colorer for (2K2, H)-free graphs."""

from __future__ import annotations

from typing import Callable

from chiforge.decompose._assemble import Assembly, require_member
from chiforge.decompose.certificate import Block, BoundedColoring, DecompositionCertificate
from chiforge.graph import Coloring, Graph
from chiforge.oracles import clique_number
from chiforge.patterns import get_class
from chiforge.subsolvers import color_exact_assert


def color_apex(
    g: Graph,
    sub: Callable[[Graph], Coloring],
    f: Callable[[int], int],
    sub_class: str,
) -> BoundedColoring:
    """At most 2 f(omega-1) + 1 colors.

    With v1v2 the first edge, N(v1) and A2 (neighbours of v2 only) are
    H-free of smaller clique number and get ``sub`` on separate palettes;
    the common non-neighbours C plus v1 form one stable set.
    """
    omega = clique_number(g)
    if g.num_edges == 0:
        blocks = (Block(g.all, "independent", label="V"),) if g.n else ()
        cert = DecompositionCertificate("APEX", blocks)
        return BoundedColoring(Coloring((0,) * g.n), omega, omega, cert, omega)
    v1 = next(v for v in range(g.n) if g.adj[v])
    v2 = (g.adj[v1] & -g.adj[v1]).bit_length() - 1
    n1 = g.adj[v1]
    a2 = g.adj[v2] & ~n1 & ~(1 << v1)
    c = (g.all & ~n1 & ~g.adj[v2]) | 1 << v1
    asm = Assembly(g)
    asm.sub(n1, lambda h, _: sub(h), "recurse", "N(v1)", spec=sub_class)
    asm.sub(a2, lambda h, _: sub(h), "recurse", "A2", spec=sub_class)
    asm.stable(c, "C+v1", claim="common non-neighbours of an edge are independent")
    bound = 2 * f(omega - 1) + 1
    cert = DecompositionCertificate("APEX", tuple(asm.blocks), (v1, v2))
    return BoundedColoring(asm.coloring(), bound, omega, cert, bound)


def _k4_free_sub(h: Graph) -> Coloring:
    return color_exact_assert(h, min(clique_number(h) + 1, 4))


def color_k5_free(g: Graph, check: bool = True) -> BoundedColoring:
    """At most min(2 omega + 1, 9) colors, via the apex step over K4-free blocks."""
    if check:
        require_member(g, "2k2-k5")
    res = color_apex(g, _k4_free_sub, lambda w: min(w + 1, 4), "2k2-k4")
    bound = get_class("2k2-k5").bound(res.omega)
    return BoundedColoring(res.coloring, bound, res.omega, res.certificate, res.path_bound)

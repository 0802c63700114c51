"""Cover by a maximum clique: pair blocks A(e) and near-complete stable sets."""

from __future__ import annotations

from math import comb
from typing import Callable

from chiforge.decompose._assemble import Assembly, require_member
from chiforge.decompose.certificate import BoundedColoring, DecompositionCertificate
from chiforge.errors import NotTwoK2Free
from chiforge.graph import Coloring, Graph, bits, is_independent
from chiforge.oracles import max_clique
from chiforge.subsolvers import color_cograph


def color_wagon(
    g: Graph,
    block_sub: Callable[[Graph, tuple[int, ...], tuple[int, int]], Coloring],
    f: Callable[[int], int],
    block_tag: str,
) -> BoundedColoring:
    """At most C(w, 2) f(w) + w colors.

    For each clique pair v_i v_j (lexicographic), the not-yet-colored vertices
    missing both get ``block_sub`` on a fresh palette; the vertices missing
    exactly v_i join v_i in one stable set.
    """
    kres = max_clique(g)
    clique = list(bits(kres.certificate))
    omega = len(clique)
    asm = Assembly(g)
    done = kres.certificate
    for i, vi in enumerate(clique):
        for vj in clique[i + 1:]:
            block = g.all & ~g.adj[vi] & ~g.adj[vj] & ~done
            done |= block
            asm.sub(block, lambda h, idx, e=(vi, vj): block_sub(h, idx, e), block_tag, f"A({vi},{vj})")
    for vi in clique:
        others = kres.certificate & ~(1 << vi)
        b = 0
        for x in bits(g.all & ~done):
            if g.adj[x] & others == others:
                b |= 1 << x
        done |= b
        asm.stable(b | 1 << vi, f"B{vi}+v{vi}", claim="B_i with v_i is independent")
    bound = comb(omega, 2) * f(omega) + omega
    cert = DecompositionCertificate("WAGON", tuple(asm.blocks), tuple(clique))
    return BoundedColoring(asm.coloring(), bound, omega, cert, bound)


def _one_color(h: Graph, idx, e: tuple[int, int]) -> Coloring:
    if not is_independent(h, h.all):
        x, y = next(iter(h.edges()))
        raise NotTwoK2Free("A(e) is independent", (*e, idx[x], idx[y]),
                           f"an edge of the block and the clique edge {e} form a 2K2")
    return Coloring((0,) * h.n)


def color_2k2(g: Graph, check: bool = True) -> BoundedColoring:
    """At most C(w+1, 2) colors: each pair block is stable and gets one color."""
    if check:
        require_member(g, "2k2")
    return color_wagon(g, _one_color, lambda w: 1, "independent")


def color_p2p4(g: Graph, check: bool = True) -> BoundedColoring:
    """At most (w^3 - w^2 + 2w)/2 colors: each pair block is a cograph."""
    if check:
        require_member(g, "p2p4")
    return color_wagon(g, lambda h, idx, e: color_cograph(h), lambda w: w, "cograph")

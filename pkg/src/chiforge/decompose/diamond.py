"""Diamond-anchored classification and the HVN-free and (K5-e)-free colorers."""

from __future__ import annotations

from dataclasses import dataclass

from chiforge.decompose._assemble import Assembly, by_components, class_bound, require_member
from chiforge.decompose.certificate import BoundedColoring, DecompositionCertificate
from chiforge.errors import NotTwoK2Free
from chiforge.graph import Graph, bits, cross_edges, is_independent
from chiforge.oracles import clique_number
from chiforge.patterns import Witness, find_diamond
from chiforge.subsolvers import color_diamond_block, color_paw_block


@dataclass(frozen=True)
class DiamondContext:
    """Sets around an induced diamond (v1, v2, v3, v4): chord v2v4, non-edge v1v3.

    Vertices outside N(v4) + v4 are sorted by which of v1, v2, v3 they see:
    ``x[i]`` sees only v_i+1, ``y1`` sees {v1, v2}, ``y2`` sees {v2, v3},
    ``z1`` sees {v1, v3}, ``z2`` sees all three, ``l2`` none.
    """

    anchor: tuple[int, int, int, int]
    x: tuple[int, int, int]
    y1: int
    y2: int
    z1: int
    z2: int
    l2: int
    nv4: int

    def union(self) -> int:
        return (self.x[0] | self.x[1] | self.x[2] | self.y1 | self.y2 | self.z1 | self.z2
                | self.l2 | self.nv4 | 1 << self.anchor[3])


def _classify(g: Graph, anchor) -> DiamondContext:
    v1, v2, v3, v4 = anchor
    nv4 = g.adj[v4]
    x = [0, 0, 0]
    y1 = y2 = z1 = z2 = l2 = 0
    for u in bits(g.all & ~nv4 & ~(1 << v4)):
        a = g.adj[u]
        key = (bool(a >> v1 & 1), bool(a >> v2 & 1), bool(a >> v3 & 1))
        bit = 1 << u
        if key == (False, False, False):
            l2 |= bit
        elif key == (True, False, False):
            x[0] |= bit
        elif key == (False, True, False):
            x[1] |= bit
        elif key == (False, False, True):
            x[2] |= bit
        elif key == (True, True, False):
            y1 |= bit
        elif key == (False, True, True):
            y2 |= bit
        elif key == (True, False, True):
            z1 |= bit
        else:
            z2 |= bit
    return DiamondContext(tuple(anchor), tuple(x), y1, y2, z1, z2, l2, nv4)


def lemma_violations(g: Graph, anchor) -> list[tuple[str, tuple[int, ...]]]:
    """All failures of the four diamond-lemma conclusions for one labeling."""
    c = _classify(g, anchor)
    out = []
    if c.union() != g.all:
        out.append(("cover", tuple(bits(g.all & ~c.union()))))
    if c.x[0] and c.x[2]:
        out.append(("X1 or X3 empty", tuple(bits(c.x[0] | c.x[2]))))
    for name, s in (("X1+X2+Y1 independent", c.x[0] | c.x[1] | c.y1), ("Y2 independent", c.y2),
                    ("Z1 independent", c.z1), ("L2 independent", c.l2)):
        if not is_independent(g, s):
            out.append((name, tuple(bits(s))))
    near = c.x[0] | c.x[1] | c.x[2] | c.y1 | c.y2 | c.z1
    bad = cross_edges(g, near, c.l2)
    if bad:
        out.append(("no edges from X, Y, Z1 to L2", bad[0]))
    return out


def diamond_context(g: Graph, d: Witness | tuple[int, int, int, int]) -> DiamondContext:
    """Classify around ``d``, assert the lemma, and swap v1, v3 so that X3 is empty."""
    anchor = tuple(d.vertices) if isinstance(d, Witness) else tuple(d)
    problems = lemma_violations(g, anchor)
    if problems:
        claim, vs = problems[0]
        raise NotTwoK2Free(claim, vs, "diamond lemma fails, input is not 2K2-free")
    c = _classify(g, anchor)
    if c.x[2]:
        v1, v2, v3, v4 = anchor
        c = _classify(g, (v3, v2, v1, v4))
    return c


def _color_with_context(g: Graph, block_colorer, tag: str, theorem: str, extra: int) -> BoundedColoring:
    omega = clique_number(g)
    w = find_diamond(g)
    asm = Assembly(g)
    if w is None:
        asm.sub(g.all, lambda h, _: color_diamond_block(h), "diamond_free_block", "V")
        cert = DecompositionCertificate("DIAMOND_FREE", tuple(asm.blocks))
        return BoundedColoring(asm.coloring(), omega + extra, omega, cert, omega + 1)
    c = diamond_context(g, w)
    v4 = 1 << c.anchor[3]
    asm.sub(c.nv4, lambda h, _: block_colorer(h), tag, "V1")
    if theorem == "HVN":
        stables = (c.x[0] | c.x[1] | c.y1, c.y2 | c.z2, c.z1 | c.l2 | v4)
    else:
        stables = (c.x[0] | c.x[1] | c.y1, c.y2, c.z1 | c.l2 | v4, c.z2)
    for i, s in enumerate(stables, start=2):
        asm.stable(s, f"V{i}")
    cert = DecompositionCertificate(theorem, tuple(asm.blocks), c.anchor)
    return BoundedColoring(asm.coloring(), omega + extra, omega, cert, omega + extra)


def color_hvn_free(g: Graph, check: bool = True) -> BoundedColoring:
    """At most omega+3 colors."""
    if check:
        require_member(g, "2k2-hvn")
    return by_components(
        g, lambda h: _color_with_context(h, color_paw_block, "paw_free_block", "HVN", 3),
        class_bound("2k2-hvn"), "HVN",
    )


def color_k5e_free(g: Graph, check: bool = True) -> BoundedColoring:
    """At most omega+4 colors."""
    if check:
        require_member(g, "2k2-k5e")
    return by_components(
        g, lambda h: _color_with_context(h, color_diamond_block, "diamond_free_block", "K5E", 4),
        class_bound("2k2-k5e"), "K5E",
    )

"""(2K2, K1+C4)-free graphs: pseudo-split, or one structured block plus stable sets."""

from __future__ import annotations

from dataclasses import dataclass

from chiforge.decompose._assemble import Assembly, by_components, class_bound, require_member, restrict
from chiforge.decompose.certificate import BoundedColoring, DecompositionCertificate
from chiforge.errors import Disconnected, StructureViolation
from chiforge.graph import Graph, bits, components, is_clique, is_connected, is_independent, popcount
from chiforge.oracles import clique_number
from chiforge.patterns import find_c4
from chiforge.subsolvers import color_cobipartite, color_pseudo_split


@dataclass(frozen=True)
class C4Classes:
    """Vertices grouped by their trace on the labeled C4 (0-based, mod 4).

    ``w[i]`` sees {v_i}, ``x[i]`` sees {v_i, v_i+1}, ``y1`` sees {v_0, v_2},
    ``y2`` sees {v_1, v_3}, ``z[i]`` sees {v_i-1, v_i, v_i+1}, ``l2`` sees nothing.
    """

    cycle: tuple[int, ...]
    w: tuple[int, ...]
    x: tuple[int, ...]
    y1: int
    y2: int
    z: tuple[int, ...]
    l2: int
    full: int  # vertices seeing the whole C4; empty inside the class


def classify_c4(g: Graph, cycle: tuple[int, ...]) -> C4Classes:
    w = [0] * 4
    x = [0] * 4
    z = [0] * 4
    y1 = y2 = l2 = full = 0
    vmask = [1 << v for v in cycle]
    cmask = sum(vmask)
    for u in bits(g.all & ~cmask):
        seen = tuple(bool(g.adj[u] & vmask[i]) for i in range(4))
        k = sum(seen)
        bit = 1 << u
        if k == 0:
            l2 |= bit
        elif k == 4:
            full |= bit
        elif k == 1:
            w[seen.index(True)] |= bit
        elif k == 3:
            z[(seen.index(False) + 2) % 4] |= bit
        elif seen[0] and seen[2]:
            y1 |= bit
        elif seen[1] and seen[3]:
            y2 |= bit
        else:
            i = next(i for i in range(4) if seen[i] and seen[(i + 1) % 4])
            x[i] |= bit
    return C4Classes(tuple(cycle), tuple(w), tuple(x), y1, y2, tuple(z), l2, full)


def _labelings(cycle):
    for s in (1, -1):
        for r in range(4):
            yield tuple(cycle[(r + s * i) % 4] for i in range(4))


def _split_y(g: Graph, y: int, name: str) -> tuple[int, int]:
    """Largest component of the P3-free graph [Y] as the clique part; the rest must be stable."""
    if not y:
        return 0, 0
    comps = components(g, y)
    best = max(comps, key=lambda c: (popcount(c), -c))
    rest = y & ~best
    if not is_clique(g, best) or not is_independent(g, rest):
        raise StructureViolation(f"{name} is a clique plus a stable set", tuple(bits(y)))
    return best, rest


@dataclass(frozen=True)
class WheelOutcome:
    kind: str  # "pseudo_split" | "case1" | "case2"
    parts: tuple[int, ...] = ()
    anchor: tuple[int, ...] = ()
    sides: tuple[int, int] | None = None


def _check_stable(g: Graph, parts, first: int) -> None:
    for i, p in enumerate(parts[first:], start=first + 1):
        if not is_independent(g, p):
            raise StructureViolation(f"V{i} is independent", tuple(bits(p)))


def _check_cover(g: Graph, parts) -> None:
    seen = 0
    for p in parts:
        if p & seen:
            raise StructureViolation("blocks are disjoint", tuple(bits(p & seen)))
        seen |= p
    if seen != g.all:
        raise StructureViolation("blocks cover V(G)", tuple(bits(g.all & ~seen)))


def decompose_wheel(g: Graph, check: bool = True) -> WheelOutcome:
    """Pseudo-split, Case 1 (cobipartite V1 and V2..V6 stable) or Case 2
    (pseudo-split V1 = N(v1) and V2..V4 stable). Needs a connected graph."""
    if check:
        require_member(g, "2k2-wheel4")
    if g.n > 1 and not is_connected(g):
        raise Disconnected("decompose_wheel needs a connected graph; color per component")
    w = find_c4(g)
    if w is None:
        return WheelOutcome("pseudo_split", (g.all,))
    base = classify_c4(g, w.vertices)
    if base.full:
        raise StructureViolation("no vertex sees the whole C4", (*w.vertices, *bits(base.full)))
    case2 = any(base.z)
    for lab in _labelings(w.vertices):
        c = classify_c4(g, lab)
        v = [1 << u for u in lab]
        if case2:
            if not c.z[0]:
                continue
            parts = (
                g.adj[lab[0]],
                c.w[1] | c.x[1] | c.l2,
                c.w[2] | c.w[3] | c.x[2],
                c.y2 | v[0] | v[2],
            )
            _check_cover(g, parts)
            _check_stable(g, parts, 1)
            return WheelOutcome("case2", parts, lab)
        if c.x[1] | c.x[3] == 0:
            tail = (c.w[2] | c.w[3] | c.x[2],)
        elif c.x[2] | c.x[3] == 0:
            tail = (c.w[2] | c.x[1], c.w[3])
        else:
            continue
        y1c, y1s = _split_y(g, c.y1, "Y1")
        y2c, y2s = _split_y(g, c.y2, "Y2")
        sides = (y1c | v[0], y2c | v[1])
        parts = (
            sides[0] | sides[1],
            y1s | v[3],
            y2s | v[2],
            c.w[0] | c.w[1] | c.x[0] | c.l2,
            *tail,
        )
        _check_cover(g, parts)
        _check_stable(g, parts, 1)
        for s in sides:
            if not is_clique(g, s):
                raise StructureViolation("V1 is covered by two cliques", tuple(bits(s)))
        return WheelOutcome("case1", parts, lab, sides)
    raise StructureViolation(
        "some labeling of the C4 meets the case precondition", w.vertices, "none found"
    )


def _color_connected(g: Graph) -> BoundedColoring:
    omega = clique_number(g)
    bound = omega + 5
    out = decompose_wheel(g, check=False)
    asm = Assembly(g)
    if out.kind == "pseudo_split":
        asm.sub(g.all, lambda h, _: color_pseudo_split(h), "pseudo_split", "V")
        cert = DecompositionCertificate("PSEUDO_SPLIT", tuple(asm.blocks))
        return BoundedColoring(asm.coloring(), bound, omega, cert, omega + 1)
    if out.kind == "case2":
        asm.sub(out.parts[0], lambda h, _: color_pseudo_split(h), "pseudo_split", "V1")
        path = omega + 3
    else:
        sides = out.sides
        asm.sub(
            out.parts[0],
            lambda h, idx: color_cobipartite(h, (restrict(sides[0], idx), restrict(sides[1], idx))),
            "cobipartite",
            "V1",
            sides=sides,
        )
        path = omega + 5
    for i, p in enumerate(out.parts[1:], start=2):
        asm.stable(p, f"V{i}")
    cert = DecompositionCertificate("WHEEL", tuple(asm.blocks), out.anchor)
    return BoundedColoring(asm.coloring(), bound, omega, cert, path)


def color_wheel_free(g: Graph, check: bool = True) -> BoundedColoring:
    """At most omega+5 colors; the bound of the branch actually taken is ``path_bound``."""
    if check:
        require_member(g, "2k2-wheel4")
    return by_components(g, _color_connected, class_bound("2k2-wheel4"), "WHEEL")


"""(2K2, gem)-free graphs: the three-block partition, built in the complement."""

from __future__ import annotations

from dataclasses import dataclass

from chiforge.decompose._assemble import Assembly, require_member
from chiforge.decompose.certificate import Block, BoundedColoring, DecompositionCertificate
from chiforge.errors import StructureViolation
from chiforge.graph import Coloring, Graph, bits, complement, induced, is_clique, to_mask
from chiforge.oracles import clique_number
from chiforge.patterns import find_c5, get_class, is_cograph
from chiforge.subsolvers import color_cograph, color_exact_assert


@dataclass(frozen=True)
class C5Classes:
    """Outside vertices of H grouped by what they see of the labeled C5 ``cycle``.

    ``a[i]`` sees {v_i, v_i+1}, ``b[i]`` sees {v_i-1, v_i, v_i+1}, ``d`` sees all
    five (indices 0-based, mod 5). ``bad`` lists vertices whose trace on the
    cycle is none of K2, P3, C5.
    """

    cycle: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    d: int
    bad: tuple[tuple[int, int], ...]


def classify_c5(h: Graph, cycle: tuple[int, ...]) -> C5Classes:
    pos = {v: i for i, v in enumerate(cycle)}
    cmask = to_mask(cycle)
    a = [0] * 5
    b = [0] * 5
    d = 0
    bad = []
    for x in bits(h.all & ~cmask):
        seen = h.adj[x] & cmask
        idx = sorted(pos[v] for v in bits(seen))
        k = len(idx)
        if k == 5:
            d |= 1 << x
            continue
        found = False
        for i in range(5):
            if k == 2 and idx == sorted((i, (i + 1) % 5)):
                a[i] |= 1 << x
                found = True
            elif k == 3 and idx == sorted(((i - 1) % 5, i, (i + 1) % 5)):
                b[i] |= 1 << x
                found = True
        if not found:
            bad.append((x, seen))
    return C5Classes(tuple(cycle), tuple(a), tuple(b), d, tuple(bad))


def _labelings(cycle):
    for s in (1, -1):
        for r in range(5):
            yield tuple(cycle[(r + s * i) % 5] for i in range(5))


@dataclass(frozen=True)
class GemOutcome:
    kind: str  # "perfect" | "partition"
    parts: tuple[int, int, int] | None = None
    anchor: tuple[int, ...] = ()
    classes: C5Classes | None = None


def decompose_gem(g: Graph, check: bool = True) -> GemOutcome:
    """Perfect, or (V1 cograph, V2 independent, V3 independent) anchored at a C5."""
    if check:
        require_member(g, "2k2-gem")
    h = complement(g)
    w = find_c5(h)
    if w is None:
        return GemOutcome("perfect")
    first = classify_c5(h, w.vertices)
    if first.bad:
        x, seen = first.bad[0]
        raise StructureViolation(
            "outside vertices see the C5 as K2, P3 or C5 in the complement",
            (x, *w.vertices),
            f"vertex {x} sees {list(bits(seen))}",
        )
    for lab in _labelings(w.vertices):
        c = classify_c5(h, lab)
        a_all = c.a[0] | c.a[1] | c.a[2] | c.a[3] | c.a[4]
        if a_all & ~(c.a[0] | c.a[1]) or not is_clique(h, c.a[1]):
            continue
        v = [1 << u for u in lab]
        p1 = v[0] | v[1] | v[3] | c.a[0] | c.b[0] | c.b[1] | c.b[3]
        p2 = v[2] | c.a[1] | c.b[2]
        p3 = v[4] | c.b[4] | c.d
        if not is_cograph(induced(h, p1)[0]):
            raise StructureViolation("V1 is P4-free", tuple(bits(p1)), "induced P4 in V1")
        for name, p in (("V2", p2), ("V3", p3)):
            if not is_clique(h, p):
                raise StructureViolation(f"{name} is a clique of the complement", tuple(bits(p)))
        return GemOutcome("partition", (p1, p2, p3), lab, c)
    raise StructureViolation(
        "A-sets fit in two consecutive slots with the second a clique",
        w.vertices,
        "no labeling of the C5 works",
    )


def color_gem_free(g: Graph, check: bool = True) -> BoundedColoring:
    """At most omega+2 colors."""
    out = decompose_gem(g, check)
    omega = clique_number(g)
    bound = get_class("2k2-gem").bound(omega)
    if out.kind == "perfect":
        col = color_exact_assert(g, omega) if g.n else Coloring(())
        blocks = (Block(g.all, "perfect"),) if g.n else ()
        cert = DecompositionCertificate("PERFECT", blocks)
        return BoundedColoring(col, bound, omega, cert, omega)
    p1, p2, p3 = out.parts
    asm = Assembly(g)
    asm.sub(p1, lambda sub, _: color_cograph(sub), "cograph", "V1")
    asm.stable(p2, "V2")
    asm.stable(p3, "V3")
    cert = DecompositionCertificate("GEM", tuple(asm.blocks), out.anchor)
    return BoundedColoring(asm.coloring(), bound, omega, cert, omega + 2)

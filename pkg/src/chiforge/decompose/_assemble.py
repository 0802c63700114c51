from __future__ import annotations

from typing import Callable

from chiforge.decompose.certificate import Block, BoundedColoring, DecompositionCertificate
from chiforge.errors import NotInClass, StructureViolation
from chiforge.graph import Coloring, Graph, bits, components, induced, is_independent, relabel_back
from chiforge.patterns import ClassSpec, get_class, is_free


class Assembly:
    """Colors blocks of one graph on consecutive fresh palettes."""

    def __init__(self, g: Graph):
        self.g = g
        self.colors = [-1] * g.n
        self.next = 0
        self.blocks: list[Block] = []

    def sub(self, mask: int, colorer: Callable, tag: str, label: str = "",
            sides: tuple[int, int] | None = None, spec: str | None = None) -> int:
        """Color ``g[mask]`` with ``colorer(h, index_map)`` on a fresh palette."""
        if not mask:
            return 0
        h, idx = induced(self.g, mask)
        c = colorer(h, idx)
        for i, col in enumerate(c.colors):
            self.colors[idx[i]] = self.next + col
        self.next += c.k
        self.blocks.append(Block(mask, tag, sides, spec, label))
        return c.k

    def stable(self, mask: int, label: str = "", claim: str = "") -> int:
        """One fresh color for an independent block."""
        if not mask:
            return 0
        if not is_independent(self.g, mask):
            raise StructureViolation(
                claim or f"{label} independent", tuple(bits(mask)), "block has an internal edge"
            )
        for v in bits(mask):
            self.colors[v] = self.next
        self.next += 1
        self.blocks.append(Block(mask, "independent", label=label))
        return 1

    def coloring(self) -> Coloring:
        missing = [v for v, c in enumerate(self.colors) if c < 0]
        if missing:
            raise StructureViolation("partition covers V(G)", missing, "vertices left uncolored")
        return Coloring(tuple(self.colors))


def restrict(mask: int, index_map) -> int:
    """Translate a parent-graph vertex set into the ids of an induced subgraph."""
    pos = {v: i for i, v in enumerate(index_map)}
    out = 0
    for v in bits(mask):
        out |= 1 << pos[v]
    return out


def require_member(g: Graph, spec: ClassSpec | str) -> None:
    v = is_free(g, spec)
    if not v.member:
        name = spec if isinstance(spec, str) else spec.name
        raise NotInClass(f"graph contains an induced {v.witness.pattern.value}, not in {name}",
                         witness=v.witness)


def by_components(
    g: Graph,
    colorer: Callable[[Graph], BoundedColoring],
    bound_of: Callable[[int], int],
    default_theorem: str,
) -> BoundedColoring:
    """Color each component separately on a shared palette.

    Isolated vertices form one independent block colored 0. The certificate
    concatenates the component blocks; its theorem is the one used on the
    largest non-trivial component.
    """
    colors = [0] * g.n
    blocks: list[Block] = []
    theorem = default_theorem
    anchor: tuple[int, ...] = ()
    omega = 1 if g.n else 0
    path_bound = None
    largest = 0
    isolated = 0
    for comp in components(g):
        if comp & (comp - 1) == 0:
            isolated |= comp
            continue
        h, idx = induced(g, comp)
        res = colorer(h)
        for i, c in enumerate(res.coloring.colors):
            colors[idx[i]] = c
        for b in res.certificate.blocks:
            sides = None
            if b.sides is not None:
                sides = tuple(relabel_back(s, idx) for s in b.sides)
            blocks.append(Block(relabel_back(b.vertices, idx), b.tag, sides, b.spec, b.label))
        omega = max(omega, res.omega)
        if h.n > largest:
            largest = h.n
            theorem = res.certificate.theorem
            anchor = tuple(idx[a] for a in res.certificate.anchor)
        if res.path_bound is not None:
            path_bound = max(path_bound or 0, res.path_bound)
    if isolated:
        blocks.append(Block(isolated, "independent", label="isolated"))
    cert = DecompositionCertificate(theorem, tuple(blocks), anchor)
    return BoundedColoring(Coloring(tuple(colors)), bound_of(omega), omega, cert, path_bound)


def class_bound(name: str) -> Callable[[int], int]:
    return get_class(name).bound

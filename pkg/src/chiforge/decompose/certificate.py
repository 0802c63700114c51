"""Decomposition certificates, bounded colorings and the standalone checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from chiforge.errors import BudgetExceeded
from chiforge.graph import (
    Coloring,
    Graph,
    bits,
    induced,
    is_clique,
    is_independent,
    is_proper,
    read_graph6,
    to_mask,
    write_graph6,
)
from chiforge.patterns import (
    PERFECT_BUDGET_N,
    find_c5,
    get_class,
    is_cograph,
    is_free,
    is_perfect_small,
    is_pseudo_split,
    is_split,
)

TAGS = (
    "cograph",
    "clique",
    "independent",
    "pseudo_split",
    "split",
    "cobipartite",
    "paw_free_block",
    "diamond_free_block",
    "recurse",
    "perfect",
)


@dataclass(frozen=True)
class Block:
    vertices: int
    tag: str
    sides: tuple[int, int] | None = None
    spec: str | None = None
    label: str = ""

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"vertices": list(bits(self.vertices)), "tag": self.tag}
        if self.sides is not None:
            d["sides"] = [list(bits(s)) for s in self.sides]
        if self.spec is not None:
            d["spec"] = self.spec
        if self.label:
            d["label"] = self.label
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Block":
        sides = d.get("sides")
        return cls(
            to_mask(d["vertices"]),
            d["tag"],
            tuple(to_mask(s) for s in sides) if sides is not None else None,
            d.get("spec"),
            d.get("label", ""),
        )


@dataclass(frozen=True)
class DecompositionCertificate:
    theorem: str
    blocks: tuple[Block, ...]
    anchor: tuple[int, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "blocks": [b.to_dict() for b in self.blocks],
            "anchor": list(self.anchor),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "DecompositionCertificate":
        return cls(
            d["theorem"],
            tuple(Block.from_dict(b) for b in d["blocks"]),
            tuple(d.get("anchor", ())),
        )


@dataclass(frozen=True)
class BoundedColoring:
    coloring: Coloring
    bound: int
    omega: int
    certificate: DecompositionCertificate
    path_bound: int | None = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def k(self) -> int:
        return self.coloring.k


def _verify_perfect(h: Graph, class_name: str | None) -> bool:
    if h.n <= PERFECT_BUDGET_N:
        return is_perfect_small(h)
    # Inside the (2K2, gem)-free class odd holes and antiholes longer than 5
    # cannot occur, so the only obstruction left is an induced C5.
    if class_name == "2k2-gem" and is_free(h, "2k2-gem").member:
        return find_c5(h) is None
    raise BudgetExceeded(f"cannot verify perfection of a {h.n}-vertex block")


def check_block(g: Graph, b: Block, class_name: str | None = None) -> str | None:
    """Return a problem description, or None if the block tag holds."""
    s = b.vertices
    tag = b.tag
    if tag == "independent":
        return None if is_independent(g, s) else "block is not independent"
    if tag == "clique":
        return None if is_clique(g, s) else "block is not a clique"
    h, idx = induced(g, s)
    if tag == "cograph":
        return None if is_cograph(h) else "block contains an induced P4"
    if tag == "pseudo_split":
        return None if is_pseudo_split(h) else "block is not (2K2, C4)-free"
    if tag == "split":
        return None if is_split(h) else "block is not (2K2, C4, C5)-free"
    if tag == "cobipartite":
        if b.sides is None:
            return "cobipartite block without sides"
        a, c = b.sides
        if a & c or (a | c) != s:
            return "cobipartite sides do not partition the block"
        if not (is_clique(g, a) and is_clique(g, c)):
            return "cobipartite side is not a clique"
        return None
    if tag == "paw_free_block":
        return None if is_free(h, "2k2-paw").member else "block is not (2K2, paw)-free"
    if tag == "diamond_free_block":
        return None if is_free(h, "2k2-diamond").member else "block is not (2K2, diamond)-free"
    if tag == "recurse":
        if b.spec is None:
            return "recurse block without class"
        return None if is_free(h, get_class(b.spec)).member else f"block is not in {b.spec}"
    if tag == "perfect":
        return None if _verify_perfect(h, class_name) else "block is not perfect"
    return f"unknown tag {tag!r}"


def verify_certificate(
    g: Graph,
    cert: DecompositionCertificate,
    coloring: Coloring | None = None,
    bound: int | None = None,
    class_name: str | None = None,
) -> list[str]:
    """Independent re-check of a certificate; returns the list of problems found."""
    problems = []
    seen = 0
    for i, b in enumerate(cert.blocks):
        if b.vertices & ~g.all:
            problems.append(f"block {i} has vertices outside the graph")
            continue
        if b.vertices & seen:
            problems.append(f"block {i} overlaps earlier blocks at {list(bits(b.vertices & seen))}")
        seen |= b.vertices
        msg = check_block(g, b, class_name)
        if msg:
            problems.append(f"block {i} ({b.tag} {b.label}): {msg}")
    if seen != g.all:
        problems.append(f"blocks miss vertices {list(bits(g.all & ~seen))}")
    if coloring is not None:
        if len(coloring.colors) != g.n:
            problems.append("coloring does not cover the graph")
        elif not is_proper(g, coloring):
            problems.append("coloring is not proper")
        if bound is not None and coloring.k > bound:
            problems.append(f"coloring uses {coloring.k} colors, bound is {bound}")
    return problems


def certificate_document(g: Graph, class_name: str, bc: BoundedColoring) -> dict[str, Any]:
    """The JSON document emitted by ``chiforge color``."""
    return {
        "graph6": write_graph6(g),
        "class": class_name,
        "colors": list(bc.coloring.colors),
        "k": bc.k,
        "omega": bc.omega,
        "bound": bc.bound,
        "path_bound": bc.path_bound,
        **bc.certificate.to_dict(),
    }


def check_document(doc: dict[str, Any]) -> list[str]:
    """Re-verify a document from ``certificate_document`` without re-running anything
    but the exact clique oracle and the block-tag tests."""
    from chiforge.oracles import clique_number

    g = read_graph6(doc["graph6"])
    cert = DecompositionCertificate.from_dict(doc)
    coloring = Coloring(tuple(doc["colors"]))
    spec = get_class(doc["class"])
    problems = verify_certificate(g, cert, coloring, doc["bound"], spec.name)
    omega = clique_number(g)
    if omega != doc["omega"]:
        problems.append(f"omega recorded as {doc['omega']}, exact value is {omega}")
    if spec.bound(omega) != doc["bound"]:
        problems.append(f"bound recorded as {doc['bound']}, class bound is {spec.bound(omega)}")
    if coloring.k != doc["k"]:
        problems.append(f"k recorded as {doc['k']}, coloring uses {coloring.k}")
    return problems

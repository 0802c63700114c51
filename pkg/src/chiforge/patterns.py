"""Special graphs, induced-subgraph detection and class recognition."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Callable

from chiforge.errors import BudgetExceeded
from chiforge.graph import Graph, bits, complement, components, new_graph, popcount, to_mask


class PatternId(str, Enum):
    TWO_K2 = "2K2"
    P4 = "P4"
    C4 = "C4"
    C5 = "C5"
    P2_U_P3 = "P2uP3"
    P2_U_P4 = "P2uP4"
    P4_U_K1 = "P4uK1"
    DIAMOND = "diamond"
    PAW = "paw"
    GEM = "gem"
    WHEEL4 = "K1+C4"
    PARAGLIDER = "paraglider"
    HVN = "HVN"
    K5_MINUS_E = "K5-e"
    K4 = "K4"
    K5 = "K5"
    K1_3 = "claw"


_P4 = ((0, 1), (1, 2), (2, 3))
_C4 = ((0, 1), (1, 2), (2, 3), (3, 0))
_DIAMOND = ((0, 1), (1, 2), (2, 3), (0, 3), (1, 3))
_PAW = ((0, 1), (1, 2), (0, 2), (0, 3))


def _apex(edges, base: int):
    return tuple(edges) + tuple((v, base) for v in range(base))


def _k(p: int):
    return tuple((i, j) for j in range(p) for i in range(j))


def _complement_edges(p: int, edges):
    present = {frozenset(e) for e in edges}
    return tuple((i, j) for j in range(p) for i in range(j) if frozenset((i, j)) not in present)


# (vertex count, edge list). Apex vertices are always the last label.
CATALOG: dict[PatternId, tuple[int, tuple[tuple[int, int], ...]]] = {
    PatternId.TWO_K2: (4, ((0, 1), (2, 3))),
    PatternId.P4: (4, _P4),
    PatternId.C4: (4, _C4),
    PatternId.C5: (5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))),
    PatternId.P2_U_P3: (5, ((0, 1), (2, 3), (3, 4))),
    PatternId.P2_U_P4: (6, ((0, 1), (2, 3), (3, 4), (4, 5))),
    PatternId.P4_U_K1: (5, _P4),
    PatternId.DIAMOND: (4, _DIAMOND),
    PatternId.PAW: (4, _PAW),
    PatternId.GEM: (5, _apex(_P4, 4)),
    PatternId.WHEEL4: (5, _apex(_C4, 4)),
    PatternId.PARAGLIDER: (5, _complement_edges(5, ((0, 1), (2, 3), (3, 4)))),
    PatternId.HVN: (5, _apex(_PAW, 4)),
    PatternId.K5_MINUS_E: (5, _apex(_DIAMOND, 4)),
    PatternId.K4: (4, _k(4)),
    PatternId.K5: (5, _k(5)),
    PatternId.K1_3: (4, ((0, 1), (0, 2), (0, 3))),
}


@lru_cache(maxsize=None)
def pattern_graph(pid: PatternId) -> Graph:
    p, edges = CATALOG[pid]
    return new_graph(p, edges, label=pid.value)


@dataclass(frozen=True)
class Witness:
    pattern: PatternId
    vertices: tuple[int, ...]  # vertices[i] is the image of pattern vertex i

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)


@lru_cache(maxsize=None)
def _plan(pid: PatternId):
    h = pattern_graph(pid)
    p = h.n
    steps = []
    for i in range(p):
        earlier_adj = tuple(j for j in range(i) if h.has_edge(i, j))
        earlier_non = tuple(j for j in range(i) if not h.has_edge(i, j))
        steps.append((earlier_adj, earlier_non, h.degree(i), p - 1 - h.degree(i)))
    return p, tuple(steps)


def find_induced(g: Graph, pid: PatternId) -> Witness | None:
    """Lexicographically first induced embedding of a catalog pattern, or None.

    Backtracks over pattern vertices in label order; candidates for the next
    image are intersected bitsets of the (non-)neighbourhoods of the images
    placed so far, pre-filtered by degree and co-degree.
    """
    p, steps = _plan(pid)
    n = g.n
    if p > n:
        return None
    adj = g.adj
    full = g.all
    deg = [a.bit_count() for a in adj]
    okdeg = []
    for _, _, dp, cp in steps:
        m = 0
        for v in range(n):
            if deg[v] >= dp and n - 1 - deg[v] >= cp:
                m |= 1 << v
        okdeg.append(m)
    image = [0] * p

    def rec(i: int, used: int) -> bool:
        if i == p:
            return True
        ea, en, _, _ = steps[i]
        cand = okdeg[i] & ~used
        for j in ea:
            cand &= adj[image[j]]
        for j in en:
            cand &= ~adj[image[j]]
        cand &= full
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            if rec(i + 1, used | low):
                return True
        return False

    if rec(0, 0):
        return Witness(pid, tuple(image))
    return None


def find_c4(g: Graph) -> Witness | None:
    """Induced C4 as a cycle (v1, v2, v3, v4)."""
    adj = g.adj
    for a in range(g.n):
        for c in bits(~adj[a] & g.all & ~((1 << (a + 1)) - 1)):
            common = adj[a] & adj[c]
            for b in bits(common):
                rest = common & ~adj[b] & ~((1 << (b + 1)) - 1)
                if rest:
                    d = (rest & -rest).bit_length() - 1
                    return Witness(PatternId.C4, (a, b, c, d))
    return None


def find_c5(g: Graph) -> Witness | None:
    """Induced C5 as a cycle (v1, ..., v5)."""
    adj = g.adj
    for b in range(g.n):
        nb = adj[b]
        for a in bits(nb):
            for c in bits(nb & ~adj[a] & ~((1 << (a + 1)) - 1)):
                # a - b - c induced P3, a < c
                d_cand = adj[c] & ~adj[a] & ~adj[b] & ~(1 << a) & ~(1 << b)
                for d in bits(d_cand):
                    e_cand = adj[d] & adj[a] & ~adj[b] & ~adj[c] & ~(1 << b) & ~(1 << c)
                    if e_cand:
                        e = (e_cand & -e_cand).bit_length() - 1
                        return Witness(PatternId.C5, (a, b, c, d, e))
    return None


def find_diamond(g: Graph) -> Witness | None:
    """Induced diamond (v1, v2, v3, v4) with v2v4 the chord and v1v3 the non-edge."""
    adj = g.adj
    for v2 in range(g.n):
        for v4 in bits(adj[v2] & ~((1 << (v2 + 1)) - 1)):
            common = adj[v2] & adj[v4]
            for v1 in bits(common):
                rest = common & ~adj[v1] & ~((1 << (v1 + 1)) - 1)
                if rest:
                    v3 = (rest & -rest).bit_length() - 1
                    return Witness(PatternId.DIAMOND, (v1, v2, v3, v4))
    return None


def all_diamonds(g: Graph) -> list[Witness]:
    """Every labeled induced diamond, both orientations of the non-edge."""
    out = []
    adj = g.adj
    for v2 in range(g.n):
        for v4 in bits(adj[v2]):
            common = adj[v2] & adj[v4]
            for v1 in bits(common):
                for v3 in bits(common & ~adj[v1] & ~(1 << v1)):
                    out.append(Witness(PatternId.DIAMOND, (v1, v2, v3, v4)))
    return out


def is_induced_copy(g: Graph, w: Witness) -> bool:
    """Check that ``w.vertices`` spans an induced copy of its pattern in order."""
    h = pattern_graph(w.pattern)
    vs = w.vertices
    if len(vs) != h.n or len(set(vs)) != h.n:
        return False
    return all(
        g.has_edge(vs[i], vs[j]) == h.has_edge(i, j) for j in range(h.n) for i in range(j)
    )


# --- classes --------------------------------------------------------------------


@dataclass(frozen=True)
class Bound:
    """A chi-binding function: affine ``a*w + b`` (optionally capped), C(w+1, 2),
    or (w^3 - w^2 + 2w) / 2."""

    kind: str
    a: int = 1
    b: int = 0
    cap: int | None = None

    def __call__(self, omega: int) -> int:
        if self.kind == "affine":
            val = self.a * omega + self.b
        elif self.kind == "binomial":
            val = comb(omega + 1, 2)
        elif self.kind == "cubic":
            val = (omega ** 3 - omega ** 2 + 2 * omega) // 2
        else:
            raise ValueError(f"unknown bound kind {self.kind!r}")
        if self.cap is not None:
            val = min(val, self.cap)
        return val

    def describe(self) -> str:
        if self.kind == "affine":
            s = f"{self.a if self.a != 1 else ''}w{'+' + str(self.b) if self.b else ''}"
        elif self.kind == "binomial":
            s = "C(w+1,2)"
        else:
            s = "(w^3-w^2+2w)/2"
        return s + (f" (cap {self.cap})" if self.cap is not None else "")


@dataclass(frozen=True)
class ClassSpec:
    name: str
    forbidden: tuple[PatternId, ...]
    bound: Bound
    title: str = ""

    def __post_init__(self):
        if not self.forbidden:
            raise ValueError("a class needs at least one forbidden pattern")


P = PatternId
REGISTRY: dict[str, ClassSpec] = {
    s.name: s
    for s in (
        ClassSpec("2k2", (P.TWO_K2,), Bound("binomial"), "2K2-free"),
        ClassSpec("2k2-gem", (P.TWO_K2, P.GEM), Bound("affine", 1, 2), "(2K2, K1+P4)-free"),
        ClassSpec("2k2-wheel4", (P.TWO_K2, P.WHEEL4), Bound("affine", 1, 5), "(2K2, K1+C4)-free"),
        ClassSpec("2k2-paraglider", (P.TWO_K2, P.PARAGLIDER), Bound("affine", 1, 1),
                  "(2K2, paraglider)-free"),
        ClassSpec("2k2-hvn", (P.TWO_K2, P.HVN), Bound("affine", 1, 3), "(2K2, HVN)-free"),
        ClassSpec("2k2-k5e", (P.TWO_K2, P.K5_MINUS_E), Bound("affine", 1, 4), "(2K2, K5-e)-free"),
        ClassSpec("2k2-k5", (P.TWO_K2, P.K5), Bound("affine", 2, 1, cap=9), "(2K2, K5)-free"),
        ClassSpec("p2p4", (P.P2_U_P4,), Bound("cubic"), "(P2 u P4)-free"),
        ClassSpec("pseudo-split", (P.TWO_K2, P.C4), Bound("affine", 1, 1), "(2K2, C4)-free"),
        ClassSpec("split", (P.TWO_K2, P.C4, P.C5), Bound("affine", 1, 0), "(2K2, C4, C5)-free"),
        # block classes used inside certificates
        ClassSpec("2k2-k4", (P.TWO_K2, P.K4), Bound("affine", 1, 1, cap=4), "(2K2, K4)-free"),
        ClassSpec("2k2-paw", (P.TWO_K2, P.PAW), Bound("affine", 1, 1), "(2K2, paw)-free"),
        ClassSpec("2k2-diamond", (P.TWO_K2, P.DIAMOND), Bound("affine", 1, 1),
                  "(2K2, diamond)-free"),
    )
}

CLI_CLASSES = (
    "2k2", "2k2-gem", "2k2-wheel4", "2k2-paraglider", "2k2-hvn",
    "2k2-k5e", "2k2-k5", "p2p4", "pseudo-split", "split",
)


def get_class(name: str) -> ClassSpec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown class {name!r}; known: {', '.join(CLI_CLASSES)}") from None


@dataclass(frozen=True)
class Verdict:
    member: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.member


def is_free(g: Graph, spec: ClassSpec | str) -> Verdict:
    if isinstance(spec, str):
        spec = get_class(spec)
    for pid in spec.forbidden:
        w = find_induced(g, pid)
        if w is not None:
            return Verdict(False, w)
    return Verdict(True)


def is_cograph(g: Graph) -> bool:
    return find_induced(g, PatternId.P4) is None


def is_split(g: Graph) -> bool:
    return is_free(g, REGISTRY["split"]).member


def is_pseudo_split(g: Graph) -> bool:
    return is_free(g, REGISTRY["pseudo-split"]).member


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to the lowest vertex)."""
    weight = [0] * g.n
    unvisited = g.all
    order = []
    while unvisited:
        v = max(bits(unvisited), key=lambda u: (weight[u], -u))
        order.append(v)
        unvisited &= ~(1 << v)
        for w in bits(g.adj[v] & unvisited):
            weight[w] += 1
    return order


def is_peo(g: Graph, elimination: list[int]) -> bool:
    """Each vertex's later neighbours in ``elimination`` form a clique."""
    pos = {v: i for i, v in enumerate(elimination)}
    for v in elimination:
        later = [w for w in bits(g.adj[v]) if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        rest = to_mask(later) & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_peo(g, mcs_order(g)[::-1])


PERFECT_BUDGET_N = 12


def _has_odd_hole(g: Graph) -> bool:
    adj = g.adj
    for comp in components(g):
        if popcount(comp) < 5:
            continue
        verts = list(bits(comp))
        m = len(verts)
        for sub in range(1, 1 << m):
            k = sub.bit_count()
            if k < 5 or k % 2 == 0:
                continue
            s = 0
            for i in range(m):
                if (sub >> i) & 1:
                    s |= 1 << verts[i]
            if all((adj[v] & s).bit_count() == 2 for v in bits(s)) and len(components(g, s)) == 1:
                return True
    return False


def is_perfect_small(g: Graph) -> bool:
    """Perfection by forbidden odd holes / antiholes, enumerating vertex subsets."""
    if g.n > PERFECT_BUDGET_N:
        raise BudgetExceeded(f"is_perfect_small supports n <= {PERFECT_BUDGET_N}, got {g.n}")
    return not _has_odd_hole(g) and not _has_odd_hole(complement(g))


def class_predicate(spec: ClassSpec) -> Callable[[Graph], bool]:
    return lambda g: is_free(g, spec).member

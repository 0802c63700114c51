"""Class dispatch and the per-graph bound check used by the harness and the CLI."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from chiforge.decompose.apex import color_k5_free
from chiforge.decompose.certificate import (
    Block,
    BoundedColoring,
    DecompositionCertificate,
    verify_certificate,
)
from chiforge.decompose.diamond import color_hvn_free, color_k5e_free
from chiforge.decompose.gem import color_gem_free
from chiforge.decompose.wagon import color_2k2, color_p2p4
from chiforge.decompose.wheel import color_wheel_free
from chiforge.decompose._assemble import require_member
from chiforge.errors import BudgetExceeded
from chiforge.graph import Graph, is_proper
from chiforge.oracles import chromatic_number, clique_number
from chiforge.patterns import ClassSpec, get_class, is_free
from chiforge.subsolvers import color_chordal, color_pseudo_split


def _whole(name: str, colorer, tag: str, theorem: str):
    def run(g: Graph, check: bool = True) -> BoundedColoring:
        if check:
            require_member(g, name)
        omega = clique_number(g)
        col = colorer(g)
        blocks = (Block(g.all, tag),) if g.n else ()
        bound = get_class(name).bound(omega)
        return BoundedColoring(col, bound, omega, DecompositionCertificate(theorem, blocks), bound)

    run.__name__ = f"color_{name.replace('-', '_')}"
    return run


color_pseudo_split_class = _whole("pseudo-split", color_pseudo_split, "pseudo_split", "PSEUDO_SPLIT")
color_split_class = _whole("split", color_chordal, "split", "SPLIT")

# None marks a class whose bound is only verified by the exact oracle.
DISPATCH: dict[str, Callable[..., BoundedColoring] | None] = {
    "2k2": color_2k2,
    "2k2-gem": color_gem_free,
    "2k2-wheel4": color_wheel_free,
    "2k2-paraglider": None,
    "2k2-hvn": color_hvn_free,
    "2k2-k5e": color_k5e_free,
    "2k2-k5": color_k5_free,
    "p2p4": color_p2p4,
    "pseudo-split": color_pseudo_split_class,
    "split": color_split_class,
}


@dataclass
class BoundReport:
    """One (graph, class) row: verdict is pass, fail, skipped or not_member."""

    n: int
    cls: str
    member: bool
    omega: int | None = None
    chi: int | None = None
    k: int | None = None
    bound: int | None = None
    verdict: str = "skipped"
    runtime_ms: float = 0.0
    graph_id: str = ""
    detail: str = ""
    result: BoundedColoring | None = field(default=None, repr=False, compare=False)

    @property
    def gap(self) -> int | None:
        if self.k is None or self.chi is None:
            return None
        return self.k - self.chi


def verify_class_bound(
    g: Graph,
    spec: ClassSpec | str,
    budget: int | None = None,
    check_cert: bool = True,
    member: bool | None = None,
    chi: int | None = None,
    omega: int | None = None,
    graph_id: str = "",
) -> BoundReport:
    """Membership, constructive coloring (when one exists) and the exact chi.

    ``member``, ``chi`` and ``omega`` let a batch caller pass values it has
    already computed. A colorer exception propagates; an exhausted oracle
    budget leaves ``chi`` empty and the verdict rests on the coloring alone.
    """
    t0 = time.perf_counter()
    if isinstance(spec, str):
        spec = get_class(spec)
    if member is None:
        member = is_free(g, spec).member
    rep = BoundReport(g.n, spec.name, member, graph_id=graph_id)
    if not member:
        rep.verdict = "not_member"
        return rep
    try:
        rep.omega = clique_number(g, budget) if omega is None else omega
    except BudgetExceeded:
        rep.detail = "clique oracle budget exhausted"
        rep.runtime_ms = (time.perf_counter() - t0) * 1e3
        return rep
    rep.bound = spec.bound(rep.omega)
    if chi is None:
        try:
            chi = chromatic_number(g, budget)
        except BudgetExceeded:
            chi = None
    rep.chi = chi
    colorer = DISPATCH.get(spec.name)
    problems = []
    if colorer is not None:
        res = colorer(g, check=False)
        rep.result = res
        rep.k = res.k
        if not is_proper(g, res.coloring):
            problems.append("coloring is not proper")
        if res.k > rep.bound:
            problems.append(f"{res.k} colors exceed bound {rep.bound}")
        if chi is not None and res.k < chi:
            problems.append(f"{res.k} colors below chi {chi}")
        if check_cert:
            problems += verify_certificate(g, res.certificate, res.coloring, rep.bound, spec.name)
    if chi is not None and chi > rep.bound:
        problems.append(f"chi {chi} exceeds bound {rep.bound}")
    if problems:
        rep.verdict = "fail"
    elif chi is None and colorer is None:
        rep.verdict = "skipped"
        problems.append("chromatic oracle budget exhausted")
    else:
        rep.verdict = "pass"
    rep.detail = "; ".join(problems)
    rep.runtime_ms = (time.perf_counter() - t0) * 1e3
    return rep

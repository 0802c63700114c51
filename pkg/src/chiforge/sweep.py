"""Batch bound verification over exhaustive enumerations and graph streams."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Iterable, Sequence

import numpy as np

from chiforge import kernels
from chiforge.decompose.certificate import certificate_document, check_document
from chiforge.decompose.verify import BoundReport, verify_class_bound
from chiforge.generators import class_masks
from chiforge.graph import Graph, read_graph6
from chiforge.patterns import get_class

CSV_COLUMNS = (
    "graph_id", "n", "class", "member", "omega", "chi_exact",
    "k_algorithm", "bound", "verdict", "runtime_ms",
)


@dataclass
class ClassSummary:
    members: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    not_member: int = 0
    max_chi_minus_omega: int | None = None
    max_k_minus_chi: int | None = None

    def add(self, r: BoundReport) -> None:
        if r.verdict == "not_member":
            self.not_member += 1
            return
        self.members += 1
        if r.verdict == "pass":
            self.passed += 1
        elif r.verdict == "fail":
            self.failed += 1
        else:
            self.skipped += 1
        if r.chi is not None and r.omega is not None:
            d = r.chi - r.omega
            self.max_chi_minus_omega = d if self.max_chi_minus_omega is None else max(self.max_chi_minus_omega, d)
        if r.gap is not None:
            self.max_k_minus_chi = r.gap if self.max_k_minus_chi is None else max(self.max_k_minus_chi, r.gap)


@dataclass
class SweepResult:
    """Rows (unless dropped), per-class summaries, and the failing rows.

    ``certificates_checked`` counts certificates that went through the JSON
    round trip and the standalone document checker.
    """

    rows: list[BoundReport]
    summary: dict[str, ClassSummary] = field(default_factory=dict)
    documents: list[dict] = field(default_factory=list)
    failures: list[BoundReport] = field(default_factory=list)
    certificates_checked: int = 0


def _row_values(r: BoundReport) -> tuple:
    def opt(x):
        return "" if x is None else x

    return (
        r.graph_id, r.n, r.cls, int(r.member), opt(r.omega), opt(r.chi),
        opt(r.k), opt(r.bound), r.verdict, f"{r.runtime_ms:.3f}",
    )


def format_csv(rows: Iterable[BoundReport], timing: bool = True) -> str:
    """CSV with the fixed column order; ``timing=False`` blanks runtime for byte-stable output."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        vals = list(_row_values(r))
        if not timing:
            vals[-1] = ""
        w.writerow(vals)
    return buf.getvalue()


def format_json(res: SweepResult, timing: bool = True) -> str:
    rows = []
    for r in res.rows:
        d = dict(zip(CSV_COLUMNS, _row_values(r)))
        d["member"] = r.member
        d["runtime_ms"] = round(r.runtime_ms, 3) if timing else None
        if r.detail:
            d["detail"] = r.detail
        rows.append(d)
    summary = {k: vars(v) for k, v in res.summary.items()}
    return json.dumps({"rows": rows, "summary": summary}, indent=1, sort_keys=False) + "\n"


def _summarize(rows: list[BoundReport], classes: Sequence[str]) -> dict[str, ClassSummary]:
    out = {c: ClassSummary() for c in classes}
    for r in rows:
        out[r.cls].add(r)
    return out


def _document_problems(g: Graph, cls: str, res) -> list[str]:
    """Serialize the certificate to JSON and re-check it with the standalone checker."""
    doc = json.loads(json.dumps(certificate_document(g, cls, res)))
    problems = check_document(doc)
    if read_graph6(doc["graph6"]) != g:
        problems.append("graph6 round trip changed the graph")
    return problems


def _exhaustive_chunk(args):
    n, cls, masks, chis, omegas, check_cert, keep_docs, keep_rows = args
    rows = []
    docs = []
    checked = 0
    summary = ClassSummary()
    spec = get_class(cls)
    by_document = check_cert == "document"
    for m, chi, om in zip(masks, chis, omegas):
        g = Graph.from_mask(n, int(m))
        r = verify_class_bound(g, spec, check_cert=bool(check_cert) and not by_document, member=True,
                               chi=int(chi), omega=int(om), graph_id=str(int(m)))
        if by_document and r.result is not None:
            problems = _document_problems(g, cls, r.result)
            checked += 1
            if problems:
                r.verdict = "fail"
                r.detail = "; ".join(filter(None, [r.detail, *problems]))
        if keep_docs and r.result is not None:
            docs.append(certificate_document(g, cls, r.result))
        r.result = None
        summary.add(r)
        if keep_rows or r.verdict == "fail":
            rows.append(r)
    return cls, rows, docs, summary, checked


def _merge(a: ClassSummary, b: ClassSummary) -> None:
    for name in ("members", "passed", "failed", "skipped", "not_member"):
        setattr(a, name, getattr(a, name) + getattr(b, name))
    for name in ("max_chi_minus_omega", "max_k_minus_chi"):
        x, y = getattr(a, name), getattr(b, name)
        setattr(a, name, y if x is None else x if y is None else max(x, y))


def sweep_exhaustive(
    n: int,
    classes: Sequence[str],
    jobs: int | None = 1,
    check_cert: bool | str = True,
    keep_documents: bool = False,
    chunk: int = 20_000,
    keep_rows: bool = True,
) -> SweepResult:
    """Every labeled member on ``n`` vertices, for each class.

    Membership, omega and chi come from the batch kernels; the colorer and
    the certificate check run per graph. ``check_cert="document"`` routes each
    certificate through JSON and ``check_document`` instead of the in-memory
    check. With ``keep_rows=False`` only failing rows are retained. Rows are
    ordered by (edge mask, class).
    """
    tasks = []
    for cls in classes:
        masks = class_masks(n, cls)
        if n:
            chis, omegas, _ = kernels.subset_chi_omega(masks, n)
        else:
            chis = omegas = np.zeros(len(masks), dtype=np.int64)
        for s in range(0, len(masks), chunk):
            tasks.append((n, cls, masks[s:s + chunk], chis[s:s + chunk], omegas[s:s + chunk],
                          check_cert, keep_documents, keep_rows))
    jobs = jobs or os.cpu_count() or 1
    summary = {c: ClassSummary() for c in classes}
    rows: list[BoundReport] = []
    docs: list[dict] = []
    checked = 0

    def absorb(part) -> None:
        nonlocal checked
        cls, r, d, s, k = part
        rows.extend(r)
        docs.extend(d)
        _merge(summary[cls], s)
        checked += k

    if jobs > 1 and len(tasks) > 1:
        with get_context("spawn").Pool(jobs) as pool:
            for part in pool.imap(_exhaustive_chunk, tasks):
                absorb(part)
    else:
        for t in tasks:
            absorb(_exhaustive_chunk(t))
    order = {c: i for i, c in enumerate(classes)}
    rows.sort(key=lambda r: (int(r.graph_id), order[r.cls]))
    failures = [r for r in rows if r.verdict == "fail"]
    return SweepResult(rows, summary, docs, failures, checked)


def _stream_one(args) -> list[BoundReport]:
    gid, g, classes, budget, check_cert = args
    return [verify_class_bound(g, c, budget=budget, check_cert=check_cert, graph_id=gid) for c in classes]


def sweep_graphs(
    items: Iterable[tuple[str, Graph]],
    classes: Sequence[str],
    jobs: int | None = 1,
    budget: int | None = None,
    check_cert: bool = True,
) -> SweepResult:
    """Bound reports for each (graph, class), non-members included as ``not_member``."""
    tasks = [(str(gid), g, tuple(classes), budget, check_cert) for gid, g in items]
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with get_context("spawn").Pool(jobs) as pool:
            parts = pool.map(_stream_one, tasks)
    else:
        parts = [_stream_one(t) for t in tasks]
    rows = [r for p in parts for r in p]
    for r in rows:
        r.result = None
    return SweepResult(rows, _summarize(rows, classes), failures=[r for r in rows if r.verdict == "fail"])


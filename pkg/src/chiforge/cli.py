"""chiforge command line: recognize, color, sweep, gen, and standalone certificate checks.

Exit codes: 0 ok, 1 usage, 2 not in class, 3 structure violation, 4 bound or
certificate failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Iterator

from chiforge.decompose import DISPATCH, certificate_document, check_document, verify_certificate
from chiforge.errors import BudgetExceeded, NotInClass, ParseError, StructureViolation
from chiforge.generators import c5_expansion_family, class_masks, random_in_class, read_corpus
from chiforge.graph import Graph, is_proper, read_graph6, write_graph6
from chiforge.patterns import CLI_CLASSES, REGISTRY, get_class, is_free
from chiforge.sweep import format_csv, format_json, sweep_exhaustive, sweep_graphs

EXIT_OK, EXIT_USAGE, EXIT_NOT_IN_CLASS, EXIT_STRUCTURE, EXIT_BOUND = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _class_name(name: str) -> str:
    if name not in REGISTRY:
        raise UsageError(f"unknown class {name!r}; known classes: {', '.join(CLI_CLASSES)}")
    return name


def _graphs(args) -> Iterator[tuple[str, Graph]]:
    """Inline graph6 arguments first, then the corpus file."""
    for k, text in enumerate(args.graphs or (), start=1):
        try:
            yield text, read_graph6(text)
        except ParseError as exc:
            raise UsageError(f"argument {k}: {exc}") from exc
    if args.corpus:
        stream = read_corpus(args.corpus)
        for lineno, g in stream.indexed():
            yield f"{args.corpus}:{lineno}", g
        for err in stream.errors:
            print(f"warning: {args.corpus}: {err}", file=sys.stderr)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_recognize(args) -> int:
    spec = get_class(_class_name(args.cls))
    lines = []
    for gid, g in _graphs(args):
        v = is_free(g, spec)
        if v.member:
            lines.append(f"{gid}\tmember")
        else:
            vs = ",".join(map(str, v.witness.vertices))
            lines.append(f"{gid}\texcluded\t{v.witness.pattern.value}\t{{{vs}}}")
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


def cmd_color(args) -> int:
    name = _class_name(args.cls)
    colorer = DISPATCH.get(name)
    if colorer is None:
        raise UsageError(f"class {name!r} has no constructive colorer (bound verified by oracle only)")
    docs = []
    code = EXIT_OK
    for gid, g in _graphs(args):
        try:
            res = colorer(g)
        except NotInClass as exc:
            w = exc.witness
            where = f" witness {w.pattern.value} at {list(w.vertices)}" if w is not None else ""
            print(f"{gid}: not in {name}:{where} ({exc})", file=sys.stderr)
            return EXIT_NOT_IN_CLASS
        except StructureViolation as exc:
            print(f"{gid}: structure violation: {exc}", file=sys.stderr)
            return EXIT_STRUCTURE
        if not is_proper(g, res.coloring) or res.k > res.bound:
            print(f"{gid}: {res.k} colors against bound {res.bound}", file=sys.stderr)
            code = EXIT_BOUND
        if verify_certificate(g, res.certificate, res.coloring, res.bound, name):
            code = EXIT_BOUND
        docs.append(certificate_document(g, name, res))
    payload = docs[0] if len(docs) == 1 else docs
    _emit(json.dumps(payload, indent=1) + "\n", args.out)
    return code


def cmd_check_cert(path: str) -> int:
    data = json.loads(Path(path).read_text())
    docs = data if isinstance(data, list) else [data]
    bad = 0
    for i, doc in enumerate(docs):
        problems = check_document(doc)
        for p in problems:
            print(f"certificate {i} ({doc.get('graph6')}): {p}", file=sys.stderr)
        bad += bool(problems)
    print(f"{len(docs) - bad}/{len(docs)} certificates verified")
    return EXIT_BOUND if bad else EXIT_OK


def cmd_sweep(args) -> int:
    classes = [_class_name(c) for c in (args.cls.split(",") if args.cls else CLI_CLASSES)]
    if args.budget is not None:
        os.environ["CHIFORGE_BUDGET"] = str(args.budget)
    if args.corpus or args.graphs:
        res = sweep_graphs(_graphs(args), classes, jobs=args.jobs, budget=args.budget)
    elif args.n is not None:
        try:
            res = sweep_exhaustive(args.n, classes, jobs=args.jobs)
        except BudgetExceeded as exc:
            raise UsageError(str(exc)) from exc
    else:
        raise UsageError("sweep needs --n or --corpus")
    timing = not args.no_timing
    text = format_json(res, timing) if args.format == "json" else format_csv(res.rows, timing)
    _emit(text, args.out)
    for cls, s in res.summary.items():
        print(
            f"{cls}: members={s.members} pass={s.passed} fail={s.failed} skipped={s.skipped} "
            f"max(chi-omega)={s.max_chi_minus_omega} max(k-chi)={s.max_k_minus_chi}",
            file=sys.stderr,
        )
    return EXIT_BOUND if res.failures else EXIT_OK


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "c5-expansion":
        if not args.params:
            raise UsageError("c5-expansion needs five sizes, e.g. 2,1,1,1,1")
        try:
            sizes = tuple(int(x) for x in args.params.split(","))
            graphs = [c5_expansion_family(sizes)]
        except ValueError as exc:
            raise UsageError(f"bad sizes {args.params!r}: {exc}") from exc
    elif fam == "random":
        if args.n is None or not args.cls:
            raise UsageError("random needs --class and --n")
        g = random_in_class(args.n, _class_name(args.cls), args.seed)
        graphs = [g] if g is not None else []
        if g is None:
            print("no member found within the attempt budget", file=sys.stderr)
    elif fam == "exhaustive":
        if args.n is None:
            raise UsageError("exhaustive needs --n")
        try:
            masks = class_masks(args.n, _class_name(args.cls) if args.cls else None)
        except BudgetExceeded as exc:
            raise UsageError(str(exc)) from exc
        graphs = (Graph.from_mask(args.n, int(m)) for m in masks)
    else:
        raise UsageError(f"unknown family {fam!r}; known: c5-expansion, random, exhaustive")
    _emit("".join(write_graph6(g) + "\n" for g in graphs), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chiforge", description=__doc__.splitlines()[0])
    p.add_argument("--check-cert", metavar="PATH", help="re-verify a JSON certificate file and exit")
    sub = p.add_subparsers(dest="command")

    def common(sp, graphs=True):
        if graphs:
            sp.add_argument("graphs", nargs="*", help="inline graph6 strings")
            sp.add_argument("--corpus", metavar="PATH", help="graph6 file, one graph per line")
        sp.add_argument("--class", dest="cls", metavar="NAME")
        sp.add_argument("--out", metavar="PATH")

    r = sub.add_parser("recognize", help="class membership with witnesses")
    common(r)
    c = sub.add_parser("color", help="certified coloring as JSON")
    common(c)
    s = sub.add_parser("sweep", help="bound reports over --n or a corpus")
    common(s)
    s.add_argument("--n", type=int)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    s.add_argument("--budget", type=int, default=None, help="oracle node budget")
    s.add_argument("--no-timing", action="store_true", help="blank runtime_ms for byte-stable output")
    g = sub.add_parser("gen", help="graph6 lines for a family")
    g.add_argument("family", help="c5-expansion | random | exhaustive")
    g.add_argument("params", nargs="?", help="sizes for c5-expansion, e.g. 2,1,1,1,1")
    common(g, graphs=False)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int, default=0)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.check_cert:
            return cmd_check_cert(args.check_cert)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        if args.command in ("recognize", "color") and not args.cls:
            raise UsageError(f"{args.command} needs --class")
        handler = {"recognize": cmd_recognize, "color": cmd_color, "sweep": cmd_sweep, "gen": cmd_gen}
        return handler[args.command](args)
    except UsageError as exc:
        print(f"chiforge: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError) as exc:
        print(f"chiforge: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

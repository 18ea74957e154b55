"""Command line front end.

Subcommands compute one presentation each: ``quiver``, ``cartan``,
``loewy``, ``relations`` and ``classify`` report different slices of
it, and ``check`` compares everything against the built-in reference
tables.  Exit status: 0 on success, 1 on a reference mismatch, 2 on
usage errors, 3 when an enumeration gate is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .coxeter import GateExceededError, UnsupportedTypeError, build_datum
from .golden import (
    CHECK_LABELS,
    CHECK_LABELS_LONG,
    COMMUTATIVE_FALSE,
    COMMUTATIVE_TRUE,
    PATH_ALGEBRA_FALSE,
    PATH_ALGEBRA_TRUE,
    compare,
    golden_record,
)
from .presentation import QuiverPresentation, quiver_presentation

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_GATE = 3


def _dots(index: int) -> str:
    return "." * index


def _part_of(q: QuiverPresentation, vertex: int) -> str:
    return "even" if q.vertices[vertex - 1].size % 2 == 0 else "odd"


def _selected_vertices(q: QuiverPresentation, parts: str) -> list:
    if parts == "full":
        return list(q.vertices)
    if not q.parity.central:
        raise UnsupportedTypeError(
            f"{q.label} has no even/odd split: the longest element is not central"
        )
    return [v for v in q.vertices if _part_of(q, v.index) == parts]


def render_text(q: QuiverPresentation, parts: str) -> str:
    vertices = _selected_vertices(q, parts)
    chosen = {v.index for v in vertices}
    lines = [
        f"type {q.label}: {len(q.vertices)} vertices, {len(q.edges)} edges, "
        f"{len(q.relations)} relations"
    ]
    if q.parity.central:
        lines.append("longest element central: even/odd decomposition applies")
    lines.append("vertices:")
    for v in vertices:
        lines.append(f"  {v.index:3d}. {v.name:8s} [{v.rep or 'empty'}]")
    lines.append("edges:")
    for e in q.edges:
        if e.src in chosen and e.dst in chosen:
            arrow = f"{_dots(e.index)}->"
            lines.append(f"  {e.src:3d} {arrow:6s} {e.dst:3d}  {e.street}")
    return "\n".join(lines)


def render_relations(q: QuiverPresentation, parts: str) -> str:
    vertices = _selected_vertices(q, parts)
    chosen = {v.index for v in vertices}
    wanted = [r for r in q.relations if r.src in chosen]
    if not wanted:
        return (
            f"type {q.label}: no relations; the algebra is a path algebra"
            if not q.relations
            else f"type {q.label}: no relations in the {parts} part"
        )
    lines = [f"type {q.label}: {len(wanted)} relations"]
    for r in wanted:
        terms = []
        for path, coeff in r.terms:
            chain = " -> ".join(
                [str(q.edges[path[0]].src)] + [str(q.edges[e].dst) for e in path]
            )
            streets = " ".join(q.edges[e].street for e in path)
            terms.append((chain, streets, coeff))
        head_chain, head_streets, _ = terms[0]
        rhs = []
        for chain, streets, coeff in terms[1:]:
            c = -coeff
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            factor = "" if mag == 1 else f"{mag}*"
            rhs.append(f"{sign} {factor}({chain})")
        rhs_text = " ".join(rhs) if rhs else "0"
        if rhs_text.startswith("+ "):
            rhs_text = rhs_text[2:]
        lines.append(f"  degree {r.degree}: ({head_chain}) = {rhs_text}   via {head_streets}")
    return "\n".join(lines)


def render_cartan(q: QuiverPresentation, parts: str) -> str:
    vertices = _selected_vertices(q, parts)
    lines = [f"Cartan matrix of {q.label} ({parts})"]
    width = max(len(v.name) for v in vertices)
    for v in vertices:
        row = []
        for w in vertices:
            entry = q.cartan[v.index - 1][w.index - 1]
            row.append(f"{entry:2d}" if entry else " .")
        lines.append(f"  {v.name:<{width}s} {' '.join(row)}")
    return "\n".join(lines)


def render_loewy(q: QuiverPresentation, parts: str) -> str:
    vertices = _selected_vertices(q, parts)
    lines = [f"radical layers of the projectives of {q.label}"]
    for v in vertices:
        layers = q.loewy[v.index]
        rendered = []
        for layer in layers:
            bits = []
            for num, mult in layer:
                name = q.vertices[num - 1].name
                bits.append(name if mult == 1 else f"({name})^{mult}")
            rendered.append(" ".join(bits))
        lines.append(f"  {v.name}: " + " / ".join(rendered))
    return "\n".join(lines)


def presentation_to_dict(q: QuiverPresentation) -> dict:
    return {
        "type": q.label,
        "vertices": [{"rep": v.rep, "name": v.name, "size": v.size} for v in q.vertices],
        "edges": [
            {"src": q.vertices[e.src - 1].rep, "dst": q.vertices[e.dst - 1].rep,
             "street": e.street, "index": e.index}
            for e in q.edges
        ],
        "relations": [
            {
                "degree": r.degree,
                "terms": [
                    {"path": [q.edges[e].street for e in path], "coeff": str(coeff)}
                    for path, coeff in r.terms
                ],
            }
            for r in q.relations
        ],
        "cartan": [list(row) for row in q.cartan],
        "loewy": {
            q.vertices[num - 1].rep: [
                [q.vertices[v - 1].name for v, mult in layer for _ in range(mult)]
                for layer in layers
            ]
            for num, layers in q.loewy.items()
        },
        "parity": {"central": q.parity.central},
    }


def render_dot(q: QuiverPresentation, parts: str = "full") -> str:
    vertices = _selected_vertices(q, parts)
    chosen = {v.index for v in vertices}
    lines = [f'digraph "{q.label}" {{', "  rankdir=LR;"]

    def node(v):
        return f'  v{v.index} [label="{v.name} [{v.rep or "empty"}]"];'

    if q.parity.central and parts == "full":
        for tag, nums in (("even", q.parity.even_vertices), ("odd", q.parity.odd_vertices)):
            lines.append(f"  subgraph cluster_{tag} {{")
            lines.append(f'    label="{tag} part";')
            for v in q.vertices:
                if v.index in nums:
                    lines.append("  " + node(v))
            lines.append("  }")
    else:
        for v in vertices:
            lines.append(node(v))
    for e in q.edges:
        if e.src in chosen and e.dst in chosen:
            lines.append(f'  v{e.src} -> v{e.dst} [label="{e.street}"];')
    lines.append("}")
    return "\n".join(lines)


def run_check(label: str, gate: int | None) -> tuple[str, list[str]]:
    try:
        record = golden_record(label)
    except KeyError as exc:
        return label, [str(exc)]
    q = quiver_presentation(label, gate)
    return label, compare(record, q)


def _check_classification(label: str, gate: int | None) -> list[str]:
    q = quiver_presentation(label, gate)
    diffs = []
    if label in PATH_ALGEBRA_TRUE and not q.is_path_algebra:
        diffs.append(f"{label}: expected a path algebra")
    if label in PATH_ALGEBRA_FALSE and q.is_path_algebra:
        diffs.append(f"{label}: expected relations")
    if label in COMMUTATIVE_TRUE and not q.is_commutative:
        diffs.append(f"{label}: expected a commutative algebra")
    if label in COMMUTATIVE_FALSE and q.is_commutative:
        diffs.append(f"{label}: expected a noncommutative algebra")
    return diffs


def _run_check_task(args: tuple[str, int | None]) -> tuple[str, list[str]]:
    label, gate = args
    if label.startswith("class:"):
        real = label.split(":", 1)[1]
        return label, _check_classification(real, gate)
    return run_check(label, gate)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="descent-quiver",
        description="quiver presentations of descent algebras of finite Coxeter groups",
    )
    parser.add_argument("--gate", type=int, default=None, metavar="N",
                        help="override the enumeration bound (default 5000000)")
    parser.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="parallel workers for check --all")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_parts=True):
        p.add_argument("type", nargs="?", help="type label, e.g. E6, H3, I2(7)")
        p.add_argument("--format", choices=["text", "json", "dot"], default="text")
        if with_parts:
            p.add_argument("--parts", choices=["full", "even", "odd"], default="full")

    for name in ("quiver", "cartan", "loewy", "relations", "classify"):
        add_common(sub.add_parser(name))
    check = sub.add_parser("check")
    check.add_argument("type", nargs="?", help="type label; omit with --all")
    check.add_argument("--all", action="store_true", help="check every built-in table")
    check.add_argument("--long", action="store_true", help="include the rank-8 run")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0

    try:
        return _dispatch(args)
    except GateExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GATE
    except UnsupportedTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.command == "check":
        if args.all:
            labels = list(CHECK_LABELS_LONG if args.long else CHECK_LABELS)
            labels += [f"class:{t}" for t in PATH_ALGEBRA_TRUE + PATH_ALGEBRA_FALSE]
            tasks = [(label, args.gate) for label in labels]
            if args.jobs > 1:
                with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                    results = list(pool.map(_run_check_task, tasks))
            else:
                results = [_run_check_task(t) for t in tasks]
            failed = False
            for label, diffs in results:
                if diffs:
                    failed = True
                    print(f"FAIL {label}")
                    for d in diffs:
                        print(f"  {d}")
                else:
                    print(f"pass {label}")
            return EXIT_MISMATCH if failed else EXIT_OK
        if not args.type:
            print("error: check needs a type label or --all", file=sys.stderr)
            return EXIT_USAGE
        label, diffs = run_check(args.type, args.gate)
        if diffs:
            print(f"FAIL {label}")
            for d in diffs:
                print(f"  {d}")
            return EXIT_MISMATCH
        print(f"pass {label}")
        return EXIT_OK

    if not args.type:
        print("error: missing type label", file=sys.stderr)
        return EXIT_USAGE
    # parse eagerly so label errors exit with usage status
    build_datum(args.type)
    q = quiver_presentation(args.type, args.gate)

    if args.command == "classify":
        payload = {
            "type": q.label,
            "is_path_algebra": q.is_path_algebra,
            "is_commutative": q.is_commutative,
        }
        if args.format == "json":
            print(json.dumps(payload, indent=2))
        else:
            print(
                f"type {q.label}: path algebra: {'yes' if q.is_path_algebra else 'no'}; "
                f"commutative: {'yes' if q.is_commutative else 'no'}"
            )
        return EXIT_OK

    parts = getattr(args, "parts", "full")
    if args.format == "json":
        print(json.dumps(presentation_to_dict(q), indent=2))
        return EXIT_OK
    if args.format == "dot":
        print(render_dot(q, parts))
        return EXIT_OK
    renderer = {
        "quiver": render_text,
        "cartan": render_cartan,
        "loewy": render_loewy,
        "relations": render_relations,
    }[args.command]
    print(renderer(q, parts))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())

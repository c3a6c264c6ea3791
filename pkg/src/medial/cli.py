"""Command line front end.

Exit codes: 0 pass, 1 fail, 2 inconclusive, 64 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, counts, geometry, render
from .quotient import check_equivalence, find_commutations
from .rewrite import DEFAULT_BUDGET, closure, replay_certificate
from .trees import format_monomial, leaf_labels, parse_monomial

PASS, FAIL, INCONCLUSIVE, USAGE = 0, 1, 2, 64

VERIFY_TARGETS = (
    "kock16",
    "bm9",
    "configA",
    "configB",
    "case2",
    "configC-negative",
    "seven-block-negative",
    "case1-negative",
)


def _letters(names: dict[str, int], pair: tuple[int, int]) -> str:
    rev = {v: k for k, v in names.items()}
    return f"({rev[pair[0]]} {rev[pair[1]]})"


def _worst(a: int, b: int) -> int:
    """Combine exit codes: FAIL dominates INCONCLUSIVE dominates PASS."""
    if FAIL in (a, b):
        return FAIL
    return max(a, b)


def cmd_count(args) -> int:
    n = args.arity
    try:
        rows = counts.count_summary(n)
        if args.graph_out:
            graph = counts.interchange_graph(n)
            lines = [f"vertices {len(graph.vertices)}"]
            lines += [f"{i} {j}" for i, j in sorted(graph.edges)]
            Path(args.graph_out).write_text("\n".join(lines) + "\n")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    expected = {
        "shapes": counts.shape_count(n),
        "assoc_classes": counts.ALTERNATING_COUNTS.get(n),
        "isolated": counts.ISOLATED_COUNTS.get(n),
    }
    status = PASS
    print(f"arity {n}")
    for key, value in rows.items():
        want = expected.get(key)
        if want is None:
            print(f"  {key:14} {value}")
        else:
            mark = "ok" if value == want else f"MISMATCH (expected {want})"
            if value != want:
                status = FAIL
            print(f"  {key:14} {value:8}  {mark}")
    return status


def _verify_relation(name: str, budget: int, rediscover: bool) -> int:
    rel = catalog.RELATIONS[name]
    cert = catalog.load_certificate(name)
    if cert.initial != rel.lhs or cert.final != rel.rhs:
        print(f"FAIL {name}: bundled certificate does not state the relation")
        return FAIL
    result = replay_certificate(cert)
    if not result:
        print(f"FAIL {name}: certificate replay failed: {result.reason}")
        return FAIL
    print(
        f"  replay ok: {len(cert.steps)} steps, "
        f"{cert.interchange_count} interchange applications"
    )
    search = check_equivalence(rel.lhs, rel.rhs, budget=budget)
    if not search.found:
        if search.proved_distinct:
            print(f"FAIL {name}: independent search proved the sides distinct")
            return FAIL
        print(f"INCONCLUSIVE {name}: search budget exhausted before a proof")
        return INCONCLUSIVE
    print(f"  independent search: proof with {search.certificate.interchange_count} interchanges")
    if rediscover:
        scan = find_commutations(rel.lhs, budget=budget)
        perms = {w.permutation for w in scan}
        i, j = rel.transposition
        n = len(leaf_labels(rel.lhs))
        want = tuple(j if k == i else i if k == j else k for k in range(1, n + 1))
        if want not in perms:
            if not scan.exhausted:
                print(f"INCONCLUSIVE {name}: commutation scan ran out of budget")
                return INCONCLUSIVE
            print(f"FAIL {name}: commutation scan did not rediscover the transposition")
            return FAIL
        print(
            f"  commutation scan: rediscovered transposition "
            f"{_letters(rel.names, rel.transposition)} "
            f"(class size {scan.class_size}, exhausted={scan.exhausted})"
        )
    print(f"PASS {name}")
    return PASS


def _verify_negative_scan(name: str, cfg: catalog.Configuration, budget: int) -> int:
    scan = find_commutations(cfg.monomial, budget=budget)
    if not scan.exhausted:
        print(f"INCONCLUSIVE {name}: budget exhausted before the closure completed")
        return INCONCLUSIVE
    if scan.witnesses:
        rev = {v: k for k, v in cfg.names.items()}
        perms = [
            "".join(f"{rev[i+1]}->{rev[img]} " for i, img in enumerate(w.permutation) if img != i + 1)
            for w in scan.witnesses
        ]
        print(f"FAIL {name}: closure exhausted but witnesses exist: {perms}")
        return FAIL
    print(f"PASS {name} (closure exhausted, {scan.class_size} classes, no commutation)")
    return PASS


def _verify_seven_block(budget: int) -> int:
    status = PASS
    for k, cfg in enumerate(catalog.SEVEN_BLOCKS):
        result = closure(cfg.monomial, budget=budget)
        scan = find_commutations(cfg.monomial, budget=budget)
        if not (result.exhausted and scan.exhausted):
            print(f"INCONCLUSIVE {cfg.name}: budget exhausted")
            status = _worst(status, INCONCLUSIVE)
            continue
        if scan.witnesses:
            print(f"FAIL {cfg.name}: commutation witnesses exist")
            status = FAIL
            continue
        note = f"closure size {len(result)}"
        if k == 0 and len(result) != catalog.SEVEN_BLOCK_FIRST_CLOSURE_SIZE:
            print(f"FAIL {cfg.name}: {note}, expected {catalog.SEVEN_BLOCK_FIRST_CLOSURE_SIZE}")
            status = FAIL
            continue
        print(f"PASS {cfg.name} ({note}, no commutation)")
    return status


def _verify_case1(budget: int) -> int:
    cfg = catalog.CASE1
    tracked = tuple(cfg.names[x] for x in ("d", "e", "f", "g"))
    result = closure(cfg.monomial, budget=budget)
    if not result.exhausted:
        print("INCONCLUSIVE case1-negative: budget exhausted")
        return INCONCLUSIVE

    def order(t) -> tuple[int, ...]:
        part = geometry.realize(t)
        blocks = sorted(
            (b for b in part.blocks if b.label in tracked), key=lambda b: b.x1
        )
        return tuple(b.label for b in blocks)

    want = order(cfg.monomial)
    for member in result.members:
        if order(member) != want:
            print("FAIL case1-negative: member permutes the tracked blocks")
            return FAIL
    scan = find_commutations(cfg.monomial, budget=budget)
    if scan.witnesses or not scan.exhausted:
        print("FAIL case1-negative: unexpected commutation witnesses")
        return FAIL
    print(
        f"PASS case1-negative (closure size {len(result)}, block order stable)"
    )
    return PASS


def cmd_verify(args) -> int:
    name, budget = args.name, args.budget
    if name == "kock16" or name == "bm9":
        return _verify_relation(name, budget, rediscover=False)
    if name in ("configA", "configB", "case2"):
        return _verify_relation(name, budget, rediscover=True)
    if name == "configC-negative":
        return _verify_negative_scan(name, catalog.CONFIG_C, budget)
    if name == "seven-block-negative":
        return _verify_seven_block(budget)
    if name == "case1-negative":
        return _verify_case1(budget)
    print(f"error: unknown target {name!r}", file=sys.stderr)
    return USAGE


def cmd_search(args) -> int:
    budget = args.budget
    lines: list[str] = []
    status = PASS
    if args.monomial:
        candidates = [geometry.realize(parse_monomial(args.monomial))]
    else:
        if args.arity is None:
            print("error: provide --arity or --monomial", file=sys.stderr)
            return USAGE
        try:
            candidates = [
                p.with_lex_labels() for p in geometry.enumerate_partitions(args.arity)
            ]
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE
    examined = skipped = 0
    for part in candidates:
        if args.require_main_cuts and len(geometry.main_cuts(part)) != 2:
            skipped += 1
            continue
        if len(geometry.interior_labels(part)) < args.min_interior:
            skipped += 1
            continue
        if args.slices:
            lo, hi = args.slices
            ok = True
            for direction in (geometry.HORIZONTAL, geometry.VERTICAL):
                if direction not in geometry.main_cuts(part):
                    ok = False
                    break
                _, slabs = geometry.primary_cuts_and_slices(
                    part, geometry.UNIT_RECT, direction
                )
                if not lo <= len(slabs) <= hi:
                    ok = False
                    break
            if not ok:
                skipped += 1
                continue
        examined += 1
        rep = geometry.fiber(part)[0]
        scan = find_commutations(rep, budget=budget, families=args.rule_families)
        if not scan.exhausted:
            status = _worst(status, INCONCLUSIVE)
            lines.append(f"INCOMPLETE monomial={format_monomial(rep)}")
            continue
        for w in scan.witnesses:
            kind = "transposition" if w.is_transposition else "permutation"
            lines.append(
                f"WITNESS arity={part.arity} {kind}={w.permutation} "
                f"monomial={format_monomial(rep)}"
            )
    lines.append(f"examined {examined} candidates, pruned {skipped}")
    report = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(report)
    else:
        sys.stdout.write(report)
    return status


def cmd_render(args) -> int:
    try:
        if args.monomial:
            part = geometry.realize(parse_monomial(args.monomial))
        elif args.input:
            text = Path(args.input).read_text()
            try:
                part = geometry.parse_partition(text)
            except geometry.PartitionError:
                part = geometry.realize(parse_monomial(text.strip()))
        else:
            print("error: provide --monomial or --input", file=sys.stderr)
            return USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    text = render.partition_svg(part) if args.format == "svg" else render.partition_ascii(part)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return PASS


def _slice_bounds(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def _rule_families(text: str) -> frozenset[str]:
    from . import rewrite

    table = {
        "assoc": {rewrite.ASSOC_H, rewrite.ASSOC_V},
        "interchange": {rewrite.INTERCHANGE},
    }
    out: set[str] = set()
    for token in text.split(","):
        token = token.strip()
        if token not in table:
            raise argparse.ArgumentTypeError(
                f"unknown rule family {token!r} (use assoc,interchange)"
            )
        out |= table[token]
    return frozenset(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="medial",
        description="Rewriting and enumeration for double interchange semigroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="combinatorial counts for one arity")
    p_count.add_argument("--arity", type=int, required=True)
    p_count.add_argument(
        "--graph-out", type=str, help="also write the interchange graph edge list"
    )
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", help="check a named relation or negative")
    p_verify.add_argument("name", choices=VERIFY_TARGETS)
    p_verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="scan partitions for commutations")
    p_search.add_argument("--arity", type=int)
    p_search.add_argument("--monomial", type=str)
    p_search.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_search.add_argument(
        "--rules",
        dest="rule_families",
        type=_rule_families,
        default=None,
        metavar="FAMILIES",
        help="comma list from {assoc, interchange}; default both",
    )
    p_search.add_argument(
        "--no-require-main-cuts",
        dest="require_main_cuts",
        action="store_false",
        help="also scan partitions lacking one of the two main cuts",
    )
    p_search.add_argument("--min-interior", type=int, default=0)
    p_search.add_argument(
        "--slices",
        type=_slice_bounds,
        default=None,
        metavar="LO:HI",
        help="require between LO and HI parallel slices in each direction",
    )
    p_search.add_argument("--out", type=str)
    p_search.set_defaults(func=cmd_search)

    p_render = sub.add_parser("render", help="draw a monomial or partition")
    p_render.add_argument("--monomial", type=str)
    p_render.add_argument("--input", type=str)
    p_render.add_argument("--format", choices=("svg", "ascii"), default="ascii")
    p_render.add_argument("--out", type=str)
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

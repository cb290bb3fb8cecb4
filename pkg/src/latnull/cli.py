"""Command line interface: ``latnull <command> [file] [flags]``.

Exit codes: 0 success (or existence), 1 definite negative result, 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .axioms import is_idempotent_nullnorm
from .characterization import (
    classify_uniqueness,
    decide_existence,
    enumerate_idempotent_nullnorms,
)
from .constructions import Variant, applicable_variants, construct_variant
from .errors import (
    BadBounds,
    CycleError,
    LatticeError,
    NotALattice,
    PreconditionFailed,
    RedundantCover,
)
from .fuzz import corpus, cross_check, zeros_with_two_incomparables
from .io import (
    LatticeDocument,
    emit_dot,
    emit_op_table_csv,
    format_lattice_file,
    parse_op_table_csv,
    read_lattice_file,
)
from .lattice import random_bounded_lattice

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2
SEARCH_SPACE = {"lemma": "lemma_restricted", "full": "full"}
INVALID_LATTICE = (NotALattice, CycleError, BadBounds, RedundantCover)


class Negative(Exception):
    """A definite negative answer; the message has already been printed."""


def _load(args):
    doc = read_lattice_file(args.file)
    return doc, doc.lattice()


def _zero(args, doc: LatticeDocument, L):
    label = getattr(args, "zero", None) or doc.zero
    if label is None:
        raise LatticeError("no zero element: add a 'zero' line or pass --zero")
    return L.check_zero(label)


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)


def _labels(L, ids):
    return "{" + ", ".join(L.names[i] for i in ids) + "}"


def _print_conditions(verdict):
    for c in verdict.conditions:
        print(f"  {'(' + c.name + ')':<5} {'true ' if c.holds else 'false'}  {c.statement}  [{c.evaluated}]")


def _verdict_line(verdict):
    if verdict.exists:
        return "EXISTS via " + ",".join(f"({v})" for v in verdict.via)
    return "NOT EXISTS"


def cmd_validate(args):
    doc = read_lattice_file(args.file)
    try:
        L = doc.lattice()
    except INVALID_LATTICE as exc:
        print(f"INVALID: {exc}")
        raise Negative from None
    print(f"{doc.name or args.file}: valid bounded lattice with {L.n} elements")
    print(f"bottom {L.names[L.bottom]}, top {L.names[L.top]}, distributive {'yes' if L.is_distributive() else 'no'}")


def cmd_analyze(args):
    doc, L = _load(args)
    a = _zero(args, doc, L)
    inc = L.incomparables(a)
    print(f"lattice {doc.name or args.file}")
    print(f"n {L.n}")
    print(f"bottom {L.names[L.bottom]}")
    print(f"top {L.names[L.top]}")
    print(f"zero {L.names[a]}")
    print(f"I_a {_labels(L, inc)}")
    print(f"distributive {'yes' if L.is_distributive() else 'no'}")
    if len(inc) != 2:
        print(f"conditions n/a (|I_a| = {len(inc)}, need 2)")
        return
    verdict = decide_existence(L, a)
    print(f"p = {verdict.p_label}, q = {verdict.q_label}")
    print("conditions:")
    _print_conditions(verdict)
    print(f"existence {_verdict_line(verdict)}")
    cls = classify_uniqueness(L, a)
    count = "" if cls.certified_count is None else f" (certified count {cls.certified_count})"
    print(f"uniqueness {cls.kind}{count}")
    variants = applicable_variants(L, a)
    print("applicable variants " + (", ".join(v.value for v in variants) or "none"))


def cmd_decide(args):
    doc, L = _load(args)
    verdict = decide_existence(L, _zero(args, doc, L))
    print(_verdict_line(verdict))
    print(f"p = {verdict.p_label}, q = {verdict.q_label}, a = {verdict.a_label}")
    _print_conditions(verdict)
    if not verdict.exists:
        raise Negative


def cmd_classify(args):
    doc, L = _load(args)
    cls = classify_uniqueness(L, _zero(args, doc, L))
    if cls.certified_count is None:
        print(f"{cls.kind} (no certified count)")
    else:
        names = ", ".join(v.value for v in cls.variants)
        print(f"{cls.kind} (certified count {cls.certified_count}: {names})")


def cmd_construct(args):
    doc, L = _load(args)
    try:
        table = construct_variant(L, _zero(args, doc, L), Variant.parse(args.variant))
    except PreconditionFailed as exc:
        print(f"PRECONDITION FAILED: {exc}")
        raise Negative from None
    _emit(args, emit_op_table_csv(table))


def cmd_verify(args):
    doc, L = _load(argparse.Namespace(file=args.lattice))
    a = _zero(args, doc, L)
    table = parse_op_table_csv(Path(args.file).read_text(encoding="utf-8"), L)
    ok, reports = is_idempotent_nullnorm(table, a)
    for r in reports:
        print(r)
    print(f"idempotent nullnorm with zero {L.names[a]}: {'yes' if ok else 'no'}")
    if not ok:
        raise Negative


def cmd_enumerate(args):
    doc, L = _load(args)
    a = _zero(args, doc, L)
    tables = enumerate_idempotent_nullnorms(L, a, SEARCH_SPACE[args.search_space], args.workers)
    print(f"count {len(tables)}")
    stem = doc.name or Path(args.file).stem
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, t in enumerate(tables, start=1):
            path = out / f"{stem}_{i}.csv"
            path.write_text(emit_op_table_csv(t), encoding="utf-8")
            print(f"wrote {path}")
    else:
        for i, t in enumerate(tables, start=1):
            print(f"# table {i}")
            sys.stdout.write(emit_op_table_csv(t))
    if not tables:
        raise Negative


def cmd_export_dot(args):
    doc, L = _load(args)
    _emit(args, emit_dot(L, doc.name or Path(args.file).stem))


def cmd_gen(args):
    L = random_bounded_lattice(args.seed, args.size)
    zeros = zeros_with_two_incomparables(L)
    doc = LatticeDocument(
        f"random_s{args.seed}_n{args.size}",
        L.cover_spec(),
        L.names[zeros[0]] if zeros else None,
    )
    _emit(args, format_lattice_file(doc))


def cmd_fuzz(args):
    space = SEARCH_SPACE[args.search_space]
    lattices = instances = positives = 0
    for L, zeros in corpus(args.seed, args.count, args.max_size):
        lattices += 1
        for a in zeros:
            instances += 1
            bad = cross_check(L, a, space)
            if bad is not None:
                print(f"DISCREPANCY after {instances} instances: theorem says "
                      f"{'EXISTS' if bad.predicted else 'NOT EXISTS'}, oracle found {len(bad.tables)}")
                doc = LatticeDocument("discrepancy", L.cover_spec(), L.names[a])
                sys.stdout.write(format_lattice_file(doc))
                for i, t in enumerate(bad.tables, start=1):
                    print(f"# oracle table {i}")
                    sys.stdout.write(emit_op_table_csv(t))
                raise Negative
            positives += bool(decide_existence(L, a).exists)
    print(f"lattices {lattices}, instances {instances}, exists {positives}, "
          f"not exists {instances - positives}, discrepancies 0")


def build_parser() -> argparse.ArgumentParser:
    def add_global(p, out, space):
        p.add_argument("--out", default=out, help="output file (or directory for enumerate)")
        p.add_argument("--search-space", choices=sorted(SEARCH_SPACE), default=space)

    # global flags are accepted before or after the subcommand; SUPPRESS keeps
    # the subcommand parser from overwriting a value given before it
    common = argparse.ArgumentParser(add_help=False)
    add_global(common, argparse.SUPPRESS, argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="latnull", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"latnull {__version__}")
    add_global(parser, None, "lemma")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True, zero=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if file:
            p.add_argument("file")
        if zero:
            p.add_argument("--zero", help="zero element label (overrides the file)")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check that a file describes a bounded lattice", zero=False)
    add("analyze", cmd_analyze, "print I_a, the four conditions and applicable variants")
    add("decide", cmd_decide, "decide existence of an idempotent nullnorm")
    add("classify", cmd_classify, "certified number of idempotent nullnorms")
    p = add("construct", cmd_construct, "write the CSV table of a construction")
    p.add_argument("--variant", required=True, help="v1 .. v6")
    p = add("verify", cmd_verify, "check the axioms on a CSV table")
    p.add_argument("--lattice", required=True, help="lattice file the table refers to")
    p = add("enumerate", cmd_enumerate, "list every idempotent nullnorm by exhaustive search")
    p.add_argument("--workers", type=int, default=1)
    add("export-dot", cmd_export_dot, "write the Hasse diagram as DOT", zero=False)
    p = add("gen", cmd_gen, "write a random lattice file", file=False, zero=False)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p = add("fuzz", cmd_fuzz, "cross-check the existence test against the oracle", file=False, zero=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-size", type=int, default=9)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        args.func(args)
    except Negative:
        return EXIT_NEGATIVE
    except INVALID_LATTICE as exc:
        print(f"INVALID: {exc}")
        return EXIT_NEGATIVE
    except (LatticeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end: ``gs4 <command> ...``.

Exit status is 0 on success, 1 when the input is rejected or a check fails,
and 2 on usage errors.  Failures are written to stderr as one
``CODE path=... detail=...`` record per line.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence, TextIO

from . import blgraph, namegraph
from .blg import (
    BlgProof,
    blg_from_derivation,
    blg_size,
    check_totality_poly,
    is_total,
    proof_from_json,
    proof_to_json,
    sequentialize,
)
from .derivation import Derivation, format_derivation, parse_derivation, validate
from .errors import GS4Error
from .figures import edges_of, fig2a, fig3a, fig4a, fig5_lower, fig5_upper
from .generate import random_logical_cut
from .normalize import normalize, pulcini_experiment, reduce_cut_logical
from .syntax import And, Or, parse_formula
from .transform import inv_and_l, inv_and_r, inv_or, isolate


class CheckFailed(GS4Error):
    code = "CHECK_FAILED"


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from None


def _derivation(path: str) -> Derivation:
    p = parse_derivation(_read(path))
    validate(p)
    return p


# ---------------------------------------------------------------------------
# commands


def cmd_check(args, out: TextIO) -> None:
    p = _derivation(args.file)
    print(f"ok {p.conclusion}", file=out)


def cmd_invert(args, out: TextIO) -> None:
    p = _derivation(args.file)
    target = parse_formula(args.target)
    if isinstance(target, Or):
        q = inv_or(p, target)
    elif isinstance(target, And):
        q = (inv_and_l if args.side == "left" else inv_and_r)(p, target)
    else:
        q = inv_or(p, target)  # raises the target error
    print(format_derivation(q), file=out)


def cmd_isolate(args, out: TextIO) -> None:
    p = _derivation(args.file)
    print(format_derivation(isolate(p, parse_formula(args.target))), file=out)


def cmd_graph(args, out: TextIO) -> None:
    p = _derivation(args.file)
    if args.semantics == "simple":
        if args.format == "fig5":
            raise UsageError("--format fig5 needs --semantics bl")
        g = namegraph.axiom_graph(p)
        text = namegraph.to_json(g) if args.format == "json" else namegraph.to_dot(g, p.conclusion)
    else:
        bg = blgraph.bl_axiom_graph(p)
        if args.format == "json":
            text = blgraph.to_json(bg)
        elif args.format == "dot":
            text = blgraph.to_dot(bg, p.conclusion)
        else:
            text = blgraph.to_fig5(bg, p.conclusion)
    print(text, file=out)


def cmd_normalize(args, out: TextIO) -> None:
    p = _derivation(args.file)
    q = normalize(p)
    if not args.no_verify and blgraph.bl_axiom_graph(q) != blgraph.bl_axiom_graph(p):
        raise CheckFailed("bl-axiom graph changed by normalization")
    print(format_derivation(q), file=out)


def cmd_blg_check(args, out: TextIO) -> None:
    proof = proof_from_json(_read(args.file))
    result = check_totality_poly(proof.graph, proof.sequent)
    if args.oracle and is_total(proof.graph, proof.sequent) != result.ok:
        raise CheckFailed(f"polynomial check says {result.ok}, enumeration disagrees")
    result.raise_for_error()
    print(f"ok steps={result.steps} size={blg_size(proof)}", file=out)


def cmd_blg_from_deriv(args, out: TextIO) -> None:
    print(proof_to_json(blg_from_derivation(_derivation(args.file))), file=out)


def cmd_blg_sequentialize(args, out: TextIO) -> None:
    print(format_derivation(sequentialize(proof_from_json(_read(args.file)))), file=out)


def _expect(got: frozenset, want: frozenset, what: str) -> None:
    if got != want:
        raise CheckFailed(f"{what}: got {_edges(got)} expected {_edges(want)}")


def _edges(edges) -> str:
    return str(namegraph.NameGraph(frozenset(v for e in edges for v in e), frozenset(edges)))


def _repro_isolation(p: Derivation, before: str, after: str, out: TextIO) -> None:
    target = next(f for f in p.conclusion.ordered() if not f.is_atomic)
    g0 = namegraph.axiom_graph(p).edges
    g1 = namegraph.axiom_graph(isolate(p, target)).edges
    print(f"simple axiom graph: {_edges(g0)}", file=out)
    print(f"after isolating {target}: {_edges(g1)}", file=out)
    _expect(g0, edges_of(before), "before isolation")
    _expect(g1, edges_of(after), "after isolation")


def repro_fig2(out: TextIO) -> None:
    _repro_isolation(fig2a(), "xy yz zw xw", "xy zw", out)


def repro_fig3(out: TextIO) -> None:
    _repro_isolation(fig3a(), "xt zu yt", "xt zu", out)


def repro_fig4(out: TextIO) -> None:
    p = fig4a()
    q = reduce_cut_logical(p, "left")
    b0, b1 = blgraph.bl_axiom_graph(p), blgraph.bl_axiom_graph(q)
    print(f"bl-axiom graph: {b0}", file=out)
    print(f"after the logical reduction: {b1}", file=out)
    s0, s1 = namegraph.axiom_graph(p).edges, namegraph.axiom_graph(q).edges
    print(f"simple axiom graph: {_edges(s0)} -> {_edges(s1)}", file=out)
    label = frozenset(v for e in edges_of("xy vw") for v in e)
    if b0.pairs != frozenset((e, label) for e in edges_of("xy vw")):
        raise CheckFailed(f"bl-axiom graph before reduction: {b0}")
    if b1.pairs != frozenset((e, label) for e in edges_of("xy")):
        raise CheckFailed(f"bl-axiom graph after reduction: {b1}")
    _expect(s1, s0, "simple graph under the reduction")


def repro_fig5(out: TextIO) -> None:
    for name, make in (("upper", fig5_upper), ("lower", fig5_lower)):
        g, gamma = make()
        result = check_totality_poly(g, gamma)
        result.raise_for_error()
        back = blgraph.bl_axiom_graph(sequentialize(BlgProof(g, gamma)))
        if back != g:
            raise CheckFailed(f"{name}: sequentialization changed the graph to {back}")
        print(f"{name} proof, size {blg_size(BlgProof(g, gamma))}:", file=out)
        print(blgraph.to_fig5(g, gamma), file=out)


REPRO: dict[str, Callable[[TextIO], None]] = {
    "fig2": repro_fig2,
    "fig3": repro_fig3,
    "fig4": repro_fig4,
    "fig5": repro_fig5,
}


def cmd_repro(args, out: TextIO) -> None:
    REPRO[args.figure](out)


def cmd_experiment(args, out: TextIO) -> None:
    if args.seeds < 0:
        raise UsageError("--seeds must be non-negative")
    report = pulcini_experiment(range(args.start, args.start + args.seeds), random_logical_cut)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report)
    else:
        out.write(report)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gs4", description="Named sequent calculus toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a derivation file")
    p.add_argument("file")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("invert", help="invert the rule introducing --target")
    p.add_argument("file")
    p.add_argument("--target", required=True)
    p.add_argument("--side", choices=("left", "right"), default="left", help="conjunct to keep")
    p.set_defaults(run=cmd_invert)

    p = sub.add_parser("isolate", help="make --target the last rule")
    p.add_argument("file")
    p.add_argument("--target", required=True)
    p.set_defaults(run=cmd_isolate)

    p = sub.add_parser("graph", help="print an axiom graph")
    p.add_argument("file")
    p.add_argument("--semantics", choices=("simple", "bl"), default="simple")
    p.add_argument("--format", choices=("json", "dot", "fig5"), default="json")
    p.set_defaults(run=cmd_graph)

    p = sub.add_parser("normalize", help="eliminate all cuts")
    p.add_argument("file")
    p.add_argument("--no-verify", action="store_true", help="skip the graph equality check")
    p.set_defaults(run=cmd_normalize)

    blg = sub.add_parser("blg", help="BLG proof objects").add_subparsers(dest="blg_command", required=True)
    p = blg.add_parser("check", help="polynomial totality check")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="cross-check by branch enumeration")
    p.set_defaults(run=cmd_blg_check)
    p = blg.add_parser("from-deriv", help="BLG proof of a derivation")
    p.add_argument("file")
    p.set_defaults(run=cmd_blg_from_deriv)
    p = blg.add_parser("sequentialize", help="cut-free derivation of a BLG proof")
    p.add_argument("file")
    p.set_defaults(run=cmd_blg_sequentialize)

    p = sub.add_parser("repro", help="rebuild a worked figure and check it")
    p.add_argument("figure", choices=sorted(REPRO))
    p.set_defaults(run=cmd_repro)

    p = sub.add_parser("experiment", help="run an experiment and print a CSV report")
    p.add_argument("name", choices=("pulcini",))
    p.add_argument("--seeds", type=int, default=200)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(run=cmd_experiment)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    try:
        args.run(args, out)
    except UsageError as exc:
        print(f"USAGE path= detail={exc}", file=err)
        return 2
    except GS4Error as exc:
        print(exc.record(), file=err)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

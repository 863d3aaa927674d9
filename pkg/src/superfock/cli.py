"""Command-line front end with deterministic text/JSON reports.

Subcommands:
  roots                 print the root system of osp(M/N)
  verify-homomorphism   generator relations, the adjoint identification,
                        the homomorphism sweep and the lowering-table match
  primitive             build a primitive vector, report weight and kills
  classify check        verdict for one weight (lowest or highest side)
  classify enumerate    scan all bounded integer lowest weights
  descent               the odd-root ladder check for one weight

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
configuration error.  JSON output is byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .classify import (ClassifyPrecondition, classify_weight,
                       enumerate_unitary_lowest_weights, verify_descent)
from .fock import check_size_guard
from .operators import weight_of_vector
from .osp import SuperDim, Weight, root_system
from .primitive import (InvalidPrimitiveParams, PrimitiveParams,
                        build_primitive, check_primitive, predicted_weight)
from .realization import (ad_identification_report, verify_cw_relations,
                          verify_homomorphism, verify_root_operators)

SCHEMA = "superfock/1"
MAX_DEGREE_CAP = 6


@dataclass
class RunConfig:
    command: str
    dim: SuperDim | None = None
    L: int = 0
    max_degree: int = 4
    fmt: str = "text"


def _dim_from_args(args) -> SuperDim:
    return SuperDim(args.m, args.n, args.odd)


def _add_dim_flags(p: argparse.ArgumentParser):
    p.add_argument("-m", type=int, required=True, help="sp rank (M = 2m)")
    p.add_argument("-n", type=int, required=True, help="so rank (N = 2n or 2n+1)")
    parity = p.add_mutually_exclusive_group()
    parity.add_argument("--odd", action="store_true", help="N = 2n+1")
    parity.add_argument("--even", dest="odd", action="store_false", help="N = 2n")
    p.set_defaults(odd=False)


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json"), default="text")


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def _emit(report: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="superfock")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="print the root system")
    _add_dim_flags(p)
    _add_common(p)

    p = sub.add_parser("verify-homomorphism",
                       help="run the realization verification sweeps")
    _add_dim_flags(p)
    p.add_argument("-L", type=int, default=1, help="number of Fock copies")
    p.add_argument("-D", type=int, default=4,
                   help=f"polynomial degree bound (max {MAX_DEGREE_CAP})")
    _add_common(p)

    p = sub.add_parser("primitive", help="build and check a primitive vector")
    _add_dim_flags(p)
    p.add_argument("-L", type=int, required=True)
    p.add_argument("--i", type=_int_list, default=(),
                   help="comma-separated exponents i_1..i_m (default zeros)")
    p.add_argument("--j", type=_int_list, default=(),
                   help="comma-separated counts j_1..j_n (default zeros)")
    p.add_argument("--check", action="store_true",
                   help="also run the negative-root annihilation sweep")
    _add_common(p)

    p = sub.add_parser("classify", help="lowest/highest weight classification")
    csub = p.add_subparsers(dest="classify_command", required=True)

    pc = csub.add_parser("check", help="verdict for one weight")
    pc.add_argument("weight", help='coordinate expression, e.g. "1,2;0,0"')
    pc.add_argument("--odd", action="store_true", help="N = 2n+1")
    pc.add_argument("--highest", action="store_true")
    _add_common(pc)

    pe = csub.add_parser("enumerate", help="scan bounded integer lowest weights")
    _add_dim_flags(pe)
    pe.add_argument("--bound", type=int, required=True)
    pe.add_argument("--construct", action="store_true",
                    help="round-trip every constructible weight")
    _add_common(pe)

    p = sub.add_parser("descent", help="odd-root ladder check for one weight")
    p.add_argument("weight")
    p.add_argument("--odd", action="store_true", help="N = 2n+1")
    p.add_argument("-k", type=int, required=True)
    _add_common(p)

    return top


def _cmd_roots(args) -> int:
    dim = _dim_from_args(args)
    roots = root_system(dim)
    report = {
        "schema": SCHEMA,
        "command": "roots",
        "dim": {"m": dim.m, "n": dim.n, "odd": dim.odd},
        "roots": [{"root": str(r), "class": r.cls,
                   "positive": sum(r.e) + sum(r.f) > 0 or
                   next((x for x in r.e + r.f if x), 0) > 0}
                  for r in roots],
    }
    lines = [f"root system of {dim} ({len(roots)} roots)"]
    lines += [f"  {str(r):10s} {r.cls}" for r in roots]
    _emit(report, args.format, lines)
    return 0


def _cmd_verify(args) -> int:
    if args.D > MAX_DEGREE_CAP:
        print(f"degree bound above {MAX_DEGREE_CAP} rejected", file=sys.stderr)
        return 2
    dim = _dim_from_args(args)
    try:
        check_size_guard(dim, args.L)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return 2
    relations = verify_cw_relations(dim, args.L, args.D)
    ad = ad_identification_report(dim)
    hom = verify_homomorphism(dim, args.L, args.D)
    table = verify_root_operators(dim, args.L, args.D)
    ok = relations["ok"] and ad["ok"] and hom["ok"] and table["ok"]
    report = {
        "schema": SCHEMA,
        "command": "verify-homomorphism",
        "dim": {"m": dim.m, "n": dim.n, "odd": dim.odd},
        "L": args.L,
        "max_degree": args.D,
        "generator_relations": relations,
        "ad_identification": ad,
        "homomorphism": hom,
        "lowering_table": table,
        "ok": ok,
    }
    lines = [
        f"{dim}, L={args.L}, degree <= {args.D}",
        f"  generator relations: {relations['pairs_checked']} pairs, "
        f"{'ok' if relations['ok'] else 'FAILED ' + str(relations['failures'])}",
        f"  adjoint identification: {ad['pairs']} quadratic pairs, "
        f"{'bijective onto osp' if ad['ok'] else 'FAILED'}",
        f"  homomorphism: {hom['pairs_checked']} bracket pairs, "
        f"{'ok' if hom['ok'] else 'FAILED ' + str(hom['failures'])}",
        f"  lowering table: "
        f"{'all roots proportional' if table['ok'] else 'FAILED ' + str(table['failures'])}",
    ]
    _emit(report, args.format, lines)
    return 0 if ok else 1


def _cmd_primitive(args) -> int:
    dim = _dim_from_args(args)
    i = args.i or (0,) * dim.m
    j = args.j or (0,) * dim.n
    try:
        params = PrimitiveParams(args.L, i, j)
        params.validate(dim)
        check_size_guard(dim, args.L)
    except (InvalidPrimitiveParams, ValueError) as exc:
        print(exc, file=sys.stderr)
        return 2
    vec = build_primitive(params, dim)
    predicted = predicted_weight(params, dim)
    measured = weight_of_vector(vec)
    report = {
        "schema": SCHEMA,
        "command": "primitive",
        "dim": {"m": dim.m, "n": dim.n, "odd": dim.odd},
        "params": params.to_json(),
        "terms": vec.term_count(),
        "weight": measured.to_json(),
        "predicted_weight": predicted.to_json(),
        "weights_match": measured == predicted,
    }
    lines = [
        f"primitive vector in {dim}, {params}",
        f"  terms: {vec.term_count()}",
        f"  weight: {measured} (predicted {predicted})",
    ]
    ok = measured == predicted
    if args.check:
        primitivity = check_primitive(vec)
        report["primitivity"] = primitivity.to_json()
        killed = sum(1 for c in primitivity.checks if c.killed)
        lines.append(f"  negative roots killed: {killed}/{len(primitivity.checks)}")
        for c in primitivity.checks:
            if not c.killed:
                lines.append(f"  SURVIVES {c.root} ({c.image_terms} terms): "
                             "primitivity fails")
        ok = ok and primitivity.ok
    _emit(report, args.format, lines)
    return 0 if ok else 1


def _parse_weight_arg(text: str, odd: bool) -> tuple[Weight, SuperDim]:
    w = Weight.parse(text)
    return w, SuperDim(len(w.lam), len(w.mu), odd)


def _cmd_classify_check(args) -> int:
    try:
        w, dim = _parse_weight_arg(args.weight, args.odd)
        verdict = classify_weight(w, dim, "highest" if args.highest else "lowest")
    except (ClassifyPrecondition, ValueError) as exc:
        print(exc, file=sys.stderr)
        return 2
    report = {"schema": SCHEMA, "command": "classify-check",
              "verdict": verdict.to_json()}
    lines = [
        f"weight {w} of {dim}, {verdict.side} side",
        f"  dominance: {'ok' if verdict.dominance_ok else 'FAILED'}",
        f"  defect bound (lambda_1+mu_1 >= {verdict.d}): "
        f"{'ok' if verdict.defect_ok else 'FAILED'}",
        f"  necessary band: {'ok' if verdict.band_ok else 'violated'}",
        f"  integrable: {verdict.integrable}",
        f"  constructible: {verdict.constructible}"
        + (f" via {verdict.params}" if verdict.params else ""),
    ]
    _emit(report, args.format, lines)
    return 0 if verdict.passes else 1


def _cmd_classify_enumerate(args) -> int:
    dim = _dim_from_args(args)
    try:
        verdicts = enumerate_unitary_lowest_weights(dim, args.bound,
                                                    construct=args.construct)
    except (ClassifyPrecondition, ValueError, AssertionError) as exc:
        print(exc, file=sys.stderr)
        return 2 if isinstance(exc, ClassifyPrecondition) else 1
    report = {
        "schema": SCHEMA,
        "command": "classify-enumerate",
        "dim": {"m": dim.m, "n": dim.n, "odd": dim.odd},
        "bound": args.bound,
        "constructed": args.construct,
        "count": len(verdicts),
        "verdicts": [v.to_json() for v in verdicts],
    }
    lines = [f"{len(verdicts)} integrable super unitary lowest weights "
             f"of {dim} with entries bounded by {args.bound}"]
    for v in verdicts:
        tag = "constructed" if (v.constructible and args.construct) else (
            "constructible" if v.constructible else "not constructed here")
        lines.append(f"  {str(v.weight):20s} {tag}")
    _emit(report, args.format, lines)
    return 0


def _cmd_descent(args) -> int:
    try:
        w, dim = _parse_weight_arg(args.weight, args.odd)
        result = verify_descent(w, dim, args.k)
    except (ClassifyPrecondition, ValueError) as exc:
        print(exc, file=sys.stderr)
        return 2
    report = {"schema": SCHEMA, "command": "descent", "report": result.to_json()}
    lines = [
        f"descent ladder for {w}, k={args.k}",
        f"  v_k nonzero: {result.ladder_nonzero}",
        f"  descended vector nonzero: {result.descended_nonzero}",
        f"  scalar: {result.product}",
        f"  descended == scalar * v_0: {result.scalar_matches}",
        f"  v_k primitive for the even part: {result.even_primitive}",
    ]
    _emit(report, args.format, lines)
    return 0 if result.ok else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "roots":
        return _cmd_roots(args)
    if args.command == "verify-homomorphism":
        return _cmd_verify(args)
    if args.command == "primitive":
        return _cmd_primitive(args)
    if args.command == "classify":
        if args.classify_command == "check":
            return _cmd_classify_check(args)
        return _cmd_classify_enumerate(args)
    if args.command == "descent":
        return _cmd_descent(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())

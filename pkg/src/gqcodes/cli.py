"""Command-line front end.

Exit status: 0 on success, 1 for parse errors and violated preconditions,
2 when exhaustive enumeration would exceed the budget (``GQC_ENUM_BUDGET``).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import jensen_bound_gqc
from .codespec import CodeSpecError, field_from_spec, load, parse, serialize
from .construct import Params, juxtapose, predicted_params
from .cyclic import residue_field
from .duality import dual_gqc, is_lcd, is_self_dual
from .gf import FieldError
from .gqc import ConstituentSet, CRTUnavailable, decompose, reconstruct, trace_words
from .lincode import DistanceBudgetError, LinearCode, min_distance_bruteforce
from .polyring import Poly, factor_xm_minus_1, format_poly
from .tabulate import tabulate


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _field_args(args):
    modulus = _ints(args.modulus) if getattr(args, "modulus", None) else None
    return field_from_spec(args.q, modulus)


def cmd_factor(args) -> None:
    F = _field_args(args)
    fact = factor_xm_minus_1(F, args.m)
    _emit({
        "q": F.order,
        "m": args.m,
        "factors": [
            {"poly": format_poly(f.coeffs), "coeffs": list(f.coeffs), "degree": f.degree, "coset": list(c)}
            for f, c in zip(fact.factors, fact.cosets)
        ],
    })


def constituents_to_dict(S: ConstituentSet) -> dict:
    F = S.field
    out = {"q": F.order, "blocks": list(S.blocks), "constituents": []}
    if not F.is_prime:
        out["modulus"] = list(F.modulus)
    for f, mask, code in zip(S.factors, S.masks, S.codes):
        out["constituents"].append({
            "factor": list(f.coeffs),
            "poly": format_poly(f.coeffs),
            "field_order": residue_field(f).order,
            "mask": [int(b) for b in mask],
            "dim": code.k,
            "basis": [list(r) for r in code.basis],
        })
    return out


def constituents_from_dict(d: dict) -> ConstituentSet:
    F = field_from_spec(int(d["q"]), d.get("modulus"))
    blocks = tuple(d["blocks"])
    factors, codes, masks = [], [], []
    for c in d["constituents"]:
        f = Poly(F, c["factor"])
        E = residue_field(f)
        factors.append(f)
        masks.append(tuple(bool(b) for b in c["mask"]))
        codes.append(LinearCode(E, len(blocks), c["basis"]))
    return ConstituentSet(F, blocks, tuple(factors), tuple(codes), tuple(masks))


def cmd_decompose(args) -> None:
    code = load(args.file) if args.file else _inline_code(args)
    _emit(constituents_to_dict(decompose(code)))


def _inline_code(args):
    if args.q is None or args.blocks is None:
        raise CodeSpecError(None, "give a code-spec file or --q and --blocks")
    lines = [f"q={args.q}", f"blocks={args.blocks}"]
    if args.modulus:
        lines.append(f"modulus={args.modulus}")
    lines += [f"gen={g}" for g in args.gen or []]
    return parse("\n".join(lines))


def cmd_reconstruct(args) -> None:
    with open(args.file) as fh:
        S = constituents_from_dict(json.load(fh))
    sys.stdout.write(serialize(reconstruct(S)))


def cmd_trace(args) -> None:
    code = load(args.file)
    words = trace_words(decompose(code))
    span = LinearCode(code.field, code.n, words)
    _emit({"codewords": words, "span_dim": span.k, "span_equals_code": span == code.linear})


def cmd_distance(args) -> None:
    code = load(args.file)
    L = code.linear
    _emit({"n": L.n, "k": L.k, "d": min_distance_bruteforce(L, workers=args.workers) if L.k else None})


def cmd_bound(args) -> None:
    report = jensen_bound_gqc(load(args.file), with_true_distance=not args.no_distance)
    _emit(report.as_dict())


def cmd_dual(args) -> None:
    code = load(args.file)
    method = args.method
    if method == "auto":
        method = "constituent" if code.is_coprime() else "direct"
    sys.stdout.write(serialize(dual_gqc(code, method=method)))


def cmd_check(args) -> None:
    code = load(args.file)
    out = {}
    if args.lcd or not args.self_dual:
        out["lcd"] = is_lcd(code, method=args.method).as_dict()
    if args.self_dual or not args.lcd:
        out["self_dual"] = is_self_dual(code, method=args.method).as_dict()
    _emit(out)


def cmd_juxtapose(args) -> None:
    codes = [load(f) for f in args.files]
    E = juxtapose(codes)
    if args.report:
        parts = [Params.of(c) for c in codes]
        _emit({
            "blocks": list(E.blocks),
            "params": Params.of(E).__dict__,
            "predicted": predicted_params(parts).__dict__,
            "lcd": E.linear.is_lcd(),
            "spec": serialize(E),
        })
    else:
        sys.stdout.write(serialize(E))


def cmd_tabulate(args) -> None:
    F = _field_args(args)
    blocks = _ints(args.blocks) if args.blocks else []
    n = tabulate(args.out, F, blocks, max_gens=args.max_gens, max_codes=args.max_codes, max_ell=args.max_ell)
    sys.stderr.write(f"{n} rows in {args.out}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gqc", description="Generalized quasi-cyclic code toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor x^m - 1 over F_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--modulus", help="F_q modulus over F_p for non-prime q")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("decompose", help="CRT constituents of a code")
    p.add_argument("file", nargs="?")
    p.add_argument("--q", type=int)
    p.add_argument("--blocks")
    p.add_argument("--modulus")
    p.add_argument("--gen", action="append", help="generator in code-spec syntax (repeatable)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("reconstruct", help="code-spec from decompose's JSON output")
    p.add_argument("file")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("trace", help="trace-representation codewords spanning the code")
    p.add_argument("file")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("distance", help="exhaustive minimum distance")
    p.add_argument("file")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("bound", help="Jensen-type distance bound")
    p.add_argument("file")
    p.add_argument("--no-distance", action="store_true", help="skip the brute-force comparison")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("dual", help="Euclidean dual as a code-spec")
    p.add_argument("file")
    p.add_argument("--method", choices=["auto", "constituent", "direct"], default="auto")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("check", help="LCD / self-dual verdicts")
    p.add_argument("file")
    p.add_argument("--lcd", action="store_true")
    p.add_argument("--self-dual", action="store_true")
    p.add_argument("--method", choices=["auto", "constituent", "direct", "both"], default="auto")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("juxtapose", help="side-by-side code [C_1|...|C_a]")
    p.add_argument("files", nargs="+")
    p.add_argument("--report", action="store_true", help="JSON with parameters and LCD verdict")
    p.set_defaults(func=cmd_juxtapose)

    p = sub.add_parser("tabulate", help="CSV of small GQC codes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--modulus")
    p.add_argument("--blocks", default="", help="block-length set, e.g. 3,5,7")
    p.add_argument("--max-gens", type=int, default=1)
    p.add_argument("--max-codes", type=int, default=32, help="distinct codes per block tuple")
    p.add_argument("--max-ell", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_tabulate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DistanceBudgetError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except (CodeSpecError, CRTUnavailable, FieldError, ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line surface: generation, ring arithmetic, ideal tooling,
element classification, chain reports, and the verification suite.

Identical arguments (and seed) always produce byte-identical output; the
DIRICHLET_N environment variable overrides the default window length.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import seqfile, verify, zoo
from .config import DEFAULT_SEED, FORMATS, MODES, default_window
from .ideals import (
    CHAIN_FAMILIES,
    IdealSpec,
    chain,
    decompose_coprime_vanishing,
    member,
    principal_quotient,
    probe_prime,
)
from .ring import EXACT, FLOAT, ArithFunc, NotDivisibleWitness, try_divide
from .structure import classify

USAGE_ERROR = 2
COMPUTE_ERROR = 1
VERIFY_FAILURE = 3


def parse_ideal_spec(text: str) -> IdealSpec:
    """Parse a compact spec string.

    Grammar: ``maximal`` | ``I:n`` | ``K:n`` | ``P:m`` | ``P:m,k`` |
    ``J:p1,p2,...`` (allow mode) | ``J:~p1,p2,...`` (complement mode).
    """
    text = text.strip()
    if text == "maximal":
        return IdealSpec.maximal()
    if ":" not in text:
        raise ValueError(f"cannot parse ideal spec {text!r}")
    tag, _, body = text.partition(":")
    tag = tag.strip().upper()
    if tag == "I":
        return IdealSpec.norm_floor(int(body))
    if tag == "K":
        return IdealSpec.prime_tail(int(body))
    if tag == "P":
        parts = [int(x) for x in body.split(",")]
        if len(parts) == 1:
            return IdealSpec.coprime_vanishing(parts[0])
        if len(parts) == 2:
            return IdealSpec.gcd_count(parts[0], parts[1])
        raise ValueError("P takes one parameter (P:m) or two (P:m,k)")
    if tag == "J":
        body = body.strip()
        complement = body.startswith("~")
        if complement:
            body = body[1:]
        primes = tuple(int(x) for x in body.split(","))
        return IdealSpec.prime_products(primes, complement=complement)
    raise ValueError(f"unknown ideal family {tag!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_sequence(f: ArithFunc, name: str, fmt: str, out: str | None) -> None:
    _emit(seqfile.render(f, fmt, name), out)


def _emit_mapping(obj: dict, fmt: str, out: str | None) -> None:
    if fmt == "json":
        _emit(json.dumps(obj, indent=2) + "\n", out)
    elif fmt == "csv":
        row = ",".join(f"{k}={v}" for k, v in obj.items())
        _emit(row + "\n", out)
    else:
        width = max(len(str(k)) for k in obj)
        lines = [f"{k:<{width}}  {v}" for k, v in obj.items()]
        _emit("\n".join(lines) + "\n", out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirichlet",
        description="Exact arithmetic in the ring of arithmetical functions "
        "under Dirichlet convolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, window=True, fmt=True):
        if window:
            p.add_argument("--n", type=int, default=None, help="window length")
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="json")
            p.add_argument("--out", default=None, help="write output to a file")

    p_gen = sub.add_parser("gen", help="generate a named arithmetical function")
    p_gen.add_argument("tag", choices=zoo.FUNCTION_TAGS)
    p_gen.add_argument("--param", type=int, default=None,
                       help="parameter for delta (the support point) or "
                            "p_adic_valuation (the prime)")
    p_gen.add_argument("--mode", choices=MODES, default=None,
                       help="request a scalar mode (exact functions can be "
                            "converted to float, not the reverse)")
    p_gen.add_argument("--name", default=None, help="name stored in the output")
    add_common(p_gen)

    p_conv = sub.add_parser("conv", help="Dirichlet convolution of two sequence files")
    p_conv.add_argument("left")
    p_conv.add_argument("right")
    add_common(p_conv, window=False)

    p_inv = sub.add_parser("inv", help="convolution inverse of a sequence file")
    p_inv.add_argument("file")
    add_common(p_inv, window=False)

    p_norm = sub.add_parser("norm", help="least index with a nonzero value")
    p_norm.add_argument("file")
    add_common(p_norm, window=False)

    p_div = sub.add_parser("divide", help="exact division: divide H by F on the window")
    p_div.add_argument("dividend")
    p_div.add_argument("divisor")
    add_common(p_div, window=False)

    p_cls = sub.add_parser("classify", help="unit/maximal status, norm, atom certificate")
    p_cls.add_argument("file")
    add_common(p_cls, window=False)

    p_ideal = sub.add_parser("ideal", help="ideal-family tooling")
    ideal_sub = p_ideal.add_subparsers(dest="ideal_command", required=True)

    p_member = ideal_sub.add_parser("member", help="membership oracle")
    p_member.add_argument("spec", help="e.g. P:6, P:6,1, I:5, K:3, J:2,3, J:~2,3, maximal")
    p_member.add_argument("file")
    add_common(p_member, window=False)

    p_quot = ideal_sub.add_parser("quotient", help="quotient by the indicator at a prime")
    p_quot.add_argument("prime", type=int)
    p_quot.add_argument("file")
    add_common(p_quot, window=False)

    p_dec = ideal_sub.add_parser("decompose", help="split a member of P_m over its generators")
    p_dec.add_argument("modulus", type=int)
    p_dec.add_argument("file")
    add_common(p_dec, window=False)

    p_chain = ideal_sub.add_parser("chain", help="build a chain with separator witnesses")
    p_chain.add_argument("family", choices=CHAIN_FAMILIES)
    p_chain.add_argument("--length", type=int, default=4)
    p_chain.add_argument("--dot", action="store_true", help="emit a DOT digraph")
    add_common(p_chain)

    p_probe = ideal_sub.add_parser("probe", help="randomized primality refutation search")
    p_probe.add_argument("spec")
    p_probe.add_argument("--trials", type=int, default=100)
    p_probe.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_common(p_probe)

    p_top_chain = sub.add_parser("chain", help="alias for 'ideal chain'")
    p_top_chain.add_argument("family", choices=CHAIN_FAMILIES)
    p_top_chain.add_argument("--length", type=int, default=4)
    p_top_chain.add_argument("--dot", action="store_true")
    add_common(p_top_chain)

    p_verify = sub.add_parser(
        "verify-paper",
        help="run the full property-verification suite and print a report",
    )
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--out", default=None)

    return parser


# command bodies ------------------------------------------------------------


def _window(args) -> int:
    return args.n if getattr(args, "n", None) else default_window()


def _cmd_gen(args) -> int:
    f = zoo.generate(args.tag, _window(args), args.param)
    if args.mode == FLOAT and f.mode == EXACT:
        f = f.to_float()
    elif args.mode == EXACT and f.mode == FLOAT:
        raise ValueError(f"{args.tag} has irrational values; exact mode is impossible")
    name = args.name or (
        args.tag if args.param is None else f"{args.tag}({args.param})"
    )
    _emit_sequence(f, name, args.format, args.out)
    return 0


def _cmd_conv(args) -> int:
    name_a, a = seqfile.load(args.left)
    name_b, b = seqfile.load(args.right)
    _emit_sequence(a.convolve(b), f"{name_a}*{name_b}", args.format, args.out)
    return 0


def _cmd_inv(args) -> int:
    name, f = seqfile.load(args.file)
    _emit_sequence(f.invert(), f"{name}^-1", args.format, args.out)
    return 0


def _cmd_norm(args) -> int:
    _, f = seqfile.load(args.file)
    value = f.norm()
    if args.format == "json":
        _emit(json.dumps({"norm": value}) + "\n", args.out)
    else:
        _emit(("zero-function" if value is None else str(value)) + "\n", args.out)
    return 0


def _cmd_divide(args) -> int:
    name_h, h = seqfile.load(args.dividend)
    name_f, f = seqfile.load(args.divisor)
    result = try_divide(h, f)
    if isinstance(result, NotDivisibleWitness):
        _emit_mapping(
            {"divisible": False, "index": result.index, "note": result.note},
            args.format,
            args.out,
        )
    else:
        _emit_sequence(result, f"{name_h}/{name_f}", args.format, args.out)
    return 0


def _cmd_classify(args) -> int:
    _, f = seqfile.load(args.file)
    _emit_mapping(classify(f).to_dict(), args.format, args.out)
    return 0


def _cmd_ideal_member(args) -> int:
    spec = parse_ideal_spec(args.spec)
    _, f = seqfile.load(args.file)
    _emit_mapping(member(spec, f).to_dict(), args.format, args.out)
    return 0


def _cmd_ideal_quotient(args) -> int:
    name, f = seqfile.load(args.file)
    g = principal_quotient(args.prime, f)
    _emit_sequence(g, f"{name}/delta_{args.prime}", args.format, args.out)
    return 0


def _cmd_ideal_decompose(args) -> int:
    name, f = seqfile.load(args.file)
    dec = decompose_coprime_vanishing(args.modulus, f)
    obj = {
        "name": name,
        "m": dec.m,
        "generator_points": list(dec.generator_points),
        "cofactors": [
            seqfile.to_json_obj(g, f"cofactor_delta_{q}")
            for q, g in zip(dec.generator_points, dec.cofactors)
        ],
        "reconstruction_matches": dec.reconstruction() == f,
    }
    if args.format == "json":
        _emit(json.dumps(obj, indent=2) + "\n", args.out)
    else:
        lines = [f"m = {dec.m}", f"generators at {list(dec.generator_points)}"]
        lines.append(f"reconstruction matches: {obj['reconstruction_matches']}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_chain(args) -> int:
    report = chain(args.family, args.length, _window(args))
    if args.dot:
        _emit(report.to_dot() + "\n", args.out)
        return 0
    if args.format == "json":
        obj = {
            "family": report.family,
            "specs": [s.label() for s in report.specs],
            "links": [
                {
                    "smaller": link.smaller.label(),
                    "larger": link.larger.label(),
                    "separator": link.separator_label,
                }
                for link in report.links
            ],
        }
        _emit(json.dumps(obj, indent=2) + "\n", args.out)
    else:
        lines = [f"family: {report.family}"]
        for link in report.links:
            lines.append(
                f"{link.smaller.label()} < {link.larger.label()}"
                f"  (separator {link.separator_label})"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_ideal_probe(args) -> int:
    spec = parse_ideal_spec(args.spec)
    verdict = probe_prime(spec, args.trials, args.seed, _window(args))
    obj = verdict.to_dict()
    if args.format == "json":
        if verdict.elements:
            obj["witness_pair"] = [
                seqfile.to_json_obj(f, f"witness_{i}")
                for i, f in enumerate(verdict.elements)
            ]
        _emit(json.dumps(obj, indent=2) + "\n", args.out)
    else:
        _emit_mapping(obj, args.format, args.out)
    return 0


def _cmd_verify(args) -> int:
    n = args.n if args.n else default_window()
    results = verify.run_all(n, args.seed)
    _emit(verify.render_report(results, n, args.seed), args.out)
    return 0 if all(r.passed for r in results) else VERIFY_FAILURE


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "conv":
            return _cmd_conv(args)
        if args.command == "inv":
            return _cmd_inv(args)
        if args.command == "norm":
            return _cmd_norm(args)
        if args.command == "divide":
            return _cmd_divide(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "chain":
            return _cmd_chain(args)
        if args.command == "verify-paper":
            return _cmd_verify(args)
        if args.command == "ideal":
            if args.ideal_command == "member":
                return _cmd_ideal_member(args)
            if args.ideal_command == "quotient":
                return _cmd_ideal_quotient(args)
            if args.ideal_command == "decompose":
                return _cmd_ideal_decompose(args)
            if args.ideal_command == "chain":
                return _cmd_chain(args)
            if args.ideal_command == "probe":
                return _cmd_ideal_probe(args)
        raise ValueError(f"unhandled command {args.command!r}")
    except (ValueError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return COMPUTE_ERROR


if __name__ == "__main__":
    sys.exit(main())

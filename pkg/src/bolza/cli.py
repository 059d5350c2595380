"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n\n{self.format_usage()}")


def _jsonable(obj):
    from decimal import Decimal
    from fractions import Fraction

    import numpy as np

    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, (Fraction, Decimal)):
        return str(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    return str(obj)


def _emit(data, fmt: str, text=None) -> None:
    if fmt == "json":
        print(json.dumps(data, default=_jsonable, indent=2, sort_keys=True))
    elif text is not None:
        print(text)
    else:
        for k, v in data.items():
            print(f"{k}: {v if not isinstance(v, (dict, list)) else json.dumps(v, default=_jsonable)}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify(args) -> int:
    from . import verify

    results = verify.run_suite(args.suite)
    ok = all(r.passed for r in results)
    if args.format == "json":
        data = {"suite": args.suite, "passed": ok, "criteria": [r.to_json() for r in results]}
        if not args.timings:
            for c in data["criteria"]:
                c.pop("seconds")
                c["checks"] = [x for x in c["checks"] if not x["timing"]]
        _emit(data, "json")
    else:
        for r in results:
            print(r.line())
            if args.verbose:
                for c in r.checks:
                    if args.timings or not c.timing:
                        print(f"    {'ok  ' if c.passed else 'FAIL'} {c.name}" + (f"  [{c.detail}]" if c.detail else ""))
                for n in r.notes:
                    print(f"    note: {n}")
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_factor(args) -> int:
    from .quadratic import ZSqrt2, factor, factor_prime

    text = args.value.strip()
    if text.lstrip("-").isdigit() and int(text) >= 2:
        rep = factor_prime(int(text)) if _is_prime(int(text)) else None
        if rep is not None:
            data = {"p": rep.p, "kind": rep.kind, "primes": [str(g) for g in rep.primes]}
            for I in rep.ideals:
                if rep.kind == "split":
                    data.setdefault("sqrt2_images", {})[str(I)] = I.sqrt2_image
            _emit(data, args.format)
            return EXIT_OK
    x = ZSqrt2.parse(text)
    unit, parts = factor(x)
    data = {"value": str(x), "norm": x.norm(), "unit": str(unit), "factors": [[str(g), e] for g, e in parts]}
    _emit(data, args.format)
    return EXIT_OK


def _is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


def cmd_eval(args) -> int:
    from . import order as bo
    from .words import REGISTRY, Word, eval_word

    if args.named:
        obj = bo.named(args.named)
        elem = eval_word(obj) if isinstance(obj, Word) else obj
        label = args.named
    elif args.word is not None:
        w = Word.parse(args.word)
        elem = eval_word(w)
        label = str(w)
    else:
        raise UsageError("eval needs --word or --named")
    data = {"input": label, "element": elem.to_json() if hasattr(elem, "to_json") else str(elem), "text": str(elem)}
    if args.trace:
        t, n = elem.trace(), elem.norm()
        data.update({"trace": t.to_json(), "trace_text": str(t), "norm": n.to_json(), "norm_text": str(n)})
    if args.named in REGISTRY:
        e = REGISTRY[args.named]
        data["registry"] = {"ideal": None if e.ideal is None else str(e.ideal), "sign": e.sign, "checksum": e.checksum}
    _emit(data, args.format)
    return EXIT_OK


def cmd_disc(args) -> int:
    from . import order as bo
    from .quaternion import order_discriminant

    names = list(bo.ORDERS) if args.order == "all" else [args.order]
    data = {}
    for name in names:
        if name not in bo.ORDERS:
            raise UsageError(f"unknown order {name!r}; choose from {', '.join(bo.ORDERS)} or all")
        data[name] = str(order_discriminant(bo.ORDERS[name]))
    _emit(data, args.format)
    return EXIT_OK


def cmd_quotient(args) -> int:
    from . import quotients as qt

    if args.tilde:
        _emit(qt.tilde_ring_report(), args.format)
        return EXIT_OK
    rep = qt.unit_filtration()
    if args.dot:
        print(rep.diagram)
        return EXIT_OK
    data = rep.to_json()
    if args.bolza:
        data["bolza"] = qt.bolza_position()
    _emit(data, args.format)
    return EXIT_OK


def cmd_cover(args) -> int:
    from . import cosets, modp

    if args.ideal:
        spec = modp.split_rep(args.ideal)
        rep = cosets.cover_report(spec, with_generators=args.schreier)
        data = rep.to_json()
        data["ideal"] = str(spec.ideal)
        data["representation"] = spec.to_json()
        if not args.schreier:
            data.pop("schreier_generators")
        if args.scan_budget:
            scan = cosets.min_trace_scan(spec, max_len=args.scan_budget)
            data["scan"] = scan
            if scan["abs_trace"] is not None and (rep.min_trace is None or scan["abs_trace"] < abs(rep.min_trace)):
                data.update(
                    min_trace=str(scan["min_trace"]), min_trace_decimal=scan["decimal"], min_trace_word=scan["word"]
                )
        _emit(data, args.format)
        return EXIT_OK
    if args.relators is None:
        raise UsageError("cover needs --ideal or --relators")
    base = cosets.TRIANGLE_238 if args.triangle == "238" else cosets.TRIANGLE_334
    alphabet = base.alphabet
    from .words import Word

    rels = [Word.parse(t, alphabet) for t in args.relators.split(",") if t.strip()]
    sub = [Word.parse(t, alphabet) for t in (args.subgroup or "").split(",") if t.strip()]
    table = cosets.todd_coxeter(base.with_relators(*rels), sub, strategy=args.strategy, cap=args.cap)
    data = {
        "triangle": args.triangle,
        "relators": [str(w) for w in rels],
        "subgroup": [str(w) for w in sub],
        "strategy": args.strategy,
        "index": table.index,
        "cosets_defined": table.meta["cosets_defined"],
    }
    if args.schreier:
        data["schreier_generators"] = [str(w) for w in cosets.schreier_generators(table)]
    _emit(data, args.format)
    return EXIT_OK


def cmd_search(args) -> int:
    from . import modp

    if args.seed is None:
        raise UsageError("search is randomized and needs --seed")
    found = []
    for trial, spec in modp.random_334_pairs(args.p, args.seed, args.budget):
        label = modp.classify_kernel(spec) if args.classify else None
        found.append({"trial": trial, "pair": spec.to_json(), "kernel": None if label is None else str(label)})
        if len(found) >= args.count:
            break
    data = {"p": args.p, "seed": args.seed, "accepted": len(found), "pairs": found}
    if args.classify:
        counts: dict = {}
        for f in found:
            counts[f["kernel"]] = counts.get(f["kernel"], 0) + 1
        data["classes"] = counts
    _emit(data, args.format)
    return EXIT_OK


def cmd_reduce(args) -> int:
    from . import modp
    from .words import Word

    w = Word.parse(args.word)
    m = modp.reduce_word_mod(args.ideal, w)
    data = {
        "ideal": str(modp.as_ideal(args.ideal)),
        "word": str(w),
        "matrix": m.rows(),
        "congruence": modp.congruence_member(args.ideal, w),
    }
    _emit(data, args.format)
    return EXIT_OK


def cmd_bounds(args) -> int:
    from . import bounds
    from .quadratic import ZSqrt2

    rep = bounds.check_43(g=args.genus)
    data = {
        "lambda": str(bounds.lambda_constant(*bounds.BOLZA_LAMBDA_PLACES)),
        "check": rep.to_json(),
        "triangle_334": bounds.triangle_lambda(3, 3, 4).to_json(),
        "triangle_238": bounds.triangle_lambda(2, 3, 8).to_json(),
        "bolza_systole": bounds.sys_from_trace(ZSqrt2(2, 2)),
    }
    if args.ideal:
        row = bounds.twin_row(args.ideal, scan_len=args.scan_budget)
        data["ideal"] = row.to_json()
        if row.trace is not None:
            data["ideal"]["systole"] = bounds.sys_from_trace(row.trace)
    _emit(data, args.format)
    return EXIT_OK


def cmd_table(args) -> int:
    from . import bounds

    try:
        primes = tuple(int(p) for p in args.primes.split(",") if p.strip())
    except ValueError as exc:
        raise UsageError(f"bad --primes: {args.primes}") from exc
    table = bounds.twin_table(primes, scan_len=args.scan_budget)
    if args.format == "markdown":
        print(table.markdown())
    else:
        _emit(table.to_json(), args.format, text=table.markdown())
    ok = all(all(r.matches.values()) for r in table.rows if r.published[2])
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="text")

    p = _Parser(prog="bolza", description="Arithmetic of the Bolza quaternion order and its congruence covers.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("verify", parents=[fmt], help="run the acceptance suite")
    s.add_argument("--suite", default="all")
    s.add_argument("-v", "--verbose", action="store_true")
    s.add_argument("--timings", action="store_true", help="include wall-clock checks (output no longer byte-stable)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("factor", parents=[fmt], help="factor a rational prime or an element of Z[sqrt2]")
    s.add_argument("value")
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("eval", parents=[fmt], help="evaluate a word in alpha, beta")
    s.add_argument("--word")
    s.add_argument("--named")
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("disc", parents=[fmt], help="discriminant of a named order")
    s.add_argument("--order", default="all")
    s.set_defaults(func=cmd_disc)

    s = sub.add_parser("quotient", parents=[fmt], help="the mod-2 quotient and its unit filtration")
    s.add_argument("--dot", action="store_true", help="print the filtration as a Graphviz digraph")
    s.add_argument("--tilde", action="store_true", help="the 16-element quotient by sqrt2 instead")
    s.add_argument("--bolza", action="store_true", help="include the position of the Bolza group")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("cover", parents=[fmt], help="congruence cover at an ideal, or coset enumeration")
    s.add_argument("--ideal")
    s.add_argument("--schreier", action="store_true")
    s.add_argument("--scan-budget", type=int, default=0, help="word length for the bounded trace scan")
    s.add_argument("--relators", help="extra relators, comma separated")
    s.add_argument("--subgroup", help="subgroup generators, comma separated")
    s.add_argument("--triangle", choices=("334", "238"), default="334")
    s.add_argument("--strategy", choices=("hlt", "felsch"), default="hlt")
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("search", parents=[fmt], help="random (3,3,4) generating pairs of PSL2(F_p)")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--count", type=int, default=20)
    s.add_argument("--budget", type=int, default=100_000)
    s.add_argument("--classify", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("reduce", parents=[fmt], help="reduce a word modulo a split prime ideal")
    s.add_argument("--ideal", required=True)
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("bounds", parents=[fmt], help="trace and genus bounds")
    s.add_argument("--ideal")
    s.add_argument("--genus", type=int, default=None)
    s.add_argument("--scan-budget", type=int, default=0)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("table", help="the twin table")
    s.add_argument("--primes", default="7,17,23,31,41,47,71")
    s.add_argument("--format", choices=("json", "text", "markdown"), default="markdown")
    s.add_argument("--scan-budget", type=int, default=0)
    s.set_defaults(func=cmd_table)

    sub.add_parser("help", help="show this message")
    return p


def run(argv=None) -> int:
    from .quadratic import UnsupportedIdealError
    from .words import WordSyntaxError

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in (None, "help"):
            parser.print_help()
            return EXIT_OK
        return args.func(args)
    except UsageError as exc:
        print(str(exc).rstrip(), file=sys.stderr)
        return EXIT_USAGE
    except (WordSyntaxError, UnsupportedIdealError, ValueError, KeyError) as exc:
        print(f"bolza: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())

"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 precondition violation,
3 identity check failed.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import characters as ch
from . import modules as mod
from . import oracle
from . import planner
from . import weights as wl

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_FAIL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _weight(text: str) -> wl.Weight:
    try:
        return wl.Weight.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _primes(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _rank(args, w: wl.Weight) -> int:
    if args.n is not None and args.n != len(w):
        raise UsageError(f"weight {w} has rank {len(w)}, not {args.n}")
    return len(w)


def _render_character(x: ch.Character) -> str:
    lines = [f"{c:>6}  {w}" for w, c in x.items()]
    lines.append(f"terms: {len(x)}  dimension: {x.dimension()}")
    return "\n".join(lines)


def _render_descriptor(d: mod.InjectiveDescriptor, show_character: bool) -> str:
    lines = [f"socle weight: {d.socle_weight}",
             f"end algebra: {d.end_algebra} (dimension {d.end_algebra.dimension})"]
    if d.index is None:
        lines.append("admissible index: unknown")
    else:
        flag = "exact" if d.index.exact else "at least"
        lines.append(f"admissible index: {d.index.value} ({flag})")
    if show_character and d.character is not None:
        lines.append(f"character: {len(d.character)} terms, dimension {d.character.dimension()}")
    return "\n".join(lines)


# -- subcommands ------------------------------------------------------------

def cmd_char(args) -> int:
    _rank(args, args.weight)
    x = ch.weyl_character(args.weight)
    _emit(args, x.to_json(), _render_character(x))
    return EXIT_OK


def cmd_orbit(args) -> int:
    orb = sorted(wl.weyl_orbit(args.weight), reverse=True)
    _emit(args, {"weight": list(args.weight), "orbit": [list(w) for w in orb], "size": len(orb)},
          "\n".join(str(w) for w in orb) + f"\nsize: {len(orb)}")
    return EXIT_OK


def cmd_dominance(args) -> int:
    if len(args.a) != len(args.b):
        raise UsageError("weights have different ranks")
    leq, geq = wl.dominance_leq(args.a, args.b), wl.dominance_leq(args.b, args.a)
    _emit(args, {"a": list(args.a), "b": list(args.b), "leq": leq, "geq": geq},
          f"{args.a} <= {args.b}: {leq}\n{args.b} <= {args.a}: {geq}")
    return EXIT_OK


def cmd_padic(args) -> int:
    dec = wl.p_adic_decompose(args.weight, args.p)
    digits = [list(d) for d in dec.digits]
    _emit(args, {"weight": list(args.weight), "base": args.p, "digits": digits,
                 "p_adic_breadth": dec.breadth},
          " + ".join(f"{args.p}^{j}*{d}" for j, d in enumerate(dec.digits))
          + f"\np-adic breadth: {dec.breadth}")
    return EXIT_OK


def cmd_brauer(args) -> int:
    n = _rank(args, args.weight)
    lam, p = args.weight, args.p
    if not lam.is_partition() or lam[0] >= p:
        raise planner.PreconditionError(f"{lam} must be a partition with b(lam) < {p}")
    st = (p - 1) * wl.delta(n)
    lhs = ch.weyl_character(st) * ch.orbit_sum(lam)
    terms = ch.brauer_expand(st, lam)
    rhs = ch.brauer_sum(terms, n)
    ok = (lhs == rhs and len(terms) == wl.orbit_size(lam) and all(s == 1 for s, _ in terms))
    payload = {"n": n, "p": p, "lambda": list(lam), "lhs_terms": len(lhs),
               "rhs_terms": len(rhs), "summands": [[s, list(w)] for s, w in terms],
               "pass": ok}
    text = (f"chi({st}) * s({lam}): {len(lhs)} terms\n"
            + "\n".join(f"  {'+' if s > 0 else '-'} chi({w})" for s, w in terms)
            + f"\nsum: {len(rhs)} terms, {len(terms)} summands\n"
            + ("PASS" if ok else "FAIL"))
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_zhat(args) -> int:
    x = ch.zhat_character(args.weight, args.p)
    _emit(args, x.to_json(), _render_character(x))
    return EXIT_OK


def cmd_tilting(args) -> int:
    n = _rank(args, args.weight)
    d = mod.steinberg_tilting(n, args.p, args.weight, with_character=not args.no_character)
    _emit(args, d.to_json(not args.no_character), _render_descriptor(d, not args.no_character))
    return EXIT_OK


def cmd_hook(args) -> int:
    if args.m is None:
        alg = mod.hook_injective_end(args.n, args.p, args.a)
        _emit(args, alg.to_json(), f"{alg} (dimension {alg.dimension})")
        return EXIT_OK
    d = mod.pm_hook_injective(args.n, args.p, args.m, args.a,
                              with_character=not args.no_character)
    _emit(args, d.to_json(not args.no_character), _render_descriptor(d, not args.no_character))
    return EXIT_OK


def cmd_construct(args) -> int:
    keep = not args.no_character
    if args.regime == "classical":
        res = planner.construct_classical(
            planner.ClassicalParams(args.n, args.p, args.m, args.h, args.r), with_character=keep)
    else:
        if args.l is None:
            raise UsageError("quantum regime needs -l")
        res = planner.construct_quantum(
            planner.QuantumParams(args.n, args.p, args.m, args.h, args.r, args.l))
    lines = [f"regime: {res.regime}  n={res.n} p={res.p} m={res.m} P={res.P}"
             + (f" l={res.l}" if res.l else "") + f"  h={res.h} r={res.r}"]
    if res.regime == "quantum":
        lines.append(f"level digit: {res.level_digit}  level factor: {res.level_factor}")
    lines += [f"digits: {res.digits}",
              "factors: " + ", ".join(str(w) for w in res.lambda_factors),
              f"gamma: {res.gamma}",
              f"mu: {res.mu}",
              _render_descriptor(res.descriptor, keep),
              f"representation dimension >= {res.repdim_lower_bound}"]
    _emit(args, res.to_json(keep), "\n".join(lines))
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.regime == "classical":
        h = planner.max_h_classical(args.n, args.p, args.m, args.r)
        bound = h + 1 if h else None
        nxt = planner.min_r_classical(args.n, args.p, args.m, h + 1)
    else:
        if args.l is None:
            raise UsageError("quantum regime needs -l")
        h = planner.max_h_quantum(args.n, args.p, args.m, args.l, args.r)
        bound = h + 2 if h else None
        nxt = planner.min_r_quantum(args.n, args.p, args.m, args.l, h + 1)
    payload = {"regime": args.regime, "n": args.n, "p": args.p, "m": args.m,
               "r": args.r, "h": h, "repdim_lower_bound": bound, "next_threshold": nxt}
    if args.regime == "quantum":
        payload["l"] = args.l
    text = (f"h = {h}\n"
            + (f"representation dimension >= {bound}" if bound else "no nontrivial bound")
            + f"\nnext threshold: r >= {nxt}")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = oracle.run_suite(args.max_n, args.max_deg, args.primes, seed=args.seed)
    ok = all(r.passed for r in reports)
    _emit(args, {"pass": ok, "reports": [r.to_json() for r in reports]},
          "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.identity}  ({r.checked} checked)"
                    for r in reports))
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------

def _globals(parser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--json", action="store_true", help="emit JSON", **kw)
    parser.add_argument("--seed", type=int, help="random seed for verify",
                        **(kw or {"default": oracle.DEFAULT_SEED}))
    parser.add_argument("--no-character", action="store_true",
                        help="do not materialize characters", **kw)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schur-repdim",
                     description="Weight and character combinatorics for Schur algebras.")
    _globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, add_help=True):
        sp = sub.add_parser(name, help=help, add_help=add_help)
        if not add_help:
            # -h is taken by the tower height h
            sp.add_argument("--help", action="help", help="show this help message and exit")
        _globals(sp, suppress=True)
        sp.set_defaults(func=func)
        return sp

    sp = add("char", cmd_char, "Weyl character chi(lambda)")
    sp.add_argument("-n", type=int)
    sp.add_argument("weight", type=_weight)

    sp = add("orbit", cmd_orbit, "Weyl group orbit")
    sp.add_argument("weight", type=_weight)

    sp = add("dominance", cmd_dominance, "compare two weights in dominance order")
    sp.add_argument("a", type=_weight)
    sp.add_argument("b", type=_weight)

    sp = add("padic", cmd_padic, "p-adic decomposition into column p-regular digits")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("weight", type=_weight)

    sp = add("brauer", cmd_brauer, "check chi((p-1)delta) s(lambda) = sum chi((p-1)delta + mu)")
    sp.add_argument("-n", type=int)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("weight", type=_weight)

    sp = add("zhat", cmd_zhat, "character e^{lambda-(p-1)delta} chi((p-1)delta)")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("weight", type=_weight)

    sp = add("tilting", cmd_tilting, "descriptor of M((p-1)delta + lambda)")
    sp.add_argument("-n", type=int)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("weight", type=_weight)

    sp = add("hook", cmd_hook, "endomorphism algebra of I((p^m-1)delta + a eps_n)")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-m", type=int, help="Frobenius depth; omit for the restricted case")
    sp.add_argument("-a", type=int, required=True)

    for name, func, help in (("construct", cmd_construct, "build mu and its bound"),
                             ("bound", cmd_bound, "largest h reachable for given r")):
        sp = add(name, func, help, add_help=name != "construct")
        sp.add_argument("regime", choices=["classical", "quantum"])
        sp.add_argument("-n", type=int, required=True)
        sp.add_argument("-p", type=int, required=True)
        sp.add_argument("-m", type=int, required=True)
        if name == "construct":
            sp.add_argument("-h", dest="h", type=int, required=True)
        sp.add_argument("-r", type=int, required=True)
        sp.add_argument("-l", type=int)

    sp = add("verify", cmd_verify, "run the oracle suite")
    sp.add_argument("--max-n", type=int, default=3)
    sp.add_argument("--max-deg", type=int, default=10)
    sp.add_argument("--primes", type=_primes, default=[2, 3])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except planner.ThresholdError as exc:
        print(f"precondition violated: {exc} (required min_r = {exc.min_r})", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, IndexError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

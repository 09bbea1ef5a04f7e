"""Command-line interface for the notation engine.

Everything flows through argv and the standard streams; no files, network or
environment variables.  Exit codes: 0 success, 1 domain error, 2 parse error,
3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import arith, equivalence, fundseq, hierarchies, notation, oracle, veblen
from .errors import BudgetError, CapError, DomainError, GuardViolation
from .notation import ParseError, parse, print_term
from .terms import Count, Kind, classify_kind, nat

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


def _emit(args, out, payload: dict, text_lines):
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _cmd_norm(args, out):
    t = parse(args.term)
    s = print_term(t)
    _emit(args, out, {"input": args.term, "normalized": s, "result": s}, [s])


def _cmd_cmp(args, out):
    a, b = parse(args.a), parse(args.b)
    c = arith.compare(a, b)
    word = {-1: "LT", 0: "EQ", 1: "GT"}[c]
    _emit(
        args,
        out,
        {
            "input": [args.a, args.b],
            "normalized": [print_term(a), print_term(b)],
            "result": word,
        },
        [word],
    )


def _cmd_kind(args, out):
    t = parse(args.term)
    k = classify_kind(t).value
    _emit(
        args,
        out,
        {"input": args.term, "normalized": print_term(t), "result": k},
        [k],
    )


def _cmd_tau(args, out):
    t = fundseq.tau(_as_index(parse(args.term)))
    s = print_term(t)
    _emit(args, out, {"input": args.term, "result": s}, [s])


def _as_index(t):
    from .terms import Count, CountableTerm, Fin, Sum, Zero

    return Count(t) if isinstance(t, (Zero, Fin, Sum)) else t


def _cmd_fs(args, out):
    eta = _as_index(parse(args.term))
    if args.at is not None:
        members = [fundseq.index_fs(eta, _as_position(parse(args.at)))]
    else:
        members = [fundseq.index_fs(eta, n) for n in range(args.count)]
    lines = [print_term(m) for m in members]
    _emit(
        args,
        out,
        {"input": args.term, "result": lines},
        lines,
    )


def _as_position(t):
    from .terms import Count

    return t.value if isinstance(t, Count) else t


def _cmd_dseq(args, out):
    y = parse(args.term)
    members = [fundseq.dist_seq(y, n) for n in range(args.count)]
    lines = [print_term(m) for m in members]
    _emit(args, out, {"input": args.term, "result": lines}, lines)


def _cmd_hardy(args, out):
    budget = hierarchies.Budget(args.steps, args.bits)
    v = hierarchies.hardy_eval(parse(args.term), args.x, budget)
    lines = [_int_text(v)]
    _emit(args, out, {"input": [args.term, args.x], "result": str(v)}, lines)


def _cmd_grow(args, out):
    budget = hierarchies.Budget(args.steps, args.bits)
    v = hierarchies.grow_eval(parse(args.term), args.x, budget, base=args.base)
    lines = [_int_text(v)]
    _emit(
        args,
        out,
        {"input": [args.term, args.x], "base": args.base, "result": str(v)},
        lines,
    )


def _int_text(v: int) -> str:
    s = str(v)
    if v.bit_length() > 64:
        return f"{s} ({len(s)} digits)"
    return s


def _cmd_psi(args, out):
    v = equivalence.psi_eval(parse(args.y), parse(args.x))
    s = print_term(v)
    _emit(args, out, {"input": [args.y, args.x], "result": s}, [s])


def _cmd_fff(args, out):
    v = equivalence.F_from_f_eval(parse(args.y_base), parse(args.x))
    s = print_term(v)
    _emit(args, out, {"input": [args.y_base, args.x], "result": s}, [s])


def _cmd_constrain(args, out):
    seq = equivalence.constrain_seq(parse(args.term))
    lines = [print_term(seq.at(n)) for n in range(args.count)]
    _emit(args, out, {"input": args.term, "result": lines}, lines)


def _cmd_names(args, out):
    rows = []
    for name in ("eps(1)", "eps(2)", "eta0", "zeta0", "lambda0", "E1", "H1"):
        rows.append((name, print_term(veblen.named(name).value)))
    lines = [f"{n} = {s}" for n, s in rows]
    _emit(args, out, {"result": dict(rows)}, lines)


def _cmd_selftest(args, out):
    from .oracle import vec, vec_add, vec_compare, vec_fs, vec_hardy, vec_mul, vec_sub

    rng = random.Random(20121)
    failures = 0

    def term_of(v):
        t = nat(0)
        for i in range(v.degree, -1, -1):
            c = v.coeffs[i]
            if c:
                t = arith.add(t, arith.multiply(veblen.omega_power(i), nat(c)))
        return t

    def rand_vec():
        return vec(*[rng.randrange(4) for _ in range(rng.randrange(1, 5))])

    for _ in range(2000):
        va, vb = rand_vec(), rand_vec()
        a, b = term_of(va), term_of(vb)
        if arith.compare(a, b) != vec_compare(va, vb):
            failures += 1
        if arith.add(a, b) != term_of(vec_add(va, vb)):
            failures += 1
        if arith.multiply(a, b) != term_of(vec_mul(va, vb)):
            failures += 1
        if vec_compare(vb, va) <= 0 and arith.subtract(a, b) != term_of(vec_sub(va, vb)):
            failures += 1
    for _ in range(300):
        v = rand_vec()
        if v.is_limit():
            t = term_of(v)
            for n in range(4):
                if fundseq.dist_seq(t, n) != term_of(vec_fs(v, n)):
                    failures += 1
        if not v.is_zero() and v.degree <= 2:
            small = vec(*[min(c, 2) for c in v.coeffs])  # keep the recursion tame
            if small.coeffs and hierarchies.hardy_eval(term_of(small), 3) != vec_hardy(small, 3):
                failures += 1
    status = "selftest PASS" if failures == 0 else f"selftest FAIL ({failures} mismatches)"
    _emit(args, out, {"result": status, "failures": failures}, [status])
    return EXIT_OK if failures == 0 else EXIT_DOMAIN


def _build_parser():
    top = argparse.ArgumentParser(prog="ordinals", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="structured output")
        p.set_defaults(fn=fn)
        return p

    p = add("norm", _cmd_norm, "parse and print the canonical form")
    p.add_argument("term")
    p = add("cmp", _cmd_cmp, "compare two terms (LT/EQ/GT)")
    p.add_argument("a")
    p.add_argument("b")
    p = add("kind", _cmd_kind, "classify a term's kind")
    p.add_argument("term")
    p = add("tau", _cmd_tau, "sequence length of a limit index")
    p.add_argument("term")
    p = add("fs", _cmd_fs, "fundamental sequence members of a limit index")
    p.add_argument("term")
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--at", help="single member at a (possibly transfinite) position")
    p = add("dseq", _cmd_dseq, "distinguished sequence members of a countable limit")
    p.add_argument("term")
    p.add_argument("--count", type=int, default=5)
    p = add("hardy", _cmd_hardy, "index-recursion value")
    p.add_argument("term")
    p.add_argument("x", type=int)
    p.add_argument("--steps", type=int, default=hierarchies.DEFAULT_BUDGET.max_recursion_steps)
    p.add_argument("--bits", type=int, default=hierarchies.DEFAULT_BUDGET.max_bit_length)
    p = add("grow", _cmd_grow, "squaring-hierarchy value")
    p.add_argument("term")
    p.add_argument("x", type=int)
    p.add_argument("--steps", type=int, default=hierarchies.DEFAULT_BUDGET.max_recursion_steps)
    p.add_argument("--bits", type=int, default=hierarchies.DEFAULT_BUDGET.max_bit_length)
    p.add_argument("--base", type=int, default=2)
    p = add("psi", _cmd_psi, "attached normal function of a power value")
    p.add_argument("y")
    p.add_argument("x")
    p = add("fff", _cmd_fff, "normal function fixed on the power values >= y_base")
    p.add_argument("y_base")
    p.add_argument("x")
    p = add("constrain", _cmd_constrain, "constrained sequence members of a power value")
    p.add_argument("term")
    p.add_argument("--count", type=int, default=5)
    add("names", _cmd_names, "list the addressable named constants")
    add("selftest", _cmd_selftest, "cross-check the engine against the vector oracle")
    return top


def run_cli(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code not in (0, None) else EXIT_OK
    try:
        rc = args.fn(args, out)
        return rc if isinstance(rc, int) else EXIT_OK
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return EXIT_PARSE
    except BudgetError as e:
        err.write(f"budget error: {e}\n")
        return EXIT_BUDGET
    except (DomainError, GuardViolation) as e:
        err.write(f"domain error: {e}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.setrecursionlimit(20000)
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()

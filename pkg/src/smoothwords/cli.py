"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 resource ceiling exceeded,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Callable, Sequence

from . import chains as ch
from . import enumeration as en
from . import general as gen
from . import growth
from . import kolakoski as ko
from .cache import Cache, cached_chain_family, cached_height_class, cached_stats
from .errors import DomainError, InvariantError, SmoothWordError
from .primitives import primitives
from .words import as_word, derivative, height, show

Row = dict[str, Any]


def real(x: float) -> str:
    return format(x, ".12g")


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class Output:
    """Collects rows and renders them as plain text, CSV or JSON lines."""

    def __init__(self, fmt: str, stream: io.TextIOBase):
        self.fmt = fmt
        self.stream = stream

    def emit(self, rows: Sequence[Row], plain: Callable[[Row], str] | Sequence[str] | None = None) -> None:
        if self.fmt == "json":
            for r in rows:
                self.stream.write(json.dumps(r, ensure_ascii=False, separators=(",", ":")) + "\n")
        elif self.fmt == "csv":
            if not rows:
                return
            w = csv.DictWriter(self.stream, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        else:
            lines = plain if isinstance(plain, (list, tuple)) else [plain(r) if plain else " ".join(map(str, r.values())) for r in rows]
            for line in lines:
                self.stream.write(f"{line}\n")


def _alphabet(args) -> gen.AlphabetParams:
    return gen.AlphabetParams.parse(args.alphabet)


def _word(text: str, p: gen.AlphabetParams) -> str:
    return as_word(text, p.letters)


# subcommands ---------------------------------------------------------------


def cmd_derive(args, out: Output) -> int:
    p = _alphabet(args)
    w = _word(args.word, p)
    if args.iterate < 0:
        raise DomainError("--iterate must be nonnegative")
    rows = []
    for step in range(1, args.iterate + 1):
        w = derivative(w) if p.is_base else gen.gen_derivative(w, p)
        rows.append({"step": step, "word": w})
    out.emit(rows, lambda r: show(r["word"]))
    return 0


def cmd_height(args, out: Output) -> int:
    p = _alphabet(args)
    w = _word(args.word, p)
    h = height(w) if p.is_base else gen.gen_height(w, p)
    out.emit([{"word": w, "height": h}], lambda r: str(r["height"]))
    return 0


def cmd_primitives(args, out: Output) -> int:
    p = _alphabet(args)
    w = _word(args.word, p)
    prims = primitives(w) if p.is_base else gen.gen_primitives(w, p)
    rows = [{"word": v} for v in sorted(prims, key=lambda v: (len(v), v))]
    out.emit(rows, lambda r: r["word"])
    return 0


def cmd_class(args, out: Output) -> int:
    p = _alphabet(args)
    if p.is_base:
        words = cached_height_class(args.cache, args.k)
    else:
        words = sorted(gen.gen_height_class(args.k, p), key=lambda v: (len(v), v))
    out.emit([{"word": w} for w in words], lambda r: r["word"])
    return 0


def _chain_family(args, k: int) -> ch.ChainFamily:
    p = _alphabet(args)
    if p.is_base:
        return cached_chain_family(args.cache, k)
    return gen.gen_chains_of_height(k, p)


def cmd_chains(args, out: Output) -> int:
    fam = _chain_family(args, args.k)
    if not args.split:
        out.emit([{"chain": str(c)} for c in fam], lambda r: r["chain"])
        return 0
    letters = _alphabet(args).letters
    rows, plain = [], []
    for idx, letter in enumerate(letters, start=1):
        part = [c for c in fam if c.first_letter == letter]
        plain.append(f"H^{fam.k}_{idx} ({len(part)} chains, first letter {letter}):")
        for c in part:
            rows.append({"part": idx, "chain": str(c)})
            plain.append(f"  {c}")
    out.emit(rows, plain)
    return 0


def cmd_verify_partition(args, out: Output) -> int:
    p = _alphabet(args)
    if p.is_base:
        report = ch.verify_partition(args.k)
        rows = [{"check": name, "passed": ok, "detail": detail} for name, (ok, detail) in report.checks.items()]
        out.emit(rows, report.lines())
        if not report.passed:
            raise InvariantError(f"partition check failed at k={args.k}")
        return 0
    fam = gen.gen_chains_of_height(args.k, p)
    law = gen.gen_chain_count(args.k, p)
    size = len(gen.gen_height_class(args.k, p))
    linear = all(c.is_linear() for c in fam)
    rows = [
        {"check": "disjoint cover", "passed": True, "detail": f"{len(fam)} families cover {size} words"},
        {"check": "|H^k| = 2(b-1)(2b-1)^(k-1)", "passed": len(fam) == law, "detail": f"{len(fam)} vs {law}"},
        {"check": "families are paths", "passed": linear, "detail": "REPORT only"},
    ]
    out.emit(rows, lambda r: f"{r['check']}: {'PASS' if r['passed'] else 'FAIL'} ({r['detail']})")
    if len(fam) != law:
        raise InvariantError(f"family count {len(fam)} differs from {law}")
    return 0


def cmd_gamma(args, out: Output) -> int:
    p = _alphabet(args)
    if p.is_base:
        g = en.gamma(args.n, args.method)
    else:
        g = gen.gen_gamma(args.n, p, "kernel" if args.method == "extension" else args.method)
    out.emit([{"n": args.n, "gamma": g}], lambda r: str(r["gamma"]))
    return 0


def _stats_rows(args) -> list[en.StatsRecord]:
    p = _alphabet(args)
    if not p.is_base:
        raise DomainError("stats tables are only available for the alphabet 1,2")
    return cached_stats(args.cache, args.n_max)


def cmd_stats(args, out: Output) -> int:
    p = _alphabet(args)
    if p.is_base:
        rows = [r.as_row() for r in cached_stats(args.cache, args.n_max)]
    else:
        prof = gen.gen_profile(args.n_max + 1, p)
        rows = []
        for n in range(1, args.n_max + 1):
            c = prof.count[n]
            rows.append(
                {
                    "n": str(n),
                    "gamma": str(c),
                    "gamma_prime": str(prof.count[n + 1] - c),
                    "h1": str(prof.hmin[n]) if c else "",
                    "h2": str(prof.hmax[n]) if c else "",
                    "freq_min": f"{prof.bmin[n]}/{n}" if c else "",
                    "freq_max": f"{prof.bmax[n]}/{n}" if c else "",
                }
            )
    header = list(en.StatsRecord.FIELDS)
    plain = [" ".join(f"{h:>11}" for h in header)]
    plain += [" ".join(f"{r[h]:>11}" for h in header) for r in rows]
    out.emit(rows, plain)
    return 0


def cmd_bounds(args, out: Output) -> int:
    if not _alphabet(args).is_base:
        raise DomainError("chain bounds are only available for the alphabet 1,2")
    ns = range(1, args.n + 1) if args.upto else [args.n]
    reports = [en.chain_bounds_check(n) for n in ns]
    rows = [
        {"n": r.n, "gamma": r.gamma, "h1": r.h1, "h2": r.h2, "lower": r.lower, "upper": r.upper, "status": r.status}
        for r in reports
    ]
    out.emit(rows, [r.line() for r in reports])
    if not all(r.passed for r in reports):
        raise InvariantError("chain sandwich violated")
    return 0


def cmd_kolakoski(args, out: Output) -> int:
    if args.alpha is not None:
        it = ko.shallit_iterate(args.alpha)
        est = ko.alpha_estimate(args.alpha)
        row = {"label": "REPORT", "i": args.alpha, "length": it.length, "alpha": real(est), "candidate": real(ko.ALPHA_CANDIDATE)}
        out.emit([row], [f"REPORT |K_{args.alpha}| = {it.length}, |K_i|(2/3)^i = {real(est)} (candidate (3+sqrt5)/6 = {real(ko.ALPHA_CANDIDATE)})"])
        return 0
    if args.complexity is not None:
        try:
            n, window = (int(x) for x in args.complexity.split(","))
        except ValueError:
            raise DomainError(f"--complexity expects N,WINDOW, got {args.complexity!r}") from None
        f = ko.factor_complexity(n, window)
        row = {"label": "REPORT lower bound", "n": n, "window": window, "factors": f}
        out.emit([row], [f"REPORT p_K({n}) >= {f} (distinct factors in a prefix of length {window})"])
        return 0
    if args.n is None:
        raise DomainError("kolakoski needs N unless --alpha or --complexity is given")
    if args.stats:
        ones, twos, ratio = ko.prefix_letter_stats(args.n)
        row = {"label": "REPORT", "n": args.n, "ones": ones, "twos": twos, "ratio": f"{ratio.numerator}/{ratio.denominator}", "ratio_float": real(float(ratio))}
        out.emit([row], [f"REPORT n={args.n} |K|_1={ones} |K|_2={twos} ratio={real(float(ratio))}"])
        return 0
    word = ko.kolakoski_prefix(args.n)
    out.emit([{"n": args.n, "prefix": word}], [word])
    return 0


def cmd_exponents(args, out: Output) -> int:
    if args.sing is not None:
        p = gen.AlphabetParams.parse(args.sing)
        delta, rev = growth.sing_exponents(p)
        row = {"a": p.a, "b": p.b, "delta": real(delta), "theta_rev": real(rev), "parity_differs": p.parity_differs}
        out.emit([row], [f"a={p.a} b={p.b} delta={real(delta)} theta_rev={real(rev)}"])
        return 0
    if args.xi is not None:
        rep = growth.theorem5_exponents(_alphabet(args), args.xi)
    elif args.theta is not None:
        rep = growth.theorem6_exponents(args.theta)
    else:
        raise DomainError("exponents needs --theta, --xi or --sing")
    row = {"parameter": real(rep.theta_or_xi), "lower": real(rep.lower_exponent), "upper": real(rep.upper_exponent), "q": real(rep.reference_q)}
    out.emit([row], [f"lower={row['lower']} upper={row['upper']} q={row['q']}"])
    return 0


def cmd_fit(args, out: Output) -> int:
    records = _stats_rows(args)
    slope = growth.fit_growth_exponent(records, args.n_min, args.n_max)
    theta = growth.empirical_theta(records, args.n0)
    rep = growth.theorem6_exponents(float(theta))
    row = {
        "n_min": args.n_min,
        "n_max": args.n_max,
        "slope": real(slope),
        "theta": f"{theta.numerator}/{theta.denominator}",
        "lower": real(rep.lower_exponent),
        "upper": real(rep.upper_exponent),
        "within": rep.brackets(slope),
    }
    plain = [
        f"slope={row['slope']} over [{args.n_min}, {args.n_max}]",
        f"theta={row['theta']} (n0={args.n0}) bracket=[{row['lower']}, {row['upper']}] within={row['within']}",
        f"REPORT q=log3/log(3/2)={real(growth.Q)}",
    ]
    out.emit([row], plain)
    return 0


# parser ----------------------------------------------------------------------


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--alphabet", default=d("1,2"), help="two-letter alphabet a,b (default 1,2)")
    parser.add_argument("--format", choices=("plain", "csv", "json"), default=d("plain"))
    parser.add_argument("--cache", default=d(None), help="cache directory (overrides SMOOTHWORDS_CACHE)")
    parser.add_argument("--seedless-deterministic", action="store_true", default=d(True), help="always on")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="smoothwords", description="Smooth words, MRSE chains and Kolakoski statistics.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        _common(sp, suppress=True)
        sp.set_defaults(func=func)
        return sp

    sp = add("derive", cmd_derive, "iterated derivatives of a word")
    sp.add_argument("word")
    sp.add_argument("--iterate", type=int, default=1)

    sp = add("height", cmd_height, "height of a smooth word")
    sp.add_argument("word")

    sp = add("primitives", cmd_primitives, "all primitives of a smooth word")
    sp.add_argument("word")

    sp = add("class", cmd_class, "list the height class P^k")
    sp.add_argument("k", type=int)

    sp = add("chains", cmd_chains, "list the MRSE chains H^k")
    sp.add_argument("k", type=int)
    sp.add_argument("--split", action="store_true", help="group by first letter")

    sp = add("verify-partition", cmd_verify_partition, "check that H^k partitions P^k")
    sp.add_argument("k", type=int)

    sp = add("gamma", cmd_gamma, "number of smooth words of length N")
    sp.add_argument("n", type=int)
    sp.add_argument("--method", choices=("extension", "oracle"), default="extension")

    sp = add("stats", cmd_stats, "per-length statistics table")
    sp.add_argument("n_max", type=int)

    sp = add("bounds", cmd_bounds, "chain sandwich bounds on gamma(N)")
    sp.add_argument("n", type=int)
    sp.add_argument("--upto", action="store_true", help="check every length 1..N")

    sp = add("kolakoski", cmd_kolakoski, "Kolakoski prefix and statistics")
    sp.add_argument("n", type=int, nargs="?")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--stats", action="store_true")
    g.add_argument("--alpha", type=int, metavar="I")
    g.add_argument("--complexity", metavar="N,WINDOW")

    sp = add("exponents", cmd_exponents, "closed-form growth exponents")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--theta", type=float)
    g.add_argument("--xi", type=float)
    g.add_argument("--sing", metavar="A,B")

    sp = add("fit", cmd_fit, "log-log fit of gamma(n) over [N_MIN, N_MAX]")
    sp.add_argument("n_min", type=int)
    sp.add_argument("n_max", type=int)
    sp.add_argument("--n0", type=int, default=32, help="frequency threshold length for theta")
    return parser


def run_cli(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.cache = Cache.from_env(args.cache)
        return args.func(args, Output(args.format, stdout))
    except SmoothWordError as exc:
        stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except AssertionError as exc:
        stderr.write(f"internal invariant failure: {exc}\n")
        return InvariantError.exit_code


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    sys.exit(run_cli())


if __name__ == "__main__":
    main()

"""Command-line front end.

Four subcommands over the library:

* ``expand``   -- expand a number (exact field arithmetic, or certified
                  interval arithmetic for decimal input) and report the
                  quotients, convergents and growth diagnostics.
* ``verify``   -- run the randomized/exhaustive invariant suites.
* ``sturmian`` -- generate a mechanical word for a given slope and run the
                  combinatorial reports (complexity, prefix repetitions,
                  stammering criterion) on the induced expansion word.
* ``criteria`` -- evaluate both transcendence-style criteria on an
                  expansion file.

Every command is deterministic given its flags and seed.  Exit codes:
0 success / all checks pass, 1 suite or criterion-level failure, 2 usage
error (bad flags, unparsable or missing input).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .convergents import convergents_of, growth_stats
from .field import FieldError, element_from_json, field_new, parse_element
from .intervals import RatInterval, decimal_str, two_cos_interval
from .rosen import (SCHEMA, ExpansionStatus, PartialQuotient, expand,
                    format_word, in_fundamental_interval, parse_word,
                    reduce_into_interval)
from .verify import SUITES, run_suites
from .words import (InsufficientTermsError, criterion_thm1, criterion_thm2,
                    factor_complexity, growth_csv, lemma26_search,
                    sturmian_word)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Bad invocation or unusable input; rendered as exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    """Shared command configuration.

    ``max_steps`` is the scale knob: expansion length for ``expand``,
    per-suite case count for ``verify``.  ``None`` means the per-command
    default.  In certified-real mode ``precision`` is the working-precision
    cap for the interval expansion.
    """

    m: int
    mode: str = "exact"                 # "exact" | "certified-real"
    max_steps: int | None = None
    precision: int = 96
    fmt: str = "text"                   # "json" | "csv" | "text"
    seed: int = 0

    def __post_init__(self):
        if self.m < 3:
            raise UsageError("m must be >= 3")
        if self.precision < 32:
            raise UsageError("precision must be >= 32 bits")
        if self.max_steps is not None and self.max_steps < 1:
            raise UsageError("steps must be >= 1")
        if self.mode not in ("exact", "certified-real"):
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.fmt not in ("json", "csv", "text"):
            raise UsageError(f"unknown format {self.fmt!r}")


def _print(text: str, out) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _json_clean(obj):
    """Strict JSON has no NaN/Infinity literals; map them to null."""
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _json_clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_clean(v) for v in obj]
    return obj


def _dump_json(payload) -> str:
    return json.dumps(_json_clean(payload), indent=2, allow_nan=False)


def _el_decimal(el, prec: int = 64, digits: int = 12) -> str:
    return decimal_str(el.interval(prec), digits)


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------

def _periodic_word_str(res) -> str:
    """Word rendering with the period in parentheses for periodic results."""
    if res.status is ExpansionStatus.PERIODIC:
        head = format_word(res.quotients[:res.mu])
        body = "(" + format_word(res.period) + ")*"
        return head + "," + body if head else body
    return format_word(res.quotients)


def _certified_real_attempt(x0: Fraction, m: int, steps: int, prec: int):
    """Interval expansion of the exact rational x0 at fixed precision.

    Returns (quotients, note); note is None when all requested steps were
    certified, otherwise it explains which decision failed first.
    """
    lam = two_cos_interval(1, m, prec)
    x = RatInterval.point(x0)
    # reduce into the fundamental interval: k = floor(x/lam + 1/2)
    y = x / lam + Fraction(1, 2)
    if math.floor(y.lo) != math.floor(y.hi):
        return [], "interval translation not certified", None
    k = math.floor(y.lo)
    x = x - lam * k
    quots: list[PartialQuotient] = []
    for _ in range(steps):
        s = x.sign()
        if s is None:
            if x.lo == x.hi == 0:
                return quots, None, k          # exactly zero: finite
            return (quots, "orbit sign not certified (value within "
                    f"{decimal_str(RatInterval.point(x.width), 3)} of 0; "
                    "possibly a finite expansion)", k)
        inv_abs = 1 / abs(x)
        ry = inv_abs / lam + Fraction(1, 2)
        if math.floor(ry.lo) != math.floor(ry.hi):
            return quots, "digit r not certified at this precision", k
        r = math.floor(ry.lo)
        quots.append(PartialQuotient(s, r))
        x = inv_abs - lam * r
    return quots, None, k


def _certified_real_expand(x0: Fraction, m: int, steps: int, prec_cap: int):
    """Adaptive certified expansion: doubles precision up to the cap and
    keeps the longest certified quotient prefix."""
    prec = min(64, prec_cap)
    best = ([], "never attempted", 0, prec)
    while True:
        quots, note, k = _certified_real_attempt(x0, m, steps, prec)
        if len(quots) >= len(best[0]):
            best = (quots, note, k, prec)
        if note is None or prec >= prec_cap:
            return best
        prec = min(prec * 2, prec_cap)


def cmd_expand(config: RunConfig, x_text: str, reduce_flag: bool = False,
               real_mode: bool = False, out=None) -> int:
    out = out if out is not None else sys.stdout
    steps = config.max_steps if config.max_steps is not None else 100
    mode = "certified-real" if real_mode else config.mode
    desc = field_new(config.m)

    if mode == "certified-real":
        try:
            x0 = Fraction(x_text)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot parse {x_text!r} as a decimal or "
                             f"rational: {exc}") from exc
        quots, note, k, prec = _certified_real_expand(
            x0, config.m, steps, config.precision)
        status = (ExpansionStatus.FINITE if note is None and len(quots) < steps
                  else ExpansionStatus.TRUNCATED)
        if note is None and len(quots) == steps:
            note = f"step budget {steps} reached"
        payload = {
            "schema": SCHEMA,
            "m": config.m,
            "mode": "certified-real",
            "x": x_text,
            "reduced_by": k,
            "precision_used": prec,
            "status": status.value,
            "quotients": format_word(quots),
            "length": len(quots),
            "notice": note,
        }
        if config.fmt == "json":
            _print(_dump_json(payload), out)
        elif config.fmt == "csv":
            _print("n,eps,r", out)
            for i, pq in enumerate(quots, 1):
                _print(f"{i},{pq.eps},{pq.r}", out)
        else:
            _print(f"x = {x_text}  (m = {config.m}, certified-real, "
                   f"precision cap {config.precision})", out)
            if k:
                _print(f"translated by {-k} * lam into the fundamental "
                       "interval", out)
            _print(f"status: {status.value}  "
                   f"({len(quots)} certified quotients at {prec} bits)", out)
            _print("quotients: " + (format_word(quots) or "(empty)"), out)
            if note:
                _print("notice: " + note, out)
        return EXIT_OK

    # exact mode
    try:
        x = parse_element(desc, x_text)
    except (FieldError, ValueError) as exc:
        raise UsageError(f"cannot parse {x_text!r}: {exc}") from exc
    k = 0
    if not in_fundamental_interval(x):
        if not reduce_flag:
            raise UsageError(
                f"{x_text} lies outside [-lam/2, lam/2); pass --reduce to "
                "translate by a multiple of lam first")
        x, k = reduce_into_interval(x)
    res = expand(x, max_steps=steps)
    states = convergents_of(list(res.quotients), desc)
    q_seq = [st.q for st in states]
    gs = growth_stats(q_seq) if len(q_seq) > 1 else None

    if config.fmt == "json":
        payload = res.to_json()
        payload["x"] = x_text
        payload["reduced_by"] = k
        payload["mode"] = "exact"
        payload["convergents"] = [
            {"n": st.n, "p": st.p.to_json(), "q": st.q.to_json(),
             "q_dec": _el_decimal(st.q)} for st in states]
        if gs is not None:
            payload["growth"] = gs.to_json()
        _print(_dump_json(payload), out)
    elif config.fmt == "csv":
        _print(growth_csv(q_seq), out)
    else:
        _print(f"x = {x_text}  (m = {config.m}, exact)", out)
        if k:
            _print(f"translated by {-k} * lam into the fundamental interval",
                   out)
        line = f"status: {res.status.value}"
        if res.status is ExpansionStatus.PERIODIC:
            line += f"  (preperiod {res.mu}, period {res.nu})"
        _print(line, out)
        _print("quotients: " + (_periodic_word_str(res) or "(empty)"), out)
        if len(states) > 1:
            _print("", out)
            _print(f"{'n':>3}  {'eps:r':>6}  {'q_n':<28}  p_n/q_n", out)
            for st, pq in zip(states[1:], res.quotients):
                ratio = (_el_decimal(st.p * st.q.inverse())
                         if st.q.is_zero() is False else "inf")
                _print(f"{st.n:>3}  {str(pq):>6}  {str(st.q):<28}  {ratio}",
                       out)
        if gs is not None:
            _print("", out)
            _print(f"growth: b_est={gs.b_est:.6g} B_est={gs.B_est:.6g} "
                   f"window={gs.window}  increasing={gs.increasing_ok} "
                   f"ladder={gs.ladder_ok} spaced={gs.spaced_ok}", out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(config: RunConfig, suite: str,
               max_word_len: int | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    results = run_suites([suite], config.m, count=config.max_steps,
                         max_word_len=max_word_len, seed=config.seed)
    ok = all(r.ok for r in results)
    if config.fmt == "json":
        _print(_dump_json({
            "schema": SCHEMA,
            "m": config.m,
            "seed": config.seed,
            "ok": ok,
            "results": [r.to_json() for r in results],
        }), out)
    elif config.fmt == "csv":
        _print("suite,m,cases,failures,ok,seconds", out)
        for r in results:
            _print(f"{r.suite},{r.m},{r.cases},{r.failures},"
                   f"{int(r.ok)},{r.seconds:.3f}", out)
    else:
        for r in results:
            word = "pass" if r.ok else "FAIL"
            _print(f"{r.suite:<12} m={r.m:<3} {word}  "
                   f"{r.cases - r.failures}/{r.cases}  ({r.seconds:.1f}s)",
                   out)
            for key, val in r.counters.items():
                _print(f"    {key}: {val}", out)
            for note in r.notes:
                _print(f"    note: {note}", out)
        _print("overall: " + ("pass" if ok else "FAIL"), out)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# sturmian
# ---------------------------------------------------------------------------

def cmd_sturmian(config: RunConfig, rcf: list[int], length: int,
                 letters: str | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    letter_a, letter_b = None, None
    if letters is not None:
        parsed = parse_word(letters)
        if len(parsed) != 2:
            raise UsageError("--letters needs exactly two quotients, "
                             "e.g. \"+1:1,+1:2\"")
        letter_a, letter_b = parsed
    try:
        kwargs = {"expansion_m": config.m}
        if letter_a is not None:
            kwargs.update(letter_a=letter_a, letter_b=letter_b)
        word = sturmian_word(rcf, length, **kwargs)
    except InsufficientTermsError as exc:
        raise UsageError(f"slope quotients too short for length {length}: "
                         f"{exc}") from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    desc = field_new(config.m)
    states = convergents_of(word, desc)
    q_seq = [st.q for st in states]
    complexity = [{"n": n, "p_n": factor_complexity(word, n),
                   "expected": n + 1}
                  for n in range(1, min(20, length - 1) + 1)]
    lemma_rows = []
    for n in range(1, 6):
        hit = lemma26_search(word, n)
        lemma_rows.append({"n": n, "found": hit is not None,
                           **({"u": hit.u, "v": hit.v, "s": str(hit.s),
                               "prefix_length": hit.prefix_length}
                              if hit else {})})
    thm2 = criterion_thm2(word, q_seq, desc.degree)

    if config.fmt == "json":
        _print(_dump_json({
            "schema": SCHEMA,
            "m": config.m,
            "slope_rcf": rcf,
            "length": length,
            "word": format_word(word),
            "complexity": complexity,
            "prefix_repetitions": lemma_rows,
            "stammering": thm2.to_json(),
        }), out)
    elif config.fmt == "csv":
        _print("n,p_n,expected", out)
        for row in complexity:
            _print(f"{row['n']},{row['p_n']},{row['expected']}", out)
    else:
        _print(f"slope [0;{','.join(map(str, rcf))}]  length {length}  "
               f"(m = {config.m})", out)
        _print("word: " + format_word(word), out)
        _print("", out)
        _print("factor complexity (Sturmian expects p(n) = n+1):", out)
        _print("  " + "  ".join(f"p({r['n']})={r['p_n']}"
                                for r in complexity), out)
        _print("", out)
        _print("prefix repetitions U V^s with |U V^s| >= n|U V|:", out)
        for row in lemma_rows:
            if row["found"]:
                _print(f"  n={row['n']}: u={row['u']} v={row['v']} "
                       f"s={row['s']} prefix={row['prefix_length']}", out)
            else:
                _print(f"  n={row['n']}: none within this length", out)
        _print("", out)
        _print(f"stammering criterion: statistic={thm2.statistic:.6g} "
               f"threshold={thm2.threshold:.6g} fires={thm2.fires}", out)
        for flag in thm2.flags:
            _print("  flag: " + flag, out)
        _print("  caveat: " + thm2.caveat, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------

def _load_criteria_input(path: str, config: RunConfig):
    """Read an expansion file.

    Accepted shapes: the JSON written by ``expand --format json`` (keys
    "m" and "quotients"), a JSON object with a synthetic "q" list (integers
    or rational strings, with optional "D"), or a plain text word.
    Returns (word or None, q_seq, D, m).
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read().strip()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    if not text:
        raise UsageError(f"{path} is empty")
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: bad JSON: {exc}") from exc
        if "q" in obj:
            try:
                q_seq = [element_from_json(v) if isinstance(v, dict)
                         else Fraction(str(v)) for v in obj["q"]]
            except (FieldError, ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"{path}: bad q entry: {exc}") from exc
            els = [q for q in q_seq if not isinstance(q, Fraction)]
            m = els[0].desc.m if els else int(obj.get("m", config.m))
            D = int(obj["D"]) if "D" in obj else field_new(m).degree
            return None, q_seq, D, m
        if "quotients" not in obj:
            raise UsageError(f"{path}: expected a \"quotients\" word or a "
                             "\"q\" sequence")
        m = int(obj.get("m", config.m))
        try:
            word = list(parse_word(obj["quotients"]))
        except ValueError as exc:
            raise UsageError(f"{path}: {exc}") from exc
    else:
        m = config.m
        try:
            word = list(parse_word(text))
        except ValueError as exc:
            raise UsageError(f"{path}: {exc}") from exc
    desc = field_new(m)
    q_seq = [st.q for st in convergents_of(word, desc)]
    return word, q_seq, desc.degree, m


def cmd_criteria(config: RunConfig, path: str, out=None) -> int:
    out = out if out is not None else sys.stdout
    word, q_seq, D, m = _load_criteria_input(path, config)
    thm1 = criterion_thm1(q_seq, D, prec=config.precision)
    thm2 = criterion_thm2(word, q_seq, D) if word is not None else None

    if config.fmt == "json":
        payload = {
            "schema": SCHEMA,
            "m": m,
            "degree": D,
            "input": path,
            "growth_rate": thm1.to_json(),
        }
        if thm2 is not None:
            payload["stammering"] = thm2.to_json()
        _print(_dump_json(payload), out)
    elif config.fmt == "csv":
        _print("criterion,statistic,threshold,fires", out)
        _print(f"growth-rate,{thm1.statistic},{thm1.threshold},"
               f"{int(thm1.fires)}", out)
        if thm2 is not None:
            _print(f"stammering,{thm2.statistic},{thm2.threshold},"
                   f"{int(thm2.fires)}", out)
    else:
        _print(f"input: {path}  (m = {m}, degree D = {D})", out)
        for rep in filter(None, [thm1, thm2]):
            _print("", out)
            _print(f"{rep.name}: statistic={rep.statistic:.6g} "
                   f"threshold={rep.threshold:.6g} fires={rep.fires} "
                   f"window={rep.window}", out)
            for flag in rep.flags:
                _print("  flag: " + flag, out)
            _print("  caveat: " + rep.caveat, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-m", type=int, default=4,
                        help="field index m >= 3 (lam = 2cos(pi/m))")
    common.add_argument("--mode", choices=["exact", "certified-real"],
                        default="exact")
    common.add_argument("--steps", "-n", type=int, default=None,
                        help="expansion length / suite case count")
    common.add_argument("--precision", type=int, default=96,
                        help="working-precision bits (>= 32)")
    common.add_argument("--format", choices=["json", "csv", "text"],
                        default="text", dest="fmt")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="rosenlab",
        description="Exact continued-fraction expansions over Q(2cos(pi/m)) "
                    "with certified verification suites")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common],
                       help="expand a number and print its quotients")
    p.add_argument("x", help="rational, field element (JSON or coefficient "
                             "list), or decimal string with --real")
    p.add_argument("--reduce", action="store_true",
                   help="translate into [-lam/2, lam/2) first")
    p.add_argument("--real", action="store_true",
                   help="treat x as an exact decimal and expand with "
                        "certified interval arithmetic")

    p = sub.add_parser("verify", parents=[common],
                       help="run invariant suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--max-word-len", type=int, default=None,
                   help="exhaustive word length for the trace suite")

    p = sub.add_parser("sturmian", parents=[common],
                       help="generate a mechanical word and analyze it")
    p.add_argument("--rcf", required=True,
                   help="slope as continued-fraction quotients, e.g. "
                        "1,2,3,4,5,6")
    p.add_argument("--len", type=int, default=100, dest="length",
                   help="word length")
    p.add_argument("--letters", default=None,
                   help="two quotients overriding the default letters, "
                        "e.g. \"+1:1,+1:2\"")

    p = sub.add_parser("criteria", parents=[common],
                       help="evaluate both criteria on an expansion file")
    p.add_argument("input", help="expansion file (word text or JSON)")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0,) else EXIT_OK
    try:
        config = RunConfig(m=args.m, mode=args.mode, max_steps=args.steps,
                           precision=args.precision, fmt=args.fmt,
                           seed=args.seed)
        if args.command == "expand":
            return cmd_expand(config, args.x, reduce_flag=args.reduce,
                              real_mode=args.real)
        if args.command == "verify":
            return cmd_verify(config, args.suite,
                              max_word_len=args.max_word_len)
        if args.command == "sturmian":
            try:
                rcf = [int(part) for part in args.rcf.split(",") if part]
            except ValueError as exc:
                raise UsageError(f"bad --rcf list: {exc}") from exc
            return cmd_sturmian(config, rcf, args.length,
                                letters=args.letters)
        if args.command == "criteria":
            return cmd_criteria(config, args.input)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

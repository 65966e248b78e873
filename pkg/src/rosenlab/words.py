"""Combinatorics on partial-quotient words and the transcendence criteria.

A word is any finite sequence of letters; for expansion words the letters
are PartialQuotients.  Fractional powers follow the convention
V^s = V^floor(s) V' with V' the prefix of V of length
ceil((s - floor(s)) |V|).  Repetitions U V^w (prefix of the word, maximal
exponent w for the split |U| = u, period |V| = v) come from Z-array
longest-common-extension scans, so every reported w = (v + lce)/v is an
exact rational.

Sturmian words are generated mechanically: u_n = letter_a iff
floor((n+1) theta + rho) - floor(n theta + rho) = 1, with the slope theta
known only through its regular continued fraction; every floor is certified
from the exact convergent bracket (theta lies strictly between consecutive
convergents), and a floor that cannot be certified raises
InsufficientTermsError rather than guessing.

The two criterion evaluators quantify, at finite scale, the growth test
(max (log log q_n)/n against log(2D-1)) and the stammering test
(max (u + w v)/(2u + v) against (3D/2) log B / log b).  Both are proxies
for limsup statements; reports carry the window and an explicit caveat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .field import FieldElement
from .intervals import RatInterval, log_interval
from .rosen import PartialQuotient, check_admissible

CAVEAT = ("finite-scale proxy: the underlying statement is asymptotic "
          "(limsup over infinitely many indices); a finite prefix can "
          "only exhibit finitely many repetitions / terms")


class InsufficientTermsError(ValueError):
    """More regular-CF terms of the slope are needed to certify a floor."""


# ---------------------------------------------------------------------------
# fractional powers and repetitions
# ---------------------------------------------------------------------------

def fractional_power(V, s) -> list:
    """V^floor(s) followed by the prefix of V of length
    ceil((s - floor(s)) |V|)."""
    V = list(V)
    if not V:
        raise ValueError("V must be nonempty")
    s = Fraction(s)
    if s < 0:
        raise ValueError("exponent must be >= 0")
    whole = int(s)
    frac = s - whole
    extra = math.ceil(frac * len(V))
    return V * whole + V[:extra]


def z_array(seq) -> list[int]:
    """Z[i] = length of the longest common prefix of seq and seq[i:]."""
    seq = list(seq)
    n = len(seq)
    if n == 0:
        return []
    Z = [0] * n
    Z[0] = n
    l = r = 0
    for i in range(1, n):
        if i < r:
            Z[i] = min(r - i, Z[i - l])
        while i + Z[i] < n and seq[Z[i]] == seq[i + Z[i]]:
            Z[i] += 1
        if i + Z[i] > r:
            l, r = i, i + Z[i]
    return Z


@dataclass(frozen=True)
class Repetition:
    u: int                      # |U|
    v: int                      # |V|
    w: Fraction                 # maximal exponent with U V^w a prefix

    @property
    def statistic(self) -> Fraction:
        return Fraction(self.u + self.w * self.v, 2 * self.u + self.v)


def repetition_exponents(word, max_u: int | None = None) -> list[Repetition]:
    """All (u, v) splits with maximal exponent w > 1.

    For each split point u the Z-array of word[u:] gives the longest common
    extension between V = word[u:u+v] repeated and the rest, hence
    w = (v + lce)/v exactly.
    """
    word = list(word)
    L = len(word)
    out = []
    top = L if max_u is None else min(L, max_u + 1)
    for u in range(top):
        Zu = z_array(word[u:])
        for v in range(1, L - u):
            lce = Zu[v]
            if lce > 0:
                out.append(Repetition(u, v, Fraction(v + lce, v)))
    return out


def stammer_statistic(word, max_u: int | None = None) -> Fraction:
    """max over repetitions with w > 1 of (u + w v)/(2u + v); 1 if none."""
    best = Fraction(1)
    word = list(word)
    L = len(word)
    top = L if max_u is None else min(L, max_u + 1)
    for u in range(top):
        Zu = z_array(word[u:])
        for v in range(1, L - u):
            lce = Zu[v]
            if lce > 0:
                val = Fraction(u * v + (v + lce) * v, (2 * u + v) * v)
                if val > best:
                    best = val
    return best


def best_repetition(word, max_u: int | None = None) -> Repetition | None:
    """The repetition maximizing (u + w v)/(2u + v), or None."""
    best = None
    best_val = Fraction(1)
    for rep in repetition_exponents(word, max_u):
        val = rep.statistic
        if best is None or val > best_val:
            best, best_val = rep, val
    return best


@dataclass(frozen=True)
class Lemma26Result:
    u: int
    v: int
    s: Fraction
    prefix_length: int          # |U V^s| = u + v + lce


def lemma26_search(word, n: int, max_u: int = 64) -> Lemma26Result | None:
    """Find U, V, s with U V^s a prefix and |U V^s| >= n |U V|.

    Scans split points u = 0..max_u (the u = 0 scan suffices for
    characteristic Sturmian words; small positive u cover intercepts).
    Returns the first (smallest u, then v) witness, or None.
    """
    word = list(word)
    L = len(word)
    for u in range(min(max_u + 1, L)):
        Zu = z_array(word[u:])
        for v in range(1, L - u):
            lce = Zu[v]
            if lce > 0 and u + v + lce >= n * (u + v):
                return Lemma26Result(u, v, Fraction(v + lce, v), u + v + lce)
    return None


def factor_complexity(word, n: int) -> int:
    """Number of distinct length-n factors of the word."""
    word = list(word)
    if n < 1 or n > len(word):
        raise ValueError("need 1 <= n <= len(word)")
    return len({tuple(word[i:i + n]) for i in range(len(word) - n + 1)})


# ---------------------------------------------------------------------------
# Sturmian words with certified floors
# ---------------------------------------------------------------------------

def rcf_bracket(quotients) -> tuple[Fraction, Fraction]:
    """Open bracket (lo, hi) for theta = [0; a1, a2, ...] from >= 2 terms;
    theta lies strictly between the last two convergents."""
    quotients = list(quotients)
    if len(quotients) < 2:
        raise InsufficientTermsError("need at least two RCF terms")
    if any(a < 1 for a in quotients):
        raise ValueError("RCF partial quotients must be positive integers")
    p_prev, p = 1, 0
    q_prev, q = 0, 1
    for a in quotients:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    c1, c2 = Fraction(p_prev, q_prev), Fraction(p, q)
    return (c1, c2) if c1 < c2 else (c2, c1)


def _certified_floor(n: int, lo: Fraction, hi: Fraction,
                     rho: Fraction) -> int:
    """floor(n * theta + rho) for theta strictly inside (lo, hi), exact."""
    L = n * lo + rho
    H = n * hi + rho
    flo = L if L.denominator == 1 else math.floor(L)
    fhi = H - 1 if H.denominator == 1 else math.floor(H)
    if flo != fhi:
        raise InsufficientTermsError(
            f"floor of {n} theta + rho not determined; "
            "supply more RCF terms for the slope")
    return int(flo)


DEFAULT_LETTER_A = PartialQuotient(1, 1)
DEFAULT_LETTER_B = PartialQuotient(1, 2)


def sturmian_word(slope_rcf, length: int, rho=Fraction(0),
                  letter_a=DEFAULT_LETTER_A, letter_b=DEFAULT_LETTER_B,
                  expansion_m: int | None = None) -> list:
    """Mechanical word u_n = letter_a iff
    floor((n+1) theta + rho) - floor(n theta + rho) = 1, n = 1..length.

    The slope theta = [0; a1, a2, ...] enters only through its certified
    bracket; the density of letter_a tends to theta.  When expansion_m is
    given the result is validated as an admissible expansion word for that
    index.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    lo, hi = rcf_bracket(slope_rcf)
    rho = Fraction(rho)
    word = []
    prev = _certified_floor(1, lo, hi, rho)
    for n in range(1, length + 1):
        cur = _certified_floor(n + 1, lo, hi, rho)
        word.append(letter_a if cur - prev == 1 else letter_b)
        prev = cur
    if expansion_m is not None and not check_admissible(word, expansion_m):
        raise ValueError(
            "generated word is not admissible as an expansion word "
            f"for m={expansion_m}")
    return word


# ---------------------------------------------------------------------------
# criterion evaluators
# ---------------------------------------------------------------------------

def _q_log_interval(q, prec: int) -> RatInterval:
    """Certified enclosure of log q_n for field-element or rational input."""
    if isinstance(q, FieldElement):
        p = prec
        while True:
            iv = q.interval(p)
            if iv.lo > 0:
                return log_interval(iv, p)
            p *= 2
    return log_interval(RatInterval.point(Fraction(q)), prec)


@dataclass
class CriterionReport:
    name: str
    statistic: float
    threshold: float
    fires: bool
    window: tuple[int, int]
    rows: list[dict]
    flags: list[str]
    caveat: str = CAVEAT

    def to_json(self) -> dict:
        return {
            "criterion": self.name,
            "statistic": self.statistic,
            "threshold": self.threshold,
            "fires": self.fires,
            "window": list(self.window),
            "flags": self.flags,
            "caveat": self.caveat,
            "rows": self.rows,
        }


def _statistic_term(q, n: int, prec: int) -> RatInterval | None:
    """Enclosure of (log log q)/n, or None when q <= e (term nonpositive,
    so it can never reach the positive threshold)."""
    p = prec
    lg = _q_log_interval(q, p)
    while lg.lo <= 1 < lg.hi:            # decide log q vs 1 exactly
        p *= 2
        lg = _q_log_interval(q, p)
    if lg.hi <= 1:
        return None
    return log_interval(lg, p) / n


def criterion_thm1(q_seq, D: int, window: tuple[int, int] | None = None,
                   prec: int = 64) -> CriterionReport:
    """Growth criterion: max over the window of (log log q_n)/n versus
    log(2D - 1), compared with certified enclosures.

    q_seq is indexed from q_0; entries may be field elements or rationals.
    Indices with q_n <= e are skipped: their term is nonpositive while the
    threshold is positive for D >= 2.  D = 1 makes the threshold 0 and is
    flagged as degenerate.
    """
    N = len(q_seq) - 1
    if window is None:
        window = (max(1, N // 2), N)
    flags = []
    if D < 2:
        flags.append("D=1: threshold log(2D-1) = 0 is degenerate "
                     "(the construction requires m > 3, so D >= 2)")
    p = prec
    while True:
        terms = {n: _statistic_term(q_seq[n], n, p)
                 for n in range(window[0], window[1] + 1)}
        usable = [t for t in terms.values() if t is not None]
        thr = log_interval(RatInterval.point(Fraction(2 * D - 1)), p) \
            if D > 1 else RatInterval.point(0)
        if not usable:
            rows = [{"n": n, "included": False} for n in terms]
            return CriterionReport("growth-rate", float("nan"),
                                   float(thr.mid), False, window, rows,
                                   flags + ["no usable indices in window"])
        best = RatInterval(max(t.lo for t in usable),
                           max(t.hi for t in usable))
        if best.lo > thr.hi or best.hi < thr.lo:
            break
        p *= 2
        if p > 1 << 14:
            flags.append("statistic not separated from threshold at "
                         "precision cap")
            break
    rows = [{"n": n, "included": t is not None,
             **({"loglog_over_n": float(t.mid)} if t is not None else {})}
            for n, t in terms.items()]
    fires = best.lo > thr.hi
    return CriterionReport("growth-rate", float(best.mid), float(thr.mid),
                           fires, window, rows, flags)


def criterion_thm2(word, q_seq, D: int, max_u: int | None = None,
                   window: tuple[int, int] | None = None) -> CriterionReport:
    """Stammering criterion: stammer_statistic(word) versus
    (3D/2) log B_est / log b_est.

    The right side uses the windowed growth estimates (finite proxies for
    limsup/liminf q_n^(1/n)); b_est <= 1 would contradict the established
    growth floor and is flagged instead of divided by.
    """
    from .convergents import growth_stats
    N = len(q_seq) - 1
    if window is None:
        window = (max(1, N // 2), N)
    if not all(isinstance(q, FieldElement) for q in q_seq):
        raise TypeError("q_seq must hold field elements (use an expansion)")
    lhs = stammer_statistic(word, max_u=max_u)
    rep = best_repetition(word, max_u=max_u)
    flags = []
    rows: list[dict] = []
    gs = growth_stats(list(q_seq), window_start=window[0])
    if not math.isfinite(gs.b_est) or gs.b_est <= 1:
        flags.append("b_est <= 1: growth window too short for the "
                     "denominator floor; rhs undefined")
        return CriterionReport("stammering", float(lhs), float("nan"),
                               False, window, rows, flags)
    rhs = (3 * D / 2) * math.log(gs.B_est) / math.log(gs.b_est)
    if rep is not None and rep.u == 0:
        flags.append("maximizing repetition has u = 0: with b = B the "
                     "inequality reduces to w > 3D/2")
    fires = float(lhs) > rhs
    rows = [{
        "best_u": rep.u if rep else None,
        "best_v": rep.v if rep else None,
        "best_w": str(rep.w) if rep else None,
        "lhs": float(lhs),
        "b_est": gs.b_est,
        "B_est": gs.B_est,
        "rhs": rhs,
    }]
    return CriterionReport("stammering", float(lhs), rhs, fires,
                           window, rows, flags)


def growth_csv(q_seq, prec: int = 64) -> str:
    """CSV rows (n, q_n, q_n^(1/n), loglog q_n / n) for q_1 onward."""
    lines = ["n,q_n,q_n_nth_root,loglog_q_over_n"]
    for n in range(1, len(q_seq)):
        lg = _q_log_interval(q_seq[n], prec)
        mid = float(lg.mid)
        root = math.exp(mid / n)
        loglog = math.log(mid) / n if mid > 1 else float("nan")
        lines.append(f"{n},{q_seq[n]},{root:.9g},{loglog:.9g}")
    return "\n".join(lines) + "\n"

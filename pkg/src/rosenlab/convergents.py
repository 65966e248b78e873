"""Convergent recurrences, growth constants, and approximation quality.

Convergents follow the matrix seed (p_-1 p_0; q_-1 q_0) = identity and

    p_n = lam r_n p_{n-1} + eps_n p_{n-2},
    q_n = lam r_n q_{n-1} + eps_n q_{n-2},

so |p_{n-1} q_n - q_{n-1} p_n| = 1 throughout.  The growth side collects
the effective constants: the natural-extension height R (1 for even m,
else the positive root of R^2 + (2-lam) R - 1 = 0), the error constants
c1 = 2/(2 - R lam) and c2 = 1/2 + ceil(m/4), and the ladder

    q_n >= lam^s(n),  s(n) = 1 + floor((n-1)/(h+1)),
    q_{n+h+1} >= lam q_n,

with h = run_bound(m).  Everything that can be decided by an exact sign
test is; only the odd-m constants involving R need certified intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .field import FieldDescriptor, FieldElement, sign
from .intervals import RatInterval, decimal_str, sqrt_interval
from .rosen import PartialQuotient, Word, evaluate, run_bound


@dataclass(frozen=True)
class ConvergentState:
    """(p_{n-1}, p_n, q_{n-1}, q_n) after consuming n partial quotients."""

    n: int
    p_prev: FieldElement
    p: FieldElement
    q_prev: FieldElement
    q: FieldElement

    def advance(self, pq: PartialQuotient) -> "ConvergentState":
        rl = self.p.desc.lam() * pq.r
        return ConvergentState(
            self.n + 1,
            self.p, rl * self.p + pq.eps * self.p_prev,
            self.q, rl * self.q + pq.eps * self.q_prev)

    def determinant(self) -> FieldElement:
        return self.p_prev * self.q - self.q_prev * self.p

    def ratio(self) -> FieldElement:
        """p_n / q_n."""
        return self.p / self.q


def seed(desc: FieldDescriptor) -> ConvergentState:
    one, zero = desc.one(), desc.zero()
    return ConvergentState(0, one, zero, zero, one)


def advance(state: ConvergentState, pq: PartialQuotient) -> ConvergentState:
    return state.advance(pq)


def convergents_of(word, desc: FieldDescriptor) -> list[ConvergentState]:
    """States for n = 0..len(word) (index n holds p_n, q_n)."""
    states = [seed(desc)]
    for pq in word:
        states.append(states[-1].advance(pq))
    return states


def mirror_check(word, desc: FieldDescriptor) -> bool:
    """q_{n-1}/q_n = [1:r_n, eps_n:r_{n-1}, ..., eps_2:r_1], checked exactly."""
    word = tuple(word)
    if not word:
        return True
    states = convergents_of(word, desc)
    n = len(word)
    mirrored = [PartialQuotient(1, word[-1].r)]
    for i in range(n - 2, -1, -1):
        mirrored.append(PartialQuotient(word[i + 1].eps, word[i].r))
    return evaluate(mirrored, desc=desc) == states[n].q_prev / states[n].q


# ---------------------------------------------------------------------------
# growth constants
# ---------------------------------------------------------------------------

class GrowthConstants:
    """The effective constants attached to Q(lam_m); see module docstring.

    For even m everything is exact in the field (R = 1); for odd m the
    natural-extension height R is quadratic over Q(lam) and is carried as a
    certified interval at any requested precision.
    """

    def __init__(self, desc: FieldDescriptor):
        self.desc = desc
        self.m = desc.m
        self.h = run_bound(desc.m)
        self.lam = desc.lam()
        self.c2 = Fraction(1, 2) + math.ceil(desc.m / 4)
        if desc.m % 2 == 0:
            self.R_exact: FieldElement | None = desc.one()
            self.c1_exact: FieldElement | None = 2 / (2 - self.lam)
        else:
            self.R_exact = None
            self.c1_exact = None

    def R_interval(self, prec: int = 64) -> RatInterval:
        if self.R_exact is not None:
            return RatInterval.point(1)
        lam = self.lam.interval(prec)
        b = 2 - lam  # R^2 + b R - 1 = 0, R > 0
        disc = b * b + 4
        return (sqrt_interval(disc, prec) - b) / 2

    def c1_interval(self, prec: int = 64) -> RatInterval:
        if self.c1_exact is not None:
            return self.c1_exact.interval(prec)
        return 2 / (2 - self.R_interval(prec) * self.lam.interval(prec))

    def s(self, n: int) -> int:
        """Lower growth exponent: q_n >= lam^s(n)."""
        if n < 1:
            raise ValueError("s(n) is defined for n >= 1")
        return 1 + (n - 1) // (self.h + 1)


def growth_constants(desc: FieldDescriptor) -> GrowthConstants:
    return GrowthConstants(desc)


# ---------------------------------------------------------------------------
# approximation quality
# ---------------------------------------------------------------------------

def _certified_less(lhs: FieldElement, rhs_iv, prec0: int = 64,
                    prec_cap: int = 1 << 16) -> bool:
    """lhs < rhs with rhs given as prec -> RatInterval.  Raises at the
    precision cap (cannot happen for the bounds checked here, where equality
    would force the irrational R into Q(lam))."""
    prec = prec0
    while prec <= prec_cap:
        L = lhs.interval(prec)
        R = rhs_iv(prec)
        if L.hi < R.lo:
            return True
        if L.lo > R.hi:
            return False
        prec *= 2
    raise RuntimeError("certified comparison undecided at precision cap")


@dataclass
class BoundsRow:
    n: int
    error: str            # certified decimal of |x - p_n/q_n|
    lower_ok: bool
    upper_c1_ok: bool
    upper_c2_ok: bool


@dataclass
class BoundsReport:
    m: int
    rows: list[BoundsRow]
    ok: bool

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "ok": self.ok,
            "rows": [vars(r) for r in self.rows],
        }


def approx_bound_check(x: FieldElement, states: list[ConvergentState],
                       gc: GrowthConstants | None = None) -> BoundsReport:
    """Check, for each n with a successor state,

        1/(q_n (q_{n+1} + q_n))  <  |x - p_n/q_n|  <  c1/(q_n q_{n+1})

    and |x - p_n/q_n| < c2/q_n^2.  With d_n = x q_n - p_n all three reduce
    to sign tests on |d_n| (q_{n+1} + q_n) - 1, c1 - |d_n| q_{n+1} and
    c2 - |d_n| q_n; only the odd-m c1 needs intervals.
    """
    desc = x.desc
    if gc is None:
        gc = growth_constants(desc)
    rows = []
    ok = True
    for n in range(len(states) - 1):
        st, nxt = states[n], states[n + 1]
        d = (x * st.q - st.p).abs_value()
        lower_ok = sign(d * (nxt.q + st.q) - 1) > 0
        if gc.c1_exact is not None:
            upper1_ok = sign(gc.c1_exact - d * nxt.q) > 0
        else:
            upper1_ok = _certified_less(d * nxt.q, gc.c1_interval)
        upper2_ok = sign(gc.c2 - d * st.q) > 0
        err = d / st.q
        rows.append(BoundsRow(n, decimal_str(err.interval(96)),
                              lower_ok, upper1_ok, upper2_ok))
        ok = ok and lower_ok and upper1_ok and upper2_ok
    return BoundsReport(desc.m, rows, ok)


# ---------------------------------------------------------------------------
# growth statistics
# ---------------------------------------------------------------------------

def _log_element(q: FieldElement) -> float:
    iv = q.interval(64)
    mid = iv.mid
    if mid <= 0:
        raise ValueError("log of a nonpositive value")
    return math.log(mid.numerator) - math.log(mid.denominator)


@dataclass
class GrowthStats:
    b_est: float
    B_est: float
    window: tuple[int, int]
    roots: list[float]          # q_n^(1/n) for n >= 1
    increasing_ok: bool
    ladder_ok: bool             # q_n >= lam^s(n)
    spaced_ok: bool             # q_{n+h+1} >= lam q_n
    failures: list[str]

    @property
    def lemma_ok(self) -> bool:
        return self.increasing_ok and self.ladder_ok and self.spaced_ok

    def to_json(self) -> dict:
        return {
            "b_est": self.b_est,
            "B_est": self.B_est,
            "window": list(self.window),
            "increasing_ok": self.increasing_ok,
            "ladder_ok": self.ladder_ok,
            "spaced_ok": self.spaced_ok,
            "failures": self.failures,
        }


def growth_stats(q_seq: list[FieldElement], gc: GrowthConstants | None = None,
                 window_start: int = 5) -> GrowthStats:
    """Growth diagnostics for a denominator sequence q_0, q_1, ...

    b_est / B_est are the min/max of q_n^(1/n) over the tail window -- they
    are finite-scale stand-ins for liminf/limsup q_n^(1/n), nothing more.
    The ladder and spacing inequalities are checked exactly.
    """
    if gc is None:
        gc = growth_constants(q_seq[0].desc)
    lam = gc.lam
    N = len(q_seq) - 1
    failures = []

    increasing_ok = True
    for n in range(1, N + 1):
        if sign(q_seq[n] - q_seq[n - 1]) <= 0:
            increasing_ok = False
            failures.append(f"q_{n} <= q_{n - 1}")

    ladder_ok = True
    for n in range(1, N + 1):
        if sign(q_seq[n] - lam ** gc.s(n)) < 0:
            ladder_ok = False
            failures.append(f"q_{n} < lam^s({n})")

    spaced_ok = True
    for n in range(0, N + 1):
        if n + gc.h + 1 <= N:
            if sign(q_seq[n + gc.h + 1] - lam * q_seq[n]) < 0:
                spaced_ok = False
                failures.append(f"q_{n + gc.h + 1} < lam q_{n}")

    roots = []
    lo = max(1, window_start)
    b_est = math.inf
    B_est = -math.inf
    for n in range(1, N + 1):
        root = math.exp(_log_element(q_seq[n]) / n)
        roots.append(root)
        if n >= lo:
            b_est = min(b_est, root)
            B_est = max(B_est, root)
    if not math.isfinite(b_est):
        b_est = B_est = float("nan")
    return GrowthStats(b_est, B_est, (lo, N), roots,
                       increasing_ok, ladder_ok, spaced_ok, failures)

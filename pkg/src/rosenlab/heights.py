"""Heights of algebraic numbers and values of ultimately periodic expansions.

Three strands live here:

* naive and logarithmic Weil heights, computed from the primitive minimal
  polynomial via the Mahler-measure formula.  All the conjugates we need
  come from exact field embeddings (for elements of Q(lam)) or from
  per-embedding quadratics (for surds of degree 2 over the field), so the
  height enclosures are certified;
* the conjugate-domination constant c3 = min_sigma |sigma(lam)|/lam and
  the checks q_n >= c3 |sigma(q_n)|, |p_n| >= c3 |sigma(p_n)| for n >= n0
  (n0 = first index with q_n > 2), plus the empirical convergent height
  bound H(p_n/q_n) <= c4 q_n^D;
* exact values of ultimately periodic words: the value alpha of the word
  with preperiod mu and period nu is fixed by M = M_{mu+nu} M_mu^{-1}, so
  it is a root of f(x) = c x^2 + (d-a) x - b where (a b; c d) = M.  The
  root is pinned down by a certified enclosure of the limit of convergents;
  degenerate periods (c = 0, or discriminant a square in the field) give
  exact field elements, the rest a QuadraticSurd.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .convergents import ConvergentState, convergents_of
from .field import (FieldDescriptor, FieldElement, apply_embedding,
                    minimal_polynomial, norm_polynomial,
                    poly_primitive, sign, sqrt_in_field)
from .intervals import RatInterval, decimal_str, log_interval, sqrt_interval
from .rosen import check_admissible, run_bound


class PeriodicWordError(ValueError):
    """The word does not define a genuine ultimately periodic expansion."""


# ---------------------------------------------------------------------------
# polynomial utilities (over Q, used for minimal polynomials of surds)
# ---------------------------------------------------------------------------

def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = num[:]
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        coef = num[-1] / den[-1]
        shift = len(num) - len(den)
        q[shift] = coef
        for i, dc in enumerate(den):
            num[shift + i] -= coef * dc
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return q, num


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = a[:], b[:]
    while any(c != 0 for c in b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


def squarefree_part(coeffs) -> tuple[int, ...]:
    """Primitive squarefree part of an integer polynomial (radical)."""
    f = [Fraction(c) for c in coeffs]
    if len(f) < 2:
        return poly_primitive(f)
    deriv = [i * f[i] for i in range(1, len(f))]
    g = _poly_gcd(f, deriv)
    q, r = _poly_divmod(f, g)
    if any(c != 0 for c in r):
        raise ArithmeticError("gcd did not divide its polynomial")
    return poly_primitive(q)


# ---------------------------------------------------------------------------
# quadratic surds over the field
# ---------------------------------------------------------------------------

class QuadraticSurd:
    """Real root A x^2 + B x + C = 0, degree 2 over Q(lam), with a branch.

    The value is (-B + branch * sqrt(disc)) / (2A) with disc = B^2 - 4AC > 0
    and disc not a square in the field (the constructor checks both).
    """

    __slots__ = ("desc", "A", "B", "C", "branch", "_disc", "_minpoly")

    def __init__(self, A: FieldElement, B: FieldElement, C: FieldElement,
                 branch: int):
        if A.is_zero():
            raise ValueError("leading coefficient must be nonzero")
        if branch not in (1, -1):
            raise ValueError("branch must be +1 or -1")
        self.desc = A.desc
        self.A, self.B, self.C = A, B, C
        self.branch = branch
        self._disc = B * B - 4 * A * C
        if sign(self._disc) <= 0:
            raise ValueError("discriminant must be positive")
        if sqrt_in_field(self._disc) is not None:
            raise ValueError("discriminant is a square: value lies in the "
                             "field, use the exact element instead")
        self._minpoly: tuple[int, ...] | None = None

    @property
    def disc(self) -> FieldElement:
        return self._disc

    def degree_over_field(self) -> int:
        return 2

    def conjugate_over_field(self) -> "QuadraticSurd":
        return QuadraticSurd(self.A, self.B, self.C, -self.branch)

    def interval(self, prec: int = 64) -> RatInterval:
        p = prec
        while True:
            div = self._disc.interval(p)
            aiv = self.A.interval(p)
            if div.lo > 0 and not aiv.contains_zero():
                break
            p *= 2
        root = sqrt_interval(div, p)
        return (self.branch * root - self.B.interval(p)) / (2 * aiv)

    def min_poly(self) -> tuple[int, ...]:
        """Primitive minimal polynomial over Z (ascending coefficients)."""
        if self._minpoly is None:
            norm = norm_polynomial([self.C, self.B, self.A])
            self._minpoly = squarefree_part(norm)
        return self._minpoly

    def degree(self) -> int:
        return len(self.min_poly()) - 1

    def to_json(self) -> dict:
        return {
            "kind": "quadratic-surd",
            "m": self.desc.m,
            "quadratic": [self.A.to_json(), self.B.to_json(),
                          self.C.to_json()],
            "branch": self.branch,
            "min_poly": list(self.min_poly()),
        }

    def __repr__(self):
        s = "+" if self.branch > 0 else "-"
        return (f"QuadraticSurd(({self.A})x^2 + ({self.B})x + ({self.C}), "
                f"branch {s})")


# ---------------------------------------------------------------------------
# heights
# ---------------------------------------------------------------------------

def minimal_polynomial_of(value) -> tuple[int, ...]:
    if isinstance(value, QuadraticSurd):
        return value.min_poly()
    return minimal_polynomial(value)


def naive_height(value) -> int:
    """Largest |coefficient| of the primitive minimal polynomial over Z."""
    return max(abs(c) for c in minimal_polynomial_of(value))


def algebraic_degree(value) -> int:
    return len(minimal_polynomial_of(value)) - 1


def _log_above_one(el: FieldElement, prec: int) -> RatInterval:
    """log of a field element known (exactly) to exceed 1."""
    p = prec
    while True:
        iv = el.interval(p)
        if iv.lo > 1:
            return log_interval(iv, p)
        p *= 2


def _log_plus_element(el: FieldElement, prec: int) -> RatInterval:
    """log^+ |el| = log max(1, |el|), certified; el any field element."""
    a = el.abs_value()
    s = sign(a - 1)
    if s <= 0:
        return RatInterval.point(0)
    return _log_above_one(a, prec)


def _embedding_quadratic(surd: QuadraticSurd, k: int):
    return (apply_embedding(surd.A, k), apply_embedding(surd.B, k),
            apply_embedding(surd.C, k))


def _log_plus_real_pair(A: FieldElement, B: FieldElement, C: FieldElement,
                        prec: int) -> RatInterval:
    """Sum of log^+ |root| over both real roots of A x^2 + B x + C.

    Roots live in a quadratic extension, so |root| vs 1 cannot be a plain
    field sign test; the ties root = +-1 are detected exactly via f(+-1) = 0
    and the rest is decided by shrinking intervals.
    """
    at_one = A + B + C
    at_neg = A - B + C
    if at_one.is_zero() or at_neg.is_zero():
        # one root is +-1 (log^+ = 0); the other is C/A / (+-1) = +-C/A
        other = C / A
        if at_one.is_zero() and at_neg.is_zero():
            return RatInterval.point(0)       # roots are exactly {1, -1}
        return _log_plus_element(other, prec)
    total = RatInterval.point(0)
    disc = B * B - 4 * A * C
    for sgn in (1, -1):
        q = prec
        while True:
            div = disc.interval(q)
            aiv = A.interval(q)
            if div.lo > 0 and not aiv.contains_zero():
                riv = (sgn * sqrt_interval(div, q) - B.interval(q)) / (2 * aiv)
                mag = abs(riv)
                if mag.hi < 1:
                    break
                if mag.lo > 1:
                    total = total + log_interval(mag, q)
                    break
            q *= 2
    return total


def weil_height(value, prec: int = 96) -> RatInterval:
    """Certified enclosure of the logarithmic Weil height.

    h = (1/d) log(lead) + (1/d) * sum over roots of the primitive minimal
    polynomial of log^+ |root| -- evaluated through exact embeddings, where
    each distinct root appears with known multiplicity, so the embedding sum
    divided by the embedding count equals the root sum divided by d.
    """
    if isinstance(value, FieldElement):
        if value.is_zero():
            return RatInterval.point(0)
        desc = value.desc
        mp = minimal_polynomial(value)
        d = len(mp) - 1
        lead = mp[-1]
        total = RatInterval.point(0)
        if lead > 1:
            total = total + log_interval(RatInterval.point(Fraction(lead)),
                                         prec) / d
        emb_sum = RatInterval.point(0)
        for k in range(desc.degree):
            emb_sum = emb_sum + _log_plus_element(apply_embedding(value, k),
                                                  prec)
        return total + emb_sum / desc.degree

    surd = value
    desc = surd.desc
    mp = surd.min_poly()
    d = len(mp) - 1
    lead = mp[-1]
    total = RatInterval.point(0)
    if lead > 1:
        total = total + log_interval(RatInterval.point(Fraction(lead)),
                                     prec) / d
    emb_sum = RatInterval.point(0)
    for k in range(desc.degree):
        Ak, Bk, Ck = _embedding_quadratic(surd, k)
        dk = Bk * Bk - 4 * Ak * Ck
        s = sign(dk)
        if s > 0:
            emb_sum = emb_sum + _log_plus_real_pair(Ak, Bk, Ck, prec)
        elif s == 0:
            emb_sum = emb_sum + 2 * _log_plus_element(-Bk / (2 * Ak), prec)
        else:
            # complex pair: |root|^2 = |C/A|, so the pair contributes
            # log^+ |C/A| in total
            emb_sum = emb_sum + _log_plus_element(Ck / Ak, prec)
    return total + emb_sum / (2 * desc.degree)


def height_relation_check(value, prec: int = 96,
                          prec_cap: int = 1 << 14) -> bool:
    """Certify log H(a) <= deg(a) * h(a) + log 2."""
    H = naive_height(value)
    d = algebraic_degree(value)
    p = prec
    while p <= prec_cap:
        lhs = log_interval(RatInterval.point(Fraction(H)), p)
        rhs = d * weil_height(value, p) + log_interval(
            RatInterval.point(Fraction(2)), p)
        if lhs.hi <= rhs.lo:
            return True
        if lhs.lo > rhs.hi:
            return False
        p *= 2
    raise RuntimeError("height relation undecided at precision cap")


# ---------------------------------------------------------------------------
# conjugate domination (c3) and convergent height bounds (c4)
# ---------------------------------------------------------------------------

def c3_exact(desc: FieldDescriptor) -> FieldElement:
    """min over embeddings of |sigma(lam)|/lam, as an exact field element."""
    best: FieldElement | None = None
    for k in range(desc.degree):
        cand = apply_embedding(desc.lam(), k).abs_value()
        if best is None or sign(cand - best) < 0:
            best = cand
    return best / desc.lam()


def c3_constant(desc: FieldDescriptor, prec: int = 64) -> RatInterval:
    return c3_exact(desc).interval(prec)


def _certified_float(el: FieldElement, rel_bits: int = 30) -> float:
    """Float estimate whose enclosure was refined to ~rel_bits relative
    width first.

    Fixed-precision evaluation of elements like H/q^D suffers catastrophic
    cancellation (huge coordinates, tiny value), which would make the
    midpoint pure rounding noise; refining until the interval is narrow
    relative to its midpoint makes every reported digit meaningful.
    """
    p = 64
    while True:
        iv = el.interval(p)
        if iv.width == 0:
            return float(iv.mid)
        scale = abs(iv.mid)
        if scale != 0 and iv.width <= scale / (1 << rel_bits):
            return float(iv.mid)
        if scale == 0 and iv.width < Fraction(1, 10 ** 60):
            return 0.0
        p *= 2


def _first_index_q_above(states: list[ConvergentState],
                         bound: int) -> int | None:
    for n, st in enumerate(states):
        if sign(st.q - bound) > 0:
            return n
    return None


@dataclass
class DominationRow:
    n: int
    q_ok: bool
    p_ok: bool
    conjectured_q_ok: bool      # the stronger variant with c3 replaced by 1
    margin: float               # min over embeddings of q_n - c3 |sigma(q_n)|


@dataclass
class HeightReport:
    m: int
    n0: int | None
    c3: str
    rows: list[DominationRow]
    ok: bool
    conjectured_ok: bool

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n0": self.n0,
            "c3": self.c3,
            "ok": self.ok,
            "conjectured_ok": self.conjectured_ok,
            "rows": [vars(r) for r in self.rows],
        }


def domination_check(states: list[ConvergentState]) -> HeightReport:
    """Check q_n >= c3 |sigma(q_n)| and |p_n| >= c3 |sigma(p_n)| for n >= n0.

    n0 is the first index with q_n > 2 (exact comparison).  For expansions of
    positive values p_n >= 0, so the |p_n| on the left is the literal
    numerator statement; for negative values it is the sign-symmetric form
    proved by the same growing-trace argument.  The conjectured strengthening
    with c3 = 1 (denominators only) is tracked separately and its failures do
    not affect `ok`.
    """
    desc = states[0].q.desc
    c3 = c3_exact(desc)
    n0 = _first_index_q_above(states, 2)
    rows = []
    ok = True
    conj_ok = True
    if n0 is not None:
        for n in range(n0, len(states)):
            st = states[n]
            q_ok = p_ok = cq_ok = True
            margin: FieldElement | None = None
            for k in range(desc.degree):
                sq = apply_embedding(st.q, k).abs_value()
                sp = apply_embedding(st.p, k).abs_value()
                gap = st.q - c3 * sq
                if sign(gap) < 0:
                    q_ok = False
                if sign(st.p.abs_value() - c3 * sp) < 0:
                    p_ok = False
                if sign(st.q - sq) < 0:
                    cq_ok = False
                if margin is None or sign(gap - margin) < 0:
                    margin = gap
            rows.append(DominationRow(
                n, q_ok, p_ok, cq_ok,
                _certified_float(margin)))
            ok = ok and q_ok and p_ok
            conj_ok = conj_ok and cq_ok
    return HeightReport(desc.m, n0, decimal_str(c3.interval(96)), rows,
                        ok, conj_ok)


@dataclass
class HeightBoundRow:
    n: int
    H: int
    ratio: float                # H(p_n/q_n) / q_n^D
    running_max: float


@dataclass
class HeightBoundReport:
    m: int
    n0: int | None
    rows: list[HeightBoundRow]
    c4_emp: float

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n0": self.n0,
            "c4_emp": self.c4_emp,
            "rows": [vars(r) for r in self.rows],
        }


def height_bound_check(states: list[ConvergentState]) -> HeightBoundReport:
    """Measure H(p_n/q_n)/q_n^D for n >= n0 and report the running max.

    The bound H <= c4 q_n^D holds with an inexplicit c4; boundedness of the
    ratio is the monitored invariant, c4_emp the observed constant.
    """
    desc = states[0].q.desc
    D = desc.degree
    n0 = _first_index_q_above(states, 2)
    rows = []
    c4 = 0.0
    if n0 is not None:
        for n in range(max(n0, 1), len(states)):
            st = states[n]
            H = naive_height(st.p / st.q)
            denom = st.q ** D
            ratio = _certified_float(H * denom.inverse())
            c4 = max(c4, ratio)
            rows.append(HeightBoundRow(n, H, ratio, c4))
    return HeightBoundReport(desc.m, n0, rows, c4)


# ---------------------------------------------------------------------------
# values of ultimately periodic words
# ---------------------------------------------------------------------------

def _unrolled(word, mu: int, nu: int, copies: int):
    word = list(word)
    return word[:mu] + word[mu:mu + nu] * copies


def _check_periodic_admissible(word, mu: int, nu: int, m: int) -> None:
    h = run_bound(m)
    copies = max(3, (h + nu) // nu + 1)
    if not check_admissible(_unrolled(word, mu, nu, copies), m):
        raise PeriodicWordError(
            "ultimately periodic word violates the (-1,1) run bound")


def _period_trace_det(word, mu: int, nu: int,
                      desc: FieldDescriptor) -> tuple[FieldElement, int]:
    """Trace and determinant of the period-product matrix P = M_mu^{-1}
    M_{mu+nu} (conjugation-invariant, so shared by every period rotation)."""
    sts = convergents_of(list(word)[:mu + nu], desc)
    sm, sn = sts[mu], sts[mu + nu]
    det_m = int(sm.determinant().as_fraction())
    det_n = int(sn.determinant().as_fraction())
    tau = det_m * (sm.q * sn.p_prev - sm.p * sn.q_prev
                   + sm.p_prev * sn.q - sm.q_prev * sn.p)
    return tau, det_m * det_n


def _contraction_factor(abs_tau: FieldElement) -> Fraction:
    """A rational c > 1 with c^2 - |tau| c + 1 <= 0 (certified exactly).

    Such a c lies between the roots of the quadratic, so |v_{k+1}| >=
    |tau| |v_k| - |v_{k-1}| >= c |v_k| propagates along any sequence with
    v_{k+1} = tau v_k -+ v_{k-1} once one ratio reaches c.  Requires
    |tau| > 2 (checked by the caller).
    """
    p = 64
    while True:
        ti = abs_tau.interval(p)
        di = ti * ti - 4
        if di.lo > 0:
            c = ((ti + sqrt_interval(di, p)) / 2).lo
            if c > 1 and sign(abs_tau * c - (c * c + 1)) >= 0:
                return c
        p *= 2


def periodic_limit_enclosure(word, mu: int, nu: int, desc: FieldDescriptor,
                             target_width: Fraction,
                             max_copies: int = 3000) -> RatInterval:
    """Certified enclosure of the limit of the unrolled word's convergents.

    Self-certifying: no growth lemma about genuine expansions is assumed.
    Consecutive convergents differ by exactly 1/(q_n q_{n+1}) (determinant
    +-1), and by Cayley-Hamilton the q's along each period offset satisfy
    v_{k+1} = tau v_k - delta v_{k-1} with tau, delta the trace and
    determinant of the period-product matrix.  Once every offset's ratio
    |q_n| / |q_{n-nu}| reaches a certified root c > 1 of c^2 - |tau| c + 1
    <= 0, that growth persists, and the telescoped tail is bounded by a
    geometric series -- an exact radius around the current convergent.

    Words whose period matrix is not hyperbolic (no such c exists, or the
    ratios never reach it) are rejected with PeriodicWordError: their
    convergents do not contract geometrically and the word is not realized
    by any expansion.
    """
    letters = list(word)
    prefix = letters[:mu]
    period = letters[mu:mu + nu]
    tau, delta = _period_trace_det(letters, mu, nu, desc)
    if delta == -1:
        # square the period: P^2 has determinant +1 and trace tau^2 + 2
        if tau.is_zero():
            raise PeriodicWordError(
                "period matrix is an involution: convergents oscillate")
        eff_nu = 2 * nu
        abs_tau = tau * tau + 2
    else:
        eff_nu = nu
        abs_tau = tau.abs_value()
    if sign(abs_tau - 2) <= 0:
        raise PeriodicWordError(
            "period matrix is not hyperbolic (|trace| <= 2): the word's "
            "convergents do not contract geometrically, so it is not the "
            "expansion of any value")
    c = _contraction_factor(abs_tau)
    geo = c * c / (c * c - 1)

    from .convergents import seed
    st = seed(desc)
    for pq in prefix:
        st = st.advance(pq)
    # rolling window of the last 2*eff_nu + 1 denominators |q_i|
    window: list[FieldElement] = [st.q.abs_value()]
    letters_done = 0
    prec = 64
    growing = False
    while letters_done < max_copies * eff_nu:
        for pq in period:
            st = st.advance(pq)
            window.append(st.q.abs_value())
        letters_done += nu
        if len(window) > 2 * eff_nu + 1:
            del window[:len(window) - (2 * eff_nu + 1)]
        if len(window) < 2 * eff_nu + 1 or letters_done % eff_nu != 0:
            continue
        # vals[i] = |q| at letter (current - 2*eff_nu + i); the peek entry
        # vals[2*eff_nu + 1] = |q_{n+1}| completes the last telescoped pair
        vals = window + [st.advance(period[0]).q.abs_value()]
        if not growing:
            growing = (
                all(sign(v) > 0 for v in vals[eff_nu + 1:])
                and all(sign(vals[i] - c * vals[i - eff_nu]) >= 0
                        for i in range(eff_nu + 1, 2 * eff_nu + 2)))
            if not growing:
                continue
        # tail bound: |x - x_n| <= sum_{i=n-eff_nu+1..n} 1/(|q_i||q_{i+1}|)
        # * c^2/(c^2-1), since each certified pair keeps growing by >= c
        # per period and eff_nu+1 consecutive indices cover every offset
        S = Fraction(0)
        ok = True
        for i in range(eff_nu + 1, 2 * eff_nu + 1):
            prod = (vals[i] * vals[i + 1]).interval(prec)
            if prod.lo <= 0:
                ok = False
                break
            S += 1 / prod.lo
        if not ok:
            prec *= 2
            continue
        rad = S * geo
        if 2 * rad >= target_width:
            continue
        while True:
            center = (st.p / st.q).interval(prec)
            if center.width + 2 * rad <= target_width:
                return RatInterval(center.lo - rad, center.hi + rad)
            prec *= 2
    raise PeriodicWordError(
        "convergents of the unrolled word never entered certified "
        "geometric growth; the word is not realized by any expansion")


def _contains_exact(iv: RatInterval, x: FieldElement) -> bool:
    return sign(x - iv.lo) >= 0 and sign(iv.hi - x) >= 0


def periodic_value(word, mu: int, nu: int, desc: FieldDescriptor):
    """Exact value of the ultimately periodic word (preperiod mu, period nu).

    Returns a FieldElement when the fixed-point quadratic degenerates
    (linear, double root, or square discriminant), else a QuadraticSurd.
    The root of c x^2 + (d-a) x - b matching the word is selected against a
    certified enclosure of the limit of convergents, which doubles as an
    internal consistency check.
    """
    word = list(word)
    if nu < 1:
        raise PeriodicWordError("period length must be >= 1")
    if mu < 0 or len(word) < mu + nu:
        raise PeriodicWordError("word must contain mu + nu letters")
    _check_periodic_admissible(word, mu, nu, desc.m)

    states = convergents_of(word[:mu + nu], desc)
    sm, sn = states[mu], states[mu + nu]
    det = int(sm.determinant().as_fraction())
    # M = M_{mu+nu} M_mu^{-1}; the value of the word is its fixed point
    a = (sn.p_prev * sm.q - sn.p * sm.q_prev) * det
    b = (sn.p * sm.p_prev - sn.p_prev * sm.p) * det
    c = (sn.q_prev * sm.q - sn.q * sm.q_prev) * det
    d = (sn.q * sm.p_prev - sn.q_prev * sm.p) * det

    A, B, C = c, d - a, -b
    tol = Fraction(1, 10 ** 40)

    if A.is_zero():
        if B.is_zero():
            raise PeriodicWordError(
                "period matrix is a translation: no finite fixed point")
        # the value is algebraically exact; the enclosure (which certifies
        # its own geometric contraction) serves as a consistency check
        value = -C / B
        enc = periodic_limit_enclosure(word, mu, nu, desc,
                                       Fraction(1, 10 ** 6))
        if not _contains_exact(enc, value):
            raise ArithmeticError(
                "fixed point does not match the certified limit")
        return value

    disc = B * B - 4 * A * C
    sd = sign(disc)
    if sd < 0:
        raise PeriodicWordError(
            "period matrix is elliptic: no real fixed point")
    if sd == 0:
        # trace^2 = 4 det: a parabolic period; its fixed point has a finite
        # expansion, so no genuine expansion repeats this period
        raise PeriodicWordError(
            "period matrix is parabolic: the word is not realized by any "
            "expansion (convergents contract only linearly)")

    root = sqrt_in_field(disc)
    # the two fixed points are separated by sqrt(disc)/|A|; shrink the limit
    # enclosure below that gap so exactly one root can match
    p = 96
    while disc.interval(p).lo <= 0 or abs(A.interval(p)).lo <= 0:
        p *= 2
    sep = sqrt_interval(disc.interval(p), p).lo / abs(A.interval(p)).hi
    width = min(tol, sep / 4)
    enc = periodic_limit_enclosure(word, mu, nu, desc, width)
    if root is not None:
        r1 = (-B + root) / (2 * A)
        r2 = (-B - root) / (2 * A)
        in1, in2 = _contains_exact(enc, r1), _contains_exact(enc, r2)
        if in1 == in2:
            raise ArithmeticError(
                "root selection against the certified limit failed")
        return r1 if in1 else r2

    for branch in (1, -1):
        surd = QuadraticSurd(A, B, C, branch)
        prec = 96
        while True:
            iv = surd.interval(prec)
            if iv.hi < enc.lo or iv.lo > enc.hi:
                break               # certified outside: wrong branch
            if iv.width < enc.width:
                return surd         # overlaps at comparable width: matched
            prec *= 2
    raise ArithmeticError("neither branch matches the certified limit")


def periodic_height_data(word, mu: int, nu: int,
                         desc: FieldDescriptor) -> dict:
    """Value, heights, and the Lemma-style ratio H(alpha)/(q_mu q_{mu+nu})^D."""
    value = periodic_value(word, mu, nu, desc)
    states = convergents_of(list(word)[:mu + nu], desc)
    base = (states[mu].q * states[mu + nu].q) ** desc.degree
    H = naive_height(value)
    ratio = _certified_float(H * base.inverse())
    return {
        "value": value,
        "degree_over_field": (value.degree_over_field()
                              if isinstance(value, QuadraticSurd) else 1),
        "H": H,
        "min_poly": list(minimal_polynomial_of(value)),
        "q_mu": states[mu].q,
        "q_mu_nu": states[mu + nu].q,
        "ratio": ratio,
    }

"""The Rosen continued fraction map and exact expansions.

The map acts on the half-open fundamental interval [-lam/2, lam/2) by

    T(x) = |1/x| - lam * floor(|1/(lam x)| + 1/2),

emitting the partial quotient (eps, r) = (sgn x, floor(|1/(lam x)| + 1/2))
at each step.  All decisions (signs, floors, interval membership, orbit
collisions) are exact, so finiteness and eventual periodicity are detected
by value identity, never by numerical coincidence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .field import (FieldDescriptor, FieldElement, field_new, floor_half_shift,
                    sign)

SCHEMA = "rosen-lab/v1"


@dataclass(frozen=True)
class PartialQuotient:
    """One Rosen digit: a sign eps in {+1, -1} and an index r >= 1."""

    eps: int
    r: int

    def __post_init__(self):
        if self.eps not in (-1, 1):
            raise ValueError(f"eps must be +-1, got {self.eps}")
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")

    def __str__(self):
        return f"{'+' if self.eps > 0 else '-'}1:{self.r}"


Word = tuple[PartialQuotient, ...]

_PQ_RE = re.compile(r"^([+-])1:(\d+)$")


def parse_word(text: str) -> Word:
    """Parse the compact word format, e.g. "+1:1,+1:1,-1:2"."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for part in text.split(","):
        mobj = _PQ_RE.match(part.strip())
        if not mobj:
            raise ValueError(f"bad partial quotient {part!r} (expected eps1:r)")
        out.append(PartialQuotient(1 if mobj.group(1) == "+" else -1,
                                   int(mobj.group(2))))
    return tuple(out)


def format_word(word) -> str:
    return ",".join(str(pq) for pq in word)


def run_bound(m: int) -> int:
    """Longest admissible run of the digit (-1, 1): m/2 resp. (m-3)/2."""
    return m // 2 if m % 2 == 0 else (m - 3) // 2


def check_admissible(word, m: int) -> bool:
    """Run-length admissibility: no more than run_bound(m) consecutive (-1,1)."""
    h = run_bound(m)
    run = 0
    for pq in word:
        if pq.eps == -1 and pq.r == 1:
            run += 1
            if run > h:
                return False
        else:
            run = 0
    return True


# ---------------------------------------------------------------------------
# the map
# ---------------------------------------------------------------------------

_LAM_INV: dict[int, FieldElement] = {}


def _lam_inverse(desc: FieldDescriptor) -> FieldElement:
    inv = _LAM_INV.get(desc.m)
    if inv is None:
        inv = desc.lam().inverse()
        _LAM_INV[desc.m] = inv
    return inv


def in_fundamental_interval(x: FieldElement) -> bool:
    """Exact membership in [-lam/2, lam/2) (left endpoint included)."""
    lam = x.desc.lam()
    return sign(2 * x + lam) >= 0 and sign(2 * x - lam) < 0


def reduce_into_interval(x: FieldElement) -> tuple[FieldElement, int]:
    """Translate x by a multiple of lam into the fundamental interval.

    Returns (x - k*lam, k); the boundary tie x = (k - 1/2) lam lands on the
    included left endpoint, consistent with the half-open convention.
    """
    k = floor_half_shift(x * _lam_inverse(x.desc))
    return x - k * x.desc.lam(), k


def rosen_step(x: FieldElement) -> tuple[PartialQuotient, FieldElement]:
    """One application of T.  Returns ((eps, r), T(x)); x must be nonzero."""
    desc = x.desc
    eps = sign(x)
    if eps == 0:
        raise ZeroDivisionError("rosen_step at x = 0")
    inv_abs = (x if eps > 0 else -x).inverse()  # |1/x|
    r = floor_half_shift(inv_abs * _lam_inverse(desc))
    if r < 1:
        raise AssertionError("r < 1: x outside the fundamental interval?")
    tx = inv_abs - r * desc.lam()
    return PartialQuotient(eps, r), tx


class ExpansionStatus(str, Enum):
    FINITE = "finite"
    PERIODIC = "periodic"
    TRUNCATED = "truncated"


@dataclass
class ExpansionResult:
    m: int
    quotients: Word
    status: ExpansionStatus
    mu: int | None = None
    nu: int | None = None
    orbit: tuple[FieldElement, ...] | None = None

    @property
    def period(self) -> Word:
        if self.status is not ExpansionStatus.PERIODIC:
            raise ValueError("period of a non-periodic expansion")
        return self.quotients[self.mu:]

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA,
            "m": self.m,
            "status": self.status.value,
            "quotients": format_word(self.quotients),
            "length": len(self.quotients),
        }
        if self.status is ExpansionStatus.PERIODIC:
            out["mu"] = self.mu
            out["nu"] = self.nu
        if self.orbit is not None:
            out["orbit"] = [el.to_json() for el in self.orbit]
        return out


def expand(x: FieldElement, max_steps: int = 10_000,
           keep_orbit: bool = True) -> ExpansionResult:
    """Expand x exactly, detecting finiteness and eventual periodicity.

    Periodicity is found by memoizing the exact orbit values: the first
    revisited value gives the minimal preperiod mu and period nu (the orbit
    of a deterministic map first collides exactly at mu + nu).
    """
    if not in_fundamental_interval(x):
        raise ValueError("x outside the fundamental interval; "
                         "use reduce_into_interval first")
    desc = x.desc
    h = run_bound(desc.m)
    orbit = [x]
    seen = {x: 0}
    quotients: list[PartialQuotient] = []
    run = 0
    cur = x
    for n in range(max_steps):
        if cur.is_zero():
            return ExpansionResult(desc.m, tuple(quotients),
                                   ExpansionStatus.FINITE,
                                   orbit=tuple(orbit) if keep_orbit else None)
        pq, cur = rosen_step(cur)
        quotients.append(pq)
        if pq.eps == -1 and pq.r == 1:
            run += 1
            if run > h:
                raise AssertionError(
                    f"inadmissible run of (-1,1) longer than {h} generated "
                    "by the map itself; this indicates an arithmetic bug")
        else:
            run = 0
        if cur in seen:
            mu = seen[cur]
            nu = n + 1 - mu
            return ExpansionResult(desc.m, tuple(quotients),
                                   ExpansionStatus.PERIODIC, mu=mu, nu=nu,
                                   orbit=tuple(orbit) if keep_orbit else None)
        seen[cur] = n + 1
        orbit.append(cur)
    return ExpansionResult(desc.m, tuple(quotients), ExpansionStatus.TRUNCATED,
                           orbit=tuple(orbit) if keep_orbit else None)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def evaluate(word, tail: FieldElement | None = None, *,
             desc: FieldDescriptor | None = None) -> FieldElement:
    """Value of a finite word, optionally with an exact tail:

        [eps_1:r_1, ..., eps_n:r_n] with tail t  ->  M_n acting on t,
        i.e. (p_{n-1} t + p_n) / (q_{n-1} t + q_n).

    Without a tail the value is p_n / q_n.  A vanishing denominator signals an
    inadmissible word and raises ZeroDivisionError.
    """
    if tail is not None:
        desc = tail.desc
    if desc is None:
        raise ValueError("evaluate needs a tail or an explicit desc")
    lam = desc.lam()
    pp, p = desc.one(), desc.zero()
    qp, q = desc.zero(), desc.one()
    for pq in word:
        rl = lam * pq.r
        pp, p = p, rl * p + pq.eps * pp
        qp, q = q, rl * q + pq.eps * qp
    if tail is None:
        if q.is_zero():
            raise ZeroDivisionError("q_n = 0: inadmissible word")
        return p / q
    den = qp * tail + q
    if den.is_zero():
        raise ZeroDivisionError("q_{n-1} t + q_n = 0: inadmissible word/tail")
    return (pp * tail + p) / den


def natural_extension_step(x: FieldElement,
                           y: FieldElement) -> tuple[FieldElement, FieldElement]:
    """One step of the natural extension (x, y) -> (T x, 1/(r lam + eps y)).

    The second coordinate reproduces the ratios q_{n-1}/q_n when started at
    y = 0.  y must be nonnegative; the sharp invariant y <= R is a property
    of genuine orbits and is left to the test suite.
    """
    if sign(y) < 0:
        raise ValueError("y must be nonnegative")
    pq, tx = rosen_step(x)
    ny = (pq.r * x.desc.lam() + pq.eps * y).inverse()
    return tx, ny


def periodic_tail_value(period, desc: FieldDescriptor):
    """Exact value data for the purely periodic tail given by `period`.

    Thin wrapper over the quadratic fixed-point machinery (the value is a
    root of c x^2 + (d-a) x - b for the period's matrix); see
    heights.periodic_value for the full contract.
    """
    from . import heights
    return heights.periodic_value(list(period), 0, len(period), desc)

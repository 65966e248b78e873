"""The Hecke group G_m: enumeration, trace domination, column structure.

G_m is generated by T = (1 lam; 0 1) and S = (0 -1; 1 0) acting as Moebius
transformations; it is a (2, m, infinity) triangle group, so S^2 = -I and
(TS)^m = +-I.  Elements are enumerated as reduced words over {S, T, T^-1}
with projective (+-M) deduplication.

Two structural facts are exercised here:

* trace domination: any element with |tr| > 2 satisfies
  |tr(M)| >= |sigma(tr(M))| for every real embedding sigma -- checked by
  exact sign tests, including the proof-scheme products
  M_{n,j} = M_n (1 j lam; 0 1) and N_{n,j} = M_n (1 0; j lam 1) built from
  convergent matrices;
* the column split: a column (p, q) of a group element has exactly one
  entry in Z[lam^2] and the other in lam Z[lam^2].  For even m the two
  modules are the even/odd coordinate parts of Z[lam] and the dichotomy is
  sharp.  For odd m both modules coincide with all of Z[lam] (lam is a unit
  and lam itself lies in Z[lam^2]), so the literal membership test reports
  "both" everywhere; column_split detects this degeneracy and labels it
  rather than failing.

Finite Rosen expansions correspond to the parabolic points G_m * infinity;
a breadth-first orbit search provides the membership certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import invert
from .field import FieldDescriptor, FieldElement, sign
from .rosen import ExpansionStatus, expand

Mat = tuple[FieldElement, FieldElement, FieldElement, FieldElement]


def mat_mul(x: Mat, y: Mat) -> Mat:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_det(x: Mat) -> FieldElement:
    a, b, c, d = x
    return a * d - b * c


def mat_trace(x: Mat) -> FieldElement:
    return x[0] + x[3]


@dataclass(frozen=True)
class GroupElement:
    mat: Mat
    word: tuple[str, ...]

    @property
    def trace(self) -> FieldElement:
        return mat_trace(self.mat)

    def determinant(self) -> FieldElement:
        return mat_det(self.mat)

    def word_str(self) -> str:
        return ",".join(self.word)

    def to_json(self) -> dict:
        a, b, c, d = self.mat
        return {
            "word": self.word_str(),
            "matrix": [a.to_json(), b.to_json(), c.to_json(), d.to_json()],
        }


def generators(desc: FieldDescriptor) -> tuple[Mat, Mat]:
    """The translation T = (1 lam; 0 1) and inversion S = (0 -1; 1 0)."""
    one, zero, lam = desc.one(), desc.zero(), desc.lam()
    T = (one, lam, zero, one)
    S = (zero, -one, one, zero)
    return T, S


def _projective_key(mat: Mat):
    """Canonical key identifying M with -M: flip so the first nonzero entry
    is positive."""
    flip = 1
    for e in mat:
        s = sign(e)
        if s != 0:
            flip = s
            break
    return tuple((e * flip).num + ((e * flip).den,) for e in mat)


_NEXT = {
    "S": ("T", "T^-1"),
    "T": ("T", "S"),
    "T^-1": ("T^-1", "S"),
    "": ("S", "T", "T^-1"),
}


def enumerate_elements(desc: FieldDescriptor, max_word_len: int):
    """All projectively distinct elements from reduced words of length
    <= max_word_len over {S, T, T^-1} (no SS, no T T^-1 / T^-1 T).

    Yields GroupElements in breadth-first order; every element of the
    Cayley ball of this radius appears exactly once (local reduction never
    lengthens a product, so reduced words cover the ball).
    """
    if max_word_len < 1:
        return
    T, S = generators(desc)
    step = {"S": S, "T": T, "T^-1": (T[0], -T[1], T[2], T[3])}
    seen = {_projective_key((desc.one(), desc.zero(), desc.zero(),
                             desc.one()))}
    frontier: list[tuple[Mat, tuple[str, ...]]] = [
        ((desc.one(), desc.zero(), desc.zero(), desc.one()), ())]
    for _ in range(max_word_len):
        nxt = []
        for mat, word in frontier:
            last = word[-1] if word else ""
            for letter in _NEXT[last]:
                new = mat_mul(mat, step[letter])
                nxt.append((new, word + (letter,)))
                key = _projective_key(new)
                if key not in seen:
                    seen.add(key)
                    yield GroupElement(new, word + (letter,))
        frontier = nxt


@dataclass
class TraceReport:
    hypothesis_met: bool        # |tr| > 2 exactly
    ok: bool                    # |tr| >= |sigma(tr)| for every embedding
    margins: list[float]        # |tr| - |sigma(tr)| per embedding

    def dominates(self) -> bool:
        return self.ok


def trace_dominates(trace: FieldElement) -> TraceReport:
    """Exact trace-domination check for a trace value with |tr| > 2."""
    desc = trace.desc
    t = trace.abs_value()
    if sign(t - 2) <= 0:
        return TraceReport(False, True, [])
    from .field import apply_embedding
    ok = True
    margins = []
    for k in range(desc.degree):
        gap = t - apply_embedding(trace, k).abs_value()
        if sign(gap) < 0:
            ok = False
        margins.append(float(gap.interval(64).mid))
    return TraceReport(True, ok, margins)


def element_dominates(el: GroupElement) -> TraceReport:
    return trace_dominates(el.trace)


# ---------------------------------------------------------------------------
# proof-scheme products M_{n,j}, N_{n,j}
# ---------------------------------------------------------------------------

@dataclass
class ProofMatrixReport:
    checked: int
    skipped: int                # hypothesis |tr| > 2 not met
    violations: list[tuple[int, int, str]]   # (n, j, which)

    @property
    def ok(self) -> bool:
        return not self.violations


def proof_matrix_domination(states, J: int = 50) -> ProofMatrixReport:
    """Trace domination for M_n (1 j*lam; 0 1) and M_n (1 0; j*lam 1),
    j = 1..J, over the convergent matrices M_n of an expansion.

    tr M_{n,j} = (p_{n-1} + q_n) + j * lam q_{n-1} and
    tr N_{n,j} = (p_{n-1} + q_n) + j * lam p_n; both walked incrementally.
    """
    desc = states[0].q.desc
    lam = desc.lam()
    checked = skipped = 0
    violations = []
    for st in states[1:]:
        base = st.p_prev + st.q
        for which, stepv in (("M", lam * st.q_prev), ("N", lam * st.p)):
            tr = base
            for j in range(1, J + 1):
                tr = tr + stepv
                rep = trace_dominates(tr)
                if not rep.hypothesis_met:
                    skipped += 1
                    continue
                checked += 1
                if not rep.ok:
                    violations.append((st.n, j, which))
    return ProofMatrixReport(checked, skipped, violations)


# ---------------------------------------------------------------------------
# column membership in Z[lam^2] / lam Z[lam^2]
# ---------------------------------------------------------------------------

class _ColumnTester:
    """Membership in the Z-modules Z[lam^2] and lam Z[lam^2] inside Z[lam].

    Even m: the minimal polynomial is even, so the modules are exactly the
    even-/odd-coordinate sublattices.  Odd m: bases {lam^(2i)} and
    {lam^(2i+1)} (i < D) are full Q-bases; membership = integrality of the
    exact solve.  The coincidence of both modules with Z[lam] (odd m) is
    detected once per field.
    """

    _cache: dict[int, "_ColumnTester"] = {}

    def __init__(self, desc: FieldDescriptor):
        self.desc = desc
        self.parity_mode = desc.m % 2 == 0
        if not self.parity_mode:
            D = desc.degree
            lam = desc.lam()
            even_basis = [lam ** (2 * i) for i in range(D)]
            odd_basis = [lam ** (2 * i + 1) for i in range(D)]
            self.even_inv = invert(
                [[Fraction(even_basis[j].num[i]) for j in range(D)]
                 for i in range(D)])
            self.odd_inv = invert(
                [[Fraction(odd_basis[j].num[i]) for j in range(D)]
                 for i in range(D)])
            self.coincide = all(
                self._member(lam ** i, True) and self._member(lam ** i, False)
                for i in range(D))
        else:
            self.coincide = False

    @classmethod
    def of(cls, desc: FieldDescriptor) -> "_ColumnTester":
        if desc.m not in cls._cache:
            cls._cache[desc.m] = cls(desc)
        return cls._cache[desc.m]

    def _member(self, x: FieldElement, even: bool) -> bool:
        if x.den != 1:
            return False
        if self.parity_mode:
            offset = 1 if even else 0
            return all(c == 0 for c in x.num[offset::2])
        inv = self.even_inv if even else self.odd_inv
        coords = [sum(inv[i][j] * x.num[j] for j in range(self.desc.degree))
                  for i in range(self.desc.degree)]
        return all(c.denominator == 1 for c in coords)


@dataclass
class ColumnSplit:
    p_in_ring: bool             # p in Z[lam^2]
    p_in_lam_ring: bool         # p in lam Z[lam^2]
    q_in_ring: bool
    q_in_lam_ring: bool
    degenerate: bool            # both modules equal Z[lam] (odd m)
    classification: str         # "p-ring/q-lam", "p-lam/q-ring",
                                # "degenerate", or "anomalous"

    @property
    def exactly_one(self) -> bool:
        return (self.p_in_ring ^ self.p_in_lam_ring) and \
               (self.q_in_ring ^ self.q_in_lam_ring) and \
               (self.p_in_ring ^ self.q_in_ring)

    def to_json(self) -> dict:
        return vars(self)


def column_split(p: FieldElement, q: FieldElement) -> ColumnSplit:
    tester = _ColumnTester.of(p.desc)
    pr = tester._member(p, True)
    pl = tester._member(p, False)
    qr = tester._member(q, True)
    ql = tester._member(q, False)
    if tester.coincide:
        cls = "degenerate"
    elif pr and not pl and ql and not qr:
        cls = "p-ring/q-lam"
    elif pl and not pr and qr and not ql:
        cls = "p-lam/q-ring"
    else:
        cls = "anomalous"
    return ColumnSplit(pr, pl, qr, ql, tester.coincide, cls)


def modules_coincide(desc: FieldDescriptor) -> bool:
    """True iff Z[lam^2] = lam Z[lam^2] = Z[lam] (the odd-m degeneracy)."""
    return _ColumnTester.of(desc).coincide


def in_lambda_q_lambda_squared(x: FieldElement) -> bool:
    """Membership in lam * Q(lam^2) (rational coefficients allowed)."""
    desc = x.desc
    if desc.m % 2 == 1:
        return True             # Q(lam^2) = Q(lam): degenerate inclusion
    return all(c == 0 for c in x.num[0::2])


# ---------------------------------------------------------------------------
# parabolic points: the orbit G_m * infinity
# ---------------------------------------------------------------------------

def parabolic_orbit(desc: FieldDescriptor, depth: int):
    """Finite values of G_m * infinity reachable within `depth` generator
    applications (S: x -> -1/x, T^+-1: x -> x +- lam), as an exact set."""
    lam = desc.lam()
    seen_finite: set[FieldElement] = set()
    at_infinity = True
    frontier: list[FieldElement | None] = [None]     # None encodes infinity
    seen: set[FieldElement | None] = {None}
    for _ in range(depth):
        nxt = []
        for x in frontier:
            if x is None:
                images = [desc.zero()]               # S * infinity
            else:
                images = [x + lam, x - lam]
                if x.is_zero():
                    images.append(None)              # S * 0 = infinity
                else:
                    images.append(-(x.inverse()))
            for y in images:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if y is not None:
                        seen_finite.add(y)
        frontier = nxt
        if not frontier:
            break
    return seen_finite


@dataclass
class ParabolicResult:
    status: str                 # "parabolic", "not-parabolic", or "unknown"
    via_expansion: bool | None  # None when the expansion was truncated
    via_orbit: bool | None
    expansion_steps: int | None

    def to_json(self) -> dict:
        return vars(self)


def is_parabolic_value(x: FieldElement, search_depth: int = 1000,
                       orbit_depth: int = 10,
                       orbit: set | None = None) -> ParabolicResult:
    """Decide (one-sidedly) whether x is a parabolic point of G_m.

    Finite expansions and orbit membership are both positive certificates
    (they are equivalent characterizations); neither search succeeding
    within its depth only yields "unknown".  Pass a precomputed
    parabolic_orbit set to amortize the breadth-first search.
    """
    res = expand(x, max_steps=search_depth, keep_orbit=False)
    via_exp: bool | None
    if res.status is ExpansionStatus.FINITE:
        via_exp = True
    elif res.status is ExpansionStatus.PERIODIC:
        via_exp = False         # periodic never terminates: certified not
    else:
        via_exp = None
    if orbit is None:
        orbit = parabolic_orbit(x.desc, orbit_depth)
    via_orb = x in orbit or x.is_zero()
    if via_exp is False and via_orb:
        raise ArithmeticError(
            "orbit membership with a certified non-terminating expansion")
    if via_exp or via_orb:
        status = "parabolic"
    elif via_exp is False:
        status = "not-parabolic"    # a detected period certifies divergence
    else:
        status = "unknown"
    return ParabolicResult(status, via_exp, via_orb,
                           len(res.quotients) if via_exp else None)

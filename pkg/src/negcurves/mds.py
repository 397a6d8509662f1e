"""Mori Dream Space status of blowups of the enlarged family triangles.

X is a MDS iff some multiple of the class D0 = H' - hE, which is orthogonal to
the negative curve C, has a member D without C as a component. The decision
procedure reduces to the combinatorial criteria below; no divisor-class
machinery beyond the two intersection numbers is needed.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Optional

from . import geometry as geo
from .errors import BudgetExceeded, NonExactDivision, PreconditionFailed
from .families import FamilyTriangle, Kind, class_triangle, negative_curve_budget
from .laurent import LaurentPoly, exact_div, newton_polygon
from .pell import tau
from .recurrence import x_times_y_minus_one, xi_family, xi_int, xi_rat


class Status(str, enum.Enum):
    MDS = "MDS"
    NON_MDS = "NonMDS"
    UNKNOWN = "Unknown"


REASON_ALPHA_ZERO = "alpha=0: x^m(1-y)^h witness"
REASON_BETA_ZERO_INT = "beta=0: (xi_rat of tau(M,N))^K witness"
REASON_BETA_ZERO_RAT = "beta=0: xi_int(M,N) witness"
REASON_NON_MDS = "alpha,beta>0: h(b+1/K) > m^2"
REASON_OPEN = "alpha,beta>0 with N=1 (integral) or M+N=1 (rational): not decided"


class MdsVerdict:
    """Status, reason tag and (for MDS) a witness polynomial.

    The witness is built on first access: for long chains it is far more
    expensive than the verdict itself.
    """

    def __init__(self, status: Status, witness=None, reason: str = ""):
        self.status = Status(status)
        self.reason = reason
        self._witness = witness

    @property
    def witness(self) -> Optional[LaurentPoly]:
        if callable(self._witness):
            self._witness = self._witness()
        return self._witness

    def __eq__(self, other):
        if not isinstance(other, MdsVerdict):
            return NotImplemented
        return (self.status, self.reason, self.witness) == (other.status, other.reason, other.witness)

    def __repr__(self):
        return f"MdsVerdict({self.status.value}, reason={self.reason!r})"


def _check_budget(t: FamilyTriangle):
    budget = negative_curve_budget(t)
    if t.alpha + t.beta > budget:
        raise BudgetExceeded(f"alpha+beta = {t.alpha + t.beta} exceeds {budget} for {t}")


def mds_witness(t: FamilyTriangle) -> LaurentPoly:
    """A polynomial defining a member of [D0] that does not contain C."""
    if t.alpha == 0:
        return x_times_y_minus_one(t.m, t.h) * (-1) ** t.h
    if t.beta == 0:
        if t.kind is Kind.INTEGRAL:
            return xi_rat(tau(t.solution)) ** t.K
        return xi_int(t.solution)
    raise PreconditionFailed("a witness is only constructed when alpha = 0 or beta = 0")


def classify(t: FamilyTriangle) -> MdsVerdict:
    _check_budget(t)
    if t.alpha == 0:
        return MdsVerdict(Status.MDS, lambda: mds_witness(t), REASON_ALPHA_ZERO)
    if t.beta == 0:
        reason = REASON_BETA_ZERO_INT if t.kind is Kind.INTEGRAL else REASON_BETA_ZERO_RAT
        return MdsVerdict(Status.MDS, lambda: mds_witness(t), reason)
    decided = t.N > 1 if t.kind is Kind.INTEGRAL else t.M + t.N > 1
    if decided:
        return MdsVerdict(Status.NON_MDS, None, REASON_NON_MDS)
    return MdsVerdict(Status.UNKNOWN, None, REASON_OPEN)


def nonmds_inequality(t: FamilyTriangle) -> bool:
    """h (b + 1/K) > m^2 for the un-enlarged triangle."""
    return t.h * (t.b + Fraction(1, t.K)) > t.m ** 2


def _base_length(tri: geo.Triangle) -> Fraction:
    xs = [v.x for v in tri.vertices if v.y == 0]
    return max(xs) - min(xs)


def d0_intersection(t: FamilyTriangle) -> Fraction:
    """(H - mE).(H' - hE) with H.H' from scaling: H' is a dilate of H."""
    tri = t.triangle
    dual = class_triangle(t)
    ratio = _base_length(dual) / _base_length(tri)
    # H' must be the dilate of H by ``ratio`` (after translation)
    shift = geo.Point(-t.alpha, Fraction(0))
    dilated = {geo.Point((v.x - shift.x) * ratio, (v.y - shift.y) * ratio) for v in tri.vertices}
    if dilated != set(dual.vertices):
        raise AssertionError(f"class triangle {dual} is not a dilate of {tri}")
    hh = ratio * geo.twice_area(tri)
    return hh - t.m * t.h


def mixed_intersection(p: geo.Triangle, q: geo.Triangle) -> Fraction:
    """H_p . H_q as the mixed area: (|2A(p+q)| - 2A(p) - 2A(q)) / 2."""
    s = geo.minkowski_sum(p.vertices, q.vertices)
    return (geo.polygon_twice_area(s) - geo.twice_area(p) - geo.twice_area(q)) / 2


def d0_intersection_mixed(t: FamilyTriangle) -> Fraction:
    """Same number as :func:`d0_intersection`, via a Minkowski sum."""
    return mixed_intersection(t.triangle, class_triangle(t)) - t.m * t.h


def witness_in_class(t: FamilyTriangle, witness: LaurentPoly) -> bool:
    """Support of ``witness`` lies in the class triangle."""
    dual = class_triangle(t)
    return all(dual.contains(p) for p in witness.support())


def contains_curve(t: FamilyTriangle, witness: LaurentPoly) -> bool:
    """Whether the curve equation divides the witness."""
    curve = xi_family(t.kind, t.solution)
    try:
        exact_div(witness, curve)
    except NonExactDivision:
        return False
    return True


def vertex_certificate(t: FamilyTriangle, witness: LaurentPoly) -> Optional[int]:
    """Index of a vertex of the enlarged triangle missing from C's Newton polygon
    whose partner in the class triangle lies in the witness' Newton polygon.

    Vertices are matched in the order (left, right, apex). Returns None when no
    vertex certifies disjointness this way.
    """
    curve_np = newton_polygon(xi_family(t.kind, t.solution))
    wit_np = newton_polygon(witness)
    dual = class_triangle(t)
    scale = Fraction(t.m) / (t.b + t.alpha + t.beta)
    own = [(-t.alpha, Fraction(0)), (t.b + t.beta, Fraction(0)), (Fraction(t.m), Fraction(t.h))]
    partner = [(Fraction(0), Fraction(0)), (Fraction(t.m), Fraction(0)),
               (scale * (t.m + t.alpha), scale * t.h)]
    assert set(geo.Point(*p) for p in partner) == set(dual.vertices)
    for i, (v, w) in enumerate(zip(own, partner)):
        if not curve_np.contains(v) and wit_np.contains(w):
            return i
    return None

"""Sparse exact Laurent polynomials in x and y.

Coefficients are Python ints whenever they are integral and
:class:`fractions.Fraction` otherwise, so integer-coefficient arithmetic (the
common case for curve equations) stays on the fast path.
"""

from __future__ import annotations

import heapq
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence, Union

from . import geometry as geo
from .errors import NoSuchEdge, NonExactDivision, OrderBoundExceeded, ParseError, ZeroPolynomial
from .geometry import AffineLatticeMap, LatticePoint

Coefficient = Union[int, Fraction]


def _norm(c) -> Coefficient:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not supported")
    return _norm(Fraction(c))


def _div(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _norm(Fraction(a) / b)


class LaurentPoly:
    """Immutable map from exponent pairs (a, b) to nonzero rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[LatticePoint, Coefficient], Iterable, None] = None):
        clean: dict[LatticePoint, Coefficient] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (a, b), c in items:
                c = _norm(c)
                key = (int(a), int(b))
                c = clean.get(key, 0) + c
                if c:
                    clean[key] = c
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._wrap({})

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "LaurentPoly":
        return cls({(a, b): c})

    @classmethod
    def x(cls) -> "LaurentPoly":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "LaurentPoly":
        return cls.monomial(0, 1)

    # -- container protocol --------------------------------------------------

    @property
    def terms(self) -> dict[LatticePoint, Coefficient]:
        return dict(self._terms)

    def items(self):
        """Terms in lexicographic exponent order."""
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, a: int, b: int) -> Coefficient:
        return self._terms.get((a, b), 0)

    def __getitem__(self, key: LatticePoint) -> Coefficient:
        return self._terms.get(tuple(key), 0)

    def support(self) -> set[LatticePoint]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if not other:
                return LaurentPoly.zero()
            return LaurentPoly._wrap({k: _norm(c * other) for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return power(self, n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, LaurentPoly):
            return exact_div(self, other)
        return NotImplemented

    # -- helpers -----------------------------------------------------------

    def shift(self, da: int, db: int) -> "LaurentPoly":
        """Multiply by the monomial x^da y^db."""
        return LaurentPoly._wrap({(a + da, b + db): c for (a, b), c in self._terms.items()})

    def transform(self, f: AffineLatticeMap) -> "LaurentPoly":
        """Substitute exponents through an affine lattice map."""
        return LaurentPoly._wrap({f(k): c for k, c in self._terms.items()})

    def scale_to(self, key: LatticePoint, value=1) -> "LaurentPoly":
        """Rescale so that the coefficient at ``key`` equals ``value``."""
        c = self._terms.get(tuple(key), 0)
        if not c:
            raise ValueError(f"{key} is not in the support")
        return self * (Fraction(value) / c)

    def normalized(self) -> "LaurentPoly":
        """Constant term 1 if present, otherwise the lex-least term gets coefficient 1."""
        if not self._terms:
            raise ZeroPolynomial("cannot normalise the zero polynomial")
        if (0, 0) in self._terms:
            return self.scale_to((0, 0))
        return self.scale_to(min(self._terms))

    def lex_leading(self) -> tuple[LatticePoint, Coefficient]:
        k = max(self._terms)
        return k, self._terms[k]

    def bounding_box(self) -> tuple[int, int, int, int]:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no support")
        xs = [a for a, _ in self._terms]
        ys = [b for _, b in self._terms]
        return min(xs), max(xs), min(ys), max(ys)

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((c * x ** a * y ** b for (a, b), c in self._terms.items()), Fraction(0))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if len(p) > len(q):
        p, q = q, p
    acc: dict = defaultdict(int)
    qitems = list(q._terms.items())
    for (a1, b1), c1 in p._terms.items():
        for (a2, b2), c2 in qitems:
            acc[(a1 + a2, b1 + b2)] += c1 * c2
    return LaurentPoly._wrap({k: _norm(c) for k, c in acc.items() if c})


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def power(p: LaurentPoly, n: int) -> LaurentPoly:
    """p**n by repeated squaring; negative n only for monomials."""
    if n < 0:
        if len(p) != 1:
            raise ValueError("negative powers are only defined for monomials")
        (a, b), c = next(iter(p._terms.items()))
        return LaurentPoly.monomial(-a, -b, 1 / Fraction(c)) ** (-n)
    result = LaurentPoly.constant(1)
    base = p
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """The Laurent polynomial q with q * den == num.

    Division runs along the lexicographic order of exponents; the quotient's
    support is confined to the box allowed by the Newton polygons, so a
    non-exact division is detected instead of running forever.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero()
    lead_k, lead_c = den.lex_leading()
    nx0, nx1, ny0, ny1 = num.bounding_box()
    dx0, dx1, dy0, dy1 = den.bounding_box()
    qx0, qx1, qy0, qy1 = nx0 - dx0, nx1 - dx1, ny0 - dy0, ny1 - dy1
    if qx0 > qx1 or qy0 > qy1:
        raise NonExactDivision("divisor's Newton polygon does not fit in the dividend's")
    den_items = list(den._terms.items())
    rem = dict(num._terms)
    heap = [(-a, -b) for a, b in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while rem:
        na, nb = heapq.heappop(heap)
        key = (-na, -nb)
        c = rem.get(key)
        if not c:
            continue
        qa, qb = key[0] - lead_k[0], key[1] - lead_k[1]
        if not (qx0 <= qa <= qx1 and qy0 <= qb <= qy1):
            raise NonExactDivision(f"non-zero remainder term at {key}")
        qc = _div(c, lead_c)
        quot[(qa, qb)] = qc
        for (a, b), dc in den_items:
            k = (a + qa, b + qb)
            v = rem.get(k, 0) - qc * dc
            if v:
                if k not in rem:
                    heapq.heappush(heap, (-k[0], -k[1]))
                rem[k] = _norm(v)
            else:
                rem.pop(k, None)
    return LaurentPoly._wrap(quot)


# -- vanishing order at e = (1, 1) -------------------------------------------

def _integral_coefficients(p: LaurentPoly) -> list[tuple[int, int, int]]:
    den = 1
    for c in p._terms.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    return [(a, b, int(c * den)) for (a, b), c in p._terms.items()]


def moments(p: LaurentPoly, d: int) -> list[Coefficient]:
    """[sum_c c * a^s * b^(d-s) for s = 0..d] (logarithmic derivatives at e)."""
    return [_norm(sum(c * Fraction(a) ** s * Fraction(b) ** (d - s) for (a, b), c in p._terms.items()))
            for s in range(d + 1)]


def vanishing_order(p: LaurentPoly) -> int:
    """Multiplicity of the curve p = 0 at (1, 1).

    The smallest d such that some moment sum c a^s b^t with s + t = d is
    nonzero. A nonzero p has multiplicity at most width + height of its
    bounding box, which bounds the search.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes to infinite order")
    x0, x1, y0, y1 = p.bounding_box()
    bound = (x1 - x0) + (y1 - y0)
    terms = _integral_coefficients(p)
    coeffs = [c for _, _, c in terms]
    apow = [[1] for _ in terms]
    bpow = [[1] for _ in terms]
    for d in range(bound + 1):
        if d:
            for i, (a, b, _) in enumerate(terms):
                apow[i].append(apow[i][-1] * a)
                bpow[i].append(bpow[i][-1] * b)
        for s in range(d + 1):
            t = d - s
            total = 0
            for c, ap, bp in zip(coeffs, apow, bpow):
                total += c * ap[s] * bp[t]
            if total:
                return d
    raise OrderBoundExceeded(f"all moments up to degree {bound} vanish for a nonzero polynomial")


# -- Newton polygons --------------------------------------------------------

@dataclass(frozen=True)
class NewtonPolygon:
    """Counterclockwise vertex list starting at the lexicographic minimum."""

    vertices: tuple[LatticePoint, ...]

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def edges(self) -> list[tuple[LatticePoint, LatticePoint]]:
        v = self.vertices
        n = len(v)
        if n == 1:
            return []
        if n == 2:
            return [(v[0], v[1]), (v[1], v[0])]
        return [(v[i], v[(i + 1) % n]) for i in range(n)]

    def edge_with_normal(self, normal: Sequence[int]) -> tuple[LatticePoint, LatticePoint]:
        nx, ny = _primitive(normal)
        for p, q in self.edges():
            dx, dy = _primitive((q[0] - p[0], q[1] - p[1]))
            if (dy, -dx) == (nx, ny):
                return p, q
        raise NoSuchEdge(f"no edge with outward normal {tuple(normal)}")

    def contains(self, point) -> bool:
        return geo.polygon_contains(self.vertices, point)

    def twice_area(self) -> Fraction:
        return geo.polygon_twice_area(self.vertices)


def _primitive(v: Sequence[int]) -> tuple[int, int]:
    from math import gcd
    g = gcd(int(v[0]), int(v[1]))
    if g == 0:
        raise ValueError("zero vector")
    return int(v[0]) // g, int(v[1]) // g


def support(p: LaurentPoly) -> set[LatticePoint]:
    return p.support()


def newton_polygon(p: LaurentPoly) -> NewtonPolygon:
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no Newton polygon")
    return NewtonPolygon(tuple(geo.convex_hull(p.support())))


def edge_lattice_length(np_: NewtonPolygon, normal: Sequence[int]) -> int:
    """Lattice length of the edge whose outward normal is ``normal``."""
    p, q = np_.edge_with_normal(normal)
    return geo.edge_lattice_count(p, q)


# -- text format ------------------------------------------------------------

def _format_monomial(a: int, b: int) -> str:
    parts = []
    for var, e in (("x", a), ("y", b)):
        if e == 1:
            parts.append(var)
        elif e != 0:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


def to_text(p: LaurentPoly) -> str:
    """Terms ``c*x^a*y^b`` in lexicographic exponent order, joined by + and -."""
    if p.is_zero():
        return "0"
    out = []
    for (a, b), c in p.items():
        mono = _format_monomial(a, b)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_FACTOR = re.compile(r"(\d+(?:/\d+)?)|([xy])(?:\^\(?(-?\d+)\)?)?")


def parse(text: str) -> LaurentPoly:
    """Inverse of :func:`to_text`; also accepts any ordering of terms."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty input")
    if s == "0":
        return LaurentPoly.zero()
    terms: dict = defaultdict(int)
    pos = 0
    n = len(s)
    while pos < n:
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif pos != 0:
            raise ParseError(f"expected + or - at position {pos} in {text!r}")
        coeff: Coefficient = 1
        a = b = 0
        seen_factor = False
        while pos < n and s[pos] not in "+-":
            if seen_factor:
                if s[pos] != "*":
                    raise ParseError(f"expected * at position {pos} in {text!r}")
                pos += 1
            m = _FACTOR.match(s, pos)
            if not m:
                raise ParseError(f"cannot parse factor at position {pos} in {text!r}")
            if m.group(1):
                coeff = coeff * Fraction(m.group(1))
            else:
                e = int(m.group(3)) if m.group(3) is not None else 1
                if m.group(2) == "x":
                    a += e
                else:
                    b += e
            pos = m.end()
            seen_factor = True
        if not seen_factor:
            raise ParseError(f"dangling sign in {text!r}")
        terms[(a, b)] += sign * coeff
    return LaurentPoly(terms)

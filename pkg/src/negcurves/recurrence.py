"""Curve equations along the solution chain from two algebraic relations.

Writing (M_n, N_n) = tau^{-n}(1, 0) and xi_int, xi_rat for the normalised
(constant term 1) equations supported in IT and RT,

    xi_int(s) * xi_int(tau s) = xi_rat(tau s)^K + eps_int(s) x^(M+N) (y-1)^(KN)
    xi_rat(s) * xi_rat(tau s) = xi_int(s)       + eps_rat(s) x^M (y-1)^(M+N)

starting from xi_int(1,0) = 1 - x and xi_rat(1,0) = 1 - xy. Both divisions are
exact; a remainder means a wrong sign table or a broken chain.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import comb

from .families import Kind, make_it, make_rt, mirror_map
from .laurent import LaurentPoly, _div, exact_div
from .pell import PellSolution, chain_index, chain_solution, f_sequence, iota0, iota1

DEFAULT_MAX_N = 12


@dataclass(frozen=True)
class XiPair:
    solution: PellSolution
    n: int
    xi_int: LaurentPoly
    xi_rat: LaurentPoly
    eps_int: int
    eps_rat: int


def epsilon(K: int, n: int, family) -> int:
    """Sign of the top coefficient of xi at chain index n."""
    kind = Kind.parse(family)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return -1
    if K % 2 == 0:
        return -1 if kind is Kind.INTEGRAL else (-1) ** (n + 1)
    if kind is Kind.INTEGRAL:
        return 1 if n % 3 == 1 else -1
    return 1 if n % 3 == 2 else -1


def x_times_y_minus_one(a: int, e: int) -> LaurentPoly:
    """x^a (y - 1)^e expanded."""
    return LaurentPoly({(a, j): comb(e, j) * (-1) ** (e - j) for j in range(e + 1)})


class _Memo:
    def __init__(self):
        self._lock = threading.Lock()
        self._table: dict[tuple[int, int], XiPair] = {}

    def get(self, key):
        return self._table.get(key)

    def put(self, key, value):
        with self._lock:
            self._table.setdefault(key, value)
            return self._table[key]

    def clear(self):
        with self._lock:
            self._table.clear()


_memo = _Memo()


def clear_cache():
    _memo.clear()


def xi_chain(K: int, n: int, max_n: int = DEFAULT_MAX_N) -> XiPair:
    """xi_int and xi_rat for (M_n, N_n); intermediate pairs are memoised by (K, n)."""
    if n > max_n:
        raise ValueError(f"chain index {n} exceeds the cap {max_n}")
    hit = _memo.get((K, n))
    if hit is not None:
        return hit
    s = chain_solution(K, n)
    x = LaurentPoly.x()
    y = LaurentPoly.y()
    if n == 0:
        pair = XiPair(s, 0, 1 - x, 1 - x * y, -1, -1)
        return _memo.put((K, n), pair)
    prev = xi_chain(K, n - 1, max_n)
    e_int = epsilon(K, n, Kind.INTEGRAL)
    e_rat = epsilon(K, n, Kind.RATIONAL)
    M, N = s.M, s.N
    num = prev.xi_rat ** K + e_int * x_times_y_minus_one(M + N, K * N)
    xi_int = exact_div(num, prev.xi_int)
    xi_rat = exact_div(xi_int + e_rat * x_times_y_minus_one(M, M + N), prev.xi_rat)
    return _memo.put((K, n), XiPair(s, n, xi_int, xi_rat, e_int, e_rat))


def xi(s: PellSolution, max_n: int = DEFAULT_MAX_N) -> XiPair:
    """xi pair for a solution on the M >= N branch."""
    return xi_chain(s.K, chain_index(s), max_n)


def xi_int(s: PellSolution, max_n: int = DEFAULT_MAX_N) -> LaurentPoly:
    """Equation supported in IT(M, N) for either branch."""
    if s.M >= s.N:
        return xi(s, max_n).xi_int
    src = iota0(s)
    f = mirror_map(make_it(src))
    return xi(src, max_n).xi_int.transform(f).normalized()


def xi_rat(s: PellSolution, max_n: int = DEFAULT_MAX_N) -> LaurentPoly:
    """Equation supported in RT(M, N) for either branch."""
    if s.M >= s.N:
        return xi(s, max_n).xi_rat
    src = iota1(s)
    f = mirror_map(make_rt(src))
    return xi(src, max_n).xi_rat.transform(f).normalized()


def xi_family(kind, s: PellSolution, max_n: int = DEFAULT_MAX_N) -> LaurentPoly:
    return xi_int(s, max_n) if Kind.parse(kind) is Kind.INTEGRAL else xi_rat(s, max_n)


def apex(s: PellSolution, family) -> tuple[int, int]:
    if Kind.parse(family) is Kind.INTEGRAL:
        return (s.M + s.N, s.K * s.N)
    return (s.M, s.M + s.N)


def relation_residuals(K: int, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both relations rearranged as lhs - rhs; zero polynomials when they hold."""
    cur = xi_chain(K, n)
    prev = xi_chain(K, n - 1)
    M, N = cur.solution.M, cur.solution.N
    r1 = cur.xi_int - (cur.xi_rat * prev.xi_rat - cur.eps_rat * x_times_y_minus_one(M, M + N))
    r2 = prev.xi_rat ** K - (cur.xi_int * prev.xi_int - cur.eps_int * x_times_y_minus_one(M + N, K * N))
    return r1, r2


def edge_coefficients(s: PellSolution, family) -> tuple:
    """(a, b): coefficient of x, and the coefficient next to the apex on the
    slope-K edge after rescaling the apex coefficient to 1.
    """
    kind = Kind.parse(family)
    poly = xi_family(kind, s)
    M, N, K = s.M, s.N, s.K
    a = poly.coefficient(1, 0)
    top = poly[apex(s, kind)]
    if kind is Kind.INTEGRAL:
        b = poly.coefficient(M + N - 1, N * K - K)
    else:
        b = poly.coefficient(M - 1, M + N - K)
    return a, _ratio(b, top)


def _ratio(b, top):
    return _div(b, top) if b else 0


def expected_edge_coefficients(K: int, n: int, family) -> tuple[int, int]:
    """Closed forms in terms of F_n for chain index n >= 1."""
    kind = Kind.parse(family)
    if n < 1:
        raise ValueError("closed forms are stated for n >= 1")
    F = f_sequence(K, n + 1)
    Fm2 = F[n - 2] if n >= 2 else None
    if kind is Kind.RATIONAL:
        a = F[n]
        b = 0 if n == 1 else (-1) ** K * F[n - 1]
    else:
        a = F[n] + F[n - 1]
        b = (-1) ** (K - 1) if n == 1 else (-1) ** K * (F[n - 1] + Fm2)
    return a, b

"""Integer solutions of (M+N)^2 = K M N + 1 and the sequence F_n.

Solutions are generated from (0, 1) by the involutions

    iota0: (M, N) -> (N, M)
    iota1: (M, N) -> (M, (K-2) M - N)
    iota2: (M, N) -> ((K-2) N - M, N)

and the branch M > N is walked with tau = iota1 . iota0, which moves every
solution one step closer to (1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import comb, gcd

from .errors import NegativeResult, NotASolution


@dataclass(frozen=True, order=True)
class PellSolution:
    K: int
    M: int
    N: int

    def __post_init__(self):
        if self.K < 3:
            raise NotASolution(f"K must be >= 3, got {self.K}")
        if self.M < 0 or self.N < 0:
            raise NegativeResult(f"({self.M}, {self.N}) has a negative coordinate")
        if (self.M + self.N) ** 2 != self.K * self.M * self.N + 1:
            raise NotASolution(f"({self.M}, {self.N}) does not solve (M+N)^2 = {self.K}MN+1")

    @property
    def degenerate_triangle(self) -> bool:
        """(0,1) and (1,0) give degenerate integral triangles."""
        return self.M == 0 or self.N == 0

    @property
    def pair(self) -> tuple[int, int]:
        return (self.M, self.N)

    def __str__(self):
        return f"({self.M},{self.N};K={self.K})"


def is_solution(K: int, M: int, N: int) -> bool:
    return (M + N) ** 2 == K * M * N + 1


def _make(K: int, M: int, N: int) -> PellSolution:
    if M < 0 or N < 0:
        raise NegativeResult(f"image ({M}, {N}) leaves the non-negative branch")
    return PellSolution(K, M, N)


def iota0(s: PellSolution) -> PellSolution:
    return _make(s.K, s.N, s.M)


def iota1(s: PellSolution) -> PellSolution:
    return _make(s.K, s.M, (s.K - 2) * s.M - s.N)


def iota2(s: PellSolution) -> PellSolution:
    return _make(s.K, (s.K - 2) * s.N - s.M, s.N)


def tau(s: PellSolution) -> PellSolution:
    """iota1 . iota0: (M, N) -> (N, (K-1)N - (M+N))."""
    return _make(s.K, s.N, (s.K - 1) * s.N - (s.M + s.N))


def tau_inv(s: PellSolution) -> PellSolution:
    """iota0 . iota1: (M, N) -> ((K-2)M - N, M)."""
    return _make(s.K, (s.K - 2) * s.M - s.N, s.M)


def iter_chain(K: int):
    """Yield (0,1), (1,0), (1,K-2), (K-2,1), ... alternating iota0 and iota1.

    The walk ends when it revisits a solution, which only happens for K = 3
    (non-negative solutions (0,1), (1,0), (1,1)).
    """
    if K < 3:
        raise ValueError("K must be >= 3")
    seen: set[tuple[int, int]] = set()
    s = PellSolution(K, 0, 1)
    step = 0
    while s.pair not in seen:
        seen.add(s.pair)
        yield s
        try:
            s = iota0(s) if step % 2 == 0 else iota1(s)
        except NegativeResult:
            return
        step += 1


def enumerate_chain(K: int, count: int) -> list[PellSolution]:
    """First ``count`` solutions of the alternating walk (fewer for K = 3)."""
    return list(islice(iter_chain(K), count))


def chain_solution(K: int, n: int) -> PellSolution:
    """(M_n, N_n) = tau^{-n}(1, 0) on the branch M >= N (M = N only for K = 3)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    s = PellSolution(K, 1, 0)
    for _ in range(n):
        nxt = tau_inv(s)
        if nxt.M < nxt.N:
            raise NegativeResult(f"K={K} has no chain element n={n} with M > N")
        s = nxt
    return s


def chain_index(s: PellSolution) -> int:
    """Inverse of :func:`chain_solution`."""
    if s.M < s.N or s.N == 0 and s.M != 1:
        raise ValueError(f"{s} is not on the M > N branch")
    n = 0
    while s.pair != (1, 0):
        s = tau(s)
        n += 1
    return n


def solutions_with(K: int, max_sum: int) -> list[PellSolution]:
    """All non-negative solutions with M + N <= max_sum, both branches."""
    out = []
    for i, s in enumerate(iter_chain(K)):
        if s.M + s.N <= max_sum:
            out.append(s)
        elif i >= 2:
            # M+N never decreases along the walk from index 1 on
            break
    return out


def f_sequence(K: int, n_max: int) -> list[int]:
    """F_0 .. F_{n_max} with F_{n+2} = (K-2) F_{n+1} - F_n."""
    values = [0, 1]
    while len(values) <= n_max:
        values.append((K - 2) * values[-1] - values[-2])
    return values[: n_max + 1]


def f_closed_form(K: int, n: int) -> int:
    """Alternating binomial sum in powers of K."""
    if n == 0:
        return 0
    return sum((-1) ** i * comb(2 * n - 1 - i, i) * K ** (n - 1 - i) for i in range(n))


def continued_fraction_convergent(K: int, n: int) -> tuple[int, int]:
    """Value of (K-2) - 1/((K-2) - 1/(... )) with n levels, as (p, q) in lowest terms.

    n = 1 gives (K-2, 1), n = 2 gives ((K-2)^2 - 1, K-2).
    """
    if K < 4:
        raise ValueError("convergents need K >= 4")
    if n < 1:
        raise ValueError("n must be >= 1")
    c = Fraction(K - 2)
    for _ in range(n - 1):
        c = (K - 2) - 1 / c
    p, q = c.numerator, c.denominator
    assert gcd(p, q) == 1
    return p, q

import threading

import pytest

from negcurves import recurrence as R
from negcurves.families import Kind, make_it, make_rt
from negcurves.laurent import LaurentPoly, edge_lattice_length, newton_polygon, parse, vanishing_order
from negcurves.pell import PellSolution as P, chain_solution, f_sequence
from negcurves.solver import solve_curve

x, y = LaurentPoly.x(), LaurentPoly.y()


def chain_ns(K, max_m=12):
    n = 1
    while True:
        try:
            s = chain_solution(K, n)
        except ValueError:
            return
        if s.M + s.N > max_m:
            return
        yield n
        n += 1


class TestEpsilon:
    def test_examples(self):
        for K in range(3, 9):
            assert R.epsilon(K, 0, "it") == R.epsilon(K, 0, "rt") == -1
        assert (R.epsilon(4, 1, "it"), R.epsilon(4, 1, "rt")) == (-1, 1)
        assert (R.epsilon(5, 2, "it"), R.epsilon(5, 2, "rt")) == (-1, 1)

    @pytest.mark.parametrize("K", range(3, 11))
    def test_consistency(self, K):
        for n in range(1, 9):
            ei, er = R.epsilon(K, n, "it"), R.epsilon(K, n, "rt")
            ei0, er0 = R.epsilon(K, n - 1, "it"), R.epsilon(K, n - 1, "rt")
            assert ei == er * er0
            assert er0 ** K == ei * ei0


class TestXi:
    def test_base(self):
        p = R.xi_chain(5, 0)
        assert (p.xi_int, p.xi_rat) == (1 - x, 1 - x * y)

    def test_k4_n1(self):
        p = R.xi(P(4, 2, 1))
        assert p.xi_int == parse("1 + x - 4*x*y + x^2 - 4*x^2*y + 6*x^2*y^2 - x^3*y^4")
        assert p.xi_rat == parse("1 + x - 3*x*y + x^2*y^3")

    @pytest.mark.parametrize("K", range(4, 10))
    def test_rt_k_minus_2_equals_it_curve(self, K):
        # RT(K-2, 1) for K has the lattice hull of IT(K-3, 1) for K-1
        assert R.xi_rat(P(K, K - 2, 1)) == R.xi_int(P(K - 1, K - 3, 1))

    @pytest.mark.parametrize("K", range(3, 9))
    def test_matches_solver(self, K):
        for n in chain_ns(K):
            p = R.xi_chain(K, n)
            s = p.solution
            for kind, poly in ((Kind.INTEGRAL, p.xi_int), (Kind.RATIONAL, p.xi_rat)):
                t = make_it(s) if kind is Kind.INTEGRAL else make_rt(s)
                if t.m > 12:
                    continue
                assert solve_curve(t, t.m).poly == poly
                assert vanishing_order(poly) == t.m
                assert poly[(0, 0)] == 1
            r1, r2 = R.relation_residuals(K, n)
            assert r1.is_zero() and r2.is_zero()
            assert p.xi_int[(s.M + s.N, K * s.N)] == p.eps_int
            assert p.xi_rat[(s.M, s.M + s.N)] == p.eps_rat

    def test_mirror_branch(self):
        for s in (P(4, 1, 2), P(5, 1, 3), P(5, 3, 8), P(6, 1, 4)):
            assert R.xi_int(s) == solve_curve(make_it(s), s.M + s.N).poly
        for s in (P(4, 3, 4), P(5, 3, 8), P(4, 2, 3)):
            assert R.xi_rat(s) == solve_curve(make_rt(s), s.M).poly

    def test_cap(self):
        with pytest.raises(ValueError):
            R.xi_chain(4, 13)

    def test_memo_is_thread_safe(self):
        R.clear_cache()
        out = []
        threads = [threading.Thread(target=lambda: out.append(R.xi_chain(6, 2))) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(o is out[0] for o in out)


class TestNewtonPolygons:
    @pytest.mark.parametrize("K", range(3, 9))
    def test_int_polygon_is_it(self, K):
        for n in chain_ns(K):
            p = R.xi_chain(K, n)
            assert set(newton_polygon(p.xi_int).vertices) == set(make_it(p.solution).triangle.vertices)

    @pytest.mark.parametrize("K", range(4, 9))
    def test_slope_edge_length(self, K):
        np_ = newton_polygon(R.xi_chain(K, 2).xi_rat)
        assert edge_lattice_length(np_, (K, -1)) == K - 3

    def test_rat_polygon_shape(self):
        for K in range(4, 9):
            for n in range(2, 3):
                p = R.xi_chain(K, n)
                s = p.solution
                np_ = newton_polygon(p.xi_rat)
                # full left edge and a bottom edge
                assert np_.contains((0, 0)) and np_.contains((s.M, s.M + s.N))
                edge = np_.edge_with_normal((0, -1))
                assert edge[0][1] == 0

    def test_rat_83_misses_5_0(self):
        p = R.xi(P(5, 8, 3))
        t = make_rt(P(5, 8, 3))
        assert t.triangle.contains((5, 0))
        assert not newton_polygon(p.xi_rat).contains((5, 0))


class TestEdgeCoefficients:
    def test_k4_n1(self):
        s = P(4, 2, 1)
        assert R.edge_coefficients(s, "it") == (1, -1)
        assert R.edge_coefficients(s, "rt")[0] == 1

    @pytest.mark.parametrize("K,top", [(4, 6), (5, 4), (6, 3), (7, 2), (8, 2)])
    def test_laws(self, K, top):
        for n in range(1, top + 1):
            s = chain_solution(K, n)
            F_ = f_sequence(K, n)
            a_rat, b_rat = R.edge_coefficients(s, "rt")
            a_int, b_int = R.edge_coefficients(s, "it")
            assert a_rat == F_[n]
            assert a_int == F_[n] + F_[n - 1]
            if n == 1:
                assert b_rat == 0
                assert b_int == (-1) ** (K - 1)
            else:
                assert b_rat == (-1) ** K * F_[n - 1]
                assert b_int == (-1) ** K * (F_[n - 1] + F_[n - 2])

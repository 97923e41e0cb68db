"""Elimination engine: Sylvester matrices, Bareiss determinants,
resultants on both paths, and subresultant gcd."""

import pytest
from conftest import cofactor_det, rand_nonzero, rand_poly

from resverify.catalog import build_core, manifest
from resverify.poly import MultiPoly, variables
from resverify.ratio import Rat
from resverify.resultant import (BothConstant, GcdResult, ZeroInput,
                                 bareiss_det, gcd_subresultant, resultant,
                                 resultant_interp, sylvester)

V = variables()
F, K, Z, M, C = V["f"], V["k"], V["z"], V["m"], V["c"]


def _uni(rng, name="k", max_deg=4):
    while True:
        p = rand_poly(rng, names=(name,), max_terms=4, max_deg=max_deg)
        if p.degree(name) >= 1:
            return p


class TestSylvester:
    def test_two_linear(self):
        mat = sylvester(K - 2, K - 5, "k")
        assert mat.dimension == 2
        assert [[e.constant_value() for e in row] for row in mat.rows] \
            == [[1, -2], [1, -5]]

    def test_zero_input(self):
        with pytest.raises(ZeroInput):
            sylvester(MultiPoly.zero(), K, "k")

    def test_both_constant(self):
        with pytest.raises(BothConstant):
            sylvester(F, F + 1, "k")

    def test_entries_are_v_free(self, rng):
        a, b = _uni(rng), _uni(rng)
        mat = sylvester(a, b, "k")
        assert all("k" not in e.vars_used() for row in mat.rows for e in row)

    def test_dimension_sweep_pair(self):
        core = build_core((7, 4, 1))
        mat = sylvester(core.H, core.K, "k")
        # the degree-9/degree-12 upper summation bounds of the two sweep
        # displays are not attained (the top coefficients vanish), so
        # the true dimension is 8 + 11
        assert mat.dimension == 19

    def test_dimension_reduced_pair(self):
        core = build_core((5, 3, 1))
        mat = sylvester(core.new_h, core.new_k, "f")
        assert mat.dimension == 14

    def test_rows_carry_shifted_coefficients(self):
        mat = sylvester(K ** 2 + 3 * K + 5, K - 1, "k")
        vals = [[e.constant_value() for e in row] for row in mat.rows]
        assert vals == [[1, 3, 5], [1, -1, 0], [0, 1, -1]]


class TestBareiss:
    def test_diagonal(self):
        rows = [[F, MultiPoly.zero()], [MultiPoly.zero(), K]]
        assert bareiss_det(rows) == F * K

    def test_row_swap_sign(self, rng):
        rows = [[rand_poly(rng) for _ in range(3)] for _ in range(3)]
        swapped = [rows[1], rows[0], rows[2]]
        assert bareiss_det(swapped) == -bareiss_det(rows)

    def test_against_cofactor_oracle(self, rng):
        for _ in range(25):
            rows = [[rand_poly(rng, max_terms=2, max_deg=2) for _ in range(4)]
                    for _ in range(4)]
            assert bareiss_det(rows) == cofactor_det(rows)

    def test_singular(self):
        rows = [[F, K], [F, K]]
        assert bareiss_det(rows).is_zero()


class TestResultant:
    def test_linear_example(self):
        assert resultant(K - 2, K - 5, "k") == MultiPoly.const(-3)

    def test_common_root(self):
        assert resultant(K ** 2 - 1, K - 1, "k").is_zero()

    def test_zero_input(self):
        with pytest.raises(ZeroInput):
            resultant(MultiPoly.zero(), K, "k")

    def test_constant_cases(self):
        assert resultant(MultiPoly.const(3), K ** 2 + 1, "k") == 9
        assert resultant(F, F + 1, "k") == MultiPoly.const(1)

    def test_rational_content_bookkeeping(self):
        # resultant of (a*A, b*B) scales by a^degB * b^degA
        a = (K ** 2 + K + 1) * Rat(3, 4)
        b = (K - 7) * Rat(2, 5)
        base = resultant(K ** 2 + K + 1, K - 7, "k").constant_value()
        got = resultant(a, b, "k").constant_value()
        assert got == base * Rat(3, 4) ** 1 * Rat(2, 5) ** 2

    def test_antisymmetry_randomized(self, rng):
        for _ in range(500):
            a, b = _uni(rng), _uni(rng)
            da, db = a.degree("k"), b.degree("k")
            lhs = resultant(a, b, "k")
            rhs = resultant(b, a, "k")
            assert lhs == rhs * (-1) ** (da * db)

    def test_multiplicativity_randomized(self, rng):
        for _ in range(500):
            a, b, c = _uni(rng, max_deg=3), _uni(rng, max_deg=2), _uni(rng, max_deg=2)
            assert resultant(a, b * c, "k") == \
                resultant(a, b, "k") * resultant(a, c, "k")

    def test_planted_common_root_randomized(self, rng):
        for _ in range(500):
            x0 = rng.randint(-6, 6)
            a = (K - x0) * _uni(rng, max_deg=2)
            b = (K - x0) * _uni(rng, max_deg=2)
            assert resultant(a, b, "k").is_zero()

    def test_coprime_construction_randomized(self, rng):
        for _ in range(500):
            roots_a = rng.sample(range(-20, 21), 3)
            roots_b = [x for x in rng.sample(range(-20, 21), 5)
                       if x not in roots_a][:2]
            if not roots_b:
                continue
            a = MultiPoly.const(rng.choice((1, 2, 3)))
            for x in roots_a:
                a = a * (K - x)
            b = MultiPoly.const(rng.choice((1, 2)))
            for x in roots_b:
                b = b * (K - x)
            assert not resultant(a, b, "k").is_zero()

    def test_multivariate_common_factor(self):
        common = F * K + 1
        res = resultant(common * (K + F), common * (K - F), "k")
        assert res.is_zero()


class TestInterpPath:
    def test_agreement_randomized(self, rng):
        checked = 0
        while checked < 500:
            a = rand_poly(rng, names=("k", "f"), max_terms=4, max_deg=4)
            b = rand_poly(rng, names=("k", "f"), max_terms=4, max_deg=4)
            if a.degree("k") < 1 or b.degree("k") < 1:
                continue
            want = resultant(a, b, "k")
            got = resultant_interp(a, b, "k", "f")
            assert got == want
            checked += 1

    def test_rejects_extra_variables(self):
        with pytest.raises(ValueError):
            resultant_interp(K + M, K + F, "k", "f")

    def test_agreement_on_sweep_pair(self):
        # the two paths cross-validate on production data, including a
        # zero-resultant case
        for params, is_zero in (((5, 3, 1), False), ((7, 4, -1), True)):
            core = build_core(params)
            via_interp = resultant_interp(core.H, core.K, "k", "f")
            via_bareiss = resultant(core.H, core.K, "k")
            assert via_interp == via_bareiss
            assert via_interp.is_zero() == is_zero

    def test_reduced_pair_z_degree(self):
        # the raw eliminations have twice the degree of their square
        # roots: 80 generically, 78 on the m = 2r-1 family
        core = build_core((5, 3, 1))
        res = resultant_interp(core.new_h, core.new_k, "f", "z")
        assert res.degree("z") == 78
        core = build_core((9, 5, 1))
        res = resultant_interp(core.new_h, core.new_k, "f", "z")
        assert res.degree("z") == 78
        core = build_core((4, 2, 1))
        res = resultant_interp(core.new_h, core.new_k, "f", "z")
        assert res.degree("z") == 80


class TestSpecializationConsistency:
    def test_res_pq_specializes(self):
        man = manifest()
        generic = resultant(man["P"], man["Q"], "k")
        for mm, rr, cc in ((4, 2, 1), (5, 3, -1), (6, 2, 0), (7, 4, 1)):
            p0 = (man["P"].substitute("m", mm).substitute("r", rr)
                  .substitute("c", cc))
            q0 = (man["Q"].substitute("m", mm).substitute("r", rr)
                  .substitute("c", cc))
            # leading k-coefficients stay nonzero at valid specializations
            assert not p0.coefficient("k", 3).is_zero()
            assert not q0.coefficient("k", 3).is_zero()
            spec = (generic.substitute("m", mm).substitute("r", rr)
                    .substitute("c", cc))
            assert spec == resultant(p0, q0, "k")

    def test_res_pq_f3_closed_form_at_sample(self):
        man = manifest()
        p0 = man["P"].substitute("m", 4).substitute("r", 2).substitute("c", 1)
        q0 = man["Q"].substitute("m", 4).substitute("r", 2).substitute("c", 1)
        res = resultant(p0, q0, "k")
        want = man["coefF3"].evaluate({"m": 4, "r": 2, "c": 1})
        assert res.coefficient("f", 3).constant_value() * 4096 == want


class TestGcd:
    def test_example(self):
        res = gcd_subresultant((K - 1) * (K + 2), (K - 1) * (K + 3), "k")
        assert isinstance(res, GcdResult)
        assert res.gcd == K - 1
        assert res.cofactor_degrees == (1, 1)

    def test_self(self, rng):
        from resverify.poly import _content_in
        for _ in range(30):
            p = rand_nonzero(rng)
            if p.degree("k") < 1:
                continue
            res = gcd_subresultant(p, p, "k")
            want = p.exact_div(_content_in(p, "k")).primitive()[1]
            assert res.gcd == want

    def test_zero_input(self):
        with pytest.raises(ZeroInput):
            gcd_subresultant(MultiPoly.zero(), K, "k")

    def test_divides_randomized(self, rng):
        from resverify.poly import _content_in
        checked = 0
        while checked < 500:
            g = rand_poly(rng, max_terms=3, max_deg=2)
            a = rand_nonzero(rng, max_terms=3, max_deg=2)
            b = rand_nonzero(rng, max_terms=3, max_deg=2)
            if g.degree("k") < 1:
                continue
            res = gcd_subresultant(g * a, g * b, "k")
            assert res.gcd.divides(g * a)
            assert res.gcd.divides(g * b)
            planted = g.exact_div(_content_in(g, "k")).primitive()[1]
            assert planted.divides(res.gcd)
            checked += 1

    def test_v_free_input(self):
        res = gcd_subresultant(F + 1, K * (F + 1), "k")
        assert res.gcd.is_constant()

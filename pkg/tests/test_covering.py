import random
from itertools import product

import pytest

import helpers
from mdsx.code import code_from_generator, full_code
from mdsx.constructions import GrsSpec, egrs, egrs_dual_code, grs, prs, \
    thm7_u
from mdsx.covering import (
    covering_radius,
    distance_to_code,
    full_radius_witness,
    is_deep_hole,
    is_deep_hole_via_mds,
    syndrome_criterion,
    verify_theorem6,
)
from mdsx.errors import (
    BadRho,
    BudgetExceeded,
    CoveringRadiusDeficient,
    LengthMismatch,
    NotMds,
)
from mdsx.field import field_new
from mdsx.matrix import Matrix, all_k_columns_independent

gf2 = field_new(2, 1)
gf3 = field_new(3, 1)
gf4 = field_new(2, 2)
gf5 = field_new(5, 1)

NODES4 = gf5.vector([0, 1, 2, 3])
GRS42 = grs(GrsSpec.make(gf5, [0, 1, 2, 3], 1, 2))
DUAL42 = GRS42.dual()
THM7_U = thm7_u(NODES4, gf5.vector([1, 1, 1, 1]), 2)


class TestCoveringRadius:
    def test_full_space_is_zero(self):
        assert covering_radius(full_code(gf5, 4)).rho == 0

    def test_example_over_gf4(self):
        dual = egrs_dual_code(gf4.vector([0, 1, 2, 3]), 3)
        assert (dual.n, dual.k, dual.min_distance()) == (5, 2, 4)
        assert covering_radius(dual).rho == 3

    def test_example_over_gf8(self):
        gf8 = field_new(2, 3)
        dual = egrs_dual_code(gf8.vector(range(8)), 3)
        assert (dual.n, dual.k, dual.min_distance()) == (9, 6, 4)
        assert covering_radius(dual).rho == 3

    def test_matches_definitional_maximum(self):
        rng = random.Random(7)
        cases = []
        for ctx in (gf2, gf3, gf4):
            for _ in range(6):
                n = rng.randint(2, 5)
                k = rng.randint(1, n)
                m = Matrix(ctx, [[rng.randrange(ctx.q) for _ in range(n)]
                                 for _ in range(k)])
                if any(e.value for row in m.row_list() for e in row):
                    cases.append(code_from_generator(m))
        assert cases
        for code in cases:
            assert covering_radius(code).rho \
                == helpers.brute_covering_radius(code)

    def test_random_vectors_give_lower_bound(self):
        rng = random.Random(13)
        rep = covering_radius(DUAL42)
        best = max(distance_to_code(
            DUAL42, [rng.randrange(5) for _ in range(4)])
            for _ in range(1000))
        assert best <= rep.rho
        assert rep.rho == 2

    def test_mds_radius_range(self):
        rng = random.Random(19)
        for ctx in (gf3, gf4, gf5):
            for _ in range(8):
                n = rng.randint(2, ctx.q)
                k = rng.randint(1, n - 1)
                c = grs(GrsSpec.make(ctx, rng.sample(range(ctx.q), n), 1, k))
                rho = covering_radius(c).rho
                assert rho in (n - k - 1, n - k)

    def test_budget_guard(self):
        with pytest.raises(BudgetExceeded):
            covering_radius(grs(GrsSpec.make(gf5, [0, 1, 2, 3], 1, 1)),
                            budget=100)

    def test_leader_weight_counts_total(self):
        rep = covering_radius(DUAL42)
        assert sum(rep.coset_leader_weight_counts()) == 5 ** 2

    def test_rho_is_max_leader_weight(self):
        for code in (DUAL42, GRS42, prs(gf4, 2)):
            rep = covering_radius(code)
            counts = rep.coset_leader_weight_counts()
            assert counts[rep.rho] > 0
            assert rep.num_deep_hole_cosets == counts[rep.rho]


class TestRepresentatives:
    def test_lex_first_leaders(self):
        # brute force: for each deep-hole coset, the lexicographically
        # smallest minimum-weight vector
        code = DUAL42
        rep = covering_radius(code)
        rho, holes = helpers.brute_deep_holes(code)
        assert rho == rep.rho
        by_syndrome = {}
        for v in sorted(holes):
            ve = code.ctx.vector(v)
            if helpers.weight(ve) != rho:
                continue
            s = tuple(e.value for e in code.parity.mat_vec(ve))
            by_syndrome.setdefault(s, v)
        got = {}
        for r in rep.representatives():
            s = tuple(e.value for e in code.parity.mat_vec(r))
            got[s] = tuple(e.value for e in r)
        assert got == by_syndrome

    def test_deep_hole_count_against_brute_force(self):
        code = DUAL42
        rep = covering_radius(code)
        _, holes = helpers.brute_deep_holes(code)
        # every deep hole is leader weight rho; cosets partition them
        assert rep.num_deep_hole_cosets == len(holes) // 5 ** code.k

    def test_report_serialization(self):
        rep = covering_radius(DUAL42)
        d = rep.to_dict(include_representatives=True)
        assert d["rho"] == rep.rho
        assert len(d["representatives"]) == d["num_deep_hole_cosets"]


class TestDistanceToCode:
    def test_codeword_is_zero(self):
        for word in list(GRS42.codewords())[:5]:
            assert distance_to_code(GRS42, word) == 0

    def test_single_error_radius(self):
        word = next(iter(GRS42.codewords()))
        v = list(word)
        v[1] = v[1] + gf5.one
        assert GRS42.min_distance() == 3
        assert distance_to_code(GRS42, v) == 1

    def test_thm7_vector_distance_is_k(self):
        assert distance_to_code(DUAL42, THM7_U) == 2

    def test_agrees_with_brute_force(self):
        rng = random.Random(29)
        for _ in range(50):
            v = [rng.randrange(5) for _ in range(4)]
            assert distance_to_code(DUAL42, gf5.vector(v)) \
                == helpers.brute_distance_to_code(DUAL42, gf5.vector(v))

    def test_both_routes_agree(self):
        # codeword-scan route vs coset-leader route
        rng = random.Random(37)
        c1 = grs(GrsSpec.make(gf4, [0, 1, 2], 1, 2))
        c2 = grs(GrsSpec.make(gf4, [0, 1, 2], 1, 2))
        covering_radius(c2)  # forces the leader route on c2
        for _ in range(64):
            v = [rng.randrange(4) for _ in range(3)]
            assert distance_to_code(c1, v) == distance_to_code(c2, v)

    def test_length_check(self):
        with pytest.raises(LengthMismatch):
            distance_to_code(GRS42, [0, 0])


class TestDeepHoleCriteria:
    def test_codeword_is_not_deep_hole(self):
        word = next(iter(DUAL42.codewords()))
        assert covering_radius(DUAL42).rho >= 1
        assert not is_deep_hole(DUAL42, word)

    def test_thm7_vector_is_deep_hole(self):
        assert is_deep_hole(DUAL42, THM7_U)
        assert is_deep_hole_via_mds(DUAL42, THM7_U)
        assert syndrome_criterion(DUAL42.parity, THM7_U,
                                  covering_radius(DUAL42).rho)

    def test_ones_vector_cyclic_dual(self):
        from mdsx.constructions import cyclic_cu
        dual = cyclic_cu(2, 2).dual()
        assert is_deep_hole(dual, [1] * 5)

    def test_codeword_fails_minor_test(self):
        word = next(iter(DUAL42.codewords()))
        assert not is_deep_hole_via_mds(DUAL42, word)

    def test_via_mds_needs_mds(self):
        c = code_from_generator(Matrix(gf2, [[1, 1, 0, 0], [0, 0, 1, 1]]))
        with pytest.raises(NotMds):
            is_deep_hole_via_mds(c, [1, 0, 0, 0])

    def test_via_mds_refuses_deficient_radius(self):
        # radius-deficient MDS code: the projective evaluation code with
        # k = q - 1 has radius 1 < n - k = 2
        c = prs(gf5, 4)
        assert c.is_mds()
        assert covering_radius(c).rho == 1
        with pytest.raises(CoveringRadiusDeficient):
            is_deep_hole_via_mds(c, [1, 0, 0, 0, 0, 0])

    def test_syndrome_criterion_rejects_codewords(self):
        word = next(iter(DUAL42.codewords()))
        assert not syndrome_criterion(DUAL42.parity, word, 2)

    def test_syndrome_criterion_bad_rho(self):
        with pytest.raises(BadRho):
            syndrome_criterion(DUAL42.parity, THM7_U, -1)

    def test_exhaustive_agreement_gf3_full_radius(self):
        # all three criteria agree on every vector for a full-radius code
        c = grs(GrsSpec.make(gf3, [0, 1, 2], 1, 1))
        rep = covering_radius(c)
        assert c.is_mds() and rep.rho == c.n - c.k
        for vals in product(range(3), repeat=3):
            v = gf3.vector(vals)
            dh = is_deep_hole(c, v)
            assert dh == is_deep_hole_via_mds(c, v)
            assert dh == syndrome_criterion(c.parity, v, rep.rho)

    def test_exhaustive_agreement_gf3_deficient_radius(self):
        # the projective [4,2] code over GF(3) has radius 1 = n-k-1: the
        # minor test refuses, but the column-span criterion still agrees
        c = egrs(GrsSpec.make(gf3, [0, 1, 2], 1, 2))
        rep = covering_radius(c)
        assert c.is_mds() and rep.rho == c.n - c.k - 1
        with pytest.raises(CoveringRadiusDeficient):
            is_deep_hole_via_mds(c, [0, 0, 0, 1])
        for vals in product(range(3), repeat=4):
            v = gf3.vector(vals)
            assert is_deep_hole(c, v) \
                == syndrome_criterion(c.parity, v, rep.rho)

    def test_deep_holes_are_coset_closed(self):
        rng = random.Random(43)
        rep = covering_radius(DUAL42)
        words = list(DUAL42.codewords())
        hole = THM7_U
        for _ in range(20):
            c = words[rng.randrange(len(words))]
            shifted = [a + b for a, b in zip(hole, c)]
            assert is_deep_hole(DUAL42, shifted)


class TestFullRadiusWitness:
    def test_grs_has_witness(self):
        w = full_radius_witness(GRS42)
        assert w is not None
        assert covering_radius(GRS42).rho == 2
        stacked = GRS42.generator.with_row(w)
        assert all_k_columns_independent(stacked, 3)

    def test_deficient_code_has_none(self):
        c = prs(gf5, 4)  # [6,4,3] with radius 1 = q - k < n - k
        assert covering_radius(c).rho == 1
        assert full_radius_witness(c) is None

    def test_full_space_degenerate(self):
        assert full_radius_witness(full_code(gf5, 3)) is None

    def test_requires_mds(self):
        c = code_from_generator(Matrix(gf2, [[1, 1, 0, 0], [0, 0, 1, 1]]))
        with pytest.raises(NotMds):
            full_radius_witness(c)


class TestVerifyTheorem6:
    def test_thm7_instance(self):
        chk = verify_theorem6(GRS42, THM7_U)
        assert (chk.extended_mds, chk.rho_dual_is_k, chk.u_deep_hole_dual) \
            == (True, True, True)
        assert chk.consistent

    def test_dual_codeword_gives_trivial_extension(self):
        u = GRS42.parity.row(0)
        chk = verify_theorem6(GRS42, u)
        assert not chk.extended_mds
        assert not chk.u_deep_hole_dual
        assert chk.consistent

    def test_exhaustive_small(self):
        c = egrs(GrsSpec.make(gf4, [0, 1, 2, 3], 1, 2))
        for vals in product(range(4), repeat=5):
            assert verify_theorem6(c, gf4.vector(vals)).consistent

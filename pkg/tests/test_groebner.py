import pytest

from frobgrow.budgets import Budgets
from frobgrow.errors import BudgetExceeded, InputError, RingMismatch
from frobgrow.fpoly import (
    MultiPoly,
    PrimeModulus,
    RingSpec,
    format_multipoly,
    parse_poly,
)
from frobgrow.groebner import (
    IdealHandle,
    colon,
    colon_ideal,
    eliminate,
    groebner_basis,
    ideal_equal,
    intersect,
    member_bounded_oracle,
    normal_form,
    power_containment,
    saturate,
)
from frobgrow.sequences import SequenceSpec, p_seq

P2 = PrimeModulus(2)
P3 = PrimeModulus(3)
P5 = PrimeModulus(5)


def ring_txy(p=P2):
    return RingSpec(p, (("t", 0), ("x", 1), ("y", 1)))


def ring_xy(p=P2):
    return RingSpec(p, (("x", 1), ("y", 1)))


class TestGroebnerBasis:
    def test_single_generator(self):
        R = ring_xy()
        assert [str(g) for g in groebner_basis(IdealHandle(R, ["x"]))] == ["x"]

    def test_interreduction(self):
        R = ring_xy()
        gb = groebner_basis(IdealHandle(R, ["x+y", "y"]))
        assert [str(g) for g in gb] == ["x", "y"]

    def test_quadric_spair(self):
        R = ring_txy()
        gb = groebner_basis(IdealHandle(R, ["x^2", "y^2", "x^2+t*x*y+y^2"]))
        assert "t*x*y" in [str(g) for g in gb]

    def test_deterministic(self):
        R = ring_txy(P3)
        gens = ["x^2+t*x*y", "y^3+t^2*x*y^2", "x*y^2"]
        a = groebner_basis(IdealHandle(R, gens))
        b = groebner_basis(IdealHandle(R, gens))
        assert [str(g) for g in a] == [str(g) for g in b]

    def test_budget_exceeded_distinguishable(self):
        R = ring_txy(P3)
        tiny = Budgets().override(gb_pairs=1)
        with pytest.raises(BudgetExceeded):
            IdealHandle(R, ["x^2+t*x*y+y^2", "x^3+y^3", "t^2*x*y^2+x^2*y"]).groebner_basis(
                budgets=tiny
            )


class TestNormalForm:
    def test_membership(self):
        R = ring_txy()
        I = IdealHandle(R, ["x^2", "y^2", "x^2+t*x*y+y^2"])
        assert normal_form(parse_poly("t*x*y", R), I).is_zero

    def test_non_member(self):
        R = ring_xy()
        I = IdealHandle(R, ["x^2"])
        assert str(normal_form(parse_poly("x", R), I)) == "x"

    def test_lemma_colon_instance(self):
        # x*y^2*P_2 in (x^3, y^3, x^2+t*x*y+y^2) at n = 3 with r = (1, t, 1)
        R = ring_txy(P3)
        s = SequenceSpec.parse(P3, "1", "t", "1")
        I = IdealHandle(R, ["x^3", "y^3", "x^2+t*x*y+y^2"])
        f = parse_poly("x*y^2", R) * MultiPoly.from_unipoly(R, p_seq(s, 2), "t")
        assert normal_form(f, I).is_zero


class TestIdealEqual:
    def test_generating_sets(self):
        R = ring_xy()
        assert ideal_equal(IdealHandle(R, ["x", "y"]), IdealHandle(R, ["x+y", "y"]))

    def test_strict_containment(self):
        R = ring_xy()
        assert not ideal_equal(IdealHandle(R, ["x"]), IdealHandle(R, ["x^2"]))

    def test_katzman_relation_absorbed(self):
        R = ring_txy()
        f = parse_poly("x*y*(x-y)*(x-t*y)", R)
        assert ideal_equal(
            IdealHandle(R, ["x^2", "y^2", f]), IdealHandle(R, ["x^2", "y^2"])
        )

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatch):
            ideal_equal(
                IdealHandle(ring_xy(), ["x"]), IdealHandle(ring_xy(P3), ["x"])
            )


class TestEliminate:
    def test_already_contracted(self):
        R = ring_txy()
        out = eliminate(IdealHandle(R, ["x", "t^2+1"]), ["x"])
        assert [str(g) for g in out.generators] == ["t^2 + 1"]

    def test_empty_contraction(self):
        R = ring_txy()
        out = eliminate(IdealHandle(R, ["x^2", "t*x"]), ["x"])
        assert out.generators == ()

    def test_output_is_syntactically_free_and_member(self):
        R = ring_txy(P3)
        I = IdealHandle(R, ["x^2+t*x*y", "y^2+t^3"])
        out = eliminate(I, ["x"])
        xi = R.index_of("x")
        for g in out.generators:
            assert not g.uses_variable(xi)
            assert normal_form(g, I).is_zero


class TestIntersect:
    def test_principal(self):
        R = ring_xy()
        out = intersect(IdealHandle(R, ["x"]), IdealHandle(R, ["y"]))
        assert ideal_equal(out, IdealHandle(R, ["x*y"]))

    def test_idempotent(self):
        R = ring_txy()
        I = IdealHandle(R, ["x^2", "t*y"])
        assert ideal_equal(intersect(I, I), I)

    def test_mixed(self):
        R = ring_xy()
        out = intersect(IdealHandle(R, ["x^2", "y"]), IdealHandle(R, ["x"]))
        assert ideal_equal(out, IdealHandle(R, ["x^2", "x*y"]))

    def test_containments_random(self, rng):
        R = ring_txy(P3)

        def rand_ideal():
            gens = []
            for _ in range(rng.randint(1, 3)):
                terms = {
                    tuple(rng.randrange(3) for _ in range(3)): rng.randrange(1, 3)
                    for _ in range(rng.randint(1, 3))
                }
                gens.append(MultiPoly(R, terms))
            return IdealHandle(R, [g for g in gens if not g.is_zero] or ["x"])

        for _ in range(10):
            I, J = rand_ideal(), rand_ideal()
            K = intersect(I, J)
            for g in K.generators:
                assert normal_form(g, I).is_zero
                assert normal_form(g, J).is_zero
            for a in I.generators:
                for b in J.generators:
                    assert normal_form(a * b, K).is_zero


class TestColon:
    def test_principal(self):
        R = ring_xy()
        out = colon(IdealHandle(R, ["x*y"]), parse_poly("x", R))
        assert ideal_equal(out, IdealHandle(R, ["y"]))

    def test_by_unit(self):
        R = ring_xy()
        I = IdealHandle(R, ["x^2", "y"])
        assert ideal_equal(colon(I, MultiPoly.const(R, 1)), I)

    def test_sequence_contraction(self):
        R = ring_txy()
        I = IdealHandle(R, ["x^2", "y^2", "x^2+t*x*y+y^2"])
        J = colon(I, parse_poly("x*y", R))
        out = eliminate(J, ["x", "y"])
        assert [str(g) for g in out.generators] == ["t"]

    def test_zero_rejected(self):
        R = ring_xy()
        with pytest.raises(InputError):
            colon(IdealHandle(R, ["x"]), MultiPoly.const(R, 0))

    def test_colon_properties(self, rng):
        R = ring_txy(P3)
        I = IdealHandle(R, ["x^2", "x*y+t*y^2"])
        f = parse_poly("x+y", R)
        C = colon(I, f)
        for g in C.generators:
            assert normal_form(g * f, I).is_zero
        for g in I.generators:
            assert normal_form(g, C).is_zero


class TestColonIdeal:
    def test_examples(self):
        R = ring_xy()
        assert ideal_equal(
            colon_ideal(IdealHandle(R, ["x^2", "x*y"]), IdealHandle(R, ["x"])),
            IdealHandle(R, ["x", "y"]),
        )
        I = IdealHandle(R, ["x^2", "y^2"])
        assert ideal_equal(
            colon_ideal(I, IdealHandle(R, ["x", "y"])),
            IdealHandle(R, ["x^2", "x*y", "y^2"]),
        )

    def test_by_unit_ideal(self):
        R = ring_xy()
        I = IdealHandle(R, ["x^2"])
        one = IdealHandle(R, [MultiPoly.const(R, 1)])
        assert ideal_equal(colon_ideal(I, one), I)


class TestSaturate:
    def test_examples(self):
        R = ring_xy()
        res = saturate(IdealHandle(R, ["x^2*y"]), parse_poly("y", R))
        assert res.stabilization_exponent == 1
        assert ideal_equal(res.ideal, IdealHandle(R, ["x^2"]))
        res = saturate(IdealHandle(R, ["x^2"]), parse_poly("y", R))
        assert res.stabilization_exponent == 0
        res = saturate(IdealHandle(R, ["x^2", "x*y"]), parse_poly("y", R))
        assert res.stabilization_exponent == 1
        assert ideal_equal(res.ideal, IdealHandle(R, ["x"]))

    def test_fixed_point(self):
        R = ring_txy()
        I = IdealHandle(R, ["x^2*y", "t*x^3"])
        f = parse_poly("y", R)
        res = saturate(I, f)
        assert ideal_equal(colon(res.ideal, f), res.ideal)


class TestPowerContainment:
    def test_examples(self):
        R = ring_xy()
        P = IdealHandle(R, ["x", "y"])
        assert power_containment(P, 2, IdealHandle(R, ["x^2", "x*y", "y^2"]))
        assert not power_containment(P, 1, IdealHandle(R, ["x^2", "y^2"]))
        assert power_containment(P, 3, IdealHandle(R, ["x^2", "y^2"]))

    def test_k_zero_checks_unit(self):
        R = ring_xy()
        P = IdealHandle(R, ["x"])
        assert power_containment(P, 0, IdealHandle(R, ["x", "x+1"]))
        assert not power_containment(P, 0, IdealHandle(R, ["x"]))


class TestMemberBoundedOracle:
    def test_examples(self):
        R = ring_txy()
        I = IdealHandle(R, ["x^2", "y^2", "x^2+t*x*y+y^2"])
        assert member_bounded_oracle(parse_poly("t*x*y", R), I, 1, 2)
        assert not member_bounded_oracle(
            parse_poly("x", R), IdealHandle(R, ["x^2"]), 3, 3
        )

    def test_lemma_colon_instance(self):
        R = ring_txy(P3)
        s = SequenceSpec.parse(P3, "1", "t", "1")
        I = IdealHandle(R, ["x^3", "y^3", "x^2+t*x*y+y^2"])
        f = parse_poly("x*y^2", R) * MultiPoly.from_unipoly(R, p_seq(s, 2), "t")
        assert member_bounded_oracle(f, I, 3 * 1, 3)

    def test_agrees_with_normal_form(self, rng):
        R = ring_txy(P3)
        for _ in range(60):
            gens = []
            for _ in range(rng.randint(1, 3)):
                terms = {
                    tuple(rng.randrange(3) for _ in range(3)): rng.randrange(1, 3)
                    for _ in range(rng.randint(1, 3))
                }
                gens.append(MultiPoly(R, terms))
            gens = [g for g in gens if not g.is_zero] or [parse_poly("x", R)]
            I = IdealHandle(R, gens)
            f = MultiPoly(
                R,
                {
                    tuple(rng.randrange(3) for _ in range(3)): rng.randrange(1, 3)
                    for _ in range(rng.randint(1, 3))
                },
            )
            truth = normal_form(f, I).is_zero
            if truth:
                assert member_bounded_oracle(f, I, 8, 8)
            else:
                assert not member_bounded_oracle(f, I, 8, 8)


class TestQuotientRingConvention:
    def test_relations_ride_along(self):
        R = RingSpec(P2, (("t", 0), ("x", 1), ("y", 1)), ("x^2+t*x*y+y^2",))
        I = IdealHandle(R, ["x^2", "y^2"])
        # t*x*y = relation - x^2 - y^2 lies in the ideal of the quotient
        assert normal_form(parse_poly("t*x*y", R), I).is_zero

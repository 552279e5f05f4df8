import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from conftest import lsr_terms
from redsem.corpus import fuzz_lsr
from redsem.derivative import EMPTY, HOLE, InTag
from redsem.langdefs import (
    LAM_C,
    RESET_C,
    SHIFT,
    add,
    add_l,
    add_r,
    app,
    app_r,
    lam,
    lift,
    num,
    rename,
    reset,
    shift,
    spec_for,
    subst0,
    substitute,
    var,
)
from redsem.strategy import shape


class TestArithmetic:
    def test_contract(self, hr):
        c = (add_r(num(9)),)
        assert hr.contract(add(num(1), num(2)), c) == (num(3), c)
        assert hr.contract(num(5), c) is None

    def test_is_redex(self, hr):
        assert not hr.is_redex(add(num(1), add(num(2), num(3))))
        assert hr.is_redex(add(num(0), num(0)))

    def test_values(self, hr):
        assert hr.is_val(num(0)) and not hr.is_val(add(num(0), num(0)))


class TestLambdaShiftReset:
    def test_values(self, lsr):
        assert lsr.is_val(lam(var(0))) and lsr.is_val(num(1))
        assert not lsr.is_val(var(0)) and not lsr.is_val(shift(num(1)))

    def test_positions(self, lsr):
        d = lsr.desc
        assert not lsr.redex_pos(shape(d, LAM_C))
        assert not lsr.redex_pos(shape(d, InTag(SHIFT, HOLE)))
        assert lsr.redex_pos(shape(d, RESET_C))
        assert lsr.redex_pos(shape(d, app_r(lam(var(0)))))

    def test_redexes(self, lsr):
        assert lsr.is_redex(app(lam(var(0)), num(1)))
        assert not lsr.is_redex(app(lam(var(0)), var(0)))
        assert not lsr.is_redex(app(num(1), num(2)))
        assert lsr.is_redex(reset(lam(var(0))))
        assert lsr.is_redex(shift(var(3)))
        assert not lsr.is_redex(lam(add(num(1), num(2))))

    def test_beta(self, lsr):
        assert lsr.contract(app(lam(var(0)), num(1)), EMPTY) == (num(1), EMPTY)

    def test_reset_value(self, lsr):
        c = (add_r(num(1)),)
        assert lsr.contract(reset(num(5)), c) == (num(5), c)

    def test_shift_captures_up_to_reset(self, lsr):
        b = app(var(0), num(3))
        c = (add_r(num(2)), RESET_C, add_r(num(1)))
        assert lsr.contract(shift(b), c) == (
            app(lam(b), lam(reset(add(num(2), var(0))))), (RESET_C, add_r(num(1))))

    def test_shift_without_reset_is_stuck(self, lsr):
        assert lsr.contract(shift(num(0)), (add_l(num(1)),)) is None
        assert lsr.contract(shift(num(0)), EMPTY) is None

    def test_shift_lifts_only_absorbed_frames(self, lsr):
        # var 5 sits outside the reset: it must keep its index
        c = (add_l(var(1)), RESET_C, add_r(var(5)))
        got = lsr.contract(shift(var(0)), c)
        assert got == (app(lam(var(0)), lam(reset(add(var(0), var(2))))), (RESET_C, add_r(var(5))))

    def test_non_redex(self, lsr):
        assert lsr.contract(app(num(1), num(2)), EMPTY) is None
        assert lsr.contract(var(0), EMPTY) is None

    def test_spec_for(self):
        assert spec_for("hr").name == "hr" and spec_for("lsr").name == "lsr"
        with pytest.raises(ValueError):
            spec_for("ml")


class TestBuilders:
    @pytest.mark.parametrize("bad", [-1, 2.0, "1", True])
    def test_nat_payloads_checked(self, bad):
        with pytest.raises(ValueError):
            num(bad)
        with pytest.raises(ValueError):
            var(bad)


class TestDeBruijn:
    def test_lift(self):
        assert lift(num(3)) == num(3)
        assert lift(var(0)) == var(1)
        assert lift(lam(var(0))) == lam(var(0))
        assert lift(lam(var(1))) == lam(var(2))
        assert lift(shift(add(var(0), var(1)))) == shift(add(var(0), var(2)))

    def test_both_indices_bound(self):
        t = lam(lam(add(var(0), var(1))))
        assert subst0(t, num(42)) == t

    def test_index_reaches_substituted_variable(self):
        assert subst0(lam(lam(add(var(0), var(2)))), num(42)) == lam(lam(add(var(0), num(42))))

    def test_free_index_above_is_lowered(self):
        assert subst0(lam(lam(add(var(0), var(3)))), num(42)) == lam(lam(add(var(0), var(2))))

    def test_substituted_open_value_is_lifted_under_binders(self):
        assert subst0(lam(var(1)), var(0)) == lam(var(1))

    def test_rename(self):
        assert rename(app(var(0), lam(var(1))), lambda n: n + 10) == app(var(10), lam(var(11)))

    def test_identity_substitution(self):
        t = lam(app(var(0), var(3)))
        assert substitute(t, var) == t

    @given(lsr_terms)
    def test_lift_then_subst0_cancels(self, t):
        assert subst0(lift(t), num(7)) == t

    @given(lsr_terms, lsr_terms)
    def test_subst0_matches_textbook(self, t, v):
        expected = oracles.tsubst0(oracles.to_tuple(t), oracles.to_tuple(v))
        assert oracles.to_tuple(subst0(t, v)) == expected

    @given(lsr_terms)
    def test_lift_matches_textbook(self, t):
        assert oracles.to_tuple(lift(t)) == oracles.tshift(1, 0, oracles.to_tuple(t))

    @given(lsr_terms)
    def test_closed_terms_unchanged_by_lift(self, t):
        assume(not oracles.free_vars(oracles.to_tuple(t)))
        assert lift(t) == t

    @given(lsr_terms, st.integers(0, 3))
    def test_rename_composes(self, t, k):
        assert rename(rename(t, lambda n: n + k), lambda n: n + 1) == rename(t, lambda n: n + k + 1)

    def test_cancellation_on_fuzzed_corpus(self):
        for t in fuzz_lsr(1000, seed=1):
            assert subst0(lift(t), var(0)) == t

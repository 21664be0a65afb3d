import random
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from conftest import SPEC2, SPEC3, random_qelement
from qsl2 import (
    ClassicalElement,
    ClassicalMonomial,
    Cyclotomic,
    QElement,
    QMonomial,
    central_reduce,
    closure_diagnostic,
    coproduct,
    is_central,
    lift,
    make_root_spec,
    module_element_from_json,
    module_recompose,
    power,
    qmul,
    remark_root_spec,
    straighten,
    zeta_pow,
)

F = Fraction


def _classical_gens(spec):
    return tuple(ClassicalElement.generator(spec, n)
                 for n in ("alpha", "beta", "gamma", "delta"))


@pytest.mark.parametrize("spec", [SPEC2, SPEC3])
def test_lift_of_generators(spec):
    l = spec.l
    al, be, ga, de = _classical_gens(spec)
    for g, letter in ((al, "a"), (be, "b"), (ga, "c"), (de, "d")):
        assert lift(g) == power(QElement.generator(spec, letter), l)


@pytest.mark.parametrize("spec", [SPEC2, SPEC3])
def test_lift_is_an_algebra_morphism(spec):
    rng = random.Random(spec.l)
    gens = _classical_gens(spec)
    for _ in range(8):
        g = ClassicalElement.scalar(spec, F(rng.randrange(-2, 3)))
        h = ClassicalElement.one(spec)
        for _ in range(rng.randrange(3)):
            g = g * rng.choice(gens) + ClassicalElement.scalar(spec, F(rng.randrange(-1, 2)))
            h = h * rng.choice(gens)
        assert lift(g * h) == qmul(lift(g), lift(h))
        assert lift(g + h) == lift(g) + lift(h)


def test_lift_of_determinant_is_one():
    for spec in (SPEC2, SPEC3, make_root_spec(5)):
        al, be, ga, de = _classical_gens(spec)
        assert lift(al * de - be * ga) == QElement.one(spec)


def test_centrality_by_parity():
    for spec, central in ((SPEC3, True), (SPEC2, False), (make_root_spec(5), True)):
        for g in _classical_gens(spec):
            assert is_central(lift(g)) == central
    # even case: l-th powers of single letters anticommute with the odd letters
    A, B = QElement.generator(SPEC2, "a"), QElement.generator(SPEC2, "b")
    assert qmul(power(A, 2), B) == qmul(B, power(A, 2)) * (-1)


def test_restricted_coproduct_is_classical():
    # Delta(lift(gen)) matches the classical coalgebra on alpha..delta
    for spec in (SPEC2, SPEC3):
        l = spec.l
        MA, MB = QMonomial(l, 0, 0, 0), QMonomial(0, l, 0, 0)
        MC, MD = QMonomial(0, 0, l, 0), QMonomial(0, 0, 0, l)
        one = Cyclotomic.one(spec.N)
        al, be, ga, de = _classical_gens(spec)
        assert coproduct(lift(al)).terms == {(MA, MA): one, (MB, MC): one}
        assert coproduct(lift(be)).terms == {(MA, MB): one, (MB, MD): one}
        assert coproduct(lift(ga)).terms == {(MC, MA): one, (MD, MC): one}
        assert coproduct(lift(de)).terms == {(MC, MB): one, (MD, MD): one}


def test_central_reduce_even_case_signs():
    # l = 2: reducing a^2 b extracts alpha with a side-dependent sign
    al = ClassicalElement.generator(SPEC2, "alpha")
    x = straighten("aab", SPEC2)
    B = QMonomial(0, 1, 0, 0)
    left = central_reduce(x, "left")
    right = central_reduce(x, "right")
    assert left.terms == {B: al}
    assert right.terms == {B: al * F(-1)}
    assert module_recompose(left) == x
    assert module_recompose(right) == x


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_central_reduce_roundtrip(data):
    spec = data.draw(st.sampled_from((SPEC2, SPEC3)))
    side = data.draw(st.sampled_from(("left", "right")))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    x = random_qelement(spec, rng, nterms=3, emax=3 * spec.l)
    me = central_reduce(x, side)
    assert me.side == side
    assert module_recompose(me) == x
    # every residual monomial has all exponents < l
    for mono in me.terms:
        assert max(mono) < spec.l


def test_central_reduce_extracts_lifted_factors():
    # on b,c-only residuals no a/d contraction can happen, so reducing
    # lift(g) * x recovers g exactly on each residual monomial
    rng = random.Random(9)
    for spec in (SPEC2, SPEC3):
        al, be, ga, de = _classical_gens(spec)
        g = al + be * F(2) - de * ga
        for _ in range(5):
            x = QElement(spec, {
                QMonomial(0, rng.randrange(spec.l), rng.randrange(spec.l), 0):
                    zeta_pow(spec, rng.randrange(spec.N))
                for _ in range(2)
            })
            want = {m: g * z for m, z in x.terms.items()}
            got_left = central_reduce(qmul(lift(g), x), "left")
            got_right = central_reduce(qmul(x, lift(g)), "right")
            assert got_left.terms == want
            assert got_right.terms == want


def test_central_reduce_rejects_bad_side():
    with pytest.raises(ValueError):
        central_reduce(QElement.one(SPEC3), "middle")


def test_module_element_json_roundtrip():
    x = straighten("aab", SPEC2) + straighten("bcd", SPEC2)
    me = central_reduce(x, "right")
    doc = me.to_json()
    assert doc["side"] == "right"
    back = module_element_from_json(doc, SPEC2)
    assert back == me
    assert module_recompose(back) == x


def test_frobenius_ops_reject_nonstandard_spec():
    spec = remark_root_spec(3)
    g = ClassicalElement.generator(spec, "alpha")
    with pytest.raises(ValueError):
        lift(g)
    with pytest.raises(ValueError):
        central_reduce(QElement.one(spec), "left")


def test_closure_diagnostic_standard_odd():
    rep = closure_diagnostic(3, 3)
    assert (rep.l, rep.order, rep.standard, rep.power) == (3, 3, True, 3)
    assert rep.powers_commute and rep.powers_central
    assert rep.determinant_closes and rep.coproduct_closes
    one = Cyclotomic.one(3)
    zero = Cyclotomic.zero(3)
    assert rep.lth_det_coeffs == (one, zero, zero, one)
    assert rep.power_det_coeffs == rep.lth_det_coeffs


def test_closure_diagnostic_standard_even():
    rep = closure_diagnostic(2, 4)
    assert (rep.l, rep.order, rep.standard, rep.power) == (2, 4, True, 2)
    assert rep.determinant_closes and rep.coproduct_closes
    one = Cyclotomic.one(4)
    zero = Cyclotomic.zero(4)
    assert rep.lth_det_coeffs == (one, zero, one)


def test_closure_diagnostic_nonstandard():
    rep = closure_diagnostic(3, 6)
    assert (rep.l, rep.order, rep.standard, rep.power) == (3, 6, False, 6)
    one = Cyclotomic.one(6)
    zero = Cyclotomic.zero(6)
    # a^3 d^3 = 1 - b^3 c^3: the l-th power determinant picks up a sign
    assert rep.lth_det_coeffs == (one, zero, zero, -one)
    assert not rep.determinant_closes
    assert not rep.coproduct_closes
    # at order 2l the 2l-th powers still commute, but the l-th powers do not
    assert rep.powers_commute and rep.powers_central
    spec = remark_root_spec(3)
    A3 = power(QElement.generator(spec, "a"), 3)
    B3 = power(QElement.generator(spec, "b"), 3)
    assert qmul(A3, B3) == qmul(B3, A3) * (-1)


def test_closure_diagnostic_rejects_mismatched_pairs():
    for l, order in ((3, 4), (2, 2), (4, 4)):
        with pytest.raises(ValueError):
            closure_diagnostic(l, order)

import random
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from conftest import SPEC2, SPEC3, qelements, words
from qsl2 import (
    ClassicalElement,
    ClassicalMonomial,
    Cyclotomic,
    QElement,
    QMonomial,
    TensorElement,
    antipode,
    classical_element_from_json,
    classical_mul,
    classical_normalize,
    coproduct,
    counit,
    make_root_spec,
    p_coeff,
    power,
    qelement_from_json,
    qmul,
    straighten,
    tensor_mul,
    zeta_pow,
)
from qsl2.qalgebra import _mono_mul, _reduce_mixed_recursive

F = Fraction


def _gens(spec):
    return tuple(QElement.generator(spec, ch) for ch in "abcd")


@pytest.mark.parametrize("spec", [SPEC2, SPEC3, make_root_spec(5, zeta_exponent=2)])
def test_defining_relations(spec):
    A, B, C, D = _gens(spec)
    q = zeta_pow(spec, 1)
    assert qmul(A, B) == qmul(B, A) * q
    assert qmul(A, C) == qmul(C, A) * q
    assert qmul(B, D) == qmul(D, B) * q
    assert qmul(C, D) == qmul(D, C) * q
    assert qmul(B, C) == qmul(C, B)
    assert qmul(A, D) - qmul(D, A) == qmul(B, C) * (q - zeta_pow(spec, -1))
    assert qmul(A, D) - qmul(B, C) * q == QElement.one(spec)


def test_derived_relations():
    A, B, C, D = _gens(SPEC3)
    q = zeta_pow(SPEC3, 1)
    bc = qmul(B, C)
    assert qmul(D, A) == QElement.one(SPEC3) + bc * zeta_pow(SPEC3, -1)
    assert qmul(A, D) == QElement.one(SPEC3) + bc * q


def test_straighten_word():
    # abcd -> q^2 bc + q^3 (bc)^2
    got = straighten("abcd", SPEC3)
    want = QElement(SPEC3, {
        QMonomial(0, 1, 1, 0): zeta_pow(SPEC3, 2),
        QMonomial(0, 2, 2, 0): zeta_pow(SPEC3, 3),
    })
    assert got == want
    assert straighten("", SPEC3) == QElement.one(SPEC3)
    with pytest.raises(ValueError):
        straighten("abe", SPEC3)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_straighten_split_confluence(data):
    spec = data.draw(st.sampled_from((SPEC2, SPEC3)))
    word = data.draw(words(8))
    cut = data.draw(st.integers(0, len(word)))
    whole = straighten(word, spec)
    assert whole == qmul(straighten(word[:cut], spec), straighten(word[cut:], spec))


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_mono_mul_matches_recursive_contraction(data):
    # the closed-form product of a^i ... d^m blocks agrees with one-step
    # recursion on the mixed pair a^i (...) d^m
    spec = data.draw(st.sampled_from((SPEC2, SPEC3)))
    emax = 2 * spec.l
    i = data.draw(st.integers(1, emax))
    j = data.draw(st.integers(0, emax))
    k = data.draw(st.integers(0, emax))
    m = data.draw(st.integers(1, emax))
    closed = dict(_mono_mul(spec, QMonomial(i, j, k, 0), QMonomial(0, 0, 0, m)))
    recursive = _reduce_mixed_recursive(spec, QMonomial(i, j, k, m))
    assert closed == {mm: z for mm, z in recursive.items() if not z.is_zero()}


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_product_associativity(data):
    spec = data.draw(st.sampled_from((SPEC2, SPEC3)))
    x = data.draw(qelements(spec, emax=spec.l))
    y = data.draw(qelements(spec, emax=spec.l))
    w = data.draw(qelements(spec, emax=spec.l))
    assert qmul(qmul(x, y), w) == qmul(x, qmul(y, w))
    assert qmul(x + y, w) == qmul(x, w) + qmul(y, w)


def test_power():
    A, B, C, D = _gens(SPEC3)
    x = qmul(A, D) + B
    assert power(x, 0) == QElement.one(SPEC3)
    assert power(x, 3) == qmul(x, qmul(x, x))
    assert x ** 2 == qmul(x, x)
    with pytest.raises(ValueError):
        power(x, -1)


@pytest.mark.parametrize("l", [2, 3, 5])
def test_mixed_power_row(l):
    # a^k d^k = sum_j p_{k,j} (bc)^j
    spec = make_root_spec(l)
    A, B, C, D = _gens(spec)
    bc = qmul(B, C)
    for k in range(l + 1):
        want = QElement.zero(spec)
        for j in range(k + 1):
            want = want + power(bc, j) * p_coeff(spec, k, j)
        assert qmul(power(A, k), power(D, k)) == want


def test_qelement_api():
    A, B, C, D = _gens(SPEC3)
    x = A * 2 - qmul(B, C) * F(1, 2)
    assert x.coefficient(QMonomial(1, 0, 0, 0)) == Cyclotomic.from_rational(3, F(2))
    assert x.coefficient(QMonomial(0, 0, 0, 1)).is_zero()
    assert x.max_exponent() == 1
    assert (x - x).is_zero()
    with pytest.raises(ValueError):
        QElement(SPEC3, {QMonomial(1, 0, 0, 1): Cyclotomic.one(3)})  # not reduced
    with pytest.raises(ValueError):
        qmul(A, QElement.generator(SPEC2, "a"))


def test_qelement_json_roundtrip():
    x = straighten("abcd", SPEC3) + QElement.scalar(SPEC3, F(5, 3))
    doc = x.to_json()
    assert doc["spec"]["l"] == 3
    assert qelement_from_json(doc) == x
    assert qelement_from_json(doc, SPEC3) == x
    with pytest.raises(ValueError):
        qelement_from_json(doc, SPEC2)


def test_coproduct_on_generators():
    A, B, C, D = _gens(SPEC3)
    one = Cyclotomic.one(3)
    MA, MB, MC, MD = (QMonomial(1, 0, 0, 0), QMonomial(0, 1, 0, 0),
                      QMonomial(0, 0, 1, 0), QMonomial(0, 0, 0, 1))
    assert coproduct(A).terms == {(MA, MA): one, (MB, MC): one}
    assert coproduct(B).terms == {(MA, MB): one, (MB, MD): one}
    assert coproduct(C).terms == {(MC, MA): one, (MD, MC): one}
    assert coproduct(D).terms == {(MC, MB): one, (MD, MD): one}


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_coproduct_is_multiplicative(data):
    spec = data.draw(st.sampled_from((SPEC2, SPEC3)))
    x = data.draw(qelements(spec, emax=spec.l, max_terms=2))
    y = data.draw(qelements(spec, emax=spec.l, max_terms=2))
    assert coproduct(qmul(x, y)) == tensor_mul(coproduct(x), coproduct(y))


def test_counit_is_a_character():
    spec = SPEC3
    A, B, C, D = _gens(spec)
    assert counit(A).is_one() and counit(D).is_one()
    assert counit(B).is_zero() and counit(C).is_zero()
    rng = random.Random(3)
    for _ in range(10):
        w1 = "".join(rng.choice("abcd") for _ in range(rng.randrange(4)))
        w2 = "".join(rng.choice("abcd") for _ in range(rng.randrange(4)))
        x, y = straighten(w1, spec), straighten(w2, spec)
        assert counit(qmul(x, y)) == counit(x) * counit(y)


def test_antipode_on_generators():
    for spec in (SPEC2, SPEC3):
        A, B, C, D = _gens(spec)
        assert antipode(A) == D
        assert antipode(D) == A
        assert antipode(B) == B * (-zeta_pow(spec, -1))
        assert antipode(C) == C * (-zeta_pow(spec, 1))


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_antipode_is_antimultiplicative(data):
    spec = data.draw(st.sampled_from((SPEC2, SPEC3)))
    x = data.draw(qelements(spec, emax=spec.l, max_terms=2))
    y = data.draw(qelements(spec, emax=spec.l, max_terms=2))
    assert antipode(qmul(x, y)) == qmul(antipode(y), antipode(x))


def _coassociativity_gap(spec, x):
    t = coproduct(x)
    left, right = {}, {}
    for (m1, m2), v in t.terms.items():
        for (n1, n2), w in coproduct(QElement.monomial(spec, m1)).terms.items():
            key = (n1, n2, m2)
            left[key] = left.get(key, Cyclotomic.zero(spec.N)) + v * w
        for (n1, n2), w in coproduct(QElement.monomial(spec, m2)).terms.items():
            key = (m1, n1, n2)
            right[key] = right.get(key, Cyclotomic.zero(spec.N)) + v * w
    gaps = set()
    for key in set(left) | set(right):
        d = left.get(key, Cyclotomic.zero(spec.N)) - right.get(key, Cyclotomic.zero(spec.N))
        if not d.is_zero():
            gaps.add(key)
    return gaps


def _hopf_axioms_hold(spec, x):
    if _coassociativity_gap(spec, x):
        return False
    t = coproduct(x)
    eps_l = QElement.zero(spec)
    eps_r = QElement.zero(spec)
    conv_l = QElement.zero(spec)
    conv_r = QElement.zero(spec)
    for (m1, m2), v in t.terms.items():
        eps_l = eps_l + QElement.monomial(spec, m2, v * counit(QElement.monomial(spec, m1)))
        eps_r = eps_r + QElement.monomial(spec, m1, v * counit(QElement.monomial(spec, m2)))
        conv_l = conv_l + qmul(antipode(QElement.monomial(spec, m1, v)), QElement.monomial(spec, m2))
        conv_r = conv_r + qmul(QElement.monomial(spec, m1, v), antipode(QElement.monomial(spec, m2)))
    unit_eps = QElement.scalar(spec, counit(x))
    return eps_l == x and eps_r == x and conv_l == unit_eps and conv_r == unit_eps


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_hopf_axioms(data):
    spec = data.draw(st.sampled_from((SPEC2, SPEC3)))
    word = data.draw(words(4))
    assert _hopf_axioms_hold(spec, straighten(word, spec))


@pytest.mark.parametrize("l", [2, 3])
def test_lth_power_coproduct_splits(l):
    # Delta(a^l) = a^l @ a^l + b^l @ c^l at a standard root
    spec = make_root_spec(l)
    one = Cyclotomic.one(spec.N)
    want = {
        (QMonomial(l, 0, 0, 0), QMonomial(l, 0, 0, 0)): one,
        (QMonomial(0, l, 0, 0), QMonomial(0, 0, l, 0)): one,
    }
    A = QElement.generator(spec, "a")
    assert coproduct(power(A, l)).terms == want


def test_tensor_element_ops():
    A, B, C, D = _gens(SPEC3)
    t = TensorElement.of(A, D) + TensorElement.of(B, C)
    assert t - t == TensorElement.zero(SPEC3)
    assert (t * 2).terms[(QMonomial(1, 0, 0, 0), QMonomial(0, 0, 0, 1))] == 2
    with pytest.raises(ValueError):
        TensorElement(SPEC3, {(QMonomial(1, 0, 0, 1), QMonomial(0, 0, 0, 0)): Cyclotomic.one(3)})


def _classical_gens(spec):
    return tuple(ClassicalElement.generator(spec, n)
                 for n in ("alpha", "beta", "gamma", "delta"))


def test_classical_determinant_normalization():
    al, be, ga, de = _classical_gens(SPEC3)
    assert al * de == ClassicalElement.one(SPEC3) + be * ga
    # (alpha*delta)^2 expands through the binomial rule
    assert (al * de) ** 2 == (ClassicalElement.one(SPEC3) + be * ga) ** 2
    x = ClassicalElement.monomial(SPEC3, ClassicalMonomial(2, 0, 0, 1))
    assert x == al * al * de == al * (ClassicalElement.one(SPEC3) + be * ga)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_classical_ring_is_commutative(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    spec = SPEC3
    gens = _classical_gens(spec)

    def rand():
        g = ClassicalElement.scalar(spec, F(rng.randrange(-2, 3)))
        for _ in range(rng.randrange(3)):
            g = g * rng.choice(gens) + ClassicalElement.scalar(spec, F(rng.randrange(-1, 2)))
        return g

    x, y, w = rand(), rand(), rand()
    assert classical_mul(x, y) == classical_mul(y, x)
    assert classical_mul(classical_mul(x, y), w) == classical_mul(x, classical_mul(y, w))
    assert (x + y) * w == x * w + y * w


def test_classical_normalize_and_json():
    spec = SPEC3
    raw = {ClassicalMonomial(1, 0, 0, 1): Cyclotomic.one(3)}
    normalized = classical_normalize(spec, raw)
    assert normalized == ClassicalElement.one(spec) + ClassicalElement.monomial(
        spec, ClassicalMonomial(0, 1, 1, 0)
    )
    doc = normalized.to_json()
    assert classical_element_from_json(doc, spec) == normalized
    assert classical_element_from_json(doc) == normalized

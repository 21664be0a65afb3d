"""The l-th-power (Frobenius) subalgebra and module coordinates over it.

At the chosen root of unity the elements alpha = a^l, beta = b^l,
gamma = c^l, delta = d^l generate a copy of the classical SL(2)
coordinate ring: they commute pairwise, satisfy
alpha*delta - beta*gamma = 1, and for odd l are central.  For even l
they are not central (a^l picks up q^l = -1 past b and c), which is why
the left and right module structures differ by signs.

central_reduce writes an element as a combination of lifted classical
coefficients times residual monomials with all exponents below l; the
sign bookkeeping is done by the multiplication engine itself, never by
a separate table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import Cyclotomic, RootSpec, p_expansion, zeta_pow
from .qalgebra import (
    CLASSICAL_ONE,
    ClassicalElement,
    ClassicalMonomial,
    MONO_ONE,
    QElement,
    QMonomial,
    TensorElement,
    classical_element_from_json,
    coproduct,
    power,
    qmul,
    tensor_mul,
)
from .qalgebra import _mono_mul  # engine route for single-monomial products

SIDES = ("left", "right")


def _require_standard(spec: RootSpec, what: str):
    if not spec.standard:
        raise ValueError("%s requires a standard root case (got l=%d, N=%d)" % (what, spec.l, spec.N))


def _check_side(side: str):
    if side not in SIDES:
        raise ValueError("side must be 'left' or 'right', got %r" % (side,))


def lift(g: ClassicalElement) -> QElement:
    """The algebra map sending alpha, beta, gamma, delta to a^l, b^l, c^l, d^l."""
    spec = g.spec
    _require_standard(spec, "lift")
    l = spec.l
    terms = {}
    for m, v in g.terms.items():
        # reduced classical keys have min(alpha, delta) = 0, so the lifted
        # word is already a normal monomial with scalar 1
        mono = QMonomial(l * m.alpha, l * m.beta, l * m.gamma, l * m.delta)
        terms[mono] = terms[mono] + v if mono in terms else v
    return QElement(spec, terms)


@dataclass(frozen=True)
class ModuleElement:
    """Coordinates of an element over the l-th-power subalgebra.

    terms maps residual monomials (all exponents < l, min(a,d) = 0) to
    classical coefficients; side records whether coefficients act by
    multiplication on the left or the right.
    """

    spec: RootSpec
    side: str
    terms: dict[QMonomial, ClassicalElement]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "terms": [
                {"monomial": {"a": m.a, "b": m.b, "c": m.c, "d": m.d},
                 "coeff": g.to_json()}
                for m, g in self.sorted_terms()
            ],
        }


def module_element_from_json(data: dict, spec: RootSpec) -> ModuleElement:
    terms = {}
    for t in data["terms"]:
        mm = t["monomial"]
        mono = QMonomial(int(mm["a"]), int(mm["b"]), int(mm["c"]), int(mm["d"]))
        g = classical_element_from_json(t["coeff"], spec)
        terms[mono] = terms[mono] + g if mono in terms else g
    terms = {m: g for m, g in terms.items() if not g.is_zero()}
    return ModuleElement(spec, data["side"], terms)


def _merge(acc: dict[QMonomial, ClassicalElement], mono: QMonomial, g: ClassicalElement):
    if mono in acc:
        acc[mono] = acc[mono] + g
    else:
        acc[mono] = g


def central_reduce(x: QElement, side: str = "left") -> ModuleElement:
    """Split every monomial into l-th-power blocks times a residual monomial.

    The scalar picked up by placing the blocks on the requested side is
    computed by multiplying the lifted blocks against the residual with
    the engine and comparing against the original monomial.
    """
    _check_side(side)
    spec = x.spec
    _require_standard(spec, "central_reduce")
    l = spec.l
    acc: dict[QMonomial, ClassicalElement] = {}
    for mono, coeff in x.terms.items():
        i, j, k, m = mono
        blocks = ClassicalMonomial(i // l, j // l, k // l, m // l)
        residual = QMonomial(i % l, j % l, k % l, m % l)
        if blocks == CLASSICAL_ONE:
            _merge(acc, residual, ClassicalElement.scalar(spec, coeff))
            continue
        lifted = QMonomial(l * blocks.alpha, l * blocks.beta, l * blocks.gamma, l * blocks.delta)
        if side == "left":
            prod = _mono_mul(spec, lifted, residual)
        else:
            prod = _mono_mul(spec, residual, lifted)
        if len(prod) != 1 or prod[0][0] != mono:
            raise AssertionError("block extraction produced a non-monomial product for %s" % (mono,))
        tau = prod[0][1]
        _merge(acc, residual, ClassicalElement.monomial(spec, blocks, coeff * tau.inv()))
    acc = {mm: g for mm, g in acc.items() if not g.is_zero()}
    return ModuleElement(spec, side, acc)


def module_recompose(me: ModuleElement) -> QElement:
    """Multiply coefficients back on their side; inverse of central_reduce."""
    _check_side(me.side)
    spec = me.spec
    acc = QElement.zero(spec)
    for mono, g in me.terms.items():
        base = QElement.monomial(spec, mono)
        if me.side == "left":
            acc = acc + qmul(lift(g), base)
        else:
            acc = acc + qmul(base, lift(g))
    return acc


def is_central(x: QElement) -> bool:
    """Does x commute with all four generators?"""
    for ch in "abcd":
        g = QElement.generator(x.spec, ch)
        if qmul(x, g) != qmul(g, x):
            return False
    return True


@dataclass(frozen=True)
class ClosureReport:
    """What survives of the Frobenius picture for a given (l, order) pair."""

    l: int
    order: int
    standard: bool
    power: int  # the exponent p whose powers are examined
    powers_commute: bool
    powers_central: bool
    lth_det_coeffs: tuple[Cyclotomic, ...]  # a^l d^l = sum_j coeff_j (bc)^j
    power_det_coeffs: tuple[Cyclotomic, ...]  # a^p d^p = sum_j coeff_j (bc)^j
    determinant_closes: bool  # a^p d^p lies in the span of 1 and (bc)^p
    coproduct_closes: bool  # Delta(a^p) == a^p @ a^p + b^p @ c^p


def closure_diagnostic(l: int, N: int) -> ClosureReport:
    """Probe which parts of the l-th-power construction close for q of order N."""
    from .cyclo import make_root_spec, remark_root_spec

    if l % 2 and N == l:
        spec = make_root_spec(l)
    elif l % 2 == 0 and N == 2 * l:
        spec = make_root_spec(l)
    elif l % 2 and N == 2 * l:
        spec = remark_root_spec(l)
    else:
        raise ValueError("unsupported pair l=%d, N=%d" % (l, N))
    p = l if spec.standard else 2 * l

    gens = [power(QElement.generator(spec, ch), p) for ch in "abcd"]
    powers_commute = all(
        qmul(gens[i], gens[j]) == qmul(gens[j], gens[i])
        for i in range(4) for j in range(i + 1, 4)
    )
    powers_central = all(is_central(g) for g in gens)

    lrow = p_expansion(spec, l)
    prow = p_expansion(spec, p)
    determinant_closes = all(prow[j].is_zero() for j in range(1, p))

    one = Cyclotomic.one(spec.N)
    expected = TensorElement(spec, {
        (QMonomial(p, 0, 0, 0), QMonomial(p, 0, 0, 0)): one,
        (QMonomial(0, p, 0, 0), QMonomial(0, 0, p, 0)): one,
    })
    coproduct_closes = coproduct(power(QElement.generator(spec, "a"), p)) == expected

    return ClosureReport(
        l=l,
        order=N,
        standard=spec.standard,
        power=p,
        powers_commute=powers_commute,
        powers_central=powers_central,
        lth_det_coeffs=tuple(lrow),
        power_det_coeffs=tuple(prow),
        determinant_closes=determinant_closes,
        coproduct_closes=coproduct_closes,
    )

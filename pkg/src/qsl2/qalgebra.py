"""PBW normal-form engine for the quantum SL(2) coordinate ring.

Relations (q the chosen root of unity):

    ab = q ba   ac = q ca   bd = q db   bc = cb   cd = q dc
    ad - da = (q - q^-1) bc      ad - q bc = 1

Normal form: monomials a^i b^j c^k d^m with min(i, m) = 0, coefficients in
Q(zeta_N).  Mixed a,d powers contract through the product rows

    a^t d^t = prod_{j=1..t} (1 + q^(2j-1) bc)
    d^t a^t = prod_{j=1..t} (1 + q^(1-2j) bc)

which hold for every t with no division.  The module also carries the Hopf
maps (coproduct, counit, antipode) and the commutative coordinate ring of
classical SL(2) used for Frobenius coefficients.
"""

from __future__ import annotations

from functools import lru_cache
from fractions import Fraction
from typing import Iterable, NamedTuple

from .cyclo import (
    Cyclotomic,
    RootSpec,
    cyclotomic_from_json,
    p_expansion,
    root_spec_from_json,
    root_spec_to_json,
    zeta_pow,
)


class QMonomial(NamedTuple):
    """Exponents of a normal-ordered monomial a^a b^b c^c d^d."""

    a: int
    b: int
    c: int
    d: int

    def degree(self) -> int:
        return self.a + self.b + self.c + self.d

    def sort_key(self):
        # graded, then lexicographic with a > b > c > d
        return (self.degree(), -self.a, -self.b, -self.c, -self.d)

    def is_reduced(self) -> bool:
        return min(self.a, self.d) == 0 and min(self.a, self.b, self.c, self.d) >= 0


MONO_ONE = QMonomial(0, 0, 0, 0)

_LETTERS = ("a", "b", "c", "d")
_LETTER_MONO = {
    "a": QMonomial(1, 0, 0, 0),
    "b": QMonomial(0, 1, 0, 0),
    "c": QMonomial(0, 0, 1, 0),
    "d": QMonomial(0, 0, 0, 1),
}


class Word(NamedTuple):
    """A free word in the generators with a scalar prefactor."""

    letters: tuple[str, ...]
    prefactor: Cyclotomic | None = None


@lru_cache(maxsize=None)
def _mono_mul(spec: RootSpec, x: QMonomial, y: QMonomial) -> tuple[tuple[QMonomial, Cyclotomic], ...]:
    """Product of two normal monomials, returned as (monomial, scalar) pairs.

    Route: cross x's d-block past y's a-block (d^m a^i rows), commute the
    stray a/d across the inner b,c letters, then contract the remaining
    mixed a,d pair with the a^t d^t row.
    """
    i1, j1, k1, m1 = x
    i2, j2, k2, m2 = y
    base: list[tuple[int, int, int, Cyclotomic]] = []
    if m1 and i2:
        t0 = min(m1, i2)
        rows = p_expansion(spec, t0, inverse=True)
        if i2 >= m1:
            # d^m1 a^i2 = sum_s rows[s] q^(-2s(i2-m1)) a^(i2-m1) b^s c^s
            gap = i2 - m1
            for s, cs in enumerate(rows):
                if not cs.is_zero():
                    base.append((gap, s, 0, cs * zeta_pow(spec, -2 * s * gap)))
        else:
            gap = m1 - i2
            for s, cs in enumerate(rows):
                if not cs.is_zero():
                    base.append((0, s, gap, cs * zeta_pow(spec, -2 * s * gap)))
    else:
        base.append((i2, 0, m1, Cyclotomic.one(spec.N)))
    out: dict[QMonomial, Cyclotomic] = {}
    for ia, t, md, c0 in base:
        # move a^ia left across b^j1 c^k1 and d^md right across b^j2 c^k2
        c = c0 * zeta_pow(spec, -ia * (j1 + k1) - md * (j2 + k2))
        ii = i1 + ia
        jj = j1 + t + j2
        kk = k1 + t + k2
        mm = md + m2
        t2 = min(ii, mm)
        if t2 == 0:
            mono = QMonomial(ii, jj, kk, mm)
            out[mono] = out[mono] + c if mono in out else c
        else:
            c = c * zeta_pow(spec, t2 * (jj + kk))
            row = p_expansion(spec, t2)
            for s, ps in enumerate(row):
                if ps.is_zero():
                    continue
                mono = QMonomial(ii - t2, jj + s, kk + s, mm - t2)
                v = c * ps
                out[mono] = out[mono] + v if mono in out else v
    return tuple((m, v) for m, v in out.items() if not v.is_zero())


class QElement:
    """A finite Q(zeta_N)-combination of normal monomials."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: RootSpec, terms: dict[QMonomial, Cyclotomic] | None = None):
        clean: dict[QMonomial, Cyclotomic] = {}
        if terms:
            for m, v in terms.items():
                if not isinstance(m, QMonomial):
                    m = QMonomial(*m)
                if not m.is_reduced():
                    raise ValueError("monomial %s is not in normal form" % (m,))
                if not v.is_zero():
                    clean[m] = v
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QElement is immutable")

    @classmethod
    def zero(cls, spec: RootSpec) -> "QElement":
        return cls(spec, {})

    @classmethod
    def one(cls, spec: RootSpec) -> "QElement":
        return cls(spec, {MONO_ONE: Cyclotomic.one(spec.N)})

    @classmethod
    def scalar(cls, spec: RootSpec, value) -> "QElement":
        if isinstance(value, (int, Fraction)):
            value = Cyclotomic.from_rational(spec.N, value)
        return cls(spec, {MONO_ONE: value})

    @classmethod
    def generator(cls, spec: RootSpec, letter: str) -> "QElement":
        if letter not in _LETTER_MONO:
            raise ValueError("unknown generator %r" % letter)
        return cls(spec, {_LETTER_MONO[letter]: Cyclotomic.one(spec.N)})

    @classmethod
    def monomial(cls, spec: RootSpec, mono: QMonomial, coeff=None) -> "QElement":
        if coeff is None:
            coeff = Cyclotomic.one(spec.N)
        return cls(spec, {mono: coeff})

    def _check(self, other: "QElement"):
        if self.spec != other.spec:
            raise ValueError("elements live over different root data")

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[QMonomial, Cyclotomic]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, mono: QMonomial) -> Cyclotomic:
        return self.terms.get(mono, Cyclotomic.zero(self.spec.N))

    def max_exponent(self) -> int:
        return max((max(m) for m in self.terms), default=0)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = QElement.scalar(self.spec, other)
        if not isinstance(other, QElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for m, v in other.terms.items():
            acc[m] = acc[m] + v if m in acc else v
        return QElement(self.spec, acc)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = QElement.scalar(self.spec, other)
        if not isinstance(other, QElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QElement(self.spec, {m: -v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return QElement(self.spec, {m: v * other for m, v in self.terms.items()})
        if not isinstance(other, QElement):
            return NotImplemented
        return qmul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        return power(self, n)

    def __eq__(self, other):
        if not isinstance(other, QElement):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        return hash((self.spec, tuple(self.sorted_terms())))

    def __repr__(self):
        if self.is_zero():
            return "QElement<0>"
        bits = []
        for m, v in self.sorted_terms():
            mono = "*".join("%s^%d" % (s, e) if e > 1 else s
                            for s, e in zip(_LETTERS, m) if e) or "1"
            bits.append("(%r)*%s" % (v, mono))
        return "QElement<%s>" % " + ".join(bits)

    def to_json(self) -> dict:
        return {
            "spec": root_spec_to_json(self.spec),
            "terms": [
                {"a": m.a, "b": m.b, "c": m.c, "d": m.d, "coeff": v.to_json()}
                for m, v in self.sorted_terms()
            ],
        }


def qelement_from_json(data: dict, spec: RootSpec | None = None) -> QElement:
    file_spec = root_spec_from_json(data["spec"]) if "spec" in data else spec
    if file_spec is None:
        raise ValueError("no root data in JSON and none supplied")
    if spec is not None and file_spec != spec:
        raise ValueError("JSON root data disagrees with the supplied spec")
    terms = {}
    for t in data["terms"]:
        mono = QMonomial(int(t["a"]), int(t["b"]), int(t["c"]), int(t["d"]))
        coeff = cyclotomic_from_json(t["coeff"])
        terms[mono] = terms[mono] + coeff if mono in terms else coeff
    return QElement(file_spec, terms)


def qmul(x: QElement, y: QElement) -> QElement:
    """Product in the quantum coordinate ring."""
    x._check(y)
    spec = x.spec
    acc: dict[QMonomial, Cyclotomic] = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            cxy = cx * cy
            for mz, cz in _mono_mul(spec, mx, my):
                v = cxy * cz
                acc[mz] = acc[mz] + v if mz in acc else v
    return QElement(spec, acc)


def power(x: QElement, n: int) -> QElement:
    """n-fold product; power(x, 0) is the unit."""
    if n < 0:
        raise ValueError("negative powers are not defined here")
    acc = QElement.one(x.spec)
    for _ in range(n):
        acc = qmul(acc, x)
    return acc


def straighten(word, spec: RootSpec) -> QElement:
    """Normal form of a free word in the generators.

    Accepts a Word, a plain string like "abcd", or any iterable of letters.
    """
    if isinstance(word, Word):
        letters = word.letters
        pref = word.prefactor
    else:
        letters = tuple(word)
        pref = None
    acc = QElement.one(spec) if pref is None else QElement.scalar(spec, pref)
    for ch in letters:
        if ch not in _LETTER_MONO:
            raise ValueError("unknown generator %r" % ch)
        acc = qmul(acc, QElement.generator(spec, ch))
    return acc


def _reduce_mixed_recursive(spec: RootSpec, mono: QMonomial) -> dict[QMonomial, Cyclotomic]:
    """One ad-contraction at a time; slow dual route for testing _mono_mul."""
    i, j, k, m = mono
    if min(i, m) == 0:
        return {mono: Cyclotomic.one(spec.N)}
    # a^i b^j c^k d^m = q^(j+k) a^(i-1) b^j c^k (1 + q bc) d^(m-1)
    f = zeta_pow(spec, j + k)
    out: dict[QMonomial, Cyclotomic] = {}
    for sub, extra in ((QMonomial(i - 1, j, k, m - 1), f),
                       (QMonomial(i - 1, j + 1, k + 1, m - 1), f * zeta_pow(spec, 1))):
        for mm, vv in _reduce_mixed_recursive(spec, sub).items():
            v = vv * extra
            out[mm] = out[mm] + v if mm in out else v
    return out


# ---------------------------------------------------------------------------
# Hopf structure


class TensorElement:
    """An element of the two-fold tensor square, keyed by monomial pairs."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: RootSpec, terms: dict[tuple[QMonomial, QMonomial], Cyclotomic] | None = None):
        clean: dict[tuple[QMonomial, QMonomial], Cyclotomic] = {}
        if terms:
            for (m1, m2), v in terms.items():
                if not (m1.is_reduced() and m2.is_reduced()):
                    raise ValueError("tensor legs must be normal monomials")
                if not v.is_zero():
                    clean[(m1, m2)] = v
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    @classmethod
    def zero(cls, spec: RootSpec) -> "TensorElement":
        return cls(spec, {})

    @classmethod
    def of(cls, left: QElement, right: QElement) -> "TensorElement":
        left._check(right)
        terms = {}
        for m1, c1 in left.terms.items():
            for m2, c2 in right.terms.items():
                terms[(m1, m2)] = c1 * c2
        return cls(left.spec, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (t[0][0].sort_key(), t[0][1].sort_key()))

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.spec != other.spec:
            raise ValueError("tensors live over different root data")
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc[k] + v if k in acc else v
        return TensorElement(self.spec, acc)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + TensorElement(other.spec, {k: -v for k, v in other.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return TensorElement(self.spec, {k: v * other for k, v in self.terms.items()})
        if not isinstance(other, TensorElement):
            return NotImplemented
        return tensor_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        return hash((self.spec, tuple(self.sorted_terms())))

    def __repr__(self):
        return "TensorElement<%d terms>" % len(self.terms)

    def apply_leg(self, which: int, fn) -> "TensorElement":
        """Apply a linear map (QElement -> QElement) to one tensor leg."""
        acc: dict[tuple[QMonomial, QMonomial], Cyclotomic] = {}
        spec = self.spec
        for (m1, m2), v in self.terms.items():
            target = QElement.monomial(spec, m1 if which == 0 else m2)
            img = fn(target)
            for mi, ci in img.terms.items():
                key = (mi, m2) if which == 0 else (m1, mi)
                w = v * ci
                acc[key] = acc[key] + w if key in acc else w
        return TensorElement(spec, acc)


def tensor_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    """Componentwise product (x1*y1) tensor (x2*y2), no braiding."""
    if x.spec != y.spec:
        raise ValueError("tensors live over different root data")
    spec = x.spec
    acc: dict[tuple[QMonomial, QMonomial], Cyclotomic] = {}
    for (x1, x2), cx in x.terms.items():
        for (y1, y2), cy in y.terms.items():
            cxy = cx * cy
            for mz1, cz1 in _mono_mul(spec, x1, y1):
                c1 = cxy * cz1
                for mz2, cz2 in _mono_mul(spec, x2, y2):
                    key = (mz1, mz2)
                    v = c1 * cz2
                    acc[key] = acc[key] + v if key in acc else v
    return TensorElement(spec, acc)


def _generator_coproduct(spec: RootSpec, letter: str) -> TensorElement:
    one = Cyclotomic.one(spec.N)
    A, B, C, D = (_LETTER_MONO[ch] for ch in "abcd")
    table = {
        "a": {(A, A): one, (B, C): one},
        "b": {(A, B): one, (B, D): one},
        "c": {(C, A): one, (D, C): one},
        "d": {(C, B): one, (D, D): one},
    }
    return TensorElement(spec, table[letter])


@lru_cache(maxsize=None)
def _gen_coproduct_power(spec: RootSpec, letter: str, e: int) -> TensorElement:
    if e == 0:
        return TensorElement.of(QElement.one(spec), QElement.one(spec))
    return tensor_mul(_gen_coproduct_power(spec, letter, e - 1), _generator_coproduct(spec, letter))


def coproduct(x: QElement) -> TensorElement:
    """The coalgebra map determined by Delta(a)=a@a+b@c etc., multiplicatively."""
    spec = x.spec
    acc = TensorElement.zero(spec)
    for mono, coeff in x.terms.items():
        t = _gen_coproduct_power(spec, "a", mono.a)
        for letter, e in zip("bcd", (mono.b, mono.c, mono.d)):
            if e:
                t = tensor_mul(t, _gen_coproduct_power(spec, letter, e))
        acc = acc + t * coeff
    return acc


def counit(x: QElement) -> Cyclotomic:
    """epsilon(a)=epsilon(d)=1, epsilon(b)=epsilon(c)=0, extended as a character."""
    acc = Cyclotomic.zero(x.spec.N)
    for mono, coeff in x.terms.items():
        if mono.b == 0 and mono.c == 0:
            acc = acc + coeff
    return acc


def antipode(x: QElement) -> QElement:
    """S(a)=d, S(b)=-q^-1 b, S(c)=-q c, S(d)=a, extended antimultiplicatively."""
    spec = x.spec
    acc = QElement.zero(spec)
    for mono, coeff in x.terms.items():
        i, j, k, m = mono
        sign = -1 if (j + k) % 2 else 1
        scal = coeff * zeta_pow(spec, k - j) * sign
        # reversed word: a^m b^j c^k d^i, then contract the new mixed pair
        flipped = _mono_mul(spec, QMonomial(m, j, k, 0), QMonomial(0, 0, 0, i))
        for mm, vv in flipped:
            v = scal * vv
            acc = acc + QElement.monomial(spec, mm, v)
    return acc


# ---------------------------------------------------------------------------
# Classical (commutative) coordinate ring of SL(2)


class ClassicalMonomial(NamedTuple):
    """Exponents of alpha^p beta^r gamma^s delta^t with min(p, t) = 0."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def degree(self) -> int:
        return self.alpha + self.beta + self.gamma + self.delta

    def sort_key(self):
        return (self.degree(), -self.alpha, -self.beta, -self.gamma, -self.delta)

    def is_reduced(self) -> bool:
        return min(self.alpha, self.delta) == 0 and min(self) >= 0


CLASSICAL_ONE = ClassicalMonomial(0, 0, 0, 0)

_CLASSICAL_LETTERS = ("alpha", "beta", "gamma", "delta")


def _binomials(w: int) -> list[int]:
    row = [1]
    for _ in range(w):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


def _reduce_classical_monomial(mono: ClassicalMonomial, order: int) -> list[tuple[ClassicalMonomial, Fraction]]:
    """Rewrite alpha^p ... delta^t with the determinant relation alpha*delta = 1 + beta*gamma."""
    p, r, s, t = mono
    w = min(p, t)
    if w == 0:
        return [(mono, Fraction(1))]
    out = []
    for i, binom in enumerate(_binomials(w)):
        out.append((ClassicalMonomial(p - w, r + i, s + i, t - w), Fraction(binom)))
    return out


class ClassicalElement:
    """A polynomial in alpha, beta, gamma, delta modulo alpha*delta - beta*gamma = 1."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: RootSpec, terms: dict[ClassicalMonomial, Cyclotomic] | None = None):
        clean: dict[ClassicalMonomial, Cyclotomic] = {}
        if terms:
            for m, v in terms.items():
                if not isinstance(m, ClassicalMonomial):
                    m = ClassicalMonomial(*m)
                if min(m) < 0:
                    raise ValueError("negative exponent in %s" % (m,))
                if v.is_zero():
                    continue
                for mm, f in _reduce_classical_monomial(m, spec.N):
                    w = v * f
                    clean[mm] = clean[mm] + w if mm in clean else w
        clean = {m: v for m, v in clean.items() if not v.is_zero()}
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ClassicalElement is immutable")

    @classmethod
    def zero(cls, spec: RootSpec) -> "ClassicalElement":
        return cls(spec, {})

    @classmethod
    def one(cls, spec: RootSpec) -> "ClassicalElement":
        return cls(spec, {CLASSICAL_ONE: Cyclotomic.one(spec.N)})

    @classmethod
    def scalar(cls, spec: RootSpec, value) -> "ClassicalElement":
        if isinstance(value, (int, Fraction)):
            value = Cyclotomic.from_rational(spec.N, value)
        return cls(spec, {CLASSICAL_ONE: value})

    @classmethod
    def generator(cls, spec: RootSpec, name: str) -> "ClassicalElement":
        if name not in _CLASSICAL_LETTERS:
            raise ValueError("unknown classical generator %r" % name)
        expo = tuple(1 if n == name else 0 for n in _CLASSICAL_LETTERS)
        return cls(spec, {ClassicalMonomial(*expo): Cyclotomic.one(spec.N)})

    @classmethod
    def monomial(cls, spec: RootSpec, mono: ClassicalMonomial, coeff=None) -> "ClassicalElement":
        if coeff is None:
            coeff = Cyclotomic.one(spec.N)
        return cls(spec, {mono: coeff})

    def _check(self, other: "ClassicalElement"):
        if self.spec != other.spec:
            raise ValueError("elements live over different root data")

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and CLASSICAL_ONE in self.terms and self.terms[CLASSICAL_ONE].is_one()

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = ClassicalElement.scalar(self.spec, other)
        if not isinstance(other, ClassicalElement):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for m, v in other.terms.items():
            acc[m] = acc[m] + v if m in acc else v
        return ClassicalElement(self.spec, acc)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = ClassicalElement.scalar(self.spec, other)
        if not isinstance(other, ClassicalElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return ClassicalElement(self.spec, {m: -v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return ClassicalElement(self.spec, {m: v * other for m, v in self.terms.items()})
        if not isinstance(other, ClassicalElement):
            return NotImplemented
        return classical_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        acc = ClassicalElement.one(self.spec)
        for _ in range(n):
            acc = classical_mul(acc, self)
        return acc

    def __eq__(self, other):
        if not isinstance(other, ClassicalElement):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        return hash((self.spec, tuple(self.sorted_terms())))

    def __repr__(self):
        if self.is_zero():
            return "ClassicalElement<0>"
        bits = []
        for m, v in self.sorted_terms():
            mono = "*".join("%s^%d" % (s, e) if e > 1 else s
                            for s, e in zip(_CLASSICAL_LETTERS, m) if e) or "1"
            bits.append("(%r)*%s" % (v, mono))
        return "ClassicalElement<%s>" % " + ".join(bits)

    def to_json(self) -> dict:
        return {
            "spec": root_spec_to_json(self.spec),
            "terms": [
                {"alpha": m.alpha, "beta": m.beta, "gamma": m.gamma, "delta": m.delta,
                 "coeff": v.to_json()}
                for m, v in self.sorted_terms()
            ],
        }


def classical_element_from_json(data: dict, spec: RootSpec | None = None) -> ClassicalElement:
    file_spec = root_spec_from_json(data["spec"]) if "spec" in data else spec
    if file_spec is None:
        raise ValueError("no root data in JSON and none supplied")
    if spec is not None and file_spec != spec:
        raise ValueError("JSON root data disagrees with the supplied spec")
    terms = {}
    for t in data["terms"]:
        mono = ClassicalMonomial(int(t["alpha"]), int(t["beta"]), int(t["gamma"]), int(t["delta"]))
        coeff = cyclotomic_from_json(t["coeff"])
        terms[mono] = terms[mono] + coeff if mono in terms else coeff
    return ClassicalElement(file_spec, terms)


def classical_mul(x: ClassicalElement, y: ClassicalElement) -> ClassicalElement:
    """Commutative product with determinant reduction."""
    x._check(y)
    acc: dict[ClassicalMonomial, Cyclotomic] = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            mono = ClassicalMonomial(mx.alpha + my.alpha, mx.beta + my.beta,
                                     mx.gamma + my.gamma, mx.delta + my.delta)
            v = cx * cy
            acc[mono] = acc[mono] + v if mono in acc else v
    return ClassicalElement(x.spec, acc)


def classical_normalize(spec: RootSpec, terms: dict) -> ClassicalElement:
    """Public constructor applying the determinant reduction to raw exponents."""
    return ClassicalElement(spec, terms)

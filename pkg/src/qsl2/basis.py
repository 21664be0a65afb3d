"""The rank-l^3 free module basis over the l-th-power subalgebra.

Generators (all exponents below l):

    family A:  a^m b^n c^s  with 1 <= m,  m <= s
    family D:  b^n c^s d^r  with 0 <= r,  s + r <= l - 1

which counts l^2(l-1)/2 + l^2(l+1)/2 = l^3 monomials.  Any other reduced
monomial is rewritten by one of two elimination relations (k = l-r resp.
k = l-m, p_{k,j} the product-row coefficients):

    b^n c^s d^r  = q^(r(n+s))  delta |> (a^k b^n c^s)  - sum_j p_{k,j} b^(n+j) c^(s+j) d^r
    a^m b^n c^s  = q^(-k(n+s)) alpha |> (b^n c^s d^k)  - sum_j p_{k,j} a^m b^(n+j) c^(s+j)

(left forms; the right forms carry q^(-k(n+s)) resp. q^(m(n+s)) on the
subalgebra term and the same sums).  decompose drives these to a fixed
point; oracle_decompose solves for the same coordinates by brute-force
exact linear algebra and knows nothing about the relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .cyclo import Cyclotomic, RootSpec, make_root_spec, p_expansion, zeta_pow
from .exactla import ExactMatrix, rref
from .frobenius import (
    ModuleElement,
    _check_side,
    _merge,
    _require_standard,
    central_reduce,
    lift,
    module_recompose,
)
from .qalgebra import (
    ClassicalElement,
    ClassicalMonomial,
    QElement,
    QMonomial,
    classical_element_from_json,
    classical_mul,
    qmul,
)
from .qalgebra import _mono_mul


@dataclass(frozen=True)
class FamilyA:
    """Generator a^m b^n c^s with 1 <= m <= s."""

    m: int
    n: int
    s: int

    def monomial(self) -> QMonomial:
        return QMonomial(self.m, self.n, self.s, 0)


@dataclass(frozen=True)
class FamilyD:
    """Generator b^n c^s d^r with s + r <= l - 1."""

    n: int
    s: int
    r: int

    def monomial(self) -> QMonomial:
        return QMonomial(0, self.n, self.s, self.r)


BasisIndex = Union[FamilyA, FamilyD]


def enumerate_basis(l: int) -> list[BasisIndex]:
    """All l^3 generators, family D first, in lexicographic index order."""
    if l < 2:
        raise ValueError("l must be at least 2")
    out: list[BasisIndex] = []
    for n in range(l):
        for s in range(l):
            for r in range(l - s):
                out.append(FamilyD(n, s, r))
    for m in range(1, l):
        for n in range(l):
            for s in range(m, l):
                out.append(FamilyA(m, n, s))
    return out


def is_basis_monomial(mono: QMonomial, l: int) -> BasisIndex | None:
    """Classify a reduced monomial; None means it violates the basis shape."""
    if min(mono) < 0 or max(mono) >= l or (mono.a and mono.d):
        raise ValueError("monomial %s is not reduced for l=%d" % (mono, l))
    if mono.a:
        if mono.c >= mono.a:
            return FamilyA(mono.a, mono.b, mono.c)
        return None
    if mono.c + mono.d <= l - 1:
        return FamilyD(mono.b, mono.c, mono.d)
    return None


@dataclass(frozen=True)
class Decomposition:
    """Coordinates of an element in the free-module basis."""

    spec: RootSpec
    side: str
    coefficients: dict[BasisIndex, ClassicalElement]

    def sorted_entries(self):
        def key(item):
            idx = item[0]
            return (0, idx.n, idx.s, idx.r, 0) if isinstance(idx, FamilyD) else (1, idx.m, idx.n, idx.s)
        return sorted(self.coefficients.items(), key=key)

    def to_json(self) -> dict:
        entries = []
        for idx, g in self.sorted_entries():
            if isinstance(idx, FamilyD):
                entries.append({"family": "D", "n": idx.n, "s": idx.s, "r": idx.r, "coeff": g.to_json()})
            else:
                entries.append({"family": "A", "m": idx.m, "n": idx.n, "s": idx.s, "coeff": g.to_json()})
        return {"side": self.side, "entries": entries}


def decomposition_from_json(data: dict, spec: RootSpec) -> Decomposition:
    coeffs: dict[BasisIndex, ClassicalElement] = {}
    for e in data["entries"]:
        if e["family"] == "D":
            idx: BasisIndex = FamilyD(int(e["n"]), int(e["s"]), int(e["r"]))
        elif e["family"] == "A":
            idx = FamilyA(int(e["m"]), int(e["n"]), int(e["s"]))
        else:
            raise ValueError("unknown family %r" % (e["family"],))
        g = classical_element_from_json(e["coeff"], spec)
        coeffs[idx] = coeffs[idx] + g if idx in coeffs else g
    coeffs = {i: g for i, g in coeffs.items() if not g.is_zero()}
    return Decomposition(spec, data["side"], coeffs)


def eliminate_d_family(n: int, s: int, r: int, spec: RootSpec, side: str = "left") -> ModuleElement:
    """One elimination step for b^n c^s d^r; recomposing the result gives it back."""
    _require_standard(spec, "eliminate_d_family")
    _check_side(side)
    l = spec.l
    if not (0 <= n < l and 0 <= s < l and 1 <= r < l):
        raise ValueError("indices out of range: n=%d s=%d r=%d for l=%d" % (n, s, r, l))
    k = l - r
    row = p_expansion(spec, k)
    tail = QElement(spec, {QMonomial(0, n + j, s + j, r): -row[j] for j in range(1, k + 1)})
    terms = dict(central_reduce(tail, side).terms)
    head = QMonomial(k, n, s, 0)
    fac = zeta_pow(spec, r * (n + s)) if side == "left" else zeta_pow(spec, -k * (n + s))
    _merge(terms, head, ClassicalElement.generator(spec, "delta") * fac)
    return ModuleElement(spec, side, {m: g for m, g in terms.items() if not g.is_zero()})


def eliminate_a_family(m: int, n: int, s: int, spec: RootSpec, side: str = "left") -> ModuleElement:
    """One elimination step for a^m b^n c^s; recomposing the result gives it back."""
    _require_standard(spec, "eliminate_a_family")
    _check_side(side)
    l = spec.l
    if not (1 <= m < l and 0 <= n < l and 0 <= s < l):
        raise ValueError("indices out of range: m=%d n=%d s=%d for l=%d" % (m, n, s, l))
    k = l - m
    row = p_expansion(spec, k)
    tail = QElement(spec, {QMonomial(m, n + j, s + j, 0): -row[j] for j in range(1, k + 1)})
    terms = dict(central_reduce(tail, side).terms)
    head = QMonomial(0, n, s, k)
    fac = zeta_pow(spec, -k * (n + s)) if side == "left" else zeta_pow(spec, m * (n + s))
    _merge(terms, head, ClassicalElement.generator(spec, "alpha") * fac)
    return ModuleElement(spec, side, {m2: g for m2, g in terms.items() if not g.is_zero()})


def decompose(x: QElement, side: str = "left") -> Decomposition:
    """Coordinates of x in the basis, by driving the eliminations to a fix point."""
    spec = x.spec
    _require_standard(spec, "decompose")
    _check_side(side)
    l = spec.l
    me = central_reduce(x, side)
    settled: dict[QMonomial, ClassicalElement] = {}
    pending: dict[QMonomial, ClassicalElement] = {}
    for mono, g in me.terms.items():
        (settled if is_basis_monomial(mono, l) is not None else pending)[mono] = g
    budget = 4 * (2 * l ** 3 + len(pending) + 8)
    steps = 0
    while pending:
        steps += 1
        if steps > budget:
            raise RuntimeError("elimination failed to terminate; this is a bug")
        # popping a smallest-s key first means no key is ever reprocessed
        mono = min(pending, key=lambda mm: (mm.c, mm))
        g = pending.pop(mono)
        if g.is_zero():
            continue
        i, j, k, m = mono
        if i > 0:
            rel = eliminate_a_family(i, j, k, spec, side)
        else:
            rel = eliminate_d_family(j, k, m, spec, side)
        for mono2, h in rel.terms.items():
            contrib = classical_mul(g, h)
            cls2 = is_basis_monomial(mono2, l)
            if i > 0:
                # family A: s strictly increases and the c-exponent never wraps
                if mono2.a:
                    assert mono2.a == i and k < mono2.c < l
                else:
                    assert cls2 is not None
            else:
                # family D: s strictly increases until it wraps, then the term is valid
                if mono2.a == 0 and mono2.c > k:
                    assert mono2.d == m
                else:
                    assert cls2 is not None
            target = settled if cls2 is not None else pending
            _merge(target, mono2, contrib)
    out: dict[BasisIndex, ClassicalElement] = {}
    for mono, g in settled.items():
        if g.is_zero():
            continue
        idx = is_basis_monomial(mono, l)
        out[idx] = out[idx] + g if idx in out else g
    out = {idx: g for idx, g in out.items() if not g.is_zero()}
    return Decomposition(spec, side, out)


def recompose(dec: Decomposition) -> QElement:
    """Evaluate the coordinates back to an element; inverse of decompose."""
    spec = dec.spec
    _check_side(dec.side)
    acc = QElement.zero(spec)
    for idx, g in dec.coefficients.items():
        base = QElement.monomial(spec, idx.monomial())
        if dec.side == "left":
            acc = acc + qmul(lift(g), base)
        else:
            acc = acc + qmul(base, lift(g))
    return acc


# ---------------------------------------------------------------------------
# Localization charts


CHARTS = ("alpha", "beta")


@dataclass(frozen=True)
class LocalizedElement:
    """x written over a chart: sum of lift(numerator)/denominator^k times chart monomials.

    chart "alpha": denominators are powers of alpha, chart monomials are
    a^r b^s c^t (stored with d = 0).  chart "beta": denominators are powers
    of beta, chart monomials are the words a^r b^s d^t (stored with c = 0;
    note the stored tuple names exponents of that word, not a normal form).
    """

    spec: RootSpec
    chart: str
    terms: dict[QMonomial, tuple[ClassicalElement, int]]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def max_power(self) -> int:
        return max((k for _, k in self.terms.values()), default=0)

    def to_json(self) -> dict:
        return {
            "chart": self.chart,
            "terms": [
                {"monomial": {"a": m.a, "b": m.b, "c": m.c, "d": m.d},
                 "numerator": g.to_json(), "power": k}
                for m, (g, k) in self.sorted_terms()
            ],
        }


def chart_monomial_element(spec: RootSpec, chart: str, mono: QMonomial) -> QElement:
    """The ring element a chart monomial denotes."""
    if chart == "alpha":
        return QElement.monomial(spec, mono)
    # the word a^r b^s d^t, straightened
    pairs = _mono_mul(spec, QMonomial(mono.a, mono.b, 0, 0), QMonomial(0, 0, 0, mono.d))
    return QElement(spec, dict(pairs))


def _beta_append(spec: RootSpec, terms: dict, letter: str) -> dict:
    """Right-multiply a combination of words a^r b^s d^t by a generator."""
    out: dict[tuple[int, int, int], Cyclotomic] = {}
    one = Cyclotomic.one(spec.N)

    def add(key, v):
        if key in out:
            out[key] = out[key] + v
        else:
            out[key] = v

    for (r, s, t), v in terms.items():
        if letter == "a":
            # d^t a = q^(-2t) a d^t + (1 - q^(-2t)) d^(t-1);  b^s a = q^(-s) a b^s
            add((r + 1, s, t), v * zeta_pow(spec, -2 * t - s))
            if t:
                f = one - zeta_pow(spec, -2 * t)
                if not f.is_zero():
                    add((r, s, t - 1), v * f)
        elif letter == "b":
            add((r, s + 1, t), v * zeta_pow(spec, -t))
        elif letter == "d":
            add((r, s, t + 1), v)
        else:
            raise ValueError("letter %r not in the beta chart" % letter)
    return {k: v for k, v in out.items() if not v.is_zero()}


def _beta_word_mul(spec: RootSpec, left: tuple[int, int, int], right: tuple[int, int, int]) -> dict:
    terms = {left: Cyclotomic.one(spec.N)}
    r, s, t = right
    for _ in range(r):
        terms = _beta_append(spec, terms, "a")
    for _ in range(s):
        terms = _beta_append(spec, terms, "b")
    for _ in range(t):
        terms = _beta_append(spec, terms, "d")
    return terms


def localize(x: QElement, chart: str) -> LocalizedElement:
    """Rewrite x over the requested chart with per-term minimal denominator powers."""
    spec = x.spec
    _require_standard(spec, "localize")
    if chart not in CHARTS:
        raise ValueError("chart must be 'alpha' or 'beta', got %r" % (chart,))
    l = spec.l
    me = central_reduce(x, "left")
    acc: dict[QMonomial, ClassicalElement] = {}
    if chart == "alpha":
        K = max((m.d for m in me.terms), default=0)
        blowup = ClassicalElement.generator(spec, "alpha") ** K
        for mono, g in me.terms.items():
            if mono.d == 0:
                _merge(acc, mono, classical_mul(g, blowup))
                continue
            # alpha^K kills every d: a^(lK) against d^m contracts completely
            prod = _mono_mul(spec, QMonomial(l * K, 0, 0, 0), mono)
            sub = central_reduce(QElement(spec, dict(prod)), "left")
            for mono2, h in sub.terms.items():
                _merge(acc, mono2, classical_mul(g, h))
    else:
        K = max((m.c for m in me.terms), default=0)
        blowup = ClassicalElement.generator(spec, "beta") ** K
        for mono, g in me.terms.items():
            i, j, k, m = mono
            if k == 0:
                _merge(acc, mono, classical_mul(g, blowup))
                continue
            # beta^K * mono: b^(lK) past a^i, then pair each c with a b:
            # b^(lK+j) c^k = b^(lK+j-k) (bc)^k and bc = q^-1 (ad - 1)
            terms = {(i, l * K + j - k, 0): zeta_pow(spec, -i * l * K - k)}
            for _ in range(k):
                # multiply by (ad - 1)
                with_ad = _beta_append(spec, _beta_append(spec, terms, "a"), "d")
                for key, v in terms.items():
                    with_ad[key] = with_ad[key] - v if key in with_ad else -v
                terms = {key: v for key, v in with_ad.items() if not v.is_zero()}
            for _ in range(m):
                terms = _beta_append(spec, terms, "d")
            for (r, s, t), v in terms.items():
                blocks = (r // l, s // l, t // l)
                residual = (r % l, s % l, t % l)
                if blocks == (0, 0, 0):
                    _merge(acc, QMonomial(r, s, 0, t), classical_mul(g, ClassicalElement.scalar(spec, v)))
                    continue
                block_word = (l * blocks[0], l * blocks[1], l * blocks[2])
                prod = _beta_word_mul(spec, block_word, residual)
                if len(prod) != 1:
                    raise AssertionError("chart block extraction split unexpectedly")
                (full, tau), = prod.items()
                if full != (r, s, t):
                    raise AssertionError("chart block extraction misaligned")
                cm = ClassicalMonomial(blocks[0], blocks[1], 0, blocks[2])
                coeff = ClassicalElement.monomial(spec, cm, v * tau.inv())
                _merge(acc, QMonomial(*residual[:2], 0, residual[2]), classical_mul(g, coeff))
    acc = {m: g for m, g in acc.items() if not g.is_zero()}
    # divide out the common denominator power per term
    out: dict[QMonomial, tuple[ClassicalElement, int]] = {}
    divider = _alpha_valuation if chart == "alpha" else _beta_valuation
    for mono, g in acc.items():
        v, reduced_g = divider(g, K)
        out[mono] = (reduced_g, K - v)
    return LocalizedElement(spec, chart, out)


def clear_denominators(le: LocalizedElement) -> tuple[QElement, int]:
    """Multiply through by denom^max_power; returns (element, max_power).

    The contract localize satisfies: the returned element equals
    lift(denom_generator^max_power) * x.
    """
    spec = le.spec
    K = le.max_power()
    gen = ClassicalElement.generator(spec, "alpha" if le.chart == "alpha" else "beta")
    acc = QElement.zero(spec)
    for mono, (g, k) in le.terms.items():
        full = classical_mul(g, gen ** (K - k))
        acc = acc + qmul(lift(full), chart_monomial_element(spec, le.chart, mono))
    return acc, K


def _divide_by_beta(g: ClassicalElement) -> ClassicalElement | None:
    terms = {}
    for mono, v in g.terms.items():
        if mono.beta < 1:
            return None
        terms[ClassicalMonomial(mono.alpha, mono.beta - 1, mono.gamma, mono.delta)] = v
    return ClassicalElement(g.spec, terms)


def _divide_by_alpha(g: ClassicalElement) -> ClassicalElement | None:
    """Solve alpha * D = g in the reduced basis, or None if g is not divisible."""
    spec = g.spec
    out: dict[ClassicalMonomial, Cyclotomic] = {}
    levels: dict[int, dict[tuple[int, int], Cyclotomic]] = {}
    for mono, v in g.terms.items():
        if mono.alpha >= 1:
            out[ClassicalMonomial(mono.alpha - 1, mono.beta, mono.gamma, 0)] = v
        else:
            levels.setdefault(mono.delta + 1, {})[(mono.beta, mono.gamma)] = v
    # alpha * delta^t' pulls in (1 + beta*gamma); solve along (beta, gamma) diagonals
    for tp, eqs in levels.items():
        diags: dict[int, dict[int, Cyclotomic]] = {}
        for (r, s), v in eqs.items():
            diags.setdefault(r - s, {})[min(r, s)] = v
        for dkey, vals in diags.items():
            r0, s0 = (dkey, 0) if dkey >= 0 else (0, -dkey)
            cur = Cyclotomic.zero(spec.N)
            for u in range(max(vals) + 1):
                cval = vals.get(u, Cyclotomic.zero(spec.N))
                cur = cval - cur
                if not cur.is_zero():
                    out[ClassicalMonomial(0, r0 + u, s0 + u, tp)] = cur
            if not cur.is_zero():
                return None
    return ClassicalElement(spec, out)


def _alpha_valuation(g: ClassicalElement, cap: int) -> tuple[int, ClassicalElement]:
    v = 0
    cur = g
    while v < cap:
        nxt = _divide_by_alpha(cur)
        if nxt is None:
            break
        cur = nxt
        v += 1
    return v, cur


def _beta_valuation(g: ClassicalElement, cap: int) -> tuple[int, ClassicalElement]:
    v = 0
    cur = g
    while v < cap:
        nxt = _divide_by_beta(cur)
        if nxt is None:
            break
        cur = nxt
        v += 1
    return v, cur


# ---------------------------------------------------------------------------
# Brute-force oracle and freeness certificate


class DegreeBoundError(ValueError):
    """The candidate coefficient degree bound was too small."""


class FreenessError(RuntimeError):
    """A brute-force system had multiple solutions; freeness would be false."""


def _quantum_weight(mono: QMonomial) -> tuple[int, int]:
    return (mono.a + mono.b - mono.c - mono.d, mono.a - mono.b + mono.c - mono.d)


def _classical_weight(l: int, cm: ClassicalMonomial) -> tuple[int, int]:
    return (l * (cm.alpha + cm.beta - cm.gamma - cm.delta),
            l * (cm.alpha - cm.beta + cm.gamma - cm.delta))


def _candidate_classicals(bound: int) -> list[ClassicalMonomial]:
    out = []
    for p in range(bound + 1):
        for r in range(bound + 1):
            for s in range(bound + 1):
                out.append(ClassicalMonomial(p, r, s, 0))
    for t in range(1, bound + 1):
        for r in range(bound + 1):
            for s in range(bound + 1):
                out.append(ClassicalMonomial(0, r, s, t))
    return out


class _ColumnSpace:
    """Candidate columns lift(mu)*G (or G*lift(mu)) grouped by weight, lazily built."""

    def __init__(self, spec: RootSpec, side: str, bound: int):
        self.spec = spec
        self.side = side
        self.bound = bound
        l = spec.l
        self.pairs_by_weight: dict[tuple[int, int], list[tuple[BasisIndex, ClassicalMonomial]]] = {}
        cands = _candidate_classicals(bound)
        for idx in enumerate_basis(l):
            gw = _quantum_weight(idx.monomial())
            for cm in cands:
                cw = _classical_weight(l, cm)
                w = (gw[0] + cw[0], gw[1] + cw[1])
                self.pairs_by_weight.setdefault(w, []).append((idx, cm))
        self._elements: dict[tuple[BasisIndex, ClassicalMonomial], QElement] = {}

    def element(self, idx: BasisIndex, cm: ClassicalMonomial) -> QElement:
        key = (idx, cm)
        if key not in self._elements:
            g = lift(ClassicalElement.monomial(self.spec, cm))
            base = QElement.monomial(self.spec, idx.monomial())
            self._elements[key] = qmul(g, base) if self.side == "left" else qmul(base, g)
        return self._elements[key]


_COLUMN_SPACES: dict[tuple[RootSpec, str, int], _ColumnSpace] = {}


def _column_space(spec: RootSpec, side: str, bound: int) -> _ColumnSpace:
    key = (spec, side, bound)
    if key not in _COLUMN_SPACES:
        _COLUMN_SPACES[key] = _ColumnSpace(spec, side, bound)
    return _COLUMN_SPACES[key]


def oracle_decompose(x: QElement, side: str = "left", degree_bound: int | None = None) -> Decomposition:
    """Find the coordinates of x by exact linear solving; no elimination knowledge.

    Candidate coefficients are all reduced classical monomials with
    exponents up to degree_bound (default max exponent of x over l, plus 2).
    Raises DegreeBoundError if the system is inconsistent at this bound and
    FreenessError if a system admits several solutions.
    """
    spec = x.spec
    _require_standard(spec, "oracle_decompose")
    _check_side(side)
    if degree_bound is None:
        degree_bound = x.max_exponent() // spec.l + 2
    space = _column_space(spec, side, degree_bound)
    buckets: dict[tuple[int, int], dict[QMonomial, Cyclotomic]] = {}
    for mono, v in x.terms.items():
        buckets.setdefault(_quantum_weight(mono), {})[mono] = v
    coeffs: dict[BasisIndex, ClassicalElement] = {}
    for w, rhs_terms in buckets.items():
        pairs = space.pairs_by_weight.get(w, [])
        if not pairs:
            raise DegreeBoundError("no candidates at weight %s; raise degree_bound" % (w,))
        elems = [space.element(idx, cm) for idx, cm in pairs]
        rows = set(rhs_terms)
        for e in elems:
            rows.update(e.terms)
        rows = sorted(rows, key=lambda mm: mm.sort_key())
        zero = Cyclotomic.zero(spec.N)
        matrix_rows = []
        rhs = []
        for mono in rows:
            matrix_rows.append([e.terms.get(mono, zero) for e in elems] +
                               [rhs_terms.get(mono, zero)])
        aug = ExactMatrix.from_rows(spec.N, matrix_rows)
        red, pivots = rref(aug)
        ncols = len(pairs)
        if ncols in pivots:
            raise DegreeBoundError("inconsistent system at weight %s; raise degree_bound" % (w,))
        if len(pivots) < ncols:
            raise FreenessError("system at weight %s has %d free columns" % (w, ncols - len(pivots)))
        for i, col in enumerate(pivots):
            val = red.at(i, ncols)
            if val.is_zero():
                continue
            idx, cm = pairs[col]
            add = ClassicalElement.monomial(spec, cm, val)
            coeffs[idx] = coeffs[idx] + add if idx in coeffs else add
    coeffs = {i: g for i, g in coeffs.items() if not g.is_zero()}
    return Decomposition(spec, side, coeffs)


@dataclass(frozen=True)
class FreenessReport:
    l: int
    side: str
    degree_bound: int
    monomials_checked: int
    kernel_dimension: int
    all_decomposed: bool


def verify_freeness(l: int, side: str = "left", degree_bound: int = 2) -> FreenessReport:
    """Brute-force certificate: no relations among columns, all monomials span."""
    spec = make_root_spec(l)
    _check_side(side)
    space = _column_space(spec, side, degree_bound)
    kernel_dim = 0
    zero = Cyclotomic.zero(spec.N)
    for w, pairs in space.pairs_by_weight.items():
        elems = [space.element(idx, cm) for idx, cm in pairs]
        rows = set()
        for e in elems:
            rows.update(e.terms)
        rows = sorted(rows, key=lambda mm: mm.sort_key())
        matrix = ExactMatrix.from_rows(spec.N, [[e.terms.get(mono, zero) for e in elems]
                                                for mono in rows])
        _, pivots = rref(matrix)
        kernel_dim += len(pairs) - len(pivots)
    checked = 0
    all_ok = True
    for i in range(l):
        for j in range(l):
            for k in range(l):
                for m in range(l):
                    if i and m:
                        continue
                    mono = QMonomial(i, j, k, m)
                    checked += 1
                    try:
                        oracle_decompose(QElement.monomial(spec, mono), side, degree_bound)
                    except DegreeBoundError:
                        all_ok = False
    return FreenessReport(l=l, side=side, degree_bound=degree_bound,
                          monomials_checked=checked, kernel_dimension=kernel_dim,
                          all_decomposed=all_ok)

"""Graded integer Hopf algebra layer on packed-word bases.

Three Hopf structures live on the free module over packed words:

* ``WPP``: the poset basis, with the disjoint-union product and the
  open-set coproduct of weak plane posets;
* ``SHUFFLE``: the shifted shuffle product with the value-split coproduct;
* ``DOT``: the quasi-shuffle (convolution) product with the same coproduct.

``lin_ext_map`` / ``weak_lin_ext_map`` carry the poset basis onto the
latter two by summing (weak) linear extensions, and ``prec_downset_map``
links the two word-side structures.  The picture-counting pairing makes
the poset structure self-dual; ``induced_pairing`` pulls it back through
either isomorphism.

Coefficients are exact Python integers throughout, and every value is
immutable; checks over basis sets are independent and side-effect free.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import orders, posets
from .packed_words import (
    CapacityError,
    EMPTY_WORD,
    PackedWord,
    iter_packed_words,
    pack,
    packed_words,
)

MATRIX_KINDS = ("phi", "phiprime", "psi", "pairing", "pairing-shuffle", "pairing-dot")
MATRIX_MAX_DEGREE = 5
VERIFY_MAX_DEGREE = 5


class ModuleElement:
    """Finitely supported integer combination of packed words.

    Immutable; all arithmetic is exact.  Zero coefficients are never
    stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for w, c in items:
            if not isinstance(w, PackedWord):
                w = PackedWord(w)
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            acc[w] = acc.get(w, 0) + c
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def zero(cls) -> "ModuleElement":
        return cls()

    @classmethod
    def basis(cls, w) -> "ModuleElement":
        return cls(((PackedWord(w), 1),))

    def items(self) -> list:
        """Terms as (word, coeff) pairs, sorted by (length, letters)."""
        return sorted(self._terms.items(), key=lambda t: (len(t[0]), tuple(t[0])))

    def coeff(self, w) -> int:
        return self._terms.get(PackedWord(w), 0)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def degrees(self) -> set:
        return {w.n for w in self._terms}

    def homogeneous(self, n: int) -> "ModuleElement":
        return ModuleElement((w, c) for w, c in self._terms.items() if w.n == n)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, ModuleElement) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return ModuleElement(out)

    def __sub__(self, other):
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) - c
        return ModuleElement(out)

    def __neg__(self):
        return ModuleElement({w: -c for w, c in self._terms.items()})

    def __mul__(self, c: int):
        return ModuleElement({w: c * d for w, d in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for w, c in self.items():
            label = w.text() or "e"
            mag = label if abs(c) == 1 else f"{abs(c)}*{label}"
            bits.append(("- " if c < 0 else "+ ") + mag)
        out = " ".join(bits)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def to_json_dict(self) -> dict:
        return {"terms": [{"word": str(w), "coeff": c} for w, c in self.items()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ModuleElement":
        try:
            return cls(
                (PackedWord.parse(t["word"]), t["coeff"]) for t in data["terms"]
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed element JSON: {exc}") from None


class TensorElement:
    """Finitely supported integer combination of ordered word pairs."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for (a, b), c in items:
            if not isinstance(a, PackedWord):
                a = PackedWord(a)
            if not isinstance(b, PackedWord):
                b = PackedWord(b)
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            acc[a, b] = acc.get((a, b), 0) + c
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def zero(cls) -> "TensorElement":
        return cls()

    def items(self) -> list:
        key = lambda t: (len(t[0][0]), tuple(t[0][0]), len(t[0][1]), tuple(t[0][1]))
        return sorted(self._terms.items(), key=key)

    def coeff(self, a, b) -> int:
        return self._terms.get((PackedWord(a), PackedWord(b)), 0)

    def flip(self) -> "TensorElement":
        return TensorElement({(b, a): c for (a, b), c in self._terms.items()})

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(out)

    def __sub__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) - c
        return TensorElement(out)

    def __mul__(self, c: int):
        return TensorElement({k: c * d for k, d in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for (a, b), c in self.items():
            label = f"({a.text() or 'e'}|{b.text() or 'e'})"
            mag = label if abs(c) == 1 else f"{abs(c)}*{label}"
            bits.append(("- " if c < 0 else "+ ") + mag)
        out = " ".join(bits)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {"left": str(a), "right": str(b), "coeff": c}
                for (a, b), c in self.items()
            ]
        }


def linear(fn, x: ModuleElement) -> ModuleElement:
    """Extend a basis map (word -> ModuleElement) linearly."""
    out = {}
    for w, c in x.items():
        for g, d in fn(w).items():
            out[g] = out.get(g, 0) + c * d
    return ModuleElement(out)


def linear_tensor(fn, x: ModuleElement) -> TensorElement:
    """Extend a basis map (word -> TensorElement) linearly."""
    out = {}
    for w, c in x.items():
        for k, d in fn(w).items():
            out[k] = out.get(k, 0) + c * d
    return TensorElement(out)


def bilinear(fn, x: ModuleElement, y: ModuleElement) -> ModuleElement:
    """Extend a basis map (word, word -> ModuleElement) bilinearly."""
    out = {}
    for u, c in x.items():
        for v, d in y.items():
            for g, e in fn(u, v).items():
                out[g] = out.get(g, 0) + c * d * e
    return ModuleElement(out)


def tensor(x: ModuleElement, y: ModuleElement) -> TensorElement:
    return TensorElement(
        ((a, b), c * d) for a, c in x.items() for b, d in y.items()
    )


def tensor_bimap(fl, fr, t: TensorElement) -> TensorElement:
    """Apply element-level linear maps to the two tensor slots."""
    out = TensorElement.zero()
    for (a, b), c in t.items():
        block = tensor(fl(ModuleElement.basis(a)), fr(ModuleElement.basis(b)))
        out = out + c * block
    return out


# ---------------------------------------------------------------------------
# basis-level operations of the three structures


@functools.lru_cache(maxsize=None)
def _wpp_mul_basis(u: PackedWord, v: PackedWord) -> ModuleElement:
    prod = posets.product(posets.poset_of_word(u), posets.poset_of_word(v))
    return ModuleElement.basis(posets.word_of_poset(prod))


@functools.lru_cache(maxsize=None)
def _wpp_comul_basis(w: PackedWord) -> TensorElement:
    pairs = posets.coproduct_terms(posets.poset_of_word(w))
    return TensorElement(
        ((posets.word_of_poset(a), posets.word_of_poset(b)), 1) for a, b in pairs
    )


@functools.lru_cache(maxsize=None)
def _shifted_shuffle_basis(u: PackedWord, v: PackedWord) -> ModuleElement:
    # One term per way of interleaving the letter levels of the factors:
    # the merge-free part of the convolution product.
    total = u.k + v.k
    terms = []
    for levels in itertools.combinations(range(1, total + 1), u.k):
        rest = [x for x in range(1, total + 1) if x not in levels]
        word = [levels[a - 1] for a in u] + [rest[b - 1] for b in v]
        terms.append((PackedWord(word), 1))
    return ModuleElement(terms)


@functools.lru_cache(maxsize=None)
def _qshuffle_basis(u: PackedWord, v: PackedWord) -> ModuleElement:
    n = u.n + v.n
    terms = [
        (w, 1)
        for w in iter_packed_words(n)
        if pack(w[: u.n]) == u and pack(w[u.n :]) == v
    ]
    return ModuleElement(terms)


@functools.lru_cache(maxsize=None)
def _delta_wqsym_basis(w: PackedWord) -> TensorElement:
    terms = []
    for level in range(w.k + 1):
        left = PackedWord(a for a in w if a <= level)
        right = pack([a for a in w if a > level])
        terms.append(((left, right), 1))
    return TensorElement(terms)


def wpp_product(x: ModuleElement, y: ModuleElement) -> ModuleElement:
    """Product in the poset basis: two basis posets multiply to the basis
    element of their disjoint union with all cross pairs in the second
    order.  Degrees add; the empty word is the unit."""
    return bilinear(_wpp_mul_basis, x, y)


def wpp_coproduct(x: ModuleElement) -> TensorElement:
    """Open-set coproduct in the poset basis, complement on the left."""
    return linear_tensor(_wpp_comul_basis, x)


def shifted_shuffle(u, v) -> ModuleElement:
    """Shifted shuffle: the sum, with coefficient one, of every packed word
    whose first |u| letters pack to u, whose last |v| letters pack to v,
    and whose two letter ranges are disjoint.

    Each term arises from one interleaving of the letter levels of the two
    factors; this is the merge-free part of :func:`qshuffle`.
    """
    return _shifted_shuffle_basis(PackedWord(u), PackedWord(v))


def qshuffle(u, v) -> ModuleElement:
    """Convolution product: the sum of all packed words whose first |u|
    letters pack to u and last |v| letters pack to v."""
    return _qshuffle_basis(PackedWord(u), PackedWord(v))


def delta_wqsym(w) -> TensorElement:
    """Value-split coproduct: for each level, the positions holding letters
    up to that level stay on the left and the rest repack on the right."""
    return _delta_wqsym_basis(PackedWord(w))


class HopfStructure:
    """A named product/coproduct pair on the packed-word module.

    All three structures here share the grading by word length, the empty
    word as unit, and coefficient-of-empty-word as counit.
    """

    def __init__(self, name, mul_basis, comul_basis):
        self.name = name
        self.mul_basis = mul_basis
        self.comul_basis = comul_basis
        self._antipode = {}

    def __repr__(self):
        return f"HopfStructure({self.name!r})"

    def unit(self) -> ModuleElement:
        return ModuleElement.basis(EMPTY_WORD)

    def mul(self, x: ModuleElement, y: ModuleElement) -> ModuleElement:
        return bilinear(self.mul_basis, x, y)

    def comul(self, x: ModuleElement) -> TensorElement:
        return linear_tensor(self.comul_basis, x)

    def antipode_basis(self, w: PackedWord) -> ModuleElement:
        """Graded connected recursion: S(w) = -sum S(w') * w'' over the
        coproduct terms with left factor different from w."""
        w = PackedWord(w)
        cached = self._antipode.get(w)
        if cached is None:
            if w.n == 0:
                cached = ModuleElement.basis(w)
            else:
                acc = ModuleElement.zero()
                for (a, b), c in self.comul_basis(w).items():
                    if a == w:
                        continue
                    acc = acc + c * self.mul(
                        self.antipode_basis(a), ModuleElement.basis(b)
                    )
                cached = -acc
            self._antipode[w] = cached
        return cached

    def antipode(self, x: ModuleElement) -> ModuleElement:
        return linear(self.antipode_basis, x)


WPP = HopfStructure("wpp", _wpp_mul_basis, _wpp_comul_basis)
SHUFFLE = HopfStructure("shuffle", _shifted_shuffle_basis, _delta_wqsym_basis)
DOT = HopfStructure("dot", _qshuffle_basis, _delta_wqsym_basis)
STRUCTURES = {s.name: s for s in (WPP, SHUFFLE, DOT)}


def resolve_structure(structure) -> HopfStructure:
    if isinstance(structure, HopfStructure):
        return structure
    try:
        return STRUCTURES[structure]
    except KeyError:
        raise ValueError(
            f"unknown Hopf structure {structure!r}; expected one of {tuple(STRUCTURES)}"
        ) from None


def counit(x: ModuleElement) -> int:
    """Coefficient of the empty word (shared by all three structures)."""
    return x.coeff(EMPTY_WORD)


def antipode(x: ModuleElement, structure) -> ModuleElement:
    """Antipode of the chosen structure, the convolution inverse of the
    identity."""
    return resolve_structure(structure).antipode(x)


# ---------------------------------------------------------------------------
# pairing and morphisms


@functools.lru_cache(maxsize=None)
def _pictures(f: PackedWord, g: PackedWord) -> int:
    return posets.count_pictures(posets.poset_of_word(f), posets.poset_of_word(g))


def pairing(x: ModuleElement, y: ModuleElement) -> int:
    """Picture-counting pairing on the poset basis, extended bilinearly;
    zero across distinct degrees."""
    total = 0
    for f, c in x.items():
        for g, d in y.items():
            if f.n == g.n:
                total += c * d * _pictures(f, g)
    return total


@functools.lru_cache(maxsize=None)
def _lin_ext_image(f: PackedWord) -> ModuleElement:
    return ModuleElement(
        (g, 1) for g in orders.lin_extensions(posets.poset_of_word(f))
    )


@functools.lru_cache(maxsize=None)
def _weak_lin_ext_image(f: PackedWord) -> ModuleElement:
    return ModuleElement(
        (g, 1) for g in orders.weak_lin_extensions(posets.poset_of_word(f))
    )


@functools.lru_cache(maxsize=None)
def _prec_down_image(f: PackedWord) -> ModuleElement:
    data = orders.order_matrix(f.n, "fm")
    below = data.down[data.index[f]]
    terms = [(f, 1)]
    b = 0
    while below >> b:
        if below >> b & 1:
            terms.append((data.words[b], 1))
        b += 1
    return ModuleElement(terms)


def lin_ext_map(x: ModuleElement) -> ModuleElement:
    """The isomorphism onto the shifted-shuffle structure: each basis poset
    goes to the sum of its linear extensions."""
    return linear(_lin_ext_image, x)


def weak_lin_ext_map(x: ModuleElement) -> ModuleElement:
    """The isomorphism onto the quasi-shuffle structure: each basis poset
    goes to the sum of its weak linear extensions."""
    return linear(_weak_lin_ext_image, x)


def prec_downset_map(x: ModuleElement) -> ModuleElement:
    """The isomorphism between the two word-side structures: each word goes
    to the sum of its refinement-order down-set."""
    return linear(_prec_down_image, x)


def _eliminate(component, image, data, ascending):
    # Exact triangular elimination.  `image` must send each word to itself
    # plus terms strictly on one side of the given order (above when
    # ascending, below otherwise), which makes the system unitriangular.
    order = sorted(range(len(data.words)), key=lambda i: data.down[i].bit_count())
    if not ascending:
        order.reverse()
    remaining = dict(component)
    out = {}
    for i in order:
        w = data.words[i]
        c = remaining.get(w, 0)
        if c:
            out[w] = c
            for g, d in image(w).items():
                remaining[g] = remaining.get(g, 0) - c * d
    if any(remaining.values()):
        raise ValueError("element is not in the image of the morphism")
    return out


def lin_ext_map_inverse(x: ModuleElement) -> ModuleElement:
    """Inverse of lin_ext_map, degree by degree, by exact elimination along
    the linear-extension order; coefficients stay integral."""
    out = {}
    for n in sorted(x.degrees()):
        component = {w: c for w, c in x.items() if w.n == n}
        data = orders.order_matrix(n, "lin")
        out.update(_eliminate(component, _lin_ext_image, data, ascending=True))
    return ModuleElement(out)


def prec_downset_map_inverse(x: ModuleElement) -> ModuleElement:
    """Inverse of prec_downset_map, by elimination along the refinement
    order from the top down."""
    out = {}
    for n in sorted(x.degrees()):
        component = {w: c for w, c in x.items() if w.n == n}
        data = orders.order_matrix(n, "fm")
        out.update(_eliminate(component, _prec_down_image, data, ascending=False))
    return ModuleElement(out)


def induced_pairing(u, v, via: str = "shuffle") -> int:
    """Pairing transported onto a word-side structure.

    "shuffle" pulls both arguments back through lin_ext_map, "dot" through
    the weak variant (computed as the composite of the two inverses).
    """
    xu = _induced_back(PackedWord(u), via)
    xv = _induced_back(PackedWord(v), via)
    return pairing(xu, xv)


def _induced_back(w, via):
    x = ModuleElement.basis(w)
    if via == "shuffle":
        return lin_ext_map_inverse(x)
    if via == "dot":
        return lin_ext_map_inverse(prec_downset_map_inverse(x))
    raise ValueError(f"unknown pairing target {via!r}; expected 'shuffle' or 'dot'")


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class IntMatrix:
    """Integer matrix with explicit ordered word bases attached.

    Column c of a morphism matrix holds the image of the c-th basis
    element; pairing matrices are Gram matrices.
    """

    row_basis: tuple
    col_basis: tuple
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != len(self.row_basis) or any(
            len(r) != len(self.col_basis) for r in self.rows
        ):
            raise ValueError("matrix shape does not match its bases")

    def entry(self, r: int, c: int) -> int:
        return self.rows[r][c]

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if len(self.row_basis) != len(self.col_basis):
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = len(m)
        if n == 0:
            return 1
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][k]), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[-1][-1]

    def to_json_dict(self) -> dict:
        rows = [list(r) for r in self.rows]
        if self.row_basis == self.col_basis:
            return {"basis": [str(w) for w in self.row_basis], "rows": rows}
        return {
            "row_basis": [str(w) for w in self.row_basis],
            "col_basis": [str(w) for w in self.col_basis],
            "rows": rows,
        }

    def to_text(self) -> str:
        """Aligned table with basis labels as header row and column."""
        head = [""] + [str(w) or "e" for w in self.col_basis]
        body = [
            [str(w) or "e"] + [str(v) for v in row]
            for w, row in zip(self.row_basis, self.rows)
        ]
        table = [head] + body
        widths = [max(len(r[c]) for r in table) for c in range(len(head))]
        lines = [
            " ".join(cell.rjust(wd) for cell, wd in zip(r, widths)).rstrip()
            for r in table
        ]
        return "\n".join(lines) + "\n"


def matrix_of_map(fn, n: int, limit: int = MATRIX_MAX_DEGREE) -> IntMatrix:
    """Matrix of a linear map in the lexicographic degree-n basis."""
    if n > limit:
        raise CapacityError(f"degree-{n} matrix exceeds the guard ({limit})")
    words = tuple(packed_words(n))
    cols = [fn(ModuleElement.basis(w)) for w in words]
    rows = tuple(tuple(col.coeff(r) for col in cols) for r in words)
    return IntMatrix(words, words, rows)


def matrix_of(kind: str, n: int, limit: int = MATRIX_MAX_DEGREE) -> IntMatrix:
    """Named matrix in the lexicographic basis.

    Kinds: "phi" (linear extension sums), "phiprime" (weak ones), "psi"
    (refinement down-set sums), "pairing" (poset-basis Gram matrix),
    "pairing-shuffle" / "pairing-dot" (induced Gram matrices).
    """
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {MATRIX_KINDS}")
    if n > limit:
        raise CapacityError(f"degree-{n} matrix exceeds the guard ({limit})")
    if kind == "phi":
        return matrix_of_map(lin_ext_map, n, limit)
    if kind == "phiprime":
        return matrix_of_map(weak_lin_ext_map, n, limit)
    if kind == "psi":
        return matrix_of_map(prec_downset_map, n, limit)
    words = tuple(packed_words(n))
    if kind == "pairing":
        rows = tuple(tuple(_pictures(r, c) for c in words) for r in words)
    else:
        via = "shuffle" if kind == "pairing-shuffle" else "dot"
        back = [_induced_back(w, via) for w in words]
        rows = tuple(tuple(pairing(r, c) for c in back) for r in back)
    return IntMatrix(words, words, rows)


# ---------------------------------------------------------------------------
# axiom verification


@dataclass
class CheckResult:
    name: str
    ok: bool
    cases: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" -- {self.detail}" if self.detail else ""
        return f"{status} {self.name} ({self.cases} cases){tail}"


@dataclass
class VerifyReport:
    structure: str
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def lines(self) -> list:
        return [f"[{self.structure}] {c.line()}" for c in self.checks]


def _run_check(name, fn):
    try:
        cases, failure = fn()
    except Exception as exc:  # a crash counts as a counterexample report
        return CheckResult(name, False, 0, f"raised {exc!r}")
    if failure is None:
        return CheckResult(name, True, cases)
    return CheckResult(name, False, cases, failure)


def _words_by_degree(n_max):
    return [packed_words(d) for d in range(n_max + 1)]


def verify_hopf(structure, n_max: int) -> VerifyReport:
    """Exhaustively check the Hopf axioms on every basis element (and pair,
    and triple) of total degree at most n_max.

    Covers: unit and counit laws, associativity, coassociativity, the
    bialgebra compatibility of coproduct with product, and the antipode
    convolution identities.  Each check stops at its first counterexample.
    """
    s = resolve_structure(structure)
    if n_max > VERIFY_MAX_DEGREE:
        raise CapacityError(f"verification degree {n_max} exceeds the guard ({VERIFY_MAX_DEGREE})")
    grades = _words_by_degree(n_max)
    checks = [
        _run_check("unit", lambda: _check_unit(s, grades)),
        _run_check("associativity", lambda: _check_assoc(s, grades, n_max)),
        _run_check("coassociativity", lambda: _check_coassoc(s, grades)),
        _run_check("counit", lambda: _check_counit(s, grades)),
        _run_check("bialgebra-compatibility", lambda: _check_bialgebra(s, grades, n_max)),
        _run_check("antipode", lambda: _check_antipode(s, grades)),
    ]
    return VerifyReport(s.name, checks)


def _check_unit(s, grades):
    one = s.unit()
    cases = 0
    for words in grades:
        for w in words:
            x = ModuleElement.basis(w)
            if s.mul(one, x) != x or s.mul(x, one) != x:
                return cases, f"unit fails on {w}"
            cases += 1
    return cases, None


def _check_assoc(s, grades, n_max):
    cases = 0
    for da in range(n_max + 1):
        for db in range(n_max + 1 - da):
            for dc in range(n_max + 1 - da - db):
                for u in grades[da]:
                    for v in grades[db]:
                        for w in grades[dc]:
                            xu, xv, xw = map(ModuleElement.basis, (u, v, w))
                            if s.mul(s.mul(xu, xv), xw) != s.mul(xu, s.mul(xv, xw)):
                                return cases, f"associativity fails on ({u},{v},{w})"
                            cases += 1
    return cases, None


def _check_coassoc(s, grades):
    cases = 0
    for words in grades:
        for w in words:
            left, right = {}, {}
            for (a, b), c in s.comul_basis(w).items():
                for (a1, a2), d in s.comul_basis(a).items():
                    key = (a1, a2, b)
                    left[key] = left.get(key, 0) + c * d
                for (b1, b2), d in s.comul_basis(b).items():
                    key = (a, b1, b2)
                    right[key] = right.get(key, 0) + c * d
            left = {k: c for k, c in left.items() if c}
            right = {k: c for k, c in right.items() if c}
            if left != right:
                return cases, f"coassociativity fails on {w}"
            cases += 1
    return cases, None


def _check_counit(s, grades):
    cases = 0
    for words in grades:
        for w in words:
            expected = ModuleElement.basis(w)
            left = ModuleElement(
                (b, c) for (a, b), c in s.comul_basis(w).items() if a == EMPTY_WORD
            )
            right = ModuleElement(
                (a, c) for (a, b), c in s.comul_basis(w).items() if b == EMPTY_WORD
            )
            if left != expected or right != expected:
                return cases, f"counit law fails on {w}"
            cases += 1
    return cases, None


def _check_bialgebra(s, grades, n_max):
    cases = 0
    for da in range(n_max + 1):
        for db in range(n_max + 1 - da):
            for u in grades[da]:
                for v in grades[db]:
                    xu, xv = ModuleElement.basis(u), ModuleElement.basis(v)
                    lhs = s.comul(s.mul(xu, xv))
                    rhs = _tensor_product_mul(s, s.comul_basis(u), s.comul_basis(v))
                    if lhs != rhs:
                        return cases, f"compatibility fails on ({u},{v})"
                    cases += 1
    return cases, None


def _tensor_product_mul(s, t1, t2):
    # componentwise product of tensors (no sign; the grading is even-free)
    acc = {}
    for (a, b), c in t1.items():
        for (u, v), d in t2.items():
            for wl, cl in s.mul_basis(a, u).items():
                for wr, cr in s.mul_basis(b, v).items():
                    key = (wl, wr)
                    acc[key] = acc.get(key, 0) + c * d * cl * cr
    return TensorElement(acc)


def _check_antipode(s, grades):
    cases = 0
    for words in grades:
        for w in words:
            target = s.unit() if w == EMPTY_WORD else ModuleElement.zero()
            lhs = ModuleElement.zero()
            rhs = ModuleElement.zero()
            for (a, b), c in s.comul_basis(w).items():
                lhs = lhs + c * s.mul(s.antipode_basis(a), ModuleElement.basis(b))
                rhs = rhs + c * s.mul(ModuleElement.basis(a), s.antipode_basis(b))
            if lhs != target or rhs != target:
                return cases, f"antipode identity fails on {w}"
            cases += 1
    return cases, None


_CACHED = (
    _wpp_mul_basis,
    _wpp_comul_basis,
    _shifted_shuffle_basis,
    _qshuffle_basis,
    _delta_wqsym_basis,
    _pictures,
    _lin_ext_image,
    _weak_lin_ext_image,
    _prec_down_image,
)


def clear_caches():
    """Drop all memoized basis-level results.

    Needed when the underlying poset operations are monkeypatched (the
    mutation-sanity harness); harmless otherwise.
    """
    for fn in _CACHED:
        fn.cache_clear()
    for s in STRUCTURES.values():
        s._antipode.clear()

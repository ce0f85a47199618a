"""Acceptance criteria, one test per criterion.

Each test prints a single line `[criterion N] PASS ...` on success; all
checks are exact (integer equality), and the stated time budgets are
printed alongside for inspection.
"""

import io
import time

import pytest

from wpposets import (
    ModuleElement,
    PackedWord,
    hasse,
    inversion_set,
    leq_lin,
    lin_ext_map,
    lin_ext_map_inverse,
    lin_extensions,
    matrix_of,
    matrix_of_map,
    packed_words,
    pairing,
    poset_of_word,
    prec_downset_map,
    qshuffle,
    shifted_shuffle,
    verify_hopf,
    weak_lin_extensions,
    word_of_poset,
    wpp_coproduct,
    wpp_product,
)
from wpposets import cli, hopf, posets
from wpposets.hopf import TensorElement
from wpposets.orders import order_matrix

W = PackedWord.parse
B = ModuleElement.basis


def report(number, description, started):
    print(f"[criterion {number}] PASS {description} ({time.perf_counter() - started:.2f}s)")


def test_criterion_1_golden_matrices():
    started = time.perf_counter()
    assert matrix_of("phi", 2).rows == ((1, 0, 0), (0, 1, 0), (1, 1, 1))
    assert matrix_of("phiprime", 2).rows == ((1, 1, 0), (0, 1, 0), (1, 1, 1))
    assert matrix_of("pairing", 2).rows == ((1, 1, 0), (1, 2, 1), (0, 1, 0))
    assert matrix_of("pairing-shuffle", 2).rows == ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    assert matrix_of("pairing-dot", 2).rows == ((1, -1, 0), (-1, 1, 1), (0, 1, 0))
    assert all(
        tuple(str(w) for w in matrix_of(kind, 2).row_basis) == ("11", "12", "21")
        for kind in ("phi", "phiprime", "pairing", "pairing-shuffle", "pairing-dot")
    )
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    report(1, "five degree-2 golden matrices, exact", started)


def test_criterion_2_golden_hasse():
    started = time.perf_counter()
    h2 = hasse(2, "lin")
    assert {(str(a), str(b)) for a, b in h2.edges} == {("11", "21"), ("12", "21")}
    h3 = hasse(3, "lin")
    assert len(h3.nodes) == 13
    assert {str(a) for a, b in h3.edges if str(b) == "321"} == {"221", "312", "231", "211"}
    assert all(str(b) != "321" or str(a) in {"221", "312", "231", "211"} for a, b in h3.edges)
    report(2, "Hasse diagrams of degrees 2 and 3", started)


def test_criterion_3_degree2_products():
    started = time.perf_counter()
    one = W("1")
    assert shifted_shuffle(one, one) == B(W("12")) + B(W("21"))
    assert qshuffle(one, one) == B(W("12")) + B(W("21")) + B(W("11"))
    report(3, "degree-2 product identities", started)


def test_criterion_4_bijection_suite():
    started = time.perf_counter()
    total = 0
    for n in range(7):
        for w in packed_words(n):
            assert word_of_poset(poset_of_word(w)) == w
            total += 1
    assert total == 1 + 1 + 3 + 13 + 75 + 541 + 4683
    for n in range(5):
        words = packed_words(n)
        assert len({poset_of_word(w) for w in words}) == len(words)
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0
    report(4, f"bijection on all {total} words up to degree 6, injectivity to degree 4", started)


def test_criterion_5_hopf_axioms():
    started = time.perf_counter()
    for name in ("wpp", "shuffle", "dot"):
        result = verify_hopf(name, 4)
        assert result.ok, result.lines()
        names = {c.name for c in result.checks}
        assert {"associativity", "coassociativity", "counit",
                "bialgebra-compatibility", "antipode"} <= names
    elapsed = time.perf_counter() - started
    assert elapsed < 120.0
    report(5, "Hopf axioms and antipode identities for all three structures, degree <= 4", started)


def test_criterion_6_morphism_suite():
    started = time.perf_counter()
    maps = (
        (lin_ext_map, hopf.WPP, hopf.SHUFFLE),
        (hopf.weak_lin_ext_map, hopf.WPP, hopf.DOT),
        (prec_downset_map, hopf.SHUFFLE, hopf.DOT),
    )
    for fn, src, dst in maps:
        for da in range(5):
            for db in range(5 - da):
                for u in packed_words(da):
                    for v in packed_words(db):
                        xu, xv = B(u), B(v)
                        assert fn(src.mul(xu, xv)) == dst.mul(fn(xu), fn(xv))
        for n in range(5):
            for w in packed_words(n):
                x = B(w)
                assert hopf.tensor_bimap(fn, fn, src.comul(x)) == dst.comul(fn(x))
    for n in range(6):
        composite = matrix_of_map(lambda x: prec_downset_map(lin_ext_map(x)), n)
        assert composite == matrix_of("phiprime", n)
        for w in packed_words(n):
            assert lin_ext_map_inverse(lin_ext_map(B(w))) == B(w)
    report(6, "morphism intertwining (degree <= 4), composite and inverse (degree <= 5)", started)


def test_criterion_7_pairing_suite():
    started = time.perf_counter()
    for da in range(5):
        for db in range(5 - da):
            for u in packed_words(da):
                for v in packed_words(db):
                    xy = wpp_product(B(u), B(v))
                    for z in packed_words(da + db):
                        rhs = sum(
                            c * pairing(B(u), B(z1)) * pairing(B(v), B(z2))
                            for (z1, z2), c in wpp_coproduct(B(z)).items()
                        )
                        assert pairing(xy, B(z)) == rhs
    for n in range(5):
        gram = matrix_of("pairing", n)
        assert gram.rows == tuple(zip(*gram.rows))  # symmetry
        assert gram.determinant() != 0
    report(7, "pairing symmetry, adjunction (degree <= 4), nondegeneracy (degree <= 4)", started)


def test_criterion_8_order_suite():
    started = time.perf_counter()
    for n in range(6):
        data = order_matrix(n, "lin")
        fm = order_matrix(n, "fm")
        for kind_data in (data, fm):
            for a in range(len(kind_data.words)):
                assert not kind_data.up[a] & kind_data.down[a]  # antisymmetry
                row = kind_data.up[a]
                b = 0
                while row >> b:
                    if row >> b & 1:
                        assert not kind_data.up[b] & ~row  # transitivity
                    b += 1
        words = data.words
        for i, f in enumerate(words):
            upset = {f} | {words[b] for b in _bits(data.up[i])}
            lin = lin_extensions(poset_of_word(f))
            assert lin == upset
            parts = [{g} | {fm.words[b] for b in _bits(fm.down[fm.index[g]])} for g in lin]
            union = set().union(*parts)
            assert sum(map(len, parts)) == len(union)
            assert union == weak_lin_extensions(poset_of_word(f))
        perms = [w for w in words if w.k == n]
        for f in perms:
            for g in perms:
                assert leq_lin(f, g) == (inversion_set(f) <= inversion_set(g))
    report(8, "orders, extensions and decomposition exhaustively to degree 5", started)


def _bits(mask):
    b = 0
    while mask >> b:
        if mask >> b & 1:
            yield b
        b += 1


# --- criterion 9: mutation sanity -----------------------------------------

GOLDEN_COPRODUCT_212 = TensorElement(
    [
        ((W("212"), W("")), 1),
        ((W("12"), W("1")), 1),
        ((W("1"), W("21")), 1),
        ((W("1"), W("11")), 1),
        ((W(""), W("212")), 1),
    ]
)


def reduced_battery():
    """Condensed replay of criteria 1-5; returns None or a failure note."""
    try:
        if matrix_of("phi", 2).rows != ((1, 0, 0), (0, 1, 0), (1, 1, 1)):
            return "phi matrix"
        if matrix_of("pairing", 2).rows != ((1, 1, 0), (1, 2, 1), (0, 1, 0)):
            return "pairing matrix"
        if matrix_of("pairing-shuffle", 2).rows != ((1, 0, 0), (0, 0, 1), (0, 1, 0)):
            return "induced pairing matrix"
        one = W("1")
        if shifted_shuffle(one, one) != B(W("12")) + B(W("21")):
            return "shifted shuffle identity"
        if qshuffle(one, one) != B(W("12")) + B(W("21")) + B(W("11")):
            return "quasi-shuffle identity"
        if wpp_product(B(one), B(W("21"))) != B(W("132")):
            return "poset product"
        if wpp_coproduct(B(W("212"))) != GOLDEN_COPRODUCT_212:
            return "poset coproduct"
        for n in range(4):
            for w in packed_words(n):
                if word_of_poset(poset_of_word(w)) != w:
                    return "bijection"
    except Exception as exc:
        return f"raised {exc!r}"
    return None


def _mutant_product_without_cross(p, q):
    shift = p.n
    rel1 = p.strict_pairs(1) + [(i + shift, j + shift) for i, j in q.strict_pairs(1)]
    rel2 = p.strict_pairs(2) + [(i + shift, j + shift) for i, j in q.strict_pairs(2)]
    return posets.DoublePoset(p.n + q.n, rel1, rel2)


def _mutant_open_sets_down_closed(p):
    n = p.n
    out = []
    for mask in range(1 << n):
        members = [i + 1 for i in range(n) if mask >> i & 1]
        closed = all(
            mask >> (i - 1) & 1
            for j in members
            for i in range(1, n + 1)
            if p.leq1(i, j)
        )
        if closed:
            out.append(frozenset(members))
    return out


def _mutant_pictures_one_condition(p, q):
    # keeps only the reverse implication of the picture conditions
    if p.n != q.n:
        return 0
    import itertools

    count = 0
    for perm in itertools.permutations(range(1, p.n + 1)):
        f = dict(zip(range(1, p.n + 1), perm))
        if all(
            not q.leq1(f[i], f[j]) or p.leq2(i, j)
            for i in f
            for j in f
        ):
            count += 1
    return count


MUTATIONS = (
    ("product", "product cross-relation dropped", _mutant_product_without_cross, 2),
    ("open_sets", "open-set predicate reversed", _mutant_open_sets_down_closed, 3),
    ("count_pictures", "picture condition halved", _mutant_pictures_one_condition, 2),
)


def test_criterion_9_mutation_sanity(monkeypatch):
    started = time.perf_counter()
    assert reduced_battery() is None
    for attr, label, mutant, verify_degree in MUTATIONS:
        with monkeypatch.context() as patch:
            patch.setattr(posets, attr, mutant)
            hopf.clear_caches()
            try:
                failure = reduced_battery()
                assert failure is not None, f"battery missed mutation: {label}"
                code = cli.main(
                    ["verify", "--max-degree", str(verify_degree)], out=io.StringIO()
                )
                assert code != 0, f"cli verify missed mutation: {label}"
            finally:
                hopf.clear_caches()
        hopf.clear_caches()
    assert reduced_battery() is None
    report(9, "all three canned mutations are caught", started)

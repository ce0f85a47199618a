"""Cross-module verification battery.

Runs the library's mathematical invariants exhaustively at small degree
and reports one result per named check; the CLI ``verify`` subcommand
prints these lines and fails on any counterexample.
"""

from __future__ import annotations

from . import hopf, orders, posets
from .hopf import CheckResult, ModuleElement, _run_check
from .packed_words import FUBINI, PackedWord, packed_words

GOLDEN_PHI_2 = ((1, 0, 0), (0, 1, 0), (1, 1, 1))
GOLDEN_PHIPRIME_2 = ((1, 1, 0), (0, 1, 0), (1, 1, 1))
GOLDEN_PAIRING_2 = ((1, 1, 0), (1, 2, 1), (0, 1, 0))
GOLDEN_INDUCED_SHUFFLE_2 = ((1, 0, 0), (0, 0, 1), (0, 1, 0))
GOLDEN_INDUCED_DOT_2 = ((1, -1, 0), (-1, 1, 1), (0, 1, 0))
GOLDEN_HASSE_2 = (("11", "21"), ("12", "21"))
GOLDEN_TOP_COVERS_3 = ("221", "312", "231", "211")


def run_verification(max_degree: int = 4) -> list:
    """All checks at the given degree bound; returns CheckResult list."""
    checks = [
        _run_check("enumeration-counts", lambda: _check_counts(max_degree)),
        _run_check("word-poset-roundtrip", lambda: _check_roundtrip(max_degree)),
        _run_check("poset-injectivity", lambda: _check_injectivity(max_degree)),
        _run_check("golden-matrices", _check_golden_matrices),
        _run_check("golden-hasse", _check_golden_hasse),
        _run_check("product-laws", lambda: _check_product_laws(max_degree)),
        _run_check("open-set-laws", lambda: _check_open_sets(max_degree)),
        _run_check("order-swap-involution", lambda: _check_swap(max_degree)),
        _run_check("picture-symmetry", lambda: _check_picture_symmetry(max_degree)),
    ]
    for name in ("wpp", "shuffle", "dot"):
        report = hopf.verify_hopf(name, max_degree)
        bad = [c for c in report.checks if not c.ok]
        detail = bad[0].line() if bad else ""
        cases = sum(c.cases for c in report.checks)
        checks.append(CheckResult(f"hopf-axioms-{name}", report.ok, cases, detail))
    checks += [
        _run_check("morphism-intertwining", lambda: _check_intertwining(max_degree)),
        _run_check("morphism-matrices", lambda: _check_morphism_matrices(max_degree)),
        _run_check("pairing-properties", lambda: _check_pairing(max_degree)),
        _run_check("order-properties", lambda: _check_orders(max_degree)),
    ]
    return checks


def _check_counts(max_degree):
    top = min(max_degree + 2, 6)
    cases = 0
    for n in range(top + 1):
        if len(packed_words(n)) != FUBINI[n]:
            return cases, f"count mismatch at length {n}"
        cases += 1
    return cases, None


def _check_roundtrip(max_degree):
    top = min(max_degree + 2, 6)
    cases = 0
    for n in range(top + 1):
        for w in packed_words(n):
            if posets.word_of_poset(posets.poset_of_word(w)) != w:
                return cases, f"roundtrip fails on {w}"
            cases += 1
    return cases, None


def _check_injectivity(max_degree):
    top = min(max_degree, 4)
    cases = 0
    for n in range(top + 1):
        words = packed_words(n)
        seen = {posets.poset_of_word(w) for w in words}
        cases += len(words)
        if len(seen) != len(words):
            return cases, f"canonical forms collide at length {n}"
    return cases, None


def _matrix_rows(kind, n):
    return hopf.matrix_of(kind, n).rows


def _check_golden_matrices():
    expect = {
        "phi": GOLDEN_PHI_2,
        "phiprime": GOLDEN_PHIPRIME_2,
        "pairing": GOLDEN_PAIRING_2,
        "pairing-shuffle": GOLDEN_INDUCED_SHUFFLE_2,
        "pairing-dot": GOLDEN_INDUCED_DOT_2,
    }
    for kind, rows in expect.items():
        if _matrix_rows(kind, 2) != rows:
            return len(expect), f"degree-2 matrix {kind} differs from its golden value"
    return len(expect), None


def _check_golden_hasse():
    h2 = orders.hasse(2)
    edges2 = tuple((str(a), str(b)) for a, b in h2.edges)
    if sorted(edges2) != sorted(GOLDEN_HASSE_2):
        return 1, "degree-2 Hasse diagram differs from its golden value"
    h3 = orders.hasse(3)
    if len(h3.nodes) != 13:
        return 2, f"degree-3 Hasse diagram has {len(h3.nodes)} nodes"
    top = PackedWord.parse("321")
    covered = sorted(str(a) for a, b in h3.edges if b == top)
    if covered != sorted(GOLDEN_TOP_COVERS_3):
        return 2, f"covers of 321 are {covered}"
    return 2, None


def _check_product_laws(max_degree):
    empty = posets.DoublePoset(0)
    cases = 0
    for n in range(max_degree + 1):
        for w in packed_words(n):
            p = posets.poset_of_word(w)
            if posets.product(p, empty) != p or posets.product(empty, p) != p:
                return cases, f"unit law fails on {w}"
            cases += 1
    for da in range(max_degree + 1):
        for db in range(max_degree + 1 - da):
            for dc in range(max_degree + 1 - da - db):
                for u in packed_words(da):
                    for v in packed_words(db):
                        for w in packed_words(dc):
                            pu, pv, pw = map(posets.poset_of_word, (u, v, w))
                            lhs = posets.product(posets.product(pu, pv), pw)
                            rhs = posets.product(pu, posets.product(pv, pw))
                            if lhs != rhs:
                                return cases, f"associativity fails on ({u},{v},{w})"
                            posets.check_weak_plane(lhs)
                            cases += 1
    return cases, None


def _check_open_sets(max_degree):
    cases = 0
    for n in range(min(max_degree, 5) + 1):
        for w in packed_words(n):
            p = posets.poset_of_word(w)
            opens = set(posets.open_sets(p))
            ground = frozenset(range(1, n + 1))
            if frozenset() not in opens or ground not in opens:
                return cases, f"trivial open sets missing for {w}"
            for a in opens:
                for b in opens:
                    if a | b not in opens or a & b not in opens:
                        return cases, f"open sets of {w} not a lattice"
            cases += 1
    return cases, None


def _check_swap(max_degree):
    cases = 0
    for n in range(max_degree + 1):
        for w in packed_words(n):
            p = posets.poset_of_word(w)
            flipped = posets.swap_orders(p)
            posets.check_weak_plane(flipped)
            if posets.swap_orders(flipped) != p:
                return cases, f"swap is not an involution on {w}"
            cases += 1
    return cases, None


def _check_picture_symmetry(max_degree):
    cases = 0
    for n in range(min(max_degree, 4) + 1):
        for f in packed_words(n):
            for g in packed_words(n):
                if hopf._pictures(f, g) != hopf._pictures(g, f):
                    return cases, f"picture count asymmetric on ({f},{g})"
                cases += 1
    return cases, None


def _check_intertwining(max_degree):
    maps = (
        ("lin-ext", hopf.lin_ext_map, hopf.WPP, hopf.SHUFFLE),
        ("weak-lin-ext", hopf.weak_lin_ext_map, hopf.WPP, hopf.DOT),
        ("prec-downset", hopf.prec_downset_map, hopf.SHUFFLE, hopf.DOT),
    )
    cases = 0
    for label, fn, src, dst in maps:
        for da in range(max_degree + 1):
            for db in range(max_degree + 1 - da):
                for u in packed_words(da):
                    for v in packed_words(db):
                        xu, xv = ModuleElement.basis(u), ModuleElement.basis(v)
                        if fn(src.mul(xu, xv)) != dst.mul(fn(xu), fn(xv)):
                            return cases, f"{label} product intertwining fails on ({u},{v})"
                        cases += 1
        for n in range(max_degree + 1):
            for w in packed_words(n):
                x = ModuleElement.basis(w)
                lhs = hopf.tensor_bimap(fn, fn, src.comul(x))
                rhs = dst.comul(fn(x))
                if lhs != rhs:
                    return cases, f"{label} coproduct intertwining fails on {w}"
                cases += 1
    return cases, None


def _check_morphism_matrices(max_degree):
    top = min(max_degree + 1, 5)
    cases = 0
    for n in range(top + 1):
        composed = hopf.matrix_of_map(
            lambda x: hopf.prec_downset_map(hopf.lin_ext_map(x)), n
        )
        if composed != hopf.matrix_of("phiprime", n):
            return cases, f"composite differs from weak-extension matrix at degree {n}"
        cases += 1
        for w in packed_words(n):
            x = ModuleElement.basis(w)
            if hopf.lin_ext_map_inverse(hopf.lin_ext_map(x)) != x:
                return cases, f"linear-extension inverse fails on {w}"
            if hopf.prec_downset_map_inverse(hopf.prec_downset_map(x)) != x:
                return cases, f"refinement inverse fails on {w}"
            cases += 1
    return cases, None


def _check_pairing(max_degree):
    cases = 0
    for n in range(max_degree + 1):
        gram = hopf.matrix_of("pairing", n)
        size = len(gram.row_basis)
        for r in range(size):
            for c in range(size):
                if gram.rows[r][c] != gram.rows[c][r]:
                    return cases, f"pairing asymmetric at degree {n}"
        cases += 1
        if n <= min(max_degree, 4) and gram.determinant() == 0:
            return cases, f"pairing degenerate at degree {n}"
        cases += 1
    for da in range(max_degree + 1):
        for db in range(max_degree + 1 - da):
            for u in packed_words(da):
                for v in packed_words(db):
                    xy = hopf.wpp_product(
                        ModuleElement.basis(u), ModuleElement.basis(v)
                    )
                    for z in packed_words(da + db):
                        lhs = hopf.pairing(xy, ModuleElement.basis(z))
                        rhs = sum(
                            c
                            * hopf._pictures(u, z1)
                            * hopf._pictures(v, z2)
                            for (z1, z2), c in hopf._wpp_comul_basis(z).items()
                            if z1.n == u.n and z2.n == v.n
                        )
                        if lhs != rhs:
                            return cases, f"adjunction fails on ({u},{v};{z})"
                        cases += 1
    return cases, None


def _check_orders(max_degree):
    top = min(max_degree + 1, 5)
    cases = 0
    for n in range(top + 1):
        for kind in orders.ORDER_KINDS:
            data = orders.order_matrix(n, kind)
            size = len(data.words)
            for a in range(size):
                if data.up[a] & data.down[a]:
                    return cases, f"{kind} order not antisymmetric at degree {n}"
                row = data.up[a]
                b = 0
                while row >> b:
                    if row >> b & 1 and data.up[b] & ~row:
                        return cases, f"{kind} order not transitive at degree {n}"
                    b += 1
                cases += 1
        data = orders.order_matrix(n, "lin")
        fm = orders.order_matrix(n, "fm")
        for i, f in enumerate(data.words):
            upset = {f} | {data.words[b] for b in _bits(data.up[i])}
            lin = orders.lin_extensions(posets.poset_of_word(f))
            if lin != upset:
                return cases, f"linear extensions of {f} differ from the order up-set"
            parts = [
                {g} | {fm.words[b] for b in _bits(fm.down[fm.index[g]])} for g in lin
            ]
            union = set().union(*parts) if parts else set()
            if sum(len(p) for p in parts) != len(union):
                return cases, f"weak-extension decomposition overlaps for {f}"
            if union != orders.weak_lin_extensions(posets.poset_of_word(f)):
                return cases, f"weak-extension decomposition misses words for {f}"
            cases += 1
        perms = [w for w in data.words if w.k == n]
        for f in perms:
            for g in perms:
                expected = orders.inversion_set(f) <= orders.inversion_set(g)
                if orders.leq_lin(f, g) != expected:
                    return cases, f"Bruhat restriction fails on ({f},{g})"
                cases += 1
    return cases, None


def _bits(mask):
    b = 0
    while mask >> b:
        if mask >> b & 1:
            yield b
        b += 1

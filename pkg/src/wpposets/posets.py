"""Double posets on {1..n} and their weak plane subclass.

A double poset is a finite set carrying two partial orders.  A weak plane
poset additionally satisfies two axioms: the orders never both relate two
distinct elements, and their union is a total quasi-order.  Up to
isomorphism, weak plane posets of size n are classified by packed words of
length n; :func:`poset_of_word` and :func:`word_of_poset` realize the two
directions of that bijection.

All poset values are immutable after construction; every function here is
pure, so sweeps over basis sets can safely run in parallel.
"""

from __future__ import annotations

import itertools

from .packed_words import PackedWord, pack


class NotWeakPlaneError(ValueError):
    """A double poset violating a weak plane axiom.

    ``axiom`` is 1 or 2 and ``witness`` is the offending pair (or triple,
    for a transitivity failure of the union quasi-order).
    """

    def __init__(self, axiom: int, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


def _relation_matrix(n, pairs, name):
    # Full boolean incidence matrix (reflexive); validates the order axioms.
    m = [[i == j for j in range(n)] for i in range(n)]
    for i, j in pairs:
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"{name}: pair ({i!r},{j!r}) outside 1..{n}")
        m[i - 1][j - 1] = True
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] and m[j][i]:
                raise ValueError(f"{name}: antisymmetry fails on ({i + 1},{j + 1})")
    for i, j, k in itertools.product(range(n), repeat=3):
        if m[i][j] and m[j][k] and not m[i][k]:
            raise ValueError(
                f"{name}: transitivity fails on ({i + 1},{j + 1},{k + 1})"
            )
    return tuple(tuple(row) for row in m)


class DoublePoset:
    """Ground set {1..n} with two partial orders, queried 1-based.

    Relations are stored as full n x n boolean incidence matrices; n stays
    small everywhere in this library, and constant-time queries dominate.
    """

    __slots__ = ("n", "_m1", "_m2")

    def __init__(self, n: int, rel1=(), rel2=()):
        if n < 0:
            raise ValueError("ground set size must be nonnegative")
        self.n = n
        self._m1 = _relation_matrix(n, rel1, "rel1")
        self._m2 = _relation_matrix(n, rel2, "rel2")

    def leq1(self, i: int, j: int) -> bool:
        return self._m1[i - 1][j - 1]

    def leq2(self, i: int, j: int) -> bool:
        return self._m2[i - 1][j - 1]

    def strict_pairs(self, which: int) -> list[tuple[int, int]]:
        """Sorted strict pairs (i, j) with i < j in the chosen order (1 or 2)."""
        m = self._m1 if which == 1 else self._m2
        return sorted(
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(self.n)
            if i != j and m[i][j]
        )

    def __eq__(self, other):
        return (
            isinstance(other, DoublePoset)
            and self.n == other.n
            and self._m1 == other._m1
            and self._m2 == other._m2
        )

    def __hash__(self):
        return hash((self.n, self._m1, self._m2))

    def __repr__(self):
        return (
            f"{type(self).__name__}(n={self.n}, "
            f"rel1={self.strict_pairs(1)}, rel2={self.strict_pairs(2)})"
        )

    def to_json_dict(self) -> dict:
        """JSON form: strict pairs of each order only."""
        return {
            "n": self.n,
            "rel1": [list(p) for p in self.strict_pairs(1)],
            "rel2": [list(p) for p in self.strict_pairs(2)],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DoublePoset":
        if not isinstance(data, dict):
            raise ValueError("poset JSON must be an object")
        try:
            n = data["n"]
            rel1 = [tuple(p) for p in data["rel1"]]
            rel2 = [tuple(p) for p in data["rel2"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed poset JSON: {exc}") from None
        if not isinstance(n, int):
            raise ValueError("poset JSON: n must be an integer")
        if any(len(p) != 2 for p in rel1 + rel2):
            raise ValueError("poset JSON: relation entries must be pairs")
        return cls(n, rel1, rel2)


class WeakPlanePoset(DoublePoset):
    """A double poset satisfying the weak plane axioms.

    Construction checks, by exhaustive pair/triple scans:

    * axiom 1: x <=1 y and x <=2 y force x = y;
    * axiom 2: the union quasi-order (x <=1 y or x <=2 y) is total and
      transitive.

    It then derives the equivalence classes of the union quasi-order (in
    increasing order) and the companion total order given by
    (y <=1 x or x <=2 y), which yields the canonical labeling.
    """

    __slots__ = ("classes", "ll", "_rank")

    def __init__(self, n: int, rel1=(), rel2=()):
        super().__init__(n, rel1, rel2)
        self._check_axioms()
        self._derive()

    def _check_axioms(self):
        n = self.n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j and self.leq1(i, j) and self.leq2(i, j):
                    raise NotWeakPlaneError(
                        1, (i, j), f"axiom 1 fails: both orders relate {i} and {j}"
                    )
        pre = self._preceq_raw
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if not pre(i, j) and not pre(j, i):
                    raise NotWeakPlaneError(
                        2, (i, j), f"axiom 2 fails: {i} and {j} are incomparable"
                    )
        for i, j, k in itertools.product(range(1, n + 1), repeat=3):
            if pre(i, j) and pre(j, k) and not pre(i, k):
                raise NotWeakPlaneError(
                    2,
                    (i, j, k),
                    f"axiom 2 fails: union quasi-order not transitive on ({i},{j},{k})",
                )

    def _preceq_raw(self, i, j):
        return i == j or self.leq1(i, j) or self.leq2(i, j)

    def _derive(self):
        n = self.n
        pre = self._preceq_raw
        # For a total quasi-order, elements are equivalent iff their down
        # sets have equal size; the sizes grade the classes.
        down = {i: sum(pre(j, i) for j in range(1, n + 1)) for i in range(1, n + 1)}
        levels = sorted(set(down.values()))
        self.classes = tuple(
            frozenset(i for i in down if down[i] == lv) for lv in levels
        )
        self._rank = {i: r for r, cls in enumerate(self.classes, 1) for i in cls}

        def ll(x, y):
            return x == y or self.leq1(y, x) or self.leq2(x, y)

        order = sorted(range(1, n + 1), key=lambda x: sum(ll(z, x) for z in range(1, n + 1)))
        for a in range(n):
            for b in range(a + 1, n):
                if not ll(order[a], order[b]):
                    # unreachable when the axioms hold (companion order lemma)
                    raise RuntimeError("internal: companion relation is not a total order")
        self.ll = tuple(order)

    def preceq(self, i: int, j: int) -> bool:
        """Union quasi-order, via class ranks."""
        return self._rank[i] <= self._rank[j]

    def equiv(self, i: int, j: int) -> bool:
        return self._rank[i] == self._rank[j]

    def class_rank(self, i: int) -> int:
        """1-based index of i's equivalence class in increasing order."""
        return self._rank[i]


def check_weak_plane(p: DoublePoset) -> WeakPlanePoset:
    """Validate the weak plane axioms; raises NotWeakPlaneError with the
    failing axiom and a witness, or returns the enriched poset."""
    if isinstance(p, WeakPlanePoset):
        return p
    return WeakPlanePoset(p.n, p.strict_pairs(1), p.strict_pairs(2))


def is_plane(p: DoublePoset) -> bool:
    """True iff the union quasi-order is an order (all classes singletons)."""
    return all(len(c) == 1 for c in check_weak_plane(p).classes)


def poset_of_word(w) -> WeakPlanePoset:
    """The weak plane poset on the positions of a packed word.

    i <=1 j iff i >= j and w(i) <= w(j); i <=2 j iff i <= j and
    w(i) <= w(j).  The companion total order is then the natural order on
    positions, and the union quasi-order compares letters.
    """
    w = PackedWord(w)
    rel1, rel2 = [], []
    for i in range(1, w.n + 1):
        for j in range(1, w.n + 1):
            if i != j and w[i - 1] <= w[j - 1]:
                (rel1 if i > j else rel2).append((i, j))
    return WeakPlanePoset(w.n, rel1, rel2)


def word_of_poset(p: DoublePoset) -> PackedWord:
    """The packed word classifying p up to isomorphism.

    Relabels the ground set along the companion total order, then reads
    off the class rank of each element.  Inverse to :func:`poset_of_word`.
    """
    wp = check_weak_plane(p)
    return PackedWord(wp.class_rank(e) for e in wp.ll)


def canonicalize(p: DoublePoset) -> WeakPlanePoset:
    """Isomorphic copy whose companion total order is the natural order.

    Idempotent; two weak plane posets are isomorphic iff their canonical
    forms are equal.
    """
    wp = check_weak_plane(p)
    if wp.ll == tuple(range(1, wp.n + 1)):
        return wp
    new = {e: i for i, e in enumerate(wp.ll, 1)}
    relabel = lambda pairs: [(new[i], new[j]) for i, j in pairs]
    return WeakPlanePoset(wp.n, relabel(wp.strict_pairs(1)), relabel(wp.strict_pairs(2)))


def product(p: DoublePoset, q: DoublePoset) -> DoublePoset:
    """Disjoint union with q shifted past p; the second order additionally
    relates every element of p below every element of q.

    Associative, with the empty poset as unit; weak plane factors give a
    weak plane product.
    """
    shift = p.n
    rel1 = p.strict_pairs(1) + [(i + shift, j + shift) for i, j in q.strict_pairs(1)]
    rel2 = p.strict_pairs(2) + [(i + shift, j + shift) for i, j in q.strict_pairs(2)]
    rel2 += [(i, j) for i in range(1, shift + 1) for j in range(shift + 1, shift + q.n + 1)]
    return DoublePoset(p.n + q.n, rel1, rel2)


def open_sets(p: DoublePoset) -> list[frozenset]:
    """All up-closed subsets of the first order, in increasing bitmask
    order (bit b encodes element b+1).

    Always contains the empty set and the full ground set, and is closed
    under union and intersection.
    """
    n = p.n
    out = []
    for mask in range(1 << n):
        members = [i + 1 for i in range(n) if mask >> i & 1]
        up_closed = all(
            mask >> (j - 1) & 1
            for i in members
            for j in range(1, n + 1)
            if p.leq1(i, j)
        )
        if up_closed:
            out.append(frozenset(members))
    return out


def restrict(p: DoublePoset, elements) -> DoublePoset:
    """Induced double poset on a subset, relabeled 1..|subset| in
    increasing order of the original labels."""
    kept = sorted(set(elements))
    for e in kept:
        if not isinstance(e, int) or not 1 <= e <= p.n:
            raise ValueError(f"element {e!r} outside 1..{p.n}")
    new = {e: i for i, e in enumerate(kept, 1)}
    sub = lambda pairs: [(new[i], new[j]) for i, j in pairs if i in new and j in new]
    return DoublePoset(len(kept), sub(p.strict_pairs(1)), sub(p.strict_pairs(2)))


def coproduct_terms(p: DoublePoset) -> list[tuple[WeakPlanePoset, WeakPlanePoset]]:
    """One (complement, open set) restriction pair per up-closed set of the
    first order, both factors canonicalized; the complement is the left
    factor."""
    wp = canonicalize(p)
    ground = frozenset(range(1, wp.n + 1))
    terms = []
    for o in open_sets(wp):
        left = canonicalize(check_weak_plane(restrict(wp, ground - o)))
        right = canonicalize(check_weak_plane(restrict(wp, o)))
        terms.append((left, right))
    return terms


def swap_orders(p: DoublePoset) -> DoublePoset:
    """Exchange the two orders.  An involution preserving weak plane-ness."""
    return DoublePoset(p.n, p.strict_pairs(2), p.strict_pairs(1))


def count_pictures(p: DoublePoset, q: DoublePoset) -> int:
    """Number of pictures from p to q: bijections f with

    * i <=1 j  (in p)  implies  f(i) <=2 f(j)  (in q), and
    * f(i) <=1 f(j)  (in q)  implies  i <=2 j  (in p).

    Sizes must agree, otherwise 0.  Backtracks over partial bijections in
    ground-set order, checking both conditions against every previously
    assigned pair.
    """
    if p.n != q.n:
        return 0
    n = p.n
    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def compatible(i, v):
        for j in range(1, i):
            u = image[j]
            if p.leq1(i, j) and not q.leq2(v, u):
                return False
            if p.leq1(j, i) and not q.leq2(u, v):
                return False
            if q.leq1(v, u) and not p.leq2(i, j):
                return False
            if q.leq1(u, v) and not p.leq2(j, i):
                return False
        return True

    def place(i):
        if i > n:
            return 1
        total = 0
        for v in range(1, n + 1):
            if not used[v] and compatible(i, v):
                used[v] = True
                image[i] = v
                total += place(i + 1)
                used[v] = False
        return total

    return place(1)

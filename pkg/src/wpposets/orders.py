"""Partial orders on the packed words of a fixed length, linear and weak
linear extensions of weak plane posets, and Hasse diagrams.

Two orders appear.  ``leq_lin`` is the order whose up-sets are exactly the
linear extension sets of weak plane posets; its restriction to
permutations is the right weak Bruhat order (inversion-set containment).
``prec`` is the refinement order whose down-set sums convert the shifted
shuffle structure into the quasi-shuffle one; the argument convention
prec(g, f) reads "g lies below f".
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import NamedTuple

from . import posets as _posets
from .packed_words import CapacityError, PackedWord, packed_words

HASSE_MAX_LENGTH = 6
ORDER_KINDS = ("lin", "fm")


def _same_length(f, g):
    f, g = PackedWord(f), PackedWord(g)
    if f.n != g.n:
        raise ValueError(f"words must have equal length: {f} vs {g}")
    return f, g


def leq_lin(f, g) -> bool:
    """f <= g in the linear-extension order.

    Holds iff every pair i >= j with f(i) <= f(j) keeps g(i) <= g(j), and
    the level sets of g are unions of level sets of f.
    """
    f, g = _same_length(f, g)
    n = f.n
    for i in range(n):
        for j in range(n):
            if i >= j and f[i] <= f[j] and g[i] > g[j]:
                return False
            if g[i] == g[j] and f[i] != f[j]:
                return False
    return True


def prec(g, f) -> bool:
    """g below f in the refinement order.

    Holds iff every weak comparison f(i) <= f(j) persists in g, and every
    descent of f (i < j with f(i) > f(j)) stays strict in g.
    """
    g, f = _same_length(g, f)
    n = f.n
    for i in range(n):
        for j in range(n):
            if f[i] <= f[j] and g[i] > g[j]:
                return False
            if i < j and f[i] > f[j] and g[i] <= g[j]:
                return False
    return True


def inversion_set(f) -> frozenset:
    """{(i, j) : i < j and f(i) > f(j)}, positions 1-based."""
    f = PackedWord(f)
    return frozenset(
        (i + 1, j + 1)
        for i in range(f.n)
        for j in range(i + 1, f.n)
        if f[i] > f[j]
    )


def _extensions(p, weak):
    # Backtracking over positions in canonical (companion-order) labeling,
    # assigning letters with the same gap-feasibility pruning as the packed
    # word enumeration so only surjections reach the leaves.
    n = p.n
    if n == 0:
        yield PackedWord()
        return
    vals = [0] * (n + 1)

    def assign(i, top, gaps):
        if i > n:
            yield PackedWord(vals[1:])
            return
        remaining = n - i + 1
        for v in range(1, top + remaining - len(gaps) + 1):
            if v > top:
                new_top, new_gaps = v, gaps | frozenset(range(top + 1, v))
            else:
                new_top, new_gaps = top, gaps - {v}
            if len(new_gaps) > remaining - 1:
                continue
            ok = True
            for j in range(1, i):
                u = vals[j]
                if p.leq1(i, j) and v > u:
                    ok = False
                    break
                if p.leq1(j, i) and u > v:
                    ok = False
                    break
                if u == v and not p.equiv(i, j):
                    if not weak or p.leq1(i, j) or p.leq1(j, i):
                        ok = False
                        break
            if ok:
                vals[i] = v
                yield from assign(i + 1, new_top, new_gaps)

    yield from assign(1, 0, frozenset())


def lin_extensions(p) -> frozenset:
    """All linear extensions of p, read as packed words.

    A linear extension is a surjection increasing along the first order
    whose level sets are classes of the union quasi-order.
    """
    return frozenset(_extensions(_posets.canonicalize(p), weak=False))


def weak_lin_extensions(p) -> frozenset:
    """All weak linear extensions of p: as linear extensions, but equal
    values are only forbidden on first-order comparable non-equivalent
    pairs."""
    return frozenset(_extensions(_posets.canonicalize(p), weak=True))


def _pair_masks(w, kind):
    # Encode the per-word pair conditions as bitmasks so that pairwise
    # order tests over a whole degree become two integer operations.
    n = w.n
    if kind == "lin":
        a = e = 0
        bit = 1
        for i in range(n):
            for j in range(i):
                if w[i] <= w[j]:
                    a |= bit
                bit <<= 1
        bit = 1
        for i in range(n):
            for j in range(i + 1, n):
                if w[i] == w[j]:
                    e |= bit
                bit <<= 1
        return a, e
    weakcmp = desc = 0
    bit = 1
    for i in range(n):
        for j in range(n):
            if i != j:
                if w[i] <= w[j]:
                    weakcmp |= bit
                bit <<= 1
    bit = 1
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                desc |= bit
            bit <<= 1
    return weakcmp, desc


class OrderData(NamedTuple):
    """PW(n) in lexicographic order with bitmask rows of the chosen order."""

    words: tuple
    index: dict
    up: tuple    # up[i]: bits of j with words[i] strictly below words[j]
    down: tuple  # transpose of up


@functools.lru_cache(maxsize=None)
def order_matrix(n: int, kind: str) -> OrderData:
    """Strict order relation over all of PW(n) as bitmask rows.

    kind "lin" uses leq_lin, kind "fm" uses prec (up means towards the
    coarser word there).  Guarded at n <= HASSE_MAX_LENGTH.
    """
    if kind not in ORDER_KINDS:
        raise ValueError(f"unknown order kind {kind!r}; expected one of {ORDER_KINDS}")
    if n > HASSE_MAX_LENGTH:
        raise CapacityError(f"order matrix of degree {n} exceeds the guard ({HASSE_MAX_LENGTH})")
    words = tuple(packed_words(n))
    masks = [_pair_masks(w, kind) for w in words]
    size = len(words)
    up = [0] * size
    down = [0] * size
    for a in range(size):
        xa, ya = masks[a]
        for b in range(size):
            if a == b:
                continue
            xb, yb = masks[b]
            if kind == "lin":
                below = not (xa & ~xb) and not (yb & ~ya)
            else:
                below = not (xb & ~xa) and not (yb & ~ya)
            if below:
                up[a] |= 1 << b
                down[b] |= 1 << a
    index = {w: i for i, w in enumerate(words)}
    return OrderData(words, index, tuple(up), tuple(down))


@dataclass(frozen=True)
class HasseDiagram:
    """Covering relation of one of the two orders on PW(n)."""

    n: int
    order: str
    nodes: tuple
    edges: tuple  # (lower, upper) covering pairs

    def to_dot(self) -> str:
        """DOT digraph, one node per word, one edge lower -> upper."""
        lines = ["digraph {"]
        lines += [f'  "{w}";' for w in self.nodes]
        lines += [f'  "{a}" -> "{b}";' for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def hasse(n: int, order: str = "lin", limit: int = HASSE_MAX_LENGTH) -> HasseDiagram:
    """Transitive reduction of the chosen order on PW(n).

    Covers are found by deleting relations implied by a length-2 path,
    using the bitmask rows of :func:`order_matrix`.
    """
    if n > limit:
        raise CapacityError(f"Hasse diagram of degree {n} exceeds the guard ({limit})")
    data = order_matrix(n, order)
    edges = []
    for a, w in enumerate(data.words):
        row = data.up[a]
        b = 0
        while row >> b:
            if row >> b & 1 and not data.up[a] & data.down[b]:
                edges.append((w, data.words[b]))
            b += 1
    return HasseDiagram(n, order, data.words, tuple(edges))

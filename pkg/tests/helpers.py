"""Brute-force oracles, independent of the library's algorithms."""

import itertools

from wpposets import DoublePoset, pack


def brute_packed_words(n):
    """Pack every word over {1..k}**n for k <= n and deduplicate."""
    out = set()
    for k in range(n + 1):
        for word in itertools.product(range(1, k + 1), repeat=n):
            out.add(pack(word))
    return sorted(out, key=tuple)


def brute_count_pictures(p, q):
    """Filter all n! bijections by the two picture conditions."""
    if p.n != q.n:
        return 0
    n = p.n
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        f = dict(zip(range(1, n + 1), perm))
        ok = True
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if p.leq1(i, j) and not q.leq2(f[i], f[j]):
                    ok = False
                if q.leq1(f[i], f[j]) and not p.leq2(i, j):
                    ok = False
            if not ok:
                break
        count += ok
    return count


def brute_extensions(p, weak):
    """Filter all packed words of matching length by the defining
    conditions of (weak) linear extensions, straight off the relations."""
    n = p.n
    out = set()
    for f in brute_packed_words(n):
        ok = True
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if p.leq1(i, j) and f[i - 1] > f[j - 1]:
                    ok = False
                if f[i - 1] == f[j - 1] and not p.equiv(i, j):
                    if not weak or p.leq1(i, j) or p.leq1(j, i):
                        ok = False
            if not ok:
                break
        if ok:
            out.add(f)
    return out


def relabel(p, perm):
    """Double poset with element i renamed perm[i] (perm is a dict)."""
    move = lambda pairs: [(perm[i], perm[j]) for i, j in pairs]
    return DoublePoset(p.n, move(p.strict_pairs(1)), move(p.strict_pairs(2)))


def all_partial_orders(n):
    """Every partial order on {1..n}, as tuples of strict pairs."""
    slots = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    found = []
    for bits in itertools.product((False, True), repeat=len(slots)):
        pairs = [p for p, b in zip(slots, bits) if b]
        rel = set(pairs)
        if any((j, i) in rel for i, j in rel):
            continue
        if any(
            (i, k) not in rel
            for i, j in rel
            for j2, k in rel
            if j == j2 and i != k
        ):
            continue
        found.append(tuple(pairs))
    return found

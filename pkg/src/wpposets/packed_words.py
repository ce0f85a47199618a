"""Packed words: finite sequences using every letter 1..k at least once.

A packed word of length n encodes a surjection from {1..n} onto {1..k} by
its value sequence, and equivalently a total quasi-order on positions: the
ordered set partition of {1..n} whose p-th block holds the positions of
letter p.  All values here are immutable and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

#: Number of packed words by length.
FUBINI = (1, 1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261)

#: Default guard for full enumerations (Fubini(9) still fits in memory).
DEFAULT_MAX_LENGTH = 9

Blocks = tuple[frozenset, ...]


class CapacityError(RuntimeError):
    """An enumeration or matrix request exceeded its size guard."""


class InvalidWordError(ValueError):
    """Input is not a packed word, or cannot be parsed as one."""


def is_packed(letters: Iterable[int]) -> bool:
    """True iff the set of letters is exactly {1, ..., max}."""
    seen = set(letters)
    return seen == set(range(1, len(seen) + 1))


class PackedWord(tuple):
    """An immutable packed word; behaves as its tuple of letters.

    Indexing is 0-based (``w[i]``); formulas quantified over positions
    1..n are written against that convention by the callers.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        word = super().__new__(cls, letters)
        if not is_packed(word):
            raise InvalidWordError(f"not a packed word: {tuple(word)!r}")
        return word

    @property
    def n(self) -> int:
        """Length."""
        return len(self)

    @property
    def k(self) -> int:
        """Largest letter; 0 for the empty word."""
        return max(self, default=0)

    @classmethod
    def parse(cls, text: str) -> "PackedWord":
        """Parse compact digits ("212312") or comma form ("2,1,2,3,1,2").

        The empty string parses to the empty word.  Comma form is required
        once letters exceed 9.
        """
        text = text.strip()
        if not text:
            return cls()
        parts: Sequence[str] = text.split(",") if "," in text else tuple(text)
        try:
            letters = tuple(int(p) for p in parts)
        except ValueError:
            raise InvalidWordError(f"cannot parse word {text!r}") from None
        return cls(letters)

    def text(self) -> str:
        """Compact digit string when k <= 9, else comma-separated."""
        if self.k <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"PackedWord({self.text()!r})"


EMPTY_WORD = PackedWord()


def pack(letters: Sequence[int]) -> PackedWord:
    """Replace each letter by its rank among the distinct letters present.

    Preserves the comparison pattern of the input and is the identity on
    packed words.
    """
    rank = {v: r for r, v in enumerate(sorted(set(letters)), start=1)}
    return PackedWord(rank[v] for v in letters)


def iter_packed_words(n: int) -> Iterator[PackedWord]:
    """Yield all packed words of length n in lexicographic order.

    Depth-first search over feasible prefixes: a prefix extends to a packed
    word iff the letters below its running maximum that are still unused
    fit into the remaining positions, so the work done is proportional to
    the output size (Fubini numbers), not to the k**n search space.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n == 0:
        yield EMPTY_WORD
        return
    prefix = [0] * n

    def extend(pos: int, top: int, gaps: frozenset) -> Iterator[PackedWord]:
        if pos == n:
            # feasibility pruning guarantees gaps is empty here
            yield PackedWord(prefix)
            return
        remaining = n - pos
        for letter in range(1, top + remaining - len(gaps) + 1):
            if letter > top:
                new_top = letter
                new_gaps = gaps | frozenset(range(top + 1, letter))
            else:
                new_top = top
                new_gaps = gaps - {letter}
            if len(new_gaps) > remaining - 1:
                continue
            prefix[pos] = letter
            yield from extend(pos + 1, new_top, new_gaps)

    yield from extend(0, 0, frozenset())


def packed_words(n: int, limit: int = DEFAULT_MAX_LENGTH) -> list[PackedWord]:
    """All packed words of length n, lexicographic.  Guarded by `limit`."""
    if n > limit:
        raise CapacityError(
            f"enumeration of packed words of length {n} exceeds the guard ({limit})"
        )
    return list(iter_packed_words(n))


def to_quasi_order(w: Iterable[int]) -> Blocks:
    """Ordered set partition of positions: block p is {i : w(i) = p} (1-based)."""
    w = PackedWord(w)
    blocks = [set() for _ in range(w.k)]
    for i, letter in enumerate(w, start=1):
        blocks[letter - 1].add(i)
    return tuple(frozenset(b) for b in blocks)


def from_quasi_order(blocks: Iterable[Iterable[int]]) -> PackedWord:
    """Packed word whose letter at position i is the index of i's block.

    Inverse of :func:`to_quasi_order`; the blocks must be nonempty,
    pairwise disjoint, and cover {1..n}.
    """
    blocks = tuple(tuple(b) for b in blocks)
    n = sum(len(b) for b in blocks)
    letters = [0] * n
    for p, block in enumerate(blocks, start=1):
        if not block:
            raise ValueError(f"block {p} is empty")
        for i in block:
            if not isinstance(i, int) or not 1 <= i <= n:
                raise ValueError(f"position {i!r} outside 1..{n}")
            if letters[i - 1]:
                raise ValueError(f"position {i} appears in more than one block")
            letters[i - 1] = p
    return PackedWord(letters)

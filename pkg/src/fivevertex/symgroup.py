"""Permutations of {1..n}, Bruhat order, and partitions."""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Iterable, Sequence


class Permutation:
    """A permutation in one-line notation ``(w(1), ..., w(n))``.

    Products compose as functions: ``(v * u)(i) == v(u(i))``, so the word
    ``s1 s2`` is the permutation ``s1 * s2``.
    """

    __slots__ = ("one_line",)

    def __init__(self, one_line: Iterable[int]):
        one_line = tuple(int(x) for x in one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError(f"{one_line} is not a permutation of 1..{len(one_line)}")
        self.one_line = one_line

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        if not 1 <= i < n:
            raise ValueError(f"s{i} does not exist in S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Read ``2,3,1`` (one-line) or ``s1 s2`` (word; needs n)."""
        text = text.strip()
        if not text or text in ("e", "id", "1"):
            if n is None:
                raise ValueError("the identity needs an explicit n")
            return cls.identity(n)
        if "s" in text:
            word = [int(x) for x in re.findall(r"s(\d+)", text)]
            if re.sub(r"s\d+|[\s*,]", "", text):
                raise ValueError(f"cannot parse permutation word {text!r}")
            if n is None:
                n = max(word) + 1
            return cls.from_word(word, n)
        w = cls(int(x) for x in text.replace(" ", "").split(","))
        if n is not None and w.n != n:
            raise ValueError(f"permutation {text!r} has size {w.n}, expected {n}")
        return w

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("permutations of different sizes")
        return Permutation(self.one_line[other.one_line[i] - 1] for i in range(self.n))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.one_line == other.one_line

    def __hash__(self):
        return hash(self.one_line)

    def __iter__(self):
        return iter(self.one_line)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Permutation({list(self.one_line)})"

    def __str__(self):
        return ",".join(map(str, self.one_line))

    def word_text(self) -> str:
        word = self.reduced_word()
        return " ".join(f"s{i}" for i in word) if word else "e"

    def length(self) -> int:
        w = self.one_line
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    def inversions(self) -> set:
        """Inverted value pairs ``(w(j), w(i))`` for positions i < j, w(i) > w(j)."""
        w = self.one_line
        return {(w[j], w[i]) for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j]}

    def right_descents(self) -> list:
        return [i for i in range(1, self.n) if self(i) > self(i + 1)]

    def reduced_word(self) -> list:
        """Greedy reduced word: strip the smallest right descent until e."""
        w = list(self.one_line)
        word = []
        while True:
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    w[i], w[i + 1] = w[i + 1], w[i]
                    word.append(i + 1)
                    break
            else:
                break
        return word[::-1]

    def act(self, comp: Sequence[int]) -> tuple:
        """Left action on compositions: entry i moves to position w(i)."""
        if len(comp) != self.n:
            raise ValueError("composition length must equal n")
        out = [0] * self.n
        for i, v in enumerate(comp):
            out[self.one_line[i] - 1] = v
        return tuple(out)


def all_permutations(n: int) -> list:
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Strong Bruhat order via the sorted-prefix (tableau) criterion."""
    if u.n != w.n:
        raise ValueError("permutations of different sizes")
    for k in range(1, u.n):
        a = sorted(u.one_line[:k])
        b = sorted(w.one_line[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def stabilizer_generators(lam: Sequence[int]) -> list:
    return [i for i in range(1, len(lam)) if lam[i - 1] == lam[i]]


def is_min_rep(w: Permutation, lam: Sequence[int]) -> bool:
    """True iff w is the shortest element of its coset w Stab(lam)."""
    return all(w(i) < w(i + 1) for i in stabilizer_generators(lam))


def min_coset_rep(w: Permutation, lam: Sequence[int]) -> Permutation:
    """The shortest u with u.act(lam) == w.act(lam)."""
    lam = tuple(lam)
    if len(lam) != w.n:
        raise ValueError("partition length must equal n")
    out = list(w.one_line)
    i = 0
    while i < len(lam):
        j = i
        while j + 1 < len(lam) and lam[j + 1] == lam[i]:
            j += 1
        out[i:j + 1] = sorted(out[i:j + 1])
        i = j + 1
    return Permutation(out)


@lru_cache(maxsize=None)
def min_coset_reps(lam: tuple) -> tuple:
    return tuple(w for w in all_permutations(len(lam)) if is_min_rep(w, lam))


# -- partitions -------------------------------------------------------------

def as_partition(parts: Iterable[int], n: int | None = None) -> tuple:
    """Validate and pad with zeros to length n."""
    parts = [int(p) for p in parts]
    while n is not None and len(parts) > n and parts[-1] == 0:
        parts.pop()
    if n is not None:
        if len(parts) > n:
            raise ValueError(f"partition {parts} has more than {n} nonzero parts")
        parts = parts + [0] * (n - len(parts))
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition")
    return tuple(parts)


def partition_length(lam: Sequence[int]) -> int:
    return sum(1 for p in lam if p > 0)


def partitions_in_box(rows: int, cols: int) -> list:
    """All partitions with at most ``rows`` parts, each at most ``cols``, padded to ``rows``."""
    return sorted(
        (p for p in itertools.combinations_with_replacement(range(cols, -1, -1), rows)),
        key=lambda p: (sum(p), p),
    )


def partitions_below(bound: Sequence[int]) -> list:
    """All partitions contained in ``bound`` (same padded length)."""
    bound = tuple(bound)
    return [p for p in partitions_in_box(len(bound), max(bound, default=0))
            if all(a <= b for a, b in zip(p, bound))]

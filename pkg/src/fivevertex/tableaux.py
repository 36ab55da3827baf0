"""Set-valued tableaux, their type A crystal, keys, and marked GT patterns.

Cells are indexed ``(row, col)`` from 1 in English convention.  A tableau is
stored as a tuple of rows whose cells are frozensets of positive integers; a
semistandard tableau is the special case where every cell is a singleton.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import MPoly
from .symgroup import Permutation, all_permutations, as_partition, bruhat_leq


class SetValuedTableau:
    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        out = []
        for row in rows:
            cells = []
            for cell in row:
                cell = frozenset([cell]) if isinstance(cell, int) else frozenset(cell)
                if not cell or any(not isinstance(x, int) or x < 1 for x in cell):
                    raise ValueError(f"cells must be nonempty sets of positive integers, got {set(cell)}")
                cells.append(cell)
            if cells:
                out.append(tuple(cells))
        self.rows = tuple(out)
        if any(len(a) < len(b) for a, b in zip(self.rows, self.rows[1:])):
            raise ValueError("row lengths must weakly decrease")
        self._hash = hash(self.rows)

    # -- basic data --------------------------------------------------------

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    def cell(self, r: int, c: int) -> frozenset | None:
        if 1 <= r <= len(self.rows) and 1 <= c <= len(self.rows[r - 1]):
            return self.rows[r - 1][c - 1]
        return None

    def cells(self):
        for r, row in enumerate(self.rows, start=1):
            for c, cell in enumerate(row, start=1):
                yield r, c, cell

    def column(self, c: int) -> list:
        return [row[c - 1] for row in self.rows if len(row) >= c]

    def weight(self, n: int) -> tuple:
        wt = [0] * n
        for _, _, cell in self.cells():
            for x in cell:
                if x > n:
                    raise ValueError(f"entry {x} exceeds n={n}")
                wt[x - 1] += 1
        return tuple(wt)

    def excess(self) -> int:
        return sum(len(cell) - 1 for _, _, cell in self.cells())

    def monomial(self, n: int) -> MPoly:
        """beta^excess * z^weight."""
        return MPoly.monomial(self.weight(n), n, beta_exp=self.excess())

    def max_entry(self) -> int:
        return max((max(cell) for _, _, cell in self.cells()), default=0)

    def is_valid(self) -> bool:
        """Row condition max X <= min Y, column condition max X < min Z."""
        for r, c, cell in self.cells():
            right = self.cell(r, c + 1)
            if right is not None and max(cell) > min(right):
                return False
            below = self.cell(r + 1, c)
            if below is not None and max(cell) >= min(below):
                return False
        return True

    def is_semistandard(self) -> bool:
        return self.excess() == 0 and self.is_valid()

    def min_tableau(self) -> "SetValuedTableau":
        return SetValuedTableau([[min(cell)] for cell in row] for row in self.rows)

    def max_tableau(self) -> "SetValuedTableau":
        return SetValuedTableau([[max(cell)] for cell in row] for row in self.rows)

    def complement(self, n: int) -> "SetValuedTableau":
        """Replace every entry x by n + 1 - x."""
        return SetValuedTableau([[n + 1 - x for x in cell] for cell in row] for row in self.rows)

    def replace(self, changes: dict) -> "SetValuedTableau":
        rows = [list(row) for row in self.rows]
        for (r, c), cell in changes.items():
            rows[r - 1][c - 1] = cell
        return SetValuedTableau(rows)

    # -- comparisons and io -------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, SetValuedTableau) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return tuple(tuple(tuple(sorted(cell)) for cell in row) for row in self.rows)

    def to_lists(self) -> list:
        return [[sorted(cell) for cell in row] for row in self.rows]

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "cells": self.to_lists()}

    @classmethod
    def from_json(cls, data) -> "SetValuedTableau":
        if isinstance(data, str):
            data = json.loads(data)
        t = cls(data["cells"])
        if list(t.shape) != [p for p in data["shape"] if p]:
            raise ValueError("shape does not match cells")
        return t

    def __repr__(self):
        return f"SetValuedTableau({self.to_lists()})"

    def __str__(self):
        def fmt(cell):
            return str(next(iter(cell))) if len(cell) == 1 else "{" + ",".join(map(str, sorted(cell))) + "}"
        return "\n".join(" ".join(fmt(cell) for cell in row) for row in self.rows) or "(empty)"


SVT = SetValuedTableau


def generating_function(tableaux: Iterable[SetValuedTableau], n: int) -> MPoly:
    """Sum of beta^excess z^weight."""
    total: dict = {}
    for t in tableaux:
        key = (t.excess(),) + t.weight(n)
        total[key] = total.get(key, 0) + 1
    return MPoly(n, total)


# -- enumeration --------------------------------------------------------------

def _nonempty_subsets(n: int) -> list:
    subs = []
    for k in range(1, n + 1):
        subs.extend(frozenset(s) for s in itertools.combinations(range(1, n + 1), k))
    return sorted(subs, key=lambda s: (min(s), max(s), len(s), sorted(s)))


def _enumerate(lam, n, choices):
    shape = [p for p in as_partition(lam) if p]
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    grid = [[None] * p for p in shape]
    out = []

    def rec(k):
        if k == len(cells):
            out.append(SetValuedTableau(grid))
            return
        r, c = cells[k]
        lo_row = max(grid[r][c - 1]) if c else 1
        lo_col = max(grid[r - 1][c]) + 1 if r else 1
        lo = max(lo_row, lo_col)
        for cell in choices:
            if min(cell) >= lo:
                grid[r][c] = cell
                rec(k + 1)
        grid[r][c] = None

    if len(shape) > n:
        return []
    rec(0)
    return out


def enumerate_svt(lam: Sequence[int], n: int) -> list:
    """SVT^n(lam): all set-valued tableaux of shape lam with entries in 1..n."""
    return _enumerate(lam, n, _nonempty_subsets(n))


def enumerate_ssyt(lam: Sequence[int], n: int) -> list:
    return _enumerate(lam, n, [frozenset([x]) for x in range(1, n + 1)])


def buch_grothendieck(lam: Sequence[int], n: int) -> MPoly:
    """G_lam as the SVT generating function."""
    return generating_function(enumerate_svt(lam, n), n)


# -- crystal operators --------------------------------------------------------

def _signature(t: SetValuedTableau, i: int):
    """Unpaired + columns (left to right) and unpaired - columns."""
    plus_stack: list = []
    minus_open: list = []
    for c in range(1, (t.shape[0] if t.rows else 0) + 1):
        col = t.column(c)
        has_i = any(i in cell for cell in col)
        has_j = any(i + 1 in cell for cell in col)
        if has_j and not has_i:
            minus_open.append(c)
        elif has_i and not has_j:
            if minus_open:
                minus_open.pop()
            else:
                plus_stack.append(c)
    return plus_stack, minus_open


def _row_of(t, c, x):
    for r, cell in enumerate(t.column(c), start=1):
        if x in cell:
            return r
    raise AssertionError("entry not found in column")


def crystal_f(t: SetValuedTableau, i: int) -> SetValuedTableau | None:
    """Kashiwara lowering operator f_i on a semistandard tableau."""
    plus, _ = _signature(t, i)
    if not plus:
        return None
    c = plus[-1]
    r = _row_of(t, c, i)
    return t.replace({(r, c): frozenset([i + 1])})


def crystal_e(t: SetValuedTableau, i: int) -> SetValuedTableau | None:
    """Kashiwara raising operator e_i on a semistandard tableau."""
    _, minus = _signature(t, i)
    if not minus:
        return None
    c = minus[0]
    r = _row_of(t, c, i + 1)
    return t.replace({(r, c): frozenset([i])})


def svt_crystal_f(t: SetValuedTableau, i: int) -> SetValuedTableau | None:
    """Lowering operator on set-valued tableaux.

    The column signature is read as for semistandard tableaux.  In the cell b
    holding the i of the rightmost unpaired + column: if the cell right of b
    also holds i (hence i+1), move that i out and put i+1 into b; otherwise
    turn the i of b into i+1.
    """
    plus, _ = _signature(t, i)
    if not plus:
        return None
    c = plus[-1]
    r = _row_of(t, c, i)
    b = t.cell(r, c)
    right = t.cell(r, c + 1)
    if right is not None and i in right:
        return t.replace({(r, c): b | {i + 1}, (r, c + 1): right - {i}})
    return t.replace({(r, c): (b - {i}) | {i + 1}})


def svt_crystal_e(t: SetValuedTableau, i: int) -> SetValuedTableau | None:
    """Raising operator on set-valued tableaux; partial inverse of svt_crystal_f."""
    _, minus = _signature(t, i)
    if not minus:
        return None
    c = minus[0]
    r = _row_of(t, c, i + 1)
    b = t.cell(r, c)
    left = t.cell(r, c - 1)
    if left is not None and i + 1 in left:
        return t.replace({(r, c): b | {i}, (r, c - 1): left - {i + 1}})
    return t.replace({(r, c): (b - {i + 1}) | {i}})


def highest_weight_path(t: SetValuedTableau, n: int):
    """(u, path) with t = f_{path[0]} f_{path[1]} ... f_{path[-1]} u."""
    path = []
    while True:
        for i in range(1, n):
            up = svt_crystal_e(t, i)
            if up is not None:
                path.append(i)
                t = up
                break
        else:
            return t, path


def lowest_weight(t: SetValuedTableau, n: int) -> SetValuedTableau:
    while True:
        for i in range(1, n):
            down = svt_crystal_f(t, i)
            if down is not None:
                t = down
                break
        else:
            return t


def is_highest_weight(t: SetValuedTableau, n: int) -> bool:
    return all(svt_crystal_e(t, i) is None for i in range(1, n))


def crystal_component(t: SetValuedTableau, n: int) -> set:
    seen = {t}
    queue = deque([t])
    while queue:
        x = queue.popleft()
        for i in range(1, n):
            for y in (svt_crystal_f(x, i), svt_crystal_e(x, i)):
                if y is not None and y not in seen:
                    seen.add(y)
                    queue.append(y)
    return seen


def lusztig_involution(t: SetValuedTableau, n: int) -> SetValuedTableau:
    """Reverse the crystal path from the highest weight, starting at the lowest weight."""
    u, path = highest_weight_path(t, n)
    cur = lowest_weight(u, n)
    for i in reversed(path):
        nxt = svt_crystal_e(cur, n - i)
        if nxt is None:
            raise RuntimeError(f"crystal component of {t!r} is not normal")
        cur = nxt
    return cur


# -- keys ---------------------------------------------------------------------

def key_tableau(w: Permutation, lam: Sequence[int]) -> SetValuedTableau:
    """K_{w lam}: row i of shape lam filled with i, then w applied and columns sorted."""
    lam = as_partition(lam, w.n)
    cols = []
    for c in range(1, (lam[0] if lam else 0) + 1):
        height = sum(1 for p in lam if p >= c)
        cols.append(sorted(w(r) for r in range(1, height + 1)))
    rows = [[cols[c][r] for c in range(lam[r])] for r in range(len(lam)) if lam[r]]
    return SetValuedTableau(rows)


def is_key(t: SetValuedTableau) -> bool:
    if not t.is_semistandard():
        return False
    cols = [set(min(x) for x in t.column(c)) for c in range(1, len(t.rows[0]) + 1)] if t.rows else []
    return all(b <= a for a, b in zip(cols, cols[1:]))


def key_leq(k1: SetValuedTableau, k2: SetValuedTableau) -> bool:
    """Entrywise comparison of two keys of the same shape."""
    if k1.shape != k2.shape:
        raise ValueError(f"shape mismatch: {k1.shape} vs {k2.shape}")
    return all(min(a) <= min(b) for (_, _, a), (_, _, b) in zip(k1.cells(), k2.cells()))


def highest_weight_ssyt(lam: Sequence[int]) -> SetValuedTableau:
    return SetValuedTableau([[r] * p for r, p in enumerate(lam, start=1) if p])


@lru_cache(maxsize=None)
def demazure_crystals(lam: tuple, n: int) -> dict:
    """Map every w in S_n to its Demazure subcrystal of SSYT^n(lam)."""
    lam = as_partition(lam, n)
    e = Permutation.identity(n)
    result = {e: frozenset([highest_weight_ssyt(lam)])}
    for w in sorted(all_permutations(n), key=Permutation.length):
        if w == e:
            continue
        winv = w.inverse()
        i = next(i for i in range(1, n) if winv(i) > winv(i + 1))
        shorter = Permutation.simple(i, n) * w
        closure = set(result[shorter])
        frontier = list(closure)
        while frontier:
            nxt = []
            for x in frontier:
                y = svt_crystal_f(x, i)
                if y is not None and y not in closure:
                    closure.add(y)
                    nxt.append(y)
            frontier = nxt
        result[w] = frozenset(closure)
    return result


@lru_cache(maxsize=None)
def _demazure_atoms(lam: tuple, n: int) -> dict:
    crystals = demazure_crystals(lam, n)
    atom = {}
    for w in sorted(crystals, key=Permutation.length):
        for s in crystals[w]:
            atom.setdefault(s, w)
    return atom


def demazure_atom_element(s: SetValuedTableau, n: int) -> Permutation:
    """The shortest w whose Demazure crystal contains s."""
    lam = as_partition(s.shape, n)
    return _demazure_atoms(lam, n)[s]


def right_key(s: SetValuedTableau, n: int) -> SetValuedTableau:
    """Right key of a semistandard tableau via Demazure-crystal membership."""
    if not s.is_semistandard():
        raise ValueError("right_key needs a semistandard tableau")
    lam = as_partition(s.shape, n)
    return key_tableau(demazure_atom_element(s, n), lam)


def key_of(t: SetValuedTableau, n: int) -> SetValuedTableau:
    """K(T) = k(min(T*)*)."""
    tstar = lusztig_involution(t, n)
    low = tstar.min_tableau()
    if not low.is_semistandard():
        raise AssertionError("min of a set-valued tableau must be semistandard")
    return right_key(lusztig_involution(low, n), n)


def key_class(w: Permutation, lam: Sequence[int], n: int | None = None) -> list:
    """{T in SVT^n(lam) : K(T) = K_{w lam}}."""
    n = n or w.n
    target = key_tableau(w, lam)
    return [t for t in enumerate_svt(lam, n) if key_of(t, n) == target]


def key_filtered(w: Permutation, lam: Sequence[int], n: int | None = None) -> list:
    """{T in SVT^n(lam) : K(T) <= K_{w lam}}."""
    n = n or w.n
    target = key_tableau(w, lam)
    return [t for t in enumerate_svt(lam, n) if key_leq(key_of(t, n), target)]


def keys_below(w: Permutation, lam: Sequence[int]) -> set:
    """{K_{u lam} : u <= w}."""
    return {key_tableau(u, lam) for u in all_permutations(w.n) if bruhat_leq(u, w)}


# -- Gelfand-Tsetlin patterns ------------------------------------------------

@dataclass(frozen=True)
class MarkedGTPattern:
    """A GT pattern (lam^(0), ..., lam^(n)), lam^(j) of length j, with marks (i, j)."""

    rows: tuple
    marks: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        object.__setattr__(self, "marks", frozenset(self.marks))
        if not is_gt_pattern(self.rows):
            raise ValueError(f"{self.rows} is not a GT pattern")
        bad = self.marks - markable_positions(self.rows)
        if bad:
            raise ValueError(f"positions {sorted(bad)} cannot be marked in {self.rows}")

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    @property
    def top(self) -> tuple:
        return self.rows[-1]

    def weight(self) -> tuple:
        return phi(self).weight(self.n)


def is_gt_pattern(rows: Sequence[Sequence[int]]) -> bool:
    if not rows or len(rows[0]) != 0:
        return False
    for j in range(1, len(rows)):
        lo, hi = rows[j - 1], rows[j]
        if len(hi) != j:
            return False
        for i in range(j - 1):
            if not hi[i] >= lo[i] >= hi[i + 1]:
                return False
        if any(p < 0 for p in hi):
            return False
    return True


def markable_positions(rows: Sequence[Sequence[int]]) -> set:
    """(i, j) with 1 <= i < j and lam^(j)_{i+1} < lam^(j-1)_i."""
    out = set()
    for j in range(2, len(rows)):
        for i in range(1, j):
            if rows[j][i] < rows[j - 1][i - 1]:
                out.add((i, j))
    return out


def enumerate_gt_patterns(lam: Sequence[int], n: int) -> list:
    lam = as_partition(lam, n)
    out = []

    def rec(chain):
        top = chain[0]
        j = len(top)
        if j == 0:
            out.append(tuple(chain))
            return
        ranges = [range(top[i + 1], top[i] + 1) for i in range(j - 1)]
        for mu in itertools.product(*ranges):
            rec([tuple(mu)] + chain)

    rec([lam])
    return out


def enumerate_marked_gt_patterns(lam: Sequence[int], n: int) -> list:
    out = []
    for rows in enumerate_gt_patterns(lam, n):
        spots = sorted(markable_positions(rows))
        for k in range(len(spots) + 1):
            for marks in itertools.combinations(spots, k):
                out.append(MarkedGTPattern(rows, frozenset(marks)))
    return out


def phi(p: MarkedGTPattern) -> SetValuedTableau:
    """Marked GT pattern -> set-valued tableau, level by level."""
    rows: list = []
    for j in range(1, p.n + 1):
        for (i, jj) in sorted(p.marks):
            if jj == j:
                rows[i - 1][-1] = rows[i - 1][-1] | {j}
        new = p.rows[j]
        while len(rows) < len([x for x in new if x]):
            rows.append([])
        for i, part in enumerate(new):
            if part:
                rows[i].extend([frozenset([j])] * (part - len(rows[i])))
    return SetValuedTableau(rows)


def phi_inverse(t: SetValuedTableau, n: int) -> MarkedGTPattern:
    """Recover the marked pattern; rejects tableaux not of the form phi(P)."""
    if not t.is_valid():
        raise ValueError("not a set-valued tableau")
    if t.max_entry() > n or len(t.rows) > n:
        raise ValueError(f"tableau does not fit n={n}")
    rows: list = [()]
    marks = set()
    for j in range(1, n + 1):
        part = [sum(1 for cell in row if min(cell) <= j) for row in t.rows] + [0] * n
        if any(part[j:]):
            raise ValueError(f"row {j + 1} starts with an entry at most {j}")
        rows.append(tuple(part[:j]))
        for r, c, cell in t.cells():
            if j in cell and min(cell) < j:
                marks.add((r, j))
    try:
        p = MarkedGTPattern(tuple(rows), frozenset(marks))
    except ValueError as exc:
        raise ValueError(f"tableau is not in the image of phi: {exc}") from None
    if phi(p) != t:
        raise ValueError("tableau is not in the image of phi")
    return p

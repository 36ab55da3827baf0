"""Set-valued skyline tableaux and the maps from marked atom states onto them."""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Sequence

from .algebra import MPoly
from .lattice import MarkedState, marked_to_gt
from .symgroup import Permutation, as_partition
from .tableaux import SetValuedTableau, generating_function, phi


class SkylineTableau:
    """A filling of a composition-shaped diagram (rows may be empty) by nonempty sets.

    The largest entry of a cell is its anchor; the others are free.
    """

    __slots__ = ("shape", "rows", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        out = []
        for row in rows:
            out.append(tuple(frozenset([c]) if isinstance(c, int) else frozenset(c) for c in row))
        if any(not cell for row in out for cell in row):
            raise ValueError("cells must be nonempty")
        self.rows = tuple(out)
        self.shape = tuple(len(r) for r in self.rows)
        self._hash = hash(self.rows)

    def cell(self, r: int, c: int):
        if 1 <= r <= len(self.rows) and 1 <= c <= len(self.rows[r - 1]):
            return self.rows[r - 1][c - 1]
        return None

    def anchor(self, r: int, c: int) -> int:
        return max(self.rows[r - 1][c - 1])

    def cells(self):
        for r, row in enumerate(self.rows, start=1):
            for c, cell in enumerate(row, start=1):
                yield r, c, cell

    def weight(self, n: int) -> tuple:
        wt = [0] * n
        for _, _, cell in self.cells():
            for x in cell:
                wt[x - 1] += 1
        return tuple(wt)

    def excess(self) -> int:
        return sum(len(cell) - 1 for _, _, cell in self.cells())

    def monomial(self, n: int) -> MPoly:
        return MPoly.monomial(self.weight(n), n, beta_exp=self.excess())

    def __eq__(self, other):
        return isinstance(other, SkylineTableau) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return tuple(tuple(tuple(sorted(c, reverse=True)) for c in row) for row in self.rows)

    def to_lists(self) -> list:
        return [[sorted(cell, reverse=True) for cell in row] for row in self.rows]

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "cells": self.to_lists()}

    def __repr__(self):
        return f"SkylineTableau({self.to_lists()})"

    def __str__(self):
        def fmt(cell):
            if len(cell) == 1:
                return str(next(iter(cell)))
            return "{" + ",".join(map(str, sorted(cell, reverse=True))) + "}"
        return "\n".join(" ".join(fmt(c) for c in row) if row else "." for row in self.rows)


# -- axioms ---------------------------------------------------------------

def _triples(shape: Sequence[int]):
    """Yield ((B), (A), (C)) cell coordinates of both triple types."""
    n = len(shape)
    for r in range(1, n + 1):
        for c in range(1, shape[r - 1]):
            b, a = (r, c), (r, c + 1)
            for r2 in range(r + 1, n + 1):
                # C below A, upper row weakly longer
                if shape[r - 1] >= shape[r2 - 1] >= c + 1:
                    yield b, a, (r2, c + 1)
            for r2 in range(1, r):
                # C above B, lower row strictly longer
                if shape[r - 1] > shape[r2 - 1] >= c:
                    yield b, a, (r2, c)


def axiom_violations(t: SkylineTableau) -> list:
    """List of (axiom number, detail) pairs; empty for a valid skyline tableau."""
    bad = []
    width = max(t.shape, default=0)
    for c in range(1, width + 1):
        seen = []
        for r in range(1, len(t.rows) + 1):
            cell = t.cell(r, c)
            if cell is not None:
                seen.extend(cell)
        if len(seen) != len(set(seen)):
            bad.append((1, f"column {c} repeats an entry"))
    for r, c, cell in t.cells():
        right = t.cell(r, c + 1)
        if right is not None and min(cell) < max(right):
            bad.append((2, f"cells ({r},{c}) and ({r},{c + 1})"))
    for bc, ac, cc in _triples(t.shape):
        b, a, c = t.anchor(*bc), t.anchor(*ac), t.anchor(*cc)
        if not (c < a or b < c):
            bad.append((3, f"triple B={bc} A={ac} C={cc}"))
    for r, c, cell in t.cells():
        for x in cell - {max(cell)}:
            home = free_entry_home(t, c, x)
            if home != r:
                bad.append((4, f"free entry {x} in ({r},{c}) belongs in row {home}"))
    for r, row in enumerate(t.rows, start=1):
        if row and max(row[0]) != r:
            bad.append((5, f"first-column anchor of row {r} is {max(row[0])}"))
    return bad


def is_valid_skyline(t: SkylineTableau) -> bool:
    return not axiom_violations(t)


def free_entry_home(t: SkylineTableau, c: int, x: int, anchors=None) -> int | None:
    """Row of the least anchor above x in column c whose right neighbor's max is <= x."""
    best = None
    for r in range(1, len(t.rows) + 1):
        if t.cell(r, c) is None:
            continue
        a = anchors[(r, c)] if anchors else t.anchor(r, c)
        right = t.cell(r, c + 1)
        if a > x and (right is None or (anchors[(r, c + 1)] if anchors else t.anchor(r, c + 1)) <= x):
            if best is None or a < best[0]:
                best = (a, r)
    return None if best is None else best[1]


# -- enumeration ----------------------------------------------------------

def _anchor_fillings(shape: Sequence[int]):
    n = len(shape)
    cells = [(r, c) for c in range(1, max(shape, default=0) + 1)
             for r in range(1, n + 1) if shape[r - 1] >= c]
    fill: dict = {}

    def rec(k):
        if k == len(cells):
            yield dict(fill)
            return
        r, c = cells[k]
        if c == 1:
            options = [r]
        else:
            options = range(1, fill[(r, c - 1)] + 1)
        used = {fill[(rr, c)] for rr in range(1, r) if (rr, c) in fill}
        for v in options:
            if v in used:
                continue
            fill[(r, c)] = v
            if _triples_ok(shape, fill, r, c):
                yield from rec(k + 1)
            del fill[(r, c)]

    yield from rec(0)


def _triples_ok(shape, fill, r, c) -> bool:
    """Check triples whose last-filled cell is (r, c) (column-major fill order)."""
    for bc, ac, cc in _triples(shape):
        cells = (bc, ac, cc)
        if (r, c) not in cells or any(x not in fill for x in cells):
            continue
        b, a, cv = fill[bc], fill[ac], fill[cc]
        if not (cv < a or b < cv):
            return False
    return True


def enumerate_skyline(shape: Sequence[int], n: int | None = None) -> list:
    """All set-valued skyline tableaux of the given composition shape."""
    shape = tuple(shape)
    n = n if n is not None else len(shape)
    if len(shape) != n:
        raise ValueError(f"shape {shape} must have length n={n}")
    out = []
    for anchors in _anchor_fillings(shape):
        skeleton = SkylineTableau([[anchors[(r, c)] for c in range(1, shape[r - 1] + 1)]
                                   for r in range(1, n + 1)])
        per_column = []
        for c in range(1, max(shape, default=0) + 1):
            column_anchors = {anchors[(r, c)] for r in range(1, n + 1) if (r, c) in anchors}
            options = []
            for x in range(1, n + 1):
                if x in column_anchors:
                    continue
                home = free_entry_home(skeleton, c, x, anchors)
                if home is not None:
                    options.append((x, home))
            per_column.append(options)
        flat = [(c + 1, x, home) for c, opts in enumerate(per_column) for x, home in opts]
        for mask in range(1 << len(flat)):
            rows = [[{anchors[(r, c)]} for c in range(1, shape[r - 1] + 1)] for r in range(1, n + 1)]
            for k, (c, x, home) in enumerate(flat):
                if mask >> k & 1:
                    rows[home - 1][c - 1].add(x)
            out.append(SkylineTableau(rows))
    return sorted(out, key=SkylineTableau.sort_key)


def skyline_shape(w: Permutation, lam: Sequence[int]) -> tuple:
    return w.act(as_partition(lam, w.n))


def skyline_sum(w: Permutation, lam: Sequence[int]) -> MPoly:
    """Sum of beta^excess z^wt over skyline tableaux of shape w.lam."""
    n = w.n
    total = MPoly.zero(n)
    for t in enumerate_skyline(skyline_shape(w, lam), n):
        total = total + t.monomial(n)
    return total


# -- bijections -----------------------------------------------------------

def psi(ms: MarkedState) -> SetValuedTableau:
    """Marked state -> reverse set-valued tableau (entries complemented)."""
    return phi(marked_to_gt(ms)).complement(ms.state.n)


def eta(t: SetValuedTableau, shape: Sequence[int]) -> SkylineTableau:
    """Rearrange the columns of a reverse set-valued tableau into a skyline tableau."""
    shape = tuple(shape)
    n = len(shape)
    anchors: dict = {}
    width = max(shape, default=0)
    columns = [t.column(c) for c in range(1, width + 1)]
    for c in range(1, width + 1):
        col = columns[c - 1]
        rows_here = [r for r in range(1, n + 1) if shape[r - 1] >= c]
        if len(col) != len(rows_here):
            raise ValueError(f"column {c} has {len(col)} cells but the shape needs {len(rows_here)}")
        for e in sorted((max(cell) for cell in col), reverse=True):
            if c == 1:
                r = e
                if r not in rows_here or (r, 1) in anchors:
                    raise ValueError(f"first-column entry {e} has no row {e} in shape {shape}")
            else:
                r = next((r for r in rows_here
                          if (r, c) not in anchors and anchors[(r, c - 1)] >= e), None)
                if r is None:
                    raise ValueError(f"no row for anchor {e} in column {c}")
            anchors[(r, c)] = e
    skeleton = SkylineTableau([[anchors[(r, c)] for c in range(1, shape[r - 1] + 1)]
                               for r in range(1, n + 1)])
    rows = [[{anchors[(r, c)]} for c in range(1, shape[r - 1] + 1)] for r in range(1, n + 1)]
    for c in range(1, width + 1):
        for cell in columns[c - 1]:
            for x in cell - {max(cell)}:
                home = free_entry_home(skeleton, c, x, anchors)
                if home is None:
                    raise ValueError(f"free entry {x} in column {c} has no admissible cell")
                rows[home - 1][c - 1].add(x)
    out = SkylineTableau(rows)
    bad = axiom_violations(out)
    if bad:
        raise ValueError(f"eta produced an invalid skyline tableau: {bad}")
    return out


def skyline_from_json(data) -> SkylineTableau:
    if isinstance(data, str):
        data = json.loads(data)
    t = SkylineTableau(data["cells"])
    if list(t.shape) != list(data["shape"]):
        raise ValueError("shape does not match cells")
    return t

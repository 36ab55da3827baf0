"""Five-vertex lattice models: boundaries, admissible states, weights, GT patterns.

Grid conventions: rows 1..n from the top (row r carries the spectral
parameter z_r), columns 1..m from the left.  Strands enter on the left
boundary and leave through the top boundary, moving right and up.  Edge
labels are 0 (empty) or a color index k >= 1; in the uncolored model every
occupied edge is 1.  A smaller index means a larger color.

A vertex is written as the 4-tuple ``(left, top, right, bottom)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .algebra import MPoly, poly_sum
from .symgroup import Permutation, as_partition
from .tableaux import MarkedGTPattern, is_gt_pattern, markable_positions

FLAVORS = ("uncolored", "atom", "lascoux", "lascoux-prime")


@dataclass(frozen=True)
class Flavor:
    kind: str
    w: Permutation | None = None
    crossing: frozenset = field(default=frozenset(), compare=False)

    def __post_init__(self):
        if self.kind not in FLAVORS:
            raise ValueError(f"unknown flavor {self.kind!r}; expected one of {FLAVORS}")
        if self.kind == "uncolored":
            if self.w is not None:
                raise ValueError("the uncolored model takes no permutation")
            return
        if self.w is None:
            raise ValueError(f"flavor {self.kind} needs a permutation")
        # pairs of positions inverted by w w0, i.e. inverted value pairs of its inverse
        ww0 = self.w * Permutation.longest(self.w.n)
        object.__setattr__(self, "crossing", frozenset(ww0.inverse().inversions()))

    @classmethod
    def uncolored(cls) -> "Flavor":
        return cls("uncolored")

    @classmethod
    def atom(cls, w: Permutation) -> "Flavor":
        return cls("atom", w)

    @classmethod
    def lascoux(cls, w: Permutation) -> "Flavor":
        return cls("lascoux", w)

    @classmethod
    def lascoux_prime(cls, w: Permutation) -> "Flavor":
        return cls("lascoux-prime", w)

    @property
    def colored(self) -> bool:
        return self.kind != "uncolored"

    def left_boundary(self, n: int) -> tuple:
        if not self.colored:
            return (1,) * n
        if self.w.n != n:
            raise ValueError(f"permutation has size {self.w.n}, grid has {n} rows")
        # (w w0) acting on (c_1, ..., c_n): row r receives c_k with (w w0)(k) = r
        return (self.w * Permutation.longest(n)).inverse().one_line

    def __str__(self):
        return self.kind if self.w is None else f"{self.kind}({self.w})"


# -- boundary -------------------------------------------------------------

def default_width(lam: Sequence[int], n: int) -> int:
    lam = as_partition(lam, n)
    return (lam[0] if lam else 0) + n


def partition_to_boundary(lam: Sequence[int], n: int, m: int | None = None,
                          colored: bool = True) -> tuple:
    """Top-boundary labels: column lam_j + n + 1 - j carries color n + 1 - j (or 1)."""
    lam = as_partition(lam, n)
    if m is None:
        m = default_width(lam, n)
    if n and lam[0] + n > m:
        raise ValueError(f"m={m} is too small for lambda={lam}; need m >= {lam[0] + n}")
    top = [0] * m
    for j in range(1, n + 1):
        top[lam[j - 1] + n - j] = (n + 1 - j) if colored else 1
    return tuple(top)


def boundary_to_partition(labels: Sequence[int]) -> tuple:
    """Inverse of partition_to_boundary on the occupied positions."""
    ones = [c for c, x in enumerate(labels, start=1) if x]
    k = len(ones)
    return tuple(ones[k - i] - (k + 1 - i) for i in range(1, k + 1))


# -- local weights --------------------------------------------------------

def vertex_kind(cfg: Sequence[int], flavor: Flavor) -> str | None:
    """Name of the local configuration, or None if inadmissible for the flavor."""
    l, t, r, b = cfg
    if any(x < 0 for x in cfg):
        return None
    if not flavor.colored and any(x > 1 for x in cfg):
        return None
    if (l, t, r, b) == (0, 0, 0, 0):
        return "a1"
    if l == 0 and t == 0 and r and r == b:
        return "a2"
    if t == 0 and b == 0 and l and l == r:
        return "b2"
    if r == 0 and b == 0 and l and l == t:
        return "c1"
    if not (l and t and r and b):
        return None
    if l == t == r == b:
        return "b1o" if flavor.colored else "b1"
    if not flavor.colored:
        return None
    kind = flavor.kind
    if l == t and r == b and r < l:
        # (c_j, c_j, c_i, c_i), c_i > c_j: strands touch without crossing
        pair = (r, l)
        if kind == "atom" or (kind == "lascoux" and pair in flavor.crossing):
            return "b1"
        return None
    if l == r and t == b and t < l:
        # (c_j, c_i, c_j, c_i): strands cross
        pair = (t, l)
        if kind in ("atom", "lascoux-prime") or (kind == "lascoux" and pair in flavor.crossing):
            return "b1dag"
        return None
    if l == t and r == b and l < r:
        # (c_i, c_i, c_j, c_j): larger color turns up on the left
        pair = (l, r)
        if kind == "lascoux-prime" or (kind == "lascoux" and pair not in flavor.crossing):
            return "b1prime"
        return None
    return None


def kind_weight(kind: str, row: int, n: int) -> MPoly:
    if kind == "a2":
        return 1 + MPoly.beta(n) * MPoly.z(row, n)
    if kind == "b2":
        return MPoly.z(row, n)
    return MPoly.one(n)


def local_weight(cfg: Sequence[int], flavor: Flavor, row: int, n: int) -> MPoly:
    """Boltzmann weight of one vertex in row ``row``; inadmissible gives 0."""
    kind = vertex_kind(cfg, flavor)
    if kind is None:
        return MPoly.zero(n)
    return kind_weight(kind, row, n)


# -- states ---------------------------------------------------------------

class LatticeState:
    """An admissible edge labelling of the n x m grid.

    ``h[r][c]`` is the horizontal edge left of vertex (r+1, c+1) (c = m is
    the right boundary); ``v[r][c]`` is the vertical edge above vertex
    (r+1, c+1) (r = n is the bottom boundary).
    """

    __slots__ = ("flavor", "lam", "n", "m", "h", "v", "_weight")

    def __init__(self, flavor: Flavor, lam, n: int, m: int, h, v, check: bool = True):
        self.flavor = flavor
        self.lam = as_partition(lam, n)
        self.n, self.m = n, m
        self.h = tuple(tuple(row) for row in h)
        self.v = tuple(tuple(row) for row in v)
        self._weight = None
        if check:
            self.validate()

    def validate(self):
        n, m = self.n, self.m
        if len(self.h) != n or any(len(row) != m + 1 for row in self.h):
            raise ValueError("horizontal edge array has the wrong shape")
        if len(self.v) != n + 1 or any(len(row) != m for row in self.v):
            raise ValueError("vertical edge array has the wrong shape")
        if self.v[0] != partition_to_boundary(self.lam, n, m, self.flavor.colored):
            raise ValueError("top boundary does not encode lambda")
        if tuple(row[0] for row in self.h) != self.flavor.left_boundary(n):
            raise ValueError("left boundary does not match the flavor")
        if any(row[m] for row in self.h) or any(self.v[n]):
            raise ValueError("right and bottom boundaries must be empty")
        for r, c, cfg in self.vertices():
            if vertex_kind(cfg, self.flavor) is None:
                raise ValueError(f"vertex ({r},{c}) = {cfg} is inadmissible for {self.flavor}")

    def vertex(self, r: int, c: int) -> tuple:
        """(left, top, right, bottom) at row r, column c (1-based)."""
        return (self.h[r - 1][c - 1], self.v[r - 1][c - 1], self.h[r - 1][c], self.v[r][c - 1])

    def vertices(self) -> Iterator:
        for r in range(1, self.n + 1):
            for c in range(1, self.m + 1):
                yield r, c, self.vertex(r, c)

    def kind(self, r: int, c: int) -> str:
        return vertex_kind(self.vertex(r, c), self.flavor)

    def kinds(self) -> list:
        return [[self.kind(r, c) for c in range(1, self.m + 1)] for r in range(1, self.n + 1)]

    def weight(self) -> MPoly:
        if self._weight is None:
            w = MPoly.one(self.n)
            for r, c, cfg in self.vertices():
                w = w * kind_weight(vertex_kind(cfg, self.flavor), r, self.n)
            self._weight = w
        return self._weight

    def a2_positions(self) -> list:
        return [(r, c) for r, c, _ in self.vertices() if self.kind(r, c) == "a2"]

    def uncolored(self) -> "LatticeState":
        flat = lambda rows: [[1 if x else 0 for x in row] for row in rows]
        return LatticeState(Flavor.uncolored(), self.lam, self.n, self.m,
                            flat(self.h), flat(self.v), check=False)

    def key(self):
        return (self.h, self.v)

    def __eq__(self, other):
        return (isinstance(other, LatticeState) and self.flavor == other.flavor
                and self.lam == other.lam and self.key() == other.key())

    def __hash__(self):
        return hash((self.flavor, self.key()))

    def __repr__(self):
        return f"LatticeState({self.flavor}, lam={self.lam}, m={self.m})"

    # -- rendering --------------------------------------------------------

    def to_json(self) -> dict:
        verts = [[dict(zip("ltrb", self.vertex(r, c))) for c in range(1, self.m + 1)]
                 for r in range(1, self.n + 1)]
        return {
            "n": self.n, "m": self.m, "flavor": self.flavor.kind,
            "w": str(self.flavor.w) if self.flavor.w is not None else None,
            "lambda": list(self.lam), "vertices": verts, "weight": str(self.weight()),
        }

    def to_ascii(self) -> str:
        """Vertices drawn as ``+``; edge labels as digits, ``.`` for empty."""
        sym = lambda x: "." if x == 0 else (str(x) if x < 10 else chr(ord("a") + x - 10))
        lines = []
        for r in range(self.n + 1):
            lines.append(" " + " ".join(sym(x) for x in self.v[r]))
            if r < self.n:
                lines.append("+".join(sym(x) for x in self.h[r]))
        return "\n".join(lines)


def _dump_state(s: LatticeState) -> str:
    return json.dumps(s.to_json(), sort_keys=True)


# -- enumeration ----------------------------------------------------------

def enumerate_states(flavor: Flavor, lam: Sequence[int], n: int, m: int | None = None) -> list:
    """All admissible states, in row-major DFS order with ascending (right, bottom) choices."""
    lam = as_partition(lam, n)
    if m is None:
        m = default_width(lam, n)
    top = partition_to_boundary(lam, n, m, flavor.colored)
    left = flavor.left_boundary(n)
    labels = list(range(0, n + 1)) if flavor.colored else [0, 1]
    exit_col = {x: c for c, x in enumerate(top)} if flavor.colored else {}
    # colors that must still be travelling below row r (0-based)
    below = [sorted(left[r + 1:]) for r in range(n)]

    h = [[None] * (m + 1) for _ in range(n)]
    v = [list(top)] + [[None] * m for _ in range(n)]
    for r in range(n):
        h[r][0] = left[r]
    out = []

    def rec(r, c):
        if c == m:
            if h[r][m] != 0:
                return
            bottom = v[r + 1]
            if flavor.colored:
                if sorted(x for x in bottom if x) != below[r]:
                    return
            elif sum(bottom) != n - 1 - r:
                return
            if r + 1 == n:
                out.append(LatticeState(flavor, lam, n, m, h, v, check=False))
            else:
                rec(r + 1, 0)
            return
        left_label, top_label = h[r][c], v[r][c]
        used = set(x for x in v[r + 1][:c] if x) if flavor.colored else set()
        for right in labels:
            if c == m - 1 and right:
                continue
            if flavor.colored and right and exit_col[right] <= c:
                continue
            for bottom in labels:
                if r == n - 1 and bottom:
                    continue
                if flavor.colored and bottom and (bottom in used or bottom not in below[r]
                                                  or exit_col[bottom] < c):
                    continue
                if vertex_kind((left_label, top_label, right, bottom), flavor) is None:
                    continue
                h[r][c + 1], v[r + 1][c] = right, bottom
                rec(r, c + 1)
        h[r][c + 1] = None
        v[r + 1][c] = None

    if n == 0:
        return []
    rec(0, 0)
    return out


def partition_function(flavor: Flavor, lam: Sequence[int], n: int, m: int | None = None) -> MPoly:
    return poly_sum((s.weight() for s in enumerate_states(flavor, lam, n, m)), n)


# -- GT patterns ----------------------------------------------------------

def state_to_gt(state: LatticeState) -> tuple:
    """(lam^(0), ..., lam^(n)); lam^(i) is read below row n - i."""
    n = state.n
    rows = []
    for i in range(n + 1):
        edge_row = state.v[n - i]
        part = boundary_to_partition(edge_row)
        if len(part) != i:
            raise ValueError(f"row of vertical edges below row {n - i} has {len(part)} strands, expected {i}")
        rows.append(part)
    return tuple(rows)


def gt_to_state(pattern: Sequence[Sequence[int]], m: int | None = None) -> LatticeState:
    """The uncolored state with the given GT pattern."""
    pattern = tuple(tuple(p) for p in pattern)
    if not is_gt_pattern(pattern):
        raise ValueError(f"{pattern} is not a GT pattern")
    n = len(pattern) - 1
    lam = pattern[-1]
    if m is None:
        m = default_width(lam, n)
    v = [list(partition_to_boundary(pattern[n - k], n - k, m, colored=False)) for k in range(n + 1)]
    h = []
    for r in range(n):
        row = [1]
        for c in range(m):
            carry = row[-1] + v[r + 1][c] - v[r][c]
            if carry not in (0, 1):
                raise ValueError(f"pattern does not give an admissible state at ({r + 1},{c + 1})")
            row.append(carry)
        h.append(row)
    return LatticeState(Flavor.uncolored(), lam, n, m, h, v)


def colorize(state: LatticeState) -> LatticeState:
    """The unique atom-model state with the given uncolored projection."""
    n, m = state.n, state.m
    top = partition_to_boundary(state.lam, n, m, colored=True)
    v = [list(top)] + [[0] * m for _ in range(n)]
    h = [[0] * (m + 1) for _ in range(n)]
    for r in range(n):
        for c in range(m - 1, -1, -1):
            t, right = v[r][c], h[r][c + 1]
            occ = state.vertex(r + 1, c + 1)
            if occ == (0, 0, 0, 0):
                left, bottom = 0, 0
            elif occ == (0, 0, 1, 1):
                left, bottom = 0, right
            elif occ == (1, 0, 1, 0):
                left, bottom = right, 0
            elif occ == (1, 1, 0, 0):
                left, bottom = t, 0
            elif occ == (1, 1, 1, 1):
                if t < right:
                    left, bottom = right, t
                else:
                    left, bottom = t, right
            else:
                raise ValueError(f"vertex {occ} is not an uncolored configuration")
            h[r][c], v[r + 1][c] = left, bottom
    ww0 = Permutation(row[0] for row in h).inverse()
    w = ww0 * Permutation.longest(n)
    return LatticeState(Flavor.atom(w), state.lam, n, m, h, v)


def uncolored_projection(state: LatticeState) -> LatticeState:
    return state.uncolored()


def xi(state: LatticeState, targets: Sequence[LatticeState] | None = None) -> LatticeState:
    """Map a lascoux-prime state to the lascoux state with the same uncolored shadow."""
    if state.flavor.kind != "lascoux-prime":
        raise ValueError("xi is defined on lascoux-prime states")
    flavor = Flavor.lascoux(state.flavor.w)
    if targets is None:
        targets = enumerate_states(flavor, state.lam, state.n, state.m)
    shadow = state.uncolored().key()
    for t in targets:
        if t.uncolored().key() == shadow:
            return t
    raise ValueError("no lascoux state shares this uncolored projection")


# -- strands --------------------------------------------------------------

def strands(state: LatticeState) -> dict:
    """Map each color to the list of vertices its strand visits, in order."""
    if not state.flavor.colored:
        raise ValueError("strands are defined for colored states")
    paths = {}
    for r0, color in enumerate(state.flavor.left_boundary(state.n), start=1):
        path = []
        r, c, came = r0, 1, "left"
        while r >= 1:
            path.append((r, c))
            l, t, right, _ = state.vertex(r, c)
            if t == color:
                r -= 1
                came = "bottom"
            elif right == color:
                c += 1
                came = "left"
            else:
                raise ValueError(f"strand of color {color} breaks at ({r},{c}) after entering from {came}")
        if state.v[0][c - 1] != color:
            raise ValueError(f"strand of color {color} leaves through the wrong column")
        paths[color] = path
    return paths


def crossings(state: LatticeState) -> list:
    """Color pairs (i, j), i < j, crossing at each crossing vertex, in row-major order."""
    out = []
    for r, c, cfg in state.vertices():
        if vertex_kind(cfg, state.flavor) == "b1dag":
            l, t, _, _ = cfg
            out.append(((t, l), (r, c)))
    return out


# -- marked states --------------------------------------------------------

@dataclass(frozen=True)
class MarkedState:
    state: LatticeState
    marks: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "marks", frozenset(self.marks))
        bad = self.marks - set(self.state.a2_positions())
        if bad:
            raise ValueError(f"marks {sorted(bad)} are not on a2 vertices")

    def monomial(self) -> MPoly:
        """beta^|M| times z_r for each b2 vertex and each marked a2 vertex."""
        n = self.state.n
        exps = [0] * n
        for r, c, _ in self.state.vertices():
            k = self.state.kind(r, c)
            if k == "b2" or (k == "a2" and (r, c) in self.marks):
                exps[r - 1] += 1
        return MPoly.monomial(exps, n, beta_exp=len(self.marks))


def a2_to_mark(state: LatticeState, r: int, c: int) -> tuple:
    """GT position (i, j) attached to the a2 vertex at (r, c)."""
    ones = [cc for cc, x in enumerate(state.v[r], start=1) if x]
    k = ones.index(c) + 1
    j = state.n + 1 - r
    return (j - k, j)


def mark_to_a2(state: LatticeState, i: int, j: int) -> tuple:
    r = state.n + 1 - j
    ones = [cc for cc, x in enumerate(state.v[r], start=1) if x]
    return (r, ones[j - i - 1])


def markable_vertices(state: LatticeState) -> list:
    return state.a2_positions()


def marked_to_gt(ms: MarkedState) -> MarkedGTPattern:
    rows = state_to_gt(ms.state)
    marks = frozenset(a2_to_mark(ms.state, r, c) for r, c in ms.marks)
    return MarkedGTPattern(rows, marks)


def gt_to_marked(p: MarkedGTPattern, m: int | None = None) -> MarkedState:
    state = gt_to_state(p.rows, m)
    return MarkedState(state, frozenset(mark_to_a2(state, i, j) for i, j in p.marks))


def all_markings(state: LatticeState) -> list:
    spots = state.a2_positions()
    out = []
    for mask in range(1 << len(spots)):
        out.append(MarkedState(state, frozenset(s for k, s in enumerate(spots) if mask >> k & 1)))
    return out


def marked_expansion(state: LatticeState) -> dict:
    """Map each marking to its monomial; the values sum to the state weight."""
    return {ms.marks: ms.monomial() for ms in all_markings(state)}

"""R-matrices and a symbolic checker for the RLL (Yang-Baxter) relation.

An R-vertex is a tilted crossing with edges upper-left, lower-left (inputs)
and upper-right, lower-right (outputs).  :class:`RConfig` keeps the order
(upper-right, lower-right, lower-left, upper-left).

The RLL relation is checked in the ring Z[beta, z1, z2] with z1 = z_i for the
upper row and z2 = z_j for the lower row:

    sum_{x,y,g} R(a,b -> x,y) L_i(x,c,d,g) L_j(y,g,e,f)
        == sum_{p,q,g} L_j(b,c,p,g) L_i(a,g,q,f) R(q,p -> d,e)

with L written (left, top, right, bottom) and R's arguments given as
(lower-left, upper-left -> upper-right, lower-right).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Mapping, NamedTuple

from .algebra import MPoly, evaluate_expression
from .lattice import Flavor, kind_weight, vertex_kind
from .symgroup import Permutation, all_permutations

RING = 2  # number of z-variables in the verification ring
COLORS = 3


class RConfig(NamedTuple):
    ur: int
    lr: int
    ll: int
    ul: int

    @classmethod
    def from_flow(cls, ll: int, ul: int, ur: int, lr: int) -> "RConfig":
        return cls(ur, lr, ll, ul)


def _zi():
    return MPoly.z(1, RING)


def _zj():
    return MPoly.z(2, RING)


def _b():
    return MPoly.beta(RING)


def r_kind(cfg: RConfig, flavor: Flavor) -> str | None:
    """Name of an R configuration, or None if it is not admissible at all."""
    ur, lr, ll, ul = cfg
    if sorted((ll, ul)) != sorted((ur, lr)):
        return None
    if not flavor.colored and any(x > 1 for x in cfg):
        return None
    if ll == ul == ur == lr:
        return "empty" if ll == 0 else "full"
    if ll == 0:
        return "top" if ur == ul else "down"
    if ul == 0:
        return "bottom" if lr == ll else "up"
    # two distinct colors; i < j means c_i > c_j
    i, j = min(ll, ul), max(ll, ul)
    if (ll, ul, ur, lr) == (j, i, i, j):
        return "X1"
    if (ll, ul, ur, lr) == (i, j, j, i):
        return "X2"
    if (ll, ul, ur, lr) == (i, j, i, j):
        return "X3"
    return "X4"


def r_kind_weight(kind: str, pair_crosses: bool, flavor: Flavor) -> MPoly:
    zi, zj, b = _zi(), _zj(), _b()
    if kind in ("empty", "full", "top"):
        return (1 + b * zi) * zj
    if kind == "down":
        return (zj - zi) * zj
    if kind == "bottom":
        return (1 + b * zj) * zj
    if kind in ("up", "X4"):
        return MPoly.zero(RING)
    if kind == "X3":
        # a pair that never crosses in the lascoux model cannot cross here either
        if flavor.kind == "lascoux" and not pair_crosses:
            return MPoly.zero(RING)
        return zj - zi
    swapped = flavor.kind == "lascoux-prime" or (flavor.kind == "lascoux" and not pair_crosses)
    if kind == "X1":
        return (1 + b * zi) * zj if swapped else (1 + b * zj) * zi
    if kind == "X2":
        return (1 + b * zj) * zi if swapped else (1 + b * zi) * zj
    raise ValueError(f"unknown R configuration {kind!r}")


def r_weight(cfg: RConfig, flavor: Flavor, overrides: Mapping[str, MPoly] | None = None) -> MPoly:
    """Weight of an R configuration in Z[beta, zi, zj]; inadmissible gives 0."""
    kind = r_kind(cfg, flavor)
    if kind is None:
        return MPoly.zero(RING)
    if overrides and f"R:{kind}" in overrides:
        return overrides[f"R:{kind}"]
    pair = tuple(sorted(x for x in (cfg.ll, cfg.ul) if x))
    return r_kind_weight(kind, pair in flavor.crossing, flavor)


def l_weight(cfg, flavor: Flavor, row: int, overrides: Mapping[str, Callable] | None = None) -> MPoly:
    """L-vertex weight in row ``row`` (1 for zi, 2 for zj) of the verification ring."""
    kind = vertex_kind(cfg, flavor)
    if kind is None:
        return MPoly.zero(RING)
    if overrides and kind in overrides:
        return overrides[kind](row)
    return kind_weight(kind, row, RING)


L_NAMES = ("a1", "a2", "b1", "b1o", "b1dag", "b1prime", "b2", "c1")
R_NAMES = tuple(f"R:{k}" for k in ("empty", "full", "top", "bottom", "down", "up",
                                   "X1", "X2", "X3", "X4"))


def parse_mutation(spec: str) -> tuple:
    """``name=expr`` -> (name, value).  L names use b, z; R names use b, zi, zj."""
    if "=" not in spec:
        raise ValueError(f"mutation {spec!r} must look like name=expression")
    name, expr = (s.strip() for s in spec.split("=", 1))
    if name in L_NAMES:
        def value(row, expr=expr):
            names = {"b": _b(), "z": MPoly.z(row, RING)}
            return evaluate_expression(expr, names, RING)
        value(1)  # fail early on bad syntax
        return name, value
    if name in R_NAMES:
        names = {"b": _b(), "zi": _zi(), "zj": _zj()}
        return name, evaluate_expression(expr, names, RING)
    raise ValueError(f"unknown configuration {name!r}; choose from {L_NAMES + R_NAMES}")


@dataclass
class RLLReport:
    flavor: str
    boundaries: int = 0
    crossing_sets: list = field(default_factory=list)
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.witness is None

    def to_json(self) -> dict:
        return {"flavor": self.flavor, "boundaries": self.boundaries,
                "crossing_sets": [sorted(map(list, s)) for s in self.crossing_sets],
                "passed": self.passed, "witness": self.witness}


def _tables(flavor, labels, l_over, r_over):
    lt = {1: {}, 2: {}}
    for row in (1, 2):
        for cfg in itertools.product(labels, repeat=4):
            w = l_weight(cfg, flavor, row, l_over)
            if w:
                lt[row].setdefault(cfg[:2], []).append((cfg[2], cfg[3], w))
    rt = {}
    for ll, ul, ur, lr in itertools.product(labels, repeat=4):
        w = r_weight(RConfig(ur, lr, ll, ul), flavor, r_over)
        if w:
            rt[(ll, ul, ur, lr)] = w
    r_by_input = {}
    for (ll, ul, ur, lr), w in rt.items():
        r_by_input.setdefault((ll, ul), []).append((ur, lr, w))
    return lt, rt, r_by_input


def rll_sides(boundary, tables) -> tuple:
    """(lhs, rhs, lhs_terms, rhs_terms) for one boundary (a, b, c, d, e, f)."""
    a, b, c, d, e, f = boundary
    lt, rt, r_by_input = tables
    zero = MPoly.zero(RING)
    lhs, rhs = zero, zero
    lhs_terms, rhs_terms = [], []
    for x, y, wr in r_by_input.get((a, b), ()):
        for right, g, w1 in lt[1].get((x, c), ()):
            if right != d:
                continue
            for right2, bottom, w2 in lt[2].get((y, g), ()):
                if (right2, bottom) == (e, f):
                    term = wr * w1 * w2
                    lhs = lhs + term
                    lhs_terms.append({"x": x, "y": y, "g": g, "weight": str(term)})
    for p, g, w1 in lt[2].get((b, c), ()):
        for q, bottom, w2 in lt[1].get((a, g), ()):
            if bottom != f:
                continue
            wr = rt.get((q, p, d, e))
            if wr:
                term = w1 * w2 * wr
                rhs = rhs + term
                rhs_terms.append({"p": p, "q": q, "g": g, "weight": str(term)})
    return lhs, rhs, lhs_terms, rhs_terms


def crossing_flavors(kind: str) -> list:
    """Flavors over 3 colors to test; for ``lascoux`` one per realizable crossing set."""
    if kind == "uncolored":
        return [Flavor.uncolored()]
    out, seen = [], set()
    for w in all_permutations(COLORS):
        fl = Flavor(kind, w)
        if kind != "lascoux":
            return [fl]
        if fl.crossing not in seen:
            seen.add(fl.crossing)
            out.append(fl)
    return out


def check_rll(kind: str, mutations: Mapping | None = None) -> RLLReport:
    """Verify RLL over every boundary; stop at the first failure."""
    mutations = dict(mutations or {})
    l_over = {k: v for k, v in mutations.items() if not k.startswith("R:")}
    r_over = {k: v for k, v in mutations.items() if k.startswith("R:")}
    report = RLLReport(kind)
    flavors = crossing_flavors(kind)
    for flavor in flavors:
        labels = [0, 1] if not flavor.colored else list(range(COLORS + 1))
        tables = _tables(flavor, labels, l_over, r_over)
        report.crossing_sets.append(flavor.crossing)
        for boundary in itertools.product(labels, repeat=6):
            report.boundaries += 1
            lhs, rhs, lt_, rt_ = rll_sides(boundary, tables)
            if lhs != rhs:
                report.witness = {
                    "boundary": dict(zip("abcdef", boundary)),
                    "crossing": sorted(map(list, flavor.crossing)),
                    "lhs": str(lhs), "rhs": str(rhs),
                    "lhs_terms": lt_, "rhs_terms": rt_,
                }
                return report
    return report


def rotated_l_check() -> list:
    """Compare uncolored R weights with L weights at z = (zj - zi)/(1 + b zi).

    L config (l, t, r, b) sits on the R crossing as ll = b, ul = l, ur = t,
    lr = r.  Each L weight is p0 + p1 z, so after scaling by (1 + b zi) zj the
    identity to check is R = zj * (p0 (1 + b zi) + p1 (zj - zi)).
    Returns the list of mismatching configurations (empty on success).
    """
    flavor = Flavor.uncolored()
    zi, zj, b = _zi(), _zj(), _b()
    bad = []
    for cfg in itertools.product((0, 1), repeat=4):
        l, t, r, bo = cfg
        weight = l_weight(cfg, flavor, 1)
        # weight is a polynomial in beta and z1 of degree <= 1 in z1
        p1 = weight.coefficient_in(1, 1)
        p0 = weight.coefficient_in(1, 0)
        if weight.degree_in(1) > 1:
            raise AssertionError("L weights are at most linear in z")
        expected = zj * (p0 * (1 + b * zi) + p1 * (zj - zi))
        actual = r_weight(RConfig.from_flow(bo, l, t, r), flavor)
        if actual != expected:
            bad.append({"config": list(cfg), "R": str(actual), "scaled_L": str(expected)})
    return bad


def r_conserves_colors(kind: str) -> bool:
    """Every nonzero R weight has the same multiset of inputs and outputs."""
    for flavor in crossing_flavors(kind):
        labels = [0, 1] if not flavor.colored else list(range(COLORS + 1))
        for ll, ul, ur, lr in itertools.product(labels, repeat=4):
            w = r_weight(RConfig(ur, lr, ll, ul), flavor)
            if w and sorted((ll, ul)) != sorted((ur, lr)):
                return False
    return True

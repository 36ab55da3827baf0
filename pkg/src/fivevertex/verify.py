"""Exhaustive cross-checks between the lattice models, operators and tableaux.

Every suite returns a :class:`SuiteResult`; a failing suite carries the first
witness found (a JSON-serialisable dict).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .algebra import MPoly, poly_sum
from .lattice import (Flavor, all_markings, colorize, crossings, default_width, enumerate_states,
                      gt_to_marked, gt_to_state, marked_to_gt, partition_function, state_to_gt,
                      strands, xi)
from .operators import (apply_word, atom_of_composition, atom_op, demazure_lascoux, grothendieck_det,
                        lascoux, lascoux_atom)
from .skyline import enumerate_skyline, eta, psi, skyline_sum
from .symgroup import (Permutation, all_permutations, bruhat_leq, is_min_rep, min_coset_reps,
                       partitions_below)
from .tableaux import (buch_grothendieck, enumerate_marked_gt_patterns, enumerate_svt,
                       generating_function, key_class, key_filtered, key_of, key_tableau, phi,
                       phi_inverse)
from .yangbaxter import check_rll, parse_mutation, rotated_l_check

FLAVOR_KINDS = ("uncolored", "atom", "lascoux", "lascoux-prime")


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    witness: dict | None = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.witness is None

    def check(self, ok: bool, **witness) -> bool:
        self.checks += 1
        if not ok and self.witness is None:
            self.witness = {k: _plain(v) for k, v in witness.items()}
        return ok

    def to_json(self) -> dict:
        return {"suite": self.name, "checks": self.checks, "passed": self.passed,
                "witness": self.witness, "notes": self.notes}


def _plain(v):
    if isinstance(v, (MPoly, Permutation)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, (frozenset, set)):
        return sorted(_plain(x) for x in v)
    return v


def partition_range(bound, n: int, max_cells: int | None = None) -> list:
    bound = tuple(bound)[:n] + (0,) * max(0, n - len(bound))
    if any(bound[n:]):
        raise ValueError(f"bound {bound} does not fit n={n}")
    parts = partitions_below(bound)
    if max_cells is not None:
        parts = [p for p in parts if sum(p) <= max_cells]
    return parts


# -- suites ---------------------------------------------------------------

def suite_ybe(n: int = 3, max_cells: int | None = None) -> SuiteResult:
    res = SuiteResult("ybe")
    for kind in FLAVOR_KINDS:
        rep = check_rll(kind)
        res.check(rep.passed, flavor=kind, rll=rep.witness)
        res.notes.append(f"{kind}: {rep.boundaries} boundaries")
    res.check(not rotated_l_check(), rotated=rotated_l_check())
    for kind in ("uncolored", "atom", "lascoux", "lascoux-prime"):
        mutated = check_rll(kind, dict([parse_mutation("a2=1")]))
        res.check(not mutated.passed, flavor=kind, problem="mutated a2 weight was not detected")
    return res


def suite_groth4way(n: int = 3, max_cells: int | None = None) -> SuiteResult:
    res = SuiteResult("groth4way")
    w0 = Permutation.longest(n)
    for lam in partition_range((3,) * n, n, max_cells):
        det = grothendieck_det(lam, n)
        for method, value in (("lattice", partition_function(Flavor.uncolored(), lam, n)),
                              ("svt", buch_grothendieck(lam, n)),
                              ("ddo", lascoux(w0, lam))):
            res.check(value == det, case=lam, method=method, expected=det, actual=value)
    return res


def _row_recurrence(res, lam, n):
    """Z(Atom(s_i w)) = (1 + b z_i) z_{i+1} (Z - s_i Z) / (z_i - z_{i+1}) when s_i w > w."""
    b = MPoly.beta(n)
    for w in all_permutations(n):
        z = partition_function(Flavor.atom(w), lam, n)
        for i in range(1, n):
            siw = Permutation.simple(i, n) * w
            if siw.length() <= w.length():
                continue
            zi, zj = MPoly.z(i, n), MPoly.z(i + 1, n)
            rhs = ((1 + b * zi) * zj * (z - z.swap(i))).exact_divide(zi - zj)
            lhs = partition_function(Flavor.atom(siw), lam, n)
            res.check(lhs == rhs, case=lam, w=w, i=i, expected=rhs, actual=lhs)


def suite_thm33(n: int = 3, max_cells: int | None = None) -> SuiteResult:
    res = SuiteResult("thm33")
    for lam in partition_range((3,) * n, n, max_cells):
        pieces = []
        for w in all_permutations(n):
            z = partition_function(Flavor.atom(w), lam, n)
            expected = lascoux_atom(w, lam)
            res.check(z == expected, case=lam, w=w, expected=expected, actual=z)
            pieces.append(z)
        unc = partition_function(Flavor.uncolored(), lam, n)
        total = poly_sum(pieces, n)
        res.check(total == unc, case=lam, problem="atoms do not sum to the uncolored model",
                  expected=unc, actual=total)
        if n <= 3:
            _row_recurrence(res, lam, n)
    return res


def _lascoux_suite(name, kind, n, max_cells):
    res = SuiteResult(name)
    for lam in partition_range((3,) * n, n, max_cells):
        for w in all_permutations(n):
            z = partition_function(Flavor(kind, w), lam, n)
            expected = lascoux(w, lam)
            res.check(z == expected, case=lam, w=w, expected=expected, actual=z)
    return res


def suite_thm34(n: int = 3, max_cells: int | None = None) -> SuiteResult:
    return _lascoux_suite("thm34", "lascoux", n, max_cells)


def suite_thm37(n: int = 3, max_cells: int | None = None) -> SuiteResult:
    res = _lascoux_suite("thm37", "lascoux-prime", n, max_cells)
    for lam in partition_range((2, 2, 1), n, max_cells):
        for w in all_permutations(n):
            check_xi(res, lam, w, n)
    return res


def check_xi(res: SuiteResult, lam, w, n):
    targets = enumerate_states(Flavor.lascoux(w), lam, n)
    sources = enumerate_states(Flavor.lascoux_prime(w), lam, n)
    images = [xi(s, targets) for s in sources]
    res.check(len(set(images)) == len(sources) and set(images) == set(targets),
              case=lam, w=w, problem="xi is not a bijection",
              sources=len(sources), targets=len(targets))
    for s, t in zip(sources, images):
        res.check(s.weight() == t.weight(), case=lam, w=w, problem="xi changes the weight")


def suite_eq24(n: int = 3, max_cells: int | None = None) -> SuiteResult:
    res = SuiteResult("eq24")
    perms = all_permutations(n)
    for lam in partition_range((3,) * n, n, max_cells):
        for w in perms:
            total = poly_sum((lascoux_atom(u, lam) for u in perms if bruhat_leq(u, w)), n)
            expected = lascoux(w, lam)
            res.check(total == expected, case=lam, w=w, expected=expected, actual=total)
            atom = lascoux_atom(w, lam)
            res.check((atom == 0) == (not is_min_rep(w, lam)), case=lam, w=w,
                      problem="atom vanishing", atom=atom)
    return res


def suite_operators(n: int = 4, max_cells: int | None = None, seed: int = 0,
                    samples: int = 100) -> SuiteResult:
    res = SuiteResult("operators")
    rng = random.Random(seed)
    for _ in range(samples):
        f = random_poly(rng, n)
        for i in range(1, n):
            p = demazure_lascoux(i, f)
            res.check(demazure_lascoux(i, p) == p, relation="idempotent", i=i, f=f)
            a = atom_op(i, f)
            res.check(atom_op(i, a) == -a, relation="atom square", i=i, f=f)
            for j in range(1, n):
                if abs(i - j) > 1:
                    res.check(demazure_lascoux(i, demazure_lascoux(j, f))
                              == demazure_lascoux(j, demazure_lascoux(i, f)),
                              relation="commute", i=i, j=j, f=f)
                elif j == i + 1:
                    lhs = apply_word([i, j, i], f)
                    rhs = apply_word([j, i, j], f)
                    res.check(lhs == rhs, relation="braid", i=i, f=f)
    lam = (2, 1) + (0,) * (n - 2)
    for w in all_permutations(n):
        ref_l, ref_a = lascoux(w, lam), lascoux_atom(w, lam)
        for word in reduced_words(w):
            res.check(lascoux(w, lam, word) == ref_l, w=w, word=word, problem="word dependence")
            res.check(lascoux_atom(w, lam, word) == ref_a, w=w, word=word, problem="word dependence")
    return res


def random_poly(rng: random.Random, n: int, terms: int = 4, degree: int = 3) -> MPoly:
    data = {}
    for _ in range(terms):
        exps = (rng.randint(0, 1),) + tuple(rng.randint(0, degree) for _ in range(n))
        data[exps] = rng.randint(-5, 5)
    return MPoly(n, data)


def reduced_words(w: Permutation) -> list:
    """All reduced words of w."""
    if w.length() == 0:
        return [[]]
    out = []
    for i in w.right_descents():
        shorter = w * Permutation.simple(i, w.n)
        out.extend(word + [i] for word in reduced_words(shorter))
    return out


def suite_thm41(n: int = 3, max_cells: int | None = None) -> SuiteResult:
    res = SuiteResult("thm41")
    for lam in partition_range((3, 3, 1), n, max_cells):
        for w in all_permutations(n):
            cls = generating_function(key_class(w, lam, n), n)
            expected = atom_of_composition(w, lam)
            res.check(cls == expected, case=lam, w=w, expected=expected, actual=cls)
            filt = generating_function(key_filtered(w, lam, n), n)
            res.check(filt == lascoux(w, lam), case=lam, w=w, expected=lascoux(w, lam), actual=filt)
    return res


def suite_thm43(n: int = 3, max_cells: int | None = None) -> SuiteResult:
    res = SuiteResult("thm43")
    for lam in partition_range((3, 2, 1), n, max_cells):
        for w in all_permutations(n):
            got = skyline_sum(w, lam)
            expected = atom_of_composition(w, lam)
            res.check(got == expected, case=lam, w=w, expected=expected, actual=got)
        for w in min_coset_reps(lam):
            check_eta_psi(res, lam, w, n)
    return res


def check_eta_psi(res: SuiteResult, lam, w, n):
    shape = w.act(lam)
    images = []
    for s in enumerate_states(Flavor.atom(w), lam, n):
        for ms in all_markings(s):
            t = psi(ms)
            try:
                k = eta(t, shape)
            except ValueError as exc:
                res.check(False, case=lam, w=w, problem=str(exc), tableau=t.to_lists())
                return
            res.check(k.monomial(n) == ms.monomial(), case=lam, w=w, problem="eta-psi weight")
            images.append(k)
    target = enumerate_skyline(shape, n)
    res.check(len(set(images)) == len(images) and set(images) == set(target),
              case=lam, w=w, problem="eta-psi is not a bijection",
              images=len(images), skyline=len(target))


def suite_stability(n: int = 3, max_cells: int | None = None, extra: int = 3) -> SuiteResult:
    res = SuiteResult("stability")
    for lam in partition_range((2, 2, 1), n, max_cells):
        m0 = default_width(lam, n)
        flavors = [Flavor.uncolored()] + [Flavor(k, w) for k in FLAVOR_KINDS[1:]
                                          for w in all_permutations(n)]
        for fl in flavors:
            ref = partition_function(fl, lam, n, m0)
            for m in range(m0 + 1, m0 + extra + 1):
                z = partition_function(fl, lam, n, m)
                res.check(z == ref, case=lam, flavor=str(fl), m=m, expected=ref, actual=z)
    return res


def suite_bijections(n: int = 3, max_cells: int | None = None) -> SuiteResult:
    """Round trips of the state/pattern/tableau maps."""
    res = SuiteResult("bijections")
    for lam in partition_range((2, 2, 1), n, max_cells):
        states = enumerate_states(Flavor.uncolored(), lam, n)
        for s in states:
            gt = state_to_gt(s)
            res.check(gt_to_state(gt, s.m) == s, case=lam, problem="gt_to_state")
            res.check(colorize(s).uncolored() == s, case=lam, problem="colorize")
            for ms in all_markings(s):
                p = marked_to_gt(ms)
                t = phi(p)
                res.check(gt_to_marked(p, s.m) == ms, case=lam, problem="marked round trip")
                res.check(phi_inverse(t, n) == p, case=lam, problem="phi inverse")
                res.check(t.excess() == len(ms.marks), case=lam, problem="excess")
                res.check(t.weight(n)[::-1] == ms.monomial().leading_term()[0][1:],
                          case=lam, problem="twisted weight")
                res.check(psi(ms).weight(n) == ms.monomial().leading_term()[0][1:],
                          case=lam, problem="psi weight")
        patterns = enumerate_marked_gt_patterns(lam, n)
        svt = enumerate_svt(lam, n)
        images = {phi(p) for p in patterns}
        res.check(len(images) == len(patterns) and images == set(svt), case=lam,
                  problem="phi is not a bijection onto SVT")
        res.check(sum(len(all_markings(s)) for s in states) == len(patterns), case=lam,
                  problem="marked states and marked patterns differ in number")
        for w in all_permutations(n):
            check_xi(res, lam, w, n)
            for s in enumerate_states(Flavor.atom(w), lam, n):
                strands(s)
                crossed = Counter(pair for pair, _ in crossings(s))
                res.check(set(crossed) == Flavor.atom(w).crossing
                          and all(v == 1 for v in crossed.values()),
                          case=lam, w=w, problem="crossings are not a wiring diagram of w w0")
    return res


SUITES: dict = {
    "ybe": suite_ybe,
    "groth4way": suite_groth4way,
    "thm33": suite_thm33,
    "thm34": suite_thm34,
    "thm37": suite_thm37,
    "eq24": suite_eq24,
    "thm41": suite_thm41,
    "thm43": suite_thm43,
    "stability": suite_stability,
    "operators": suite_operators,
    "bijections": suite_bijections,
}


def run_suite(name: str, n: int = 3, max_cells: int | None = None, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn: Callable = SUITES[name]
    if name == "operators":
        return fn(n=max(n, 2), max_cells=max_cells, seed=seed)
    return fn(n=n, max_cells=max_cells)

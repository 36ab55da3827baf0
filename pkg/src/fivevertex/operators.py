"""Demazure-Lascoux operators, Lascoux polynomials/atoms, and determinants."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .algebra import MPoly, zpower
from .symgroup import Permutation, as_partition, min_coset_rep


def _check_index(i: int, n: int):
    if not 1 <= i <= n - 1:
        raise ValueError(f"operator index {i} out of range for n={n}")


def demazure_lascoux(i: int, f: MPoly) -> MPoly:
    """The 0-Hecke operator varpi_i applied to f."""
    n = f.n
    _check_index(i, n)
    zi, zj, b = MPoly.z(i, n), MPoly.z(i + 1, n), MPoly.beta(n)
    bz = b * zi * zj
    num = (zi + bz) * f - (zj + bz) * f.swap(i)
    return num.exact_divide(zi - zj)


def atom_op(i: int, f: MPoly) -> MPoly:
    """The atom operator varpi_i - 1."""
    return demazure_lascoux(i, f) - f


def apply_word(word: Sequence[int], f: MPoly, op=demazure_lascoux) -> MPoly:
    """op_{i_1} ... op_{i_l} f; the last letter acts first."""
    for i in reversed(word):
        f = op(i, f)
    return f


@lru_cache(maxsize=4096)
def _lascoux(w: tuple, lam: tuple, atom: bool, word: tuple | None) -> MPoly:
    n = len(lam)
    perm = Permutation(w)
    if word is None:
        word = tuple(perm.reduced_word())
    elif Permutation.from_word(word, n) != perm or len(word) != perm.length():
        raise ValueError(f"{word} is not a reduced word for {perm}")
    return apply_word(word, zpower(lam), atom_op if atom else demazure_lascoux)


def lascoux(w: Permutation, lam: Sequence[int], word: Sequence[int] | None = None) -> MPoly:
    """L_{w lam} = varpi_w z^lam."""
    lam = as_partition(lam, w.n)
    return _lascoux(w.one_line, lam, False, tuple(word) if word is not None else None)


def lascoux_atom(w: Permutation, lam: Sequence[int], word: Sequence[int] | None = None) -> MPoly:
    """varpi-bar_w z^lam; zero unless w is a minimal coset representative."""
    lam = as_partition(lam, w.n)
    return _lascoux(w.one_line, lam, True, tuple(word) if word is not None else None)


def atom_of_composition(w: Permutation, lam: Sequence[int]) -> MPoly:
    """The atom indexed by the composition w.lam (uses the minimal representative)."""
    lam = as_partition(lam, w.n)
    return lascoux_atom(min_coset_rep(w, lam), lam)


# -- determinants -------------------------------------------------------------

def determinant(matrix: Sequence[Sequence[MPoly]]) -> MPoly:
    """Cofactor expansion along the first row."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix")
    if size == 1:
        return matrix[0][0]
    if size == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = MPoly.zero(matrix[0][0].n)
    for j in range(size):
        if not matrix[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def vandermonde(n: int) -> MPoly:
    result = MPoly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            result = result * (MPoly.z(i, n) - MPoly.z(j, n))
    return result


def grothendieck_numerator(lam: Sequence[int], n: int) -> MPoly:
    """det( z_j^(lam_i + n - i) (1 + beta z_j)^(i - 1) )."""
    lam = as_partition(lam, n)
    one, b = MPoly.one(n), MPoly.beta(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            zj = MPoly.z(j, n)
            row.append(zj ** (lam[i - 1] + n - i) * (one + b * zj) ** (i - 1))
        rows.append(row)
    return determinant(rows)


@lru_cache(maxsize=512)
def _grothendieck_det(lam: tuple, n: int) -> MPoly:
    return grothendieck_numerator(lam, n).exact_divide(vandermonde(n))


def grothendieck_det(lam: Sequence[int], n: int) -> MPoly:
    """The symmetric Grothendieck polynomial G_lam as a ratio of determinants."""
    return _grothendieck_det(as_partition(lam, n), n)


def schur(lam: Sequence[int], n: int) -> MPoly:
    """Schur polynomial from the bialternant formula."""
    lam = as_partition(lam, n)
    rows = [[MPoly.z(j, n) ** (lam[i - 1] + n - i) for j in range(1, n + 1)]
            for i in range(1, n + 1)]
    return determinant(rows).exact_divide(vandermonde(n))

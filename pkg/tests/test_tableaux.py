import pytest
from hypothesis import given, settings, strategies as st

from fivevertex.algebra import MPoly, zvars
from fivevertex.operators import lascoux, schur
from fivevertex.symgroup import Permutation, all_permutations, partitions_below
from fivevertex.tableaux import (MarkedGTPattern, SetValuedTableau, crystal_component, crystal_e,
                                 crystal_f, enumerate_gt_patterns, enumerate_marked_gt_patterns,
                                 enumerate_ssyt, enumerate_svt, generating_function,
                                 highest_weight_ssyt, is_gt_pattern, is_highest_weight, is_key,
                                 key_class, key_filtered, key_of, key_tableau, lusztig_involution,
                                 markable_positions, phi, phi_inverse, right_key, svt_crystal_e,
                                 svt_crystal_f)

from oracles import ssyt_count

S = SetValuedTableau
P = Permutation

# ten tableaux transcribed from the worked example (lambda = 421, w = s1 s2)
KEY_CLASS_421 = [
    [[1, 1, 1, 1], [2, {2, 3}], [3]],
    [[1, 1, 1, {1, 2}], [2, {2, 3}], [3]],
    [[1, 1, 1, {2, 3}], [2, 2], [3]],
    [[1, 1, {1, 2}, 2], [2, {2, 3}], [3]],
    [[1, 1, 2, {2, 3}], [2, 2], [3]],
    [[1, 1, 1, 2], [2, 3], [3]],
    [[1, 1, 1, 2], [2, {2, 3}], [3]],
    [[1, 1, 2, 2], [2, 3], [3]],
    [[1, 1, 2, 2], [2, {2, 3}], [3]],
    [[1, 2, 2, 2], [2, 3], [3]],
]


def test_svt_small_enumerations():
    assert enumerate_svt((1,), 2) == [S([[1]]), S([[{1, 2}]]), S([[2]])]
    assert [t.excess() for t in enumerate_svt((1,), 2)] == [0, 1, 0]
    (empty,) = enumerate_svt((0, 0), 2)
    assert empty.weight(2) == (0, 0)
    b, (z1, z2) = MPoly.beta(2), zvars(2)
    tabs = enumerate_svt((2, 1), 2)
    assert len(tabs) == 3
    assert generating_function(tabs, 2) == z1 ** 2 * z2 + z1 * z2 ** 2 + b * z1 ** 2 * z2 ** 2


@pytest.mark.parametrize("lam", partitions_below((3, 2, 1)))
def test_ssyt_count_matches_hook_content(lam):
    assert len(enumerate_ssyt(lam, 3)) == ssyt_count(lam, 3)
    assert generating_function(enumerate_ssyt(lam, 3), 3) == schur(lam, 3)


def test_tableau_validity():
    assert S([[1, {1, 2}], [{2, 3}]]).is_valid()
    assert not S([[2, 1]]).is_valid()
    assert not S([[{1, 2}], [2]]).is_valid()
    assert not S([[1, 1], [2, 1]]).is_valid()


def test_key_tableaux():
    assert key_tableau(P.identity(3), (2, 1, 0)).to_lists() == [[[1], [1]], [[2]]]
    assert key_tableau(P.parse("s1s2", 3), (4, 2, 1)) == S([[1, 2, 2, 2], [2, 3], [3]])
    assert key_tableau(P.longest(3), (2, 1, 0)) == S([[2, 3], [3]])
    for w in all_permutations(3):
        assert is_key(key_tableau(w, (3, 2, 1)))


def test_crystal_examples():
    assert crystal_f(S([[1, 1]]), 1) == S([[1, 2]])
    assert crystal_f(S([[1, 2]]), 1) == S([[2, 2]])
    assert crystal_f(S([[2, 2]]), 1) is None
    assert crystal_f(S([[1], [2]]), 1) is None
    assert crystal_e(S([[1, 2]]), 1) == S([[1, 1]])


@pytest.mark.parametrize("lam", [(2, 1, 0), (2, 2, 1), (3, 1, 0)])
def test_svt_crystal_restricts_to_ssyt_crystal(lam):
    for t in enumerate_ssyt(lam, 3):
        for i in (1, 2):
            assert svt_crystal_f(t, i) == crystal_f(t, i)
            assert svt_crystal_e(t, i) == crystal_e(t, i)


@pytest.mark.parametrize("lam", [(2, 1, 0), (2, 2, 0), (3, 1, 0), (2, 1, 1)])
def test_svt_crystal_axioms(lam):
    for t in enumerate_svt(lam, 3):
        for i in (1, 2):
            f = svt_crystal_f(t, i)
            if f is not None:
                assert f.is_valid()
                assert svt_crystal_e(f, i) == t
                wt, fw = t.weight(3), f.weight(3)
                assert fw[i - 1] == wt[i - 1] - 1 and fw[i] == wt[i] + 1
                assert f.excess() == t.excess()


@pytest.mark.parametrize("lam", [(2, 1, 0), (2, 2, 0), (3, 2, 0), (2, 1, 1)])
def test_components_have_schur_characters(lam):
    seen = set()
    for t in enumerate_svt(lam, 3):
        if t in seen or not is_highest_weight(t, 3):
            continue
        comp = crystal_component(t, 3)
        seen |= comp
        mu = t.weight(3)
        expected = MPoly.beta(3) ** t.excess() * schur(mu, 3)
        assert generating_function(comp, 3) == expected
    assert seen == set(enumerate_svt(lam, 3))


def test_lusztig_example_chain():
    t = S([[1, 1, 1, {2, 3}], [2, 2], [3]])
    star = lusztig_involution(t, 3)
    assert star == S([[1, 1, {2, 3}, 3], [2, 2], [3]])
    assert star.min_tableau() == S([[1, 1, 2, 3], [2, 2], [3]])
    assert lusztig_involution(star.min_tableau(), 3) == S([[1, 1, 2, 2], [2, 3], [3]])
    assert right_key(S([[1, 1, 2, 2], [2, 3], [3]]), 3) == S([[1, 2, 2, 2], [2, 3], [3]])
    assert key_of(t, 3) == S([[1, 2, 2, 2], [2, 3], [3]])


def test_second_lusztig_example():
    t = S([[1, 1, 1, 1], [2, {2, 3}], [3]])
    assert lusztig_involution(t, 3) == S([[1, 1, 3, 3], [2, {2, 3}], [3]])


@pytest.mark.parametrize("lam", [(2, 1, 0), (3, 1, 0), (2, 2, 1)])
def test_lusztig_is_involution_reversing_weight(lam):
    for t in enumerate_svt(lam, 3):
        star = lusztig_involution(t, 3)
        assert lusztig_involution(star, 3) == t
        assert star.weight(3) == t.weight(3)[::-1]
        assert star.excess() == t.excess()


def test_key_of_key_is_itself():
    for w in all_permutations(3):
        k = key_tableau(w, (3, 2, 0))
        assert key_of(k, 3) == k


def test_ten_tableau_key_class():
    got = set(key_class(P.parse("s1s2", 3), (4, 2, 1), 3))
    assert got == {S(rows) for rows in KEY_CLASS_421}


@pytest.mark.parametrize("lam", partitions_below((2, 2, 1)))
def test_key_sums(lam):
    for w in all_permutations(3):
        assert generating_function(key_filtered(w, lam, 3), 3) == lascoux(w, lam)


def test_marked_gt_validation():
    with pytest.raises(ValueError):
        MarkedGTPattern(((), (1,), (2, 2)))
    assert is_gt_pattern(((), (2,), (2, 1), (2, 2, 1)))
    assert not is_gt_pattern(((), (3,), (2, 1)))
    assert markable_positions(((), (2,), (2, 1), (2, 2, 1))) == {(1, 2)}


def test_phi_worked_example():
    t = S([[1, 1, 1, 1, 1, {1, 2, 4}, 4], [2, 2, 2, {2, 3}], [3, {3, 4}, 4, 4]])
    p = phi_inverse(t, 4)
    assert p.rows == ((), (6,), (6, 4), (6, 4, 2), (7, 4, 4, 0))
    assert p.marks == {(1, 2), (2, 3), (1, 4), (3, 4)}
    assert phi(p) == t


@pytest.mark.parametrize("lam", partitions_below((2, 2, 1)))
def test_phi_bijection(lam):
    patterns = enumerate_marked_gt_patterns(lam, 3)
    images = [phi(p) for p in patterns]
    assert len(set(images)) == len(images)
    assert set(images) == set(enumerate_svt(lam, 3))
    for p, t in zip(patterns, images):
        assert phi_inverse(t, 3) == p
        assert t.excess() == len(p.marks)
    unmarked = [phi(MarkedGTPattern(p)) for p in enumerate_gt_patterns(lam, 3)]
    assert all(t.is_semistandard() for t in unmarked)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(partitions_below((3, 2, 1))), st.data())
def test_json_round_trip(lam, data):
    tabs = enumerate_svt(lam, 3)
    t = data.draw(st.sampled_from(tabs))
    assert S.from_json(t.to_json()) == t


def test_string_form():
    assert str(S([[1, {1, 2}], [3]])) == "1 {1,2}\n3"


def test_highest_weight_ssyt():
    assert highest_weight_ssyt((3, 1, 0)) == S([[1, 1, 1], [2]])

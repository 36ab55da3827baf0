import pytest

from fivevertex.symgroup import (Permutation, all_permutations, as_partition, bruhat_leq,
                                 is_min_rep, min_coset_rep, partitions_below)

from oracles import subword_interval

P = Permutation


def test_length_and_inversions():
    assert P.identity(3).length() == 0
    assert P.longest(3).length() == 3
    w = P.parse("2,3,1")
    assert w.length() == 2
    assert w.inversions() == {(1, 2), (1, 3)}


def test_reduced_words():
    assert P.identity(3).reduced_word() == []
    assert P.simple(1, 3).reduced_word() == [1]
    assert P.longest(3).reduced_word() == [1, 2, 1]
    for w in all_permutations(4):
        word = w.reduced_word()
        assert len(word) == w.length()
        assert P.from_word(word, 4) == w


def test_word_and_one_line_parse_agree():
    assert P.parse("s1 s2", 3) == P.parse("2,3,1") == P.parse("s1*s2", 3)
    assert str(P.parse("s1s2", 3)) == "2,3,1"
    with pytest.raises(ValueError):
        P.parse("1,1,2")
    with pytest.raises(ValueError):
        P.parse("s1 t2", 3)


def test_composition_convention():
    s1, s2 = P.simple(1, 3), P.simple(2, 3)
    w = s1 * s2
    assert all(w(i) == s1(s2(i)) for i in range(1, 4))
    assert w * w.inverse() == P.identity(3)


def test_left_action_on_compositions():
    assert P.parse("s1s2", 3).act((4, 2, 1)) == (1, 4, 2)
    assert P.longest(3).act((2, 1, 0)) == (0, 1, 2)


def test_bruhat_examples():
    s1, s2 = P.simple(1, 3), P.simple(2, 3)
    for w in all_permutations(3):
        assert bruhat_leq(P.identity(3), w)
    assert bruhat_leq(s1, s1 * s2)
    assert not bruhat_leq(s1 * s2, s2 * s1)
    assert not bruhat_leq(s2 * s1, s1 * s2)


@pytest.mark.parametrize("n", [3, 4])
def test_bruhat_matches_subword_oracle(n):
    perms = all_permutations(n)
    for w in perms:
        below = subword_interval(w)
        for u in perms:
            assert bruhat_leq(u, w) == (u in below)


def test_min_coset_rep_examples():
    for w in all_permutations(3):
        assert min_coset_rep(w, (2, 2, 2)) == P.identity(3)
    assert min_coset_rep(P.simple(1, 3), (2, 2, 1)) == P.identity(3)
    assert min_coset_rep(P.longest(3), (2, 1, 0)) == P.longest(3)


@pytest.mark.parametrize("lam", partitions_below((2, 2, 1, 1)))
def test_min_coset_rep_is_shortest(lam):
    for w in all_permutations(4):
        target = w.act(lam)
        coset = [u for u in all_permutations(4) if u.act(lam) == target]
        shortest = min(coset, key=Permutation.length)
        rep = min_coset_rep(w, lam)
        assert rep == shortest
        assert is_min_rep(rep, lam)
        assert is_min_rep(w, lam) == (w == rep)


def test_as_partition():
    assert as_partition([2, 1], 4) == (2, 1, 0, 0)
    assert as_partition([2, 1, 0, 0], 2) == (2, 1)
    with pytest.raises(ValueError):
        as_partition([1, 2])
    with pytest.raises(ValueError):
        as_partition([3, 2, 1], 2)


def test_partitions_below_counts():
    # a 3 x 3 box holds C(6, 3) partitions
    assert len(partitions_below((3, 3, 3))) == 20
    assert sorted(partitions_below((2, 2, 1))) == sorted([
        (0, 0, 0), (1, 0, 0), (2, 0, 0), (1, 1, 0), (2, 1, 0), (2, 2, 0),
        (1, 1, 1), (2, 1, 1), (2, 2, 1)])

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_words, brute_count
from parikhrs.matrix import (
    ParikhMatrix,
    m_ambiguous,
    m_class,
    m_equivalent,
    parikh_matrix,
    parikh_matrix_product,
    verify_matrix_theorem,
)
from parikhrs.words import Alphabet

ABC = Alphabet("abc")


def brute_matrix(alphabet: Alphabet, w: str) -> list[list[int]]:
    s = alphabet.size
    return [
        [0 if j < i else 1 if j == i else brute_count(w, alphabet.factor(i, j - 1))
         for j in range(s + 1)]
        for i in range(s + 1)
    ]


def test_worked_example():
    m = parikh_matrix(ABC, "abcbac")
    assert m.to_list() == [[1, 2, 2, 3], [0, 1, 2, 3], [0, 0, 1, 2], [0, 0, 0, 1]]
    assert m == parikh_matrix_product(ABC, "abcbac")
    assert m.second_diagonal() == (2, 2, 2)


def test_empty_word_is_identity():
    assert parikh_matrix(ABC, "") == ParikhMatrix.identity(4)


def test_pretty_layout():
    assert parikh_matrix(Alphabet("ab"), "ab").pretty() == "/ 1 1 1 \\\n| 0 1 1 |\n\\ 0 0 1 /"


alphabets = st.sampled_from(["ab", "abc", "abcd"]).map(Alphabet)


@st.composite
def words_over(draw, max_size=12):
    a = draw(alphabets)
    return a, draw(st.text(a.letters, max_size=max_size))


@given(words_over())
def test_entries_count_ascending_runs(aw):
    a, w = aw
    assert verify_matrix_theorem(a, w)
    assert parikh_matrix(a, w).to_list() == brute_matrix(a, w)


@given(alphabets.flatmap(lambda a: st.tuples(st.just(a), st.text(a.letters, max_size=6),
                                             st.text(a.letters, max_size=6))))
def test_morphism_law(auv):
    a, u, v = auv
    assert parikh_matrix(a, u + v) == parikh_matrix(a, u) @ parikh_matrix(a, v)


def test_matrix_validation():
    with pytest.raises(ValueError):
        ParikhMatrix(((1, 0), (1, 1)))
    with pytest.raises(ValueError):
        ParikhMatrix(((2, 0), (0, 1)))


def test_product_overflow():
    big = ParikhMatrix(((1, 2**63), (0, 1)))
    with pytest.raises(OverflowError):
        big @ big


def test_m_equivalence_examples():
    ab = Alphabet("ab")
    assert m_equivalent(ab, "abba", "baab")
    assert not m_equivalent(ab, "ab", "ba")
    assert not m_equivalent(ab, "ab", "abab")
    assert m_ambiguous(ab, "abba") and not m_ambiguous(ab, "ab")
    assert m_equivalent(ABC, "babcbabcbabcbab", "bbacabbcabbcbba")


def test_m_class_matches_brute_force():
    for w in ["abba", "abcbac", "aabbcc", "bcacab"]:
        a = Alphabet("abc")
        target = brute_matrix(a, w)
        expected = sorted(
            v for v in all_words("abc", len(w))
            if len(v) == len(w) and brute_matrix(a, v) == target
        )
        assert m_class(a, w) == expected


def test_long_class_contains_partner():
    members = m_class(ABC, "babcbabcbabcbab")
    assert "bbacabbcabbcbba" in members
    assert members == sorted(members)

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mzvkit.algebra import (
    EMPTY_WORD,
    Index,
    LinComb,
    Word,
    harmonic,
    index_of_word,
    indices_of_weight,
    indices_up_to_weight,
    jset,
    shuffle,
    word_of_index,
)
from mzvkit.errors import DomainError

from _oracles import comb_from_letters, comb_from_parts, quasi_shuffle_oracle, shuffle_oracle


def idx(*parts):
    return Index(tuple(parts))


def comb(*parts):
    return LinComb.of_index(idx(*parts))


words = st.builds(Word.from_letters, st.lists(st.sampled_from([0, 1]), max_size=6))
small_indices = st.builds(
    lambda parts: Index(tuple(parts)),
    st.lists(st.integers(1, 4), max_size=4).filter(lambda ps: sum(ps) <= 6),
)
h1_combs = st.builds(
    lambda pairs: LinComb((word_of_index(k), Fraction(c)) for k, c in pairs),
    st.lists(st.tuples(small_indices, st.integers(-3, 3)), max_size=3),
)


class TestWordsAndIndices:
    def test_word_of_index_examples(self):
        assert str(word_of_index(idx(2))) == "10"
        assert str(word_of_index(idx(1, 2))) == "110"
        assert word_of_index(idx()) == EMPTY_WORD

    def test_index_of_word_examples(self):
        assert index_of_word(Word.parse("10")) == idx(2)
        assert index_of_word(Word.parse("1001")) == idx(3, 1)
        with pytest.raises(DomainError):
            index_of_word(Word.parse("01"))

    @given(small_indices)
    def test_round_trip(self, k):
        assert index_of_word(word_of_index(k)) == k

    def test_jset_examples(self):
        assert sorted(jset(idx(2, 1))) == [1, 3]
        assert sorted(jset(idx(1, 1, 1))) == [1, 2, 3]
        assert sorted(jset(idx(3))) == [1]
        with pytest.raises(DomainError):
            jset(idx())

    @given(small_indices.filter(lambda k: k.parts))
    def test_jset_reproduces_the_word(self, k):
        positions = jset(k)
        letters = tuple(1 if i in positions else 0 for i in range(1, k.weight + 1))
        assert Word.from_letters(letters) == word_of_index(k)
        assert len(positions) == k.depth

    def test_membership_predicates(self):
        assert Word.parse("10").in_h0 and Word.parse("10").in_h1
        assert Word.parse("11").in_h1 and not Word.parse("11").in_h0
        assert not Word.parse("01").in_h1
        assert EMPTY_WORD.in_h0 and EMPTY_WORD.in_h1

    def test_admissibility_and_weight(self):
        assert idx().admissible and idx().weight == 0 and idx().depth == 0
        assert idx(1, 2).admissible and idx(1, 2).weight == 3
        assert not idx(2, 1).admissible

    def test_index_validation(self):
        with pytest.raises(DomainError):
            idx(0, 2)

    def test_parsing(self):
        assert Index.parse("1,2") == idx(1, 2)
        assert Index.parse("") == idx()
        assert Word.parse("") == EMPTY_WORD
        with pytest.raises(DomainError):
            Word.parse("102")
        with pytest.raises(DomainError):
            Index.parse("1,x")

    def test_composition_count(self):
        # 2^(w-1) compositions of weight w; 63 in total up to weight 6
        assert len(indices_of_weight(4)) == 8
        assert len(indices_up_to_weight(6)) == 63


class TestLinComb:
    def test_zero_coefficients_dropped(self):
        x = LinComb([(Word.parse("10"), Fraction(1)), (Word.parse("10"), Fraction(-1))])
        assert not x and len(x) == 0 and x == LinComb.zero()

    def test_serialize_canonical_order(self):
        x = LinComb.of_word(Word.parse("110")) + LinComb.of_word(Word.parse("10"), 2)
        assert x.serialize() == [("2/1", "10"), ("1/1", "110")]

    def test_arithmetic(self):
        x = comb(2)
        assert (x + x) == 2 * x
        assert x - x == LinComb.zero()
        assert Fraction(1, 2) * (2 * x) == x


class TestHarmonicProduct:
    def test_unit_law(self):
        w = comb(3, 1)
        assert harmonic(LinComb.unit(), w) == w
        assert harmonic(w, LinComb.unit()) == w

    def test_depth_one_examples(self):
        # pinned from the quasi-shuffle oracle
        assert harmonic(comb(1), comb(1)) == comb_from_parts({(1, 1): 2, (2,): 1})
        assert harmonic(comb(2), comb(2)) == comb_from_parts({(2, 2): 2, (4,): 1})

    @given(small_indices, small_indices)
    @settings(max_examples=60, deadline=None)
    def test_matches_quasi_shuffle_oracle(self, u, v):
        expected = comb_from_parts(quasi_shuffle_oracle(u.parts, v.parts))
        assert harmonic(LinComb.of_index(u), LinComb.of_index(v)) == expected

    def test_domain_error_outside_h1(self):
        bad = LinComb.of_word(Word.parse("01"))
        with pytest.raises(DomainError):
            harmonic(bad, comb(2))

    @given(h1_combs, h1_combs)
    @settings(max_examples=40, deadline=None)
    def test_commutative(self, x, y):
        assert harmonic(x, y) == harmonic(y, x)

    def test_associative_on_words(self):
        pool = [idx(1), idx(2), idx(1, 1), idx(3), idx(2, 1)]
        for a, b, c in itertools.product(pool, repeat=3):
            if a.weight + b.weight + c.weight > 7:
                continue
            x, y, z = map(LinComb.of_index, (a, b, c))
            assert harmonic(harmonic(x, y), z) == harmonic(x, harmonic(y, z))

    @given(small_indices, small_indices)
    @settings(max_examples=40, deadline=None)
    def test_grading(self, u, v):
        product = harmonic(LinComb.of_index(u), LinComb.of_index(v))
        assert all(w.length == u.weight + v.weight for w in product.support())

    def test_h0_closure(self):
        admissible = [idx(2), idx(3), idx(1, 2), idx(2, 2), idx(1, 1, 2)]
        for u, v in itertools.product(admissible, repeat=2):
            assert harmonic(LinComb.of_index(u), LinComb.of_index(v)).in_h0


class TestShuffleProduct:
    def test_unit_law(self):
        w = LinComb.of_word(Word.parse("0110"))
        assert shuffle(LinComb.unit(), w) == w
        assert shuffle(w, LinComb.unit()) == w

    def test_single_letter_example(self):
        result = shuffle(LinComb.of_word(Word.parse("1")), LinComb.of_word(Word.parse("0")))
        assert result == comb_from_letters({(1, 0): 1, (0, 1): 1})

    def test_weight_two_example(self):
        # pinned from the interleaving oracle
        assert shuffle(comb(2), comb(2)) == comb_from_parts({(2, 2): 2, (1, 3): 4})

    @given(words, words)
    @settings(max_examples=60, deadline=None)
    def test_matches_interleaving_oracle(self, a, b):
        expected = comb_from_letters(shuffle_oracle(a.letters(), b.letters()))
        assert shuffle(LinComb.of_word(a), LinComb.of_word(b)) == expected

    @given(words, words)
    @settings(max_examples=40, deadline=None)
    def test_commutative(self, a, b):
        x, y = LinComb.of_word(a), LinComb.of_word(b)
        assert shuffle(x, y) == shuffle(y, x)

    def test_associative_on_words(self):
        pool = [Word.parse(t) for t in ("1", "0", "10", "11", "01")]
        for a, b, c in itertools.product(pool, repeat=3):
            x, y, z = map(LinComb.of_word, (a, b, c))
            assert shuffle(shuffle(x, y), z) == shuffle(x, shuffle(y, z))

    @given(words, words)
    @settings(max_examples=40, deadline=None)
    def test_letter_conservation_and_grading(self, a, b):
        product = shuffle(LinComb.of_word(a), LinComb.of_word(b))
        ones = sum(a.letters()) + sum(b.letters())
        for w in product.support():
            assert w.length == a.length + b.length
            assert sum(w.letters()) == ones

    @given(st.integers(0, 5), st.integers(0, 5))
    @settings(max_examples=30, deadline=None)
    def test_binomial_mass_for_distinct_letters(self, m, n):
        zeros = LinComb.of_word(Word.from_letters([0] * m))
        ones = LinComb.of_word(Word.from_letters([1] * n))
        product = shuffle(zeros, ones)
        assert sum(c for _, c in product.items()) == Fraction(math.comb(m + n, m))

    def test_h0_closure(self):
        for u, v in itertools.product([idx(2), idx(3), idx(1, 2)], repeat=2):
            assert shuffle(LinComb.of_index(u), LinComb.of_index(v)).in_h0


def test_products_are_thread_safe():
    pairs = [(idx(1, 2), idx(2, 1)), (idx(2), idx(1, 1)), (idx(3), idx(1, 2))]

    def work(pair):
        x, y = map(LinComb.of_index, pair)
        return harmonic(x, y), shuffle(x, y)

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(work, pairs * 16))
    for i, pair in enumerate(pairs * 16):
        assert results[i] == work(pair)

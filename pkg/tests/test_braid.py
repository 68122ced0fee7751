import pytest
from hypothesis import given, settings, strategies as st

from knotfiber.braid import (
    BraidError, BraidWord, Equality, braid_permutation, closure_components,
    conjugate_search, cycle_type, exponent_sum, family_braid, free_reduce,
    is_homogeneous, parse_braid, words_equal,
)


def perm_oracle(word):
    """Independent permutation oracle: compose transpositions one at a time."""
    images = list(range(word.strands + 1))
    for letter in word.letters:
        i = abs(letter)
        for p in range(1, word.strands + 1):
            if images[p] == i:
                images[p] = i + 1
            elif images[p] == i + 1:
                images[p] = i
    return tuple(images[1:])


class TestParseRender:
    def test_tokens(self):
        assert parse_braid("s1 s2", 3).letters == (1, 2)

    def test_beta_zero_string(self):
        assert parse_braid("s2 s1^-1 s3^-1 s2 s3^-1 s1^-2", 4) == family_braid("beta", 0)

    def test_out_of_range(self):
        with pytest.raises(BraidError):
            parse_braid("s5", 4)
        with pytest.raises(BraidError):
            parse_braid("4", 4)

    def test_malformed(self):
        with pytest.raises(BraidError):
            parse_braid("sx", 3)

    def test_signed_integers(self):
        assert parse_braid("1 -2 1", 3).letters == (1, -2, 1)

    def test_render_collapses_runs(self):
        word = BraidWord(3, (1, 1, -2, -2, -2, 1))
        assert word.render() == "s1^2 s2^-3 s1"
        assert parse_braid(word.render(), 3) == word

    def test_render_keeps_cancelling_pairs(self):
        word = BraidWord(2, (1, -1))
        assert word.render() == "s1 s1^-1"
        assert parse_braid(word.render(), 2) == word


class TestFamilies:
    def test_beta_words(self):
        assert family_braid("beta", 0).letters == (2, -1, -3, 2, -3, -1, -1)
        assert family_braid("beta", 1).letters == \
            (2, -1, -2, -2, -3, 2, -3, 2, 2, -1, -1)

    def test_beta_lengths(self):
        for n in range(5):
            assert len(family_braid("beta", n)) == 7 + 4 * n

    def test_morton_words(self):
        assert family_braid("morton", 0).letters == (1, 2, 3)
        assert family_braid("morton", 2).letters == (1, 2, 2, 2, 2, 2, 3, -2, -2, -2, -2)

    def test_negative_param(self):
        with pytest.raises(BraidError):
            family_braid("beta", -1)

    def test_unknown_family(self):
        with pytest.raises(BraidError):
            family_braid("nope", 0)


class TestPermutation:
    def test_identity(self):
        assert braid_permutation(BraidWord(3, ())) == (1, 2, 3)

    def test_single_generator(self):
        assert braid_permutation(BraidWord(2, (1,))) == (2, 1)

    def test_beta_single_four_cycle(self):
        for n in range(4):
            word = family_braid("beta", n)
            perm = braid_permutation(word)
            assert perm == perm_oracle(word)
            assert cycle_type(word) == (4,)

    def test_closure_components(self):
        assert closure_components(family_braid("beta", 2)) == 1
        assert closure_components(BraidWord(3, ())) == 3
        assert closure_components(BraidWord(2, (1, 1, 1, 1))) == 2


class TestExponentSum:
    def test_beta(self):
        for n in range(4):
            word = family_braid("beta", n)
            assert exponent_sum(word) == sum(1 if x > 0 else -1 for x in word.letters) == -3

    def test_morton(self):
        # direct summation: 1 + (2i+1) + 1 - 2i = 3 for every i
        for i in range(4):
            assert exponent_sum(family_braid("morton", i)) == 3

    def test_identity(self):
        assert exponent_sum(BraidWord(4, ())) == 0


class TestHomogeneity:
    def test_beta_zero(self):
        assert is_homogeneous(family_braid("beta", 0))

    def test_beta_two(self):
        assert not is_homogeneous(family_braid("beta", 2))

    def test_simple(self):
        assert is_homogeneous(parse_braid("s1 s2", 3))


class TestEquality:
    def test_braid_relation(self):
        a = parse_braid("s1 s2 s1", 3)
        b = parse_braid("s2 s1 s2", 3)
        assert words_equal(a, b) is Equality.EQUAL

    def test_far_commutation(self):
        a = parse_braid("s1 s3", 4)
        b = parse_braid("s3 s1", 4)
        assert words_equal(a, b) is Equality.EQUAL

    def test_invariant_mismatch(self):
        assert words_equal(BraidWord(3, (1,)), BraidWord(3, (2,))) is Equality.NOT_EQUAL
        assert words_equal(BraidWord(3, (1,)), BraidWord(3, (-1,))) is Equality.NOT_EQUAL

    def test_free_reduction(self):
        assert free_reduce(parse_braid("s1 s2 s2^-1 s1^-1 s3", 4)).letters == (3,)


class TestConjugateSearch:
    def test_spec_pair_found(self):
        a = parse_braid("s1 s2^-1", 3)
        b = parse_braid("s1^-1 s2", 3)
        g = conjugate_search(a, b, max_len=4)
        assert g is not None
        assert len(g) <= 4
        assert words_equal(a.conjugated_by(g), b) is Equality.EQUAL

    def test_equal_words_empty_conjugator(self):
        a = family_braid("morton", 1)
        g = conjugate_search(a, a, max_len=0)
        assert g is not None and len(g) == 0

    def test_exponent_sum_short_circuit(self):
        a = parse_braid("s1 s2", 3)
        b = parse_braid("s1^-1 s2^-1", 3)
        assert conjugate_search(a, b, max_len=3) is None

    def test_strand_mismatch(self):
        with pytest.raises(BraidError):
            conjugate_search(BraidWord(2, (1,)), BraidWord(3, (1,)), 2)


letters_st = st.integers(min_value=-3, max_value=3).filter(lambda x: x != 0)
words_st = st.lists(letters_st, max_size=8).map(lambda ls: BraidWord(4, tuple(ls)))


@settings(max_examples=100, deadline=None)
@given(words_st, words_st)
def test_permutation_homomorphism(u, v):
    uv = u * v
    pu, pv = braid_permutation(u), braid_permutation(v)
    assert braid_permutation(uv) == tuple(pv[pu[p - 1] - 1] for p in range(1, 5))


@settings(max_examples=100, deadline=None)
@given(words_st, words_st)
def test_conjugation_invariants(word, g):
    conj = word.conjugated_by(g)
    assert exponent_sum(conj) == exponent_sum(word)
    assert cycle_type(conj) == cycle_type(word)
    assert closure_components(conj) == closure_components(word)


@settings(max_examples=100, deadline=None)
@given(words_st)
def test_free_reduction_preserves_homogeneity(word):
    if is_homogeneous(word):
        assert is_homogeneous(free_reduce(word))

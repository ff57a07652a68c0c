import pytest
from hypothesis import given, strategies as st

from rtcomb.words import (
    Alphabet,
    Word,
    apply_hom,
    concat,
    erasing_projection_hom,
    format_word,
    identity_hom,
    invert_word,
    parse_word,
    phi,
    sigma,
    sign_flip_hom,
)

S2 = sigma(2)
S3 = sigma(3)


def w2(*letters):
    return Word(S2, letters)


def letters_st(rank):
    return st.tuples(st.integers(0, rank - 1), st.sampled_from([1, -1]))


def words_st(alphabet, max_size=12):
    rank = len(alphabet)
    return st.lists(letters_st(rank), max_size=max_size).map(
        lambda ls: Word(alphabet, ls)
    )


def test_alphabet_rejects_duplicates():
    with pytest.raises(ValueError):
        Alphabet(["x", "x"])


def test_concat_examples():
    eps = Word(S2)
    assert concat(eps, eps) == eps
    u = w2((0, 1), (1, 1))
    v = w2((0, 1))
    assert concat(u, v).letters == ((0, 1), (1, 1), (0, 1))
    # Formal strings: no free reduction.
    cancel = concat(w2((0, 1)), w2((0, -1)))
    assert cancel.letters == ((0, 1), (0, -1))
    assert len(cancel) == 2


def test_concat_alphabet_mismatch():
    with pytest.raises(ValueError):
        concat(Word(S2), Word(S3))


def test_invert_word_examples():
    assert invert_word(Word(S2)) == Word(S2)
    assert invert_word(w2((0, 1), (1, 1))).letters == ((1, -1), (0, -1))


def test_phi_examples():
    abab = w2((0, 1), (1, 1), (0, 1), (1, 1))
    abba = w2((0, 1), (1, 1), (1, 1), (0, 1))
    assert phi(abab) == abba
    with pytest.raises(ValueError):
        phi(w2((0, 1)))


def test_apply_hom_sign_flip():
    f = sign_flip_hom(S2, {0})
    w = w2((0, 1), (1, 1), (0, 1))
    assert apply_hom(f, w).letters == ((0, -1), (1, 1), (0, -1))


def test_apply_hom_erasing_projection():
    f12 = erasing_projection_hom(S3, S2, {0: 0, 1: 1})
    w = Word(S3, [(0, 1), (2, 1), (1, 1)])
    assert apply_hom(f12, w).letters == ((0, 1), (1, 1))
    # Inverse letters of erased symbols vanish too.
    w_inv = Word(S3, [(2, -1), (0, -1)])
    assert apply_hom(f12, w_inv).letters == ((0, -1),)


@given(words_st(S3))
def test_identity_hom_fixes_everything(w):
    assert apply_hom(identity_hom(S3), w) == w


@given(words_st(S3), words_st(S3))
def test_hom_respects_concatenation(u, v):
    f = sign_flip_hom(S3, {0, 2})
    g = erasing_projection_hom(S3, S2, {0: 0, 2: 1})
    for h in (f, g):
        assert apply_hom(h, concat(u, v)) == concat(apply_hom(h, u), apply_hom(h, v))


@given(words_st(S3, max_size=10).filter(lambda w: len(w) >= 2))
def test_phi_is_involution(w):
    assert phi(phi(w)) == w


@given(words_st(S2, max_size=8), words_st(S2, max_size=8).filter(lambda w: len(w) >= 2))
def test_phi_commutes_with_left_concat(u, v):
    assert concat(u, phi(v)) == phi(concat(u, v))


@given(words_st(S3, max_size=10))
def test_invert_is_involution(w):
    assert invert_word(invert_word(w)) == w


@given(words_st(S3, max_size=8), words_st(S3, max_size=8))
def test_invert_antihomomorphism(u, v):
    assert invert_word(concat(u, v)) == concat(invert_word(v), invert_word(u))


def test_text_format_roundtrip():
    w = Word(S3, [(0, 1), (2, -1), (1, 1)])
    assert format_word(w) == "a1 a3^-1 a2"
    assert parse_word(S3, "a1 a3^-1 a2") == w
    assert parse_word(S3, "-") == Word(S3)
    assert parse_word(S3, "") == Word(S3)
    assert format_word(Word(S3)) == "-"
    with pytest.raises(ValueError):
        parse_word(S2, "a7")

from fractions import Fraction
from itertools import product

import pytest

from oracles import all_signed_words, comb_event_sort
from rtcomb.words import Word, apply_hom, erasing_projection_hom, parse_word, sign_flip_hom
from rtcomb.zn import (
    comb,
    comb_letters,
    deviation,
    endpoint,
    is_member_direct,
    is_member_reduction,
    sigma_cached,
)

S2 = sigma_cached(2)
S3 = sigma_cached(3)


def test_comb_fig1():
    assert comb((4, 3)) == parse_word(S2, "a1 a2 a1 a2 a1 a2 a1")


def test_comb_zero_vector():
    assert comb((0, 0, 0)) == Word(sigma_cached(3))


def test_comb_negative_coordinates():
    # Sign-flip image of the (4, 3) path.
    assert comb((-4, 3)) == parse_word(S2, "a1^-1 a2 a1^-1 a2 a1^-1 a2 a1^-1")


def test_comb_matches_event_sort_oracle_2d():
    for p1 in range(-7, 8):
        for p2 in range(-7, 8):
            assert list(comb_letters((p1, p2))) == comb_event_sort((p1, p2)), (p1, p2)


def test_comb_matches_event_sort_oracle_3d():
    for p in product(range(-3, 4), repeat=3):
        assert list(comb_letters(p)) == comb_event_sort(p), p


def test_comb_matches_event_sort_oracle_4d_spot():
    for p in [(2, 5, 3, 1), (-4, 0, 7, -2), (6, 6, 6, 6), (1, -1, 1, -1)]:
        assert list(comb_letters(p)) == comb_event_sort(p), p


def test_comb_2_5_frozen():
    # Value frozen from the event-sort oracle.
    assert comb((2, 5)) == parse_word(S2, "a2 a2 a1 a2 a2 a2 a1")
    assert list(comb_letters((2, 5))) == comb_event_sort((2, 5))


def test_endpoint_examples():
    assert endpoint(Word(S2)) == (0, 0)
    assert endpoint(parse_word(S2, "a1 a2 a1 a2 a1 a2 a1")) == (4, 3)


def test_endpoint_inverts_comb():
    for p in product(range(-5, 6), repeat=2):
        assert endpoint(comb(p)) == p


def test_geodesic_property():
    for p in product(range(-6, 7), repeat=2):
        assert len(comb(p)) == abs(p[0]) + abs(p[1])
    for p in product(range(-3, 4), repeat=3):
        assert len(comb(p)) == sum(abs(c) for c in p)


def test_is_member_direct_examples():
    assert is_member_direct(parse_word(S2, "a1 a2 a1 a2 a1 a2 a1"))
    # comb((1,1)) emits a2 before a1 at the single tie.
    assert is_member_direct(parse_word(S2, "a2 a1"))
    assert not is_member_direct(parse_word(S2, "a1 a2"))
    assert is_member_direct(Word(S2))


def test_comb_injective_on_range():
    seen = {}
    for p in product(range(-5, 6), repeat=2):
        w = comb(p)
        assert w.letters not in seen, (p, seen.get(w.letters))
        seen[w.letters] = p


def test_sign_equivariance():
    # apply_hom(f_S, comb(p)) == comb(f_S(p)) for every sign set S.
    for p in product(range(-4, 5), repeat=2):
        for flip in ({0}, {1}, {0, 1}):
            f = sign_flip_hom(S2, flip)
            q = tuple(-c if i in flip else c for i, c in enumerate(p))
            assert apply_hom(f, comb(p)) == comb(q)
    for p in [(2, 3, 5), (1, 0, 4), (3, 3, 3)]:
        for flip in ({0}, {2}, {0, 1, 2}):
            f = sign_flip_hom(S3, flip)
            q = tuple(-c if i in flip else c for i, c in enumerate(p))
            assert apply_hom(f, comb(p)) == comb(q)


def _projection(n, i, j):
    return erasing_projection_hom(sigma_cached(n), S2, {i: 0, j: 1})


def test_projection_identity_positive_orthant():
    for p in product(range(0, 5), repeat=3):
        w = comb(p)
        for i in range(3):
            for j in range(i + 1, 3):
                assert apply_hom(_projection(3, i, j), w) == comb((p[i], p[j])), (p, i, j)


def test_projections_of_3_2_6():
    w = comb((3, 2, 6))
    assert is_member_reduction(w)
    assert apply_hom(_projection(3, 0, 1), w) == comb((3, 2))
    assert apply_hom(_projection(3, 0, 2), w) == comb((3, 6))
    assert apply_hom(_projection(3, 1, 2), w) == comb((2, 6))


def test_separation_by_projections():
    # Positive words of equal endpoint and equal pairwise projections agree.
    buckets = {}
    for length in range(0, 7):
        for letters in product(range(3), repeat=length):
            w = Word(S3, ((i, 1) for i in letters))
            key = (
                endpoint(w),
                tuple(
                    apply_hom(_projection(3, i, j), w).letters
                    for i in range(3)
                    for j in range(i + 1, 3)
                ),
            )
            prev = buckets.setdefault(key, w)
            assert prev == w, (prev, w)


def test_mixed_signs_rejected():
    w = parse_word(S3, "a1 a1^-1 a2")
    assert not is_member_reduction(w)
    assert not is_member_direct(w)


def test_reduction_accepts_combs():
    for p in product(range(-4, 5), repeat=3):
        assert is_member_reduction(comb(p)), p


def test_reduction_equals_direct_small_exhaustive():
    for letters in all_signed_words(3, 4, min_len=0):
        w = Word(S3, letters)
        assert is_member_reduction(w) == is_member_direct(w), letters


def test_reduction_machine_engine_agrees():
    for letters in all_signed_words(3, 3, min_len=0):
        w = Word(S3, letters)
        assert is_member_reduction(w, engine="machine") == is_member_direct(w), letters


def test_deviation_axis():
    for n in (1, 2, 7):
        assert deviation((n, 0)) == 0
        assert deviation((0, 0, n)) == 0


def test_deviation_diagonal():
    # Frozen from the exact evaluation: after the first step of comb((1,1))
    # the path sits at (0,1) while the segment midpoint is (1/2, 1/2).
    assert deviation((1, 1)) == Fraction(1, 2)


def test_deviation_zero_vector_rejected():
    with pytest.raises(ValueError):
        deviation((0, 0))


def test_deviation_sweep_behaviour():
    # The rational maximum over |p_i| <= N is N/(N+1), realized by the
    # thin segments (1, N): it creeps toward 1 as the range grows but
    # never reaches it, so the integer fellow-traveller constant for
    # rank 2 is exactly 1 at every range.
    def sweep_max(bound):
        return max(
            deviation((p1, p2))
            for p1 in range(-bound, bound + 1)
            for p2 in range(-bound, bound + 1)
            if (p1, p2) != (0, 0)
        )

    for bound in (6, 12, 24):
        m = sweep_max(bound)
        assert m == Fraction(bound, bound + 1)
        assert m < 1

"""The canonical combing of Z^n by exact straight-line digitization.

For a lattice point p, the segment from 0 to p is parameterised as
x_i = p_i * t for t in [0, 1].  Each time a coordinate crosses an
integer value, the corresponding letter is emitted (a_i for positive
direction, its inverse for negative); simultaneous crossings are
emitted in order of decreasing coordinate index.

All crossing-time comparisons are exact integer comparisons over a
common denominator; no floating point is used anywhere.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence

from .words import Alphabet, Letter, Word, sigma

_SIGMA_CACHE: dict[int, Alphabet] = {}


def sigma_cached(n: int) -> Alphabet:
    alpha = _SIGMA_CACHE.get(n)
    if alpha is None:
        alpha = _SIGMA_CACHE[n] = sigma(n)
    return alpha


def _lcm(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def comb_letters(p: Sequence[int]) -> Iterator[Letter]:
    """Yield the digitization letters of the segment 0 -> p in order.

    Implemented as an n-way merge of the per-coordinate crossing-event
    streams, keyed by crossing time scaled to a common denominator with
    decreasing-index tie-break.
    """
    nonzero = [(i, pi) for i, pi in enumerate(p) if pi != 0]
    if not nonzero:
        return
    common = _lcm(abs(pi) for _, pi in nonzero)

    def stream(i: int, pi: int) -> Iterator[tuple[int, int, Letter]]:
        count = abs(pi)
        step = common // count
        sign = 1 if pi > 0 else -1
        letter = (i, sign)
        for m in range(1, count + 1):
            yield (m * step, -i, letter)

    for _, _, letter in heapq.merge(*(stream(i, pi) for i, pi in nonzero)):
        yield letter


def comb(p: Sequence[int], alphabet: Alphabet | None = None) -> Word:
    """The combing word for lattice point p (the zero vector gives the
    empty word)."""
    if alphabet is None:
        alphabet = sigma_cached(len(p))
    elif len(alphabet) != len(p):
        raise ValueError("alphabet rank does not match point dimension")
    return Word(alphabet, comb_letters(p))


def endpoint(w: Word) -> tuple[int, ...]:
    """The lattice point reached by a word: signed letter counts."""
    coords = [0] * len(w.alphabet)
    for i, s in w.letters:
        coords[i] += s
    return tuple(coords)


def is_member_direct(w: Word) -> bool:
    """Membership in the combing language by regeneration: true iff w
    equals the combing word of its own endpoint, letter for letter."""
    p = endpoint(w)
    total = sum(abs(c) for c in p)
    if total != len(w):
        return False
    for got, expected in zip(w.letters, comb_letters(p)):
        if got != expected:
            return False
    return True


def _consistent_sign_vector(w: Word) -> list[int] | None:
    """Per-coordinate sign usage: +1/-1 if used with one sign, 0 if
    unused; None if some coordinate is used with both signs."""
    signs = [0] * len(w.alphabet)
    for i, s in w.letters:
        if signs[i] == 0:
            signs[i] = s
        elif signs[i] != s:
            return None
    return signs


def is_member_reduction(w: Word, engine: str = "parse") -> bool:
    """Membership via the sign-flip and pairwise-projection reductions.

    The word must use a single sign per coordinate (so a sign flip sends
    it into the positive orthant), and every pairwise erasing projection
    of the flipped word must belong to the positive two-letter combing
    language (checked by the rank-2 recogniser selected by ``engine``).
    """
    n = len(w.alphabet)
    if n < 2:
        raise ValueError("reduction route requires rank >= 2")
    signs = _consistent_sign_vector(w)
    if signs is None:
        return False
    # The sign flip on negative coordinates absolutizes every letter.
    absolute = [i for i, _ in w.letters]
    if engine == "parse":
        from .lsharp import member_l2plus01
        check = member_l2plus01
    elif engine == "machine":
        from .machine import member_l2plus01_machine
        check = member_l2plus01_machine
    else:
        raise ValueError(f"unknown engine {engine!r}")
    for i in range(n):
        for j in range(i + 1, n):
            projected = [0 if c == i else 1 for c in absolute if c == i or c == j]
            if not check(projected):
                return False
    return True


def deviation(p: Sequence[int]) -> Fraction:
    """Maximum sup-norm distance between the combing path and the
    straight segment, measured at integer step times (exact rational)."""
    total = sum(abs(c) for c in p)
    if total == 0:
        raise ValueError("deviation undefined for the zero vector")
    # Distance at step t has denominator total: |total*v_t[i] - t*p_i| / total.
    current = [0] * len(p)
    worst = 0
    t = 0
    for i, s in comb_letters(p):
        current[i] += s
        t += 1
        for j, pj in enumerate(p):
            num = abs(total * current[j] - t * pj)
            if num > worst:
                worst = num
    return Fraction(worst, total)

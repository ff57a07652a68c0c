"""The recursive parameterization of the positive rank-2 combing words.

Over the two-letter alphabet (a = a1, b = a2), every positive combing
word that is not a pure b-power is w_k^n for a unique parameter tuple,
where

    w_j = w_{j-1}^{i_j} w_{j-2}        (2 <= j <= k, i_j >= 1)

with basis (w_0, w_1) = (a, a^{i_1} b) when k is even and
(w_0, w_1) = (b, b^{i_1} a) when k is odd.  The exponents i_j are the
continued-fraction digits of the endpoint ratio, and the repetition
count n is the gcd of the endpoint coordinates; that fixes a canonical
parameter tuple for each word.

This module generates words from parameters, parses words back to
canonical parameters by recursive descent (independently of the
real-time machine), and exposes the word sequence w_0..w_k so the
structural identities behind the parser can be tested directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .words import Word, sigma

A = 0  # letter a = a1
B = 1  # letter b = a2

SIGMA2 = sigma(2)


@dataclass(frozen=True)
class LsharpParams:
    """Canonical parameters (k, i_1..i_k, n) plus the leading letter."""

    k: int
    exponents: tuple[int, ...]
    n: int
    leading: str  # "a" or "b"

    def __post_init__(self):
        if self.k < 0 or self.n < 1:
            raise ValueError("require k >= 0 and n >= 1")
        if len(self.exponents) != self.k:
            raise ValueError("need exactly k exponents")
        if any(e < 1 for e in self.exponents):
            raise ValueError("exponents must be >= 1")
        if self.leading not in ("a", "b"):
            raise ValueError("leading must be 'a' or 'b'")
        # Parity pairing: even k starts with a, odd k starts with b.
        expected = "a" if self.k % 2 == 0 else "b"
        if self.leading != expected:
            raise ValueError("leading letter inconsistent with parity of k")


@dataclass(frozen=True)
class Reject:
    """Parse rejection carrying the failing input position."""

    position: int


def _basis(k: int, i1: int | None) -> tuple[list[int], list[int] | None]:
    """(w_0, w_1) for the parity of k; w_1 is None when k == 0."""
    if k % 2 == 0:
        w0 = [A]
        w1 = [A] * i1 + [B] if i1 is not None else None
    else:
        w0 = [B]
        w1 = [B] * i1 + [A] if i1 is not None else None
    return w0, w1


def w_sequence(params: LsharpParams) -> list[Word]:
    """The words w_0, w_1, ..., w_k for the given parameters."""
    return [Word(SIGMA2, ((c, 1) for c in w)) for w in _w_sequence01(params)]


def _w_sequence01(params: LsharpParams) -> list[list[int]]:
    k, exps = params.k, params.exponents
    w0, w1 = _basis(k, exps[0] if k >= 1 else None)
    seq = [w0]
    if k >= 1:
        seq.append(w1)
    for j in range(2, k + 1):
        seq.append(seq[j - 1] * exps[j - 1] + seq[j - 2])
    return seq


def generate(params: LsharpParams) -> Word:
    """The word w_k^n built bottom-up from the recursion."""
    seq = _w_sequence01(params)
    return Word(SIGMA2, ((c, 1) for c in seq[-1] * params.n))


def _continued_fraction(num: int, den: int) -> list[int]:
    digits = []
    while den:
        q, r = divmod(num, den)
        digits.append(q)
        num, den = den, r
    return digits


def params_from_point(p: int, q: int) -> LsharpParams:
    """Canonical parameters for the combing word of (p, q), p >= 1.

    n is gcd(p, q) and the exponents are the continued-fraction digits
    of the reduced ratio, expanded to the length parity forced by the
    leading letter (p > q starts with a, p <= q starts with b).
    """
    if p < 1 or q < 0:
        raise ValueError("require p >= 1 and q >= 0 (pure b-powers are excluded)")
    if q == 0:
        return LsharpParams(k=0, exponents=(), n=p, leading="a")
    n = gcd(p, q)
    pr, qr = p // n, q // n
    if pr > qr:
        digits = _continued_fraction(pr, qr)
        want_odd = False
    else:
        digits = _continued_fraction(qr, pr)
        want_odd = True
    if (len(digits) % 2 == 1) != want_odd:
        # Every ratio has expansions of both parities: [..., c] = [..., c-1, 1].
        digits[-1] -= 1
        digits.append(1)
    leading = "b" if want_odd else "a"
    return LsharpParams(k=len(digits), exponents=tuple(digits), n=n, leading=leading)


def parse01(s: Sequence[int]) -> LsharpParams | Reject:
    """Recursive-descent parse of a 0/1 letter sequence (0=a, 1=b).

    Follows the prefix trichotomy: after the prefix w_j w_{j-1} the
    input continues with copies of w_j-with-last-two-swapped, ending
    either at a copy boundary, or one w_{j-1}-length short of one, or
    via a full w_j copy that opens the next recursion level.  Words
    whose recursion parity is wrong are exactly those ending in b.
    """
    s = list(s)
    L = len(s)
    if L == 0:
        return Reject(0)
    alpha = s[0]
    beta = 1 - alpha
    pos = 0
    while pos < L and s[pos] == alpha:
        pos += 1
    i1 = pos
    if pos == L:  # pure power of the leading letter
        if alpha == A:
            return LsharpParams(k=0, exponents=(), n=L, leading="a")
        return Reject(L)  # pure b-powers are excluded
    # First non-alpha letter closes w_1 = alpha^{i1} beta.
    pos += 1
    leading = "a" if alpha == A else "b"
    if pos == L:
        if s[-1] != A:
            return Reject(L - 1)
        return LsharpParams(k=1, exponents=(i1,), n=1, leading=leading)
    if s[pos] != alpha:  # w_1 must be followed by w_0 = alpha
        return Reject(pos)
    pos += 1
    prev = [alpha]
    cur = [alpha] * i1 + [beta]
    exps = [i1]
    while True:
        c = len(cur)
        swapped = cur[:-2] + [cur[-1], cur[-2]]
        copies = 0
        while True:
            if pos == L:
                # Ended at a copy boundary: total input is w_{j+1}.
                exps.append(copies + 1)
                if s[-1] != A:
                    return Reject(L - 1)
                return LsharpParams(
                    k=len(exps), exponents=tuple(exps), n=1, leading=leading
                )
            segment = s[pos : pos + c]
            if len(segment) == c:
                if segment == swapped:
                    copies += 1
                    pos += c
                    continue
                if segment == cur:
                    # Full w_j copy: open the next level.
                    exps.append(copies + 1)
                    prev, cur = cur, cur * (copies + 1) + prev
                    pos += c
                    break
            else:
                # Truncated final copy: valid only at the case-3 stop.
                part = len(segment)
                if part == c - len(prev) and segment == swapped[:part]:
                    if s[-1] != A:
                        return Reject(L - 1)
                    return LsharpParams(
                        k=len(exps), exponents=tuple(exps),
                        n=copies + 2, leading=leading,
                    )
            for d, (got, want) in enumerate(zip(segment, swapped)):
                if got != want:
                    return Reject(pos + d)
            return Reject(L)


def parse(w: Word) -> LsharpParams | Reject:
    """Parse a word over the rank-2 alphabet; inverse letters reject."""
    if w.alphabet != SIGMA2:
        raise ValueError("parse expects a word over the rank-2 alphabet")
    seq = []
    for idx, (i, sgn) in enumerate(w.letters):
        if sgn != 1:
            return Reject(idx)
        seq.append(i)
    return parse01(seq)


def member_l2plus01(s: Sequence[int]) -> bool:
    """Membership in the positive rank-2 combing language: the excluded
    b-powers rejoin via the regular branch."""
    if all(c == B for c in s):
        return True
    return isinstance(parse01(list(s)), LsharpParams)

"""Alphabets, formal words, and monoid homomorphisms.

Words are formal strings over an inverse-closed alphabet: sequences of
signed generator letters.  No free reduction is ever performed; the
languages built on top of this module are sets of strings, and reducing
would corrupt membership tests.

A letter is a pair ``(symbol_index, sign)`` with ``sign`` +1 or -1, so
sign-flip homomorphisms are index-local.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Letter = tuple[int, int]


class Alphabet:
    """An ordered, inverse-closed alphabet.

    Only the base symbol names are stored; the formal inverse of symbol
    ``i`` is the letter ``(i, -1)`` and prints as ``<name>^-1``.
    """

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[str]):
        self.symbols = tuple(symbols)
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbol names must be distinct")
        if not self.symbols:
            raise ValueError("alphabet must have at least one symbol")
        for name in self.symbols:
            if not name or any(ch.isspace() for ch in name) or "^" in name:
                raise ValueError(f"bad symbol name: {name!r}")
        self._index = {name: i for i, name in enumerate(self.symbols)}

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.symbols)!r})"

    def index(self, name: str) -> int:
        return self._index[name]

    def letter(self, name: str, sign: int = 1) -> Letter:
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return (self._index[name], sign)

    def letter_name(self, letter: Letter) -> str:
        i, s = letter
        name = self.symbols[i]
        return name if s == 1 else name + "^-1"


def sigma(n: int) -> Alphabet:
    """The standard rank-n alphabet a1, ..., an (with formal inverses)."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    return Alphabet(f"a{i}" for i in range(1, n + 1))


class Word:
    """A formal word: an immutable sequence of signed letters."""

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet: Alphabet, letters: Iterable[Letter] = ()):
        self.alphabet = alphabet
        letters = tuple(letters)
        n = len(alphabet)
        for i, s in letters:
            if not (0 <= i < n) or s not in (1, -1):
                raise ValueError(f"letter {(i, s)!r} not in alphabet")
        self.letters = letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, idx):
        return self.letters[idx]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.alphabet == other.alphabet
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.letters))

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)


def concat(u: Word, v: Word) -> Word:
    """Concatenate two words over the same alphabet (no reduction)."""
    if u.alphabet != v.alphabet:
        raise ValueError("alphabet mismatch in concat")
    return Word(u.alphabet, u.letters + v.letters)


def invert_word(w: Word) -> Word:
    """The formal inverse: reversed sequence with all signs flipped."""
    return Word(w.alphabet, tuple((i, -s) for i, s in reversed(w.letters)))


def phi(w: Word) -> Word:
    """Swap the last two letters of a word of length >= 2."""
    if len(w) < 2:
        raise ValueError("phi requires a word of length >= 2")
    ls = w.letters
    return Word(w.alphabet, ls[:-2] + (ls[-1], ls[-2]))


@dataclass(frozen=True)
class MonoidHom:
    """A monoid homomorphism defined by images of the base symbols.

    The image of an inverse letter is the formal inverse of the image
    word, so the map respects the inverse-closed structure.
    """

    source: Alphabet
    target: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise ValueError("homomorphism must define images for every symbol")
        for img in self.images:
            if img.alphabet != self.target:
                raise ValueError("image word over wrong alphabet")


def hom(source: Alphabet, target: Alphabet, images: Iterable[Word]) -> MonoidHom:
    return MonoidHom(source, target, tuple(images))


def identity_hom(alphabet: Alphabet) -> MonoidHom:
    return MonoidHom(
        alphabet,
        alphabet,
        tuple(Word(alphabet, [(i, 1)]) for i in range(len(alphabet))),
    )


def sign_flip_hom(alphabet: Alphabet, flip: Iterable[int]) -> MonoidHom:
    """The involution interchanging symbol i with its inverse for i in flip."""
    flip = set(flip)
    images = []
    for i in range(len(alphabet)):
        s = -1 if i in flip else 1
        images.append(Word(alphabet, [(i, s)]))
    return MonoidHom(alphabet, alphabet, tuple(images))


def erasing_projection_hom(
    source: Alphabet, target: Alphabet, keep: dict[int, int]
) -> MonoidHom:
    """Send source symbol i to target symbol keep[i]; erase all others."""
    images = []
    for i in range(len(source)):
        if i in keep:
            images.append(Word(target, [(keep[i], 1)]))
        else:
            images.append(Word(target))
    return MonoidHom(source, target, tuple(images))


def apply_hom(h: MonoidHom, w: Word) -> Word:
    """Apply a homomorphism letterwise; inverse letters map to inverse images."""
    if w.alphabet != h.source:
        raise ValueError("word not over the homomorphism's source alphabet")
    out: list[Letter] = []
    for i, s in w.letters:
        img = h.images[i]
        if s == 1:
            out.extend(img.letters)
        else:
            out.extend((j, -t) for j, t in reversed(img.letters))
    return Word(h.target, out)


def format_word(w: Word) -> str:
    """Render a word in the shared text format; the empty word prints as '-'."""
    if not w.letters:
        return "-"
    return " ".join(w.alphabet.letter_name(l) for l in w.letters)


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse the shared text format: whitespace-separated tokens like
    ``a1`` or ``a1^-1``; the empty word is '' or '-'."""
    text = text.strip()
    if text in ("", "-"):
        return Word(alphabet)
    letters: list[Letter] = []
    for tok in text.split():
        if tok.endswith("^-1"):
            name, sign = tok[:-3], -1
        else:
            name, sign = tok, 1
        try:
            idx = alphabet.index(name)
        except KeyError:
            raise ValueError(f"unknown symbol {name!r} in word text") from None
        letters.append((idx, sign))
    return Word(alphabet, letters)

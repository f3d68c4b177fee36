"""Freely reduced words over a finite generating alphabet.

A letter is a nonzero int: ``+(i+1)`` is generator ``i`` and ``-(i+1)`` its
inverse. Words reduce eagerly, so every ``Word`` in circulation is freely
reduced.

Text syntax: generators are juxtaposed; for single lowercase-letter names
the uppercase letter is the inverse (``"abA"``). Any name accepts an
integer exponent (``x1^-1``, ``a^3``), and ``*`` or ``.`` may separate
factors. The identity is written ``e`` (or ``1`` when ``e`` is itself a
generator name); ``1`` and the empty string always parse as the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

from .errors import AlphabetMismatch, ParseError

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_EXP_RE = re.compile(r"\^(-?\d+)")


def reduce_letters(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Alphabet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ParseError("alphabet needs at least one generator")
        for name in names:
            if not _NAME_RE.match(name):
                raise ParseError(f"invalid generator name {name!r}")
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise ParseError(f"duplicate generator names: {' '.join(dup)}")

    def __len__(self):
        return len(self.names)

    @property
    def size(self):
        return len(self.names)

    @cached_property
    def simple(self):
        """True when every name is a single lowercase letter."""
        return all(len(n) == 1 and n.islower() for n in self.names)

    @cached_property
    def _tokens(self):
        tokens = {}
        for i, name in enumerate(self.names):
            tokens[name] = i + 1
        for i, name in enumerate(self.names):
            if len(name) == 1 and name.islower() and name.upper() not in tokens:
                tokens[name.upper()] = -(i + 1)
        return tokens

    @cached_property
    def _token_lengths(self):
        return sorted({len(t) for t in self._tokens}, reverse=True)

    @property
    def identity_text(self):
        return "1" if "e" in self.names else "e"

    def letter_name(self, x):
        name = self.names[abs(x) - 1]
        if x > 0:
            return name
        if self.simple:
            return name.upper()
        return name + "^-1"

    def parse(self, text):
        return Word(self, self.parse_letters(text))

    def parse_letters(self, text):
        text = text.strip()
        if text in ("", "1") or (text == "e" and "e" not in self._tokens):
            return ()
        letters = []
        pos = 0
        tokens = self._tokens
        while pos < len(text):
            ch = text[pos]
            if ch in "*.":
                pos += 1
                continue
            for width in self._token_lengths:
                tok = text[pos:pos + width]
                if len(tok) == width and tok in tokens:
                    break
            else:
                raise ParseError(f"unknown letter {ch!r} at position {pos} in {text!r}")
            letter = tokens[tok]
            pos += width
            m = _EXP_RE.match(text, pos)
            if m:
                k = int(m.group(1))
                pos = m.end()
                letters.extend([letter if k > 0 else -letter] * abs(k))
            else:
                letters.append(letter)
        return reduce_letters(letters)

    def format(self, letters):
        if not letters:
            return self.identity_text
        if self.simple:
            return "".join(self.letter_name(x) for x in letters)
        parts = []
        i = 0
        while i < len(letters):
            j = i
            while j < len(letters) and letters[j] == letters[i]:
                j += 1
            name = self.names[abs(letters[i]) - 1]
            k = (j - i) * (1 if letters[i] > 0 else -1)
            parts.append(name if k == 1 else f"{name}^{k}")
            i = j
        return "*".join(parts)

    def word(self, *letters):
        return Word(self, letters)

    def generators(self):
        return [Word(self, (i + 1,)) for i in range(len(self.names))]

    def identity(self):
        return Word(self, ())


def letter_key(x):
    # shortlex letter order: a < A < b < B < ...
    return 2 * (abs(x) - 1) + (x < 0)


@dataclass(frozen=True, eq=True)
class Word:
    alphabet: Alphabet = field(compare=True, repr=False)
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        n = len(self.alphabet)
        for x in self.letters:
            if not isinstance(x, int) or x == 0 or abs(x) > n:
                raise ValueError(f"letter {x!r} out of range for {n} generators")
        object.__setattr__(self, "letters", reduce_letters(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return self.alphabet.format(self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __mul__(self, other):
        return concat(self, other)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.alphabet, self.letters * k)

    def __invert__(self):
        return self.inverse()

    @property
    def is_identity(self):
        return not self.letters

    @property
    def pairs(self):
        """Letters as ``(generator index, sign)`` pairs."""
        return tuple((abs(x) - 1, 1 if x > 0 else -1) for x in self.letters)

    def inverse(self):
        return Word(self.alphabet, tuple(-x for x in reversed(self.letters)))

    def shortlex_key(self):
        return (len(self.letters), tuple(letter_key(x) for x in self.letters))


def parse_word(text, alphabet):
    return alphabet.parse(text)


def invert(w):
    return w.inverse()


def concat(u, v):
    if u.alphabet != v.alphabet:
        raise AlphabetMismatch(f"{u.alphabet.names} vs {v.alphabet.names}")
    return Word(u.alphabet, u.letters + v.letters)


def product(words, alphabet):
    letters = []
    for w in words:
        if w.alphabet != alphabet:
            raise AlphabetMismatch(f"{w.alphabet.names} vs {alphabet.names}")
        letters.extend(w.letters)
    return Word(alphabet, letters)


def is_freely_reduced(letters):
    return all(a != -b for a, b in zip(letters, letters[1:]))


def shortlex_sorted(words):
    return sorted(words, key=Word.shortlex_key)

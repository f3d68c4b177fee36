"""Generating tuples, Nielsen moves and replayable move logs.

Move indices are 1-based, matching the text format::

    Lmul 1 2 +     s1 <- s2 s1
    Rmul 3 1 -     s3 <- s3 s1^-1
    Inv 2          s2 <- s2^-1
    Swap 1 3
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ParseError, PreconditionError
from .words import Alphabet, Word, concat


@dataclass(frozen=True)
class GeneratingTuple:
    entries: tuple[Word, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("a generating tuple needs at least one entry")
        alphabet = entries[0].alphabet
        if any(w.alphabet != alphabet for w in entries):
            raise ValueError("tuple entries over different alphabets")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text, alphabet: Alphabet):
        """Parse ``"w1,w2,..."``."""
        parts = [p.strip() for p in text.split(",")]
        return cls(tuple(alphabet.parse(p) for p in parts))

    @property
    def alphabet(self):
        return self.entries[0].alphabet

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def entry(self, i):
        """1-based access, as in move indices."""
        return self.entries[i - 1]

    def __str__(self):
        return "(" + ", ".join(str(w) for w in self.entries) + ")"

    def replace(self, i, w):
        entries = list(self.entries)
        entries[i - 1] = w
        return GeneratingTuple(tuple(entries))


@dataclass(frozen=True)
class LeftMultiply:
    target: int
    by: int
    sign: int = 1

    def inverse(self):
        return LeftMultiply(self.target, self.by, -self.sign)

    def __str__(self):
        return f"Lmul {self.target} {self.by} {'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class RightMultiply:
    target: int
    by: int
    sign: int = 1

    def inverse(self):
        return RightMultiply(self.target, self.by, -self.sign)

    def __str__(self):
        return f"Rmul {self.target} {self.by} {'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Invert:
    target: int

    def inverse(self):
        return self

    def __str__(self):
        return f"Inv {self.target}"


@dataclass(frozen=True)
class Swap:
    i: int
    j: int

    def inverse(self):
        return self

    def __str__(self):
        return f"Swap {self.i} {self.j}"


NielsenMove = Union[LeftMultiply, RightMultiply, Invert, Swap]
MoveLog = tuple  # of NielsenMove


def _check_index(i, n):
    if not isinstance(i, int) or not 1 <= i <= n:
        raise PreconditionError(f"move index {i} out of range 1..{n}")


def apply_move(s: GeneratingTuple, m: NielsenMove) -> GeneratingTuple:
    n = len(s)
    if isinstance(m, (LeftMultiply, RightMultiply)):
        _check_index(m.target, n)
        _check_index(m.by, n)
        if m.target == m.by:
            raise PreconditionError(f"{m}: target and multiplier must differ")
        if m.sign not in (1, -1):
            raise PreconditionError(f"{m}: sign must be +1 or -1")
        other = s.entry(m.by)
        if m.sign < 0:
            other = other.inverse()
        cur = s.entry(m.target)
        new = concat(other, cur) if isinstance(m, LeftMultiply) else concat(cur, other)
        return s.replace(m.target, new)
    if isinstance(m, Invert):
        _check_index(m.target, n)
        return s.replace(m.target, s.entry(m.target).inverse())
    if isinstance(m, Swap):
        _check_index(m.i, n)
        _check_index(m.j, n)
        if m.i == m.j:
            raise PreconditionError(f"{m}: indices must differ")
        entries = list(s.entries)
        entries[m.i - 1], entries[m.j - 1] = entries[m.j - 1], entries[m.i - 1]
        return GeneratingTuple(tuple(entries))
    raise TypeError(f"not a Nielsen move: {m!r}")


def replay(s0: GeneratingTuple, log) -> GeneratingTuple:
    s = s0
    for m in log:
        s = apply_move(s, m)
    return s


def inverse_log(log):
    return tuple(m.inverse() for m in reversed(log))


def format_log(log):
    return "".join(str(m) + "\n" for m in log)


def parse_move(line):
    parts = line.split()
    try:
        op = parts[0]
        if op in ("Lmul", "Rmul") and len(parts) == 4 and parts[3] in ("+", "-"):
            cls = LeftMultiply if op == "Lmul" else RightMultiply
            return cls(int(parts[1]), int(parts[2]), 1 if parts[3] == "+" else -1)
        if op == "Inv" and len(parts) == 2:
            return Invert(int(parts[1]))
        if op == "Swap" and len(parts) == 3:
            return Swap(int(parts[1]), int(parts[2]))
    except (IndexError, ValueError):
        pass
    raise ParseError(f"bad move line {line!r}")


def parse_log(text):
    return tuple(parse_move(line) for line in text.splitlines() if line.strip())

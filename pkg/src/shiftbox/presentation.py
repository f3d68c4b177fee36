"""Finite presentations and subgroup specifications.

File format (one key per line, ``#`` starts a comment)::

    generators: a b
    relators: aa bb ababab
    subgroup: a

``relators`` and ``subgroup`` are optional; a missing or empty subgroup
line means the trivial subgroup.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .errors import AlphabetMismatch, ParseError
from .words import Alphabet, Word

log = logging.getLogger(__name__)

_KEYS = ("generators", "relators", "subgroup")


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        rels = []
        for r in self.relators:
            if r.alphabet != self.alphabet:
                raise AlphabetMismatch("relator over a different alphabet")
            if r.is_identity:
                log.warning("dropping empty relator")
                continue
            rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def from_strings(cls, names, relators=()):
        alphabet = Alphabet(tuple(names.split()) if isinstance(names, str) else tuple(names))
        return cls(alphabet, tuple(alphabet.parse(r) for r in relators))

    def word(self, text):
        return self.alphabet.parse(text)

    def subgroup(self, *texts):
        return SubgroupSpec(tuple(self.alphabet.parse(t) for t in texts))


@dataclass(frozen=True)
class SubgroupSpec:
    generators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _split_lines(text):
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in _KEYS:
            raise ParseError(f"line {lineno}: expected one of {', '.join(_KEYS)}, got {raw!r}")
        if key in fields:
            raise ParseError(f"line {lineno}: duplicate {key!r} line")
        fields[key] = rest.split()
    return fields


def parse_subgroup(tokens, alphabet):
    return SubgroupSpec(tuple(alphabet.parse(t) for t in tokens))


def parse_presentation(text):
    """Parse presentation file text into ``(Presentation, SubgroupSpec)``."""
    fields = _split_lines(text)
    if "generators" not in fields:
        raise ParseError("missing 'generators:' line")
    alphabet = Alphabet(tuple(fields["generators"]))
    relators = tuple(alphabet.parse(t) for t in fields.get("relators", ()))
    pres = Presentation(alphabet, relators)
    return pres, parse_subgroup(fields.get("subgroup", ()), alphabet)


def parse_subgroup_file(text, alphabet):
    """Read the subgroup line of ``text`` against an existing alphabet.

    ``text`` may be a full presentation file (its generators must match) or
    just a ``subgroup:`` line.
    """
    fields = _split_lines(text)
    if "generators" in fields and tuple(fields["generators"]) != alphabet.names:
        raise AlphabetMismatch("second presentation uses different generators")
    return parse_subgroup(fields.get("subgroup", ()), alphabet)


def format_presentation(pres, sub=None):
    lines = [
        "generators: " + " ".join(pres.alphabet.names),
        "relators: " + " ".join(str(r) for r in pres.relators),
        "subgroup: " + " ".join(str(w) for w in (sub.generators if sub else ())),
    ]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def load_presentation(path):
    return parse_presentation(Path(path).read_text())

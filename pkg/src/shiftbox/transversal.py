from __future__ import annotations

import enum
from dataclasses import dataclass

from .words import shortlex_sorted


class Kind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    LEFT_RIGHT = "left-right"


@dataclass(frozen=True)
class Transversal:
    """A set of coset representatives, stored in shortlex order."""

    words: tuple
    kind: Kind

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(shortlex_sorted(set(self.words))))

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return w in self.words


def left_ids(table, words):
    return [table.left_coset_id(w) for w in words]


def right_ids(table, words):
    return [table.right_coset_id(w) for w in words]


def _bijective(ids, k):
    return len(ids) == k and set(ids) == set(range(1, k + 1))


def is_left_transversal(table, words):
    return _bijective(left_ids(table, words), table.num_cosets)


def is_right_transversal(table, words):
    return _bijective(right_ids(table, words), table.num_cosets)


def satisfies_kind(table, T):
    if T.kind is Kind.LEFT:
        return is_left_transversal(table, T.words)
    if T.kind is Kind.RIGHT:
        return is_right_transversal(table, T.words)
    return is_left_transversal(table, T.words) and is_right_transversal(table, T.words)

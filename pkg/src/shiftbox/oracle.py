"""Brute-force ground truth for small finite groups.

The group is materialized from the regular coset table (trivial subgroup):
element ids are ``coset - 1``, so id 0 is the identity, and element ``i``
is represented by the shortlex Schreier word of coset ``i + 1``.
Everything here works on explicit element sets and is meant for
cross-checking the word-level algorithms, not for production use.
"""

from __future__ import annotations

import logging
import math
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

import numpy as np

from .coset_enum import EnumLimits, todd_coxeter
from .errors import SearchTooLarge
from .presentation import SubgroupSpec

log = logging.getLogger(__name__)

MAX_ORDER = 5040
MAX_TUPLES = 2_000_000


@dataclass(frozen=True)
class OracleLimits:
    max_order: int = MAX_ORDER
    max_tuples: int = MAX_TUPLES
    samples: int = 20_000


@dataclass
class FiniteGroup:
    order: int
    mul: np.ndarray
    inv: np.ndarray
    words: tuple
    table: object = field(repr=False)

    @property
    def alphabet(self):
        return self.table.alphabet

    def id_of_word(self, w):
        return self.table.right_coset_id(w) - 1

    def word_of(self, i):
        return self.words[i]

    def elements(self):
        return range(self.order)


def materialize(p, limits=EnumLimits()):
    """Regular representation of the group presented by ``p``."""
    t = todd_coxeter(p, SubgroupSpec(()), limits)
    k = t.num_cosets
    words = tuple(t.schreier_reps())
    perms = {x: np.asarray(t.permutation(x)[1:], dtype=np.int64) - 1 for x in t.letters()}
    mul = np.empty((k, k), dtype=np.int64)
    # column j holds i*j for all i; extend the column of j's BFS parent by one letter
    mul[:, 0] = np.arange(k)
    for j in sorted(range(1, k), key=lambda j: len(words[j])):
        letters = words[j].letters
        parent = t.trace_letters(1, letters[:-1]) - 1
        mul[:, j] = perms[letters[-1]][mul[:, parent]]
    inv = np.argmax(mul == 0, axis=1)
    return FiniteGroup(k, mul, inv, words, t)


def check_axioms(g):
    """Identity, inverses, and associativity (exhaustive up to order 64)."""
    k = g.order
    ids = np.arange(k)
    assert (g.mul[0] == ids).all() and (g.mul[:, 0] == ids).all()
    assert (g.mul[ids, g.inv] == 0).all()
    for row in g.mul:
        assert sorted(row) == list(ids)
    if k <= 64:
        m = g.mul
        lhs = m[m[:, :, None], np.arange(k)[None, None, :]]  # (ab)c
        rhs = m[np.arange(k)[:, None, None], m[None, :, :]]  # a(bc)
        assert (lhs == rhs).all()
    return True


def closure(g, gens):
    """Subgroup generated by element ids ``gens`` (right multiplication BFS)."""
    gens = [x for x in set(gens) if x != 0]
    seen = {0}
    queue = deque([0])
    mul = g.mul
    while queue:
        a = queue.popleft()
        for x in gens:
            b = int(mul[a, x])
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return frozenset(seen)


def generates(g, words):
    return len(closure(g, [g.id_of_word(w) for w in words])) == g.order


def generates_ids(g, ids):
    return len(closure(g, ids)) == g.order


def rank(g):
    """Minimal number of generators d(G)."""
    if g.order == 1:
        return 0
    for d in range(1, g.order):
        if any(generates_ids(g, c) for c in combinations(range(1, g.order), d)):
            return d
    raise AssertionError("unreachable")


def minimal_generating_tuple(g):
    """First d(G)-subset of non-identity ids (ascending) that generates."""
    d = rank(g)
    return next(c for c in combinations(range(1, g.order), d) if generates_ids(g, c))


def primitive_elements(g, n, seed=None, limits=OracleLimits()):
    """Ids lying in some generating n-tuple.

    Exhaustive when the number of n-multisets is within ``limits.max_tuples``;
    beyond that a seeded random sample is taken (a subset of the true answer),
    and without a seed ``SearchTooLarge`` is raised.
    """
    if g.order > limits.max_order:
        raise SearchTooLarge(f"order {g.order} > {limits.max_order}")
    k = g.order
    total = math.comb(k + n - 1, n)
    found = set()
    if total <= limits.max_tuples:
        for combo in combinations_with_replacement(range(k), n):
            if not found.issuperset(combo) and generates_ids(g, combo):
                found.update(combo)
        return frozenset(found)
    if seed is None:
        raise SearchTooLarge(f"{total} tuples to search; pass a seed to sample")
    rng = random.Random(seed)
    for _ in range(limits.samples):
        combo = [rng.randrange(k) for _ in range(n)]
        if generates_ids(g, combo):
            found.update(combo)
    log.info("sampled %d of %d tuples", limits.samples, total)
    return frozenset(found)


@dataclass(frozen=True)
class Subgroup:
    elements: frozenset
    generators: tuple

    @property
    def order(self):
        return len(self.elements)

    def spec(self):
        return SubgroupSpec(self.generators)


def _generator_words(g, elems):
    """Greedy: walk elements in shortlex order of their words, keep those not yet reached."""
    chosen = []
    reached = frozenset([0])
    for x in sorted(elems, key=lambda i: g.words[i].shortlex_key()):
        if x not in reached:
            chosen.append(x)
            reached = closure(g, chosen)
        if len(reached) == len(elems):
            break
    return tuple(g.words[x] for x in chosen)


def all_subgroups(g, limits=OracleLimits()):
    """Every subgroup, by repeatedly joining cyclic subgroups. Sorted by (order, elements)."""
    if g.order > limits.max_order:
        raise SearchTooLarge(f"order {g.order} > {limits.max_order}")
    cyclic = {closure(g, [x]) for x in range(g.order)}
    found = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for s in frontier:
            for c in cyclic:
                if c <= s:
                    continue
                j = closure(g, list(s | c))
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    subs = sorted(found, key=lambda s: (len(s), sorted(s)))
    return [Subgroup(s, _generator_words(g, s)) for s in subs]


def is_normal(g, elems):
    return all(int(g.mul[g.mul[g.inv[x], h], x]) in elems for x in range(g.order) for h in elems)


def quotient_elementary_abelian_2(g, elems):
    """``(True, m)`` iff H is normal and G/H is C_2^m."""
    if not is_normal(g, elems):
        return False, None
    if any(int(g.mul[x, x]) not in elems for x in range(g.order)):
        return False, None
    index = g.order // len(elems)
    return True, index.bit_length() - 1


def left_coset(g, elems, x):
    return frozenset(int(g.mul[x, h]) for h in elems)


def right_coset(g, elems, x):
    return frozenset(int(g.mul[h, x]) for h in elems)


def is_left_transversal(g, elems, words):
    ids = [g.id_of_word(w) for w in words]
    cosets = {left_coset(g, elems, x) for x in ids}
    return len(ids) == len(cosets) == g.order // len(elems)


def is_right_transversal(g, elems, words):
    ids = [g.id_of_word(w) for w in words]
    cosets = {right_coset(g, elems, x) for x in ids}
    return len(ids) == len(cosets) == g.order // len(elems)


def subgroup_elements(g, spec):
    return closure(g, [g.id_of_word(w) for w in spec.generators])

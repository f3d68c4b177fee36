"""Todd-Coxeter coset enumeration (HLT strategy) and coset-table queries.

Cosets are the right cosets ``Hg``; ids run ``1..k`` with ``1 = H``. The
table stores the right action of every generator and inverse. Left cosets
are read through inversion: ``wH`` gets the id of ``Hw^-1``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from .errors import LimitExceeded, NotATransversal
from .presentation import Presentation, SubgroupSpec
from .transversal import Kind, Transversal
from .words import Word, letter_key

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumLimits:
    max_cosets: int = 1_000_000

    def __post_init__(self):
        if self.max_cosets < 1:
            raise ValueError("max_cosets must be >= 1")


def _col(x):
    return 2 * (abs(x) - 1) + (x < 0)


class _HLT:
    """Mutable enumeration state; columns are ``_col`` indices, cosets 0-based."""

    def __init__(self, ncols, max_cosets):
        self.ncols = ncols
        self.max_cosets = max_cosets
        self.table = [[None] * ncols]
        self.parent = [0]
        self.nlive = 1
        self.queue = []

    def live(self, c):
        return self.parent[c] == c

    def find(self, c):
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(self, c, x):
        if self.nlive >= self.max_cosets:
            raise LimitExceeded(self.max_cosets)
        new = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(new)
        self.nlive += 1
        self.table[c][x] = new
        self.table[new][x ^ 1] = c

    def _merge(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if b < a:
            a, b = b, a
        self.parent[b] = a
        self.nlive -= 1
        self.queue.append(b)

    def coincidence(self, a, b):
        table = self.table
        self.queue = []
        self._merge(a, b)
        i = 0
        while i < len(self.queue):
            gamma = self.queue[i]
            i += 1
            row = table[gamma]
            for x in range(self.ncols):
                delta = row[x]
                if delta is None:
                    continue
                xi = x ^ 1
                if table[delta][xi] == gamma:
                    table[delta][xi] = None
                mu, nu = self.find(gamma), self.find(delta)
                if table[mu][x] is not None:
                    self._merge(nu, table[mu][x])
                elif table[nu][xi] is not None:
                    self._merge(mu, table[nu][xi])
                else:
                    table[mu][x] = nu
                    table[nu][xi] = mu

    def scan_and_fill(self, alpha, word):
        table = self.table
        r = len(word)
        f, i = alpha, 0
        b, j = alpha, r - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])

    def run(self, relators, subgens):
        for w in subgens:
            if w:
                self.scan_and_fill(0, w)
        while True:
            alpha = 0
            while alpha < len(self.table):
                if self.live(alpha):
                    for r in relators:
                        self.scan_and_fill(alpha, r)
                        if not self.live(alpha):
                            break
                    if self.live(alpha):
                        row = self.table[alpha]
                        for x in range(self.ncols):
                            if row[x] is None:
                                self.define(alpha, x)
                alpha += 1
            if self.complete():
                return
            log.debug("table incomplete after a pass; rescanning")

    def complete(self):
        return all(
            None not in row for c, row in enumerate(self.table) if self.live(c)
        )


class CosetTable:
    """Complete coset table for ``H`` in ``G = <X | R>``. Immutable."""

    def __init__(self, presentation, subgroup, columns):
        self.presentation = presentation
        self.subgroup = subgroup
        self.alphabet = presentation.alphabet
        # columns[_col(x)][c] = c.x, with c 1-based and index 0 unused
        self._columns = tuple(tuple(col) for col in columns)
        self.num_cosets = len(columns[0]) - 1
        self._by_letter = {}
        for i in range(len(self.alphabet)):
            self._by_letter[i + 1] = self._columns[2 * i]
            self._by_letter[-(i + 1)] = self._columns[2 * i + 1]
        self._reps = self._bfs_representatives()

    @property
    def index(self):
        return self.num_cosets

    def __repr__(self):
        return f"<CosetTable index={self.num_cosets} gens={' '.join(self.alphabet.names)}>"

    def letters(self):
        """Signed letters in column order: a, A, b, B, ..."""
        n = len(self.alphabet)
        return [s * (i + 1) for i in range(n) for s in (1, -1)]

    def act(self, c, x):
        return self._by_letter[x][c]

    def permutation(self, x):
        """Action of letter ``x`` as a tuple indexed by coset id (entry 0 unused)."""
        return self._by_letter[x]

    def _check_coset(self, c):
        if not 1 <= c <= self.num_cosets:
            raise IndexError(f"coset {c} out of range 1..{self.num_cosets}")

    def trace_letters(self, c, letters):
        by = self._by_letter
        for x in letters:
            c = by[x][c]
        return c

    def trace(self, c, w):
        self._check_coset(c)
        return self.trace_letters(c, w.letters)

    def is_member(self, w):
        return self.trace_letters(1, w.letters) == 1

    def right_coset_id(self, w):
        return self.trace_letters(1, w.letters)

    def left_coset_id(self, w):
        by = self._by_letter
        c = 1
        for x in reversed(w.letters):
            c = by[-x][c]
        return c

    def _bfs_representatives(self):
        letters = sorted(self.letters(), key=letter_key)
        reps = {1: ()}
        queue = deque([1])
        while queue:
            c = queue.popleft()
            for x in letters:
                d = self._by_letter[x][c]
                if d not in reps:
                    reps[d] = reps[c] + (x,)
                    queue.append(d)
        return reps

    def schreier_rep(self, c):
        """Shortlex-least word ``w`` with ``H.w`` equal to coset ``c``."""
        self._check_coset(c)
        return Word(self.alphabet, self._reps[c])

    def schreier_reps(self):
        return [self.schreier_rep(c) for c in range(1, self.num_cosets + 1)]

    def verify(self):
        """Assert every structural invariant of a complete coset table."""
        k = self.num_cosets
        ids = set(range(1, k + 1))
        for x in self.letters():
            perm = self._by_letter[x]
            inv = self._by_letter[-x]
            assert set(perm[1:]) == ids, f"letter {x} is not a bijection"
            assert all(inv[perm[c]] == c for c in ids), f"letter {-x} is not inverse of {x}"
        for r in self.presentation.relators:
            for c in ids:
                assert self.trace(c, r) == c, f"relator {r} fails at coset {c}"
        for y in self.subgroup.generators:
            assert self.trace(1, y) == 1, f"subgroup generator {y} moves coset 1"
        for c in ids:
            assert self.trace(1, self.schreier_rep(c)) == c
        return True


def todd_coxeter(p: Presentation, h: SubgroupSpec, limits: EnumLimits = EnumLimits()):
    """Enumerate the cosets of ``h`` in the group presented by ``p``.

    Raises ``LimitExceeded`` if more than ``limits.max_cosets`` cosets are
    live at once.
    """
    ncols = 2 * len(p.alphabet)
    rels = [[_col(x) for x in r.letters] for r in p.relators]
    subs = [[_col(x) for x in w.letters] for w in h.generators]
    state = _HLT(ncols, limits.max_cosets)
    state.run(rels, subs)

    live = [c for c in range(len(state.table)) if state.live(c)]
    renum = {c: i + 1 for i, c in enumerate(live)}
    columns = []
    for x in range(ncols):
        col = [0]
        for c in live:
            col.append(renum[state.find(state.table[c][x])])
        columns.append(col)
    log.debug("enumeration: %d live of %d defined cosets", len(live), len(state.table))
    return CosetTable(p, h, columns)


def trace(t, c, w):
    return t.trace(c, w)


def is_member(t, w):
    return t.is_member(w)


def left_coset_id(t, w):
    return t.left_coset_id(w)


def right_coset_id(t, w):
    return t.right_coset_id(w)


def canonical_left_transversal(t):
    """Inverses of the shortlex Schreier representatives: one word per left coset."""
    return Transversal(tuple(w.inverse() for w in t.schreier_reps()), Kind.LEFT)


def transversal_index(t, T):
    """Map left coset id -> word of ``T``; raises ``NotATransversal``."""
    by_id = {}
    for w in T:
        c = t.left_coset_id(w)
        if c in by_id:
            raise NotATransversal(f"{by_id[c]} and {w} share left coset {c}")
        by_id[c] = w
    if len(by_id) != t.num_cosets:
        missing = sorted(set(range(1, t.num_cosets + 1)) - set(by_id))
        raise NotATransversal(f"no representative for cosets {missing}")
    return by_id


def locate_in_transversal(t, T, w):
    """The element of ``T`` lying in the left coset ``wH``."""
    return transversal_index(t, T)[t.left_coset_id(w)]


def format_table(t):
    """TSV dump: header, one row per coset, then ``index: k``."""
    letters = t.letters()
    names = [t.alphabet.names[abs(x) - 1] + ("" if x > 0 else "^-1") for x in letters]
    lines = ["\t".join(["coset"] + names)]
    for c in range(1, t.num_cosets + 1):
        lines.append("\t".join([str(c)] + [str(t.act(c, x)) for x in letters]))
    lines.append(f"index: {t.num_cosets}")
    return "\n".join(lines) + "\n"

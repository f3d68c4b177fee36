"""Chessboard decomposition of G into double cosets ``K g H``.

Columns of a block are left cosets ``xH`` (ids from the H table), rows are
right cosets ``Kx`` (ids from the K table). Row orbits come from the right
action of H's generators on K-cosets; column orbits from the left action
of K's generators on H-cosets. No group elements are enumerated.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import AlphabetMismatch, NonSquareBlocks
from .transversal import Kind, Transversal
from .words import Word


@dataclass(frozen=True)
class Block:
    columns: tuple[int, ...]
    rows: tuple[int, ...]
    rep: Word
    witness: dict = field(compare=False, repr=False)

    @property
    def shape(self):
        return len(self.columns), len(self.rows)

    @property
    def square(self):
        return len(self.columns) == len(self.rows)


@dataclass(frozen=True)
class ChessboardDecomposition:
    blocks: tuple[Block, ...]
    n: int  # [G:H], number of columns
    m: int  # [G:K], number of rows

    def block_of_column(self, c):
        for i, b in enumerate(self.blocks):
            if c in b.columns:
                return i
        raise KeyError(c)

    def block_of_row(self, r):
        for i, b in enumerate(self.blocks):
            if r in b.rows:
                return i
        raise KeyError(r)


def _orbit_paths(start, gens, step):
    """BFS orbit of ``start``; returns {point: letters of the word reaching it}.

    ``step(point, letters)`` applies one generator word; ``gens`` are letter
    tuples, tried in order with each inverse right after it.
    """
    moves = []
    for g in gens:
        moves.append(g)
        moves.append(tuple(-x for x in reversed(g)))
    paths = {start: ()}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for g in moves:
            q = step(p, g)
            if q not in paths:
                paths[q] = paths[p] + (g,)
                queue.append(q)
    return paths


def decompose(tH, tK, kGens=None):
    """Partition G into chessboards for the pair ``(H, K)``."""
    if tH.alphabet != tK.alphabet:
        raise AlphabetMismatch("tables over different alphabets")
    alphabet = tH.alphabet
    k_words = [w.letters for w in (kGens if kGens is not None else tK.subgroup.generators)]
    h_words = [w.letters for w in tH.subgroup.generators]

    def row_step(r, h):
        return tK.trace_letters(r, h)

    def col_step(c, k):
        # column of k.x from column of x
        return tH.trace_letters(c, tuple(-x for x in reversed(k)))

    blocks = []
    seen_rows = set()
    seen_cols = set()
    for r0 in range(1, tK.num_cosets + 1):
        if r0 in seen_rows:
            continue
        rep = tK.schreier_rep(r0)
        row_paths = _orbit_paths(r0, h_words, row_step)
        c0 = tH.left_coset_id(rep)
        col_paths = _orbit_paths(c0, k_words, col_step)
        assert not seen_cols & col_paths.keys(), "column orbits overlap"
        seen_rows |= row_paths.keys()
        seen_cols |= col_paths.keys()

        witness = {}
        for c, kp in col_paths.items():
            left = tuple(x for k in reversed(kp) for x in k)
            for r, hp in row_paths.items():
                right = tuple(x for h in hp for x in h)
                witness[(c, r)] = Word(alphabet, left + rep.letters + right)
        blocks.append(Block(tuple(sorted(col_paths)), tuple(sorted(row_paths)), rep, witness))

    assert len(seen_cols) == tH.num_cosets, "columns not covered"
    blocks.sort(key=lambda b: b.columns[0])
    return ChessboardDecomposition(tuple(blocks), tH.num_cosets, tK.num_cosets)


def same_subgroup(tH, tK):
    return all(tH.is_member(w) for w in tK.subgroup.generators) and all(
        tK.is_member(w) for w in tH.subgroup.generators
    )


def diagonal_transversal(d, tH, tK=None):
    """One witness from each diagonal tile; a left-right transversal when H = K.

    ``tK`` is the table the rows were read from; pass it to have H = K
    checked by membership as well as by block shape.
    """
    if not all(b.square for b in d.blocks) or d.n != d.m:
        raise NonSquareBlocks("blocks are not square; H and K differ")
    if tK is not None and not same_subgroup(tH, tK):
        raise NonSquareBlocks("H and K are different subgroups")
    words = []
    for b in d.blocks:
        for c, r in zip(b.columns, b.rows):
            words.append(b.witness[(c, r)])
    return Transversal(tuple(words), Kind.LEFT_RIGHT)


def double_coset_labels(t):
    """Label each right coset id by its double coset ``HxH`` (minimum id in the orbit)."""
    h_words = [w.letters for w in t.subgroup.generators]
    labels = {}
    for r0 in range(1, t.num_cosets + 1):
        if r0 in labels:
            continue
        for r in _orbit_paths(r0, h_words, t.trace_letters):
            labels[r] = r0
    return labels


def format_decomposition(d):
    out = []
    for i, b in enumerate(d.blocks, 1):
        lines = [f"block {i}: {len(b.columns)} x {len(b.rows)}"]
        for r in b.rows:
            lines.append("\t".join(str(b.witness[(c, r)]) for c in b.columns))
        out.append("\n".join(lines))
    return "\n\n".join(out) + "\n"

"""Shifting boxes: Nielsen-move procedures that place tuple entries in cosets.

Every procedure returns the new tuple together with the ``MoveLog`` that
takes the input to it, so ``replay(s, log)`` reproduces the output exactly.
All scans run in fixed lexicographic order.

Left cosets are keyed by ``table.left_coset_id`` and right cosets by
``table.right_coset_id``; id 1 is ``H`` on both sides.
"""

from __future__ import annotations

import logging

from .chessboard import decompose, double_coset_labels
from .coset_enum import canonical_left_transversal
from .errors import (
    MultipleEntriesInH,
    NoEmptyCoset,
    NoEntryInH,
    NotLRCleaned,
    RankTooLarge,
    TupleLargerThanIndex,
)
from .nielsen import Invert, LeftMultiply, RightMultiply, apply_move
from .transversal import Kind, Transversal
from .words import concat

log = logging.getLogger(__name__)


class _Tracker:
    """Applies moves to a tuple while recording them."""

    def __init__(self, s):
        self.s = s
        self.log = []

    def do(self, *moves):
        for m in moves:
            self.s = apply_move(self.s, m)
            self.log.append(m)

    def result(self):
        return self.s, tuple(self.log)


def left_ids(t, s):
    return [t.left_coset_id(w) for w in s]


def right_ids(t, s):
    return [t.right_coset_id(w) for w in s]


def is_left_cleaned(t, s):
    ids = [c for c in left_ids(t, s) if c != 1]
    return len(ids) == len(set(ids))


def is_right_cleaned(t, s):
    ids = [c for c in right_ids(t, s) if c != 1]
    return len(ids) == len(set(ids))


def is_lr_cleaned(t, s):
    return is_left_cleaned(t, s) and is_right_cleaned(t, s)


def _clean(t, s, side):
    tr = _Tracker(s)
    n = len(s)
    changed = True
    while changed:
        changed = False
        for p in range(1, n + 1):
            for i in range(p + 1, n + 1):
                sp, si = tr.s.entry(p), tr.s.entry(i)
                if side == "left":
                    if t.left_coset_id(sp) == 1:
                        break
                    if t.is_member(concat(si.inverse(), sp)):
                        tr.do(LeftMultiply(p, i, -1))
                        changed = True
                        break
                else:
                    if t.right_coset_id(sp) == 1:
                        break
                    if t.is_member(concat(sp, si.inverse())):
                        tr.do(RightMultiply(p, i, -1))
                        changed = True
                        break
    return tr.result()


def left_clean(t, s):
    """Move entries into H until no non-identity left coset holds two entries.

    For each target ``p`` (ascending) the first donor ``i > p`` with
    ``s_i^-1 s_p`` in H replaces ``s_p`` by that product.
    """
    return _clean(t, s, "left")


def right_clean(t, s):
    return _clean(t, s, "right")


def left_right_clean(t, s):
    s1, log1 = left_clean(t, s)
    s2, log2 = right_clean(t, s1)
    return s2, log1 + log2


def find_extraction(t, s):
    """First ``(j, k, eps)`` with ``s_j^eps s_k`` in an empty left coset.

    Non-identity targets are preferred; H itself is only used when it is the
    sole empty coset.
    """
    full = set(left_ids(t, s))
    if len(full) == t.num_cosets:
        raise NoEmptyCoset("every left coset already holds an entry")
    found_identity = None
    n = len(s)
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            for eps in (1, -1):
                sj = s.entry(j) if eps > 0 else s.entry(j).inverse()
                c = t.left_coset_id(concat(sj, s.entry(k)))
                if c in full:
                    continue
                if c != 1:
                    return j, k, eps
                if found_identity is None:
                    found_identity = (j, k, eps)
    if found_identity is not None:
        return found_identity
    # unreachable when s generates G: transitivity forces an exit
    raise NoEmptyCoset("no entry product reaches an empty coset; tuple does not generate")


def extraction_case(t, s, j, k):
    in_h = [t.left_coset_id(w) == 1 for w in s]
    hj, hk = in_h[j - 1], in_h[k - 1]
    if hj and hk:
        return 1
    if hk:
        return 2
    if hj:
        return 3
    return 4


def left_extract(t, s):
    """Move one entry of H into a previously empty left coset."""
    ids = left_ids(t, s)
    if 1 not in ids:
        raise NoEntryInH("no entry lies in H")
    j, k, eps = find_extraction(t, s)
    tr = _Tracker(s)
    case = extraction_case(t, s, j, k)
    if case == 2:
        # eps = +1 is impossible here: s_j s_k H = s_j H is full
        tr.do(LeftMultiply(k, j, -1))
    elif case == 3:
        if eps < 0:
            tr.do(Invert(j))
        tr.do(RightMultiply(j, k, 1))
    elif case == 4:
        i = ids.index(1) + 1
        tr.do(LeftMultiply(i, k, 1), LeftMultiply(i, j, eps))
    else:
        raise AssertionError("extraction target cannot be reached from two H entries")
    log.debug("left_extract: (j,k,eps)=(%d,%d,%d) case %d", j, k, eps, case)
    return tr.result()


def clean_extract(t, s):
    """Nielsen-equivalent tuple whose entries lie in pairwise distinct left cosets."""
    if len(s) > t.num_cosets:
        raise TupleLargerThanIndex(f"tuple size {len(s)} > index {t.num_cosets}")
    s1, log1 = left_clean(t, s)
    logs = list(log1)
    while left_ids(t, s1).count(1) > 1:
        s1, lg = left_extract(t, s1)
        logs.extend(lg)
    return s1, tuple(logs)


def generating_left_transversal(t, s):
    """Left transversal containing a Nielsen-equivalent copy of ``s``.

    Empty cosets are filled with canonical representatives.
    """
    s1, lg = clean_extract(t, s)
    by_id = {t.left_coset_id(w): w for w in canonical_left_transversal(t)}
    for w in s1:
        by_id[t.left_coset_id(w)] = w
    return s1, lg, Transversal(tuple(by_id.values()), Kind.LEFT)


def extend_left_right(t, s, board=None):
    """Left-right transversal containing every entry of an LR-cleaned tuple.

    Entries sit on distinct tiles of their chessboards; each block's unused
    columns and rows are paired in ascending order and filled with witness
    words.
    """
    if not is_lr_cleaned(t, s):
        raise NotLRCleaned("tuple is not left-right-cleaned")
    lids, rids = left_ids(t, s), right_ids(t, s)
    if lids.count(1) > 1:
        raise MultipleEntriesInH("more than one entry lies in H")
    if board is None:
        board = decompose(t, t)
    words = list(s)
    for b in board.blocks:
        used_cols = {c for c in lids if c in b.columns}
        used_rows = {r for r in rids if r in b.rows}
        free_cols = [c for c in b.columns if c not in used_cols]
        free_rows = [r for r in b.rows if r not in used_rows]
        assert len(free_cols) == len(free_rows)
        for c, r in zip(free_cols, free_rows):
            words.append(b.witness[(c, r)])
    return Transversal(tuple(words), Kind.LEFT_RIGHT)


def rank3_case(t, s):
    """Which branch of the rank-3 argument applies to an LR-cleaned tuple.

    Returns ``None`` when at most one entry lies in H (direct extension),
    otherwise one of ``"1"``, ``"2a"``, ``"2b"``, ``"3a"``, ``"3b"``, ``"3c"``.
    """
    return _rank3_moves(t, s)[0]


def _rank3_moves(t, s):
    lids = left_ids(t, s)
    in_h = [i + 1 for i, c in enumerate(lids) if c == 1]
    if len(in_h) <= 1:
        return None, ()
    if len(s) != 3 or len(in_h) != 2:
        raise AssertionError("rank-3 case analysis needs exactly two of three entries in H")
    h1, h2 = in_h
    (gi,) = [i for i in (1, 2, 3) if i not in in_h]
    g = s.entry(gi)
    labels = double_coset_labels(t)
    g2 = concat(g, g)
    dc_g = labels[t.right_coset_id(g)]
    dc_g2 = labels[t.right_coset_id(g2)]

    if dc_g2 != dc_g and dc_g2 != labels[1]:
        # g^2 in a different chessboard: h1 -> g^2 h1
        return "1", (LeftMultiply(h1, gi, 1), LeftMultiply(h1, gi, 1))

    if dc_g2 == dc_g:
        lg = t.left_coset_id(g)
        for hi in (h1, h2):
            if t.left_coset_id(concat(s.entry(hi), g2)) != lg:
                return "2a", (RightMultiply(hi, gi, 1), RightMultiply(hi, gi, 1))
        # h1 g^2 H = h2 g^2 H = gH: h1 -> h2^-1 h1 g^2
        return "2b", (LeftMultiply(h1, h2, -1), RightMultiply(h1, gi, 1), RightMultiply(h1, gi, 1))

    # g^2 in H
    lg, rg = t.left_coset_id(g), t.right_coset_id(g)

    def power(i, e):
        w = s.entry(i)
        return w if e > 0 else w.inverse()

    left_pick = next(
        (i, e) for i in (h1, h2) for e in (1, -1)
        if t.left_coset_id(concat(power(i, e), g)) != lg
    )
    right_pick = next(
        (j, d) for j in (h1, h2) for d in (1, -1)
        if t.right_coset_id(concat(g, power(j, d))) != rg
    )
    (i, eps), (j, delta) = left_pick, right_pick
    if i != j:
        moves = ((Invert(i),) if eps < 0 else ()) + (RightMultiply(i, gi, 1),)
        return "3a", moves + (RightMultiply(gi, j, delta),)
    other = h2 if i == h1 else h1
    w = concat(concat(s.entry(other), g), power(i, delta))
    moves = (RightMultiply(other, gi, 1), RightMultiply(other, i, delta))
    if t.left_coset_id(w) != lg:
        return "3b", moves
    return "3c", moves + (LeftMultiply(gi, i, eps),)


def lr_generating_transversal_rank3(t, s):
    """Left-right transversal containing a Nielsen-equivalent copy of ``s`` (n <= 3)."""
    n = len(s)
    if n > 3:
        raise RankTooLarge(f"tuple size {n} > 3 is not supported")
    if n > t.num_cosets:
        raise TupleLargerThanIndex(f"tuple size {n} > index {t.num_cosets}")
    s1, lg = left_right_clean(t, s)
    case, moves = _rank3_moves(t, s1)
    if case is not None:
        tr = _Tracker(s1)
        tr.do(*moves)
        s1 = tr.s
        lg = lg + tuple(moves)
        log.debug("rank3: case %s", case)
        if not is_lr_cleaned(t, s1) or left_ids(t, s1).count(1) > 1:
            raise AssertionError(f"rank-3 case {case} did not produce an LR-cleaned tuple")
    return s1, lg, extend_left_right(t, s1)

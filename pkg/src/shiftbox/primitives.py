"""Primitive elements relative to finite-index subgroups.

An element is primitive (for tuple size n) when it is an entry of some
generating n-tuple. Witnesses produced here are certified by construction:
each comes with a ``Certificate`` whose move log turns the input tuple into
one holding the witness at a given position.

Candidate products are tracked as *expressions*: tuples of signed 1-based
entry indices. An expression in which some index occurs exactly once,
``u . s_t^(+-1) . v``, is reachable from ``s_t`` by moves on entry ``t``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .boxes import _Tracker, left_clean, left_extract, left_ids
from .coset_enum import canonical_left_transversal
from .errors import EntryNotInSubgroup, IndexTooLarge, NotNormal, RankTooSmall
from .nielsen import Invert, LeftMultiply, RightMultiply, Swap, replay
from .words import Word, product, reduce_letters

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    log: tuple
    position: int

    def verify(self, s, w):
        return replay(s, self.log).entry(self.position) == w


@dataclass
class PrimitivityReport:
    status: str  # "yes" | "no" | "unknown"
    witness: Word | None = None
    certificate: Certificate | None = None
    exceptional: bool = False
    m: int | None = None
    per_coset: dict = field(default_factory=dict)
    per_coset_certificates: dict = field(default_factory=dict)
    route: str | None = None


@dataclass(frozen=True)
class CandidateList:
    words: tuple
    expressions: tuple

    def __len__(self):
        return len(self.words)


def evaluate(s, expr):
    """The word for an expression over the entries of ``s``."""
    parts = [s.entry(x) if x > 0 else s.entry(-x).inverse() for x in expr]
    return product(parts, s.alphabet)


def build_candidate_list(s):
    """Entries, e, then every decreasing product of distinct entries followed by s_1."""
    n = len(s)
    exprs = [(i,) for i in range(1, n + 1)]
    exprs.append(())
    for k in range(1, n + 1):
        for combo in combinations(range(1, n + 1), k):
            exprs.append(tuple(reversed(combo)) + (1,))
    return CandidateList(tuple(evaluate(s, e) for e in exprs), tuple(exprs))


def _inverse_expr(expr):
    return tuple(-x for x in reversed(expr))


def single_occurrence(expr):
    """Position of the first entry index occurring exactly once, or None."""
    counts = {}
    for x in expr:
        counts[abs(x)] = counts.get(abs(x), 0) + 1
    for pos, x in enumerate(expr):
        if counts[abs(x)] == 1:
            return pos
    return None


def moves_for_expression(expr, pos):
    """Moves turning entry ``|expr[pos]|`` into the expression's value."""
    t = abs(expr[pos])
    moves = [Invert(t)] if expr[pos] < 0 else []
    moves += [RightMultiply(t, abs(x), 1 if x > 0 else -1) for x in expr[pos + 1:]]
    moves += [LeftMultiply(t, abs(x), 1 if x > 0 else -1) for x in reversed(expr[:pos])]
    return tuple(moves), t


def _witness_from_expr(s, expr):
    pos = single_occurrence(expr)
    if pos is None:
        return None
    moves, t = moves_for_expression(expr, pos)
    w = replay(s, moves).entry(t)
    return w, Certificate(moves, t)


def _list_scan(t, s):
    """Walk the candidate list looking for two members in one left coset.

    Returns ``(witness, certificate, route)`` or None. A collision whose
    quotient reduces to ``s_1^2`` certifies nothing and is skipped.
    """
    for i, w in enumerate(s, 1):
        if t.is_member(w):
            return w, Certificate((), i), "entry"
    cands = build_candidate_list(s)
    ids = [t.left_coset_id(w) for w in cands.words]
    for q in range(len(ids)):
        for p in range(q):
            if ids[p] != ids[q]:
                continue
            expr = reduce_letters(_inverse_expr(cands.expressions[p]) + cands.expressions[q])
            found = _witness_from_expr(s, expr)
            if found is not None:
                return found + ("candidate-list",)
            log.debug("collision %d/%d gives s1^2 in H", p, q)
    return None


def _subset_scan(t, s):
    """Look for an increasing product of distinct entries lying in H."""
    n = len(s)
    for k in range(1, n + 1):
        for combo in combinations(range(1, n + 1), k):
            if t.is_member(evaluate(s, combo)):
                found = _witness_from_expr(s, combo)
                return found + ("subset-product",)
    return None


def _coset_paths(t, s, skip=None, side="right"):
    """BFS over coset ids with tuple entries as edges.

    ``side="right"`` appends letters and tracks right-coset ids;
    ``side="left"`` prepends them and tracks left-coset ids. Returns
    {coset id: expression}.
    """
    steps = []
    for i in range(1, len(s) + 1):
        if i == skip:
            continue
        for e in (1, -1):
            w = s.entry(i) if e > 0 else s.entry(i).inverse()
            steps.append((i * e, w.letters if side == "right" else w.inverse().letters))
    paths = {1: ()}
    queue = deque([1])
    while queue:
        c = queue.popleft()
        for x, letters in steps:
            d = t.trace_letters(c, letters)
            if d not in paths:
                paths[d] = paths[c] + (x,) if side == "right" else (x,) + paths[c]
                queue.append(d)
    return paths


def _conjugation_moves(n, u):
    """Moves conjugating every entry by the expression ``u``."""
    moves = []
    for x in u:
        m, sign = abs(x), (1 if x > 0 else -1)
        for p in range(1, n + 1):
            if p != m:
                moves += [LeftMultiply(p, m, sign), RightMultiply(p, m, -sign)]
    return tuple(moves)


def _square_escape(t, s):
    """Nielsen-equivalent tuple whose first entry has square outside H.

    Tries conjugates ``u y u^-1`` with ``y`` an entry or ``s_i^-1 s_j`` and
    ``u`` running over right cosets. If every such square lay in H, H would
    contain [G,G]G^2, so this succeeds whenever H is not exceptional.
    """
    n = len(s)
    ys = [(i,) for i in range(1, n + 1)]
    ys += [(-i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for c, u in sorted(_coset_paths(t, s).items()):
        for y in ys:
            x = evaluate(s, u + y + _inverse_expr(u))
            if t.is_member(x * x):
                continue
            moves = list(_conjugation_moves(n, u))
            pos = y[0]
            if len(y) == 2:
                moves.append(LeftMultiply(y[1], -y[0], -1))
                pos = y[1]
            if pos != 1:
                moves.append(Swap(1, pos))
            return tuple(moves)
    return None


def is_exceptional(t, p=None):
    """Is H normal with G/H elementary abelian of order 2^m? Returns ``(flag, m)``."""
    p = p or t.presentation
    cosets = range(1, t.num_cosets + 1)
    for y in t.subgroup.generators:
        if any(t.trace(c, y) != c for c in cosets):
            return False, None
    gens = p.alphabet.generators()
    for a in gens:
        if any(t.trace(c, a * a) != c for c in cosets):
            return False, None
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            comm = a * b * a.inverse() * b.inverse()
            if any(t.trace(c, comm) != c for c in cosets):
                return False, None
    k = t.num_cosets
    assert k & (k - 1) == 0, "elementary abelian 2-quotient must have order 2^m"
    return True, k.bit_length() - 1


def scan_subgroup(t, s):
    """Decide whether H holds a primitive element, with a certificate either way.

    ``yes``: witness plus move log. ``no``: H is normal with quotient
    C_2^n, so no entry of a generating n-tuple can lie in H. ``unknown``:
    nothing found and the index is too large for the dichotomy.
    """
    n = len(s)
    exc, m = is_exceptional(t)

    def yes(found, prefix=()):
        w, cert, route = found
        return PrimitivityReport(
            "yes", w, Certificate(tuple(prefix) + cert.log, cert.position),
            exceptional=exc, m=m, route=route,
        )

    found = _list_scan(t, s)
    if found:
        return yes(found)
    if exc and m == n:
        return PrimitivityReport("no", exceptional=True, m=m)
    if exc:
        return yes(_subset_scan(t, s))
    moves = _square_escape(t, s)
    if moves is not None:
        s2 = replay(s, moves)
        found = _list_scan(t, s2)
        if found:
            return yes(found[:2] + ("square-escape",), moves)
    if t.num_cosets < n + 2 ** n:
        log.warning("no witness found below the n + 2^n bound; tuple may not generate")
    return PrimitivityReport("unknown", exceptional=exc, m=m)


def primitive_in_each_coset(t, s):
    """A primitive witness in every left coset of H, when [G:H] <= n + 2.

    Shifting boxes fills the cosets; with index n + 2 the second empty coset
    is reached through ``s_i x``. H itself is handled by ``scan_subgroup``
    and stays empty only in the exceptional case.
    """
    n, k = len(s), t.num_cosets
    if n < 2:
        raise RankTooSmall("need a tuple of size at least 2")
    if k > n + 2:
        raise IndexTooLarge(f"index {k} > n + 2 = {n + 2}")
    tr = _Tracker(s)
    tr.do(*left_clean(t, s)[1])
    while True:
        ids = left_ids(t, tr.s)
        if (k <= n and len(set(ids)) == k) or (k > n and 1 not in ids):
            break
        tr.do(*left_extract(t, tr.s)[1])
    s1, base = tr.result()
    ids = left_ids(t, s1)

    per_coset, certs = {}, {}
    for i, c in enumerate(ids, 1):
        if c not in per_coset:
            per_coset[c] = s1.entry(i)
            certs[c] = Certificate(base, i)

    if k == n + 2:
        (cx,) = set(range(2, k + 1)) - set(ids)
        x = next(w for w in canonical_left_transversal(t) if t.left_coset_id(w) == cx)
        for i in range(1, n + 1):
            d = t.left_coset_id(s1.entry(i) * x)
            if d == 1:
                moves = (Invert(i),)
                pos = i
            elif d != cx:
                pos = ids.index(d) + 1
                moves = (LeftMultiply(pos, i, -1),)
            else:
                continue
            cert = Certificate(base + moves, pos)
            per_coset[cx] = replay(s1, moves).entry(pos)
            certs[cx] = cert
            break
        else:
            raise AssertionError("every entry stabilises xH; tuple does not generate G")

    report = PrimitivityReport("yes")
    if 1 in per_coset:
        report.witness, report.certificate = per_coset[1], certs[1]
        report.exceptional, report.m = is_exceptional(t)
        report.route = "entry"
    else:
        sub = scan_subgroup(t, s1)
        report.status, report.exceptional, report.m = sub.status, sub.exceptional, sub.m
        report.route = sub.route
        if sub.status == "yes":
            per_coset[1] = sub.witness
            certs[1] = Certificate(base + sub.certificate.log, sub.certificate.position)
            report.witness, report.certificate = sub.witness, certs[1]
    report.per_coset = dict(sorted(per_coset.items()))
    report.per_coset_certificates = dict(sorted(certs.items()))
    return report


def is_normal(t):
    cosets = range(1, t.num_cosets + 1)
    return all(t.trace(c, y) == c for y in t.subgroup.generators for c in cosets)


def normal_coset_primitives(t, s, n_index, certificates=False):
    """Witness ``g' s_n`` in every coset, with ``g'`` a word in the other entries.

    ``n_index`` is 1-based. With ``certificates=True`` also returns
    {coset id: Certificate}.
    """
    if not is_normal(t):
        raise NotNormal("subgroup is not normal")
    sn = s.entry(n_index)
    if not t.is_member(sn):
        raise EntryNotInSubgroup(f"entry {n_index} = {sn} is not in the subgroup")
    paths = _coset_paths(t, s, skip=n_index, side="left")
    out, certs = {}, {}
    for c in sorted(paths):
        expr = paths[c] + (n_index,)
        moves, pos = moves_for_expression(expr, len(expr) - 1)
        out[c] = evaluate(s, expr)
        certs[c] = Certificate(moves, pos)
    return (out, certs) if certificates else out


def _quotient_generated_by(t, elems):
    reps = [t.schreier_rep(d).letters for d in elems]
    seen = {1}
    queue = deque([1])
    while queue:
        c = queue.popleft()
        for r in reps:
            d = t.trace_letters(c, r)
            if d not in seen:
                seen.add(d)
                queue.append(d)
    return len(seen) == t.num_cosets


def quotient_rank_bound_check(t, witness, n):
    """True iff G/N is generated by n - 1 elements (so d(G/N) < n)."""
    if not is_normal(t):
        raise NotNormal("subgroup is not normal")
    if not t.is_member(witness):
        raise EntryNotInSubgroup(f"{witness} is not in the subgroup")
    cosets = range(1, t.num_cosets + 1)
    if n - 1 <= 0:
        return t.num_cosets == 1
    return any(
        _quotient_generated_by(t, combo)
        for combo in combinations(cosets, min(n - 1, t.num_cosets))
    )

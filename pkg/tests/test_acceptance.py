"""Acceptance criteria, one test per criterion (summary printed by conftest)."""

import subprocess
import sys
from pathlib import Path

import pytest

import corpus
from corpus import group, is_primitive, rank, sub_label, subgroups, sweep, table
from shiftbox import boxes, oracle
from shiftbox.chessboard import decompose, diagonal_transversal
from shiftbox.cli import run
from shiftbox.coset_enum import todd_coxeter
from shiftbox.nielsen import GeneratingTuple, replay
from shiftbox.primitives import (
    build_candidate_list,
    is_exceptional,
    normal_coset_primitives,
    primitive_in_each_coset,
    scan_subgroup,
)
from shiftbox.transversal import is_left_transversal, is_right_transversal
from shiftbox.words import Alphabet

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).resolve().parent / "golden"


def test_ac01_coset_enumeration_index():
    checked = 0
    for name in ["S3", "K4", "C2^3", "C3^2", "C6"]:
        g = group(name)[1]
        subs = subgroups(name)
        if name == "S3":
            # the three specs of the fixture files: <a>, <b>, <ab>
            subs = [s for s in subs if [str(w) for w in s.generators] in (["a"], ["b"], ["ab"])]
            assert len(subs) == 3
        for sub in subs:
            t = table(name, tuple(str(w) for w in sub.generators))
            assert t.num_cosets == g.order // sub.order, sub_label(name, sub)
            checked += 1
    assert checked == 3 + 5 + 16 + 6 + 4
    # free-group cases, against hand-drawn Schreier graphs
    for fixture, index in [("free1_a3", 3), ("free2_index2", 2)]:
        t = todd_coxeter(*corpus.load(fixture))
        t.verify()
        assert t.num_cosets == index


def _main_sweep():
    for name, sub, t, s in sweep(corpus.FINITE, lambda index, n: index >= n):
        yield name, sub, t, s


def test_ac02_generating_left_transversal_sweep():
    count = 0
    for name, sub, t, s in _main_sweep():
        g = group(name)[1]
        s1, log, T = boxes.generating_left_transversal(t, s)
        label = sub_label(name, sub)
        assert is_left_transversal(t, T.words), label
        assert oracle.is_left_transversal(g, sub.elements, T.words), label
        assert all(w in T for w in s1), label
        assert oracle.generates(g, T.words), label
        count += 1
    assert count == 78


# (group, subgroup generators, triple, expected branch)
RANK3_TRIGGERS = [
    ("D4", ("b",), "e,a,b", "1"),
    ("S3", ("a",), "e,a,ab", "2a"),
    ("S3", ("a",), "a,a,ab", "2b"),
    ("S3", ("a",), "a,a,b", "3b"),
    ("S3", ("a",), "e,a,b", "3c"),
]


def _check_lr(name, sub_elems, t, s):
    g = group(name)[1]
    s1, log, T = boxes.lr_generating_transversal_rank3(t, s)
    corpus.check_log(name, s, s1, log)
    assert is_left_transversal(t, T.words) and is_right_transversal(t, T.words)
    assert oracle.is_left_transversal(g, sub_elems, T.words)
    assert oracle.is_right_transversal(g, sub_elems, T.words)
    assert all(w in T for w in s1)
    assert oracle.generates(g, T.words)


def test_ac03_rank3_lr_transversal_sweep():
    names = [n for n in corpus.FINITE if rank(n) <= 3]
    for name, sub, t, s in sweep(names, lambda index, n: index >= n):
        _check_lr(name, sub.elements, t, s)
    seen = set()
    for name, gens, triple, case in RANK3_TRIGGERS:
        t = table(name, gens)
        s = GeneratingTuple.parse(triple, t.alphabet)
        s1, _ = boxes.left_right_clean(t, s)
        assert boxes.rank3_case(t, s1) == case
        g = group(name)[1]
        _check_lr(name, oracle.subgroup_elements(g, t.subgroup), t, s)
        seen.add(case[0])
    assert seen == {"1", "2", "3"}


def test_ac04_chessboard_laws():
    for name in ["S3", "K4", "D4", "A4"]:
        subs = subgroups(name)
        for h in subs:
            tH = table(name, tuple(str(w) for w in h.generators))
            for k in subs:
                tK = table(name, tuple(str(w) for w in k.generators))
                d = decompose(tH, tK)
                cols = [c for b in d.blocks for c in b.columns]
                rows = [r for b in d.blocks for r in b.rows]
                assert sorted(cols) == list(range(1, d.n + 1))
                assert sorted(rows) == list(range(1, d.m + 1))
                for b in d.blocks:
                    assert len(b.columns) * d.m == len(b.rows) * d.n
                if h.elements == k.elements:
                    assert all(b.square for b in d.blocks)
                    T = diagonal_transversal(d, tH, tK)
                    assert is_left_transversal(tH, T.words) and is_right_transversal(tH, T.words)
    d = decompose(table("S3", ("a",)), table("S3", ("ab",)))
    assert [b.shape for b in d.blocks] == [(3, 2)]


def test_ac05_move_log_soundness():
    runs = 0
    for name, sub, t, s in sweep(corpus.FINITE, lambda index, n: index >= n):
        for op in (boxes.left_clean, boxes.right_clean, boxes.left_right_clean, boxes.clean_extract):
            s1, log = op(t, s)
            corpus.check_log(name, s, s1, log)
            runs += 1
        s1, log, _ = boxes.generating_left_transversal(t, s)
        corpus.check_log(name, s, s1, log)
        if 1 in boxes.left_ids(t, s1) and len(set(boxes.left_ids(t, s1))) < t.num_cosets:
            s2, log = boxes.left_extract(t, s1)
            corpus.check_log(name, s1, s2, log)
        if len(s) <= 3:
            s1, log, _ = boxes.lr_generating_transversal_rank3(t, s)
            corpus.check_log(name, s, s1, log)
        rep = scan_subgroup(t, s)
        if rep.status == "yes":
            s1 = replay(s, rep.certificate.log)
            corpus.check_log(name, s, s1, rep.certificate.log)
            assert s1.entry(rep.certificate.position) == rep.witness
        if len(s) >= 2 and t.num_cosets <= len(s) + 2:
            each = primitive_in_each_coset(t, s)
            for c, cert in each.per_coset_certificates.items():
                corpus.check_log(name, s, replay(s, cert.log), cert.log)
                assert cert.verify(s, each.per_coset[c])
        runs += 1
    assert runs > 100


def _classify_sweep():
    for name, sub, t, s in sweep(corpus.SMALL, lambda index, n: index < n + 2 ** n):
        n = rank(name)
        g = group(name)[1]
        has_primitive = bool(sub.elements & corpus.primitives(name))
        yield name, sub, t, s, n, g, has_primitive


def test_ac06_classification():
    count = 0
    for name, sub, t, s, n, g, has_primitive in _classify_sweep():
        label = sub_label(name, sub)
        exc, m = is_exceptional(t)
        assert (exc, m) == oracle.quotient_elementary_abelian_2(g, sub.elements), label
        assert (not has_primitive) == (exc and m == n), label
        rep = scan_subgroup(t, s)
        if has_primitive:
            assert rep.status == "yes", label
            assert t.is_member(rep.witness) and is_primitive(name, rep.witness), label
        else:
            assert rep.status == "no" and rep.exceptional and rep.m == n, label
        count += 1
    assert count > 20
    assert scan_subgroup(table("K4", ()), corpus.sweep_tuple("K4")).status == "no"
    assert scan_subgroup(table("C2^3", ()), corpus.sweep_tuple("C2^3")).status == "no"
    for sub in subgroups("S3"):
        if 6 // sub.order in (2, 3):
            assert sub.elements & corpus.primitives("S3")


def test_ac07_bound_necessity():
    g = group("C3^2")[1]
    t = table("C3^2", ())
    n = rank("C3^2")
    assert n == 2 and t.num_cosets == 9 >= n + 2 ** n
    assert 0 not in corpus.primitives("C3^2")
    assert is_exceptional(t) == (False, None)
    assert scan_subgroup(t, corpus.sweep_tuple("C3^2")).status == "unknown"
    assert g.order == 9


def test_ac08_primitive_in_every_coset():
    count = exceptions = 0
    names = [n for n in corpus.FINITE if rank(n) >= 2]
    for name, sub, t, s in sweep(names, lambda index, n: index <= n + 2):
        g = group(name)[1]
        n = rank(name)
        label = sub_label(name, sub)
        rep = primitive_in_each_coset(t, s)
        for c, w in rep.per_coset.items():
            assert t.left_coset_id(w) == c, label
            assert is_primitive(name, w), label
        quotient = oracle.quotient_elementary_abelian_2(g, sub.elements)
        if quotient == (True, n):
            assert n == 2
            assert sorted(rep.per_coset) == list(range(2, t.num_cosets + 1)), label
            assert rep.status == "no"
            exceptions += 1
        else:
            assert sorted(rep.per_coset) == list(range(1, t.num_cosets + 1)), label
        count += 1
    assert count > 30 and exceptions >= 2


def test_ac09_normal_coset_primitives():
    count = 0
    for name in corpus.FINITE:
        g = group(name)[1]
        for sub in subgroups(name):
            if not oracle.is_normal(g, sub.elements) or not sub.elements & corpus.primitives(name):
                continue
            t = table(name, tuple(str(w) for w in sub.generators))
            s = corpus.sweep_tuple(name)
            rep = scan_subgroup(t, s)
            assert rep.status == "yes", sub_label(name, sub)
            s1 = replay(s, rep.certificate.log)
            pos = rep.certificate.position
            out, certs = normal_coset_primitives(t, s1, pos, certificates=True)
            assert sorted(out) == list(range(1, t.num_cosets + 1))
            for c, w in out.items():
                assert t.left_coset_id(w) == c
                assert is_primitive(name, w), sub_label(name, sub)
                assert certs[c].verify(s1, w)
            count += 1
    assert count > 10


def test_ac10_candidate_list_count():
    names = tuple("abcdefgh")
    for n in range(1, 9):
        alphabet = Alphabet(names[:n])
        s = GeneratingTuple(tuple(alphabet.generators()))
        assert len(build_candidate_list(s)) == n + 2 ** n


CLI_RUNS = [
    ("enumerate_s3", ["enumerate", "-p", "s3.grp"]),
    ("enumerate_free2", ["enumerate", "-p", "free2_index2.grp"]),
    ("transversal_s3", ["transversal", "-p", "s3.grp", "--tuple", "a,b"]),
    ("transversal_s3_b_ba", ["transversal", "-p", "s3.grp", "--tuple", "b,ba"]),
    ("transversal_k4", ["transversal", "-p", "k4_trivial.grp"]),
    ("transversal_free1", ["transversal", "-p", "free1_a3.grp"]),
    ("lr_transversal_s3", ["lr-transversal", "-p", "s3.grp", "--tuple", "a,b"]),
    ("lr_transversal_s3_case2", ["lr-transversal", "-p", "s3.grp", "--tuple", "e,a,ab"]),
    ("lr_transversal_d4_case1", ["lr-transversal", "-p", "d4_b.grp", "--tuple", "e,a,b"]),
    ("lr_transversal_c2cubed", ["lr-transversal", "-p", "c2cubed.grp"]),
    ("chessboard_s3", ["chessboard", "-p", "s3.grp"]),
    ("chessboard_s3_ab", ["chessboard", "-p", "s3.grp", "--second-subgroup", "s3_ab_second.grp"]),
    ("primitive_scan_k4", ["primitive-scan", "-p", "k4_trivial.grp"]),
    ("primitive_scan_s3", ["primitive-scan", "-p", "s3.grp", "--each-coset"]),
    ("primitive_scan_s3_ab", ["primitive-scan", "-p", "s3_ab.grp", "--each-coset"]),
    ("primitive_scan_c3sq", ["primitive-scan", "-p", "c3sq.grp"]),
    ("oracle_order_s4", ["oracle", "order", "-p", "s4.grp"]),
    ("oracle_primitives_k4", ["oracle", "primitives", "-p", "k4_trivial.grp", "-n", "2"]),
    ("oracle_subgroups_s3", ["oracle", "subgroups", "-p", "s3.grp"]),
]


def cli_outputs():
    """Run every CLI fixture command in a fresh interpreter; name -> bytes."""
    out = {}
    for name, argv in CLI_RUNS:
        proc = subprocess.run(
            [sys.executable, "-m", "shiftbox", *argv],
            cwd=ROOT / "fixtures", capture_output=True, check=False,
        )
        out[name] = proc.stdout + b"--\n" + proc.stderr + f"exit {proc.returncode}\n".encode()
    return out


def test_ac11_cli_determinism():
    first, second = cli_outputs(), cli_outputs()
    assert first == second
    for name, data in first.items():
        assert (GOLDEN / f"{name}.txt").read_bytes() == data, name


@pytest.mark.parametrize("argv", [argv for _, argv in CLI_RUNS[:3]])
def test_cli_in_process_matches_subprocess(argv, monkeypatch):
    monkeypatch.chdir(ROOT / "fixtures")
    code, out, err = run(argv)
    assert code == 0 and err == ""
    name = next(n for n, a in CLI_RUNS if a == argv)
    assert (GOLDEN / f"{name}.txt").read_bytes().startswith(out.encode())

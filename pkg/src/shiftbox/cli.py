"""Command-line front end.

Exit codes: 0 success, 2 coset limit exceeded, 3 precondition violated,
4 parse or usage error. Output is deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import boxes, oracle
from .chessboard import decompose, diagonal_transversal, format_decomposition, same_subgroup
from .coset_enum import EnumLimits, format_table, todd_coxeter
from .errors import GroupError, LimitExceeded, ParseError, PreconditionError
from .nielsen import GeneratingTuple, format_log
from .presentation import parse_presentation, parse_subgroup_file
from .primitives import primitive_in_each_coset, scan_subgroup
from .words import shortlex_sorted


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _load(args):
    pres, sub = parse_presentation(_read(args.presentation))
    limits = EnumLimits(args.max_cosets)
    return pres, sub, limits


def _tuple(args, pres):
    if args.tuple is None:
        return GeneratingTuple(tuple(pres.alphabet.generators()))
    return GeneratingTuple.parse(args.tuple, pres.alphabet)


def _words(words):
    return "".join(f"{w}\n" for w in shortlex_sorted(words))


def _transversal_report(T, s1, lg):
    out = _words(T.words)
    out += f"moves: {len(lg)}\n" + format_log(lg)
    out += "tuple: " + ",".join(str(w) for w in s1) + "\n"
    contained = all(w in T for w in s1)
    out += f"contains-tuple: {'yes' if contained else 'no'}\n"
    return out


def cmd_enumerate(args):
    pres, sub, limits = _load(args)
    return format_table(todd_coxeter(pres, sub, limits))


def cmd_transversal(args):
    pres, sub, limits = _load(args)
    t = todd_coxeter(pres, sub, limits)
    s1, lg, T = boxes.generating_left_transversal(t, _tuple(args, pres))
    return _transversal_report(T, s1, lg)


def cmd_lr_transversal(args):
    pres, sub, limits = _load(args)
    t = todd_coxeter(pres, sub, limits)
    s = _tuple(args, pres)
    s1, lg, T = boxes.lr_generating_transversal_rank3(t, s)
    return _transversal_report(T, s1, lg)


def cmd_chessboard(args):
    pres, sub, limits = _load(args)
    tH = todd_coxeter(pres, sub, limits)
    if args.second_subgroup:
        k_sub = parse_subgroup_file(_read(args.second_subgroup), pres.alphabet)
        tK = todd_coxeter(pres, k_sub, limits)
    else:
        tK = tH
    d = decompose(tH, tK)
    out = f"columns: {d.n}\nrows: {d.m}\nblocks: {len(d.blocks)}\n\n" + format_decomposition(d)
    if same_subgroup(tH, tK):
        out += "\ndiagonal:\n" + _words(diagonal_transversal(d, tH, tK).words)
    return out


def cmd_primitive_scan(args):
    pres, sub, limits = _load(args)
    t = todd_coxeter(pres, sub, limits)
    s = _tuple(args, pres)
    rep = scan_subgroup(t, s)
    if rep.status == "yes":
        out = f"subgroup: yes {rep.witness}\n"
        out += f"position: {rep.certificate.position}\n" + format_log(rep.certificate.log)
    elif rep.status == "no":
        out = f"subgroup: no (exceptional, m={rep.m})\n"
    else:
        out = "subgroup: unknown\n"
    if args.each_coset:
        each = primitive_in_each_coset(t, s)
        for c, w in each.per_coset.items():
            out += f"coset {c}: {w}\n"
    return out


def cmd_oracle(args):
    pres, sub, limits = _load(args)
    g = oracle.materialize(pres, limits)
    if args.oracle_cmd == "order":
        return f"order: {g.order}\n"
    if args.oracle_cmd == "primitives":
        ids = oracle.primitive_elements(g, args.n, seed=args.seed)
        return _words(g.words[i] for i in ids) + f"count: {len(ids)}\n"
    if args.oracle_cmd == "subgroups":
        lines = []
        for h in oracle.all_subgroups(g):
            normal = "yes" if oracle.is_normal(g, h.elements) else "no"
            gens = " ".join(str(w) for w in h.generators)
            lines.append(f"order {h.order} index {g.order // h.order} normal {normal}: {gens}".rstrip())
        return "\n".join(lines) + "\n"
    # verify-transversal
    lines = (line.split("#", 1)[0].strip() for line in _read(args.file).splitlines())
    words = [pres.alphabet.parse(line) for line in lines if line]
    elems = oracle.subgroup_elements(g, sub)
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    return (
        f"left: {yn(oracle.is_left_transversal(g, elems, words))}\n"
        f"right: {yn(oracle.is_right_transversal(g, elems, words))}\n"
        f"generates: {yn(oracle.generates(g, words))}\n"
    )


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("-p", "--presentation", required=True, help="presentation file")
    common.add_argument("--max-cosets", type=int, default=EnumLimits().max_cosets)
    tup = _Parser(add_help=False)
    tup.add_argument("--tuple", help='comma-separated words, e.g. "a,b" (default: the generators)')

    ap = _Parser(prog="shiftbox", description="Coset enumeration and shifting boxes.")
    sp = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp.add_parser("enumerate", parents=[common], help="coset table dump").set_defaults(fn=cmd_enumerate)
    sp.add_parser("transversal", parents=[common, tup],
                  help="generating left transversal").set_defaults(fn=cmd_transversal)
    sp.add_parser("lr-transversal", parents=[common, tup],
                  help="generating left-right transversal (tuple size <= 3)").set_defaults(fn=cmd_lr_transversal)
    cb = sp.add_parser("chessboard", parents=[common], help="double coset decomposition")
    cb.add_argument("--second-subgroup", help="file with the second subgroup (default: same as -p)")
    cb.set_defaults(fn=cmd_chessboard)
    ps = sp.add_parser("primitive-scan", parents=[common, tup], help="primitive elements in H")
    ps.add_argument("--each-coset", action="store_true", help="also give a witness per left coset")
    ps.set_defaults(fn=cmd_primitive_scan)

    orc = sp.add_parser("oracle", help="brute-force checks on a finite group")
    osp = orc.add_subparsers(dest="oracle_cmd", required=True, parser_class=_Parser)
    osp.add_parser("order", parents=[common])
    pr = osp.add_parser("primitives", parents=[common])
    pr.add_argument("-n", type=int, required=True, help="tuple size")
    pr.add_argument("--seed", type=int, help="enables sampling when exhaustive search is too large")
    osp.add_parser("subgroups", parents=[common])
    vt = osp.add_parser("verify-transversal", parents=[common])
    vt.add_argument("file", help="words, one per line")
    orc.set_defaults(fn=cmd_oracle)
    return ap


def run(argv):
    """Returns ``(exit code, stdout text, stderr text)``."""
    try:
        args = build_parser().parse_args(argv)
        return 0, args.fn(args), ""
    except LimitExceeded as e:
        return 2, "", f"error: {e}\n"
    except PreconditionError as e:
        return 3, "", f"error: {type(e).__name__}: {e}\n"
    except (ParseError, UsageError, GroupError) as e:
        return 4, "", f"error: {e}\n"


def main(argv=None):
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())

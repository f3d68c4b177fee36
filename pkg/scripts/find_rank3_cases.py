"""Search small groups for generating triples that trigger each rank-3 branch.

For every fixture group, subgroup H and generating triple of Schreier words,
LR-clean the triple and record which branch applies. Prints the first
(shortest) triple found per branch, and checks the output transversal
against the oracle as it goes.
"""

import argparse
import itertools
import sys
from pathlib import Path

from shiftbox import boxes, oracle
from shiftbox.coset_enum import todd_coxeter
from shiftbox.nielsen import GeneratingTuple
from shiftbox.presentation import load_presentation

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="*", default=["s3_trivial", "d4", "q8", "a4", "s4", "c2cubed"])
    ap.add_argument("--max-elements", type=int, default=12,
                    help="only use the first N elements (shortlex) as triple entries")
    args = ap.parse_args(argv)

    first = {}
    for name in args.groups:
        p, _ = load_presentation(FIXTURES / f"{name}.grp")
        g = oracle.materialize(p)
        elems = sorted(range(g.order), key=lambda i: g.words[i].shortlex_key())[: args.max_elements]
        for sub in oracle.all_subgroups(g):
            if g.order // sub.order < 3:
                continue
            t = todd_coxeter(p, sub.spec())
            for triple in itertools.product(elems, repeat=3):
                if not oracle.generates_ids(g, triple):
                    continue
                s = GeneratingTuple(tuple(g.words[i] for i in triple))
                s1, _ = boxes.left_right_clean(t, s)
                case = boxes.rank3_case(t, s1)
                if case is None:
                    continue
                _, _, T = boxes.lr_generating_transversal_rank3(t, s)
                ok = (oracle.is_left_transversal(g, sub.elements, T.words)
                      and oracle.is_right_transversal(g, sub.elements, T.words)
                      and oracle.generates(g, T.words))
                if not ok:
                    print(f"FAILED {name} H={[str(w) for w in sub.generators]} {s}")
                    return 1
                first.setdefault(case, (name, [str(w) for w in sub.generators], str(s)))
    for case in sorted(first):
        print(case, *first[case])
    return 0


if __name__ == "__main__":
    sys.exit(main())

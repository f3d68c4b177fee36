"""Compare scan_subgroup with the brute-force oracle over every generating d-tuple.

For each fixture group G (d = d(G)), each subgroup H with [G:H] < d + 2^d, and
each generating d-tuple of elements, scan_subgroup must answer "yes" exactly
when H contains an oracle-primitive element, and "no" otherwise. Prints a
tally of the routes used and exits non-zero on any disagreement.
"""

import argparse
import collections
import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import corpus  # noqa: E402
from shiftbox import oracle  # noqa: E402
from shiftbox.nielsen import GeneratingTuple  # noqa: E402
from shiftbox.primitives import scan_subgroup  # noqa: E402


def sweep(name):
    p, g = corpus.group(name)
    n = corpus.rank(name)
    routes = collections.Counter()
    bad = []
    for sub in corpus.subgroups(name):
        t = corpus.table(name, tuple(str(w) for w in sub.generators))
        if t.num_cosets >= n + 2 ** n:
            continue
        has = bool(sub.elements & corpus.primitives(name))
        for tup in itertools.product(range(g.order), repeat=n):
            if not oracle.generates_ids(g, tup):
                continue
            s = GeneratingTuple(tuple(g.words[i] for i in tup))
            r = scan_subgroup(t, s)
            routes[r.route or r.status] += 1
            ok = (r.status == "yes") == has and r.status != "unknown"
            if r.status == "yes":
                ok = ok and r.certificate.verify(s, r.witness) and corpus.is_primitive(name, r.witness)
            if not ok:
                bad.append((corpus.sub_label(name, sub), str(s), r.status))
    return routes, bad


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="*", default=list(corpus.FINITE))
    args = ap.parse_args(argv)
    failed = False
    for name in args.groups:
        routes, bad = sweep(name)
        print(f"{name}: {dict(sorted(routes.items()))}")
        for item in bad[:10]:
            print("  MISMATCH", *item)
        failed |= bool(bad)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

"""Tally whether b(X) drops under a single inner projection across many seeds.

Only data: whether b always drops is an open question, so nothing here
is asserted.  a(X_q) >= a(X) - 1 is checked and any violation is printed.
"""

import argparse
import json

from syzygy import build
from syzygy.verify import FAIL, explore_ab


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=["rnc(4)", "rnc(5)", "elliptic_nc5", "veronese5",
                                                  "rational_quartic_p3"])
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--trials", type=int, default=3)
    args = ap.parse_args()
    summary = {}
    for name in args.names:
        tally = {"b dropped": 0, "b did not drop": 0}
        for seed in range(args.seeds):
            rep = explore_ab(build(name), seed, args.trials)
            for a in rep.assertions:
                if a.verdict == FAIL:
                    print(f"{name} seed {seed}: {a.name}: {a.lhs} {a.relation} {a.rhs} fails")
            for k, v in rep.info.get("b_tally", {}).items():
                tally[k] += v
        summary[name] = tally
    print(json.dumps(summary, indent=2))


if __name__ == "__main__":
    main()

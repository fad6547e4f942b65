"""Print the Betti table of every catalog entry next to its recorded table."""

import argparse

from syzygy import betti_table, build, strand_invariants
from syzygy.catalog import STANDARD


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=list(STANDARD))
    ap.add_argument("--format", default="text", choices=["text", "markdown", "csv"])
    args = ap.parse_args()
    for name in args.names:
        E = build(name)
        T = betti_table(E.ideal)
        match = dict(T.nonzero()) == dict(E.expected) if E.expected is not None else None
        inv = strand_invariants(T)
        print(f"## {name}  [{E.category}, Delta={E.delta}, matches recorded table: {match}]")
        print(T.format(args.format))
        print(f"a={inv.a} b={inv.b} reg={inv.reg} depth={inv.depth}\n")


if __name__ == "__main__":
    main()

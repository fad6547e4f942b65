"""Project catalog varieties down to hypersurfaces and print how the linear strand shrinks."""

import argparse

from syzygy import build, iterate_inner, strand_invariants
from syzygy.config import env_seed


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=["rnc(5)", "veronese5", "elliptic_nc5", "scroll(2,2)"])
    ap.add_argument("--seed", type=int, default=None)
    ap.add_argument("--saturate", action="store_true")
    args = ap.parse_args()
    seed = env_seed() if args.seed is None else args.seed
    for name in args.names:
        seq = iterate_inner(build(name).ideal, seed, betti=True, saturate=args.saturate)
        print(f"{name} (seed {seed})")
        for k, T in enumerate(seq.tables):
            inv = strand_invariants(T)
            t = seq.steps[k - 1].t if k else "-"
            print(f"  step {k}: Delta={seq.deltas[k]} t={t} strand={T.strand(1, 1, T.ncols - 1)} a={inv.a} b={inv.b}")
        if seq.error:
            print(f"  stopped: {seq.error}")


if __name__ == "__main__":
    main()

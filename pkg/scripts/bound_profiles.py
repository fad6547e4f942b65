"""Print the minimal-degree and del Pezzo strand bounds for a range of codimensions."""

import argparse

from syzygy import bounds


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--emax", type=int, default=8)
    ap.add_argument("--b", type=int, help="add the conjectural refinement for this b")
    args = ap.parse_args()
    for e in range(1, args.emax + 1):
        b = args.b if args.b is not None and 1 <= args.b <= e + 1 else None
        print(f"e = {e}")
        print(bounds.bound_profile(e, b).to_text())
        game = [bounds.inheritance_game(e, p).to_dict() for p in range(1, e + 1)]
        print("  inheritance A'/B: " + " ".join(f"{g['Aprime']}/{g['B']}" for g in game) + "\n")


if __name__ == "__main__":
    main()

"""Command-line entry point: ``syzygy <subcommand> ...``.

Exit codes: 0 success, 1 a checked assertion failed, 2 usage or parse
error, 3 output truncated by a cap (table or certification incomplete).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bounds_mod
from .betti import betti_table, strand_invariants
from .catalog import BUILDERS, STANDARD, build
from .config import FORMATS, Config, parse_field
from .io import format_ideal_file, read_ideal
from .pei import ktilde_generators, pei_filtration
from .polynomial import ParseError
from .projection import SamplingError, iterate_inner, sample_smooth_point

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_TRUNCATED = 0, 1, 2, 3

CONVENTIONS = """\
conventions:
  Betti numbers are those of R/I: row q, column p holds beta_{p,q} = dim Tor_p(R/I, k)_{p+q}.
  regularity: reg(I) = max{q+1 : beta_{p,q}(R/I) != 0 for some p >= 1}, so
    a 2-regular ideal is one whose table has only rows 0 and 1.
  projection image: the image of an inner projection is the elimination ideal
    K_0(I) = I intersected with k[x1..xn], not saturated unless --saturate is given.
"""


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, seed=True, caps=True) -> None:
    p.add_argument("--field", help="GF <p>, GF(p) or QQ; overrides the file header (default GF 32003)")
    if caps:
        p.add_argument("--pmax", type=int, help="largest homological degree p (default: number of variables)")
        p.add_argument("--qmax", type=int,
                       help="largest row q (default: the certified regularity bound of the input)")
        p.add_argument("--degree-cap", type=int, default=None,
                       help="largest degree for PEI certification and generator listings (default 6)")
    if seed:
        p.add_argument("--seed", type=int, default=None, help="RNG seed (default: $SYZYGY_SEED, else 0)")
    p.add_argument("--json", action="store_true", help="machine-readable JSON output")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.RawDescriptionHelpFormatter
    parser = argparse.ArgumentParser(prog="syzygy", description="Betti tables, partial elimination ideals "
                                     "and inner projections of projective schemes.",
                                     epilog=CONVENTIONS, formatter_class=fmt)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="graded Betti table of R/I", epilog=CONVENTIONS, formatter_class=fmt)
    p.add_argument("ideal", help="ideal file, or a catalog name such as rnc(4)")
    p.add_argument("--format", choices=FORMATS, default="text")
    _common(p, seed=False)

    p = sub.add_parser("pei", help="partial elimination ideals at a point", epilog=CONVENTIONS,
                       formatter_class=fmt)
    p.add_argument("ideal", help="ideal file, or a catalog name")
    p.add_argument("--point", help="comma-separated coordinates; a smooth point is sampled if omitted")
    p.add_argument("--generators", action="store_true",
                   help="list minimal generators of each K~_i up to the degree cap")
    _common(p)

    p = sub.add_parser("project", help="iterate inner projections from sampled smooth points",
                       epilog=CONVENTIONS, formatter_class=fmt)
    p.add_argument("ideal", help="ideal file, or a catalog name")
    p.add_argument("--steps", type=int, help="number of projections (default: down to a hypersurface)")
    p.add_argument("--betti", action="store_true", help="attach the Betti table of every image")
    p.add_argument("--saturate", action="store_true", help="saturate each image ideal (default: K_0 as is)")
    _common(p, caps=False)

    p = sub.add_parser("bounds", help="linear-strand bound profiles for codimension e",
                       epilog=CONVENTIONS, formatter_class=fmt)
    p.add_argument("--e", type=int, required=True, help="codimension")
    p.add_argument("--b", type=int, help="also print the conjectural refinement for this b(X)")
    p.add_argument("--json", action="store_true")

    from .verify import SUITES

    p = sub.add_parser("verify", help="run theorem checks and write a report", epilog=CONVENTIONS,
                       formatter_class=fmt)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--ideal", help="check one ideal file instead of the catalog suite")
    p.add_argument("--category", choices=("Var", "CC1", "AlgSet"), default="Var",
                   help="category the --ideal input is asserted to belong to (default Var)")
    p.add_argument("--reducible", action="store_true", help="the --ideal input is not irreducible")
    p.add_argument("--points", type=int, default=5, help="sampled points per strand instance")
    p.add_argument("--workers", type=int, default=1, help="worker threads; output order is unaffected")
    p.add_argument("--report", help="write the report to a .json or .md path")
    p.add_argument("--saturate", action="store_true", help=argparse.SUPPRESS)
    _common(p)

    p = sub.add_parser("catalog", help="list or emit catalog entries")
    csub = p.add_subparsers(dest="action", required=True)
    c = csub.add_parser("list")
    c.add_argument("--json", action="store_true")
    c = csub.add_parser("emit")
    c.add_argument("name", help="entry name, e.g. rnc(4) or elliptic_nc5")
    c.add_argument("--field", help="GF <p> or QQ")
    return parser


def _config(args) -> Config:
    return Config.from_env(
        characteristic=parse_field(args.field).characteristic if getattr(args, "field", None) else None,
        pmax=getattr(args, "pmax", None),
        qmax=getattr(args, "qmax", None),
        degree_cap=getattr(args, "degree_cap", None),
        seed=getattr(args, "seed", None),
        format=getattr(args, "format", None) or ("json" if getattr(args, "json", False) else None),
        saturate=getattr(args, "saturate", None),
    )


def _load(spec: str, args):
    field = parse_field(args.field) if getattr(args, "field", None) else None
    path = Path(spec)
    if path.exists():
        return read_ideal(path, field), path.stem
    try:
        return build(spec, field=field).ideal, spec
    except (KeyError, ValueError):
        raise UsageError(f"{spec}: no such file or catalog entry") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_betti(args) -> int:
    cfg = _config(args)
    ideal, name = _load(args.ideal, args)
    T = betti_table(ideal, cfg.pmax, cfg.qmax)
    inv = strand_invariants(T) if T.complete else None
    if args.json or cfg.format == "json":
        d = T.to_dict()
        d.update({"instance": name, "invariants": inv.to_dict() if inv else None})
        _emit(d)
    else:
        print(T.format(cfg.format))
        if cfg.format == "text":
            if inv:
                print(f"a={inv.a} b={inv.b} reg={inv.reg} pd={inv.pd} depth={inv.depth}")
            else:
                print(f"truncated: computed p <= {T.pmax}, q <= {T.qmax}; a complete table needs "
                      f"p <= {T.nvars} and q <= {T.reg_bound}")
    return EXIT_OK if T.complete else EXIT_TRUNCATED


def _parse_point(text: str, F):
    try:
        return tuple(F(int(x)) for x in text.split(","))
    except ValueError:
        raise ParseError(f"bad point {text!r}", column=1) from None


def cmd_pei(args) -> int:
    cfg = _config(args)
    ideal, name = _load(args.ideal, args)
    F = ideal.field
    if args.point:
        point = _parse_point(args.point, F)
        if len(point) != ideal.ring.nvars:
            raise UsageError(f"point needs {ideal.ring.nvars} coordinates")
    else:
        point = sample_smooth_point(ideal, cfg.seed, cfg.budget)
    filt = pei_filtration(ideal, point)
    ok = filt.certify(cfg.degree_cap)
    failures = filt.exact_sequence_failures(cfg.degree_cap)
    pres = [ktilde_generators(filt, i, cfg.degree_cap) for i in range(filt.s + 1)] if args.generators else []
    if args.json:
        d = filt.to_dict()
        d.update({"instance": name, "degree_cap": cfg.degree_cap, "exact_sequence_failures": failures})
        if pres:
            d["ktilde_generators"] = [
                {"level": pr.level, "truncated": pr.truncated,
                 "generators": [{"degree": m, "coefficients": [c.to_str() for c in parts]} for m, parts in pr.generators]}
                for pr in pres]
        _emit(d)
    else:
        d = filt.to_dict()
        print(f"point {d['point']}  s={filt.s}  t={filt.t}  codim={filt.codim}"
              + ("  (outer: K_infinity = (1))" if filt.outer else ""))
        for i, gens in enumerate(d["levels"]):
            status = "certified" if not filt.certified.get(i) else f"MISMATCH in degrees {filt.certified[i]}"
            print(f"K_{i}: {status}")
            for g in gens:
                print(f"  {g}")
        print("exact sequences: " + ("ok" if not failures else f"{len(failures)} failures"))
        for pr in pres:
            print(f"K~_{pr.level} generators (degree <= {pr.cap}{', truncated' if pr.truncated else ''}):")
            for m, parts in pr.generators:
                print(f"  degree {m}: " + " + ".join(f"x0^{k}*({c.to_str()})" for k, c in enumerate(parts) if c.terms))
    if not ok or failures:
        return EXIT_FAIL
    return EXIT_OK


def cmd_project(args) -> int:
    cfg = _config(args)
    ideal, name = _load(args.ideal, args)
    seq = iterate_inner(ideal, cfg.seed, args.steps, betti=args.betti, saturate=cfg.saturate, budget=cfg.budget)
    head = {"instance": name, "seed": cfg.seed, "saturate": cfg.saturate, "delta": seq.deltas[0]}
    if args.betti and seq.tables:
        head["betti"] = seq.tables[0].to_dict()
    print(json.dumps(head, sort_keys=True))
    for line in seq.trace_lines():
        print(line)
    if seq.error:
        print(json.dumps({"error": seq.error}, sort_keys=True))
        return EXIT_FAIL
    if args.betti and any(not T.complete for T in seq.tables):
        return EXIT_TRUNCATED
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.e < 1:
        raise UsageError("--e must be positive")
    prof = bounds_mod.bound_profile(args.e, args.b)
    if args.json:
        _emit(prof.to_dict())
    else:
        print(prof.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import verify as V

    cfg = _config(args)
    if args.ideal:
        ideal, name = _load(args.ideal, args)
        from .catalog import CatalogEntry

        E = CatalogEntry(name, (), ideal, not args.reducible, args.category, None)
        reports = [V.check_extremal(E, cfg.seed), V.check_kp1(E, cfg.seed)]
        if ideal.hilbert_data().degree - ideal.hilbert_data().codim - 1 >= 1:
            reports.append(V.check_next_extremal(E, cfg.seed))
        for k in range(args.points):
            reports.append(V.check_strand(E, seed=cfg.seed, check_id=f"strand/{name}/{k}"))
        reports += [V.check_pei(E, cfg.seed, cap=cfg.degree_cap), V.check_reg_depth(E, seed=cfg.seed),
                    V.explore_ab(E, cfg.seed)]
        reports.sort(key=lambda r: r.check_id)
        result = V.SuiteResult(f"ideal:{name}", cfg.seed, reports)
    else:
        result = V.run_suite(args.suite, cfg.seed, points=args.points, workers=args.workers)
    text = result.to_json()
    if args.report:
        path = Path(args.report)
        path.write_text(result.to_markdown() if path.suffix in (".md", ".markdown") else text)
    if args.json:
        sys.stdout.write(text)
    else:
        s = result.summary()
        print(f"suite {result.suite} seed {result.seed}: " + ", ".join(f"{k} {v}" for k, v in s.items()))
        for r in result.reports:
            if r.failed:
                print(f"FAIL {r.check_id}")
                for a in r.assertions:
                    if a.verdict == V.FAIL:
                        print(f"  {a.name}: {a.lhs} {a.relation} {a.rhs} is false")
                if r.reproduce:
                    print(f"  reproduce with seed {r.reproduce['seed']}:")
                    for line in r.reproduce["ideal_file"].splitlines():
                        print(f"    {line}")
    return EXIT_FAIL if result.failed else EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        entries = [build(n) for n in STANDARD]
        if args.json:
            _emit([{"name": E.name, "category": E.category, "irreducible": E.irreducible, "delta": E.delta,
                    "codim": E.codim, "source": E.source} for E in entries]
                  + [{"builder": b} for b in sorted(BUILDERS)])
        else:
            for E in entries:
                print(f"{E.name:24s} {E.category:6s} codim {E.codim}  Delta {E.delta}")
            print("builders: " + ", ".join(sorted(BUILDERS)))
        return EXIT_OK
    field = parse_field(args.field) if args.field else None
    try:
        E = build(args.name, field=field)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"{args.name}: {exc}") from None
    sys.stdout.write(format_ideal_file(E.ideal, comment=f"catalog entry {E.name}"))
    return EXIT_OK


COMMANDS = {"betti": cmd_betti, "pei": cmd_pei, "project": cmd_project, "bounds": cmd_bounds,
            "verify": cmd_verify, "catalog": cmd_catalog}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SamplingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

"""``catalan-cf`` command-line front end."""
from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import config
from .contfrac import jfraction_series, named_cf
from .gamma import b_polynomial, gamma_decompose, gamma_via_perms, mfs_orbit
from .pathdiag import (format_path, path_sum, phi1, phi2, phi3, phi_fv, psi_fv)
from .patternclass import (PatternClass, class_polynomial, format_word, generate_words,
                           insertion_decode, insertion_encode, parse_word)
from .permstats import Boundary, all_statistics, as_perm, format_perm
from .polyring import VARS
from .verify import THEOREMS, table, verify


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _parse_set(items: list[str]) -> dict[str, int]:
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in VARS:
            raise SystemExit(f"--set expects var=int with var in {','.join(VARS)}, got {item!r}")
        out[name] = int(value)
    return out


def cmd_expand(args) -> int:
    spec = dict(config.active().specialize)
    spec.update(_parse_set(args.set))
    J = named_cf(args.cf)
    if spec:
        J = J.specialize(spec)
    series = jfraction_series(J, args.order)
    if args.csv:
        w = _csv_writer()
        w.writerow(["n", "coeff", *VARS])
        for n, c in enumerate(series.coeffs):
            for exps, coeff in c.terms():
                w.writerow([n, coeff, *exps])
    elif args.json:
        _emit_json({"cf": args.cf, "order": args.order, "specialize": spec,
                    "coefficients": [c.to_json() for c in series.coeffs]})
    else:
        for n, c in enumerate(series.coeffs):
            print(f"{n}: {c}")
    return 0


def cmd_stats(args) -> int:
    stats = all_statistics(as_perm(args.perm), Boundary.parse(args.boundary))
    if args.json:
        _emit_json(stats)
    else:
        for k, val in stats.items():
            print(f"{k}: {val}")
    return 0


def cmd_enumerate(args) -> int:
    c = PatternClass.parse(args.cls)
    if args.poly:
        poly = class_polynomial(args.n, c)
        if args.json:
            _emit_json({"class": c.value, "n": args.n, "polynomial": poly.to_json()})
        else:
            print(poly)
        return 0
    rows = [(format_word(wd), format_perm(s)) for wd, s in generate_words(args.n + c.info.shift, c)]
    if args.json:
        _emit_json({"class": c.value, "n": args.n, "count": len(rows),
                    "members": [{"word": wd, "perm": s} for wd, s in rows]})
    elif args.csv:
        w = _csv_writer()
        w.writerow(["perm", "word"])
        for wd, s in rows:
            w.writerow([s, wd])
    else:
        for wd, s in rows:
            print(s, wd)
    return 0


def cmd_encode(args) -> int:
    print(format_word(insertion_encode(as_perm(args.perm), modified=args.modified)))
    return 0


def cmd_decode(args) -> int:
    print(format_perm(insertion_decode(parse_word(args.word), modified=args.modified)))
    return 0


_MAPS = {"phi1": phi1, "phi2": phi2, "phi3": phi3, "psi": psi_fv, "phi": phi_fv}


def cmd_biject(args) -> int:
    sigma = as_perm(args.perm)
    image = _MAPS[args.map](sigma)
    out = {"perm": format_perm(sigma), "map": args.map, "path": format_path(image.path)}
    if args.map in ("psi", "phi"):
        out["p"] = list(image.p)
    else:
        out["xi"] = list(image.xi)
        out["weight"] = str(image.weight())
    if args.json:
        _emit_json(out)
    else:
        for k, val in out.items():
            print(f"{k}: {val}")
    return 0


def cmd_pathsum(args) -> int:
    poly = path_sum(args.n, args.type)
    if args.json:
        _emit_json({"type": args.type, "n": args.n, "polynomial": poly.to_json()})
    else:
        print(poly)
    return 0


def cmd_gamma(args) -> int:
    out: dict = {"n": args.n}
    if args.via in ("cf", "both"):
        g = gamma_decompose(b_polynomial(args.n))
        out["cf"] = [str(x) for x in g.gammas]
        out["form"] = g.render()
    if args.via in ("perms", "both"):
        out["perms"] = [str(gamma_via_perms(args.n + 1, k)) for k in range(args.n // 2 + 1)]
    if args.via == "both":
        out["agree"] = out["cf"] == out["perms"]
    if args.json:
        _emit_json(out)
    else:
        for k, val in out.items():
            print(f"{k}: {val}")
    return 0 if out.get("agree", True) else 1


def cmd_orbit(args) -> int:
    orbit = mfs_orbit(as_perm(args.perm))
    members = sorted(orbit.members)
    if args.json:
        _emit_json({"members": [format_perm(s) for s in members],
                    "representative": format_perm(orbit.representative)})
    else:
        for s in members:
            print(format_perm(s))
        print("representative:", format_perm(orbit.representative))
    return 0


def _run_one(job: tuple[str, int | None, str | None]) -> dict:
    theorem, nmax, config_path = job
    if config_path:
        config.set_active(config.Config.load(config_path))
    return verify(theorem, nmax).to_json()


def cmd_verify(args) -> int:
    theorems = list(THEOREMS) if args.all else [args.theorem.lower()]
    jobs = [(th, args.nmax, args.config) for th in theorems]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_one, jobs))  # map keeps submission order
    else:
        reports = [_run_one(j) for j in jobs]
    ok = all(r["status"] == "pass" for r in reports)
    for r in reports:
        line = f"{r['theorem']:<13} n={r['n_range'][0]}..{r['n_range'][1]:<3} {r['status'].upper()}"
        if r["status"] != "pass":
            detail = r.get("error") or next(
                (c.get("diff") for c in r["cells"] if c["status"] != "pass"), "")
            line += f"  {detail}"
        print(line)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"status": "pass" if ok else "fail", "reports": reports},
                      fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0 if ok else 1


def cmd_table(args) -> int:
    rows = table(args.which, args.nmax)
    if args.json:
        _emit_json({"which": args.which, "rows": [
            {"n": int(r.split(",", 1)[0]), "value": r.split(",", 1)[1]} for r in rows]})
    else:
        print("\n".join(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="catalan-cf",
                                 description="(p,q,t)-Catalan continued fractions and pattern classes")
    ap.add_argument("--config", help="INI file with [caps], [nmax] and [specialize] sections")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(sp, csv_ok=True):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true")
        if csv_ok:
            g.add_argument("--csv", action="store_true")

    sp = sub.add_parser("expand", help="Taylor coefficients of a named J-fraction")
    sp.add_argument("--cf", required=True, choices=["typeA", "typeB", "typeC"])
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--set", action="append", metavar="VAR=INT")
    fmt(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("stats", help="all statistics of a permutation")
    sp.add_argument("--perm", required=True)
    sp.add_argument("--boundary", default="zero", choices=["zero", "inf", "nplus1"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("enumerate", help="members or weighted enumerator of a class")
    sp.add_argument("--class", dest="cls", required=True, choices=["a321", "a312", "b4"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--poly", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_enumerate)

    for name, func, arg in (("encode", cmd_encode, "--perm"), ("decode", cmd_decode, "--word")):
        sp = sub.add_parser(name, help=f"insertion {name}")
        sp.add_argument(arg, required=True)
        sp.add_argument("--modified", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("biject", help="apply a path bijection")
    sp.add_argument("--map", required=True, choices=sorted(_MAPS))
    sp.add_argument("--perm", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_biject)

    sp = sub.add_parser("pathsum", help="weight sum over all path diagrams")
    sp.add_argument("--type", required=True, choices=["a", "b", "c"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_pathsum)

    sp = sub.add_parser("gamma", help="gamma coefficients of the Type B polynomial")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--via", default="both", choices=["cf", "perms", "both"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_gamma)

    sp = sub.add_parser("orbit", help="valley-hopping orbit of a permutation")
    sp.add_argument("--perm", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("verify", help="run verification suites")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--theorem", choices=THEOREMS, type=str.lower)
    sp.add_argument("--nmax", type=int)
    sp.add_argument("--json", metavar="PATH", help="write the report here")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="golden tables")
    sp.add_argument("--which", required=True, choices=["barc", "tildec", "bexpansion"], type=str.lower)
    sp.add_argument("--nmax", type=int, default=5)
    fmt(sp)
    sp.set_defaults(func=cmd_table)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.config:
        config.set_active(config.Config.load(args.config))
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

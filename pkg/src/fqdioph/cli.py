"""Command-line interface.  Exit codes: 0 ok, 1 property failure, 2 usage error."""

import argparse
from concurrent.futures import ProcessPoolExecutor
import json
import os
import random
import sys

from . import charsum, checks, constructions, cyclotomic, diophantine, oracle, polyfp
from ._kernels import BACKEND
from .errors import (ConstructionError, DistinctnessError, DomainError, HypothesisError,
                     ParameterError, SizePolicyError)
from .ffcore import is_prime, make_field, parse_field, prime_power

OK, FAIL, USAGE = 0, 1, 2
USAGE_ERRORS = (ParameterError, DomainError, HypothesisError, DistinctnessError,
                SizePolicyError, ConstructionError)


class UsageError(Exception):
    pass


def _emit(obj, args):
    if getattr(args, "json", False):
        print(json.dumps(obj, sort_keys=True))
    else:
        print(json.dumps(obj, indent=2, sort_keys=True))


def _int_list(text):
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# -- subcommands -------------------------------------------------------------------------

def cmd_construct(args):
    F = parse_field(args.field)
    if F.q <= 7:
        raise UsageError("construct needs q > 7")
    rep = constructions.construct(F, args.method, args.variant, args.m, rng_seed=args.seed)
    _emit(rep.to_json(), args)
    return FAIL if rep.bound_failed else OK


def cmd_verify(args):
    F = parse_field(args.field)
    report = diophantine.verify_tuple(F, _int_list(args.elements))
    _emit(report.to_json(F), args)
    return OK if report.ok else FAIL


def cmd_exact_m(args):
    F = parse_field(args.field)
    res = oracle.exact_M(F, max_q=args.max_q, cache_path=args.cache)
    out = res.to_json(F)
    if not diophantine.verify_tuple(F, res.witness).ok:
        _emit(out, args)
        return FAIL
    _emit(out, args)
    return OK


def cmd_cyclo(args):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.mod is None:
        coeffs = cyclotomic.cyclo_int(args.n)
    else:
        if args.mod < 2 or not is_prime(args.mod):
            raise UsageError("--mod must be a prime")
        coeffs = cyclotomic.cyclo_mod(args.mod, args.n)
    print(" ".join(str(c) for c in coeffs))
    return OK


def cmd_field_info(args):
    F = parse_field(args.field)
    info = {
        "field": F.ident,
        "p": F.p,
        "n": F.n,
        "q": F.q,
        "modulus": list(F.modulus),
        "modulus_str": polyfp.format_poly(F.modulus, "t"),
        "q_mod_8": F.q % 8,
        "group_order_factors": [[r, e] for r, e in F.group_order_factors],
        "backend": BACKEND,
    }
    if F.q > 7:
        for v in constructions.VARIANTS:
            Qv, Qf = constructions.compute_Q(F.q, F.p, v)
            info[f"Q_{v}"] = Qv
            info[f"Q_floor_{v}"] = Qf
    _emit(info, args)
    return OK


def _signs(text):
    out = []
    for t in text.replace(" ", "").split(","):
        if t in ("+", "+1", "1"):
            out.append(1)
        elif t in ("-", "-1"):
            out.append(-1)
        else:
            raise UsageError(f"bad sign {t!r}; use + or -")
    return out


def cmd_charsum(args):
    F = parse_field(args.field)
    if args.kind == "pattern":
        if not args.shifts or not args.signs:
            raise UsageError("pattern needs --shifts and --signs")
        res = charsum.pattern_count(F, _int_list(args.shifts), _signs(args.signs))
        res.update(field=F.ident, q=F.q)
        _emit(res, args)
        return OK if res["bound_ok"] else FAIL
    if args.poly:
        polys = [tuple(_int_list(args.poly))]
    else:
        rng = random.Random(args.seed)
        polys = [checks.random_squarefree_monic(rng, F.p) for _ in range(args.trials)]
    results, all_ok = [], True
    for f in polys:
        r = charsum.weil_check(F, f)
        all_ok &= r.within_bound
        results.append({"poly": list(polyfp.trim(f, F.p)), "sum": r.sum, "degree": r.degree,
                        "distinct_roots": r.distinct_roots, "bound": r.bound,
                        "within_bound": r.within_bound})
    _emit({"field": F.ident, "q": F.q, "ok": all_ok, "results": results}, args)
    return OK if all_ok else FAIL


def cmd_check(args):
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    if any(n not in checks.SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from "
                         + ", ".join(list(checks.SUITES) + ["all"]))
    all_ok = True
    for name in names:
        kw = {"seed": args.seed} if name in checks.SEEDED else {}
        for label, ok, detail in checks.SUITES[name](**kw):
            all_ok &= ok
            line = f"{'PASS' if ok else 'FAIL'} [{name}] {label}"
            if not ok:
                line += f"  e.g. {detail}"
            print(line, flush=True)
    return OK if all_ok else FAIL


# -- scan --------------------------------------------------------------------------------

def scan_fields(p_list, n_min, n_max, q_max, residues, primes_up_to=0):
    fields = set()
    for p in p_list:
        for n in range(n_min, n_max + 1):
            q = p ** n
            if q > q_max:
                break
            if q > 7 and q % 8 in residues:
                fields.add((p, n))
    for q in range(11, min(primes_up_to, q_max) + 1, 2):
        if q % 8 in residues and is_prime(q):
            fields.add((q, 1))
    return sorted(fields, key=lambda pn: (pn[0] ** pn[1], pn[0]))


def scan_one(job):
    p, n, variant, seed = job
    F = make_field(p, n)
    rep = constructions.construct_auto(F, variant, rng_seed=seed)
    out = rep.to_json()
    ok = diophantine.verify_tuple(F, rep.tuple).ok and rep.certificate.recheck(F, rep.tuple)
    out["verified"] = ok
    out["vacuous"] = rep.Q_floor <= 0
    out["failure"] = (not ok) or rep.bound_failed
    return out


def _read_resume(path):
    """Completed report lines from an interrupted run (summary/marker lines dropped)."""
    done = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if "summary" in rec or "resume" in rec:
                continue
            done.append(rec)
    return done


def cmd_scan(args):
    p_list = _int_list(args.p) if args.p else []
    if not p_list and not args.primes_up_to:
        raise UsageError("scan needs a nonempty --p list (or --primes-up-to)")
    for p in p_list:
        if p < 3 or not is_prime(p):
            raise UsageError(f"{p} is not an odd prime")
    residues = set(_int_list(args.residues))
    if not residues or not residues <= {1, 3, 5, 7}:
        raise UsageError("--residues must be a nonempty subset of 1,3,5,7")
    if args.n_min < 1 or args.n_max < args.n_min:
        raise UsageError("bad n range")
    fields = scan_fields(p_list, args.n_min, args.n_max, args.q_max, residues,
                         args.primes_up_to)
    done = []
    if args.resume and args.out and os.path.exists(args.out):
        done = _read_resume(args.out)
        expected = [make_field(p, n).ident for p, n in fields[:len(done)]]
        if [r["field"] for r in done] != expected:
            raise UsageError("resume file does not match this configuration")
    records = list(done)
    fh = open(args.out, "w") if args.out else sys.stdout
    try:
        for rec in done:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
        jobs = [(p, n, args.variant, args.seed) for p, n in fields[len(done):]]
        try:
            if args.workers > 1:
                with ProcessPoolExecutor(args.workers) as pool:
                    for rec in pool.map(scan_one, jobs, chunksize=4):
                        records.append(rec)
                        fh.write(json.dumps(rec, sort_keys=True) + "\n")
                        fh.flush()
            else:
                for job in jobs:
                    rec = scan_one(job)
                    records.append(rec)
                    fh.write(json.dumps(rec, sort_keys=True) + "\n")
                    fh.flush()
        except KeyboardInterrupt:
            fh.write(json.dumps({"resume": {"completed": len(records),
                                            "total": len(fields)}}) + "\n")
            return 130
        summary = {
            "total": len(records),
            "bound_satisfied": sum(r["bound_satisfied"] for r in records),
            "vacuous": sum(r["vacuous"] for r in records),
            "failures": sum(r["failure"] for r in records),
        }
        fh.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
    finally:
        if fh is not sys.stdout:
            fh.close()
    if args.out:
        print(json.dumps({"summary": summary}, sort_keys=True))
    return OK if summary["failures"] == 0 else FAIL


# -- parser ------------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--json", action="store_true", help="compact one-line JSON")

    ap = argparse.ArgumentParser(prog="fqdioph", parents=[common],
                                 description="Diophantine tuples over finite fields")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a certified tuple")
    c.add_argument("--field", required=True)
    c.add_argument("--method", default="auto",
                   choices=["auto", "case1", "case2", "mod8-3", "subfield"])
    c.add_argument("--variant", default="thm1", choices=list(constructions.VARIANTS))
    c.add_argument("--m", type=int, default=None)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="verify a tuple, emit witnesses")
    v.add_argument("--field", required=True)
    v.add_argument("--elements", required=True, help="comma-separated element codes")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("exact-m", parents=[common], help="M(q) by max-clique search")
    e.add_argument("--field", required=True)
    e.add_argument("--max-q", type=int, default=oracle.DEFAULT_MAX_Q)
    e.add_argument("--cache", default=None, help="JSON Lines cache file")
    e.set_defaults(func=cmd_exact_m)

    s = sub.add_parser("scan", parents=[common], help="batch construct over many fields")
    s.add_argument("--p", default="", help="comma-separated odd primes")
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--n-max", type=int, default=64)
    s.add_argument("--q-max", type=int, default=10 ** 5)
    s.add_argument("--primes-up-to", type=int, default=0,
                   help="also scan every prime field up to this bound")
    s.add_argument("--residues", default="1,5,7", help="allowed q mod 8")
    s.add_argument("--variant", default="thm1", choices=list(constructions.VARIANTS))
    s.add_argument("--out", default=None)
    s.add_argument("--resume", action="store_true", help="continue an interrupted --out file")
    s.set_defaults(func=cmd_scan)

    k = sub.add_parser("check", parents=[common], help="run a property suite")
    k.add_argument("suite", help="cyclo, weil, pattern, bounds, maximal, ncount or all")
    k.set_defaults(func=cmd_check)

    y = sub.add_parser("cyclo", parents=[common], help="print Phi_n coefficients, low to high")
    y.add_argument("--n", type=int, required=True)
    y.add_argument("--mod", type=int, default=None)
    y.set_defaults(func=cmd_cyclo)

    h = sub.add_parser("charsum", parents=[common], help="character sums and their bounds")
    h.add_argument("kind", choices=["weil", "pattern"])
    h.add_argument("--field", required=True)
    h.add_argument("--poly", default=None, help="coefficients c0,c1,... (monic)")
    h.add_argument("--trials", type=int, default=10)
    h.add_argument("--shifts", default=None)
    h.add_argument("--signs", default=None, help="e.g. +,-,+")
    h.set_defaults(func=cmd_charsum)

    f = sub.add_parser("field-info", parents=[common], help="describe a field")
    f.add_argument("--field", required=True)
    f.set_defaults(func=cmd_field_info)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        return args.func(args)
    except (UsageError, *USAGE_ERRORS) as exc:
        print(f"fqdioph: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

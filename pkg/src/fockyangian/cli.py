"""Command line front end.

All input and output is JSON; coefficients are exact strings (rationals) or
term lists ``[{"t", "c", "num", "den"}]`` (polynomials in t, c).  Exit codes:
0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import List, Optional

from . import mutations
from .affine import AffineYangianAction
from .coeff import Parameters, coeff_to_json, parse_coeff, to_fraction
from .combinatorics import ChargedMultipartition, charge_vectors, fock_basis, make_partition
from .daha import DahaConfig, check_daha_relations
from .generators import parse_generator
from .verify import (
    RelationCheck,
    affine_relation_checks,
    finite_relation_checks,
    multi_vector_from_json,
    multi_vector_json,
    mutation_sensitivity,
    node0_relation_checks,
    run_all,
    run_checks,
    summarize,
)
from .wedge import GlobalConfig, charge_compose, charge_decompose


class UsageError(Exception):
    pass


def _ints(text: str) -> List[int]:
    text = text.strip()
    return [int(x) for x in text.split(",")] if text else []


def _partition(text: str):
    return make_partition(_ints(text))


def _components(text: str):
    """``"2,1;;1"`` -> ((2,1), (), (1,))."""
    return tuple(_partition(part) for part in text.split(";"))


def _params(args) -> Parameters:
    t = None if args.t is None else to_fraction(args.t)
    c = None if args.c is None else to_fraction(args.c)
    return Parameters(t, c)


def _nu(args, L: int):
    if not getattr(args, "nu", None):
        return ()
    values = tuple(parse_coeff(x) for x in args.nu.split(","))
    if len(values) != L:
        raise UsageError(f"--nu needs {L} values, got {len(values)}")
    return tuple(v.constant_value() if v.is_constant() else v for v in values)


def _charges(args) -> tuple:
    if args.charges is None:
        raise UsageError("--charges is required")
    charges = tuple(_ints(args.charges))
    if len(charges) != args.L:
        raise UsageError(f"--charges needs {args.L} entries for L={args.L}")
    return charges


def _emit(data, path: Optional[str] = None):
    text = json.dumps(data, indent=2, sort_keys=False)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _common(p: argparse.ArgumentParser, charges=True):
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--L", type=int, default=1)
    if charges:
        p.add_argument("--charges", help="comma separated multicharge, e.g. -1,1")
    p.add_argument("--t", help="rational value for t (symbolic if omitted)")
    p.add_argument("--c", help="rational value for c (symbolic if omitted)")
    p.add_argument("--nu", help="comma separated nu(1..L), e.g. 0,1/2 or t/3,c")


# subcommands --------------------------------------------------------------------


def cmd_bijection(args):
    N, L = args.N, args.L
    if args.partition is not None:
        if args.M is None:
            raise UsageError("--partition needs --M")
        cmp = charge_decompose(_partition(args.partition), GlobalConfig(N, L, args.M))
        _emit(cmp.to_json(), args.json)
    elif args.components is not None:
        comps = _components(args.components)
        if args.charges is None:
            raise UsageError("--components needs --charges")
        lam, M = charge_compose(ChargedMultipartition(comps, tuple(_ints(args.charges))), N, L)
        _emit({"partition": list(lam), "M": M}, args.json)
    else:
        raise UsageError("give --partition (with --M) or --components (with --charges)")
    return 0


def _read_vector(args, L: int):
    if args.vacuum:
        charges = _charges(args)
        return {ChargedMultipartition(tuple(() for _ in charges), charges): 1}
    if args.input:
        with open(args.input) as fh:
            data = json.load(fh)
    elif args.vector:
        data = json.loads(args.vector)
    else:
        raise UsageError("give --vacuum, --vector JSON or --input FILE")
    if isinstance(data, dict):
        data = data.get("vector", [])
    return multi_vector_from_json(data)


def cmd_act(args):
    params = _params(args)
    model = AffineYangianAction(args.N, args.L, _nu(args, args.L), params, node0=args.node0)
    vec = _read_vector(args, args.L)
    for text in args.gen:
        g = parse_generator(text, args.N)
        vec = _act_multi(model, g, vec)
    _emit(multi_vector_json(vec), args.json)
    return 0


def _act_multi(model, g, vec):
    out = {}
    for cmp, c in vec.items():
        for key, v in model.act_multi(g, {cmp: 1}).items():
            out[key] = out.get(key, 0) + c * v
    return {k: v for k, v in out.items() if v}


def cmd_matrix(args):
    params = _params(args)
    charges = _charges(args)
    model = AffineYangianAction(args.N, args.L, _nu(args, args.L), params, node0=args.node0)
    g = parse_generator(args.gen, args.N)
    cols = fock_basis(charges, args.max_boxes)
    rows = fock_basis(charges, args.max_boxes + 1)
    index = {b: i for i, b in enumerate(rows)}
    entries = []
    for j, b in enumerate(cols):
        image = model.act_multi(g, {b: 1})
        for key in sorted(image, key=lambda k: index.get(k, len(rows))):
            if key not in index:
                raise UsageError("image left the row basis; this should not happen")
            entries.append({"row": index[key], "col": j, "coeff": coeff_to_json(image[key])})
    _emit(
        {
            "generator": g.label(),
            "rows": [b.to_json() for b in rows],
            "cols": [b.to_json() for b in cols],
            "entries": entries,
        },
        args.json,
    )
    return 0


def cmd_verify_daha(args):
    params = _params(args)
    L = args.L
    nu = _nu(args, L)
    out = {"checks": []}
    ok = True
    for n in range(1, args.n + 1):
        start = time.perf_counter()
        rep = check_daha_relations(DahaConfig(n, L, nu or None), args.bound, params)
        rep["n"] = n
        rep["millis"] = round((time.perf_counter() - start) * 1000)
        ok &= rep["status"] == "pass"
        out["checks"].append(rep)
    out["status"] = "pass" if ok else "fail"
    _emit(out, args.json)
    return 0 if ok else 1


def _jobs(args) -> int:
    return args.jobs if args.jobs else (os.cpu_count() or 1)


def cmd_verify(args):
    names = args.mutation or []
    if args.mutation_sweep:
        found = mutation_sensitivity(args.profile, jobs=_jobs(args))
        rows = {
            name: (None if rep is None else {"id": rep["id"], "params": rep["params"], "status": rep["status"]})
            for name, rep in found.items()
        }
        _emit({"mutations": rows, "all_caught": all(v is not None for v in rows.values())}, args.json)
        return 0 if all(v is not None for v in rows.values()) else 1
    with mutations.seeded(*names):
        result = run_all(args.profile, jobs=_jobs(args), timing=not args.no_timing)
    if names:
        result["mutations"] = sorted(names)
    _emit(result, args.json)
    if args.json:
        s = result["summary"]
        print(f"{s['status']}: {s['total']} checks", file=sys.stderr)
    return 0 if result["summary"]["status"] == "pass" else 1


def cmd_verify_affine(args):
    charges = _charges(args)
    mode = "sampled" if args.sampled else "symbolic"
    nu = _nu(args, args.L)
    N, L, B = args.N, args.L, args.max_boxes
    checks = finite_relation_checks(N, L, charges, B, mode=mode, nu=nu, max_mode=args.modes)
    checks += node0_relation_checks(N, L, charges, B, mode=mode, nu=nu, max_mode=args.modes)
    checks += affine_relation_checks(N, L, charges, B, mode=mode, nu=nu, max_mode=args.modes)
    reports = run_checks(checks, jobs=_jobs(args), timing=not args.no_timing)
    families = {}
    for rep in reports:
        fam = families.setdefault(rep["id"], {"status": "pass", "checks": 0, "millis": 0})
        fam["checks"] += 1
        if rep["millis"] is not None:
            fam["millis"] += rep["millis"]
        if rep["status"] != "pass":
            fam["status"] = rep["status"]
            fam.setdefault("counterexample", {"params": rep["params"], **rep["counterexample"]})
    order = sorted(families, key=lambda k: int(k[1:]))
    out = {"families": {k: families[k] for k in order}, "summary": summarize(reports)}
    _emit(out, args.json)
    return 0 if out["summary"]["status"] == "pass" else 1


def calibration_candidates(L: int, alphas, gammas):
    """``nu(b) = alpha (b - 1) + gamma``, simplest (smallest |alpha|, |gamma|) first."""
    cands = []
    for a in alphas:
        for g in gammas:
            cands.append((abs(a) + abs(g), abs(a), tuple(a * (b - 1) + g for b in range(1, L + 1))))
    cands.sort(key=lambda x: (x[0], x[1], x[2]))
    seen, out = set(), []
    for *_, nu in cands:
        if nu not in seen:
            seen.add(nu)
            out.append(nu)
    return out


def _calibration_suite(N, L, charges, nu) -> List[RelationCheck]:
    checks = [RelationCheck("STAB", N=N, L=L, charges=charges, max_boxes=2, nu=nu)]
    checks += affine_relation_checks(N, L, charges, 2, mode="sampled", nu=nu)
    return checks


def cmd_calibrate_nu(args):
    charges = _charges(args)
    grid = [Fraction(x) for x in ("0", "1/2", "-1/2", "1", "-1")]
    results = []
    chosen = None
    for nu in calibration_candidates(args.L, grid, grid):
        reports = run_checks(_calibration_suite(args.N, args.L, charges, nu), timing=False, stop_on_failure=True)
        ok = all(r["status"] == "pass" for r in reports)
        results.append({"nu": [str(x) for x in nu], "status": "pass" if ok else "fail"})
        if ok and chosen is None:
            chosen = nu
            if not args.all:
                break
    out = {"chosen": None if chosen is None else [str(x) for x in chosen], "tried": results}
    _emit(out, args.json)
    return 0 if chosen is not None else 1


def cmd_dump_basis(args):
    if args.charges is not None:
        charge_list = [tuple(_ints(args.charges))]
    elif args.M is not None:
        charge_list = sorted(charge_vectors(args.M, args.L, args.spread))
    else:
        raise UsageError("give --charges or --M")
    rows = []
    for charges in charge_list:
        if len(charges) != args.L:
            raise UsageError(f"--charges needs {args.L} entries")
        for cmp in fock_basis(charges, args.max_boxes):
            lam, M = charge_compose(cmp, args.N, args.L)
            rows.append(dict(cmp.to_json(), partition=list(lam), M=M))
    _emit(rows, args.json)
    return 0


# parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fockyangian", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bijection", help="partition <-> charged multipartition")
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--L", type=int, default=1)
    p.add_argument("--partition", help="e.g. 2,1 (empty string for the empty partition)")
    p.add_argument("--M", type=int)
    p.add_argument("--components", help="components separated by ';', e.g. '2,1;;1'")
    p.add_argument("--charges")
    p.add_argument("--json", help="write output here instead of stdout")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("act", help="apply generators to a Fock vector")
    _common(p)
    p.add_argument("--gen", action="append", required=True, help="e.g. 'X- i=0 r=0'; repeat to apply in sequence")
    p.add_argument("--vacuum", action="store_true", help="start from the empty multipartition")
    p.add_argument("--vector", help="vector as JSON (the same format act prints)")
    p.add_argument("--input", help="read the vector from a JSON file")
    p.add_argument("--node0", choices=("cells", "tinf"), default="cells")
    p.add_argument("--json")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("matrix", help="matrix of a generator on a basis window")
    _common(p)
    p.add_argument("--gen", required=True)
    p.add_argument("--max-boxes", type=int, default=2)
    p.add_argument("--node0", choices=("cells", "tinf"), default="cells")
    p.add_argument("--json")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify-daha", help="check the DAHA relations H1-H4")
    _common(p, charges=False)
    p.add_argument("--n", type=int, default=3, help="check all n' <= n")
    p.add_argument("--bound", type=int, default=2, help="exponent bound |m_i| <= bound")
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify_daha)

    p = sub.add_parser("verify", help="run a verification profile")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--jobs", type=int, default=0, help="worker processes (default: all cores)")
    p.add_argument("--json", help="write the report here")
    p.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable reports")
    p.add_argument("--mutation", action="append", choices=sorted(mutations.CATALOG), help="seed a fault")
    p.add_argument("--mutation-sweep", action="store_true", help="check that every seeded fault is caught")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-affine", help="relations Y1-Y12 on one Fock space window")
    _common(p)
    p.add_argument("--max-boxes", type=int, default=2)
    p.add_argument("--modes", type=int, default=1, help="largest mode r, s")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true", default=True)
    mode.add_argument("--sampled", action="store_true")
    p.add_argument("--jobs", type=int, default=0)
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify_affine)

    p = sub.add_parser("calibrate-nu", help="search nu(b) = alpha(b-1) + gamma passing the small suites")
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--L", type=int, default=2)
    p.add_argument("--charges", default=None)
    p.add_argument("--all", action="store_true", help="evaluate the whole grid")
    p.add_argument("--json")
    p.set_defaults(func=cmd_calibrate_nu)

    p = sub.add_parser("dump-basis", help="list a basis window")
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--L", type=int, default=1)
    p.add_argument("--charges")
    p.add_argument("--M", type=int)
    p.add_argument("--spread", type=int, default=1, help="with --M: charges within this distance of M/L")
    p.add_argument("--max-boxes", type=int, default=2)
    p.add_argument("--json")
    p.set_defaults(func=cmd_dump_basis)
    return parser


_VALUE_OPTIONS = {"--charges", "--partition", "--components", "--nu", "--t", "--c", "--M", "--vector"}


def _join_negative_values(argv: List[str]) -> List[str]:
    """Let ``--charges -1,1`` through: argparse would read ``-1,1`` as an option."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1][:1] == "-" and argv[i + 1][1:2].isdigit():
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    if getattr(args, "command", None) == "calibrate-nu" and args.charges is None:
        args.charges = ",".join(["0"] * args.L)
    try:
        if hasattr(args, "N") and args.N < 3:
            raise UsageError("N must be at least 3")
        return args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line frontend.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error,
3 an enumeration budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, harness
from . import rep as R
from .ccmap import ClusterObject, cc_map, cc_map_formal, generic_variable
from .families import RepFamily
from .modp import Budget, BudgetExceededError
from .quiver import IceQuiver, QuiverError
from .scalars import FORMAL, SpecializedMode
from .seeds import QuantumSeed

FIXTURE_ROOT = os.path.join(os.path.dirname(__file__), "fixtures")


class InputError(ValueError):
    pass


def resolve_quiver(spec: str):
    """A catalog name or a quiver file path -> (name_or_None, framed quiver)."""
    if spec in catalog.ENTRIES:
        return spec, catalog.get(spec).framed
    path = spec
    if not os.path.exists(path):
        cand = os.path.join(FIXTURE_ROOT, spec, "quiver.txt")
        if os.path.exists(cand):
            return spec if spec in catalog.ENTRIES else None, \
                IceQuiver.from_text(open(cand).read())
        raise InputError("no such quiver: %r" % spec)
    return None, IceQuiver.from_text(open(path).read())


def resolve_rep_path(path: str, quiver_spec: str | None):
    if os.path.exists(path):
        return path
    if quiver_spec:
        cand = os.path.join(FIXTURE_ROOT, quiver_spec, path)
        if os.path.exists(cand):
            return cand
    raise InputError("no such representation file: %r" % path)


def parse_rep(text: str, quiver_dir: str | None = None, prime: int | None = None):
    """Parse a representation or family file.

    Format: header 'rep p=<prime> quiver=<file>' or 'family quiver=<file>',
    a 'dims d1 d2 ...' line over the principal part, then per principal
    arrow a 'mat <src> <tgt>' line followed by its rows ('L' marks the
    family parameter).
    """
    lines = [ln.split("#", 1)[0].rstrip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise InputError("empty representation file")
    head = lines[0].split()
    fields = dict(kv.split("=", 1) for kv in head[1:] if "=" in kv)
    if head[0] == "rep":
        p = int(fields.get("p", prime or 0))
        family = False
    elif head[0] == "family":
        p = None
        family = True
    else:
        raise InputError("line 1: expected 'rep ...' or 'family ...'")
    qspec = fields.get("quiver")
    if qspec is None:
        raise InputError("header missing quiver=<name-or-file>")
    _name, framed = resolve_quiver(
        qspec if os.path.isabs(qspec) or qspec in catalog.ENTRIES
        else (os.path.join(quiver_dir, qspec) if quiver_dir and
              os.path.exists(os.path.join(quiver_dir, qspec)) else qspec))
    principal = framed.principal()
    idx = 1
    if not lines[idx].startswith("dims"):
        raise InputError("line 2: expected 'dims ...'")
    dims = [int(x) for x in lines[idx].split()[1:]]
    if len(dims) != principal.n:
        raise InputError("dims has %d entries, principal part has %d"
                         % (len(dims), principal.n))
    idx += 1
    mats = {}
    order: dict[tuple, int] = {}
    arrow_no = 0
    while idx < len(lines):
        parts = lines[idx].split()
        if parts[0] != "mat" or len(parts) != 3:
            raise InputError("line %d: expected 'mat src tgt'" % (idx + 1))
        s, t = int(parts[1]), int(parts[2])
        occ = order.get((s, t), 0)
        order[(s, t)] = occ + 1
        rows = []
        idx += 1
        # degenerate matrices carry no row lines
        need = dims[t - 1] if dims[s - 1] and dims[t - 1] else 0
        for _ in range(need):
            entries = lines[idx].split()
            if len(entries) != dims[s - 1]:
                raise InputError("line %d: expected %d entries"
                                 % (idx + 1, dims[s - 1]))
            rows.append(tuple("L" if e == "L" else int(e) for e in entries))
            idx += 1
        if not need:
            rows = [()] * dims[t - 1]
        # locate the arrow slot
        cnt = 0
        slot = None
        for j, ab in enumerate(principal.arrows):
            if ab == (s, t):
                if cnt == occ:
                    slot = j
                    break
                cnt += 1
        if slot is None:
            raise InputError("no arrow %d->%d (occurrence %d) in the quiver"
                             % (s, t, occ))
        mats[slot] = tuple(rows)
        arrow_no += 1
    if family:
        return RepFamily(principal, dims, mats), framed
    if p in (None, 0):
        raise InputError("rep file carries no prime; pass --prime")
    conv = {k: tuple(tuple(int(x) for x in row) for row in v)
            for k, v in mats.items()}
    return R.QuiverRep(principal, p, dims, conv), framed


def print_rep(rep: R.QuiverRep, quiver_name: str) -> str:
    lines = ["rep p=%d quiver=%s" % (rep.p, quiver_name)]
    lines.append("dims " + " ".join(str(d) for d in rep.dims))
    for idx, (s, t) in enumerate(rep.quiver.arrows):
        lines.append("mat %d %d" % (s, t))
        if rep.dims[s - 1] and rep.dims[t - 1]:
            for row in rep.mats[idx]:
                lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def load_rep(args, prime=None):
    path = resolve_rep_path(args.rep, args.quiver)
    obj, framed = parse_rep(open(path).read(), os.path.dirname(path), prime)
    return obj, framed


def make_budget(args) -> Budget:
    return Budget(subspace_tuples=args.budget_subspaces,
                  matrix_tuples=args.budget_orbits,
                  hom_elements=args.budget_homs)


def emit_reports(reports, as_json: bool) -> int:
    if as_json:
        print(json.dumps([r.as_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.line())
    return 0 if all(r.ok for r in reports) else 1


def cmd_ccmap(args) -> int:
    name = args.quiver if args.quiver in catalog.ENTRIES else None
    if name is None:
        raise InputError("ccmap needs a catalog quiver (have %s)" % ", ".join(catalog.NAMES))
    model = catalog.get(name).model
    obj, _framed = load_rep(args, args.prime)
    shifts = {}
    if args.shift:
        for part in args.shift.split(","):
            i = int(part)
            shifts[i] = shifts.get(i, 0) + 1
    if isinstance(obj, RepFamily):
        if not args.formal:
            obj = obj.instantiate(args.prime)
            val = cc_map(ClusterObject(obj, shifts), model, args.prime, args.budget)
        else:
            val = cc_map_formal(obj, shifts, model, args.budget)
    else:
        if args.formal:
            raise InputError("formal mode needs a family file")
        val = cc_map(ClusterObject(obj, shifts), model, args.prime, args.budget)
    if args.json:
        terms = [{"exponent": list(e), "coeff": c.render()}
                 for e, c in sorted(val.terms.items())]
        print(json.dumps(terms, indent=2))
    else:
        print(val.render())
    return 0


def cmd_grass(args) -> int:
    obj, _framed = load_rep(args, args.prime)
    e = tuple(int(x) for x in args.e.split(","))
    if isinstance(obj, RepFamily):
        from .families import grassmannian_poly
        coeffs = grassmannian_poly(obj, e, args.budget)
        print(" + ".join("%d q^%d" % (c, k) for k, c in enumerate(coeffs) if c) or "0")
    else:
        print(R.grassmannian_count(obj, e, args.budget))
    return 0


def cmd_hall(args) -> int:
    name = args.quiver
    store = catalog.store_for(name, args.prime, args.budget)
    pm = resolve_rep_path(args.m, name)
    pn = resolve_rep_path(args.n, name)
    M, _ = parse_rep(open(pm).read(), os.path.dirname(pm), args.prime)
    N, _ = parse_rep(open(pn).read(), os.path.dirname(pn), args.prime)
    rep = harness.verify_hall(name, store.canonical(M), store.canonical(N),
                              args.prime, args.budget)
    return emit_reports([rep], args.json)


def cmd_tau(args) -> int:
    obj, framed = load_rep(args, args.prime)
    if args.framed:
        obj = R.extend_to(obj, framed)
    out = R.tau(obj)
    print(print_rep(out, args.quiver), end="")
    return 0


def cmd_reflect(args) -> int:
    obj, _framed = load_rep(args, args.prime)
    v = args.vertex
    if obj.quiver.is_sink(v):
        out, mult = R.bgp_reflect(obj, v)
    elif obj.quiver.is_source(v):
        out, mult = R.bgp_coreflect(obj, v)
    else:
        raise InputError("vertex %d is neither a sink nor a source" % v)
    print(print_rep(out, args.quiver + "(reflected at %d)" % v), end="")
    if mult:
        print("# plus %d shifted copies at vertex %d" % (mult, v))
    return 0


def cmd_mutate(args) -> int:
    name = args.quiver
    model = catalog.get(name).model
    mode = SpecializedMode(args.prime) if args.prime else FORMAL
    seed = QuantumSeed.initial(model, mode)
    if args.seq:
        for k in args.seq.split(","):
            seed = seed.mutate(int(k))
    print(seed.render())
    return 0


def cmd_basis(args) -> int:
    _elems, reports = harness.generic_basis(args.quiver, args.prime, args.box,
                                            args.budget)
    return emit_reports(reports, args.json)


VERIFY_IDS = ("thm3.3", "green", "thm3.5", "thm3.8", "lem5.2", "lem5.4",
              "prop4.3", "prop4.5", "prop6.1", "prop6.2", "conj6.4", "basis")


def _verify_jobs(statement: str, quivers, primes):
    """Independent (statement, quiver, prime) work units, in output order."""
    defaults = {
        "thm3.3": ("a2", "a3", "kronecker"),
        "green": ("a2", "a3", "kronecker"),
        "thm3.5": ("a2", "a2bare", "a3", "kronecker"),
        "thm3.8": ("a2", "a3", "kronecker"),
        "lem5.2": ("atilde21", "atilde22"),
        "lem5.4": ("kronecker",),
        "prop4.3": ("a2", "a3"),
        "prop4.5": ("a2", "a3"),
        "prop6.1": ("atilde12", "atilde22"),
        "prop6.2": ("dtilde4",),
        "conj6.4": ("atilde21", "atilde12", "atilde22", "atilde31", "dtilde4"),
        "basis": ("kronecker", "atilde21"),
    }
    if statement not in defaults:
        raise InputError("unknown statement %r (have %s)"
                         % (statement, ", ".join(VERIFY_IDS)))
    names = quivers or defaults[statement]
    return [(statement, name, p) for p in primes for name in names]


# pair sweeps run on reduced bounds unless --all-pairs asks for the full box
QUICK_BOUNDS = {"a2": dict(total=3), "a2bare": dict(total=3),
                "a3": dict(total=3), "kronecker": dict(bound_vec=(1, 1))}


def _run_one_job(job, budget=None, all_pairs=True):
    statement, name, p = job
    if budget is None:
        budget = Budget()
    kw = {} if all_pairs else {"bounds": QUICK_BOUNDS}
    if statement == "thm3.3":
        return harness.sweep_hall(name, p, budget, **kw)
    if statement == "green":
        return harness.sweep_green(name, p, budget, **kw)
    if statement == "thm3.5":
        return harness.sweep_onedim(name, p, budget, **kw)
    if statement == "thm3.8":
        return harness.sweep_exchange(name, p, budget, **kw)
    if statement == "lem5.2":
        entry = catalog.get(name)
        return [harness.verify_tube_recursion(name, t, i, p, budget)
                for t in range(len(entry.tubes)) for i in (1, 2)]
    if statement == "lem5.4":
        return harness.verify_kronecker(p, budget) + \
            [harness.verify_kronecker_formal(budget)]
    if statement == "prop4.3":
        return _cone_sweep(name, p, budget)
    if statement == "prop4.5":
        return harness.verify_standard_monomials(name, p, budget=budget)
    if statement in ("prop6.1", "prop6.2"):
        return harness.verify_difference(name, p, budget=budget)
    if statement == "conj6.4":
        entry = catalog.get(name)
        out = []
        for t in range(len(entry.tubes)):
            out += harness.check_conjecture(name, t, p, budget)
        return out
    if statement == "basis":
        _elems, rs = harness.generic_basis(name, p, 1, budget)
        return rs
    raise InputError("unknown statement %r" % statement)


def run_verify(statement: str, quivers, primes, budget, jobs=1, all_pairs=True):
    work = _verify_jobs(statement, quivers, primes)
    reports = []
    if jobs > 1 and len(work) > 1:
        # independent checks fan out across processes; output order is the
        # deterministic job order (each worker gets a fresh default budget)
        from concurrent.futures import ProcessPoolExecutor
        from functools import partial
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(partial(_run_one_job, all_pairs=all_pairs), work):
                reports += chunk
        return reports
    for job in work:
        reports += _run_one_job(job, budget, all_pairs)
    return reports


def _cone_sweep(name, p, budget):
    from .hall import dim_vectors_upto
    entry = catalog.get(name)
    store = catalog.store_for(name, p, budget)
    reports = []
    objs = [ClusterObject(None, {i: 1}) for i in range(1, entry.principal.n + 1)]
    for d in dim_vectors_upto(entry.principal.n, bound_total=3):
        for M in store.iso_classes(d):
            if R.is_indecomposable(M, budget):
                objs.append(ClusterObject(M))
    for o in objs:
        reports.append(harness.support_cone_check(name, o, p, budget))
    return reports


AFFINE_STATEMENTS = ("lem5.2", "lem5.4", "prop6.1", "prop6.2", "conj6.4", "basis")


def cmd_verify(args) -> int:
    primes = [int(x) for x in args.prime.split(",")] if args.prime else [3]
    if any(p < 2 for p in primes):
        raise InputError("primes must be >= 2")
    quivers = tuple(args.quiver.split(",")) if args.quiver else None
    if 2 in primes and args.statement in AFFINE_STATEMENTS:
        print("warning: the affine basis statements assume a field with more "
              "than two elements; p=2 results are not covered by them",
              file=sys.stderr)
    reports = run_verify(args.statement, quivers, primes, args.budget,
                         jobs=args.jobs, all_pairs=args.all_pairs)
    return emit_reports(reports, args.json)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qcluster",
        description="Exact computations in quantum cluster algebras of acyclic "
                    "ice quivers: the quantum Caldero-Chapoton map, seed "
                    "mutation, and mechanical verification of the "
                    "multiplication and basis identities.")
    ap.add_argument("--budget-subspaces", type=int, default=10_000_000)
    ap.add_argument("--budget-orbits", type=int, default=2_000_000)
    ap.add_argument("--budget-homs", type=int, default=2_000_000)
    ap.add_argument("--jobs", type=int, default=1,
                    help="worker processes for independent verify units")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("ccmap", help="value of the map on a module plus shifts")
    c.add_argument("--quiver", required=True)
    c.add_argument("--rep", required=True)
    c.add_argument("--prime", type=int, default=3)
    c.add_argument("--shift", help="comma list of shifted projective indices")
    c.add_argument("--formal", action="store_true")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_ccmap)

    c = sub.add_parser("grass", help="submodule count at one dimension vector")
    c.add_argument("--quiver", required=True)
    c.add_argument("--rep", required=True)
    c.add_argument("--e", required=True)
    c.add_argument("--prime", type=int, default=3)
    c.set_defaults(func=cmd_grass)

    c = sub.add_parser("hall", help="product-expansion identity for one pair")
    c.add_argument("--quiver", required=True)
    c.add_argument("--m", required=True)
    c.add_argument("--n", required=True)
    c.add_argument("--prime", type=int, default=3)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_hall)

    c = sub.add_parser("tau", help="Auslander-Reiten translate of a module")
    c.add_argument("--quiver", required=True)
    c.add_argument("--rep", required=True)
    c.add_argument("--prime", type=int, default=3)
    c.add_argument("--framed", action="store_true",
                   help="translate over the framed quiver")
    c.set_defaults(func=cmd_tau)

    c = sub.add_parser("reflect", help="reflection functor at a sink or source")
    c.add_argument("--quiver", required=True)
    c.add_argument("--rep", required=True)
    c.add_argument("--vertex", type=int, required=True)
    c.add_argument("--prime", type=int, default=3)
    c.set_defaults(func=cmd_reflect)

    c = sub.add_parser("mutate", help="mutate the initial seed along a sequence")
    c.add_argument("--quiver", required=True)
    c.add_argument("--seq", default="")
    c.add_argument("--prime", type=int, default=0,
                   help="specialize at p (default: formal)")
    c.set_defaults(func=cmd_mutate)

    c = sub.add_parser("verify", help="verify a statement id")
    c.add_argument("statement", choices=VERIFY_IDS)
    c.add_argument("--quiver", help="comma list of catalog quivers")
    c.add_argument("--prime", help="comma list of primes (default 3)")
    c.add_argument("--all-pairs", action="store_true",
                   help="pair sweeps use the full desk bounds instead of the "
                        "quick subset")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("basis", help="generic basis elements over a box")
    c.add_argument("--quiver", required=True)
    c.add_argument("--prime", type=int, default=3)
    c.add_argument("--box", type=int, default=1)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_basis)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    args.budget = make_budget(args)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return 3
    except (InputError, QuiverError, R.RepError, KeyError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

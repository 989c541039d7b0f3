"""Mechanical verification of the multiplication formulas, difference
properties, gradings, and basis statements, each as an exact identity in the
specialized quantum torus.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from . import catalog
from . import rep as R
from .ccmap import (CCError, ClusterObject, cc_delta, cc_map, extended_coreflect,
                    generic_variable)
from .hall import dim_vectors_upto
from .modp import DEFAULT_BUDGET
from .quiver import ClusterModel, build_matrices, check_compatible, verify_lemma_bilinear
from .scalars import SpecializedMode
from .seeds import QuantumSeed, mutate_matrices, standard_monomial
from .torus import ToricElement


class VerifyReport:
    """Outcome of one statement check: inputs, both sides, verdict."""

    def __init__(self, statement, inputs, lhs="", rhs="", verdict="pass", detail=""):
        self.statement = statement
        self.inputs = inputs
        self.lhs = lhs
        self.rhs = rhs
        self.verdict = verdict  # pass | fail | skip | neutral-pass | neutral-fail
        self.detail = detail

    @property
    def ok(self):
        return self.verdict in ("pass", "neutral-pass", "neutral-fail", "skip")

    def as_dict(self):
        return {
            "statement": self.statement,
            "inputs": self.inputs,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "detail": self.detail,
        }

    def line(self):
        extra = " (%s)" % self.detail if self.detail else ""
        return "%-10s %-40s %s%s" % (self.statement, self.inputs, self.verdict, extra)


def _cmp_report(statement, inputs, lhs: ToricElement, rhs: ToricElement,
                detail="", neutral=False):
    if lhs == rhs:
        verdict = "neutral-pass" if neutral else "pass"
        return VerifyReport(statement, inputs, lhs.render(), rhs.render(),
                            verdict, detail)
    verdict = "neutral-fail" if neutral else "fail"
    return VerifyReport(statement, inputs, lhs.render(), rhs.render(), verdict, detail)


# ---------------------------------------------------------------------------
# Hall-style multiplication (the product-expansion identity)


def verify_hall(name: str, M, N, p: int, budget=DEFAULT_BUDGET) -> VerifyReport:
    """q^[M,N]^1 X_N X_M = q^(-skew(...)/2) sum_E eps^E_{M,N} X_E, exactly."""
    entry = catalog.get(name)
    model = entry.model
    store = catalog.store_for(name, p, budget)
    torus = model.torus(SpecializedMode(p))
    xm = cc_map(ClusterObject(M), model, p, budget)
    xn = cc_map(ClusterObject(N), model, p, budget)
    ext1 = store.ext(M, N)
    lhs = torus.q(2 * ext1) * (xn * xm)
    ir_m = model.exch.ir_vec(M.dims)
    ir_n = model.exch.ir_vec(N.dims)
    tw = -model.pairing(ir_m, ir_n)
    rhs = torus.zero()
    for E in store.middle_terms(M, N):
        eps = store.ext_count(E, M, N)
        if eps:
            rhs = rhs + cc_map(ClusterObject(E), model, p, budget) * eps
    rhs = torus.q(tw) * rhs
    inputs = "%s p=%d M=%s N=%s" % (name, p, list(M.dims), list(N.dims))
    return _cmp_report("thm3.3", inputs, lhs, rhs)


def hall_pairs(name: str, p: int, total=None, bound_vec=None, budget=DEFAULT_BUDGET):
    """Ordered pairs of indecomposables within the sweep bounds."""
    entry = catalog.get(name)
    store = catalog.store_for(name, p, budget)
    n = entry.principal.n
    dims = dim_vectors_upto(n, bound_total=total, bound_vec=bound_vec)
    indecs = store.indecomposables(dims)
    pairs = []
    for M in indecs:
        for N in indecs:
            tot = tuple(a + b for a, b in zip(M.dims, N.dims))
            if total is not None and sum(tot) > total:
                continue
            if bound_vec is not None and any(a > b for a, b in zip(tot, bound_vec)):
                continue
            pairs.append((M, N))
    return pairs


SWEEP_BOUNDS = {"a2": dict(total=4), "a2bare": dict(total=4),
                "a3": dict(total=4), "kronecker": dict(bound_vec=(2, 2))}


def sweep_hall(name: str, p: int = 3, budget=DEFAULT_BUDGET, bounds=None):
    kw = (bounds or SWEEP_BOUNDS).get(name, dict(total=3))
    return [verify_hall(name, M, N, p, budget)
            for M, N in hall_pairs(name, p, budget=budget, **kw)]


# ---------------------------------------------------------------------------
# Green's formula (pure counting identity)


def verify_green(name: str, M, N, X, Y, p: int, budget=DEFAULT_BUDGET) -> VerifyReport:
    store = catalog.store_for(name, p, budget)
    model = catalog.get(name).model
    q = Fraction(p)
    lhs = Fraction(0)
    for E in store.middle_terms(M, N):
        eps = store.ext_count(E, M, N)
        if eps:
            lhs += eps * store.filtration_count(E, X, Y)
    rhs = Fraction(0)
    mdims, ndims = M.dims, N.dims
    xdims = X.dims
    for a in product(*[range(x + 1) for x in mdims]):
        c = tuple(x - y for x, y in zip(xdims, a))
        if any(v < 0 or v > w for v, w in zip(c, ndims)):
            continue
        b = tuple(x - y for x, y in zip(mdims, a))
        d = tuple(x - y for x, y in zip(ndims, c))
        for A in store.iso_classes(a):
            for B in store.iso_classes(b):
                fm = store.filtration_count(M, A, B)
                if not fm:
                    continue
                for C in store.iso_classes(c):
                    epsx = store.ext_count(X, A, C)
                    if not epsx:
                        continue
                    for D in store.iso_classes(d):
                        fn = store.filtration_count(N, C, D)
                        if not fn:
                            continue
                        epsy = store.ext_count(Y, B, D)
                        if not epsy:
                            continue
                        expo = (store.hom(M, N) - store.hom(A, C)
                                - store.hom(B, D) - model.euler(A.dims, D.dims))
                        rhs += q**expo * fm * fn * epsx * epsy
    inputs = "%s p=%d M=%s N=%s X=%s Y=%s" % (
        name, p, list(M.dims), list(N.dims), list(X.dims), list(Y.dims))
    verdict = "pass" if lhs == rhs else "fail"
    return VerifyReport("green", inputs, str(lhs), str(rhs), verdict)


GREEN_BOUNDS = {"a2": dict(total=3), "a2bare": dict(total=3),
                "a3": dict(total=3), "kronecker": dict(bound_vec=(1, 1))}


def sweep_green(name: str, p: int = 3, budget=DEFAULT_BUDGET, bounds=None):
    kw = (bounds or GREEN_BOUNDS).get(name, dict(total=3))
    store = catalog.store_for(name, p, budget)
    out = []
    for M, N in hall_pairs(name, p, budget=budget, **kw):
        tot = tuple(a + b for a, b in zip(M.dims, N.dims))
        for x in product(*[range(t + 1) for t in tot]):
            y = tuple(t - v for t, v in zip(tot, x))
            for X in store.iso_classes(x):
                for Y in store.iso_classes(y):
                    out.append(verify_green(name, M, N, X, Y, p, budget))
    return out


# ---------------------------------------------------------------------------
# helpers shared by the one-dimensional multiplication checks


def _hom_kernel(f, M):
    bases = []
    for v in range(M.quiver.m):
        ker = (R.modp.nullspace(f[v], M.p, M.dims[v]) if M.dims[v] else [])
        bases.append(R.modp.row_span(ker, M.p, M.dims[v]))
    return bases


def _hom_image_bases(f, M, N):
    bases = []
    for v in range(N.quiver.m):
        rows = [tuple(f[v][i][j] for i in range(N.dims[v]))
                for j in range(M.dims[v])]
        bases.append(R.modp.row_span(rows, N.p, N.dims[v]))
    return bases


def decompose_injective(I):
    """Socle multiplicities {j: s_j} with sum s_j I_j = I (verified on dims)."""
    q = I.quiver
    out = {}
    for v in range(1, q.m + 1):
        rows = []
        for idx, (_s, _t) in q.arrows_out_of(v):
            for r in I.mats[idx]:
                rows.append(r)
        # socle at v: intersection of kernels of the outgoing maps
        cols = I.dims[v - 1]
        mat = [tuple(row[j] for j in range(cols)) for row in rows]
        ker = R.modp.nullspace(mat, I.p, cols) if cols else []
        s = len(R.modp.row_span(ker, I.p, cols)) if cols else 0
        if s:
            out[v] = s
    total = [0] * q.m
    for j, s in out.items():
        dv = R.inj_dim_vector(q, j)
        total = [a + s * b for a, b in zip(total, dv)]
    if tuple(total) != I.dims:
        raise R.RepError("module is not injective; socle decomposition fails")
    return out


def decompose_projective(P):
    """Top multiplicities {j: t_j} with sum t_j P_j = P (verified on dims)."""
    q = P.quiver
    tops = R.top_dims(P)
    out = {v + 1: t for v, t in enumerate(tops) if t}
    total = [0] * q.m
    for j, t in out.items():
        dv = R.proj_dim_vector(q, j)
        total = [a + t * b for a, b in zip(total, dv)]
    if tuple(total) != P.dims:
        raise R.RepError("module is not projective; top decomposition fails")
    return out


# ---------------------------------------------------------------------------
# One-dimensional extension multiplication


def verify_onedim(name: str, M, N, p: int, budget=DEFAULT_BUDGET) -> VerifyReport:
    """X_N X_M as a two-term sum over the extension and its companion object.

    Hypotheses (one-dimensional ext, one-dimensional reverse Hom to the
    translate, vanishing of two auxiliary Hom spaces) are checked and a skip
    report is returned when they fail.
    """
    entry = catalog.get(name)
    model = entry.model
    store = catalog.store_for(name, p, budget)
    framed = entry.framed
    inputs = "%s p=%d M=%s N=%s" % (name, p, list(M.dims), list(N.dims))
    Mf = R.extend_to(M, framed)
    Nf = R.extend_to(N, framed)
    if store.ext(M, N) != 1:
        return VerifyReport("thm3.5", inputs, verdict="skip", detail="ext(M,N) != 1")
    # split M = M' + P0 with P0 projective; the translate sees only M'
    proj_candidates = [R.projective(framed, p, j) for j in range(1, framed.m + 1)]
    pcounts, mprime = R.split_summands(Mf, proj_candidates, budget)
    p0 = None
    for j, c in enumerate(pcounts):
        for _ in range(c):
            p0 = (proj_candidates[j] if p0 is None
                  else R.direct_sum(p0, proj_candidates[j]))
    if mprime.is_zero():
        return VerifyReport("thm3.5", inputs, verdict="skip",
                            detail="M is projective; translate vanishes")
    tau_m = R.tau(mprime)
    homs = R.hom_basis(Nf, tau_m)
    if len(homs) != 1:
        return VerifyReport("thm3.5", inputs, verdict="skip",
                            detail="hom(N, tau M) = %d != 1" % len(homs))
    f = homs[0]
    d0f = R.sub_rep(Nf, _hom_kernel(f, Nf))
    coker = R.quotient_rep(tau_m, _hom_image_bases(f, Nf, tau_m))
    inj_candidates = [R.injective(framed, p, j) for j in range(1, framed.m + 1)]
    counts, tau_a = R.split_summands(coker, inj_candidates, budget)
    inj_shifts = {j + 1: c for j, c in enumerate(counts) if c}
    ipart = None
    for j, c in inj_shifts.items():
        for _ in range(c):
            ipart = (inj_candidates[j - 1] if ipart is None
                     else R.direct_sum(ipart, inj_candidates[j - 1]))
    a_f = R.tau_inverse(tau_a) if not tau_a.is_zero() else tau_a
    if p0 is not None:
        a_f = R.direct_sum(a_f, p0)  # A0 = A + P0
    # hypothesis Hom(D0, tau A0 + I) = Hom(A0, I) = 0
    taui = tau_a if ipart is None else R.direct_sum(tau_a, ipart)
    if not taui.is_zero() and not d0f.is_zero() and R.hom_dim(d0f, taui):
        return VerifyReport("thm3.5", inputs, verdict="skip",
                            detail="Hom(D0, tau A + I) != 0")
    if ipart is not None and not a_f.is_zero() and R.hom_dim(a_f, ipart):
        return VerifyReport("thm3.5", inputs, verdict="skip", detail="Hom(A, I) != 0")
    try:
        E = store.nonsplit_middle(M, N)
    except R.RepError as exc:
        return VerifyReport("thm3.5", inputs, verdict="fail", detail=str(exc))
    d0 = R.restrict_principal(d0f)
    a0 = R.restrict_principal(a_f)
    da = R.direct_sum(d0, a0)
    torus = model.torus(SpecializedMode(p))
    xm = cc_map(ClusterObject(M), model, p, budget)
    xn = cc_map(ClusterObject(N), model, p, budget)
    lhs = xn * xm
    ir_n = model.exch.ir_vec(N.dims)
    ir_m = model.exch.ir_vec(M.dims)
    alpha = model.pairing(ir_n, ir_m)
    beta = alpha + model.euler(M.dims, N.dims) - model.euler(a0.dims, d0.dims)
    rhs = (torus.q(alpha) * cc_map(ClusterObject(E), model, p, budget)
           + torus.q(beta) * cc_map(ClusterObject(da, inj_shifts), model, p, budget))
    case = ""
    if a0.is_zero() and not inj_shifts:
        case = "case I"
    elif d0.is_zero():
        case = "case II"
    if (R.is_rigid(M) and R.is_rigid(N) and R.is_indecomposable(M, budget)
            and R.is_indecomposable(N, budget) and store.ext(N, M) == 0):
        gap = model.euler(a0.dims, d0.dims) - model.euler(M.dims, N.dims)
        if gap != 1:
            return VerifyReport("thm3.5", inputs, verdict="fail",
                                detail="rigid case exponent %d != 1" % gap)
        case = (case + " " if case else "") + "case III, exponent 1/2 ok"
    return _cmp_report("thm3.5", inputs, lhs, rhs, detail=case or "general")


def sweep_onedim(name: str, p: int = 3, budget=DEFAULT_BUDGET, bounds=None):
    """All ordered pairs of iso classes (decomposables included) in bounds."""
    kw = (bounds or SWEEP_BOUNDS).get(name, dict(total=3))
    entry = catalog.get(name)
    store = catalog.store_for(name, p, budget)
    dims = dim_vectors_upto(entry.principal.n,
                            bound_total=kw.get("total"),
                            bound_vec=kw.get("bound_vec"))
    classes = [M for d in dims for M in store.iso_classes(d)]
    out = []
    for M in classes:
        for N in classes:
            tot = tuple(a + b for a, b in zip(M.dims, N.dims))
            if "total" in kw and sum(tot) > kw["total"]:
                continue
            if "bound_vec" in kw and any(a > b for a, b in zip(tot, kw["bound_vec"])):
                continue
            out.append(verify_onedim(name, M, N, p, budget))
    return out


# ---------------------------------------------------------------------------
# Projective-injective exchange multiplication


def verify_exchange(name: str, M, j: int, p: int, budget=DEFAULT_BUDGET) -> VerifyReport:
    """X_{tau P_j} X_M as the two-term sum over the kernel/cokernel objects."""
    entry = catalog.get(name)
    model = entry.model
    framed = entry.framed
    inputs = "%s p=%d M=%s j=%d" % (name, p, list(M.dims), j)
    Mf = R.extend_to(M, framed)
    P = R.projective(framed, p, j)
    I = R.injective(framed, p, j)
    fb = R.hom_basis(P, Mf)
    gb = R.hom_basis(Mf, I)
    if len(fb) != 1 or len(gb) != 1:
        return VerifyReport("thm3.8", inputs, verdict="skip",
                            detail="[P,M]=%d [M,I]=%d" % (len(fb), len(gb)))
    f, g = fb[0], gb[0]
    pker = R.sub_rep(P, _hom_kernel(f, P))
    acoker = R.quotient_rep(Mf, _hom_image_bases(f, P, Mf))
    bker = R.sub_rep(Mf, _hom_kernel(g, Mf))
    icoker = R.quotient_rep(I, _hom_image_bases(g, Mf, I))
    try:
        pshifts = decompose_projective(pker)
        ishifts = decompose_injective(icoker)
    except R.RepError as exc:
        return VerifyReport("thm3.8", inputs, verdict="fail", detail=str(exc))
    if not bker.is_zero() and not icoker.is_zero() and R.hom_dim(bker, icoker):
        return VerifyReport("thm3.8", inputs, verdict="skip", detail="[B,I'] != 0")
    if not pker.is_zero() and not acoker.is_zero() and R.hom_dim(pker, acoker):
        return VerifyReport("thm3.8", inputs, verdict="skip", detail="[P',A] != 0")
    torus = model.torus(SpecializedMode(p))
    ej = tuple(1 if i == j - 1 else 0 for i in range(model.m))
    lhs = torus.monomial(ej) * cc_map(ClusterObject(M), model, p, budget)
    alpha = -model.pairing(ej, model.exch.ir_vec(M.dims))
    b_pr = R.restrict_principal(bker)
    a_pr = R.restrict_principal(acoker)
    xe = cc_map(ClusterObject(b_pr, ishifts), model, p, budget)
    xep = cc_map(ClusterObject(a_pr, pshifts), model, p, budget)
    rhs = torus.q(alpha) * xe + torus.q(alpha - 1) * xep
    return _cmp_report("thm3.8", inputs, lhs, rhs)


def sweep_exchange(name: str, p: int = 3, budget=DEFAULT_BUDGET, bounds=None):
    kw = (bounds or SWEEP_BOUNDS).get(name, dict(total=3))
    entry = catalog.get(name)
    store = catalog.store_for(name, p, budget)
    dims = dim_vectors_upto(entry.principal.n, **{
        ("bound_total" if "total" in kw else "bound_vec"): list(kw.values())[0]})
    out = []
    for d in dims:
        for M in store.iso_classes(d):
            if not R.is_indecomposable(M, budget):
                continue
            for j in range(1, entry.framed.m + 1):
                out.append(verify_exchange(name, M, j, p, budget))
    return out


# ---------------------------------------------------------------------------
# Tube recursion


def verify_tube_recursion(name: str, tube_index: int, i: int, p: int,
                          budget=DEFAULT_BUDGET) -> VerifyReport:
    entry = catalog.get(name)
    model = entry.model
    framed = entry.framed
    simples = entry.tube_simples(p, tube_index)
    r = len(simples)
    inputs = "%s p=%d tube=%d i=%d rank=%d" % (name, p, tube_index, i, r)
    e_top = tube_module(name, p, tube_index, i, r)
    e_mid = tube_module(name, p, tube_index, i, r - 1)
    e_low = tube_module(name, p, tube_index, i, r - 2)
    e_prev = simples[(i - 2) % r]
    tau_prev = R.tau(R.extend_to(e_prev, framed))
    homs = R.hom_basis(R.extend_to(e_mid, framed), tau_prev)
    if len(homs) != 1:
        return VerifyReport("lem5.2", inputs, verdict="fail",
                            detail="hom(E_i[r-1], tau E_{i-1}) = %d" % len(homs))
    h = homs[0]
    mid_f = R.extend_to(e_mid, framed)
    ker = R.sub_rep(mid_f, _hom_kernel(h, mid_f))
    icoker = R.quotient_rep(tau_prev, _hom_image_bases(h, mid_f, tau_prev))
    try:
        ishifts = decompose_injective(icoker)
    except R.RepError as exc:
        return VerifyReport("lem5.2", inputs, verdict="fail", detail=str(exc))
    if any(jj <= model.n for jj in ishifts):
        return VerifyReport("lem5.2", inputs, verdict="fail",
                            detail="injective part not frozen: %s" % ishifts)
    if not R.iso_test(R.restrict_principal(ker), e_low, budget):
        return VerifyReport("lem5.2", inputs, verdict="fail",
                            detail="kernel is not E_i[r-2]")
    torus = model.torus(SpecializedMode(p))
    lhs = (cc_map(ClusterObject(e_mid), model, p, budget)
           * cc_map(ClusterObject(e_prev), model, p, budget))
    beta = model.pairing(model.exch.ir_vec(e_mid.dims), model.exch.ir_vec(e_prev.dims))
    rhs = (torus.q(beta) * cc_map(ClusterObject(e_top), model, p, budget)
           + torus.q(beta - 1) * cc_map(ClusterObject(e_low, ishifts), model, p, budget))
    return _cmp_report("lem5.2", inputs, lhs, rhs)


def tube_module(name, p, tube_index, i, length):
    return catalog.tube_module(name, p, tube_index, i, length)


# ---------------------------------------------------------------------------
# The Kronecker golden identity


def verify_kronecker(p: int, budget=DEFAULT_BUDGET) -> list[VerifyReport]:
    entry = catalog.get("kronecker")
    model = entry.model
    torus = model.torus(SpecializedMode(p))
    q = entry.principal
    xs1 = cc_map(ClusterObject(R.simple(q, p, 1)), model, p, budget)
    xs2 = cc_map(ClusterObject(R.simple(q, p, 2)), model, p, budget)
    xr = cc_map(ClusterObject(catalog.kron_regular(p, 1)), model, p, budget)
    out = []
    golden = {
        "X_S1": (xs1, [(-1, 0, 1, 0), (-1, 2, 0, 0)]),
        "X_S2": (xs2, [(0, -1, 0, 0), (2, -1, 0, 1)]),
        "X_R1": (xr, [(1, -1, 1, 1), (-1, 1, 0, 0), (-1, -1, 1, 0)]),
    }
    for tag, (val, exps) in golden.items():
        want = torus.zero()
        for e in exps:
            want = want + torus.monomial(e)
        out.append(_cmp_report("lem5.4", "p=%d %s" % (p, tag), val, want))
    prod = torus.monomial((1, 0, 0, 0)) * torus.monomial((0, 1, 0, 0)) \
        * torus.monomial((0, 0, 0, 1))
    rhs = xs1 * xs2 - torus.q(-1) * prod
    out.append(_cmp_report("lem5.4", "p=%d identity" % p, xr, rhs))
    return out


def verify_kronecker_formal(budget=DEFAULT_BUDGET) -> VerifyReport:
    from .ccmap import cc_map_formal
    from .scalars import FORMAL
    entry = catalog.get("kronecker")
    model = entry.model
    torus = model.torus(FORMAL)
    xs1 = cc_map_formal(catalog.family_for("kronecker", "s1"), {}, model, budget)
    xs2 = cc_map_formal(catalog.family_for("kronecker", "s2"), {}, model, budget)
    xr = cc_map_formal(catalog.family_for("kronecker", "r1"), {}, model, budget)
    prod = torus.monomial((1, 0, 0, 0)) * torus.monomial((0, 1, 0, 0)) \
        * torus.monomial((0, 0, 0, 1))
    rhs = xs1 * xs2 - torus.q(-1) * prod
    return _cmp_report("lem5.4", "formal identity", xr, rhs)


# ---------------------------------------------------------------------------
# Difference property


def _frozen_copy_shift(model: ClusterModel, u):
    """Shift dict placing the principal vector u on the frozen partners."""
    return {model.n + i + 1: x for i, x in enumerate(u) if x}


def verify_difference(name: str, p: int, tube_index: int = 0,
                      budget=DEFAULT_BUDGET) -> list[VerifyReport]:
    """Count identity for every e, then the two-term toric identity.

    The toric identity is checked in two forms.  The object form carries the
    frozen shifted injective with socle the frozen copy of dim E_1 on the
    second term (the same correction that the tube recursion lemma makes
    explicit); it is the form that holds exactly.  The plain module form
    printed alongside the count identity drops that frozen monomial and is
    reported for the record: over a standard framing the framing rows of the
    exchange matrix make the two sides differ by exactly X^(frozen copy).
    """
    entry = catalog.get(name)
    model = entry.model
    statement = "prop6.2" if name.startswith("dtilde") else "prop6.1"
    simples = entry.tube_simples(p, tube_index)
    s = len(simples)
    e1s = tube_module(name, p, tube_index, 1, s)
    e2low = tube_module(name, p, tube_index, 2, s - 2)
    elam = catalog.homogeneous_points(name, p)[0]
    shift = simples[0].dims
    reports = []
    count_ok = True
    detail = ""
    for e in product(*[range(d + 1) for d in e1s.dims]):
        lhs = R.grassmannian_count(e1s, e, budget)
        rhs = R.grassmannian_count(elam, e, budget)
        e2 = tuple(x - y for x, y in zip(e, shift))
        if all(x >= 0 for x in e2):
            rhs += R.grassmannian_count(e2low, e2, budget)
        if lhs != rhs:
            count_ok = False
            detail = "count mismatch at e=%s: %d vs %d" % (e, lhs, rhs)
            break
    reports.append(VerifyReport(statement, "%s p=%d counts" % (name, p),
                                verdict="pass" if count_ok else "fail",
                                detail=detail))
    torus = model.torus(SpecializedMode(p))
    lhs = cc_map(ClusterObject(e1s), model, p, budget)
    base = cc_map(ClusterObject(elam), model, p, budget)
    frozen = _frozen_copy_shift(model, simples[0].dims)
    rhs_object = base + torus.q(1) * cc_map(ClusterObject(e2low, frozen),
                                            model, p, budget)
    reports.append(_cmp_report(statement, "%s p=%d toric(object)" % (name, p),
                               lhs, rhs_object))
    rhs_plain = base + torus.q(1) * cc_map(ClusterObject(e2low), model, p, budget)
    plain = _cmp_report(statement, "%s p=%d toric(module)" % (name, p),
                        lhs, rhs_plain, neutral=True)
    plain.detail = ("module form drops the frozen injective shift"
                    if plain.verdict != "neutral-pass" else "")
    reports.append(plain)
    return reports


def check_conjecture(name: str, tube_index: int, p: int,
                     budget=DEFAULT_BUDGET) -> list[VerifyReport]:
    """Difference form on an arbitrary tube; reported neutrally, in both the
    frozen-shift object form and the plain module form."""
    entry = catalog.get(name)
    model = entry.model
    simples = entry.tube_simples(p, tube_index)
    nrank = len(simples)
    e_n = tube_module(name, p, tube_index, 1, nrank)
    # tau^{-1} E_1 = E_2 in the cyclic labelling
    low = tube_module(name, p, tube_index, 2, nrank - 2)
    elam = catalog.homogeneous_points(name, p)[0]
    torus = model.torus(SpecializedMode(p))
    lhs = cc_map(ClusterObject(e_n), model, p, budget)
    base = cc_map(ClusterObject(elam), model, p, budget)
    frozen = _frozen_copy_shift(model, simples[0].dims)
    rhs_object = base + torus.q(1) * cc_map(ClusterObject(low, frozen),
                                            model, p, budget)
    rhs_plain = base + torus.q(1) * cc_map(ClusterObject(low), model, p, budget)
    tag = "%s p=%d tube=%d" % (name, p, tube_index)
    return [
        _cmp_report("conj6.4", tag + " (object)", lhs, rhs_object, neutral=True),
        _cmp_report("conj6.4", tag + " (module)", lhs, rhs_plain, neutral=True),
    ]


# ---------------------------------------------------------------------------
# Homogeneous tube sum (the delta-element membership identity)


def verify_homogeneous_sum(name: str, p: int, budget=DEFAULT_BUDGET) -> VerifyReport:
    """The grouped middle-term expansion of q^2 X_{P_e} X_I for the simple
    projective at a principal sink e with delta_e = 1 and the preinjective of
    complementary dimension: the homogeneous part collapses by the parameter
    independence, with exactly q+1-t points, each with q-1 classes."""
    entry = catalog.get(name)
    model = entry.model
    store = catalog.store_for(name, p, budget)
    qp = entry.principal
    sink = next(v for v in range(1, qp.n + 1)
                if qp.is_sink(v) and entry.delta[v - 1] == 1)
    pe = R.simple(qp, p, sink)
    rest = tuple(d - x for d, x in zip(entry.delta, pe.dims))
    icand = catalog.find_rigid_module(name, p, rest)
    inputs = "%s p=%d sink=%d" % (name, p, sink)
    if icand is None or not R.is_indecomposable(icand, budget):
        return VerifyReport("thm5.3", inputs, verdict="fail",
                            detail="no preinjective complement found")
    if store.ext(icand, pe) != 2:
        return VerifyReport("thm5.3", inputs, verdict="fail",
                            detail="ext(I, P_e) = %d != 2" % store.ext(icand, pe))
    homog = {store.classify(h) for h in catalog.homogeneous_points(name, p)}
    tubes_full = set()
    for t in range(len(entry.tubes)):
        rank = len(entry.tube_simples(p, t))
        for i in (1, 2):
            tubes_full.add(store.classify(tube_module(name, p, t, i, rank)))
    split = store.classify(R.direct_sum(pe, icand))
    t_count = entry.nonhomog_count
    if len(homog) != p + 1 - t_count:
        return VerifyReport("thm5.3", inputs, verdict="fail",
                            detail="homogeneous point count %d != %d"
                            % (len(homog), p + 1 - t_count))
    hits_per_tube = 0
    for idx, E in enumerate(store.iso_classes(entry.delta)):
        eps = store.ext_count(E, icand, pe)
        if idx == split:
            if eps != 1:
                return VerifyReport("thm5.3", inputs, verdict="fail",
                                    detail="split class count %d != 1" % eps)
        elif idx in homog:
            if eps != p - 1:
                return VerifyReport("thm5.3", inputs, verdict="fail",
                                    detail="homogeneous class count %d" % eps)
        elif idx in tubes_full:
            if eps not in (0, p - 1):
                return VerifyReport("thm5.3", inputs, verdict="fail",
                                    detail="tube class count %d" % eps)
            if eps:
                hits_per_tube += 1
        elif eps:
            return VerifyReport("thm5.3", inputs, verdict="fail",
                                detail="unexpected middle class with count %d" % eps)
    if hits_per_tube != t_count:
        return VerifyReport("thm5.3", inputs, verdict="fail",
                            detail="tube middle terms %d != %d" % (hits_per_tube, t_count))
    # the homogeneous values all agree, so the grouped identity follows from
    # the full expansion, which we also check verbatim
    base = verify_hall(name, icand, pe, p, budget)
    pts = [cc_map(ClusterObject(h), model, p, budget)
           for h in catalog.homogeneous_points(name, p)]
    if any(x != pts[0] for x in pts):
        return VerifyReport("thm5.3", inputs, verdict="fail",
                            detail="homogeneous values differ")
    verdict = "pass" if base.verdict == "pass" else "fail"
    return VerifyReport("thm5.3", inputs, base.lhs, base.rhs, verdict,
                        detail="grouped counts ok; t=%d" % t_count)


# ---------------------------------------------------------------------------
# Gradings, support cones, standard-monomial expansion


def is_graded(b_matrix, eps) -> bool:
    n = len(b_matrix[0]) if b_matrix else 0
    for j in range(n):
        col = [b_matrix[i][j] for i in range(n)]
        if sum(e * c for e, c in zip(eps, col)) >= 0:
            return False
    return True


def lambda_vertex(model: ClusterModel, obj: ClusterObject):
    mv = obj.module.dims if obj.module is not None else (0,) * model.n
    out = []
    for i in range(1, model.n + 1):
        ei = tuple(1 if k == i - 1 else 0 for k in range(model.n))
        out.append(-model.euler(ei, mv) + obj.shifts.get(i, 0))
    return tuple(out)


def support_cone_check(name: str, obj: ClusterObject, p: int,
                       budget=DEFAULT_BUDGET) -> VerifyReport:
    """Support containment in the shifted cone plus the vertex-component
    monomial property, for graded members with no multiple arrows."""
    entry = catalog.get(name)
    model = entry.model
    eps = entry.epsilon
    inputs = "%s p=%d obj=%s+%s" % (
        name, p, list(obj.module.dims) if obj.module else None, obj.shifts)
    if eps is None or not is_graded(model.exch.b, eps):
        return VerifyReport("prop4.3", inputs, verdict="skip", detail="not graded")
    if any(entry.principal.arrow_count(s, t) > 1
           for s in range(1, model.n + 1) for t in range(1, model.n + 1)):
        return VerifyReport("prop4.3", inputs, verdict="skip", detail="multiple arrows")
    x = cc_map(obj, model, p, budget)
    lam_m = lambda_vertex(model, obj)
    edges = [tuple(model.exch.b[i][j] for i in range(model.n))
             for j in range(model.n)]
    pts = {e[: model.n] for e in x.terms}
    edeg = {pt: sum(a * b for a, b in zip(eps, pt)) for pt in pts}
    top = sum(a * b for a, b in zip(eps, lam_m))
    for pt in pts:
        diff = tuple(a - b for a, b in zip(pt, lam_m))
        bound = top - edeg[pt]
        found = any(
            all(d == sum(c * e[k] for c, e in zip(cs, edges)) for k, d in enumerate(diff))
            for cs in product(range(bound + 1), repeat=model.n)
            if sum(cs) <= bound
        )
        if not found:
            return VerifyReport("prop4.3", inputs, verdict="fail",
                                detail="support point %s outside the cone" % (pt,))
    comp = [(e, c) for e, c in x.terms.items() if e[: model.n] == lam_m]
    if len(comp) != 1:
        return VerifyReport("prop4.3", inputs, verdict="fail",
                            detail="vertex component has %d terms" % len(comp))
    if not comp[0][1].is_q_monomial():
        return VerifyReport("prop4.3", inputs, verdict="fail",
                            detail="vertex coefficient %s not a monomial" % comp[0][1])
    return VerifyReport("prop4.3", inputs, verdict="pass")


def filtration_degree(x: ToricElement, eps, n) -> int:
    if not x.terms:
        raise ValueError("zero element has no degree")
    return max(sum(a * b for a, b in zip(eps, e[:n])) for e in x.terms)


class ExpansionError(ValueError):
    def __init__(self, msg, residual=None):
        super().__init__(msg)
        self.residual = residual


def _sm_leading_map(name: str, p: int, box_radius: int):
    """d -> (standard monomial, leading principal point) over a box, plus the
    inverse map from leading points; gradedness makes the leader unique."""
    entry = catalog.get(name)
    model = entry.model
    eps = entry.epsilon
    if eps is None:
        raise ExpansionError("no grading form on %s" % name)
    table = {}
    lead_to_d = {}
    rng = range(-box_radius, box_radius + 1)
    for d in product(rng, repeat=model.n):
        sm = standard_monomial(name, d, p)
        pts = {e[: model.n] for e in sm.terms}
        degs = {pt: sum(a * b for a, b in zip(eps, pt)) for pt in pts}
        best = max(degs.values())
        leaders = [pt for pt, v in degs.items() if v == best]
        if len(leaders) != 1:
            raise ExpansionError("standard monomial %s has no unique leader" % (d,))
        lead = leaders[0]
        if lead in lead_to_d:
            raise ExpansionError("leading points collide: %s and %s"
                                 % (lead_to_d[lead], d))
        table[d] = (sm, lead)
        lead_to_d[lead] = d
    return table, lead_to_d


def expand_in_standard_monomials(x: ToricElement, name: str, p: int,
                                 box_radius: int = 4):
    """Coefficients of x in the standard monomials, by eliminating the
    epsilon-maximal component at each step; coefficients are elements of the
    frozen subtorus (q-powers times frozen monomials)."""
    entry = catalog.get(name)
    model = entry.model
    eps = entry.epsilon
    table, lead_to_d = _sm_leading_map(name, p, box_radius)
    torus = model.torus(SpecializedMode(p))
    coeffs = {}
    residual = x
    steps = 0
    while residual:
        steps += 1
        if steps > 10000:
            raise ExpansionError("expansion did not terminate", residual)
        degs = {}
        for e in residual.terms:
            pt = e[: model.n]
            degs[pt] = sum(a * b for a, b in zip(eps, pt))
        best = max(degs.values())
        leaders = sorted(pt for pt, v in degs.items() if v == best)
        pt = leaders[0]
        d = lead_to_d.get(pt)
        if d is None:
            raise ExpansionError("point %s is not a standard-monomial leader" % (pt,),
                                 residual)
        sm, _ = table[d]
        smlead = [(e, c) for e, c in sm.terms.items() if e[: model.n] == pt]
        if len(smlead) != 1:
            raise ExpansionError("leader of %s is not a single term" % (d,))
        le, lc = smlead[0]
        lead_inv = torus.monomial(le, lc).inverse()
        comp = ToricElement(torus, {e: c for e, c in residual.terms.items()
                                    if e[: model.n] == pt})
        u = comp * lead_inv
        if any(e[: model.n] != (0,) * model.n for e in u.terms):
            raise ExpansionError("coefficient left the frozen subtorus", residual)
        coeffs[d] = coeffs.get(d, torus.zero()) + u
        residual = residual - u * sm
    return coeffs


def _sm_leading_degree(name: str, d, eps):
    """epsilon-degree of the leading point of the standard monomial at d."""
    entry = catalog.get(name)
    n = entry.model.n
    dplus = tuple(max(v, 0) for v in d)
    lam = tuple(
        -entry.model.euler(tuple(1 if k == i else 0 for k in range(n)), dplus)
        + max(-d[i], 0)
        for i in range(n))
    return sum(a * b for a, b in zip(eps, lam))


def leading_coefficient_is_monomial(coeffs, name: str, eps):
    """The coefficient at the epsilon-maximal index must be a single q-power
    times a frozen monomial.  Returns (bool, index)."""
    nonzero = [(d, u) for d, u in coeffs.items() if u]
    if not nonzero:
        return False, None
    best_d, u = max(nonzero, key=lambda du: _sm_leading_degree(name, du[0], eps))
    if len(u.terms) != 1:
        return False, best_d
    c = next(iter(u.terms.values()))
    return c.is_q_monomial(), best_d


def finite_cluster_variables(name: str, p: int, bound=1, budget=DEFAULT_BUDGET):
    """All cluster variables of a finite-type member: images of the
    indecomposable rigid modules plus the shifted projectives."""
    entry = catalog.get(name)
    model = entry.model
    out = []
    for M in catalog.rigid_indecomposables(name, p, (bound,) * model.n):
        out.append(((tuple(M.dims)), cc_map(ClusterObject(M), model, p, budget)))
    for i in range(1, model.n + 1):
        d = tuple(-1 if k == i - 1 else 0 for k in range(model.n))
        out.append((d, cc_map(ClusterObject(None, {i: 1}), model, p, budget)))
    return out


def verify_standard_monomials(name: str, p: int, box_radius: int = 2,
                              budget=DEFAULT_BUDGET) -> list[VerifyReport]:
    """Independence of the standard monomials over a box, expansion of the
    once-mutated frame variables, and the leading-monomial property of the
    finite-type cluster variables."""
    entry = catalog.get(name)
    model = entry.model
    eps = entry.epsilon
    reports = []
    try:
        table, lead_to_d = _sm_leading_map(name, p, box_radius)
        reports.append(VerifyReport(
            "prop4.5", "%s p=%d box=%d independence" % (name, p, box_radius),
            verdict="pass",
            detail="%d monomials, distinct unique leaders" % len(table)))
    except ExpansionError as exc:
        reports.append(VerifyReport(
            "prop4.5", "%s p=%d box=%d independence" % (name, p, box_radius),
            verdict="fail", detail=str(exc)))
        return reports
    # frame variables after one mutation expand in standard monomials
    seed0 = QuantumSeed.initial(model, SpecializedMode(p))
    ok = True
    detail = ""
    for k in range(1, model.n + 1):
        var = seed0.mutate(k).vars[k - 1]
        try:
            coeffs = expand_in_standard_monomials(var, name, p, box_radius + 2)
        except ExpansionError as exc:
            ok = False
            detail = "mutated variable %d: %s" % (k, exc)
            break
        ek = tuple(1 if i == k - 1 else 0 for i in range(model.n))
        unit = coeffs.get(ek)
        if unit is None or len(coeffs) != 1 or len(unit.terms) != 1:
            ok = False
            detail = "mutated variable %d is not the standard monomial" % k
            break
    reports.append(VerifyReport(
        "prop4.5", "%s p=%d mutated-variable expansion" % (name, p),
        verdict="pass" if ok else "fail", detail=detail))
    # finite-type cluster variables: leading coefficient is a monomial
    if entry.delta is None:
        ok = True
        detail = ""
        count = 0
        for d, x in finite_cluster_variables(name, p, budget=budget):
            try:
                coeffs = expand_in_standard_monomials(x, name, p, box_radius + 2)
            except ExpansionError as exc:
                ok = False
                detail = "variable %s: %s" % (d, exc)
                break
            good, lead = leading_coefficient_is_monomial(coeffs, name, eps)
            if not good:
                ok = False
                detail = "variable %s leading coefficient not a monomial" % (d,)
                break
            count += 1
        reports.append(VerifyReport(
            "prop4.5", "%s p=%d cluster-variable leading terms" % (name, p),
            verdict="pass" if ok else "fail",
            detail=detail or "%d variables" % count))
    return reports


# ---------------------------------------------------------------------------
# Generic basis


def generic_basis(name: str, p: int, box_radius: int, budget=DEFAULT_BUDGET):
    """X_d for d in the box, with an independence and integrality report."""
    entry = catalog.get(name)
    model = entry.model
    eps = entry.epsilon
    elems = {}
    rng = range(-box_radius, box_radius + 1)
    for d in product(rng, repeat=model.n):
        elems[d] = generic_variable(name, d, p, budget)
    reports = []
    if eps is not None:
        leaders = {}
        ok = True
        detail = ""
        for d, x in sorted(elems.items()):
            degs = {}
            for e in x.terms:
                pt = e[: model.n]
                degs[pt] = sum(a * b for a, b in zip(eps, pt))
            best = max(degs.values())
            l = sorted(pt for pt, v in degs.items() if v == best)
            if len(l) != 1:
                ok = False
                detail = "no unique leader for %s" % (d,)
                break
            if l[0] in leaders:
                ok = False
                detail = "leader collision %s vs %s" % (leaders[l[0]], d)
                break
            leaders[l[0]] = d
        reports.append(VerifyReport(
            "basis", "%s p=%d box=%d independence" % (name, p, box_radius),
            verdict="pass" if ok else "fail", detail=detail))
    if eps is not None and entry.delta is not None:
        ok = True
        detail = ""
        for d, x in sorted(elems.items()):
            try:
                coeffs = expand_in_standard_monomials(x, name, p,
                                                      box_radius + 3)
            except ExpansionError as exc:
                ok = False
                detail = "expansion failed for %s: %s" % (d, exc)
                break
            for dd, u in coeffs.items():
                for c in u.terms.values():
                    if not c.is_p_integral():
                        ok = False
                        detail = "non-integral coefficient at %s in %s" % (dd, d)
                        break
                if not ok:
                    break
            if not ok:
                break
        reports.append(VerifyReport(
            "basis", "%s p=%d box=%d integrality" % (name, p, box_radius),
            verdict="pass" if ok else "fail", detail=detail))
    return elems, reports


# ---------------------------------------------------------------------------
# Reflection transport


def verify_reflection_transport(name: str, v: int, obj: ClusterObject, p: int,
                                budget=DEFAULT_BUDGET) -> VerifyReport:
    """The value of the map commutes with the extended reflection functor at
    a source of the framed quiver, through the frame identification given by
    the matching one-step mutation."""
    entry = catalog.get(name)
    model = entry.model
    framed = entry.framed
    inputs = "%s p=%d v=%d obj=%s+%s" % (
        name, p, v, list(obj.module.dims) if obj.module else None, obj.shifts)
    if not framed.is_source(v):
        return VerifyReport("thm4.1", inputs, verdict="skip",
                            detail="vertex %d is not a framed source" % v)
    lam2, bt2 = mutate_matrices(model.lam, model.exch.btilde, v)
    refl = framed.reflect(v)
    if build_matrices(refl).btilde != bt2:
        return VerifyReport("thm4.1", inputs, verdict="fail",
                            detail="one-step mutation is not the reflection")
    model2 = ClusterModel(refl, lam2, name=name + "'")
    obj2, _q2 = extended_coreflect(entry.principal, p, obj, v)
    rhs_side = cc_map(obj2, model2, p, budget)
    seed = QuantumSeed.initial(model, SpecializedMode(p)).mutate(v)
    lhs = cc_map(obj, model, p, budget)
    # re-express rhs through the mutated frame, shifting the v-exponent into
    # the nonnegative range where frame monomials are defined
    shift = max(0, -min((g[v - 1] for g in rhs_side.terms), default=0))
    ev = tuple(1 if i == v - 1 else 0 for i in range(model.m))
    nvec = tuple(shift * x for x in ev)
    acc = seed.torus.zero()
    for g, c in sorted(rhs_side.terms.items()):
        tw = seed.pairing(g, nvec)
        arg = tuple(a + b for a, b in zip(g, nvec))
        acc = acc + (seed.torus.q(tw) * seed.frame_monomial(arg)).scale(c)
    want = lhs * seed.frame_monomial(nvec)
    return _cmp_report("thm4.1", inputs, want, acc)


# ---------------------------------------------------------------------------
# Bilinear identity sweep


def sweep_bilinear(names=("a2", "a3", "kronecker", "atilde21"), samples=500, seed=2024):
    import random
    rng = random.Random(seed)
    reports = []
    for name in names:
        model = catalog.get(name).model
        n = model.n
        bad = None
        for _ in range(samples):
            vecs = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(4)]
            for tag, lhs, rhs in verify_lemma_bilinear(model, *vecs):
                if lhs != rhs:
                    bad = (tag, vecs, lhs, rhs)
                    break
            if bad:
                break
        reports.append(VerifyReport(
            "lem3.1", "%s %d samples" % (name, samples),
            verdict="pass" if bad is None else "fail",
            detail="" if bad is None else str(bad)))
    return reports


def verify_parameter_independence(name: str, p: int, budget=DEFAULT_BUDGET) -> VerifyReport:
    """All degree-one homogeneous points share one image under the map."""
    entry = catalog.get(name)
    model = entry.model
    pts = catalog.homogeneous_points(name, p)
    vals = [cc_map(ClusterObject(h), model, p, budget) for h in pts]
    ok = all(v == vals[0] for v in vals)
    expected = p + 1 - entry.nonhomog_count
    detail = "%d points (expected %d)" % (len(pts), expected)
    if len(pts) != expected:
        ok = False
    return VerifyReport("lem5.1", "%s p=%d" % (name, p),
                        verdict="pass" if ok else "fail", detail=detail)

"""Counting layer: isomorphism classes of representations of a fixed dimension
vector, submodule filtration numbers, and extension-class counts.

The extension count eps^E_{M,N} = |Ext^1(M,N)_E| is obtained from the
filtration number F^E_{M,N} through the Riedtmann-Peng identity

    eps^E_{M,N} = F^E_{M,N} * |Hom(M,N)| * |Aut M| * |Aut N| / |Aut E|,

whose exactness is asserted, and which is cross-validated in the test suite
against the identity sum_E eps^E_{M,N} = |Ext^1(M,N)|.
"""

from __future__ import annotations

from itertools import product

from . import rep as R
from .modp import DEFAULT_BUDGET, Budget


class ClassStore:
    """Memoized per-(quiver, p) tables: iso classes, counts, hall numbers."""

    def __init__(self, quiver, p, budget: Budget = DEFAULT_BUDGET,
                 max_entries=12, max_entries_p5=8):
        self.quiver = quiver
        self.p = p
        self.budget = budget
        self.max_entries = max_entries if p <= 3 else max_entries_p5
        self._classes: dict[tuple, list] = {}
        self._classify: dict[tuple, int] = {}
        self._aut: dict[tuple, int] = {}
        self._hom: dict[tuple, int] = {}
        self._ext: dict[tuple, int] = {}
        self._filt: dict[tuple, int] = {}
        self._subcache: dict[tuple, list] = {}

    # -- iso classes ------------------------------------------------------

    def matrix_entry_count(self, dims):
        q = self.quiver
        return sum(dims[s - 1] * dims[t - 1] for s, t in q.arrows)

    def iso_classes(self, dims):
        """Representatives of all iso classes with the given dimension vector,
        in deterministic enumeration order."""
        dims = tuple(dims)
        if dims in self._classes:
            return self._classes[dims]
        q = self.quiver
        p = self.p
        entries = self.matrix_entry_count(dims)
        if entries > self.max_entries:
            raise R.RepError(
                "orbit enumeration over %d matrix entries exceeds the budget "
                "(%d at p=%d)" % (entries, self.max_entries, p))
        shapes = [(dims[t - 1], dims[s - 1]) for s, t in q.arrows]
        reps = []
        buckets: dict[tuple, list] = {}
        for values in product(range(p), repeat=entries):
            self.budget.tick("matrix_tuples")
            mats = {}
            pos = 0
            for idx, (rws, cls_) in enumerate(shapes):
                mat = tuple(tuple(values[pos + i * cls_ + j] for j in range(cls_))
                            for i in range(rws))
                pos += rws * cls_
                mats[idx] = mat
            cand = R.QuiverRep(q, p, dims, mats)
            sig = self._signature(cand)
            found = None
            for known in buckets.get(sig, ()):
                if R.iso_test(cand, known, self.budget):
                    found = known
                    break
            if found is None:
                buckets.setdefault(sig, []).append(cand)
                reps.append(cand)
        self._classes[dims] = reps
        for i, rp in enumerate(reps):
            self._classify[rp.key()] = i
        return reps

    def _signature(self, M):
        ranks = tuple(sorted((idx, len(R.modp.rref(mat, self.p)[0]))
                             for idx, mat in M.mats.items()))
        rad = tuple(len(b) for b in R.radical_bases(M))
        end = R.hom_dim(M, M)
        return (ranks, rad, end)

    def classify(self, M) -> int:
        """Index of M's class inside iso_classes(M.dims)."""
        key = M.key()
        if key in self._classify:
            return self._classify[key]
        classes = self.iso_classes(M.dims)
        sig = self._signature(M)
        for i, known in enumerate(classes):
            if self._signature(known) == sig and R.iso_test(M, known, self.budget):
                self._classify[key] = i
                return i
        raise R.RepError("classification failed; enumeration incomplete?")

    def canonical(self, M):
        return self.iso_classes(M.dims)[self.classify(M)]

    # -- counts -----------------------------------------------------------

    def aut(self, M) -> int:
        key = M.key()
        if key not in self._aut:
            self._aut[key] = R.aut_count(M, self.budget)
        return self._aut[key]

    def hom(self, M, N) -> int:
        key = (M.key(), N.key())
        if key not in self._hom:
            self._hom[key] = R.hom_dim(M, N)
        return self._hom[key]

    def ext(self, M, N) -> int:
        key = (M.key(), N.key())
        if key not in self._ext:
            self._ext[key] = R.ext_dim(M, N)
        return self._ext[key]

    def submods(self, M, e):
        key = (M.key(), tuple(e))
        if key not in self._subcache:
            self._subcache[key] = R.submodules(M, e, self.budget)
        return self._subcache[key]

    def filtration_count(self, M, A, B) -> int:
        """F^M_{A,B}: submodules of M isomorphic to B with quotient A."""
        if tuple(a + b for a, b in zip(A.dims, B.dims)) != M.dims:
            return 0
        key = (M.key(), A.key(), B.key())
        if key in self._filt:
            return self._filt[key]
        count = 0
        for bases in self.submods(M, B.dims):
            sub = R.sub_rep(M, bases)
            if not R.iso_test(sub, B, self.budget):
                continue
            quot = R.quotient_rep(M, bases)
            if R.iso_test(quot, A, self.budget):
                count += 1
        self._filt[key] = count
        return count

    def ext_count(self, E, M, N) -> int:
        """eps^E_{M,N} via the Riedtmann-Peng identity (exact division)."""
        if tuple(m + n for m, n in zip(M.dims, N.dims)) != E.dims:
            return 0
        f = self.filtration_count(E, M, N)
        if f == 0:
            return 0
        num = f * self.p ** self.hom(M, N) * self.aut(M) * self.aut(N)
        aE = self.aut(E)
        if num % aE:
            raise R.RepError("Riedtmann-Peng division is not exact")
        return num // aE

    def middle_terms(self, M, N):
        """Iso classes of dimension dim M + dim N (the index set of sum_E)."""
        dims = tuple(m + n for m, n in zip(M.dims, N.dims))
        return self.iso_classes(dims)

    def ext_sum_check(self, M, N) -> bool:
        total = sum(self.ext_count(E, M, N) for E in self.middle_terms(M, N))
        return total == self.p ** self.ext(M, N)

    def nonsplit_middle(self, M, N):
        """The unique middle term of a nonsplit extension of M by N.

        Requires ext(M, N) = 1; asserts uniqueness of the class carrying the
        nonzero extension classes.
        """
        if self.ext(M, N) != 1:
            raise R.RepError("nonsplit middle requires a one-dimensional ext")
        split = self.canonical(R.direct_sum(M, N))
        found = []
        for E in self.middle_terms(M, N):
            if E is split or E.key() == split.key():
                continue
            if self.ext_count(E, M, N) > 0:
                found.append(E)
        if len(found) != 1:
            raise R.RepError(
                "expected exactly one nonsplit middle term, found %d" % len(found))
        return found[0]

    def indecomposables(self, dims_list):
        """Indecomposable classes among all classes of the listed dims."""
        out = []
        for dims in dims_list:
            for M in self.iso_classes(dims):
                if R.is_indecomposable(M, self.budget):
                    out.append(M)
        return out


def dim_vectors_upto(n, bound_total=None, bound_vec=None):
    """All nonzero dimension vectors of length n under the given bounds."""
    if bound_vec is not None:
        ranges = [range(b + 1) for b in bound_vec]
    else:
        ranges = [range(bound_total + 1)] * n
    out = []
    for v in product(*ranges):
        if not any(v):
            continue
        if bound_total is not None and sum(v) > bound_total:
            continue
        out.append(tuple(v))
    return out

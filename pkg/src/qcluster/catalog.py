"""Desk catalog: the bundled quivers, their cluster models, tube data,
parameter families of regular simples, and rigid-object search.

All bundled quivers are stored in the orientation module maps act (see
quiver.py); the tame members carry their non-homogeneous tube bottoms as
explicit representations, cross-checked by the AR translate in the tests.
"""

from __future__ import annotations

from functools import lru_cache

from . import rep as R
from .families import RepFamily
from .hall import ClassStore
from .modp import DEFAULT_BUDGET
from .quiver import ClusterModel, IceQuiver, standard_framing

PAPER_KRONECKER_LAM = (
    (0, 0, -1, 0),
    (0, 0, 0, -1),
    (1, 0, 0, -2),
    (0, 1, 2, 0),
)


class CatalogEntry:
    def __init__(self, name, principal, delta=None, tubes=None, epsilon=None,
                 nonhomog_count=0, lam=None, elambda=None, bare=False):
        self.name = name
        self.principal = principal
        # bare entries have a full-rank exchange matrix and need no framing
        self.framed = principal if bare else standard_framing(principal)
        self.delta = delta
        self.tubes = tubes or []        # list of lists of principal reps builders
        self.epsilon = epsilon          # grading form or None
        self.nonhomog_count = nonhomog_count
        self._lam = lam
        self._elambda = elambda         # callable (p, lam) -> principal rep
        self._model = None

    @property
    def model(self) -> ClusterModel:
        if self._model is None:
            self._model = ClusterModel(self.framed, self._lam, name=self.name)
        return self._model

    def tube_simples(self, p, tube_index):
        return [build(p) for build in self.tubes[tube_index]]

    def e_lambda(self, p, lam):
        if self._elambda is None:
            raise ValueError("no parameter family on %s" % self.name)
        return self._elambda(self.principal, p, lam)


def _rep(quiver, p, dims, mats):
    return R.from_dict(quiver, p, dims, mats)


def _kron_elambda(q, p, lam):
    if lam == "inf":
        return _rep(q, p, {1: 1, 2: 1}, {(2, 1, 0): ((0,),), (2, 1, 1): ((1,),)})
    return _rep(q, p, {1: 1, 2: 1}, {(2, 1, 0): ((1,),), (2, 1, 1): ((lam,),)})


def kron_regular(p, lam, n=1):
    """Regular indecomposable of dimension (n, n) over the parameter lam."""
    q = _kronecker_principal()
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    if lam == "inf":
        nilp = tuple(tuple(1 if j == i + 1 else 0 for j in range(n)) for i in range(n))
        return _rep(q, p, {1: n, 2: n}, {(2, 1, 0): nilp, (2, 1, 1): ident})
    jord = tuple(tuple((lam % p) if i == j else (1 if j == i + 1 else 0)
                       for j in range(n)) for i in range(n))
    return _rep(q, p, {1: n, 2: n}, {(2, 1, 0): ident, (2, 1, 1): jord})


def _cycle_elambda(q, p, lam, edge):
    """Dimension-one spaces everywhere, identity maps except lam on one edge."""
    dims = {v: 1 for v in range(1, q.m + 1)}
    mats = {}
    seen = {}
    for s, t in q.arrows:
        occ = seen.get((s, t), 0)
        seen[(s, t)] = occ + 1
        val = lam if (s, t) == edge else 1
        mats[(s, t, occ)] = ((val,),)
    return _rep(q, p, dims, mats)


def _dtilde4_elambda(q, p, lam):
    dims = {1: 1, 2: 1, 3: 2, 4: 1, 5: 1}
    mats = {
        (1, 3): ((1,), (0,)),
        (2, 3): ((0,), (1,)),
        (3, 4): ((1, 1),),
        (3, 5): ((1, lam),),
    }
    return _rep(q, p, dims, mats)


@lru_cache(maxsize=None)
def _kronecker_principal():
    return IceQuiver(2, 2, [(2, 1), (2, 1)])


def _build_entries():
    entries = {}

    kron = _kronecker_principal()
    entries["kronecker"] = CatalogEntry(
        "kronecker", kron, delta=(1, 1), tubes=[], epsilon=(-1, 1),
        nonhomog_count=0, lam=PAPER_KRONECKER_LAM,
        elambda=lambda q, p, lam: _kron_elambda(q, p, lam))

    a2 = IceQuiver(2, 2, [(2, 1)])
    entries["a2"] = CatalogEntry("a2", a2, epsilon=(-1, 1))
    # the same quiver with its own full-rank exchange matrix, no coefficients
    entries["a2bare"] = CatalogEntry("a2bare", a2, epsilon=(-1, 1),
                                     lam=((0, 1), (-1, 0)), bare=True)

    a3 = IceQuiver(3, 3, [(2, 1), (2, 3)])
    entries["a3"] = CatalogEntry("a3", a3, epsilon=(-1, 1, -1))

    at21 = IceQuiver(3, 3, [(2, 1), (3, 2), (3, 1)])
    entries["atilde21"] = CatalogEntry(
        "atilde21", at21, delta=(1, 1, 1),
        tubes=[[
            lambda p: R.simple(at21, p, 2),
            lambda p: _rep(at21, p, {1: 1, 3: 1}, {(3, 1): ((1,),)}),
        ]],
        epsilon=(-3, 1, 2), nonhomog_count=1,
        elambda=lambda q, p, lam: _cycle_elambda(q, p, lam, (3, 1)))

    at12 = IceQuiver(3, 3, [(2, 1), (3, 1), (2, 3)])
    entries["atilde12"] = CatalogEntry(
        "atilde12", at12, delta=(1, 1, 1),
        tubes=[[
            lambda p: R.simple(at12, p, 3),
            lambda p: _rep(at12, p, {1: 1, 2: 1}, {(2, 1): ((1,),)}),
        ]],
        epsilon=(-2, 1, 1), nonhomog_count=1,
        elambda=lambda q, p, lam: _cycle_elambda(q, p, lam, (3, 1)))

    at31 = IceQuiver(4, 4, [(2, 1), (3, 2), (4, 3), (4, 1)])
    entries["atilde31"] = CatalogEntry(
        "atilde31", at31, delta=(1, 1, 1, 1),
        tubes=[[
            lambda p: R.simple(at31, p, 2),
            lambda p: R.simple(at31, p, 3),
            lambda p: _rep(at31, p, {1: 1, 4: 1}, {(4, 1): ((1,),)}),
        ]],
        epsilon=(-3, 1, 2, 3), nonhomog_count=1,
        elambda=lambda q, p, lam: _cycle_elambda(q, p, lam, (4, 1)))

    at22 = IceQuiver(4, 4, [(2, 1), (3, 2), (4, 1), (3, 4)])
    entries["atilde22"] = CatalogEntry(
        "atilde22", at22, delta=(1, 1, 1, 1),
        tubes=[
            [
                lambda p: R.simple(at22, p, 4),
                lambda p: _rep(at22, p, {1: 1, 2: 1, 3: 1},
                               {(2, 1): ((1,),), (3, 2): ((1,),)}),
            ],
            [
                lambda p: R.simple(at22, p, 2),
                lambda p: _rep(at22, p, {1: 1, 3: 1, 4: 1},
                               {(4, 1): ((1,),), (3, 4): ((1,),)}),
            ],
        ],
        epsilon=None, nonhomog_count=2,
        elambda=lambda q, p, lam: _cycle_elambda(q, p, lam, (3, 4)))

    dt4 = IceQuiver(5, 5, [(1, 3), (2, 3), (3, 4), (3, 5)])
    entries["dtilde4"] = CatalogEntry(
        "dtilde4", dt4, delta=(1, 1, 2, 1, 1),
        tubes=[[
            lambda p: R.simple(dt4, p, 3),
            lambda p: _rep(dt4, p, {v: 1 for v in range(1, 6)},
                           {(1, 3): ((1,),), (2, 3): ((1,),),
                            (3, 4): ((1,),), (3, 5): ((1,),)}),
        ]],
        epsilon=None, nonhomog_count=3,
        elambda=lambda q, p, lam: _dtilde4_elambda(q, p, lam))

    return entries


ENTRIES = _build_entries()
NAMES = tuple(sorted(ENTRIES))


def get(name: str) -> CatalogEntry:
    if name not in ENTRIES:
        raise KeyError("unknown catalog quiver %r (have %s)" % (name, ", ".join(NAMES)))
    return ENTRIES[name]


_STORES: dict[tuple, ClassStore] = {}


def store_for(name: str, p: int, budget=DEFAULT_BUDGET) -> ClassStore:
    key = (name, p, id(budget))
    if key not in _STORES:
        _STORES[key] = ClassStore(get(name).principal, p, budget)
    return _STORES[key]


@lru_cache(maxsize=None)
def homogeneous_points(name: str, p: int):
    """All iso classes of regular simples of dimension delta that are fixed by
    the AR translate and have a one-dimensional endomorphism ring."""
    entry = get(name)
    if entry.delta is None:
        raise ValueError("%s is not tame" % name)
    store = store_for(name, p)
    out = []
    for M in store.iso_classes(entry.delta):
        if not R.is_indecomposable(M, store.budget):
            continue
        if R.hom_dim(M, M) != 1:
            continue
        if R.iso_test(R.tau(M), M, store.budget):
            out.append(M)
    return tuple(out)


def tube_module(name: str, p: int, tube_index: int, i: int, length: int):
    """The regular module with quasi-socle the i-th tube simple (1-based) and
    the given quasi-length, built by iterated nonsplit extensions."""
    entry = get(name)
    simples = entry.tube_simples(p, tube_index)
    r = len(simples)
    if length < 0:
        raise ValueError("negative quasi-length")
    if length == 0:
        return R.zero_rep(entry.principal, p)
    if length == 1:
        return simples[(i - 1) % r]
    store = store_for(name, p)
    below = tube_module(name, p, tube_index, i, length - 1)
    top = simples[(i - 1 + length - 1) % r]
    return store.nonsplit_middle(top, below)


def rigid_indecomposables(name: str, p: int, bound_vec):
    """Indecomposable rigid classes with dimension vector under the bound."""
    store = store_for(name, p)
    out = []
    for dims in _dims_upto(bound_vec):
        for M in store.iso_classes(dims):
            if R.is_rigid(M) and R.is_indecomposable(M, store.budget):
                out.append(M)
    return out


def _dims_upto(bound_vec):
    from itertools import product
    ranges = [range(b + 1) for b in bound_vec]
    return [d for d in product(*ranges) if any(d)]


def find_rigid_module(name: str, p: int, dims):
    """A rigid module with the given dimension vector, or None.

    Searches sums of indecomposable rigid summands with vanishing extensions
    in both directions; first hit in catalog order wins.
    """
    entry = get(name)
    dims = tuple(dims)
    if not any(dims):
        return R.zero_rep(entry.principal, p)
    store = store_for(name, p)
    cands = rigid_indecomposables(name, p, dims)

    def search(remaining, start, chosen):
        if not any(remaining):
            return list(chosen)
        for k in range(start, len(cands)):
            M = cands[k]
            if any(md > rd for md, rd in zip(M.dims, remaining)):
                continue
            if any(store.ext(M, X) or store.ext(X, M) for X in chosen):
                continue
            chosen.append(M)
            got = search(tuple(r - m for r, m in zip(remaining, M.dims)), k, chosen)
            if got is not None:
                return got
            chosen.pop()
        return None

    parts = search(dims, 0, [])
    if parts is None:
        return None
    out = R.zero_rep(entry.principal, p)
    for M in parts:
        out = R.direct_sum(out, M)
    return out


def find_delta_decomposition(name: str, p: int, dims):
    """(n, regular rigid R) with dims = n*delta + dim R, or None.

    Tube parts are chosen lowest tube first, then lowest simple index.
    """
    entry = get(name)
    if entry.delta is None:
        return None
    dims = tuple(dims)
    if any(d < 0 for d in dims):
        return None
    store = store_for(name, p)
    tubes = [entry.tube_simples(p, t) for t in range(len(entry.tubes))]
    n = 1
    while True:
        rest = tuple(d - n * dv for d, dv in zip(dims, entry.delta))
        if any(r < 0 for r in rest):
            return None
        reg = _find_regular_rigid(store, tubes, rest)
        if reg is not None:
            return n, reg
        n += 1


def _find_regular_rigid(store, tubes, dims):
    if not any(dims):
        return R.zero_rep(store.quiver, store.p)
    flat = [M for tube in tubes for M in tube]

    def search(remaining, start, chosen):
        if not any(remaining):
            return list(chosen)
        for k in range(start, len(flat)):
            M = flat[k]
            if any(md > rd for md, rd in zip(M.dims, remaining)):
                continue
            if any(store.ext(M, X) or store.ext(X, M) for X in chosen):
                continue
            chosen.append(M)
            got = search(tuple(r - m for r, m in zip(remaining, M.dims)), k, chosen)
            if got is not None:
                return got
            chosen.pop()
        return None

    parts = search(tuple(dims), 0, [])
    if parts is None:
        return None
    out = R.zero_rep(store.quiver, store.p)
    for M in parts:
        out = R.direct_sum(out, M)
    return out


def family_for(name: str, module_name: str) -> RepFamily:
    """Integer families for the bundled modules used in formal mode."""
    entry = get(name)
    q = entry.principal
    if name == "kronecker":
        if module_name == "s1":
            return RepFamily(q, (1, 0), {}, name="s1")
        if module_name == "s2":
            return RepFamily(q, (0, 1), {}, name="s2")
        if module_name == "r1":
            return RepFamily(q, (1, 1), {0: ((1,),), 1: (("L",),)},
                             bad_primes=(2,), name="r1")
        if module_name == "r2":
            return RepFamily(q, (2, 2),
                             {0: ((1, 0), (0, 1)), 1: (("L", 1), (0, "L"))},
                             bad_primes=(2,), name="r2")
    raise KeyError("no bundled family %s/%s" % (name, module_name))

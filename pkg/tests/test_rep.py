import pytest

from qcluster import modp
from qcluster.quiver import IceQuiver, standard_framing
from qcluster.rep import (
    ProjectiveSummandError,
    all_grassmannian_counts,
    aut_count,
    bgp_reflect,
    cartan_matrix,
    coxeter_transform,
    direct_sum,
    ext_dim,
    extend_to,
    from_dict,
    grassmannian_count,
    hom_dim,
    injective,
    is_indecomposable,
    is_rigid,
    iso_test,
    min_proj_presentation,
    projective,
    quotient_rep,
    radical_bases,
    simple,
    sub_rep,
    submodules,
    tau,
    tau_inverse,
    top_dims,
    zero_rep,
)

KRON = IceQuiver(2, 2, [(2, 1), (2, 1)])
KRON_FRAMED = standard_framing(KRON)
A2 = IceQuiver(2, 2, [(2, 1)])
A2_FRAMED = standard_framing(A2)


def kron_reg(p, lam, n=1):
    """Regular module with parameter lam; the two arrow maps are I and J(lam)."""
    ident = modp.identity(n)
    jord = tuple(tuple((lam if i == j else (1 if j == i + 1 else 0)) % p
                       for j in range(n)) for i in range(n))
    return from_dict(KRON, p, {1: n, 2: n}, {(2, 1, 0): ident, (2, 1, 1): jord})


def test_modp_subspace_counts():
    # number of k-subspaces of F_p^d is the Gaussian binomial
    assert len(list(modp.subspaces(2, 1, 3))) == 4
    assert len(list(modp.subspaces(4, 2, 3))) == 130
    assert len(list(modp.subspaces(3, 1, 5))) == 31


def test_modp_subspaces_containing():
    w = ((1, 0, 0),)
    subs = list(modp.subspaces_containing(w, 3, 2, 3))
    assert len(subs) == 4  # lines in the 2-dim quotient
    for s in subs:
        assert modp.span_contains(s, (1, 0, 0), 3, 3)


def test_hom_ext_simples():
    p = 3
    s1, s2 = simple(KRON, p, 1), simple(KRON, p, 2)
    assert hom_dim(s1, s1) == 1
    assert ext_dim(s1, s1) == 0
    assert hom_dim(s2, s1) == 0
    assert ext_dim(s2, s1) == 2  # two arrows 2 -> 1
    assert ext_dim(s1, s2) == 0


def test_hom_regular_endo():
    m = kron_reg(3, 1)
    assert hom_dim(m, m) == 1
    assert ext_dim(m, m) == 1  # delta is isotropic


def test_grassmannian_golden_counts():
    m = kron_reg(3, 1)
    counts = all_grassmannian_counts(m)
    assert counts == {(0, 0): 1, (1, 0): 1, (1, 1): 1}
    assert grassmannian_count(m, (0, 1)) == 0
    assert grassmannian_count(m, (5, 5)) == 0


def test_grassmannian_trivial_cases():
    p = 5
    s = simple(KRON, p, 1)
    assert grassmannian_count(s, (0, 0)) == 1
    assert grassmannian_count(s, (1, 0)) == 1


def test_grassmannian_partition():
    # sum over e of |Gr_e| equals the total number of submodules
    m = direct_sum(kron_reg(3, 1), simple(KRON, 3, 1))
    total = sum(all_grassmannian_counts(m).values())
    count = 0
    for e1 in range(3):
        for e2 in range(2):
            count += grassmannian_count(m, (e1, e2))
    assert total == count


def test_iso_and_aut():
    p = 3
    r1 = kron_reg(p, 1)
    r2 = kron_reg(p, 2)
    assert iso_test(r1, r1)
    assert not iso_test(r1, r2)
    s1 = simple(KRON, p, 1)
    assert aut_count(s1) == p - 1
    assert aut_count(direct_sum(s1, s1)) == (p**2 - 1) * (p**2 - p)
    assert aut_count(r1) == p - 1


def test_indecomposable_and_rigid():
    p = 3
    r = kron_reg(p, 1)
    assert is_indecomposable(r)
    assert not is_rigid(r)
    s1 = simple(KRON, p, 1)
    assert is_rigid(s1)
    assert not is_indecomposable(direct_sum(s1, s1))


def test_sub_quotient():
    p = 3
    r = kron_reg(p, 1, 2)  # quasi-length two over the point lam=1
    subs = submodules(r, (1, 1))
    assert len(subs) == 1  # unique regular submodule of that shape
    sr = sub_rep(r, subs[0])
    assert iso_test(sr, kron_reg(p, 1))
    qr = quotient_rep(r, subs[0])
    assert iso_test(qr, kron_reg(p, 1))


def test_radical_top():
    p = 3
    proj2 = projective(KRON_FRAMED, p, 2)
    assert proj2.dims == (2, 1, 2, 1)
    rad = radical_bases(proj2)
    assert tuple(len(b) for b in rad) == (2, 0, 2, 1)
    assert top_dims(proj2) == (0, 1, 0, 0)
    assert top_dims(simple(KRON, p, 1)) == (1, 0)
    assert radical_bases(simple(KRON, p, 1)) == ((), ())


def test_projective_injective_shapes():
    p = 3
    assert projective(KRON_FRAMED, p, 1).dims == (1, 0, 1, 0)
    assert injective(KRON_FRAMED, p, 1).dims == (1, 2, 0, 0)
    assert injective(KRON_FRAMED, p, 3).dims == (1, 2, 1, 0)
    assert simple(A2, p, 1) == projective(A2, p, 1)


def test_presentation_euler_characteristic():
    p = 3
    r = kron_reg(p, 1)
    rext = extend_to(r, KRON_FRAMED)
    p1, p0, _h = min_proj_presentation(rext)
    d0 = p0.dims()
    d1 = p1.dims()
    diff = tuple(a - b for a, b in zip(d0, d1))
    assert diff == rext.dims


def test_tau_a2():
    p = 3
    s2 = simple(A2, p, 2)
    t = tau(s2)
    assert iso_test(t, simple(A2, p, 1))
    # tau errors on projectives, naming the summand
    with pytest.raises(ProjectiveSummandError):
        tau(simple(A2, p, 1))


def test_tau_inverse_roundtrip():
    p = 3
    s2 = simple(A2, p, 2)
    assert iso_test(tau_inverse(tau(s2)), s2)
    s1 = simple(A2, p, 1)
    assert iso_test(tau(tau_inverse(s1)), s1)


def test_tau_homogeneous_fixed():
    p = 3
    for lam in (1, 2):
        r = kron_reg(p, lam)
        assert iso_test(tau(r), r)


def test_coxeter_matches_tau():
    p = 3
    s2 = simple(A2, p, 2)
    assert coxeter_transform(A2, s2.dims) == tau(s2).dims
    r = kron_reg(p, 1)
    assert coxeter_transform(KRON, r.dims) == tau(r).dims


def test_cartan_matrix_a2():
    # columns are dimension vectors of projectives
    assert cartan_matrix(A2) == ((1, 1), (0, 1))


def test_bgp_reflection():
    p = 3
    # vertex 1 is a sink of A2 (arrow 2 -> 1)
    refl, mult = bgp_reflect(simple(A2, p, 1), 1)
    assert refl.is_zero() and mult == 1
    proj2 = projective(A2, p, 2)  # dims (1,1)
    out, mult = bgp_reflect(proj2, 1)
    assert mult == 0
    assert out.dims == (0, 1)


def test_bgp_reflect_dim_follows_simple_reflection():
    p = 3
    s2 = simple(A2, p, 2)
    out, mult = bgp_reflect(s2, 1)
    # s_1 applied to (0,1) for the A2 Cartan gives (1,1)
    assert mult == 0 and out.dims == (1, 1)


def test_zero_rep_and_extend():
    z = zero_rep(KRON, 3)
    assert z.is_zero()
    ext = extend_to(kron_reg(3, 1), KRON_FRAMED)
    assert ext.dims == (1, 1, 0, 0)
    assert hom_dim(ext, ext) == 1

from itertools import product
from math import comb

import pytest

from hookspecht.combinatorics import Params
from hookspecht.homs import (
    PREDICTED_KINDS,
    CongruenceError,
    HookFamily,
    LinearMap,
    NotWellDefined,
    Subquotient,
    alpha_map,
    beta_map,
    chi_applies,
    chi_cokernel,
    chi_image,
    chi_map,
    check_compositions,
    check_exactness,
    check_hom_property,
    gamiso_check,
    gamma_applies,
    gamma_map,
    gamma_matrix,
    hom_from_generator,
    induced_map,
    phi_map,
    predicted_legsets,
    predicted_subspace,
    tau_map,
)
from hookspecht.linalg import Field, SparseMatrix, spin

CASE2 = Params(3, (0, 1), 5, 2)
CASE3 = Params(3, (0, 2), 5, 2)
CASE4 = Params(3, (0, 2), 6, 3)


def families(max_n=7, es=(3, 4)):
    for e in es:
        for k in product(range(e), repeat=2):
            for n in range(1, max_n + 1):
                yield Params(e, k, n, 0)


def test_gamma_examples():
    g = gamma_map(2, CASE2)
    S2, S3 = g.domain.parent, g.codomain.parent
    assert g.matrix.apply(S2.vec((1, 2))) == S3.vec((1, 2, 5))
    for a in range(1, 5):
        assert g.matrix.apply(S2.vec((a, 5))) == {}
    im, ker = g.image_kernel()
    # three-element subsets of 1..5 containing 5, and pairs ending in 5
    assert (im.dim, ker.dim) == (comb(4, 2), comb(4, 1)) == (6, 4)


def test_gamma_congruence_and_range():
    with pytest.raises(CongruenceError):
        gamma_map(1, Params(3, (0, 0), 5))
    with pytest.raises(ValueError):
        gamma_map(5, CASE2)


def test_hom_property_of_gamma_and_zero_map():
    for m in range(5):
        assert check_hom_property(gamma_map(m, CASE2)).passed
    g = gamma_map(2, CASE2)
    zero = LinearMap("zero", g.domain, g.codomain, SparseMatrix.zero(g.codomain.dim, g.domain.dim))
    assert check_hom_property(zero).passed


def test_corrupted_gamma_fails():
    fam = HookFamily.of(CASE2)

    def careless(A, n):
        # forgets that v(A) with n in A must go to zero
        if n not in A:
            return A + (n,)
        free = [x for x in range(1, n + 1) if x not in A]
        return tuple(sorted(A + (free[0],)))

    g = gamma_map(2, CASE2, family=fam)
    bad = LinearMap("careless", g.domain, g.codomain, gamma_matrix(fam, 2, careless))
    res = check_hom_property(bad)
    assert not res.passed
    assert res.details["domain_vector"] == {"(1,5)": "1"}


def test_predicted_subspaces_examples():
    assert predicted_subspace("im_chi", 2, CASE3).dim == comb(4, 2)
    assert predicted_subspace("ker_tau", 2, CASE3) == predicted_subspace("im_chi", 2, CASE3)
    assert predicted_subspace("im_phi", 3, CASE4).dim == 6
    assert predicted_subspace("im_phi", 4, CASE4).dim == 4
    for m in range(1, 5):
        assert predicted_subspace("ker_gamma", m, CASE2).dim == comb(4, m - 1)
    with pytest.raises(CongruenceError):
        predicted_subspace("im_chi", 2, CASE2)
    with pytest.raises(CongruenceError):
        predicted_subspace("im_phi", 2, CASE3)
    with pytest.raises(ValueError):
        predicted_subspace("im_psi", 2, CASE3)


def test_predicted_subspaces_are_submodules():
    for p in families(6):
        fam = HookFamily.of(p)
        for kind in PREDICTED_KINDS:
            for m in range(p.n + 1):
                try:
                    mm, _ = predicted_legsets(kind, m, p)
                except (CongruenceError, ValueError):
                    continue
                S = predicted_subspace(kind, m, p, family=fam)
                M = fam.module(mm)
                assert spin(S.basis, M.generators(), M.dim, M.field) == S, (kind, m, p)


def test_exactness_case_two():
    res = check_exactness(CASE2)
    assert res and all(r.passed for r in res), [r for r in res if not r.passed]
    names = {r.check for r in res}
    assert {f"im_gamma_{m - 1}=ker_gamma_{m}" for m in range(1, 5)} <= names
    for m in range(1, 5):
        im, ker = gamma_map(m, CASE2).image_kernel()
        assert (im.dim, ker.dim) == (comb(4, m), comb(4, m - 1))


def test_exactness_case_three():
    res = check_exactness(CASE3)
    assert res and all(r.passed for r in res)
    tau = tau_map(2, HookFamily.of(CASE3))
    _, ker = tau.image_kernel()
    assert ker == predicted_subspace("im_chi", 2, CASE3)
    assert tau.codomain.dim == comb(4, 1)


def test_exactness_grid():
    for p in families(6):
        for r in check_exactness(p):
            assert r.passed, (p, r)
        if not (gamma_applies(p) or chi_applies(p)):
            assert check_exactness(p) == []


def test_compositions_case_four():
    res = check_compositions(Params(3, (0, 2), 6))
    assert res and all(r.passed for r in res), [r for r in res if not r.passed]
    names = {r.check for r in res}
    for m in range(1, 5):
        assert f"gamma_{m}(im_chi_{m})<=im_chi_{m + 1}" in names
    assert "im(gamma3chi3)=im_phi_4" in names
    with pytest.raises(CongruenceError):
        check_compositions(CASE3)


def test_maps_on_generators():
    fam = HookFamily.of(CASE4)
    n = 6
    for m in range(1, n):
        chi = chi_map(m, fam)
        assert check_hom_property(chi).passed
        assert chi.rank() == chi.domain.dim == comb(n - 1, m)
    for m in range(1, n):
        phi = phi_map(m, fam)
        assert check_hom_property(phi).passed
    for m in range(n - 1):
        assert check_hom_property(alpha_map(m, fam)).passed
        assert check_hom_property(beta_map(m, fam)).passed
    assert chi_image(0, fam).dim == 1 and chi_image(n, fam).dim == 0
    assert chi_cokernel(n, fam).dim == 1


def test_gamiso():
    rep = gamiso_check(2, CASE2)
    assert rep.passed and rep.size_M == rep.size_N == rep.rank == 6
    rep = gamiso_check(0, CASE2)
    assert (rep.size_M, rep.size_N, rep.rank) == (1, 1, 1)
    for m in range(5):
        assert gamiso_check(m, CASE2).rank == comb(4, m)
    with pytest.raises(CongruenceError):
        gamiso_check(1, CASE3)


def test_gamiso_over_prime_field():
    rep = gamiso_check(2, CASE2, Field(2))
    assert rep.passed


def test_subquotient_guards():
    fam = HookFamily.of(CASE3)
    M = fam.module(2)
    Q = chi_image(2, fam)
    assert Q.is_closed()
    with pytest.raises(NotWellDefined):
        Q.coords(M.vec((1, 2)))
    C = chi_cokernel(2, fam)
    assert C.is_zero_class(M.vec((2, 3)))
    assert not C.is_zero_class(M.vec((1, 3)))


def test_induced_map_requires_compatible_quotients():
    fam = HookFamily.of(CASE3)
    M = fam.module(2)
    whole = Subquotient.whole(M)
    coker = chi_cokernel(2, fam)
    with pytest.raises(NotWellDefined):
        induced_map("back", SparseMatrix.identity(M.dim), coker, whole)


def test_hom_from_generator_rejects_non_maps():
    fam = HookFamily.of(CASE3)
    M = fam.module(2)
    whole = Subquotient.whole(M)
    with pytest.raises(NotWellDefined):
        hom_from_generator("bogus", whole, M.z(), whole, M.vec((2, 3)))
    ident = hom_from_generator("id", whole, M.z(), whole, M.z())
    assert ident.matrix == SparseMatrix.identity(M.dim)

from itertools import product
from math import comb

import pytest

from hookspecht.combinatorics import (
    BipartitionShape,
    Params,
    enumerate_standard_hook,
    garnir_relations,
    leg_word,
    residue_sequence_hook,
)
from hookspecht.linalg import Field, SparseMatrix
from hookspecht.module import HookSpechtModule, idem_apply, psi_apply, y_apply


def grid(max_n=6, es=(3, 4)):
    for e in es:
        for k in product(range(e), repeat=2):
            for n in range(1, max_n + 1):
                for m in range(n + 1):
                    yield Params(e, k, n, m)


def test_psi_examples():
    assert psi_apply(2, (2, 4), Params(3, (0, 0), 5, 2)) == {(3, 4): 1}
    assert psi_apply(3, (1, 2, 4), Params(3, (0, 0), 6, 3)) == {}
    assert psi_apply(3, (5,), Params(3, (0, 0), 6, 1)) == {(3,): -1}


def test_y_examples():
    p = Params(3, (0, 0), 4, 1)
    for A in enumerate_standard_hook(p):
        assert y_apply(3, A, p) == {}
    assert y_apply(1, (2,), p) == {(1,): -1}
    assert y_apply(2, (2,), p) == {(1,): 1}


def test_out_of_range_indices():
    p = Params(3, (0, 0), 4, 1)
    with pytest.raises(ValueError):
        psi_apply(0, (1,), p)
    with pytest.raises(ValueError):
        psi_apply(4, (1,), p)
    with pytest.raises(ValueError):
        y_apply(5, (1,), p)
    with pytest.raises(ValueError):
        psi_apply(1, (1, 2), p)


def test_idempotents():
    p = Params(3, (0, 1), 5, 2)
    A = (2, 4)
    r = residue_sequence_hook(p, A)
    assert idem_apply(r, A, p) == {A: 1}
    bumped = (r[0] + 1,) + r[1:]
    assert idem_apply(bumped, A, p) == {}
    M = HookSpechtModule(p)
    for B in M.basis:
        hits = [s for s in M.occurring_residues() if idem_apply(s, B, p)]
        assert hits == [residue_sequence_hook(p, B)]


def test_idempotents_partition_identity():
    for p in grid(5):
        M = HookSpechtModule(p)
        total = SparseMatrix.zero(M.dim, M.dim)
        for s in M.occurring_residues():
            E = M.e_matrix(s)
            assert E @ E == E
            for t in M.occurring_residues():
                if t != s:
                    assert (E @ M.e_matrix(t)).nnz() == 0
            total = total + E
        assert total == SparseMatrix.identity(M.dim)


def test_generator_matrices_are_signed_monomial():
    for p in grid(7, (3, 4, 5)):
        M = HookSpechtModule(p)
        assert M.dim == comb(p.n, p.m)
        for lab in M.generator_labels():
            if lab[0] == "e":
                continue
            G = M.generator_matrix(lab)
            assert G.is_monomial()
            assert all(c in (1, -1) for c in G.entries().values())


def test_m_zero_psi_vanishes():
    M = HookSpechtModule(Params(4, (1, 2), 5, 0))
    assert M.dim == 1
    for l in range(1, 5):
        assert M.psi_matrix(l).nnz() == 0


def test_generator_matrix_cached_and_labels_checked():
    M = HookSpechtModule(Params(3, (0, 0), 4, 2))
    assert M.psi_matrix(2) is M.psi_matrix(2)
    for bad in [("q", 1), ("e", (0, 1)), ()]:
        with pytest.raises(ValueError):
            M.generator_matrix(bad)


def test_vanishing_when_both_or_neither_in_legset():
    for p in grid(7):
        d, e = p.d, p.e
        for A in enumerate_standard_hook(p):
            S = set(A)
            for i in range(1, p.n):
                both = i in S and i + 1 in S
                neither = i not in S and i + 1 not in S
                if both and (i - d - 2) % e != 0:
                    assert psi_apply(i, A, p) == {}
                if neither and (i - d) % e != 0:
                    assert psi_apply(i, A, p) == {}


def test_garnir_words_kill_generator():
    for p in grid(7):
        M = HookSpechtModule(p)
        shape = BipartitionShape.hook_bipartition(p.n, p.m)
        for w in garnir_relations(shape, p):
            assert M.apply_word(w, M.z()) == {}


def test_basis_vectors_are_leg_words_on_generator():
    for p in grid(7):
        M = HookSpechtModule(p)
        for A in M.basis:
            assert M.apply_word(leg_word(A), M.z()) == M.vec(A)


def test_finite_field_matrices_agree():
    p = Params(3, (0, 1), 6, 3)
    Q = HookSpechtModule(p)
    F2 = HookSpechtModule(p, Field(2))
    for lab in Q.generator_labels():
        dense = Q.generator_matrix(lab).to_dense()
        assert F2.generator_matrix(lab).to_dense() == [[x % 2 for x in row] for row in dense]


def test_sign_overrides_are_validated():
    with pytest.raises(KeyError):
        HookSpechtModule(Params(3, (0, 0), 3, 1), signs={"rel9": 1})
    M = HookSpechtModule(Params(3, (0, 0), 6, 1), signs={"rel3": 1})
    assert M.to_lincomb(M.psi_matrix(3).apply(M.vec((5,)))) == {(3,): 1}

"""The Specht module of a hook bipartition and its generator actions.

The module is defined directly by the action of ``e(i)``, ``y_i`` and
``psi_l`` on the basis ``v(A)``; every generator sends a basis vector to
zero or to plus or minus another basis vector.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .combinatorics import (
    GenWord,
    LegSet,
    Params,
    ResidueSeq,
    check_legset,
    enumerate_standard_hook,
    residue_sequence_hook,
)
from .linalg import RATIONALS, Field, SparseMatrix, Vector

LinComb = Dict[LegSet, int]

# Signs of the nonzero cases of the action; overriding one of these is how
# the tests inject deliberate errors.
DEFAULT_SIGNS: Dict[str, int] = {
    "rel1": 1,
    "rel2": 1,
    "rel3": -1,
    "rel4": 1,
    "rel5": -1,
    "rel6": 1,
    "y_a": -1,
    "y_b": 1,
}


def _replace(A: LegSet, old: int, new: int) -> LegSet:
    return tuple(sorted(new if a == old else a for a in A))


def _resolve_signs(signs: Optional[Mapping[str, int]]) -> Dict[str, int]:
    table = dict(DEFAULT_SIGNS)
    if signs:
        unknown = set(signs) - set(table)
        if unknown:
            raise KeyError(f"unknown sign keys {sorted(unknown)}")
        table.update(signs)
    return table


def idem_apply(iseq: Sequence[int], A: Sequence[int], params: Params) -> LinComb:
    A = check_legset(params, A)
    if len(iseq) != params.n:
        raise ValueError(f"residue sequence must have length {params.n}")
    if tuple(x % params.e for x in iseq) == residue_sequence_hook(params, A):
        return {A: 1}
    return {}


def psi_rule(l: int, A: Sequence[int], params: Params) -> Optional[Tuple[str, LegSet]]:
    """Which nonzero case applies to ``psi_l v(A)``, with the resulting leg set."""
    n, e, d = params.n, params.e, params.d
    if not 1 <= l <= n - 1:
        raise ValueError(f"psi index {l} outside 1..{n - 1}")
    A = check_legset(params, A)
    S = set(A)
    if l in S and l + 1 not in S:
        return "rel1", _replace(A, l, l + 1)
    if (l - d) % e == 0 and l < n - 1:
        if l not in S and l + 1 in S and l + 2 in S:
            return "rel2", tuple(sorted((S - {l + 2}) | {l}))
        if l + 2 in S and l not in S and l + 1 not in S:
            return "rel3", _replace(A, l + 2, l)
    if (l - d - 2) % e == 0 and l >= 2:
        if l in S and l + 1 in S and l - 1 not in S:
            return "rel4", tuple(sorted((S - {l + 1}) | {l - 1}))
        if l + 1 in S and l not in S and l - 1 not in S:
            return "rel5", _replace(A, l + 1, l - 1)
    if (l - d) % e not in (0, 1, 2) and l + 1 in S and l not in S:
        return "rel6", _replace(A, l + 1, l)
    return None


def psi_apply(l: int, A: Sequence[int], params: Params,
              signs: Optional[Mapping[str, int]] = None) -> LinComb:
    hit = psi_rule(l, A, params)
    if hit is None:
        return {}
    rule, B = hit
    return {B: _resolve_signs(signs)[rule]}


def y_rule(i: int, A: Sequence[int], params: Params) -> Optional[Tuple[str, LegSet]]:
    n, e, d = params.n, params.e, params.d
    if not 1 <= i <= n:
        raise ValueError(f"y index {i} outside 1..{n}")
    A = check_legset(params, A)
    S = set(A)
    if (i - d - 1) % e == 0 and i not in S and i + 1 in S:
        return "y_a", _replace(A, i + 1, i)
    if (i - d - 2) % e == 0 and i >= 2 and i - 1 not in S and i in S:
        return "y_b", _replace(A, i, i - 1)
    return None


def y_apply(i: int, A: Sequence[int], params: Params,
            signs: Optional[Mapping[str, int]] = None) -> LinComb:
    hit = y_rule(i, A, params)
    if hit is None:
        return {}
    rule, B = hit
    return {B: _resolve_signs(signs)[rule]}


Label = Tuple  # ("e", iseq) | ("y", i) | ("psi", l)


class HookSpechtModule:
    """``S_{((n-m),(1^m))}`` over a chosen field, with cached generator matrices."""

    def __init__(self, params: Params, field: Field = RATIONALS,
                 signs: Optional[Mapping[str, int]] = None):
        self.params = params
        self.field = field
        self.signs = _resolve_signs(signs)
        self.basis: List[LegSet] = enumerate_standard_hook(params)
        self.index: Dict[LegSet, int] = {A: k for k, A in enumerate(self.basis)}
        self.residues: List[ResidueSeq] = [residue_sequence_hook(params, A) for A in self.basis]
        self._by_residue: Dict[ResidueSeq, List[int]] = {}
        for k, r in enumerate(self.residues):
            self._by_residue.setdefault(r, []).append(k)
        self._cache: Dict[Label, SparseMatrix] = {}

    def __repr__(self):
        p = self.params
        return f"HookSpechtModule(e={p.e}, kappa={p.kappa}, n={p.n}, m={p.m}, field={self.field})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.params.n

    def occurring_residues(self) -> List[ResidueSeq]:
        """Residue sequences of basis vectors, in order of first appearance."""
        return list(self._by_residue)

    def basis_with_residue(self, iseq: Sequence[int]) -> List[int]:
        return list(self._by_residue.get(tuple(iseq), []))

    # vectors ------------------------------------------------------------

    def vec(self, A: Sequence[int], coeff=1) -> Vector:
        c = self.field(coeff)
        return {self.index[check_legset(self.params, A)]: c} if c else {}

    def z(self) -> Vector:
        return self.vec(tuple(range(1, self.params.m + 1)))

    def from_lincomb(self, lc: Mapping[LegSet, object]) -> Vector:
        out: Vector = {}
        for A, c in lc.items():
            c = self.field(c)
            if c:
                out[self.index[tuple(A)]] = c
        return out

    def to_lincomb(self, v: Vector) -> Dict[LegSet, object]:
        return {self.basis[k]: c for k, c in sorted(v.items())}

    # generators ---------------------------------------------------------

    def psi_matrix(self, l: int) -> SparseMatrix:
        return self.generator_matrix(("psi", l))

    def y_matrix(self, i: int) -> SparseMatrix:
        return self.generator_matrix(("y", i))

    def e_matrix(self, iseq: Sequence[int]) -> SparseMatrix:
        return self.generator_matrix(("e", tuple(x % self.params.e for x in iseq)))

    def generator_labels(self) -> List[Label]:
        n = self.params.n
        return ([("e", r) for r in self.occurring_residues()]
                + [("y", i) for i in range(1, n + 1)]
                + [("psi", l) for l in range(1, n)])

    def generators(self) -> List[SparseMatrix]:
        return [self.generator_matrix(g) for g in self.generator_labels()]

    def generator_matrix(self, label: Label) -> SparseMatrix:
        label = tuple(label)
        if label in self._cache:
            return self._cache[label]
        kind = label[0] if label else None
        F, p = self.field, self.params
        if kind == "psi" and len(label) == 2:
            act = lambda A: psi_apply(label[1], A, p, self.signs)
        elif kind == "y" and len(label) == 2:
            act = lambda A: y_apply(label[1], A, p, self.signs)
        elif kind == "e" and len(label) == 2 and len(label[1]) == p.n:
            act = lambda A: idem_apply(label[1], A, p)
        else:
            raise ValueError(f"unknown generator label {label!r}")
        cols = [self.from_lincomb(act(A)) for A in self.basis]
        M = SparseMatrix(self.dim, self.dim, cols, F)
        self._cache[label] = M
        return M

    def apply_word(self, word: GenWord, v: Vector) -> Vector:
        """Apply ``word`` to ``v``; the rightmost letter acts first."""
        for r in reversed(word.letters):
            v = self.psi_matrix(r).apply(v)
            if not v:
                return {}
        if word.sign < 0:
            v = {k: self.field.neg(c) for k, c in v.items()}
        return v

    def apply_labels(self, labels: Sequence[Label], v: Vector) -> Vector:
        """Apply ``labels[0] labels[1] ...`` to ``v``, rightmost first."""
        for lab in reversed(labels):
            v = self.generator_matrix(lab).apply(v)
            if not v:
                return {}
        return v

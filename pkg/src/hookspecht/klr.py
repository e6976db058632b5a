"""Check the KLR and cyclotomic relations on a hook Specht module.

Each relation ``X e(i) = Y e(i)`` is checked column by column: for every
basis vector ``v`` with residue sequence ``i`` the two sides are applied to
``v`` and compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from .combinatorics import BipartitionShape, garnir_relations
from .linalg import Vector, axpy
from .module import HookSpechtModule


@dataclass
class Counterexample:
    relation: str
    iseq: tuple
    basis_vector: tuple
    lhs: dict
    rhs: dict

    def as_dict(self) -> dict:
        fmt = lambda d: {",".join(map(str, A)) or "()": str(c) for A, c in d.items()}
        return {"relation": self.relation, "iseq": list(self.iseq),
                "basis_vector": list(self.basis_vector), "lhs": fmt(self.lhs), "rhs": fmt(self.rhs)}


@dataclass
class KLRReport:
    params: dict
    field: str
    checked: int = 0
    failures: List[Counterexample] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first(self) -> Optional[Counterexample]:
        return self.failures[0] if self.failures else None

    def as_dict(self) -> dict:
        return {"params": self.params, "field": self.field, "passed": self.passed,
                "checked": self.checked,
                "first_counterexample": self.first.as_dict() if self.first else None}


class _Stop(Exception):
    pass


class _Checker:
    def __init__(self, M: HookSpechtModule, stop_at_first: bool):
        self.M = M
        self.F = M.field
        self.stop = stop_at_first
        self.report = KLRReport(M.params.as_dict(), M.field.name)

    def act(self, label, v: Vector) -> Vector:
        return self.M.generator_matrix(label).apply(v)

    def word(self, labels, v: Vector) -> Vector:
        return self.M.apply_labels(labels, v)

    def combo(self, *terms) -> Vector:
        """Sum of ``coeff * vector`` pairs."""
        out: Vector = {}
        for c, v in terms:
            axpy(self.F, out, self.F(c), v)
        return out

    def expect(self, name: str, k: Optional[int], lhs: Vector, rhs: Vector) -> None:
        self.report.checked += 1
        if lhs != rhs:
            M = self.M
            iseq = M.residues[k] if k is not None else ()
            A = M.basis[k] if k is not None else ()
            self.report.failures.append(
                Counterexample(name, iseq, A, M.to_lincomb(lhs), M.to_lincomb(rhs)))
            if self.stop:
                raise _Stop


def verify_klr_relations(M: HookSpechtModule, stop_at_first: bool = True) -> KLRReport:
    """Verify the KLR presentation, cyclotomic relation and Specht relations on ``z``."""
    ck = _Checker(M, stop_at_first)
    try:
        _run(ck)
    except _Stop:
        pass
    return ck.report


def _run(ck: _Checker) -> None:
    M, F = ck.M, ck.F
    p = M.params
    n, e = p.n, p.e
    dim = M.dim
    one = F.one
    seqs = M.occurring_residues()
    unit = [{k: one} for k in range(dim)]

    # idempotents: orthogonal projectors summing to the identity
    E = {r: M.e_matrix(r) for r in seqs}
    for r in seqs:
        for s in seqs:
            prod = E[r] @ E[s]
            want = E[r] if r == s else E[r].scaled(0)
            ck.expect(f"idem_orth({r},{s})", None, {0: prod.nnz()} if prod != want else {}, {})
    total = None
    for r in seqs:
        total = E[r] if total is None else total + E[r]
    for k in range(dim):
        ck.expect("idem_sum", k, total.apply(unit[k]) if total else {}, unit[k])

    def res_of(v: Vector, seq) -> bool:
        return all(M.residues[j] == seq for j in v)

    for k in range(dim):
        v = unit[k]
        i = M.residues[k]
        # e(j) with j != i kills v and e(i) fixes it; already covered above.
        for r in range(1, n + 1):
            yv = ck.act(("y", r), v)
            ck.expect(f"y{r}_idem", k, {} if res_of(yv, i) else yv, {})
        for r in range(1, n):
            sri = i[:r - 1] + (i[r], i[r - 1]) + i[r + 1:]
            pv = ck.act(("psi", r), v)
            ck.expect(f"psi{r}_idem", k, {} if res_of(pv, sri) else pv, {})

        # commutation of the y's
        for r in range(1, n + 1):
            for s in range(r + 1, n + 1):
                ck.expect(f"y{r}y{s}_comm", k, ck.word([("y", r), ("y", s)], v),
                          ck.word([("y", s), ("y", r)], v))
        # psi_r y_s = y_s psi_r for s != r, r+1
        for r in range(1, n):
            for s in range(1, n + 1):
                if s in (r, r + 1):
                    continue
                ck.expect(f"psi{r}y{s}_comm", k, ck.word([("psi", r), ("y", s)], v),
                          ck.word([("y", s), ("psi", r)], v))
        # distant psi's commute
        for r in range(1, n):
            for s in range(r + 2, n):
                ck.expect(f"psi{r}psi{s}_comm", k, ck.word([("psi", r), ("psi", s)], v),
                          ck.word([("psi", s), ("psi", r)], v))

        for r in range(1, n):
            a, b = i[r - 1], i[r]
            delta = 1 if a == b else 0
            ps, yr, yr1 = ("psi", r), ("y", r), ("y", r + 1)
            ck.expect(f"psi{r}y{r + 1}", k, ck.word([ps, yr1], v),
                      ck.combo((1, ck.word([yr, ps], v)), (delta, v)))
            ck.expect(f"y{r + 1}psi{r}", k, ck.word([yr1, ps], v),
                      ck.combo((1, ck.word([ps, yr], v)), (delta, v)))

            sq = ck.word([ps, ps], v)
            if a == b:
                want: Vector = {}
            elif (b - a) % e == 1:
                want = ck.combo((1, ck.act(yr1, v)), (-1, ck.act(yr, v)))
            elif (a - b) % e == 1:
                want = ck.combo((1, ck.act(yr, v)), (-1, ck.act(yr1, v)))
            else:
                want = v
            ck.expect(f"psi{r}_squared", k, sq, want)

        for r in range(1, n - 1):
            a, b, c = i[r - 1], i[r], i[r + 1]
            p1, p2 = ("psi", r), ("psi", r + 1)
            lhs = ck.word([p1, p2, p1], v)
            rhs = ck.word([p2, p1, p2], v)
            if c == a and (b - a) % e == 1:
                rhs = ck.combo((1, rhs), (1, v))
            elif c == a and (a - b) % e == 1:
                rhs = ck.combo((1, rhs), (-1, v))
            ck.expect(f"braid{r}", k, lhs, rhs)

        # cyclotomic relation
        power = sum(1 for kap in p.kappa if kap == i[0])
        w = v
        for _ in range(power):
            w = ck.act(("y", 1), w)
        ck.expect("cyclotomic", k, w, {})

    # Specht relations on z
    z = M.z()
    kz = M.index[tuple(range(1, p.m + 1))]
    for r in range(1, n + 1):
        ck.expect(f"z_y{r}", kz, ck.act(("y", r), z), {})
    for r in list(range(1, p.m)) + list(range(p.m + 1, n)):
        ck.expect(f"z_psi{r}", kz, ck.act(("psi", r), z), {})
    ck.expect("z_idem", kz, ck.act(("e", M.residues[kz]), z), z)
    shape = BipartitionShape.hook_bipartition(n, p.m)
    for g in garnir_relations(shape, p):
        ck.expect(f"z_garnir{list(g.letters)}", kz, M.apply_word(g, z), {})

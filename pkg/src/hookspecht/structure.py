"""Irreducibility and composition series of hook Specht modules.

Four cases occur, decided by whether ``kappa_2 = kappa_1 - 1`` and whether
``n = kappa_2 - kappa_1 + 1`` modulo ``e``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import List, Optional, Sequence, Tuple

from .combinatorics import (
    GenWord,
    LegSet,
    Params,
    check_legset,
    psi_down,
    psi_up,
    residue_sequence_hook,
)
from .homs import (
    HookFamily,
    Subquotient,
    chi_applies,
    chi_map,
    gamiso_check,
    gamma_applies,
    gamma_map,
    induced_map,
    phi_map,
    check_hom_property,
)
from .linalg import RATIONALS, Field, Subspace, Vector, map_image_kernel, rref_span, spin
from .module import HookSpechtModule, psi_apply
from .report import CheckResult, legset_str, vec_repr


# ---------------------------------------------------------------- words

# Subcases whose printed sign gives -1 times the target under the explicit
# action; the letters are right, the overall sign is flipped.
SIGN_FIXES = frozenset({
    "1b-i:adjacent", "1b-i:spaced", "1c", "2c", "3a:adjacent", "3a:spaced", "3b",
    "shifted:0:adjacent", "shifted:0:spaced", "shifted:1",
})


@dataclass(frozen=True)
class IrrWord:
    """A word from the case table, or ``word is None`` when no case applies.

    ``literal`` is the word with the table's printed sign; ``word`` carries
    the sign that makes the coefficient of ``target`` exactly ``+1``.
    """

    word: Optional[GenWord]
    case: str
    target: Optional[LegSet] = None
    literal: Optional[GenWord] = None

    @property
    def found(self) -> bool:
        return self.word is not None


def irr_admissible(i: int, A: Sequence[int], params: Params) -> bool:
    """``a_j = j`` for ``j < i`` and ``a_i > i``."""
    A = tuple(A)
    return 1 <= i <= len(A) and all(A[j - 1] == j for j in range(1, i)) and A[i - 1] > i


def irr_word(i: int, A: Sequence[int], params: Params) -> IrrWord:
    """A word ``x`` with ``x v(1..i-1, a_i, ...) = v(1..i, a_{i+1}, ...)``.

    When ``kappa_2 = kappa_1 - 1`` and ``i = 1`` the target is
    ``v(2, a_2, ...)`` instead, which needs ``a_1 > 2``.
    """
    A = check_legset(params, A)
    if not irr_admissible(i, A, params):
        raise ValueError(f"need a_j = j for j < {i} and a_{i} > {i}, got {A}")
    e, d, n, m = params.e, params.d, params.n, len(A)
    a = A[i - 1]
    nxt = A[i] if i < m else None
    cls = lambda x: (x - d) % e   # 1 and 2 are the special classes

    def split(adjacent: GenWord, spaced: GenWord, tag: str) -> IrrWord:
        # the two alternatives depending on where a_{i+1} sits
        if nxt is not None and nxt == a + 1:
            return IrrWord(adjacent, tag + ":adjacent")
        if (nxt is not None and nxt >= a + 2) or (nxt is None and a < n):
            return IrrWord(spaced, tag + ":spaced")
        return IrrWord(None, tag + ":uncovered")

    if d == e - 1 and i == 1:
        target = (2,) + A[1:]
        if a <= 2:
            return IrrWord(None, "shifted:a1<=2", (1,) + A[1:])
        if a % e == 0:
            res = split(-(GenWord((a,)) * psi_up(2, a - 1)), psi_up(2, a), "shifted:0")
        elif a % e == 1:
            res = IrrWord(psi_up(2, a - 2), "shifted:1")
        else:
            res = IrrWord(psi_up(2, a - 1), "shifted:other")
        return _finish(res, target)

    target = tuple(range(1, i + 1)) + A[i:]
    if cls(i) == 1:
        if cls(a) == 1:
            res = split(-(GenWord((a,)) * psi_up(i + 1, a - 1)), psi_up(i + 1, a), "1a")
        elif cls(a) == 2:
            if a == i + 1:
                sq = GenWord((i + 1, i + 1))
                if nxt is not None and nxt == i + 2:
                    res = IrrWord(-sq, "1b-i:adjacent")
                elif (nxt is not None and nxt > i + 2) or (nxt is None and a < n):
                    res = IrrWord(sq, "1b-i:spaced")
                else:
                    res = IrrWord(None, "1b-i:uncovered")
            else:
                res = IrrWord(psi_up(i + 1, a - 2), "1b-ii")
        else:
            res = IrrWord(psi_up(i + 1, a - 1), "1c")
    elif cls(i) == 2:
        down = psi_down(i, i - 1)
        if cls(a) == 1:
            res = split(GenWord((a,)) * down * psi_up(i + 1, a - 1),
                        -(down * psi_up(i + 1, a)), "2a")
        elif cls(a) == 2:
            res = IrrWord(-(down * psi_up(i + 1, a - 2)), "2b")
        else:
            res = IrrWord(-(down * psi_up(i + 1, a - 1)), "2c")
    else:
        if cls(a) == 1:
            res = split(-(GenWord((a,)) * psi_up(i, a - 1)), psi_up(i, a), "3a")
        elif cls(a) == 2:
            res = IrrWord(psi_up(i, a - 2), "3b")
        else:
            res = IrrWord(psi_up(i, a - 1), "3c")
    return _finish(res, target)


def _finish(res: IrrWord, target: LegSet) -> IrrWord:
    if res.word is None:
        return IrrWord(None, res.case, target)
    word = -res.word if res.case in SIGN_FIXES else res.word
    return IrrWord(word, res.case, target, res.word)


def apply_word_to_legset(word: GenWord, A: LegSet, params: Params) -> dict:
    """Evaluate ``word v(A)`` with the explicit action; returns ``{LegSet: coeff}``."""
    vec = {A: word.sign}
    for r in reversed(word.letters):
        out = {}
        for B, c in vec.items():
            for C, s in psi_apply(r, B, params).items():
                out[C] = out.get(C, 0) + c * s
        vec = {B: c for B, c in out.items() if c}
        if not vec:
            break
    return vec


# ---------------------------------------------------------------- separator

class SeparatorNotFound(RuntimeError):
    pass


@dataclass(frozen=True)
class Separator:
    """An element killing exactly one of ``v(s)``, ``v(t)``; ``survivor`` names the other."""

    kind: str            # "idempotent" or "word"
    element: object      # residue sequence or GenWord
    survivor: str        # "s" or "t"


def separator(s: Sequence[int], t: Sequence[int], params: Params, max_len: int = 2) -> Separator:
    s, t = check_legset(params, s), check_legset(params, t)
    if s == t:
        raise ValueError("separator needs two distinct leg sets")
    rs, rt = residue_sequence_hook(params, s), residue_sequence_hook(params, t)
    if rs != rt:
        return Separator("idempotent", rt, "t")
    # largest letters first, following the choice of the largest differing entry
    letters = range(params.n - 1, 0, -1)
    for length in range(1, max_len + 1):
        for w in product(letters, repeat=length):
            word = GenWord(w)
            xs = apply_word_to_legset(word, s, params)
            xt = apply_word_to_legset(word, t, params)
            if bool(xs) != bool(xt):
                return Separator("word", word, "s" if xs else "t")
    raise SeparatorNotFound(f"no separator of length <= {max_len} for {s}, {t} at {params}")


# ---------------------------------------------------------------- irreducibility

@dataclass
class Irreducibility:
    irreducible: bool
    dim: int
    basis_spin: bool
    random_oracle: bool
    agree: bool
    witness: Optional[dict] = None

    def as_dict(self) -> dict:
        return {"irreducible": self.irreducible, "dim": self.dim, "basis_spin": self.basis_spin,
                "random_oracle": self.random_oracle, "agree": self.agree, "witness": self.witness}


def _weight_spaces(Q: Subquotient) -> List[Subspace]:
    spaces = []
    for lab in Q.generator_labels():
        if lab[0] != "e":
            continue
        im, _ = map_image_kernel(Q.generator_matrix(lab))
        if im.dim:
            spaces.append(im)
    return spaces


def random_split_search(Q: Subquotient, seed: int = 0, trials: Optional[int] = None) -> Optional[Subspace]:
    """Look for a proper nonzero submodule by spinning random weight vectors.

    Each trial takes a random vector of a random weight space, pushes it
    through a random product of generators, and spins it.  Returns the first
    proper submodule found (in ``Q``'s coordinates), or ``None``.
    """
    if Q.dim == 0:
        return None
    rng = random.Random(seed)
    F = Q.field
    gens = Q.generators()
    weights = _weight_spaces(Q)
    trials = trials if trials is not None else 4 * Q.dim + 20
    bound = 5 if F.p == 0 else F.p
    for _ in range(trials):
        W = rng.choice(weights)
        v: Vector = {}
        for b in W.basis:
            c = F(rng.randrange(-bound, bound + 1))
            for k, x in b.items():
                v[k] = F.add(v.get(k, F.zero), F.mul(c, x))
        v = {k: x for k, x in v.items() if x}
        for _ in range(rng.randrange(0, 4)):
            w = rng.choice(gens).apply(v)
            if w:
                v = w
        if not v:
            continue
        S = spin([v], gens, Q.dim, F, stop_at=Q.dim)
        if 0 < S.dim < Q.dim:
            return S
    return None


def is_irreducible(Q, seed: int = 0, trials: Optional[int] = None) -> Irreducibility:
    """Decide irreducibility of a module or subquotient.

    Every basis vector is spun; the module is irreducible exactly when each
    of them generates everything.  A randomized split search runs as an
    independent check and the two verdicts are compared.
    """
    if isinstance(Q, HookSpechtModule):
        Q = Subquotient.whole(Q)
    F = Q.field
    gens = Q.generators()
    dim = Q.dim
    basis_ok = dim > 0
    witness = None
    if dim == 0:
        witness = {"reason": "zero module"}
    for j in range(dim):
        S = spin([{j: F.one}], gens, dim, F, stop_at=dim)
        if S.dim < dim:
            basis_ok = False
            witness = {"generator": vec_repr(Q.parent.basis, Q.lift(j)), "spin_dim": S.dim}
            break
    found = random_split_search(Q, seed, trials)
    random_ok = dim > 0 and found is None
    if found is not None and witness is None:
        witness = {"random_submodule_dim": found.dim}
    return Irreducibility(basis_ok and random_ok, dim, basis_ok, random_ok, basis_ok == random_ok,
                          witness)


# ---------------------------------------------------------------- series

CASES = ("I", "II", "III", "IV")


def detect_case(params: Params) -> str:
    special = params.d == params.e - 1
    if special:
        return "IV" if params.n % params.e == 0 else "III"
    return "II" if gamma_applies(params) else "I"


def series_tag(params: Params) -> str:
    case = detect_case(params)
    if case != "IV":
        return case
    if params.m <= 1:
        return "IV-edge-low"
    if params.m >= params.n - 1:
        return "IV-edge-high"
    return "IV-middle"


def expected_factor_dims(params: Params) -> List[int]:
    """Factor dimensions, bottom to top, by subset counting."""
    n, m = params.n, params.m
    C = comb
    if m in (0, n):
        return [1]
    case = detect_case(params)
    if case == "I":
        return [C(n, m)]
    if case == "II":
        return [C(n - 1, m - 1), C(n - 1, m)]
    if case == "III":
        return [C(n - 1, m), C(n - 1, m - 1)]
    if m == 1 or m == n - 1:
        return [1, n - 2, 1]
    return [C(n - 2, m - 1), C(n - 2, m), C(n - 2, m - 2), C(n - 2, m - 1)]


@dataclass
class SeriesReport:
    params: Params
    field: str
    case: str
    chain: List[Subspace]
    factor_dims: List[int]
    factor_irreducible: List[bool]
    witnesses: List[dict]
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def chain_legsets(self, module: HookSpechtModule) -> List[List[LegSet]]:
        """For coordinate chains, the basis vectors spanning each member."""
        return [[module.basis[p] for p in S.pivots] for S in self.chain]

    def as_dict(self) -> dict:
        return {
            "params": self.params.as_dict(), "field": self.field, "case": self.case,
            "chain_dims": [S.dim for S in self.chain], "factor_dims": self.factor_dims,
            "factor_irreducible": self.factor_irreducible, "witnesses": self.witnesses,
            "passed": self.passed, "checks": [c.as_dict() for c in self.checks],
        }


def predicted_chain(params: Params, family: HookFamily) -> List[Subspace]:
    """The chain of submodules for the detected case, built from the maps."""
    n, m = params.n, params.m
    M = family.module(m)
    zero = Subspace(M.dim, M.field)
    full = rref_span(({k: M.field.one} for k in range(M.dim)), M.dim, M.field)
    if m in (0, n):
        return [zero, full]
    case = detect_case(params)
    if case == "I":
        return [zero, full]
    if case == "II":
        im, _ = gamma_map(m - 1, params, family=family).image_kernel()
        return [zero, im, full]
    im_chi, _ = chi_map(m, family).image_kernel()
    if case == "III":
        return [zero, im_chi, full]
    if m == n - 1:
        im_phi, _ = phi_map(m, family).image_kernel()
        im_gam, _ = gamma_map(m - 1, params, family=family).image_kernel()
        return [zero, im_phi, im_gam, full]
    im_phi, _ = phi_map(m, family).image_kernel()
    if m == 1:
        return [zero, im_phi, im_chi, full]
    _, ker_gam = gamma_map(m, params, family=family).image_kernel()
    return [zero, im_phi, im_chi, ker_gam + im_chi, full]


def composition_series(params: Params, field: Field = RATIONALS, seed: int = 0,
                       family: Optional[HookFamily] = None) -> SeriesReport:
    family = family or HookFamily.of(params, field)
    M = family.module(params.m)
    chain = predicted_chain(params, family)
    checks: List[CheckResult] = []
    strict = all(a < b for a, b in zip(chain, chain[1:]))
    checks.append(CheckResult("chain_strict", strict, {"dims": [S.dim for S in chain]}))
    gens = M.generators()
    for k, S in enumerate(chain):
        closed = spin(S.basis, gens, M.dim, M.field) == S
        checks.append(CheckResult(f"member_{k}_closed", closed, {"dim": S.dim}))
    dims, irr, wits = [], [], []
    for k, (lo, hi) in enumerate(zip(chain, chain[1:])):
        Q = Subquotient(M, hi, lo if lo.dim else None, f"factor_{k}")
        res = is_irreducible(Q, seed=seed + k)
        dims.append(Q.dim)
        irr.append(res.irreducible)
        wits.append(res.as_dict())
        checks.append(CheckResult(f"factor_{k}_irreducible", res.irreducible, res.as_dict()))
        checks.append(CheckResult(f"factor_{k}_oracles_agree", res.agree, {}))
    want = expected_factor_dims(params)
    checks.append(CheckResult("factor_dims", dims == want, {"got": dims, "expected": want}))
    checks.append(CheckResult("dims_sum", sum(dims) == M.dim, {"sum": sum(dims), "dim": M.dim}))
    checks.extend(_isomorphism_checks(params, family, chain))
    return SeriesReport(params, field.name, series_tag(params), chain, dims, irr, wits, checks)


def _isomorphism_checks(params: Params, family: HookFamily, chain: List[Subspace]) -> List[CheckResult]:
    """Identify top factors with images of ``gamma`` where the theory predicts it."""
    n, m = params.n, params.m
    out: List[CheckResult] = []
    if m in (0, n):
        return out
    case = detect_case(params)
    M = family.module(m)
    if case == "II" and m <= n - 1:
        gam = gamma_map(m, params, family=family)
        im, _ = gam.image_kernel()
        top = Subquotient(M, chain[-1], chain[-2], "top")
        target = Subquotient(family.module(m + 1), im, None, f"im_gamma_{m}")
        f = induced_map(f"gamma_{m}|top", gam.matrix, top, target)
        bij = f.rank() == top.dim == target.dim
        out.append(CheckResult("top_iso_im_gamma", bij and check_hom_property(f).passed,
                               {"rank": f.rank(), "top": top.dim, "image": target.dim}))
        out.append(gamiso_check(m, params, family=family).as_result())
    if case == "IV" and 2 <= m <= n - 2:
        gam = gamma_map(m, params, family=family)
        im, _ = gam.image_kernel()
        im_phi1, _ = phi_map(m + 1, family).image_kernel()
        top = Subquotient(M, chain[-1], chain[-2], "top")
        target = Subquotient(family.module(m + 1), im, im_phi1, "im_gamma/im_phi")
        f = induced_map(f"gamma_{m}|top", gam.matrix, top, target)
        bij = f.rank() == top.dim == target.dim
        out.append(CheckResult("top_iso_im_gamma_mod_im_phi", bij and check_hom_property(f).passed,
                               {"rank": f.rank(), "top": top.dim, "target": target.dim}))
    return out

"""Residues, tableaux and words for level-two hook bipartitions.

A standard tableau of the hook bipartition ``((n-m),(1^m))`` is fixed by
the set ``A`` of entries in its leg (the single column of the second
component).  Those sets are ``LegSet``s, sorted tuples of length ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

LegSet = Tuple[int, ...]
ResidueSeq = Tuple[int, ...]


@dataclass(frozen=True)
class Params:
    """Quantum characteristic ``e``, multicharge ``kappa``, size ``n`` and leg length ``m``."""

    e: int
    kappa: Tuple[int, int]
    n: int
    m: int = 0

    def __post_init__(self):
        if not isinstance(self.e, int) or self.e < 3:
            raise ValueError(f"e must be an integer >= 3, got {self.e!r}")
        if len(self.kappa) != 2:
            raise ValueError("kappa must be a pair")
        object.__setattr__(self, "kappa", tuple(int(k) % self.e for k in self.kappa))
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.m <= self.n:
            raise ValueError(f"m must lie in 0..{self.n}, got {self.m}")

    @property
    def d(self) -> int:
        """``kappa_2 - kappa_1`` reduced mod ``e``."""
        return (self.kappa[1] - self.kappa[0]) % self.e

    def with_m(self, m: int) -> "Params":
        return Params(self.e, self.kappa, self.n, m)

    def cong(self, x: int, y: int) -> bool:
        return (x - y) % self.e == 0

    def as_dict(self) -> dict:
        return {"e": self.e, "kappa": list(self.kappa), "n": self.n, "m": self.m}


@dataclass(frozen=True, order=True)
class Node:
    row: int
    col: int
    mnum: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1 or self.mnum not in (1, 2):
            raise ValueError(f"invalid node {self}")


@dataclass(frozen=True)
class GenWord:
    """``sign * psi_{letters[0]} psi_{letters[1]} ...``; the rightmost letter acts first."""

    letters: Tuple[int, ...] = ()
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if any(r < 1 for r in self.letters):
            raise ValueError(f"bad letters {self.letters}")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "GenWord") -> "GenWord":
        return GenWord(self.letters + other.letters, self.sign * other.sign)

    def __neg__(self):
        return GenWord(self.letters, -self.sign)

    def __str__(self):
        body = " ".join(f"psi{r}" for r in self.letters) or "1"
        return ("-" if self.sign < 0 else "") + body


def psi_up(i: int, j: int) -> GenWord:
    """``psi_i psi_{i+1} ... psi_j``; empty when ``j < i``."""
    return GenWord(tuple(range(i, j + 1)))


def psi_down(j: int, i: int) -> GenWord:
    """``psi_j psi_{j-1} ... psi_i``; empty when ``j < i``."""
    return GenWord(tuple(range(j, i - 1, -1)))


# ---------------------------------------------------------------- shapes

@dataclass(frozen=True)
class BipartitionShape:
    """A bipartition given by its two lists of parts."""

    first: Tuple[int, ...]
    second: Tuple[int, ...]
    tag: str = "General"

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(p for p in self.first if p))
        object.__setattr__(self, "second", tuple(p for p in self.second if p))
        for comp in (self.first, self.second):
            if any(p < 0 for p in comp) or list(comp) != sorted(comp, reverse=True):
                raise ValueError(f"parts must be weakly decreasing: {comp}")

    @classmethod
    def general(cls, first: Sequence[int], second: Sequence[int]) -> "BipartitionShape":
        return cls(tuple(first), tuple(second))

    @classmethod
    def hook_bipartition(cls, n: int, m: int) -> "BipartitionShape":
        """``((n-m), (1^m))``."""
        return cls((n - m,), (1,) * m, "HookBipartition")

    @classmethod
    def arm_hook(cls, n: int, m: int) -> "BipartitionShape":
        """``((n-m, 1^m), empty)``."""
        return cls((n - m,) + (1,) * m, (), "ArmHook")

    @classmethod
    def leg_hook(cls, n: int, m: int) -> "BipartitionShape":
        """``(empty, (n-m, 1^m))``."""
        return cls((), (n - m,) + (1,) * m, "LegHook")

    @property
    def size(self) -> int:
        return sum(self.first) + sum(self.second)

    def component(self, mnum: int) -> Tuple[int, ...]:
        return self.first if mnum == 1 else self.second

    def nodes(self) -> List[Node]:
        out = []
        for mnum in (1, 2):
            for r, part in enumerate(self.component(mnum), start=1):
                out.extend(Node(r, c, mnum) for c in range(1, part + 1))
        return out

    def conjugate_lengths(self, mnum: int) -> List[int]:
        comp = self.component(mnum)
        if not comp:
            return []
        return [sum(1 for p in comp if p >= c) for c in range(1, comp[0] + 1)]


Tableau = Dict[int, Node]


def residue(node: Node, params: Params) -> int:
    return (params.kappa[node.mnum - 1] + node.col - node.row) % params.e


def column_initial_tableau(shape: BipartitionShape) -> Tableau:
    """Fill the last component first, each component column by column top to bottom."""
    tab: Tableau = {}
    k = 1
    for mnum in (2, 1):
        for c, height in enumerate(shape.conjugate_lengths(mnum), start=1):
            for r in range(1, height + 1):
                tab[k] = Node(r, c, mnum)
                k += 1
    return tab


def _check_tableau(shape: BipartitionShape, tableau: Mapping[int, Node]) -> None:
    n = shape.size
    if sorted(tableau) != list(range(1, n + 1)):
        raise ValueError("tableau entries must be exactly 1..n")
    if sorted(tableau.values()) != sorted(shape.nodes()):
        raise ValueError("tableau is not a bijection onto the shape's nodes")


def residue_sequence(shape: BipartitionShape, tableau: Mapping[int, Node], params: Params) -> ResidueSeq:
    _check_tableau(shape, tableau)
    return tuple(residue(tableau[k], params) for k in range(1, shape.size + 1))


def is_standard(shape: BipartitionShape, tableau: Mapping[int, Node]) -> bool:
    _check_tableau(shape, tableau)
    where = {node: k for k, node in tableau.items()}
    for node, k in where.items():
        right = Node(node.row, node.col + 1, node.mnum)
        if right in where and where[right] < k:
            return False
        below = Node(node.row + 1, node.col, node.mnum)
        if below in where and where[below] < k:
            return False
    return True


def act_on_tableau(perm: Sequence[int], tableau: Mapping[int, Node]) -> Tableau:
    """Replace each entry ``k`` by ``perm(k)`` (``perm`` is 1-based as a tuple of images)."""
    return {perm[k - 1]: node for k, node in tableau.items()}


def swap_entries(r: int, tableau: Mapping[int, Node]) -> Tableau:
    n = len(tableau)
    perm = list(range(1, n + 1))
    perm[r - 1], perm[r] = r + 1, r
    return act_on_tableau(perm, tableau)


def adjacent_in_tableau(r: int, tableau: Mapping[int, Node]) -> bool:
    """Whether ``r+1`` sits directly right of, or directly below, ``r``."""
    a, b = tableau[r], tableau[r + 1]
    if a.mnum != b.mnum:
        return False
    return (a.row == b.row and b.col == a.col + 1) or (a.col == b.col and b.row == a.row + 1)


# ---------------------------------------------------------------- hooks

def check_legset(params: Params, A: Sequence[int]) -> LegSet:
    A = tuple(A)
    if len(A) != params.m:
        raise ValueError(f"leg set {A} must have {params.m} entries")
    if any(not 1 <= a <= params.n for a in A) or any(x >= y for x, y in zip(A, A[1:])):
        raise ValueError(f"leg set {A} must be strictly increasing within 1..{params.n}")
    return A


def hook_tableau(params: Params, A: Sequence[int]) -> Tableau:
    """The standard tableau of ``((n-m),(1^m))`` with leg entries ``A``."""
    A = check_legset(params, A)
    tab: Tableau = {a: Node(j, 1, 2) for j, a in enumerate(A, start=1)}
    arm = [k for k in range(1, params.n + 1) if k not in tab]
    tab.update({k: Node(1, c, 1) for c, k in enumerate(arm, start=1)})
    return tab


def residue_sequence_hook(params: Params, A: Sequence[int]) -> ResidueSeq:
    A = check_legset(params, A)
    e, (k1, k2) = params.e, params.kappa
    out = [0] * params.n
    for j, a in enumerate(A, start=1):
        out[a - 1] = (k2 + 1 - j) % e
    k = 0
    legs = set(A)
    for x in range(1, params.n + 1):
        if x not in legs:
            out[x - 1] = (k1 + k) % e
            k += 1
    return tuple(out)


def enumerate_standard_hook(params: Params) -> List[LegSet]:
    return list(combinations(range(1, params.n + 1), params.m))


def leg_word(A: Sequence[int]) -> GenWord:
    letters: List[int] = []
    for j, a in enumerate(A, start=1):
        letters.extend(range(a - 1, j - 1, -1))
    return GenWord(tuple(letters))


def garnir_relations(shape: BipartitionShape, params: Params) -> List[GenWord]:
    n, m = params.n, params.m
    if shape.tag == "HookBipartition":
        return [GenWord((m + i,)) for i in range(1, n - m)]
    if shape.tag == "ArmHook":
        words = [GenWord((m + i + 1,)) for i in range(1, n - m - 1)]
        return words + [GenWord(tuple(range(1, m + 2)))]
    raise ValueError(f"no Garnir words for shape {shape.tag}")


# ---------------------------------------------------------------- Coxeter

def word_permutation(letters: Iterable[int], n: int) -> Tuple[int, ...]:
    """One-line notation of ``s_{r_1} s_{r_2} ... s_{r_k}`` acting on ``1..n``."""
    perm = list(range(1, n + 1))
    for r in letters:
        if not 1 <= r < n:
            raise ValueError(f"letter {r} out of range for S_{n}")
        # right-multiply by s_r: swap the values at positions r, r+1
        perm[r - 1], perm[r] = perm[r], perm[r - 1]
    return tuple(perm)


def coxeter_length(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def is_reduced(word: GenWord, n: int | None = None) -> bool:
    n = n or (max(word.letters, default=0) + 1)
    return coxeter_length(word_permutation(word.letters, n)) == len(word)


def bruhat_leq(u: GenWord, w: GenWord) -> bool:
    n = max(u.letters + w.letters, default=0) + 1
    for word in (u, w):
        if not is_reduced(word, n):
            raise ValueError(f"word {list(word.letters)} is not reduced")
    target = word_permutation(u.letters, n)
    # permutations reachable by reduced subwords of w
    reach = {tuple(range(1, n + 1))}
    for r in w.letters:
        step = set()
        for p in reach:
            q = list(p)
            if q[r - 1] < q[r]:
                q[r - 1], q[r] = q[r], q[r - 1]
                step.add(tuple(q))
        reach |= step
    return target in reach

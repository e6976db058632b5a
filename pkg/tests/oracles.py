"""Deliberately naive reference implementations used to cross-check the package."""

from fractions import Fraction
from itertools import combinations, product


def dense_rank(rows, p=0):
    """Rank by textbook Gaussian elimination on a dense list of rows."""
    M = [[Fraction(x) if p == 0 else x % p for x in row] for row in rows]
    if not M:
        return 0
    r = 0
    ncols = len(M[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c] if p == 0 else pow(M[r][c], -1, p)
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c] * inv
                M[i] = [a - f * b if p == 0 else (a - f * b) % p for a, b in zip(M[i], M[r])]
        r += 1
    return r


def subsets(n, m):
    return list(combinations(range(1, n + 1), m))


def perm_of_word(letters, n):
    """Compose transpositions as functions, rightmost first."""
    def apply(k):
        for r in reversed(letters):
            if k == r:
                k = r + 1
            elif k == r + 1:
                k = r
        return k
    return tuple(apply(k) for k in range(1, n + 1))


def inversions(perm):
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def bruhat_by_subwords(u, w, n):
    """u <= w iff some subword of w is a reduced word for u (all 2^len subwords)."""
    target = perm_of_word(u, n)
    for mask in product((0, 1), repeat=len(w)):
        sub = [r for r, keep in zip(w, mask) if keep]
        if len(sub) == len(u) and perm_of_word(sub, n) == target:
            return True
    return False


def hook_residues_by_nodes(e, kappa, n, A):
    """Residues read off an explicit node list for the hook bipartition."""
    nodes = {}
    for j, a in enumerate(sorted(A), start=1):
        nodes[a] = (j, 1, 2)
    col = 1
    for k in range(1, n + 1):
        if k not in nodes:
            nodes[k] = (1, col, 1)
            col += 1
    return tuple((kappa[c - 1] + j - i) % e for (i, j, c) in (nodes[k] for k in range(1, n + 1)))

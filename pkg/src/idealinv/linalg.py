"""Exact linear algebra and rational simplicial homology helpers.

Ranks of integer matrices use fraction-free (Bareiss) elimination, so all
intermediate entries stay integers.  Signatures of symmetric forms and
small linear solves use plain Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction


def rank_int(rows):
    """Rank of an integer matrix via fraction-free Gaussian elimination."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return 0
    m, n = len(A), len(A[0])
    rank = 0
    row = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(row, m) if A[i][col] != 0), None)
        if piv is None:
            continue
        if piv != row:
            A[row], A[piv] = A[piv], A[row]
        p = A[row][col]
        for i in range(row + 1, m):
            a_ic = A[i][col]
            for j in range(col + 1, n):
                A[i][j] = (A[i][j] * p - a_ic * A[row][j]) // prev
            A[i][col] = 0
        prev = p
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def solve_unique(rows, rhs):
    """Solve a square rational system exactly; None when singular."""
    n = len(rows)
    A = [[Fraction(x) for x in row] + [Fraction(b)]
         for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            return None
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        for i in range(n):
            if i == col or A[i][col] == 0:
                continue
            f = A[i][col] / p
            for j in range(col, n + 1):
                A[i][j] -= f * A[col][j]
    return [A[i][n] / A[i][i] for i in range(n)]


def symmetric_signature(gram):
    """(positive, negative, zero) inertia of a symmetric rational matrix.

    Congruence diagonalization; when the remaining diagonal vanishes but an
    off-diagonal entry does not, the basis change e_i -> e_i + e_j creates
    a nonzero diagonal entry (valid in characteristic zero).
    """
    n = len(gram)
    M = [[Fraction(x) for x in row] for row in gram]
    for row in M:
        if len(row) != n:
            raise ValueError("matrix must be square")
    for i in range(n):
        for j in range(n):
            if M[i][j] != M[j][i]:
                raise ValueError("matrix must be symmetric")
    active = list(range(n))
    pos = neg = zero = 0
    while active:
        k = next((i for i in active if M[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active
                         if i != j and M[i][j] != 0), None)
            if pair is None:
                zero += len(active)
                break
            i, j = pair
            for c in range(n):
                M[i][c] += M[j][c]
            for r in range(n):
                M[r][i] += M[r][j]
            k = i
        d = M[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for r in active:
            if M[r][k] == 0:
                continue
            f = M[r][k] / d
            for c in range(n):
                M[r][c] -= f * M[k][c]
            for c in range(n):
                M[c][r] = M[r][c]
    return pos, neg, zero


def reduced_homology_ranks(faces, has_empty_face=True):
    """Reduced rational homology ranks of a simplicial complex.

    ``faces`` lists the nonempty faces as tuples of sortable vertices (the
    complex must already be closed under taking subsets); the empty face is
    implicit when ``has_empty_face``.  Returns {dimension: rank} with only
    nonzero ranks; the complex {empty face} gives {-1: 1} and the void
    complex gives {}.
    """
    normalized = {tuple(sorted(f)) for f in faces}
    if not normalized:
        return {-1: 1} if has_empty_face else {}
    by_dim = {}
    for f in normalized:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()
    top = max(by_dim)
    ranks_boundary = {}
    for d in range(1, top + 1):
        lower = {f: i for i, f in enumerate(by_dim.get(d - 1, []))}
        rows = []
        for f in by_dim.get(d, []):
            row = [0] * len(lower)
            for j in range(len(f)):
                sub = f[:j] + f[j + 1:]
                row[lower[sub]] = (-1) ** j
            rows.append(row)
        ranks_boundary[d] = rank_int(rows) if rows and lower else 0
    # augmentation map to the span of the empty face
    ranks_boundary[0] = 1 if (has_empty_face and by_dim.get(0)) else 0
    out = {}
    if has_empty_face:
        h = 1 - ranks_boundary.get(0, 0)
        if h:
            out[-1] = h
    for d in range(0, top + 1):
        f_d = len(by_dim.get(d, []))
        h = f_d - ranks_boundary.get(d, 0) - ranks_boundary.get(d + 1, 0)
        if h:
            out[d] = h
    return out

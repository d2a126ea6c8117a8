"""Exact integer and rational linear algebra for lattice geometry.

All arithmetic uses Python ints (arbitrary precision) and
``fractions.Fraction``; nothing in this package touches floating point for
any geometric decision.  Vectors are tuples of ints, matrices are row-major
tuples of such tuples.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterable, Optional, Sequence, Union

LatticeVector = tuple
IntMatrix = tuple
Rational = Fraction

Number = Union[int, Fraction]


def as_vector(coords: Iterable[int]) -> LatticeVector:
    """Validate and freeze an integer coordinate sequence."""
    v = tuple(coords)
    for c in v:
        if isinstance(c, bool) or not isinstance(c, int):
            raise ValueError(f"non-integer coordinate {c!r}")
    return v


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    M = tuple(as_vector(r) for r in rows)
    if M:
        ncols = len(M[0])
        if any(len(r) != ncols for r in M):
            raise ValueError("ragged matrix")
    return M


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    return sum(a * b for a, b in zip(u, v, strict=True))


def vadd(u: Sequence[Number], v: Sequence[Number]) -> tuple:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Sequence[Number], v: Sequence[Number]) -> tuple:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(u: Sequence[Number], s: Number) -> tuple:
    return tuple(a * s for a in u)


def vneg(u: Sequence[Number]) -> tuple:
    return tuple(-a for a in u)


def gcd_vector(v: Sequence[int]) -> int:
    return reduce(math.gcd, v, 0)


def primitive_vector(v: Sequence[int]) -> tuple:
    """Divide an integer vector by the gcd of its entries (sign preserved)."""
    g = gcd_vector(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(a // g for a in v) if g > 1 else tuple(v)


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(M: Sequence[Sequence[Number]]) -> tuple:
    return tuple(zip(*M)) if M else ()


def mat_vec(M: Sequence[Sequence[Number]], v: Sequence[Number]) -> tuple:
    return tuple(dot(row, v) for row in M)


def vec_mat(v: Sequence[Number], M: Sequence[Sequence[Number]]) -> tuple:
    if not M:
        return ()
    return tuple(
        sum(v[i] * M[i][j] for i in range(len(M))) for j in range(len(M[0]))
    )


def mat_mul(A: Sequence[Sequence[Number]], B: Sequence[Sequence[Number]]) -> tuple:
    return tuple(vec_mat(row, B) for row in A)


def det_cofactor(M: Sequence[Sequence[Number]]) -> Number:
    """Determinant by Laplace expansion along the first row.

    Exponential in the matrix size; kept as the independent cross-check for
    the fraction-free determinant below.  Works for ints and Fractions.
    """
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = 0
    for j, a in enumerate(M[0]):
        if a == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = a * det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def det_bareiss(M: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant via the Bareiss fraction-free algorithm."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if pivot_row is None:
                return 0
            A[k], A[pivot_row] = A[pivot_row], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank(M: Sequence[Sequence[Number]]) -> int:
    """Rank over the rationals, by exact Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in M if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def generalized_cross(rows: Sequence[Sequence[Number]], dim: int) -> tuple:
    """Vector orthogonal to ``dim - 1`` rows of length ``dim`` (cofactors).

    Returns the zero vector exactly when the rows are linearly dependent.
    """
    rows = tuple(tuple(r) for r in rows)
    if len(rows) != dim - 1 or any(len(r) != dim for r in rows):
        raise ValueError("need dim-1 rows of length dim")
    out = []
    for j in range(dim):
        minor = [r[:j] + r[j + 1 :] for r in rows]
        d = det_cofactor(minor)
        out.append(d if j % 2 == 0 else -d)
    return tuple(out)


def _axpy(rows: list, dst: int, src: int, q: int) -> None:
    rows[dst] = [a + q * b for a, b in zip(rows[dst], rows[src])]


def hermite_normal_form(M) -> tuple:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ M == H``.  Pivots are
    positive, entries above each pivot are reduced into ``[0, pivot)`` and
    zero rows sink to the bottom.
    """
    M = as_matrix(M)
    if not M:
        raise ValueError("empty matrix")
    nr, nc = len(M), len(M[0])
    H = [list(r) for r in M]
    U = [list(r) for r in identity_matrix(nr)]
    r = 0
    for c in range(nc):
        if r == nr:
            break
        if all(H[i][c] == 0 for i in range(r, nr)):
            continue
        while True:
            nz = [i for i in range(r, nr) if H[i][c] != 0]
            if len(nz) == 1:
                break
            i0 = min(nz, key=lambda i: (abs(H[i][c]), i))
            for i in nz:
                if i == i0:
                    continue
                q = H[i][c] // H[i0][c]
                _axpy(H, i, i0, -q)
                _axpy(U, i, i0, -q)
        i0 = next(i for i in range(r, nr) if H[i][c] != 0)
        H[r], H[i0] = H[i0], H[r]
        U[r], U[i0] = U[i0], U[r]
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                _axpy(H, i, r, -q)
                _axpy(U, i, r, -q)
        r += 1
    return tuple(tuple(row) for row in H), tuple(tuple(row) for row in U)


def smith_normal_form(M) -> tuple:
    """Smith normal form with transforms.

    Returns ``(S, U, V)`` with ``U @ M @ V == S``, ``U`` and ``V`` unimodular
    and ``S`` diagonal with nonnegative entries satisfying d1 | d2 | ...
    """
    M = as_matrix(M)
    if not M:
        raise ValueError("empty matrix")
    nr, nc = len(M), len(M[0])
    A = [list(r) for r in M]
    U = [list(r) for r in identity_matrix(nr)]
    V = [list(r) for r in identity_matrix(nc)]

    def col_axpy(dst: int, src: int, q: int) -> None:
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def col_swap(i: int, j: int) -> None:
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    for t in range(min(nr, nc)):
        while True:
            entries = [
                (abs(A[i][j]), i, j)
                for i in range(t, nr)
                for j in range(t, nc)
                if A[i][j] != 0
            ]
            if not entries:
                break
            _, pi, pj = min(entries)
            if pi != t:
                A[t], A[pi] = A[pi], A[t]
                U[t], U[pi] = U[pi], U[t]
            if pj != t:
                col_swap(t, pj)
            dirty = False
            for i in range(t + 1, nr):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    _axpy(A, i, t, -q)
                    _axpy(U, i, t, -q)
                    if A[i][t] != 0:
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, nc):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    col_axpy(j, t, -q)
                    if A[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            bad = next(
                (
                    i
                    for i in range(t + 1, nr)
                    for j in range(t + 1, nc)
                    if A[i][j] % A[t][t] != 0
                ),
                None,
            )
            if bad is not None:
                _axpy(A, t, bad, 1)
                _axpy(U, t, bad, 1)
                continue
            break
        if t < nr and A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return (
        tuple(tuple(row) for row in A),
        tuple(tuple(row) for row in U),
        tuple(tuple(row) for row in V),
    )


def invariant_factors(M) -> tuple:
    """Nonzero diagonal of the Smith normal form, in divisibility order."""
    S, _, _ = smith_normal_form(M)
    out = []
    for i in range(min(len(S), len(S[0]))):
        if S[i][i] != 0:
            out.append(S[i][i])
    return tuple(out)


def unimodular_inverse(M) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    M = as_matrix(M)
    n = len(M)
    if n == 0:
        return ()
    if any(len(r) != n for r in M):
        raise ValueError("inverse needs a square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    out = []
    for i in range(n):
        row = aug[i][n:]
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def solve_rational(A, b) -> Optional[tuple]:
    """Solve ``A x = b`` exactly over the rationals.

    ``A`` must have full column rank (square or overdetermined systems);
    anything rank-deficient raises ``ValueError``.  Returns a tuple of
    Fractions, or ``None`` when the system is inconsistent.
    """
    A = tuple(tuple(Fraction(x) for x in row) for row in A)
    b = tuple(Fraction(x) for x in b)
    nr = len(A)
    if nr != len(b):
        raise ValueError("shape mismatch between matrix and right-hand side")
    nc = len(A[0]) if nr else 0
    if nc > nr:
        raise ValueError("underdetermined system")
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix does not have full column rank")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nr):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    for i in range(r, nr):
        if aug[i][-1] != 0:
            return None
    return tuple(aug[i][-1] for i in range(nc))


class AffineChart:
    """Affine-lattice-preserving coordinates on the affine hull of points.

    ``to_chart`` maps ``Z^m`` intersected with the affine hull bijectively
    onto ``Z^dim`` and ``from_chart`` inverts it.  Passing ``scale=k``
    shifts the chart to the hull of the k-th dilate, which shares the same
    direction lattice.
    """

    def __init__(self, ambient_dim, dim, origin, basis, proj_cols, comp_cols):
        self.ambient_dim = ambient_dim
        self.dim = dim
        self.origin = origin        # base point in Z^m
        self.basis = basis          # dim rows of length m
        self.proj_cols = proj_cols  # dim columns of length m
        self.comp_cols = comp_cols  # m - dim columns of length m

    def in_affine_hull(self, x, scale: int = 1) -> bool:
        y = vsub(x, vscale(self.origin, scale))
        return all(dot(y, col) == 0 for col in self.comp_cols)

    def to_chart(self, x, scale: int = 1) -> tuple:
        y = vsub(x, vscale(self.origin, scale))
        if any(dot(y, col) != 0 for col in self.comp_cols):
            raise ValueError(f"point {tuple(x)} is not in the affine hull")
        return tuple(dot(y, col) for col in self.proj_cols)

    def from_chart(self, c, scale: int = 1) -> tuple:
        x = list(vscale(self.origin, scale))
        for ci, row in zip(c, self.basis, strict=True):
            for j in range(self.ambient_dim):
                x[j] += ci * row[j]
        return tuple(x)


def build_chart(points) -> AffineChart:
    """Build the exact full-dimensionalization chart for a point set."""
    pts = as_matrix(points)
    if not pts:
        raise ValueError("no points")
    m = len(pts[0])
    p0 = pts[0]
    diffs = [vsub(p, p0) for p in pts[1:]]
    r = rank(diffs) if diffs else 0
    if r == m:
        ident = identity_matrix(m)
        chart = AffineChart(m, m, (0,) * m, ident, ident, ())
    elif r == 0:
        ident = identity_matrix(m)
        chart = AffineChart(m, 0, p0, (), (), ident)
    else:
        _, _, V = smith_normal_form(diffs)
        Vinv = unimodular_inverse(V)
        basis = Vinv[:r]
        cols = transpose(V)
        chart = AffineChart(m, r, p0, basis, cols[:r], cols[r:])
    for p in pts:
        if not chart.in_affine_hull(p) or chart.from_chart(chart.to_chart(p)) != p:
            raise AssertionError("chart construction failed to round-trip")
    return chart


def full_dimensionalize(points) -> tuple:
    """Return ``(forward, inverse, dim)`` mapping lattice points of the
    affine hull of ``points`` bijectively onto ``Z^dim``."""
    chart = build_chart(points)
    return chart.to_chart, chart.from_chart, chart.dim

"""Small dense matrices (2×2 and 3×3) over exact scalars.

Entries may be any ring elements supporting ``+ - *`` (field elements,
:class:`~fig8char.poly.MPoly`, :class:`~fig8char.poly.RatFunc`, ...);
inversion and the intertwiner solver additionally need division.
"""

from __future__ import annotations

from fractions import Fraction

from .numtower import as_elem

__all__ = ["Mat2", "Mat3", "Matrix", "diag", "identity", "nullspace", "solve_intertwiner"]


def _zero_like(x):
    return x - x


class Matrix:
    """Square matrix stored as a tuple of row tuples."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(_lift(x) for x in row) for row in rows)
        n = len(rows)
        if n not in (2, 3) or any(len(r) != n for r in rows):
            raise ValueError("only 2×2 and 3×3 square matrices are supported")
        self.rows = rows
        self.n = n

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def entries(self):
        return [x for row in self.rows for x in row]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and all(
            a == b for a, b in zip(self.entries(), other.entries()))

    __hash__ = None

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return Matrix([[a * other for a in r] for r in self.rows])

    def __rmul__(self, other):
        return Matrix([[other * a for a in r] for r in self.rows])

    def matmul(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = r[0] * c[0]
                for k in range(1, n):
                    acc = acc + r[k] * c[k]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    __matmul__ = matmul

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = identity(self.n, self.rows[0][0])
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def transpose(self):
        return Matrix(list(zip(*self.rows)))

    def trace(self):
        acc = self.rows[0][0]
        for k in range(1, self.n):
            acc = acc + self.rows[k][k]
        return acc

    def det(self):
        r = self.rows
        if self.n == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))

    def adj(self):
        """Adjugate, so that ``M·adj(M) = det(M)·Id``."""
        r = self.rows
        if self.n == 2:
            return Matrix([[r[1][1], -r[0][1]], [-r[1][0], r[0][0]]])

        def minor(i, j):
            a, b = [k for k in range(3) if k != i]
            c, d = [k for k in range(3) if k != j]
            return r[a][c] * r[b][d] - r[a][d] * r[b][c]

        return Matrix([[minor(j, i) if (i + j) % 2 == 0 else -minor(j, i)
                        for j in range(3)] for i in range(3)])

    def inv(self):
        d = self.det()
        if not d:
            raise ZeroDivisionError("singular matrix")
        inv_d = 1 / d
        return Matrix([[x * inv_d for x in row] for row in self.adj().rows])

    def charpoly(self):
        """Coefficients ``[c0, c1, ..., 1]`` of ``det(t·Id − M)``, low degree first.

        For 3×3 this is ``t³ − tr(M)t² + tr(adj M)t − det M``.
        """
        if self.n == 2:
            return [self.det(), -self.trace(), _one_like(self.rows[0][0])]
        return [-self.det(), self.adj().trace(), -self.trace(), _one_like(self.rows[0][0])]

    def eval_poly(self, coeffs):
        """``Σ coeffs[k]·M^k`` (used for Cayley–Hamilton checks)."""
        one = identity(self.n, self.rows[0][0])
        acc = one * coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = acc @ self + one * c
        return acc

    def is_identity(self):
        return all((x == 1) if i == j else _is_zero(x)
                   for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def is_scalar(self):
        d = self.rows[0][0]
        return all((x == d) if i == j else _is_zero(x)
                   for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def map(self, fn):
        return Matrix([[fn(x) for x in row] for row in self.rows])

    def sym2(self):
        """Action on symmetric tensors in the basis ``e1², e1e2, e2²``."""
        if self.n != 2:
            raise ValueError("sym2 takes a 2×2 matrix")
        if self.det() != 1:
            raise ValueError("sym2 expects determinant 1")
        (a, b), (c, d) = self.rows
        return Matrix([
            [a * a, a * b, b * b],
            [2 * a * c, a * d + b * c, 2 * b * d],
            [c * c, c * d, d * d],
        ])

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.rows]})"


def _lift(x):
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


def _one_like(x):
    return x * 0 + 1 if not isinstance(x, Fraction) else Fraction(1)


def _is_zero(x):
    return x.is_zero() if hasattr(x, "is_zero") else not x


def Mat2(rows):
    m = Matrix(rows)
    if m.n != 2:
        raise ValueError("Mat2 needs 2×2 rows")
    return m


def Mat3(rows):
    m = Matrix(rows)
    if m.n != 3:
        raise ValueError("Mat3 needs 3×3 rows")
    return m


def identity(n=3, like=None):
    one = Fraction(1) if like is None else _one_like(like)
    zero = one - one
    return Matrix([[one if i == j else zero for j in range(n)] for i in range(n)])


def diag(*values):
    zero = Fraction(0)
    n = len(values)
    return Matrix([[as_elem(values[i]) if i == j else zero for j in range(n)] for i in range(n)])


def nullspace(rows, ncols):
    """Basis of the kernel of a matrix over a field, by Gauss–Jordan elimination."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -m[i][f]
        basis.append(vec)
    return basis


def solve_intertwiner(A, B):
    """Basis of ``{T : T·A = A·B·T, T·B = B·A·B·T}`` as a list of matrices."""
    n = A.n
    AB = A @ B
    BAB = B @ AB
    rows = []
    # (T·X − Y·T)[i][j] = Σ_k T[i][k]X[k][j] − Σ_k Y[i][k]T[k][j]
    for X, Y in ((A, AB), (B, BAB)):
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[i * n + k] = row[i * n + k] + X[k, j]
                    row[k * n + j] = row[k * n + j] - Y[i, k]
                rows.append(row)
    basis = nullspace(rows, n * n)
    return [Matrix([[vec[i * n + j] for j in range(n)] for i in range(n)]) for vec in basis]

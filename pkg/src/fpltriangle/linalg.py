"""Dense exact matrices over int / Fraction / TPoly entries."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Sequence

from .polyring import TPoly, scalar_str, specialize


class ExactMatrix:
    """Row-major exact matrix.  ``labels`` optionally names rows and columns.

    Operators in this package act on row vectors from the right, so an entry
    ``M[r][c]`` is the coefficient written ``M^r_c`` (upper index = row).
    """

    __slots__ = ("rows", "labels")

    def __init__(self, rows: Sequence[Sequence], labels: Sequence[str] | None = None):
        self.rows = [list(r) for r in rows]
        width = len(self.rows[0]) if self.rows else 0
        if any(len(r) != width for r in self.rows):
            raise ValueError("ragged matrix")
        self.labels = None if labels is None else list(labels)

    @classmethod
    def identity(cls, n: int, labels=None) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], labels)

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None, labels=None) -> "ExactMatrix":
        return cls([[0] * (nrows if ncols is None else ncols) for _ in range(nrows)], labels)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def __len__(self):
        return len(self.rows)

    def _with(self, rows) -> "ExactMatrix":
        return ExactMatrix(rows, self.labels)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return self._with([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return self._with([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self._with([[-a for a in r] for r in self.rows])

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __mul__(self, scalar):
        if isinstance(scalar, ExactMatrix):
            return NotImplemented
        return self._with([[a * scalar for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a != 0]
            out.append([_dot(nz, c) for c in cols])
        return ExactMatrix(out, self.labels or other.labels)

    def __pow__(self, k: int) -> "ExactMatrix":
        result = ExactMatrix.identity(self.shape[0], self.labels)
        for _ in range(k):
            result = result @ self
        return result

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    __hash__ = None

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.rows)], self.labels)

    def map(self, f: Callable) -> "ExactMatrix":
        return self._with([[f(a) for a in r] for r in self.rows])

    def specialize(self, t) -> "ExactMatrix":
        return self.map(lambda a: specialize(a, t))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def is_upper_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(len(self.rows)) for j in range(i))

    def is_unit_upper_triangular(self) -> bool:
        return self.is_upper_triangular() and all(self.rows[i][i] == 1 for i in range(len(self.rows)))

    def inverse(self) -> "ExactMatrix":
        if self.is_unit_upper_triangular():
            return self._unit_upper_inverse()
        if any(isinstance(a, TPoly) for r in self.rows for a in r):
            raise ValueError("general inverse over t-polynomials is not supported")
        return self._gauss_jordan_inverse()

    def _unit_upper_inverse(self) -> "ExactMatrix":
        # back substitution with ring operations only
        n = len(self.rows)
        inv = [[0] * n for _ in range(n)]
        for j in range(n):
            inv[j][j] = 1
            for i in range(j - 1, -1, -1):
                s = 0
                for k in range(i + 1, j + 1):
                    a = self.rows[i][k]
                    if a != 0 and inv[k][j] != 0:
                        s = s + a * inv[k][j]
                inv[i][j] = -s
        return self._with(inv)

    def _gauss_jordan_inverse(self) -> "ExactMatrix":
        n, m = self.shape
        if n != m:
            raise ValueError("only square matrices can be inverted")
        aug = [[Fraction(a) for a in r] + [Fraction(int(i == j)) for j in range(n)]
               for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [x / p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return self._with([[_demote(x) for x in r[n:]] for r in aug])

    def rank(self) -> int:
        return len(_bareiss_echelon(self.rows)[1])

    def nullspace(self) -> list[list[int]]:
        """Right nullspace basis, each vector scaled to coprime integers."""
        return nullspace(self.rows)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def to_strings(self) -> list[list[str]]:
        return [[scalar_str(a) for a in r] for r in self.rows]

    def __repr__(self):
        return f"ExactMatrix({self.to_strings()})"

    def __str__(self):
        cells = self.to_strings()
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def _dot(nz, col):
    s = 0
    for k, a in nz:
        b = col[k]
        if b != 0:
            s = s + a * b
    return s


def _demote(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def vecmat(v: Sequence, m: ExactMatrix) -> list:
    """Row vector times matrix."""
    if len(v) != m.shape[0]:
        raise ValueError(f"vector of length {len(v)} against {m.shape}")
    nz = [(k, a) for k, a in enumerate(v) if a != 0]
    return [_dot(nz, [m.rows[k][j] for k in range(len(v))]) for j in range(m.shape[1])]


def matvec(m: ExactMatrix, v: Sequence) -> list:
    nz = [(k, a) for k, a in enumerate(v) if a != 0]
    return [_dot(nz, r) for r in m.rows]


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for r in rows:
        fr = [Fraction(a) for a in r]
        d = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * d) for x in fr])
    return out


def _bareiss_echelon(rows):
    """Fraction-free (Bareiss) row echelon form; returns (matrix, pivot columns)."""
    a = _integer_rows(rows)
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            a[i] = [(p * x - f * y) // prev for x, y in zip(ai, a[r])]
        prev = p
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace(rows) -> list[list[int]]:
    a, pivots = _bareiss_echelon(rows)
    ncols = len(rows[0]) if rows else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            s = sum((a[k][j] * x[j] for j in range(c + 1, ncols)), Fraction(0))
            x[c] = -s / a[k][c]
        basis.append(primitive_integer_vector(x))
    return basis


def primitive_integer_vector(x: Sequence) -> list[int]:
    fr = [Fraction(v) for v in x]
    d = lcm(*(v.denominator for v in fr))
    ints = [int(v * d) for v in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return ints
    ints = [v // g for v in ints]
    first = next(v for v in ints if v != 0)
    return [-v for v in ints] if first < 0 else ints


def commuting_determinant(entries: Sequence[Sequence], size: int) -> ExactMatrix:
    """Determinant of a square array whose entries are pairwise commuting matrices."""
    if len(entries) == 1:
        return entries[0][0]
    total = None
    for j in range(len(entries)):
        minor = [row[:j] + row[j + 1:] for row in entries[1:]]
        term = entries[0][j] @ commuting_determinant(minor, size)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total

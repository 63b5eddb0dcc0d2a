"""Exact linear algebra over GF(p^f): matrices, row reduction, subspaces.

Vectors and covectors are plain int tuples (covectors act through the
standard dot product).  Matrices are immutable row-major tuples so they can
be dict keys.  Subspaces are stored by their reduced-row-echelon basis, which
makes equality structural.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, NoSolution, Singular
from .gf import Field

Vec = tuple[int, ...]

__all__ = ["Mat", "Subspace", "dot", "vec_add", "vec_sub", "vec_scale", "vec_neg",
           "outer", "is_zero_vec"]


# -- vector helpers -----------------------------------------------------------

def dot(F: Field, phi: Sequence[int], v: Sequence[int]) -> int:
    if len(phi) != len(v):
        raise DimensionMismatch(f"dot: {len(phi)} vs {len(v)}")
    acc = 0
    for a, b in zip(phi, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def vec_add(F: Field, u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_sub(F: Field, u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(F.sub(a, b) for a, b in zip(u, v))


def vec_neg(F: Field, v: Sequence[int]) -> Vec:
    return tuple(F.neg(a) for a in v)


def vec_scale(F: Field, c: int, v: Sequence[int]) -> Vec:
    return tuple(F.mul(c, a) for a in v)


def is_zero_vec(v: Sequence[int]) -> bool:
    return all(a == 0 for a in v)


def outer(F: Field, v: Sequence[int], phi: Sequence[int]) -> "Mat":
    rows = tuple(tuple(F.mul(a, b) for b in phi) for a in v)
    return Mat(F, rows)


# -- matrices ------------------------------------------------------------------

class Mat:
    """Immutable row-major matrix over a fixed field."""

    __slots__ = ("F", "rows", "nrows", "ncols")

    def __init__(self, F: Field, rows: Iterable[Sequence[int]]):
        rs = tuple(tuple(r) for r in rows)
        if rs:
            w = len(rs[0])
            for r in rs:
                if len(r) != w:
                    raise DimensionMismatch("ragged rows")
        self.F = F
        self.rows = rs
        self.nrows = len(rs)
        self.ncols = len(rs[0]) if rs else 0

    @staticmethod
    def identity(F: Field, n: int) -> "Mat":
        return Mat(F, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(F: Field, nrows: int, ncols: int) -> "Mat":
        return Mat(F, tuple((0,) * ncols for _ in range(nrows)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.F == other.F and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Mat({self.F!r}, {list(map(list, self.rows))})"

    def _samefield(self, other: "Mat") -> None:
        if self.F != other.F:
            raise FieldMismatch("matrices over different fields")

    def add(self, other: "Mat") -> "Mat":
        self._samefield(other)
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("add: shape mismatch")
        F = self.F
        return Mat(F, tuple(tuple(F.add(a, b) for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.rows, other.rows)))

    def sub(self, other: "Mat") -> "Mat":
        self._samefield(other)
        F = self.F
        return Mat(F, tuple(tuple(F.sub(a, b) for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.rows, other.rows)))

    def scale(self, c: int) -> "Mat":
        F = self.F
        return Mat(F, tuple(tuple(F.mul(c, a) for a in r) for r in self.rows))

    def mul(self, other: "Mat") -> "Mat":
        self._samefield(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch("mul: inner dimensions differ")
        F = self.F
        ocols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in ocols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(tuple(row))
        return Mat(F, tuple(out))

    def matvec(self, v: Sequence[int]) -> Vec:
        """M . v with v a column vector."""
        if len(v) != self.ncols:
            raise DimensionMismatch("matvec: length mismatch")
        F = self.F
        return tuple(dot(F, r, v) for r in self.rows)

    def vecmat(self, phi: Sequence[int]) -> Vec:
        """phi . M with phi a row covector (i.e. phi composed with M)."""
        if len(phi) != self.nrows:
            raise DimensionMismatch("vecmat: length mismatch")
        F = self.F
        cols = zip(*self.rows)
        return tuple(dot(F, phi, c) for c in cols)

    def transpose(self) -> "Mat":
        return Mat(self.F, tuple(zip(*self.rows))) if self.rows else self

    def trace(self) -> int:
        F = self.F
        acc = 0
        for i in range(min(self.nrows, self.ncols)):
            acc = F.add(acc, self.rows[i][i])
        return acc

    def map_entries(self, fn) -> "Mat":
        return Mat(self.F, tuple(tuple(fn(a) for a in r) for r in self.rows))

    def is_identity(self) -> bool:
        return self == Mat.identity(self.F, self.nrows)

    def pow(self, e: int) -> "Mat":
        if self.nrows != self.ncols:
            raise DimensionMismatch("pow: square matrices only")
        if e < 0:
            return self.inv().pow(-e)
        r = Mat.identity(self.F, self.nrows)
        b = self
        while e:
            if e & 1:
                r = r.mul(b)
            b = b.mul(b)
            e >>= 1
        return r

    # -- elimination ----------------------------------------------------------

    def rref(self) -> tuple["Mat", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        F = self.F
        rows = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(nc):
            sel = None
            for i in range(r, nr):
                if rows[i][c]:
                    sel = i
                    break
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            inv = F.inv(rows[r][c])
            if inv != 1:
                rows[r] = [F.mul(inv, a) for a in rows[r]]
            for i in range(nr):
                if i != r and rows[i][c]:
                    m = rows[i][c]
                    rows[i] = [F.sub(a, F.mul(m, b)) for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return Mat(F, tuple(tuple(row) for row in rows)), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> int:
        if self.nrows != self.ncols:
            raise DimensionMismatch("det: square matrices only")
        F = self.F
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = 1
        for c in range(n):
            sel = None
            for i in range(c, n):
                if rows[i][c]:
                    sel = i
                    break
            if sel is None:
                return 0
            if sel != c:
                rows[c], rows[sel] = rows[sel], rows[c]
                det = F.neg(det)
            det = F.mul(det, rows[c][c])
            inv = F.inv(rows[c][c])
            for i in range(c + 1, n):
                if rows[i][c]:
                    m = F.mul(inv, rows[i][c])
                    rows[i] = [F.sub(a, F.mul(m, b)) for a, b in zip(rows[i], rows[c])]
        return det

    def inv(self) -> "Mat":
        if self.nrows != self.ncols:
            raise DimensionMismatch("inv: square matrices only")
        F = self.F
        n = self.nrows
        aug = Mat(F, tuple(self.rows[i] + Mat.identity(F, n).rows[i] for i in range(n)))
        red, piv = aug.rref()
        if piv[:n] != tuple(range(n)):
            raise Singular("matrix is not invertible")
        return Mat(F, tuple(r[n:] for r in red.rows))

    def kernel(self) -> list[Vec]:
        """Canonical basis of the right null space {x : M x = 0}."""
        F = self.F
        red, piv = self.rref()
        nc = self.ncols
        free = [c for c in range(nc) if c not in piv]
        basis = []
        for fc in free:
            v = [0] * nc
            v[fc] = 1
            for r, pc in enumerate(piv):
                v[pc] = F.neg(red.rows[r][fc])
            basis.append(tuple(v))
        if not basis:
            return []
        return list(Mat(F, basis).rref()[0].rows[:len(basis)])

    def image(self) -> list[Vec]:
        """Canonical basis of the column space (as coordinate tuples)."""
        t = self.transpose()
        red, piv = t.rref()
        return [red.rows[i] for i in range(len(piv))]

    def row_space(self) -> list[Vec]:
        red, piv = self.rref()
        return [red.rows[i] for i in range(len(piv))]

    def solve(self, b: Sequence[int]) -> Vec:
        """One solution of M x = b (free variables set to 0); NoSolution if none."""
        if len(b) != self.nrows:
            raise DimensionMismatch("solve: rhs length mismatch")
        F = self.F
        aug = Mat(F, tuple(r + (bb,) for r, bb in zip(self.rows, b)))
        red, piv = aug.rref()
        if self.ncols in piv:
            raise NoSolution("inconsistent linear system")
        x = [0] * self.ncols
        for r, pc in enumerate(piv):
            x[pc] = red.rows[r][self.ncols]
        return tuple(x)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @staticmethod
    def from_json(F: Field, data: Sequence[Sequence[int]]) -> "Mat":
        rows = tuple(tuple(F.check(int(a)) for a in r) for r in data)
        return Mat(F, rows)


# -- subspaces -----------------------------------------------------------------

class Subspace:
    """Subspace of F^n stored by its canonical RREF basis."""

    __slots__ = ("F", "n", "basis")

    def __init__(self, F: Field, n: int, basis: Iterable[Sequence[int]] = ()):
        self.F = F
        self.n = n
        rows = [tuple(r) for r in basis]
        for r in rows:
            if len(r) != n:
                raise DimensionMismatch("basis vector of wrong length")
        if rows:
            red, piv = Mat(F, rows).rref()
            self.basis = tuple(red.rows[i] for i in range(len(piv)))
        else:
            self.basis = ()

    @staticmethod
    def span(F: Field, n: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        return Subspace(F, n, vectors)

    @staticmethod
    def zero(F: Field, n: int) -> "Subspace":
        return Subspace(F, n, ())

    @staticmethod
    def full(F: Field, n: int) -> "Subspace":
        return Subspace(F, n, Mat.identity(F, n).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.F == other.F
                and self.n == other.n and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.n, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.n})"

    def contains(self, v: Sequence[int]) -> bool:
        F = self.F
        v = list(v)
        if len(v) != self.n:
            raise DimensionMismatch("vector of wrong length")
        for row in self.basis:
            lead = next(i for i, a in enumerate(row) if a)
            if v[lead]:
                c = v[lead]
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
        return all(a == 0 for a in v)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._compat(other)
        return Subspace(self.F, self.n, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._compat(other)
        return self.perp().sum(other.perp()).perp()

    def perp(self) -> "Subspace":
        """Annihilator under the standard dot pairing."""
        if not self.basis:
            return Subspace.full(self.F, self.n)
        ker = Mat(self.F, self.basis).kernel()
        return Subspace(self.F, self.n, ker)

    def lex_least_nonzero(self) -> Vec:
        """Smallest nonzero member in tuple-lexicographic order."""
        if not self.basis:
            raise NoSolution("zero subspace has no nonzero member")
        # with an RREF basis this is the row whose pivot is furthest right
        return self.basis[-1]

    def elements(self):
        """Iterate all q^dim members (small subspaces only)."""
        F = self.F
        n = self.n
        d = self.dim
        idx = [0] * d
        while True:
            v = (0,) * n
            for c, row in zip(idx, self.basis):
                if c:
                    v = vec_add(F, v, vec_scale(F, c, row))
            yield v
            i = 0
            while i < d:
                idx[i] += 1
                if idx[i] < F.q:
                    break
                idx[i] = 0
                i += 1
            if i == d:
                return

    def _compat(self, other: "Subspace") -> None:
        if self.F != other.F:
            raise FieldMismatch("subspaces over different fields")
        if self.n != other.n:
            raise DimensionMismatch("subspaces of different ambient dimension")

"""
Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` values; vectors are sequences of
scalars and matrices are sequences of rows.  Internally most routines work
with sparse rows (``dict`` from column index to a nonzero scalar), reduced
into row echelon form by :class:`EchelonBasis`.

>>> rank([[1, 2], [2, 4]])
1
>>> nullspace([[1, 1]])
[[Fraction(-1, 1), Fraction(1, 1)]]
>>> solve([[2]], [1])
[Fraction(1, 2)]
>>> solve([[1], [1]], [1, 2]) is None
True
"""

from fractions import Fraction
from typing import Sequence

Scalar = Fraction

__all__ = [
    "Scalar",
    "scalar",
    "format_scalar",
    "EchelonBasis",
    "rank",
    "nullspace",
    "solve",
    "subspace_equal",
    "inverse",
    "mat_vec",
    "determinant",
]


def scalar(x) -> Fraction:
    """
    Coerce ``x`` to an exact scalar.  Strings of the form ``"p/q"`` and
    integers are accepted; floats are refused, since they are not exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not exact scalars: %r" % (x,))
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def format_scalar(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def _sparse(row: Sequence) -> dict:
    return {j: scalar(x) for j, x in enumerate(row) if x != 0}


class EchelonBasis:
    """
    Incrementally maintained reduced row echelon form.

    Rows are added one at a time; each stored row has a pivot entry equal to
    one and zeros in every other pivot column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        vec = {j: x for j, x in vec.items() if x != 0}
        for p in [p for p in vec if p in self.rows]:
            c = vec.get(p)
            if not c:
                continue
            for j, x in self.rows[p].items():
                y = vec.get(j, 0) - c * x
                if y:
                    vec[j] = y
                else:
                    vec.pop(j, None)
        return vec

    def add(self, vec) -> bool:
        """Insert a row; return True when it was independent of the others."""
        if not isinstance(vec, dict):
            if len(vec) != self.ncols:
                raise ValueError("row has length %d, expected %d" % (len(vec), self.ncols))
            vec = _sparse(vec)
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {j: x * inv for j, x in r.items()}
        for row in self.rows.values():
            c = row.get(p)
            if c:
                for j, x in r.items():
                    y = row.get(j, 0) - c * x
                    if y:
                        row[j] = y
                    else:
                        del row[j]
        self.rows[p] = r
        return True

    def contains(self, vec) -> bool:
        if not isinstance(vec, dict):
            vec = _sparse(vec)
        return not self.reduce(vec)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def null_vectors(self) -> list[list[Fraction]]:
        """Basis of the right kernel of the matrix whose rows were added."""
        free = [j for j in range(self.ncols) if j not in self.rows]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for p, row in self.rows.items():
                c = row.get(f)
                if c:
                    v[p] = -c
            basis.append(v)
        return basis


def _ncols(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    n = len(m[0])
    for row in m:
        if len(row) != n:
            raise ValueError("ragged matrix")
    return n


def _echelon(m: Sequence[Sequence], ncols: int | None = None) -> EchelonBasis:
    eb = EchelonBasis(_ncols(m) if ncols is None else ncols)
    for row in m:
        eb.add(row)
    return eb


def rank(m: Sequence[Sequence]) -> int:
    return _echelon(m).rank


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """
    Basis of ``{v : m v = 0}``.  ``ncols`` is needed only when ``m`` has no
    rows.
    """
    return _echelon(m, ncols).null_vectors()


def mat_vec(m: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((scalar(a) * scalar(b) for a, b in zip(row, v)), Fraction(0)) for row in m]


def solve(m: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One exact solution of ``m x = rhs``, or None when the system is inconsistent."""
    if len(m) != len(rhs):
        raise ValueError("matrix has %d rows but rhs has length %d" % (len(m), len(rhs)))
    n = _ncols(m)
    eb = EchelonBasis(n + 1)
    for row, b in zip(m, rhs):
        eb.add(list(row) + [b])
    if n in eb.rows:
        return None
    x = [Fraction(0)] * n
    for p, row in eb.rows.items():
        x[p] = row.get(n, Fraction(0))
    return x


def subspace_equal(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    """Decide span(a) == span(b) by comparing ranks of the stacked lists."""
    lengths = {len(v) for v in a} | {len(v) for v in b}
    if len(lengths) > 1:
        raise ValueError("vectors of different lengths: %s" % sorted(lengths))
    n = lengths.pop() if lengths else 0
    ra = _echelon(a, n).rank
    rb = _echelon(b, n).rank
    if ra != rb:
        return False
    return _echelon(list(a) + list(b), n).rank == ra


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]] | None:
    """Inverse of a square matrix, or None if it is singular."""
    n = len(m)
    if _ncols(m) != n:
        raise ValueError("matrix is not square")
    eb = EchelonBasis(2 * n)
    for i, row in enumerate(m):
        aug = _sparse(row)
        aug[n + i] = Fraction(1)
        eb.add(aug)
    if eb.pivots() != list(range(n)):
        return None
    return [[eb.rows[i].get(n + j, Fraction(0)) for j in range(n)] for i in range(n)]


def determinant(m: Sequence[Sequence]) -> Fraction:
    """Determinant by Gaussian elimination with row swaps."""
    a = [[scalar(x) for x in row] for row in m]
    n = len(a)
    if _ncols(a) != n:
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


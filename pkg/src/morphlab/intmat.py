"""Exact linear algebra on small square matrices.

Matrices are tuples of tuples holding Python ints (or Fractions where
noted), so every operation is exact regardless of magnitude.  Sizes in
this library are tiny (alphabets, not data), so the dense O(n^3)
algorithms are the right tool.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainMismatchError


def freeze(rows):
    """Normalize a row-of-rows into a tuple-of-tuples."""
    return tuple(tuple(row) for row in rows)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    out = []
    for i in range(n):
        row_a = a[i]
        out_row = []
        for j in range(m):
            s = 0
            for t in range(k):
                x = row_a[t]
                if x:
                    s += x * b[t][j]
            out_row.append(s)
        out.append(tuple(out_row))
    return tuple(out)


def mat_pow(a, e):
    if e < 0:
        raise ValueError("negative matrix power")
    result = identity(len(a))
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if e > 1 else base
        e >>= 1
    return result


def mat_vec(a, v):
    return tuple(sum(a[i][j] * v[j] for j in range(len(v)) if v[j]) for i in range(len(a)))


def vec_mat(v, a):
    n = len(a)
    return tuple(sum(v[i] * a[i][j] for i in range(n) if v[i]) for j in range(n))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def submatrix(a, indices):
    idx = tuple(indices)
    return tuple(tuple(a[i][j] for j in idx) for i in idx)


def charpoly(a):
    """Characteristic polynomial det(xI - A), coefficients ascending in x.

    Uses the Faddeev-LeVerrier recurrence over exact rationals; for an
    integer matrix the result is a list of ints (the divisions by k are
    exact).  The empty matrix yields the constant polynomial 1.
    """
    n = len(a)
    if n == 0:
        return [1]
    m = tuple(tuple(Fraction(x) for x in row) for row in a)
    coeffs = [Fraction(1)] + [Fraction(0)] * n  # descending: x^n ... x^0
    work = m
    for k in range(1, n + 1):
        if k > 1:
            prev = tuple(
                tuple(work[i][j] + (coeffs[k - 1] if i == j else 0) for j in range(n))
                for i in range(n)
            )
            work = mat_mul(m, prev)
        trace = sum(work[i][i] for i in range(n))
        coeffs[k] = Fraction(-trace, k)
    ascending = list(reversed(coeffs))
    if all(c.denominator == 1 for c in ascending):
        return [int(c) for c in ascending]
    return ascending


class IncidenceMatrix:
    """A non-negative integer square matrix with labelled rows/columns.

    For a morphism f the entry at (a, b) counts occurrences of the letter a
    in f(b), so column sums are image lengths.  Interpreted as a digraph,
    entry (i, j) counts edges from vertex i to vertex j and the (i, j)
    entry of the n-th power counts walks of length n.
    """

    __slots__ = ("labels", "rows")

    def __init__(self, rows, labels=None):
        rows = freeze(rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise DomainMismatchError("matrix is not square")
            for x in row:
                if not isinstance(x, int) or x < 0:
                    raise DomainMismatchError("entries must be non-negative integers")
        if labels is None:
            labels = tuple(str(i + 1) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise DomainMismatchError("label count does not match matrix size")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("IncidenceMatrix is immutable")

    @property
    def size(self):
        return len(self.rows)

    def entry(self, i, j):
        return self.rows[i][j]

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise DomainMismatchError(f"unknown label {label!r}") from None

    def power(self, e):
        return IncidenceMatrix(mat_pow(self.rows, e), self.labels)

    def transposed(self):
        return IncidenceMatrix(transpose(self.rows), self.labels)

    def column_sum(self, j):
        return sum(row[j] for row in self.rows)

    def row_sum(self, i):
        return sum(self.rows[i])

    def __eq__(self, other):
        if not isinstance(other, IncidenceMatrix):
            return NotImplemented
        return self.labels == other.labels and self.rows == other.rows

    def __hash__(self):
        return hash((self.labels, self.rows))

    def __repr__(self):
        return f"IncidenceMatrix({list(map(list, self.rows))!r}, labels={list(self.labels)!r})"

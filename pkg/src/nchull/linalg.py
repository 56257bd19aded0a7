"""Exact sparse linear algebra: row reduction, relation morphisms,
linear solving, and degreewise-finite formal vectors.

All operations are pure; matrices are never mutated after construction.
The generic :class:`SparseReducer` performs Gauss-Jordan elimination over
an arbitrary ordered column set and is reused by the higher layers
(ideal degree slices, hull iteration) so pivot choice is deterministic
everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Hashable, Optional

from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    InconsistentSystemError,
    UnmaterializedDegreeError,
)
from .field import Field, Scalar


class Matrix:
    """Sparse exact matrix. Entries map ``(row, col)`` to nonzero scalars."""

    __slots__ = ("rows", "cols", "field", "entries")

    def __init__(self, rows, cols, field, entries=None):
        self.rows = rows
        self.cols = cols
        self.field = field
        cleaned = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionMismatchError(f"entry ({r}, {c}) outside {rows}x{cols}")
            s = field.scalar(v)
            if s.field is not field:
                raise FieldMismatchError("mixed fields in matrix entries")
            if s:
                cleaned[(r, c)] = s
        self.entries = cleaned

    @classmethod
    def from_rows(cls, field, data, cols=None):
        rows = len(data)
        width = cols if cols is not None else (max((len(r) for r in data), default=0))
        entries = {}
        for i, row in enumerate(data):
            if len(row) > width:
                raise DimensionMismatchError("row wider than declared column count")
            for j, v in enumerate(row):
                entries[(i, j)] = field.scalar(v)
        return cls(rows, width, field, entries)

    @classmethod
    def identity(cls, field, n):
        return cls(n, n, field, {(i, i): field.one for i in range(n)})

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(rows, cols, field, {})

    def entry(self, r, c) -> Scalar:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise DimensionMismatchError(f"index ({r}, {c}) outside {self.rows}x{self.cols}")
        return self.entries.get((r, c), self.field.zero)

    def row(self, r) -> dict:
        return {c: v for (i, c), v in self.entries.items() if i == r}

    def iter_rows(self):
        buckets = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            buckets[r][c] = v
        return buckets

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, self.field,
                      {(c, r): v for (r, c), v in self.entries.items()})

    def matvec(self, vec) -> list:
        if len(vec) != self.cols:
            raise DimensionMismatchError("vector length does not match column count")
        out = [self.field.zero] * self.rows
        for (r, c), v in self.entries.items():
            out[r] = out[r] + v * self.field.scalar(vec[c])
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.rows == self.rows
            and other.cols == self.cols
            and other.field is self.field
            and other.entries == self.entries
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field}, {len(self.entries)} entries)"

    def to_dense(self):
        return [[self.entry(r, c) for c in range(self.cols)] for r in range(self.rows)]


class SparseReducer:
    """Incremental Gauss-Jordan over an ordered set of column keys.

    Rows are dicts mapping column keys to scalars. The pivot of a row is
    its minimal column under ``order_key``; stored rows are normalized to
    pivot coefficient one and kept mutually reduced, so the stored system
    is in reduced row-echelon form at all times. Insertion order plus the
    column order fully determine the result.
    """

    def __init__(self, field: Field, order_key):
        self.field = field
        self.order_key = order_key
        self.rows: dict[Hashable, dict] = {}

    def reduce(self, row: dict) -> dict:
        """Return ``row`` with all stored pivots eliminated."""
        out = dict(row)
        changed = True
        while changed:
            changed = False
            for key in list(out):
                if key in self.rows and out[key]:
                    coeff = out.pop(key)
                    for c, v in self.rows[key].items():
                        if c == key:
                            continue
                        acc = out.get(c, self.field.zero) - coeff * v
                        if acc:
                            out[c] = acc
                        elif c in out:
                            del out[c]
                    changed = True
        return {c: v for c, v in out.items() if v}

    def add(self, row: dict) -> Optional[Hashable]:
        """Insert a row; return its pivot key, or None if it reduced to zero."""
        reduced = self.reduce(row)
        if not reduced:
            return None
        pivot = min(reduced, key=self.order_key)
        inv = reduced[pivot].inverse()
        normalized = {c: v * inv for c, v in reduced.items()}
        for pkey, prow in self.rows.items():
            if pivot in prow:
                coeff = prow[pivot]
                for c, v in normalized.items():
                    if c == pivot:
                        continue
                    acc = prow.get(c, self.field.zero) - coeff * v
                    if acc:
                        prow[c] = acc
                    elif c in prow:
                        del prow[c]
                del prow[pivot]
        self.rows[pivot] = normalized
        return pivot

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows, key=self.order_key)

    def rewrite(self, pivot) -> dict:
        """Express a pivot column in the surviving ones: p = -tail."""
        row = self.rows[pivot]
        return {c: -v for c, v in row.items() if c != pivot}


def rref(m: Matrix):
    """Reduced row-echelon form of ``m``.

    Returns ``(reduced, pivots)`` with pivot column indices strictly
    increasing; the reduced matrix is row-equivalent to ``m``.
    """
    reducer = SparseReducer(m.field, order_key=lambda c: c)
    for row in m.iter_rows():
        reducer.add(row)
    pivots = reducer.pivots()
    entries = {}
    for i, p in enumerate(pivots):
        for c, v in reducer.rows[p].items():
            entries[(i, c)] = v
    return Matrix(m.rows, m.cols, m.field, entries), tuple(pivots)


def rank(m: Matrix) -> int:
    reducer = SparseReducer(m.field, order_key=lambda c: c)
    for row in m.iter_rows():
        reducer.add(row)
    return reducer.rank


_RHS = ("rhs",)  # augmented column marker, ordered after every variable


def solve_linear(a: Matrix, target) -> Optional[tuple]:
    """One exact solution of ``a @ v = target``, or None if inconsistent.

    Deterministic tie-break: after row reduction every free variable is
    set to zero, so the solution is supported on pivot variables only.
    """
    if len(target) != a.rows:
        raise DimensionMismatchError("target length does not match row count")
    field = a.field

    def order(c):
        return (1, 0) if c == _RHS else (0, c)

    reducer = SparseReducer(field, order_key=order)
    rows = a.iter_rows()
    for i, row in enumerate(rows):
        t = field.scalar(target[i])
        if t:
            row = dict(row)
            row[_RHS] = t
        reducer.add(row)
    if _RHS in reducer.rows:
        return None  # a row reduced to 0 = nonzero
    solution = [field.zero] * a.cols
    for pivot, row in reducer.rows.items():
        solution[pivot] = row.get(_RHS, field.zero)
    return tuple(solution)


@dataclass(frozen=True)
class RelationData:
    """Echelonized relation system of a vector-space quotient.

    ``beta`` uses the renumbered indexing of the echelon system (pivots
    first); ``permutation[j]`` is the original basis index sitting at
    renumbered position ``j``, so callers can map results back. ``dVW``
    and ``fgens`` are stored in the original indexing.
    """

    n: int
    r: int
    beta: dict
    dVW: Matrix
    fgens: tuple
    permutation: tuple
    field: Field


def relation_morphism(n: int, relations: Matrix, unit_column: Optional[int] = None) -> RelationData:
    """Echelonize a relation system over an ``n``-dimensional space.

    Rows of ``relations`` are vectors that vanish in the quotient. The
    pivot vectors of the reduced system are the eliminated basis vectors;
    the non-pivot vectors descend to a basis of the quotient.
    """
    if relations.cols > n:
        raise DimensionMismatchError(
            f"relation matrix has {relations.cols} columns, basis has {n}")
    field = relations.field
    reducer = SparseReducer(field, order_key=lambda c: c)
    for row in relations.iter_rows():
        reducer.add(row)
    pivots = reducer.pivots()
    if unit_column is not None and unit_column in reducer.rows:
        raise InconsistentSystemError("a relation reduces to 1 = 0")
    r = len(pivots)
    nonpivots = [c for c in range(n) if c not in reducer.rows]
    permutation = tuple(pivots + nonpivots)

    beta = {}
    fgens = []
    d_entries = {}
    for j, p in enumerate(pivots):
        row = reducer.rows[p]
        fvec = [field.zero] * n
        fvec[p] = field.one
        for i, q in enumerate(nonpivots):
            v = row.get(q, field.zero)
            if v:
                beta[(j, r + i)] = v
                fvec[q] = v
                d_entries[(q, p)] = -v
        d_entries[(p, p)] = field.one
        fgens.append(tuple(fvec))
    dVW = Matrix(n, n, field, d_entries)
    return RelationData(n=n, r=r, beta=beta, dVW=dVW, fgens=tuple(fgens),
                        permutation=permutation, field=field)


def check_exactness(rel: RelationData, kappa: Matrix) -> bool:
    """Whether ``image(F) = kernel(kappa)``, by rank arithmetic."""
    if kappa.cols != rel.n:
        raise DimensionMismatchError(
            f"kappa has {kappa.cols} columns, relation system lives in dimension {rel.n}")
    field = rel.field
    for f in rel.fgens:
        if any(v for v in kappa.matvec(f)):
            return False
    f_rank = rank(Matrix.from_rows(field, [list(f) for f in rel.fgens], cols=rel.n))
    return f_rank == rel.r and rank(kappa) + rel.r == rel.n


class FormalVector:
    """A degreewise finitely supported vector, materialized lazily.

    Layers up to ``bound_hint`` are considered materialized (absent layers
    are zero); querying past the bound raises instead of silently
    truncating. Instances are immutable: ``with_layer`` returns a copy.
    """

    __slots__ = ("per_degree", "bound_hint")

    def __init__(self, per_degree=None, bound_hint=None):
        layers = {}
        for deg, coeffs in (per_degree or {}).items():
            kept = {k: v for k, v in coeffs.items() if v}
            if kept:
                layers[deg] = kept
        self.per_degree = layers
        self.bound_hint = bound_hint

    def materialized_degrees(self):
        degrees = set(self.per_degree)
        if self.bound_hint is not None:
            degrees.update(range(self.bound_hint + 1))
        return sorted(degrees)

    def layer(self, degree) -> dict:
        if degree in self.per_degree:
            return dict(self.per_degree[degree])
        if self.bound_hint is not None and degree <= self.bound_hint:
            return {}
        raise UnmaterializedDegreeError(
            f"degree {degree} not materialized (bound hint {self.bound_hint})")

    def coefficient(self, degree, index):
        layer = self.layer(degree)
        return layer.get(index)

    def with_layer(self, degree, coeffs) -> "FormalVector":
        layers = {d: dict(c) for d, c in self.per_degree.items()}
        layers[degree] = dict(coeffs)
        bound = self.bound_hint
        if bound is not None and degree > bound:
            bound = degree
        return FormalVector(layers, bound)

    def extended(self, bound) -> "FormalVector":
        if self.bound_hint is not None and bound <= self.bound_hint:
            return self
        return FormalVector(self.per_degree, bound)

    def __eq__(self, other):
        return (
            isinstance(other, FormalVector)
            and other.per_degree == self.per_degree
            and other.bound_hint == self.bound_hint
        )

    def __repr__(self):
        return f"FormalVector({self.per_degree}, bound_hint={self.bound_hint})"

"""Sparse exact matrices over the rationals.

Kernels, ranks and partial inverses are computed block by block: the
bipartite row/column incidence graph of the nonzero entries is split into
connected components and each component is reduced densely with
fraction-free (Bareiss) Gauss-Jordan elimination over the integers.  The
maps built in this package preserve torus weights, so the components are
small even when the matrix has thousands of rows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class LinearMap:
    """A ``rows x cols`` matrix stored as ``{row: {col: value}}``.

    Columns index the domain: a map ``X -> Y`` has ``cols = dim X`` and
    ``rows = dim Y``, and ``A @ B`` is the composition "first B, then A".
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.data: dict[int, dict[int, object]] = {}
        if data:
            for i, row in data.items():
                clean = {j: _norm(v) for j, v in row.items() if v != 0}
                if clean:
                    self.data[i] = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "LinearMap":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def from_dense(cls, mat: Sequence[Sequence]) -> "LinearMap":
        rows = len(mat)
        cols = len(mat[0]) if rows else 0
        return cls(rows, cols, {i: {j: v for j, v in enumerate(r) if v != 0}
                                for i, r in enumerate(mat)})

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int, object]]) -> "LinearMap":
        """Build from ``(i, j, value)`` triples; repeated positions are summed."""
        data: dict[int, dict[int, object]] = {}
        for i, j, v in entries:
            row = data.setdefault(i, {})
            row[j] = row.get(j, 0) + v
        return cls(rows, cols, data)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[dict]) -> "LinearMap":
        data: dict[int, dict[int, object]] = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                data.setdefault(i, {})[j] = v
        return cls(rows, len(columns), data)

    # -- access --------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data.get(i, {}).get(j, 0)

    def nnz(self) -> int:
        return sum(len(r) for r in self.data.values())

    def entries(self) -> Iterator[tuple[int, int, object]]:
        for i in sorted(self.data):
            row = self.data[i]
            for j in sorted(row):
                yield i, j, row[j]

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def column(self, j: int) -> dict[int, object]:
        return {i: row[j] for i, row in self.data.items() if j in row}

    def columns(self) -> list[dict[int, object]]:
        cols: list[dict[int, object]] = [{} for _ in range(self.cols)]
        for i, row in self.data.items():
            for j, v in row.items():
                cols[j][i] = v
        return cols

    def is_zero(self) -> bool:
        return not self.data

    # -- algebra -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out: dict[int, dict[int, object]] = {}
        odata = other.data
        for i, row in self.data.items():
            acc: dict[int, object] = {}
            for k, a in row.items():
                orow = odata.get(k)
                if not orow:
                    continue
                for j, b in orow.items():
                    acc[j] = acc.get(j, 0) + a * b
            out[i] = acc
        return LinearMap(self.rows, other.cols, out)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        data = {i: dict(r) for i, r in self.data.items()}
        for i, row in other.data.items():
            tgt = data.setdefault(i, {})
            for j, v in row.items():
                tgt[j] = tgt.get(j, 0) + v
        return LinearMap(self.rows, self.cols, data)

    def __neg__(self):
        return LinearMap(self.rows, self.cols,
                         {i: {j: -v for j, v in r.items()} for i, r in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c) -> "LinearMap":
        return LinearMap(self.rows, self.cols,
                         {i: {j: c * v for j, v in r.items()} for i, r in self.data.items()})

    def apply(self, x: dict[int, object]) -> dict[int, object]:
        """Image of a sparse column vector."""
        out = {}
        for i, row in self.data.items():
            s = 0
            for j, v in row.items():
                xj = x.get(j)
                if xj:
                    s += v * xj
            if s != 0:
                out[i] = _norm(s)
        return out

    def transpose(self) -> "LinearMap":
        data: dict[int, dict[int, object]] = {}
        for i, row in self.data.items():
            for j, v in row.items():
                data.setdefault(j, {})[i] = v
        return LinearMap(self.cols, self.rows, data)

    T = property(transpose)

    def select_columns(self, cols: Sequence[int]) -> "LinearMap":
        pos = {c: k for k, c in enumerate(cols)}
        data = {}
        for i, row in self.data.items():
            r = {pos[j]: v for j, v in row.items() if j in pos}
            if r:
                data[i] = r
        return LinearMap(self.rows, len(cols), data)

    def select_rows(self, rows: Sequence[int]) -> "LinearMap":
        return LinearMap(len(rows), self.cols,
                         {k: dict(self.data[i]) for k, i in enumerate(rows) if i in self.data})

    def block(self, row_range: range, col_range: range) -> "LinearMap":
        data = {}
        for i in row_range:
            row = self.data.get(i)
            if not row:
                continue
            r = {j - col_range.start: v for j, v in row.items() if j in col_range}
            if r:
                data[i - row_range.start] = r
        return LinearMap(len(row_range), len(col_range), data)

    # -- rank / kernel -------------------------------------------------------

    def rank(self) -> int:
        return sum(len(_reduce_block(self, rws, cls)[0]) for rws, cls in _components(self))

    def kernel(self) -> "SubspaceBasis":
        vectors = []
        for rws, cls in _components(self):
            if not rws:
                vectors.append((cls[0], {cls[0]: 1}))
                continue
            pivots, red, det = _reduce_block(self, rws, cls)
            pivset = set(pivots)
            for f in range(len(cls)):
                if f in pivset:
                    continue
                v = {cls[f]: det}
                for i, p in enumerate(pivots):
                    x = red[i][f]
                    if x:
                        v[cls[p]] = -x
                g = 0
                for x in v.values():
                    g = math.gcd(g, x)
                if det < 0:
                    g = -g
                vectors.append((cls[f], {i: x // g for i, x in v.items()}))
        vectors.sort(key=lambda t: t[0])
        return SubspaceBasis(LinearMap.from_columns(self.cols, [v for _, v in vectors]))

    def nullity(self) -> int:
        return self.cols - self.rank()

    def partial_inverse(self) -> "LinearMap":
        """A map ``S`` with ``self @ S @ self == self``.

        On each block, the row operations ``T`` that bring the block to
        reduced echelon form are recorded; pivot coordinates of ``S y`` are
        ``(T y)_i / det`` and free coordinates are zero.
        """
        out: dict[int, dict[int, object]] = {}
        for rws, cls in _components(self):
            if not rws:
                continue
            pivots, red, det = _reduce_block(self, rws, cls, augment=True)
            nc = len(cls)
            for i, p in enumerate(pivots):
                row = red[i]
                tgt = {}
                for k, x in enumerate(row[nc:]):
                    if x:
                        tgt[rws[k]] = Fraction(x, det)
                if tgt:
                    out[cls[p]] = tgt
        return LinearMap(self.cols, self.rows, out)

    def __repr__(self):
        return f"LinearMap({self.rows}x{self.cols}, nnz={self.nnz()})"


@dataclass
class SubspaceBasis:
    """A subspace given by the columns of ``matrix`` (assumed independent)."""

    matrix: LinearMap

    @property
    def dim(self) -> int:
        return self.matrix.cols

    @property
    def ambient_dim(self) -> int:
        return self.matrix.rows

    def vectors(self) -> list[dict[int, object]]:
        return self.matrix.columns()

    def contains(self, v: dict[int, object]) -> bool:
        aug = hstack([self.matrix, LinearMap.from_columns(self.ambient_dim, [v])])
        return aug.rank() == self.matrix.rank()


# -- block assembly ----------------------------------------------------------

def hstack(blocks: Sequence[LinearMap]) -> LinearMap:
    rows = blocks[0].rows
    data: dict[int, dict[int, object]] = {}
    off = 0
    for b in blocks:
        if b.rows != rows:
            raise ValueError("row mismatch in hstack")
        for i, row in b.data.items():
            tgt = data.setdefault(i, {})
            for j, v in row.items():
                tgt[j + off] = v
        off += b.cols
    return LinearMap(rows, off, data)


def vstack(blocks: Sequence[LinearMap]) -> LinearMap:
    cols = blocks[0].cols
    data: dict[int, dict[int, object]] = {}
    off = 0
    for b in blocks:
        if b.cols != cols:
            raise ValueError("column mismatch in vstack")
        for i, row in b.data.items():
            data[i + off] = dict(row)
        off += b.rows
    return LinearMap(off, cols, data)


def block_diag(blocks: Sequence[LinearMap]) -> LinearMap:
    data: dict[int, dict[int, object]] = {}
    ro = co = 0
    for b in blocks:
        for i, row in b.data.items():
            data[i + ro] = {j + co: v for j, v in row.items()}
        ro += b.rows
        co += b.cols
    return LinearMap(ro, co, data)


def kron(a: LinearMap, b: LinearMap) -> LinearMap:
    """Tensor product; index ``(i, k)`` is flattened to ``i * dim2 + k``."""
    data: dict[int, dict[int, object]] = {}
    for i, arow in a.data.items():
        for k, brow in b.data.items():
            tgt = data.setdefault(i * b.rows + k, {})
            for j, x in arow.items():
                base = j * b.cols
                for l, y in brow.items():
                    tgt[base + l] = x * y
    return LinearMap(a.rows * b.rows, a.cols * b.cols, data)


# -- elimination -------------------------------------------------------------

def _components(m: LinearMap) -> list[tuple[list[int], list[int]]]:
    """Connected components of the row/column incidence graph.

    Returns ``(rows, cols)`` pairs sorted by smallest column; zero columns are
    singleton components with no rows, zero rows are dropped.
    """
    parent = list(range(m.rows + m.cols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, row in m.data.items():
        ri = find(i)
        for j in row:
            rj = find(m.rows + j)
            if ri != rj:
                parent[rj] = ri
                ri = find(i)
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for j in range(m.cols):
        groups.setdefault(find(m.rows + j), ([], []))[1].append(j)
    for i in m.data:
        root = find(i)
        if root in groups:
            groups[root][0].append(i)
    out = [(sorted(r), c) for r, c in groups.values()]
    out.sort(key=lambda rc: rc[1][0])
    return out


def _integer_rows(m: LinearMap, rows: Sequence[int], cols: Sequence[int]) -> list[list[int]]:
    pos = {c: k for k, c in enumerate(cols)}
    out = []
    for i in rows:
        row = m.data.get(i, {})
        vals = [0] * len(cols)
        den = 1
        for j, v in row.items():
            k = pos.get(j)
            if k is None:
                continue
            vals[k] = v
            if isinstance(v, Fraction):
                den = den * v.denominator // math.gcd(den, v.denominator)
        if den != 1:
            vals = [int(v * den) for v in vals]
        out.append(vals)
    return out


def bareiss_reduce(a: list[list[int]], ncols: int | None = None) -> tuple[list[int], int]:
    """Fraction-free Gauss-Jordan elimination, in place.

    Only the first ``ncols`` columns are searched for pivots (the remaining
    columns, e.g. an identity augmentation, are carried along).  On return
    the first ``rank`` rows are the pivot rows; every pivot entry equals the
    returned ``det`` and pivot columns are zero elsewhere.  All divisions are
    exact because every entry is a minor of the input.
    """
    m = len(a)
    if m == 0:
        return [], 1
    width = len(a[0])
    ncols = width if ncols is None else ncols
    prev = 1
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        prow = a[r]
        piv = prow[c]
        for i in range(m):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    a[i] = [piv * x // prev for x in row]
                continue
            a[i] = [(piv * x - f * y) // prev for x, y in zip(row, prow)]
        prev = piv
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots, prev


def _reduce_block(m: LinearMap, rows, cols, augment: bool = False):
    a = _integer_rows(m, rows, cols)
    nc = len(cols)
    if augment:
        # identity augmentation records the row operations; row scaling of the
        # integer lift is folded into it
        for k, i in enumerate(rows):
            row = m.data.get(i, {})
            den = 1
            for v in row.values():
                if isinstance(v, Fraction):
                    den = den * v.denominator // math.gcd(den, v.denominator)
            ext = [0] * len(rows)
            ext[k] = den
            a[k] = a[k] + ext
    pivots, det = bareiss_reduce(a, nc)
    return pivots, a, det

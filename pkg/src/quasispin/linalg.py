"""Exact dense linear algebra over Q(sqrt 2).

Matrices are small (desk scale, <= a few hundred rows), so everything is
plain Gaussian elimination with the deterministic pivot rule "first
nonzero column, first nonzero row".  A sparse incremental span
(`SpanBasis`) is provided for the representation-theory layers, which
work with vectors given as {index: QuadScalar} dicts.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ONE, ZERO, QuadScalar, quad


class ExactMatrix:
    """Dense matrix over Q(sqrt 2); arithmetic is exact everywhere."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[ZERO] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError("inconsistent matrix dimensions")
            self.data = [[quad(x) for x in row] for row in data]

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        m = ExactMatrix(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @staticmethod
    def from_rows(rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return ExactMatrix(0, 0)
        return ExactMatrix(len(rows), len(rows[0]), rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.data == other.data

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(self.rows, self.cols,
                           [[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(self.rows, self.cols,
                           [[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return ExactMatrix(self.rows, self.cols,
                           [[-a for a in row] for row in self.data])

    def scale(self, c) -> "ExactMatrix":
        c = quad(c)
        return ExactMatrix(self.rows, self.cols,
                           [[c * a for a in row] for row in self.data])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        assert self.cols == other.rows, "shape mismatch"
        out = ExactMatrix(self.rows, other.cols)
        odata = other.data
        for i, row in enumerate(self.data):
            acc = out.data[i]
            for k, x in enumerate(row):
                if not x:
                    continue  # skip structural zeros; most operands are sparse
                orow = odata[k]
                for j, y in enumerate(orow):
                    if y:
                        acc[j] = acc[j] + x * y
        return out

    def apply(self, vec):
        """Matrix times a dense column vector (list of scalars)."""
        assert len(vec) == self.cols
        out = []
        for row in self.data:
            s = ZERO
            for x, v in zip(row, vec):
                if x and v:
                    s = s + x * quad(v)
            out.append(s)
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           [[self.data[i][j] for i in range(self.rows)]
                            for j in range(self.cols)])

    def trace(self):
        assert self.is_square()
        s = ZERO
        for i in range(self.rows):
            s = s + self.data[i][i]
        return s

    def commutator(self, other: "ExactMatrix") -> "ExactMatrix":
        return self @ other - other @ self

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [row[:] for row in self.data])

    def __repr__(self):
        body = "\n".join("[" + ", ".join(map(str, row)) + "]" for row in self.data)
        return f"ExactMatrix({self.rows}x{self.cols})\n{body}"

    # -- elimination --------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (rref_matrix, pivot_columns).

        Pivot rule: scan columns left to right, pick the first row (top
        to bottom) with a nonzero entry.  Fully deterministic.
        """
        m = [row[:] for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inverse()
            m[r] = [inv * x for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return ExactMatrix(self.rows, self.cols, m), pivots


def rank_and_kernel(mat: ExactMatrix):
    """Exact rank and a deterministic RREF-shaped kernel basis.

    Returns (rank, kernel_basis) with rank + len(kernel_basis) == cols
    and mat @ v == 0 for every basis vector v.
    """
    red, pivots = mat.rref()
    rank = len(pivots)
    pivot_set = set(pivots)
    free = [c for c in range(mat.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * mat.cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red.data[r][fc]
        basis.append(v)
    if basis:
        canon, _ = ExactMatrix.from_rows(basis).rref()
        basis = [canon.data[i][:] for i in range(len(basis))]
    return rank, basis


def rank(mat: ExactMatrix) -> int:
    return rank_and_kernel(mat)[0]


def solve(mat: ExactMatrix, b):
    """Solve mat @ x = b exactly.

    Returns the particular solution with free variables set to zero, or
    None when the system is inconsistent.
    """
    assert len(b) == mat.rows
    aug = ExactMatrix(mat.rows, mat.cols + 1,
                      [row + [quad(x)] for row, x in
                       zip([r[:] for r in mat.data], b)])
    red, pivots = aug.rref()
    if mat.cols in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [ZERO] * mat.cols
    for r, pc in enumerate(pivots):
        x[pc] = red.data[r][mat.cols]
    return x


def characteristic_polynomial(mat: ExactMatrix):
    """Coefficients [1, c_{n-1}, ..., c_0] of det(xI - M), exact.

    Faddeev-LeVerrier recursion; division only by integers, fine in
    characteristic zero.
    """
    if not mat.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    n = mat.rows
    coeffs = [ONE]
    m = ExactMatrix(n, n)  # running M_k, starts at 0 so M_1 = A
    ident = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        m = mat @ (m + ident.scale(coeffs[-1]))
        c = -(m.trace() / Fraction(k))
        coeffs.append(c)
    return coeffs


def determinant(mat: ExactMatrix):
    cp = characteristic_polynomial(mat)
    d = cp[-1]
    return d if mat.rows % 2 == 0 else -d


# -- sparse vectors -------------------------------------------------

def svec_add(u: dict, v: dict, c=None) -> dict:
    """u + c*v for sparse vectors; c defaults to 1."""
    out = dict(u)
    for k, x in v.items():
        y = x if c is None else c * x
        s = out.get(k, ZERO) + y
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def svec_scale(v: dict, c) -> dict:
    c = quad(c)
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def svec_is_zero(v: dict) -> bool:
    return not any(v.values())


def svec_to_dense(v: dict, n: int):
    out = [ZERO] * n
    for k, x in v.items():
        out[k] = x
    return out


def dense_to_svec(vec) -> dict:
    return {i: quad(x) for i, x in enumerate(vec) if quad(x)}


class SpanBasis:
    """Incremental exact span of sparse vectors, kept in echelon form.

    Vectors are dicts {coordinate index: QuadScalar}.  Pivot of a vector
    is its smallest-index nonzero coordinate, each stored vector is
    normalized to pivot 1 and reduced against the others, so membership
    tests and dimension counting are deterministic.
    """

    def __init__(self):
        self.pivots: dict = {}  # pivot index -> reduced vector

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec after subtracting its projection on the span."""
        v = dict(vec)
        while v:
            p = min(k for k, x in v.items() if x)
            if not v[p]:
                del v[p]
                continue
            row = self.pivots.get(p)
            if row is None:
                return v
            v = svec_add(v, row, -v[p])
        return v

    def add(self, vec: dict) -> bool:
        """Insert vec; returns True when it enlarged the span."""
        v = self.reduce(vec)
        v = {k: x for k, x in v.items() if x}
        if not v:
            return False
        p = min(v)
        v = svec_scale(v, v[p].inverse())
        # back-substitute into existing rows to keep full reduction
        for q, row in list(self.pivots.items()):
            if p in row and row[p]:
                self.pivots[q] = svec_add(row, v, -row[p])
        self.pivots[p] = v
        return True

    def contains(self, vec: dict) -> bool:
        return svec_is_zero(self.reduce(vec))

    def vectors(self):
        """Echelon basis, ordered by pivot index (deterministic)."""
        return [self.pivots[p] for p in sorted(self.pivots)]

    def copy(self) -> "SpanBasis":
        s = SpanBasis()
        s.pivots = {p: dict(v) for p, v in self.pivots.items()}
        return s


class LinOp:
    """Sparse linear operator on a dim-dimensional space.

    Stored column-wise: cols[c] is the sparse image of basis vector c.
    Suits second-quantized operators, whose columns have a handful of
    entries; products and commutators stay cheap even at dim 256+.
    """

    __slots__ = ("dim", "cols")

    def __init__(self, dim: int, cols=None):
        self.dim = dim
        self.cols: dict = {}
        if cols:
            for c, col in cols.items():
                col = {r: quad(x) for r, x in col.items() if quad(x)}
                if col:
                    self.cols[c] = col

    @staticmethod
    def identity(dim: int) -> "LinOp":
        return LinOp(dim, {c: {c: ONE} for c in range(dim)})

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for c, x in vec.items():
            col = self.cols.get(c)
            if not col or not x:
                continue
            for r, y in col.items():
                s = out.get(r, ZERO) + x * y
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out

    def __matmul__(self, other: "LinOp") -> "LinOp":
        assert self.dim == other.dim
        out = LinOp(self.dim)
        for c, col in other.cols.items():
            img = self.apply(col)
            if img:
                out.cols[c] = img
        return out

    def __add__(self, other: "LinOp") -> "LinOp":
        assert self.dim == other.dim
        out = LinOp(self.dim, {c: dict(col) for c, col in self.cols.items()})
        for c, col in other.cols.items():
            merged = svec_add(out.cols.get(c, {}), col)
            if merged:
                out.cols[c] = merged
            else:
                out.cols.pop(c, None)
        return out

    def __sub__(self, other: "LinOp") -> "LinOp":
        return self + other.scale(-1)

    def __neg__(self) -> "LinOp":
        return self.scale(-1)

    def scale(self, c) -> "LinOp":
        c = quad(c)
        if not c:
            return LinOp(self.dim)
        return LinOp(self.dim, {k: {r: c * x for r, x in col.items()}
                                for k, col in self.cols.items()})

    def commutator(self, other: "LinOp") -> "LinOp":
        return self @ other - other @ self

    def anticommutator(self, other: "LinOp") -> "LinOp":
        return self @ other + other @ self

    def transpose(self) -> "LinOp":
        out = LinOp(self.dim)
        for c, col in self.cols.items():
            for r, x in col.items():
                out.cols.setdefault(r, {})[c] = x
        return out

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other):
        if not isinstance(other, LinOp):
            return NotImplemented
        return self.dim == other.dim and (self - other).is_zero()

    def entry(self, r: int, c: int):
        return self.cols.get(c, {}).get(r, ZERO)

    def is_diagonal(self) -> bool:
        return all(set(col) <= {c} for c, col in self.cols.items())

    def to_matrix(self) -> ExactMatrix:
        m = ExactMatrix(self.dim, self.dim)
        for c, col in self.cols.items():
            for r, x in col.items():
                m.data[r][c] = x
        return m

    def restrict(self, source_basis, target_basis) -> "ExactMatrix | None":
        """Matrix of the operator from span(source) to span(target) bases.

        Returns None when some image falls outside the target span (the
        caller treats that as a falsified containment claim).
        """
        cols = []
        for v in source_basis:
            img = self.apply(v)
            coords = coordinates_in_basis(target_basis, img)
            if coords is None:
                return None
            cols.append(coords)
        m = ExactMatrix(len(target_basis), len(source_basis))
        for j, col in enumerate(cols):
            for i, x in enumerate(col):
                m.data[i][j] = x
        return m


def coordinates_in_basis(basis, vec: dict):
    """Express vec in the given (ordered, independent) sparse basis.

    Returns the coefficient list, or None when vec lies outside the span.
    """
    support = sorted({k for b in basis for k in b} | set(vec))
    pos = {k: i for i, k in enumerate(support)}
    mat = ExactMatrix(len(support), len(basis))
    for j, b in enumerate(basis):
        for k, x in b.items():
            mat.data[pos[k]][j] = x
    rhs = [ZERO] * len(support)
    for k, x in vec.items():
        rhs[pos[k]] = x
    x = solve(mat, rhs)
    if x is None:
        return None
    # solve() zero-fills free variables; verify exactly (basis should be
    # independent so the solution, if any, is unique)
    chk = mat.apply(x)
    if chk != rhs:
        return None
    return x

"""Dense exact matrix calculus.

Composition, Kronecker tensor product, exact equality, right-solving and
constructive idempotent splitting, all over one of the exact fields from
:mod:`weakcp.fields`.  Matrices are immutable; every operation returns a new
matrix, so values may be shared freely between threads.

Conventions (fixed for the whole engine):

* a morphism X -> Y is a dim(Y) x dim(X) matrix acting on column vectors,
  composition is left multiplication;
* the basis vector e_i (x) e_j of X (x) Y has flat index i * dim(Y) + j, and
  the tensor product of matrices is the standard Kronecker product under
  that indexing.

When the compiled extension is available, prime-field composition and
tensor products run through it; the pure-Python path computes identical
results (``weakcp.kernel.BACKEND`` tells which one is active).
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import PrimeField, same_field

try:
    from . import _speedups
except ImportError:  # pragma: no cover - depends on how the package was built
    _speedups = None

BACKEND = "pure" if _speedups is None else "compiled"


class ShapeError(ValueError):
    """Dimension mismatch; the message names both offending shapes."""


class NotIdempotentError(ValueError):
    """Input to split_idempotent fails E*E = E; carries a witness entry."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InconsistentSystemError(ValueError):
    """solve_right got a column outside the column space; remembers which."""

    def __init__(self, message, column):
        super().__init__(message)
        self.column = column


@dataclass(frozen=True)
class Mat:
    """Dense row-major matrix over an exact field."""

    rows: int
    cols: int
    entries: tuple
    field: object

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r):
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def column(self, c):
        return tuple(self.entries[r * self.cols + c] for r in range(self.rows))

    def to_lists(self):
        return [list(self.row(r)) for r in range(self.rows)]

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.fmt(x) for x in self.row(r)) for r in range(self.rows)
        )
        return f"Mat({self.rows}x{self.cols} over {self.field!r}: [{body}])"


def mat(rows, cols, entries, field) -> Mat:
    """Build a matrix, coercing each entry into the field."""
    flat = tuple(field.coerce(x) for x in entries)
    return Mat(rows, cols, flat, field)


def from_rows(rows_list, field) -> Mat:
    nrows = len(rows_list)
    ncols = len(rows_list[0]) if nrows else 0
    for r in rows_list:
        if len(r) != ncols:
            raise ShapeError("ragged rows")
    return mat(nrows, ncols, [x for row in rows_list for x in row], field)


def identity_mat(n, field) -> Mat:
    one, zero = field.one(), field.zero()
    return Mat(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)), field)


def zero_mat(rows, cols, field) -> Mat:
    return Mat(rows, cols, (field.zero(),) * (rows * cols), field)


def mat_compose(g: Mat, f: Mat) -> Mat:
    """The composite g o f (matrix product g * f)."""
    field = same_field(g.field, f.field)
    if g.cols != f.rows:
        raise ShapeError(
            f"cannot compose {g.rows}x{g.cols} with {f.rows}x{f.cols}: "
            f"{g.cols} != {f.rows}"
        )
    if isinstance(field, PrimeField) and _speedups is not None:
        flat = _speedups.matmul_mod(list(g.entries), g.rows, g.cols, list(f.entries), f.cols, field.p)
        return Mat(g.rows, f.cols, tuple(flat), field)
    return Mat(g.rows, f.cols, tuple(_matmul_flat(g, f, field)), field)


def _matmul_flat(g, f, field):
    n, k, m = g.rows, g.cols, f.cols
    ge, fe = g.entries, f.entries
    zero = field.zero()
    out = []
    if isinstance(field, PrimeField):
        p = field.p
        for i in range(n):
            grow = ge[i * k : (i + 1) * k]
            for j in range(m):
                acc = 0
                for t in range(k):
                    acc += grow[t] * fe[t * m + j]
                out.append(acc % p)
    else:
        for i in range(n):
            grow = ge[i * k : (i + 1) * k]
            for j in range(m):
                acc = zero
                for t in range(k):
                    gv = grow[t]
                    if gv:
                        fv = fe[t * m + j]
                        if fv:
                            acc = acc + gv * fv
                out.append(acc)
    return out


def mat_tensor(f: Mat, g: Mat) -> Mat:
    """Kronecker product f (x) g."""
    field = same_field(f.field, g.field)
    rows, cols = f.rows * g.rows, f.cols * g.cols
    if isinstance(field, PrimeField) and _speedups is not None:
        flat = _speedups.kron_mod(list(f.entries), f.rows, f.cols, list(g.entries), g.rows, g.cols, field.p)
        return Mat(rows, cols, tuple(flat), field)
    return Mat(rows, cols, tuple(_kron_flat(f, g, field)), field)


def _kron_flat(f, g, field):
    rows, cols = f.rows * g.rows, f.cols * g.cols
    modp = isinstance(field, PrimeField)
    zero = field.zero()
    out = [zero] * (rows * cols)
    fe, ge = f.entries, g.entries
    for i1 in range(f.rows):
        for j1 in range(f.cols):
            a = fe[i1 * f.cols + j1]
            if not a:
                continue
            for i2 in range(g.rows):
                base = (i1 * g.rows + i2) * cols + j1 * g.cols
                for j2 in range(g.cols):
                    b = ge[i2 * g.cols + j2]
                    if b:
                        out[base + j2] = (a * b) % field.p if modp else a * b
    return out


def mat_eq(f: Mat, g: Mat) -> bool:
    """Exact equality: identical shape and identical entries."""
    return f.rows == g.rows and f.cols == g.cols and f.entries == g.entries


def first_difference(f: Mat, g: Mat):
    """First (row, col) where f and g differ, or None if equal."""
    if f.rows != g.rows or f.cols != g.cols:
        raise ShapeError(
            f"cannot compare {f.rows}x{f.cols} with {g.rows}x{g.cols}"
        )
    for idx, (a, b) in enumerate(zip(f.entries, g.entries)):
        if a != b:
            return divmod(idx, f.cols)
    return None


def _column_basis(m: Mat):
    """Greedy left-to-right pivot-column scan of m.

    Returns (pivot_cols, basis) where basis holds the reduced columns as
    (vector, pivot_row) pairs; the pivot row of each reduced column is its
    first nonzero coordinate.
    """
    field = m.field
    pivot_cols = []
    basis = []  # (reduced column as list, pivot row)
    for j in range(m.cols):
        v = list(m.column(j))
        for bv, pr in basis:
            coeff = v[pr]
            if coeff:
                factor = field.div(coeff, bv[pr])
                for r in range(m.rows):
                    if bv[r]:
                        v[r] = field.sub(v[r], field.mul(factor, bv[r]))
        pr = next((r for r, x in enumerate(v) if x), None)
        if pr is not None:
            pivot_cols.append(j)
            basis.append((v, pr))
    return pivot_cols, basis


def rank(m: Mat) -> int:
    return len(_column_basis(m)[0])


def solve_right(a: Mat, b: Mat) -> Mat:
    """X with a o X = b, solved column by column by Gaussian elimination.

    Free variables (when a has deficient column rank) are set to zero, so
    the result is deterministic; an inconsistent column raises
    InconsistentSystemError naming the column.
    """
    field = same_field(a.field, b.field)
    if a.rows != b.rows:
        raise ShapeError(
            f"solve_right: {a.rows}x{a.cols} and {b.rows}x{b.cols} have "
            "different numbers of rows"
        )
    arows = [list(a.row(r)) for r in range(a.rows)]
    brows = [list(b.row(r)) for r in range(b.rows)]
    pivots = []  # (row, col)
    prow = 0
    for col in range(a.cols):
        pr = next((r for r in range(prow, a.rows) if arows[r][col]), None)
        if pr is None:
            continue
        arows[prow], arows[pr] = arows[pr], arows[prow]
        brows[prow], brows[pr] = brows[pr], brows[prow]
        piv = arows[prow][col]
        for r in range(a.rows):
            if r != prow and arows[r][col]:
                factor = field.div(arows[r][col], piv)
                for c in range(col, a.cols):
                    arows[r][c] = field.sub(arows[r][c], field.mul(factor, arows[prow][c]))
                for c in range(b.cols):
                    brows[r][c] = field.sub(brows[r][c], field.mul(factor, brows[prow][c]))
        pivots.append((prow, col))
        prow += 1
        if prow == a.rows:
            break
    pivot_rows = {r for r, _ in pivots}
    for r in range(a.rows):
        if r not in pivot_rows:
            for c in range(b.cols):
                if brows[r][c]:
                    raise InconsistentSystemError(
                        f"column {c} of the right-hand side is outside the "
                        "column space", c
                    )
    zero = field.zero()
    x = [[zero] * b.cols for _ in range(a.cols)]
    for r, col in pivots:
        piv = arows[r][col]
        for c in range(b.cols):
            x[col][c] = field.div(brows[r][c], piv)
    # build directly (not via from_rows) so a 0 x n result keeps its shape
    return Mat(a.cols, b.cols, tuple(v for row in x for v in row), field)


@dataclass(frozen=True)
class Splitting:
    """Factorization of an idempotent E as inj o proj with proj o inj = id."""

    rank: int
    inj: Mat  # n x r
    proj: Mat  # r x n


def split_idempotent(e: Mat) -> Splitting:
    """Split an idempotent through its rank.

    The injection's columns are the pivot columns of E under left-to-right
    column reduction with first-nonzero pivot selection, which makes the
    factorization deterministic and works over any exact field; the
    projection is recovered by solving inj o proj = E.  proj o inj = id is
    automatic (inj is injective and E o inj = inj) but re-verified anyway.
    """
    if e.rows != e.cols:
        raise NotIdempotentError(f"matrix is {e.rows}x{e.cols}, not square")
    ee = mat_compose(e, e)
    diff = first_difference(ee, e)
    if diff is not None:
        r, c = diff
        raise NotIdempotentError(
            f"matrix is not idempotent: (E*E)[{r},{c}] = "
            f"{e.field.fmt(ee[r, c])} but E[{r},{c}] = {e.field.fmt(e[r, c])}",
            witness=(r, c, ee[r, c], e[r, c]),
        )
    pivot_cols, _ = _column_basis(e)
    r = len(pivot_cols)
    inj = from_rows(
        [[e[i, j] for j in pivot_cols] for i in range(e.rows)], e.field
    )
    proj = solve_right(inj, e)
    if not mat_eq(mat_compose(inj, proj), e) or not mat_eq(
        mat_compose(proj, inj), identity_mat(r, e.field)
    ):
        raise AssertionError("internal error: splitting equations failed")
    return Splitting(rank=r, inj=inj, proj=proj)

"""Finite-dimensional vector spaces, linear maps, and monoids therein.

Objects are finite tensor words of named spaces and are strict-monoidal:
the tensor of objects concatenates factor lists and the unit object is the
empty word (dimension one).  A morphism remembers its domain and codomain
words; composition checks shapes at every junction, so a mis-assembled
ten-factor composite fails at build time with the offending pair of shapes
rather than producing a wrong matrix.

Basis convention: the basis vector e_{i1} (x) ... (x) e_{ik} of a word with
factor dimensions (d1, ..., dk) has row-major flat index
``i1*d2*...*dk + ... + ik``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .fields import same_field
from .kernel import (
    Mat,
    ShapeError,
    from_rows,
    identity_mat,
    mat_compose,
    mat_eq,
    mat_tensor,
)
from .report import Report, ReportItem, Witness, _unflatten


@dataclass(frozen=True)
class FObj:
    """A tensor word of named finite-dimensional spaces.

    ``factors`` is a tuple of (name, dimension) pairs; the empty tuple is
    the monoidal unit (the ground field, dimension one).
    """

    factors: tuple

    @property
    def dim(self) -> int:
        return math.prod(d for _, d in self.factors)

    @property
    def dims(self) -> tuple:
        return tuple(d for _, d in self.factors)

    def __matmul__(self, other: "FObj") -> "FObj":
        return FObj(self.factors + other.factors)

    def __repr__(self):
        if not self.factors:
            return "K"
        return " (x) ".join(name for name, _ in self.factors)


UNIT = FObj(())


def vobj(name: str, dim: int) -> FObj:
    """A single named space as a one-factor word."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    return FObj(((name, dim),))


def tensor_obj(*objs: FObj) -> FObj:
    out = UNIT
    for o in objs:
        out = out @ o
    return out


def flatten_index(dims, multi) -> int:
    """Row-major flat index of a basis multi-index."""
    if len(dims) != len(multi):
        raise ValueError(f"multi-index {multi} does not match dims {dims}")
    flat = 0
    for d, i in zip(dims, multi):
        if not 0 <= i < d:
            raise ValueError(f"index {i} out of range for dimension {d}")
        flat = flat * d + i
    return flat


@dataclass(frozen=True)
class FMor:
    """A linear map between tensor words, stored as an exact matrix."""

    dom: FObj
    cod: FObj
    mat: Mat

    def __post_init__(self):
        if self.mat.rows != self.cod.dim or self.mat.cols != self.dom.dim:
            raise ShapeError(
                f"matrix is {self.mat.rows}x{self.mat.cols} but the map "
                f"{self.dom!r} -> {self.cod!r} needs "
                f"{self.cod.dim}x{self.dom.dim}"
            )

    @property
    def field(self):
        return self.mat.field

    def __repr__(self):
        return f"FMor({self.dom!r} -> {self.cod!r} over {self.field!r})"


def identity(obj: FObj, field) -> FMor:
    return FMor(obj, obj, identity_mat(obj.dim, field))


def mor(dom: FObj, cod: FObj, rows, field) -> FMor:
    """A morphism from a row-major nested list of entries."""
    return FMor(dom, cod, from_rows(rows, field))


def mor_from_map(dom: FObj, cod: FObj, fn, field) -> FMor:
    """Build a morphism from its action on basis vectors.

    ``fn`` receives a basis multi-index of the domain (a tuple, one index
    per factor) and returns a dict mapping codomain multi-indices to
    coefficients.
    """
    dd, cd = dom.dims, cod.dims
    zero = field.zero()
    cols = []
    for j in range(dom.dim):
        col = [zero] * cod.dim
        for out_multi, coeff in fn(_unflatten(j, dd)).items():
            col[flatten_index(cd, tuple(out_multi))] = field.coerce(coeff)
        cols.append(col)
    rows = [[cols[j][i] for j in range(dom.dim)] for i in range(cod.dim)]
    return FMor(dom, cod, from_rows(rows, field))


def swap(x: FObj, y: FObj, field) -> FMor:
    """The flip x (x) y -> y (x) x."""
    dx, dy = x.dim, y.dim
    one, zero = field.one(), field.zero()
    rows = [[zero] * (dx * dy) for _ in range(dx * dy)]
    for i in range(dx):
        for j in range(dy):
            rows[j * dx + i][i * dy + j] = one
    return FMor(x @ y, y @ x, from_rows(rows, field))


def compose(*fs: FMor) -> FMor:
    """Composite of morphisms written outer-first: compose(f, g) = f o g."""
    if not fs:
        raise ValueError("compose needs at least one morphism")
    out = fs[0]
    for f in fs[1:]:
        if out.dom.dim != f.cod.dim:
            raise ShapeError(
                f"cannot compose: expected codomain of dimension "
                f"{out.dom.dim} ({out.dom!r}) but got {f.cod.dim} ({f.cod!r})"
            )
        out = FMor(f.dom, out.cod, mat_compose(out.mat, f.mat))
    return out


def tensor(*fs: FMor) -> FMor:
    """Tensor product of morphisms, left to right."""
    if not fs:
        raise ValueError("tensor needs at least one morphism")
    out = fs[0]
    for f in fs[1:]:
        out = FMor(out.dom @ f.dom, out.cod @ f.cod, mat_tensor(out.mat, f.mat))
    return out


def mor_eq(f: FMor, g: FMor) -> bool:
    return f.dom.dim == g.dom.dim and f.cod.dim == g.cod.dim and mat_eq(f.mat, g.mat)


def check_equal(label: str, lhs: FMor, rhs: FMor, note: str = "") -> ReportItem:
    """Compare two morphisms entry by entry, producing a witnessed item."""
    if lhs.dom.dim != rhs.dom.dim or lhs.cod.dim != rhs.cod.dim:
        raise ShapeError(
            f"check {label!r}: comparing a map {lhs.dom!r} -> {lhs.cod!r} "
            f"with a map {rhs.dom!r} -> {rhs.cod!r}"
        )
    if mat_eq(lhs.mat, rhs.mat):
        return ReportItem(label, True, note=note)
    for idx, (a, b) in enumerate(zip(lhs.mat.entries, rhs.mat.entries)):
        if a != b:
            r, c = divmod(idx, lhs.mat.cols)
            field = lhs.field
            return ReportItem(
                label,
                False,
                witness=Witness(
                    basis_index=_unflatten(c, lhs.dom.dims),
                    coordinate=_unflatten(r, lhs.cod.dims),
                    lhs=field.fmt(a),
                    rhs=field.fmt(b),
                ),
                note=note,
            )
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class MonoidData:
    """A finite-dimensional associative unital algebra.

    ``mul`` is a map A (x) A -> A and ``unit`` a map K -> A, both exact
    matrices over the carried field.
    """

    name: str
    obj: FObj
    mul: FMor
    unit: FMor

    @property
    def dim(self) -> int:
        return self.obj.dim

    @property
    def field(self):
        return self.mul.field


def monoid(name: str, dim: int, mul_rows, unit_entries, field) -> MonoidData:
    """A monoid from a dim x dim^2 multiplication table and a unit vector."""
    obj = vobj(name, dim)
    mul = FMor(obj @ obj, obj, from_rows(mul_rows, field))
    unit = FMor(UNIT, obj, from_rows([[x] for x in unit_entries], field))
    return MonoidData(name, obj, mul, unit)


def monoid_from_structure(name: str, structure, unit_entries, field) -> MonoidData:
    """A monoid from structure constants: structure[i][j] is the product
    of basis vectors e_i and e_j as a coefficient list."""
    dim = len(structure)
    rows = [
        [field.coerce(structure[i][j][k]) for i in range(dim) for j in range(dim)]
        for k in range(dim)
    ]
    return monoid(name, dim, rows, [field.coerce(x) for x in unit_entries], field)


def check_monoid(m: MonoidData, prefix: str = "") -> Report:
    """Associativity and the two unit laws, as witnessed checks."""
    a, mu, eta, field = m.obj, m.mul, m.unit, m.field
    ida = identity(a, field)
    rep = Report()
    rep.add(check_equal(
        prefix + "assoc",
        compose(mu, tensor(mu, ida)),
        compose(mu, tensor(ida, mu)),
    ))
    rep.add(check_equal(prefix + "unit-left", compose(mu, tensor(eta, ida)), ida))
    rep.add(check_equal(prefix + "unit-right", compose(mu, tensor(ida, eta)), ida))
    return rep


@dataclass(frozen=True)
class ModuleData:
    """A left module: an action A (x) M -> M of a monoid on a space."""

    algebra: MonoidData
    carrier: FObj
    action: FMor


def regular_module(m: MonoidData) -> ModuleData:
    """The monoid acting on itself by multiplication."""
    return ModuleData(m, m.obj, m.mul)


def check_left_module(d: ModuleData, prefix: str = "") -> Report:
    """Left-module axioms for an action A (x) M -> M."""
    m, x, action = d.algebra, d.carrier, d.action
    field = same_field(m.field, action.field)
    ida, idx = identity(m.obj, field), identity(x, field)
    rep = Report()
    rep.add(check_equal(
        prefix + "module-assoc",
        compose(action, tensor(m.mul, idx)),
        compose(action, tensor(ida, action)),
    ))
    rep.add(check_equal(
        prefix + "module-unit", compose(action, tensor(m.unit, idx)), idx
    ))
    return rep

"""Exact matrix calculus: composition, tensor, solving, splitting."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIELDS, random_idempotent, random_mat
from weakcp.fields import GF, QQ, FieldMismatchError
from weakcp.kernel import (
    BACKEND,
    InconsistentSystemError,
    Mat,
    NotIdempotentError,
    ShapeError,
    first_difference,
    from_rows,
    identity_mat,
    mat_compose,
    mat_eq,
    mat_tensor,
    rank,
    solve_right,
    split_idempotent,
    zero_mat,
)


def test_compose_basic():
    a = from_rows([[1, 2]], QQ)
    b = from_rows([[3], [4]], QQ)
    assert mat_compose(a, b).entries == (QQ.coerce(11),)


def test_compose_shape_mismatch():
    a = from_rows([[1, 2]], QQ)
    with pytest.raises(ShapeError):
        mat_compose(a, a)


def test_compose_field_mismatch():
    a = from_rows([[1]], QQ)
    b = from_rows([[1]], GF(2))
    with pytest.raises(FieldMismatchError):
        mat_compose(a, b)


def test_identity_neutral():
    rng = random.Random(1)
    for field in FIELDS:
        m = random_mat(rng, 3, 4, field)
        assert mat_eq(mat_compose(identity_mat(3, field), m), m)
        assert mat_eq(mat_compose(m, identity_mat(4, field)), m)


def test_tensor_of_identities():
    for field in FIELDS:
        t = mat_tensor(identity_mat(2, field), identity_mat(3, field))
        assert mat_eq(t, identity_mat(6, field))


def test_tensor_indexing_convention():
    # e_i (x) e_j has flat index i * dim(second) + j
    a = from_rows([[0, 1], [1, 0]], QQ)  # swaps e_0, e_1
    b = identity_mat(3, QQ)
    t = mat_tensor(a, b)
    col = [t[r, 1] for r in range(6)]  # image of e_0 (x) e_1
    assert col == [QQ.zero()] * 4 + [QQ.one(), QQ.zero()]


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_compose_associative(data):
    field = data.draw(st.sampled_from(FIELDS))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    dims = [data.draw(st.integers(1, 4)) for _ in range(4)]
    a = random_mat(rng, dims[0], dims[1], field)
    b = random_mat(rng, dims[1], dims[2], field)
    c = random_mat(rng, dims[2], dims[3], field)
    assert mat_eq(
        mat_compose(mat_compose(a, b), c), mat_compose(a, mat_compose(b, c))
    )


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_tensor_compose_interchange(data):
    # (a (x) b) o (c (x) d) = (a o c) (x) (b o d)
    field = data.draw(st.sampled_from(FIELDS))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    d = [data.draw(st.integers(1, 3)) for _ in range(4)]
    a = random_mat(rng, d[0], d[1], field)
    c = random_mat(rng, d[1], d[2], field)
    b = random_mat(rng, d[3], d[0], field)
    x = random_mat(rng, d[0], d[3], field)
    lhs = mat_compose(mat_tensor(a, b), mat_tensor(c, x))
    rhs = mat_tensor(mat_compose(a, c), mat_compose(b, x))
    assert mat_eq(lhs, rhs)


def test_rank_examples():
    assert rank(zero_mat(3, 3, QQ)) == 0
    assert rank(identity_mat(4, GF(5))) == 4
    assert rank(from_rows([[1, 2], [2, 4]], QQ)) == 1


def test_solve_right_exact():
    a = from_rows([[1, 2], [3, 4]], QQ)
    b = identity_mat(2, QQ)
    x = solve_right(a, b)
    assert mat_eq(mat_compose(a, x), b)
    assert x[0, 0] == QQ.coerce("-2")
    assert x[0, 1] == QQ.coerce("1")


def test_solve_right_inconsistent():
    a = from_rows([[1, 0], [1, 0]], QQ)
    b = from_rows([[0, 1], [0, 2]], QQ)
    with pytest.raises(InconsistentSystemError) as exc:
        solve_right(a, b)
    assert exc.value.column == 1


def test_solve_right_free_variables_zero():
    a = from_rows([[1, 1]], QQ)
    b = from_rows([[5]], QQ)
    x = solve_right(a, b)
    assert x.entries == (QQ.coerce(5), QQ.zero())


def test_split_examples():
    sp = split_idempotent(from_rows([[1, 1], [0, 0]], QQ))
    assert sp.rank == 1
    assert [list(sp.inj.row(r)) for r in range(2)] == [[1], [0]]
    assert list(sp.proj.row(0)) == [1, 1]

    sp = split_idempotent(from_rows([[1, 0], [0, 0]], GF(3)))
    assert sp.rank == 1
    assert sp.inj.entries == (1, 0)
    assert sp.proj.entries == (1, 0)


def test_split_identity_and_zero():
    for field in FIELDS:
        sp = split_idempotent(identity_mat(3, field))
        assert sp.rank == 3
        sp = split_idempotent(zero_mat(3, 3, field))
        assert sp.rank == 0
        assert (sp.inj.rows, sp.inj.cols) == (3, 0)
        assert (sp.proj.rows, sp.proj.cols) == (0, 3)


def test_split_rejects_non_idempotent():
    with pytest.raises(NotIdempotentError) as exc:
        split_idempotent(from_rows([[0, 1], [0, 0]], QQ))
    assert exc.value.witness is not None


def test_split_rejects_non_square():
    with pytest.raises(NotIdempotentError):
        split_idempotent(zero_mat(2, 3, QQ))


def test_split_200_random_idempotents_deterministic():
    rng = random.Random(20240817)
    for i in range(200):
        field = FIELDS[i % len(FIELDS)]
        n = rng.randint(1, 5)
        e = random_idempotent(rng, n, field)
        sp = split_idempotent(e)
        assert mat_eq(mat_compose(sp.inj, sp.proj), e)
        assert mat_eq(mat_compose(sp.proj, sp.inj),
                      identity_mat(sp.rank, field))
        again = split_idempotent(e)
        assert sp.inj.entries == again.inj.entries
        assert sp.proj.entries == again.proj.entries


def test_first_difference():
    a = from_rows([[1, 2], [3, 4]], QQ)
    b = from_rows([[1, 2], [3, 5]], QQ)
    assert first_difference(a, a) is None
    assert first_difference(a, b) == (1, 1)


def test_backend_is_reported():
    assert BACKEND in ("pure", "compiled")


@pytest.mark.skipif(BACKEND != "compiled", reason="extension not built")
def test_compiled_matches_pure():
    from weakcp import kernel

    rng = random.Random(7)
    field = GF(7)
    a = random_mat(rng, 5, 6, field)
    b = random_mat(rng, 6, 4, field)
    assert mat_compose(a, b).entries == tuple(
        kernel._matmul_flat(a, b, field)
    )
    c = random_mat(rng, 3, 2, field)
    d = random_mat(rng, 2, 3, field)
    assert mat_tensor(c, d).entries == tuple(kernel._kron_flat(c, d, field))

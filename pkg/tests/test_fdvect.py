"""Tensor words, morphisms, monoids and modules."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIELDS, random_mat
from weakcp.fdvect import (
    FMor,
    FObj,
    MonoidData,
    UNIT,
    check_equal,
    check_left_module,
    check_monoid,
    compose,
    flatten_index,
    identity,
    monoid_from_structure,
    mor,
    mor_from_map,
    mor_eq,
    regular_module,
    swap,
    tensor,
    tensor_obj,
    vobj,
)
from weakcp.fields import GF, QQ
from weakcp.fixtures import cyclic_group_algebra, diagonal_algebra
from weakcp.kernel import ShapeError, mat_eq


def test_obj_dims_and_unit():
    v, w = vobj("V", 2), vobj("W", 3)
    assert (v @ w).dim == 6
    assert (v @ w).dims == (2, 3)
    assert UNIT.dim == 1
    assert tensor_obj(v, UNIT, w).dims == (2, 3)
    assert (UNIT @ v).factors == v.factors


def test_vobj_rejects_nonpositive():
    with pytest.raises(ValueError):
        vobj("V", 0)


def test_flatten_index_row_major():
    assert flatten_index((2, 3), (1, 2)) == 5
    assert flatten_index((), ()) == 0
    with pytest.raises(ValueError):
        flatten_index((2, 3), (2, 0))


def test_mor_shape_checked():
    v = vobj("V", 2)
    with pytest.raises(ShapeError):
        mor(v, v, [[1, 0, 0], [0, 1, 0]], QQ)


def test_compose_junction_error_names_shapes():
    v, w = vobj("V", 2), vobj("W", 3)
    f = identity(v, QQ)
    g = identity(w, QQ)
    with pytest.raises(ShapeError) as exc:
        compose(f, g)
    assert "2" in str(exc.value) and "3" in str(exc.value)


def test_mor_from_map_matches_mor():
    v = vobj("V", 2)
    f = mor_from_map(v, v, lambda m: {(1 - m[0],): 1}, QQ)
    g = mor(v, v, [[0, 1], [1, 0]], QQ)
    assert mor_eq(f, g)


def test_swap_involution_and_naturality():
    rng = random.Random(3)
    for field in FIELDS:
        x, y = vobj("X", 2), vobj("Y", 3)
        s = swap(x, y, field)
        s_back = swap(y, x, field)
        assert mor_eq(compose(s_back, s), identity(x @ y, field))
        f = FMor(x, x, random_mat(rng, 2, 2, field))
        g = FMor(y, y, random_mat(rng, 3, 3, field))
        assert mor_eq(compose(s, tensor(f, g)), compose(tensor(g, f), s))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_tensor_associative_on_morphisms(data):
    field = data.draw(st.sampled_from(FIELDS))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    ms = []
    for name in "XYZ":
        r, c = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
        ms.append(FMor(vobj(name, c), vobj(name + "'", r),
                       random_mat(rng, r, c, field)))
    lhs = tensor(tensor(ms[0], ms[1]), ms[2])
    rhs = tensor(ms[0], tensor(ms[1], ms[2]))
    assert mat_eq(lhs.mat, rhs.mat)


def test_check_equal_witness_coordinates():
    v = vobj("V", 2)
    f = mor(v @ v, v, [[1, 0, 0, 0], [0, 0, 0, 1]], QQ)
    g = mor(v @ v, v, [[1, 0, 0, 0], [0, 0, 1, 1]], QQ)
    item = check_equal("demo", f, g)
    assert item.passed is False
    assert item.witness.basis_index == (1, 0)
    assert item.witness.coordinate == (1,)
    assert item.witness.lhs == "0" and item.witness.rhs == "1"


def test_check_equal_shape_mismatch_raises():
    v, w = vobj("V", 2), vobj("W", 3)
    with pytest.raises(ShapeError):
        check_equal("demo", identity(v, QQ), identity(w, QQ))


def test_monoid_checks_pass_on_group_algebra():
    for field in FIELDS:
        m = cyclic_group_algebra("C4", 4, field)
        assert check_monoid(m).ok


def test_monoid_checks_fail_on_broken_structure():
    # "multiplication" that is not associative
    bad = monoid_from_structure(
        "B",
        [[[0, 1], [1, 0]], [[1, 0], [1, 0]]],
        [1, 0],
        QQ,
    )
    rep = check_monoid(bad)
    assert not rep.ok
    assert rep["assoc"].passed is False
    assert rep["assoc"].witness is not None


def test_regular_module_passes():
    m = diagonal_algebra("A", 3, GF(5))
    rep = check_left_module(regular_module(m))
    assert rep.ok
    assert {i.label for i in rep.items} == {"module-assoc", "module-unit"}


def test_module_check_detects_bad_action():
    m = diagonal_algebra("A", 2, QQ)
    x = vobj("X", 2)
    bad = mor(m.obj @ x, x, [[0, 1, 0, 0], [0, 0, 0, 1]], QQ)
    from weakcp.fdvect import ModuleData

    rep = check_left_module(ModuleData(m, x, bad))
    assert not rep.ok

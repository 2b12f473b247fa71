import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gapkit import AbelianGroup, FnTable, GroupError, fn_add, fn_sub, fn_zero_on_diag, make_boolean, make_cyclic, make_product, validate
from gapkit.groups import MAX_ORDER, load_cayley_table, parse_group_spec

from conftest import PERM_IND, XOR

GROUPS = [make_cyclic(2), make_cyclic(3), make_cyclic(4), make_cyclic(5), make_boolean(2), make_boolean(3),
          make_product(make_cyclic(2), make_cyclic(3)), make_product(make_cyclic(3), make_cyclic(3))]


def test_cyclic_add():
    assert make_cyclic(3).add[1, 2] == 0


def test_boolean_add():
    assert make_boolean(2).add[1, 3] == 2
    g = make_boolean(3)
    a = np.arange(8)
    assert np.array_equal(g.add, a[:, None] ^ a[None, :])


def test_boolean_flag():
    assert not make_cyclic(4).boolean
    assert make_boolean(3).boolean
    assert make_cyclic(2).boolean
    assert not make_product(make_cyclic(2), make_cyclic(4)).boolean


@pytest.mark.parametrize("g", GROUPS, ids=repr)
def test_constructed_groups_validate(g):
    assert validate(g) == (True, None)
    assert g.boolean == all(g.add[x, x] == 0 for x in range(g.order))
    assert all(g.add[x, g.neg[x]] == 0 for x in range(g.order))


def test_invalid_tables():
    ok, why = validate(AbelianGroup([[0, 0], [1, 1]]))
    assert not ok and why in ("identity", "commutativity")
    ok, why = validate(AbelianGroup([[0, 1, 2], [1, 0, 0], [2, 0, 1]]))
    assert not ok
    with pytest.raises(GroupError):
        AbelianGroup.from_table([[0, 1], [1, 1]])


def test_non_associative_loop_rejected():
    # a commutative loop of order 5 with identity 0 that is not a group
    t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 3, 4, 0, 1], [3, 4, 0, 1, 2], [4, 2, 1, 2, 0]]
    ok, why = validate(AbelianGroup(t))
    assert not ok


def test_order_bound():
    with pytest.raises(GroupError):
        make_cyclic(MAX_ORDER + 1)
    with pytest.raises(GroupError):
        make_cyclic(0)


def test_specs(tmp_path):
    assert parse_group_spec("cyclic:3") == make_cyclic(3)
    assert parse_group_spec("cyclic:2x2") == make_boolean(2)
    assert parse_group_spec("boolean:2").boolean
    path = tmp_path / "z3.txt"
    path.write_text("3\n0 1 2\n1 2 0\n2 0 1\n")
    assert parse_group_spec(f"table:{path}") == make_cyclic(3)
    assert load_cayley_table(path).order == 3
    for bad in ("cyclic:x", "boolean:q", "dihedral:4"):
        with pytest.raises(GroupError):
            parse_group_spec(bad)
    path.write_text("2\n0 1\n1 1\n")
    with pytest.raises(GroupError):
        parse_group_spec(f"table:{path}")


def test_fn_arith_examples():
    z2 = make_cyclic(2)
    assert fn_add(XOR, XOR, z2) == FnTable.constant(2, 2, 2, 0)
    f = FnTable(3, 3, 2, [0, 1, 2, 2, 1, 0, 1, 1, 1])
    assert fn_sub(f, f, make_cyclic(3)) == FnTable.constant(3, 3, 2, 0)
    assert fn_zero_on_diag(PERM_IND, z2)
    assert not fn_zero_on_diag(XOR.__class__(2, 2, 2, [1, 0, 0, 0]))


def test_fn_arith_mismatch():
    with pytest.raises(ValueError):
        fn_add(XOR, XOR, make_cyclic(3))
    with pytest.raises(ValueError):
        fn_add(XOR, FnTable(2, 2, 1, [0, 1]), make_cyclic(2))


@settings(max_examples=60)
@given(st.sampled_from(GROUPS), st.integers(2, 3), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_pointwise_laws(g, k, n, seed):
    rng = np.random.default_rng(seed)
    f1, f2, f3 = (FnTable(k, g.order, n, rng.integers(0, g.order, k**n)) for _ in range(3))
    assert fn_add(f1, f2, g) == fn_add(f2, f1, g)
    assert fn_add(fn_add(f1, f2, g), f3, g) == fn_add(f1, fn_add(f2, f3, g), g)
    assert fn_sub(fn_add(f1, f2, g), f2, g) == f1

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crimefca import Implication, close_attributes, holds, independent
from crimefca.errors import ContextMismatch

from oracles import common_objects
from strategies import contexts


def scan_holds(ctx, premise, conclusion):
    """Object-by-object check that shares nothing with the bitset path."""
    return common_objects(ctx, premise) <= common_objects(ctx, conclusion)


def imp(ctx, x, y):
    return Implication.from_names(ctx, x, y)


@pytest.mark.parametrize("premise, conclusion, expected", [
    (["c2"], ["m"], True),
    (["c3"], ["c1"], False),
    (["c1", "g1"], ["m"], True),
    (["a"], ["m"], False),
    (["c"], ["c1", "c2", "g1", "m"], True),
])
def test_table1_implications(table1, premise, conclusion, expected):
    assert holds(table1, imp(table1, premise, conclusion)) is expected
    assert scan_holds(table1, premise, conclusion) is expected


def test_trivial_implications(table1):
    for x in (["a"], ["c1", "g3"], []):
        assert holds(table1, imp(table1, x, []))
        assert holds(table1, imp(table1, x, x))


@pytest.mark.parametrize("attrs, expected", [
    (["c2", "m"], False),
    (["c1", "c4"], True),
    (["g1"], True),
    ([], True),
    # no object has both a and b, so {a, b} -> {c} holds vacuously
    (["a", "b", "c"], False),
    (["a", "b"], True),
    (["c", "c1"], False),
])
def test_independence(table1, attrs, expected):
    assert independent(table1, table1.attribute_set(attrs)) is expected


def test_context_mismatch(table1, table2):
    with pytest.raises(ContextMismatch):
        holds(table1, imp(table2, ["a"], ["e"]))
    with pytest.raises(ContextMismatch):
        Implication(table1.attribute_set(["a"]), table2.attribute_set(["a"]))
    with pytest.raises(ContextMismatch):
        independent(table2, table1.attribute_set(["a"]))


def test_str(table1):
    assert str(imp(table1, ["c2"], ["m"])) == "{c2} -> {m}"


def _attrs(ctx, data):
    if not ctx.attributes:
        return []
    return data.draw(st.lists(st.sampled_from(ctx.attributes), unique=True))


@settings(max_examples=150, deadline=None)
@given(ctx=contexts(max_objects=8, max_attributes=8), data=st.data())
def test_holds_equals_closure_membership(ctx, data):
    x, y = _attrs(ctx, data), _attrs(ctx, data)
    expected = ctx.attribute_set(y) <= close_attributes(ctx, ctx.attribute_set(x))
    assert holds(ctx, imp(ctx, x, y)) is expected
    assert scan_holds(ctx, x, y) is expected


@settings(max_examples=150, deadline=None)
@given(ctx=contexts(max_objects=8, max_attributes=8), data=st.data())
def test_armstrong_rules(ctx, data):
    x, y, z = _attrs(ctx, data), _attrs(ctx, data), _attrs(ctx, data)
    # reflexivity
    for k in range(len(x) + 1):
        assert holds(ctx, imp(ctx, x, x[:k]))
    # pseudo-transitivity
    if holds(ctx, imp(ctx, x, y)) and holds(ctx, imp(ctx, sorted(set(x) | set(y)), z)):
        assert holds(ctx, imp(ctx, x, sorted(set(y) | set(z))))
    # augmentation of the premise
    if holds(ctx, imp(ctx, x, y)):
        assert holds(ctx, imp(ctx, sorted(set(x) | set(z)), y))


@settings(max_examples=150, deadline=None)
@given(ctx=contexts(max_objects=8, max_attributes=8), data=st.data())
def test_subsets_of_independent_sets(ctx, data):
    x = _attrs(ctx, data)
    if independent(ctx, ctx.attribute_set(x)):
        for k in range(len(x)):
            assert independent(ctx, ctx.attribute_set(x[:k] + x[k + 1:]))

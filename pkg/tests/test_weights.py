from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from affsieve.cartan import affine_type, datum, supported_types
from affsieve.formulas import m_count
from affsieve.weights import (check_weight, classes, count_mx_oracle, distinguished_representatives,
                              enumerate_level, equivalence_class, format_weight, halved_evaluation, iota,
                              partition_to_weight, representative, s_evaluation, weight_to_partition)

A2, A3 = affine_type("A1", 2), affine_type("A1", 3)
TYPES_8 = supported_types(8, 7)


def brute_level_set(t, level):
    """Independent enumeration over a bounding box, sorted afterwards."""
    c = datum(t).comarks
    return sorted(m for m in product(*(range(level // a + 1) for a in c))
                  if sum(a * x for a, x in zip(c, m)) == level)


def test_enumerate_a3_level_two():
    got = enumerate_level(A3, 2)
    assert len(got) == 10
    assert {format_weight(m) for m in got} == {
        "2L0", "2L1", "2L2", "2L3", "L0+L1", "L0+L2", "L0+L3", "L1+L2", "L1+L3", "L2+L3"}


E6_LEVEL3 = {
    "3L0", "L0+L2", "L4", "2L0+L1", "L0+L3", "2L0+L6", "L0+L5", "L0+2L1", "L1+L2", "L0+L1+L6", "L1+L3",
    "L0+2L6", "L1+L5", "3L1", "L2+L6", "2L1+L6", "L3+L6", "L1+2L6", "L5+L6", "3L6",
}


def test_enumerate_e6_level_three():
    got = enumerate_level(affine_type("E6_1"), 3)
    assert len(got) == 20 and {format_weight(m) for m in got} == E6_LEVEL3


@pytest.mark.parametrize("t", supported_types(5), ids=str)
def test_level_zero_is_single_zero_weight(t):
    assert enumerate_level(t, 0) == [(0,) * (t.rank + 1)]


@pytest.mark.parametrize("t", supported_types(6, 5), ids=str)
@pytest.mark.parametrize("level", [1, 3, 6])
def test_enumeration_is_lexicographic_and_complete(t, level):
    got = enumerate_level(t, level)
    assert got == brute_level_set(t, level)
    assert len(got) == m_count(datum(t).comarks, level)


def test_s_evaluation_examples():
    for n in range(1, 6):
        t = affine_type("A1", n)
        for i in range(n + 1):
            assert s_evaluation(t, representative(t, 4, i)) == (i,)
    for n in (3, 5):
        b = affine_type("B1", n)
        assert s_evaluation(b, representative(b, 3, n)) == (1,)
    assert s_evaluation(A3, (0, 1, 0, 1)) == (4,)


def test_halved_evaluation_only_for_bicyclic():
    d4 = affine_type("D1", 4)
    assert halved_evaluation(d4, (0, 0, 0, 1, 1)) == (2, 1)
    with pytest.raises(ValueError):
        halved_evaluation(affine_type("D1", 5), (0,) * 6)


def test_distinguished_representatives():
    assert distinguished_representatives(A3, 2) == [(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1)]
    e6 = distinguished_representatives(affine_type("E6_1"), 4)
    assert [m.index(1) if m[0] == 3 else 0 for m in e6] == [0, 1, 6]
    assert distinguished_representatives(affine_type("F4_1"), 5) == [(5, 0, 0, 0, 0)]
    assert distinguished_representatives(A3, 0) == [(0, 0, 0, 0)]


def test_equivalence_class_examples():
    assert equivalence_class(A3, 2, (2, 0, 0, 0)) == [(0, 0, 2, 0), (0, 1, 0, 1), (2, 0, 0, 0)]
    assert len(equivalence_class(A3, 2, (1, 1, 0, 0))) == 2
    g2 = affine_type("G2_1")
    assert equivalence_class(g2, 5, (5, 0, 0)) == enumerate_level(g2, 5)


def test_oracle_examples():
    assert count_mx_oracle(A2, (2, 1, 0)) == 3
    assert count_mx_oracle(A3, (3, 0, 0, 0)) == 5
    for t in supported_types(5):
        assert count_mx_oracle(t, (0,) * (t.rank + 1)) == 1


def test_lifted_class_matches_example():
    # the three finite parts (1,0), (0,2), (2,1) lift to the class of 2L0+L1
    lifted = sorted(iota(A2, 3, x) for x in [(1, 0), (0, 2), (2, 1)])
    assert lifted == equivalence_class(A2, 3, (2, 1, 0))


def test_iota():
    assert iota(A2, 3, (1, 0)) == (2, 1, 0)
    assert iota(A2, 3, (2, 1)) == (0, 2, 1)
    assert iota(affine_type("E8_1"), 4, (0,) * 8) == (4,) + (0,) * 8
    with pytest.raises(ValueError, match="exceeding"):
        iota(A2, 2, (2, 1))


def test_check_weight_errors():
    with pytest.raises(ValueError):
        check_weight(A2, (1, 1))
    with pytest.raises(ValueError):
        check_weight(A2, (1, -1, 0))
    with pytest.raises(ValueError):
        check_weight(A2, (1, 1, 0), level=3)


@pytest.mark.parametrize("t", TYPES_8, ids=str)
def test_classes_partition_level_set(t):
    for level in range(0, 9):
        parts = classes(t, level)
        members = [m for ms in parts.values() for m in ms]
        assert sorted(members) == enumerate_level(t, level)
        assert len(set(members)) == len(members)
        assert all(ms for ms in parts.values())


@pytest.mark.parametrize("t", supported_types(6, 5), ids=str)
def test_class_size_equals_oracle(t):
    for level in range(1, 7):
        for rep in distinguished_representatives(t, level):
            assert len(equivalence_class(t, level, rep)) == count_mx_oracle(t, rep)


def test_partition_codec_examples():
    assert weight_to_partition(A3, (2, 0, 0, 0)) == ()
    assert weight_to_partition(A3, (0, 1, 0, 1)) == (2, 1, 1)
    for n, level in [(3, 2), (4, 5)]:
        t = affine_type("A1", n)
        m = (0,) * n + (level,)
        assert weight_to_partition(t, m) == (level,) * n
    with pytest.raises(NotImplementedError):
        weight_to_partition(affine_type("B1", 3), (1, 0, 0, 0))
    with pytest.raises(ValueError):
        partition_to_weight(A3, 2, (3,))


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("level", range(0, 7))
def test_partition_codec_roundtrip(n, level):
    t = affine_type("A1", n)
    seen = set()
    for m in enumerate_level(t, level):
        lam = weight_to_partition(t, m)
        assert sum(lam) == s_evaluation(t, m)[0]
        assert len(lam) <= n and all(p <= level for p in lam)
        assert partition_to_weight(t, level, lam) == m
        seen.add(lam)
    assert len(seen) == len(enumerate_level(t, level))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(supported_types(7, 6)), st.integers(0, 6), st.data())
def test_class_key_is_invariant_under_root_shifts(t, level, data):
    """Weights in one class have the same class as any other member."""
    ms = enumerate_level(t, level)
    m = data.draw(st.sampled_from(ms))
    cls = equivalence_class(t, level, m)
    other = data.draw(st.sampled_from(cls))
    assert equivalence_class(t, level, other) == cls

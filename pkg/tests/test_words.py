import pytest
from hypothesis import given, settings, strategies as st

from affsieve.formulas import m_count_direct
from affsieve.words import (MarkedWord, TupleDescriptor, decode, encode, enumerate_tuples, is_member, orbit_of,
                            orbits, rotate_first_chunk, sagan_power, sagan_step, str_to_word, word_to_str)

M4 = TupleDescriptor.single(4, 2, (1, 2))
M8 = TupleDescriptor.double(8, 2, 2, (1,), (1, 2))
M6 = TupleDescriptor.double(6, 2, 1, (1,), (1, 2))

M4_TUPLES = {
    (4, 0, 0, 0), (3, 1, 0, 0), (2, 2, 0, 0), (1, 3, 0, 0), (0, 4, 0, 0), (2, 0, 1, 0), (2, 0, 0, 1),
    (1, 1, 1, 0), (1, 1, 0, 1), (0, 2, 1, 0), (0, 2, 0, 1), (0, 0, 2, 0), (0, 0, 1, 1), (0, 0, 0, 2),
}
M4_WORDS = {
    (4, 0, 0, 0): "1111000", (3, 1, 0, 0): "1110100", (2, 2, 0, 0): "1101100", (1, 3, 0, 0): "1011100",
    (0, 4, 0, 0): "0111100", (2, 0, 1, 0): "110020", (2, 0, 0, 1): "110002", (1, 1, 1, 0): "101020",
    (1, 1, 0, 1): "101002", (0, 2, 1, 0): "011020", (0, 2, 0, 1): "011002", (0, 0, 2, 0): "00220",
    (0, 0, 1, 1): "00202", (0, 0, 0, 2): "00022",
}


def small_descriptors():
    singles = st.builds(TupleDescriptor.single, st.integers(0, 6), st.integers(1, 4),
                        st.lists(st.integers(1, 3), min_size=1, max_size=2))
    doubles = st.builds(TupleDescriptor.double, st.integers(0, 6), st.integers(1, 2), st.integers(1, 2),
                        st.lists(st.integers(1, 3), min_size=1, max_size=2),
                        st.lists(st.integers(1, 3), min_size=1, max_size=2))
    return st.one_of(singles, doubles).filter(lambda d: d.length <= 10)


def test_enumerate_example():
    got = enumerate_tuples(M4)
    assert len(got) == 14 and set(got) == M4_TUPLES
    assert got == sorted(got)
    assert (6, 0, 0, 0, 1, 1, 0, 0) in enumerate_tuples(M8)
    assert enumerate_tuples(TupleDescriptor.single(0, 3, (1, 2))) == [(0,) * 6]


def test_descriptor_properties():
    assert M8.order == 4 and M8.head_length == 4 and M8.length == 8
    assert M8.costs() == (1, 1, 1, 1, 1, 1, 2, 2)
    assert str(M4) == "M_4(2;(1,2))"
    assert str(M8) == "M_8(4,2;(1),(1,2))"
    with pytest.raises(ValueError):
        TupleDescriptor.single(3, 2, (0,))
    with pytest.raises(ValueError):
        TupleDescriptor(3, 2, (1,), r=2)


@pytest.mark.parametrize("m,word", sorted(M4_WORDS.items()))
def test_word_list(m, word):
    assert word_to_str(encode(m, M4)) == word
    assert decode(str_to_word(word), M4) == m


def test_marked_word_example():
    w = encode((1, 2, 1, 1), M6)
    assert isinstance(w, MarkedWord)
    assert str(w) == "1011[0]102"
    # the marked zero is the (k*r*d)-th zero, here the second
    assert M6.head_length == 2
    assert [i for i, x in enumerate(w.symbols) if x == 0][1] == w.marked
    assert decode(w, M6) == (1, 2, 1, 1)


def test_decode_failures():
    with pytest.raises(ValueError, match="symbol 2"):
        decode(str_to_word("110200"), M4)
    with pytest.raises(ValueError, match="zeros"):
        decode(str_to_word("11002"), M4)
    with pytest.raises(ValueError, match="zeros"):
        decode(str_to_word("1100200"), M4)
    with pytest.raises(ValueError, match="does not lie"):
        decode(str_to_word("1100"), TupleDescriptor.single(3, 3, (1,)))
    with pytest.raises(ValueError, match="marked zero"):
        decode(MarkedWord(str_to_word("10110102"), 1), M6)


def test_encode_rejects_non_members():
    with pytest.raises(ValueError):
        encode((1, 0, 0, 0), M4)


def test_sagan_step_examples():
    assert sagan_step((3, 1, 0, 0), M4) == (2, 2, 0, 0)
    assert sagan_step((1, 1, 1, 0), M4) == (0, 2, 1, 0)
    assert sagan_step((0, 0, 1, 1), M4) == (0, 0, 0, 2)
    assert sagan_step((6, 0, 0, 0, 1, 1, 0, 0), M8) == (4, 2, 0, 0, 1, 1, 0, 0)
    assert sagan_step((4, 0, 0, 0, 1, 1, 1, 0), M8) == (4, 0, 0, 0, 0, 2, 1, 0)


def test_rotate_first_chunk_tail_untouched():
    assert rotate_first_chunk((1, 1, 1, 1, 1, 1, 0, 0, 0), 4) == (1, 1, 1, 1, 0, 1, 1, 0, 0)
    assert rotate_first_chunk((0, 0, 1), 2) == (0, 0, 1)


def test_orbits_of_level_two_words():
    w32 = TupleDescriptor.single(2, 4, (1,))
    as_words = lambda orb: {word_to_str(encode(m, w32)) for m in orb}  # noqa: E731
    assert as_words(orbit_of(decode(str_to_word("11000"), w32), w32)) == {"11000", "01100", "00110", "10010"}
    assert as_words(orbit_of(decode(str_to_word("10100"), w32), w32)) == {"10100", "01010"}
    assert sorted(len(o) for o in orbits(w32)) == [2, 4, 4]
    assert orbit_of((0, 0, 0, 0), TupleDescriptor.single(0, 4, (1,))) == [(0, 0, 0, 0)]


def test_same_set_different_actions():
    k = 1
    c4 = TupleDescriptor.double(4, 2, 2, (1,), (2,) * k)
    c2 = TupleDescriptor.double(4, 2, 1, (1, 1), (2,) * (2 * k))
    assert enumerate_tuples(c4) == enumerate_tuples(c2)
    m = (0, 0, 2, 2, 0, 0)
    assert orbit_of(m, c4) == [(0, 0, 2, 2, 0, 0), (1, 0, 1, 2, 0, 0), (2, 0, 0, 2, 0, 0), (0, 2, 0, 2, 0, 0)]
    assert orbit_of(m, c2) == [(0, 0, 2, 2, 0, 0), (0, 0, 3, 1, 0, 0)]
    assert sagan_power(m, c4, 2) != sagan_step(m, c2)


@settings(max_examples=120, deadline=None)
@given(small_descriptors())
def test_codec_bijection(desc):
    members = enumerate_tuples(desc)
    assert len(members) == m_count_direct(desc.costs(), desc.level)
    words = set()
    for m in members:
        w = encode(m, desc)
        symbols = w.symbols if isinstance(w, MarkedWord) else w
        assert sum(1 for x in symbols if x == 0) == desc.length - 1
        assert decode(w, desc) == m
        words.add(symbols)
    assert len(words) == len(members)


@settings(max_examples=120, deadline=None)
@given(small_descriptors())
def test_group_action_laws(desc):
    members = enumerate_tuples(desc)
    for m in members:
        step = sagan_step(m, desc)
        assert is_member(step, desc)
        assert sagan_power(m, desc, desc.order) == m
    covered = [m for orb in orbits(desc) for m in orb]
    assert sorted(covered) == members
    assert all(desc.order % len(orb) == 0 for orb in orbits(desc))


@pytest.mark.parametrize("d", [1, 2, 3, 5])
@pytest.mark.parametrize("level", range(0, 9))
def test_single_block_action_exhaustive(d, level):
    desc = TupleDescriptor.single(level, d, (1, 2))
    for m in enumerate_tuples(desc):
        assert sagan_power(m, desc, d) == m

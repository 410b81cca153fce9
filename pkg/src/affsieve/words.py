"""Tuple sets weighted by block sums, with a word encoding and Sagan-style cyclic actions.

A single descriptor ``(d, nu)`` describes tuples of length ``k*d`` whose
coordinates in block ``j`` (positions ``j*d .. j*d+d-1``) cost ``nu[j]``.  A
double descriptor ``(r, d, nu, nu2)`` glues a single set with block length
``r*d`` in front of a single set with block length ``d``.

A tuple is encoded as a word by writing ``m_i`` copies of the cost of
coordinate ``i`` and separating consecutive coordinates by a zero.  The
generator of the cyclic group rotates the first non-constant length-``d``
chunk of the word one step to the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .weights import bounded_tuples

Word = tuple[int, ...]


@dataclass(frozen=True)
class TupleDescriptor:
    level: int
    d: int
    nu: tuple[int, ...]
    r: int | None = None
    nu2: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "nu", tuple(self.nu))
        if self.nu2 is not None:
            object.__setattr__(self, "nu2", tuple(self.nu2))
        if (self.r is None) != (self.nu2 is None):
            raise ValueError("a double descriptor needs both r and nu2")
        if self.level < 0 or self.d < 1 or not self.nu or any(v < 1 for v in self.nu):
            raise ValueError(f"invalid descriptor {self}")
        if self.is_double and (self.r < 1 or not self.nu2 or any(v < 1 for v in self.nu2)):
            raise ValueError(f"invalid descriptor {self}")

    @classmethod
    def single(cls, level: int, d: int, nu: Sequence[int]) -> "TupleDescriptor":
        return cls(level, d, tuple(nu))

    @classmethod
    def double(cls, level: int, r: int, d: int, nu: Sequence[int], nu2: Sequence[int]) -> "TupleDescriptor":
        return cls(level, d, tuple(nu), r, tuple(nu2))

    @property
    def is_double(self) -> bool:
        return self.r is not None

    @property
    def order(self) -> int:
        """Order of the cyclic group acting on the set."""
        return self.r * self.d if self.is_double else self.d

    @property
    def head_length(self) -> int:
        return len(self.nu) * self.order

    @property
    def length(self) -> int:
        if self.is_double:
            return self.head_length + len(self.nu2) * self.d
        return len(self.nu) * self.d

    def costs(self) -> tuple[int, ...]:
        head = tuple(v for v in self.nu for _ in range(self.order))
        if not self.is_double:
            return head
        return head + tuple(v for v in self.nu2 for _ in range(self.d))

    def __str__(self) -> str:
        nu = ",".join(map(str, self.nu))
        if self.is_double:
            nu2 = ",".join(map(str, self.nu2))
            return f"M_{self.level}({self.order},{self.d};({nu}),({nu2}))"
        return f"M_{self.level}({self.d};({nu}))"


def enumerate_tuples(desc: TupleDescriptor) -> list[tuple[int, ...]]:
    return list(bounded_tuples(desc.costs(), desc.level, exact=True))


def is_member(m: Sequence[int], desc: TupleDescriptor) -> bool:
    return (len(m) == desc.length and all(isinstance(x, int) and x >= 0 for x in m)
            and sum(c * x for c, x in zip(desc.costs(), m)) == desc.level)


def _encode_block(m: Sequence[int], d: int, nu: Sequence[int]) -> Word:
    out = []
    last = len(nu) * d - 1
    for i, x in enumerate(m):
        out.extend([nu[i // d]] * x)
        if i != last:
            out.append(0)
    return tuple(out)


def _decode_block(w: Sequence[int], d: int, nu: Sequence[int]) -> tuple[int, ...]:
    slots = len(nu) * d
    zeros = sum(1 for x in w if x == 0)
    if zeros != slots - 1:
        raise ValueError(f"word has {zeros} zeros, expected {slots - 1}")
    gaps, cur = [], []
    for pos, x in enumerate(w):
        if x == 0:
            gaps.append(cur)
            cur = []
        else:
            cur.append((pos, x))
    gaps.append(cur)
    for i, gap in enumerate(gaps):
        want = nu[i // d]
        for pos, x in gap:
            if x != want:
                raise ValueError(f"symbol {x} at position {pos} sits in slot {i}, which only admits {want}")
    return tuple(len(g) for g in gaps)


@dataclass(frozen=True)
class MarkedWord:
    """Word of a double descriptor; ``marked`` is the index of the separating zero."""

    symbols: Word
    marked: int

    def __str__(self) -> str:
        s = "".join(map(str, self.symbols))
        return s[:self.marked] + "[0]" + s[self.marked + 1:]


def encode(m: Sequence[int], desc: TupleDescriptor):
    m = tuple(m)
    if not is_member(m, desc):
        raise ValueError(f"{m} is not a member of {desc}")
    if not desc.is_double:
        return _encode_block(m, desc.d, desc.nu)
    head = _encode_block(m[:desc.head_length], desc.order, desc.nu)
    tail = _encode_block(m[desc.head_length:], desc.d, desc.nu2)
    return MarkedWord(head + (0,) + tail, len(head))


def decode(w, desc: TupleDescriptor) -> tuple[int, ...]:
    if desc.is_double:
        symbols = w.symbols if isinstance(w, MarkedWord) else tuple(w)
        head_zeros = desc.head_length
        seen = 0
        cut = None
        for pos, x in enumerate(symbols):
            if x == 0:
                seen += 1
                if seen == head_zeros:
                    cut = pos
                    break
        if cut is None:
            raise ValueError(f"word has fewer than {head_zeros} zeros")
        if isinstance(w, MarkedWord) and w.marked != cut:
            raise ValueError(f"marked zero at {w.marked} is not the {head_zeros}-th zero")
        m = (_decode_block(symbols[:cut], desc.order, desc.nu)
             + _decode_block(symbols[cut + 1:], desc.d, desc.nu2))
    else:
        m = _decode_block(tuple(w), desc.d, desc.nu)
    if not is_member(m, desc):
        raise ValueError(f"decoded tuple {m} does not lie in {desc}")
    return m


def rotate_first_chunk(w: Sequence[int], size: int) -> Word:
    """Rotate right the first non-constant chunk of length ``size``; the short tail never moves."""
    w = tuple(w)
    for start in range(0, len(w) - size + 1, size):
        chunk = w[start:start + size]
        if any(x != chunk[0] for x in chunk):
            return w[:start] + (chunk[-1],) + chunk[:-1] + w[start + size:]
    return w


def _single_step(m: Sequence[int], d: int, nu: Sequence[int]) -> tuple[int, ...]:
    return _decode_block(rotate_first_chunk(_encode_block(m, d, nu), d), d, nu)


def sagan_step(m: Sequence[int], desc: TupleDescriptor) -> tuple[int, ...]:
    """Apply the generator of the cyclic group to a member tuple."""
    m = tuple(m)
    if not is_member(m, desc):
        raise ValueError(f"{m} is not a member of {desc}")
    if not desc.is_double:
        return _single_step(m, desc.d, desc.nu)
    head, tail = m[:desc.head_length], m[desc.head_length:]
    moved = _single_step(head, desc.order, desc.nu)
    if moved != head:
        return moved + tail
    return head + _single_step(tail, desc.d, desc.nu2)


def sagan_power(m: Sequence[int], desc: TupleDescriptor, j: int) -> tuple[int, ...]:
    m = tuple(m)
    for _ in range(j % desc.order):
        m = sagan_step(m, desc)
    return m


def orbit_of(m: Sequence[int], desc: TupleDescriptor) -> list[tuple[int, ...]]:
    start = tuple(m)
    orbit = [start]
    cur = sagan_step(start, desc)
    while cur != start:
        orbit.append(cur)
        if len(orbit) > desc.order:
            raise AssertionError(f"orbit of {start} exceeds the group order {desc.order}")
        cur = sagan_step(cur, desc)
    return orbit


def orbits(desc: TupleDescriptor) -> list[list[tuple[int, ...]]]:
    seen = set()
    out = []
    for m in enumerate_tuples(desc):
        if m in seen:
            continue
        orb = orbit_of(m, desc)
        seen.update(orb)
        out.append(orb)
    return out


def word_to_str(w) -> str:
    if isinstance(w, MarkedWord):
        return str(w)
    return "".join(map(str, w))


def str_to_word(s: str) -> Word:
    return tuple(int(c) for c in s if c.isdigit())

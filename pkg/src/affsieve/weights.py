"""Level-l dominant weights with their sieving classes, plus a lattice-point oracle.

Weights are plain coefficient tuples ``(m_0, ..., m_n)``; the owning type
supplies the comarks that define the level.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .cartan import AffineType, datum, dot, in_root_lattice

Weight = tuple[int, ...]


def level_of(t: AffineType, m: Sequence[int]) -> int:
    return dot(datum(t).comarks, m)


def check_weight(t: AffineType, m: Sequence[int], level: int | None = None) -> Weight:
    m = tuple(int(x) for x in m)
    if len(m) != t.rank + 1:
        raise ValueError(f"weight {m} has {len(m)} coefficients, expected {t.rank + 1}")
    if any(x < 0 for x in m):
        raise ValueError(f"weight {m} has a negative coefficient")
    if level is not None and level_of(t, m) != level:
        raise ValueError(f"weight {m} has level {level_of(t, m)}, expected {level}")
    return m


def bounded_tuples(costs: Sequence[int], budget: int, exact: bool) -> Iterator[tuple[int, ...]]:
    """Nonnegative tuples with ``sum(c*x) == budget`` (or ``<=`` when not exact), lexicographic."""
    size = len(costs)
    if size == 0:
        if budget == 0 or not exact:
            yield ()
        return
    out = [0] * size

    def rec(i, left):
        if i == size - 1:
            c = costs[i]
            if exact:
                if left % c == 0:
                    out[i] = left // c
                    yield tuple(out)
            else:
                for x in range(left // c + 1):
                    out[i] = x
                    yield tuple(out)
            return
        for x in range(left // costs[i] + 1):
            out[i] = x
            yield from rec(i + 1, left - x * costs[i])

    yield from rec(0, budget)


def enumerate_level(t: AffineType, level: int) -> list[Weight]:
    """All dominant weights of the given level, lexicographic in ``(m_0..m_n)``."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    return list(bounded_tuples(datum(t).comarks, level, exact=True))


def s_evaluation(t: AffineType, m: Sequence[int]) -> tuple[int, ...]:
    return tuple(dot(s, m) for s in datum(t).extended_sieving_set)


def halved_evaluation(t: AffineType, m: Sequence[int]) -> tuple[int, ...]:
    """For D1 with even rank: the pair of evaluations by half the sieving vectors."""
    if not is_bicyclic(t):
        raise ValueError("halved evaluation is only defined for D1 with even rank")
    return tuple(v // 2 for v in s_evaluation(t, m))


def is_bicyclic(t: AffineType) -> bool:
    return t.family == "D1" and t.rank % 2 == 0


def class_key(t: AffineType, m: Sequence[int]) -> tuple[int, ...]:
    """Residues that label the sieving class of ``m``.

    D1 with even rank uses the halved pair mod 2, which carries the same
    information as the pair mod 4 because every sieving entry is even.
    """
    if is_bicyclic(t):
        return tuple(v % 2 for v in halved_evaluation(t, m))
    big_n = datum(t).group_order
    return tuple(v % big_n for v in s_evaluation(t, m))


def distinguished_representatives(t: AffineType, level: int) -> list[Weight]:
    n = t.rank
    if level == 0:
        return [(0,) * (n + 1)]
    reps = []
    for i in datum(t).dr_indices:
        m = [0] * (n + 1)
        m[0] = level - 1
        m[i] += 1
        reps.append(tuple(m))
    return reps


def representative(t: AffineType, level: int, index: int) -> Weight:
    d = datum(t)
    if index not in d.dr_indices:
        raise ValueError(f"index {index} is not distinguished for {t}; valid indices are {list(d.dr_indices)}")
    if level == 0:
        if index != 0:
            raise ValueError("at level 0 only index 0 is available")
        return (0,) * (t.rank + 1)
    return distinguished_representatives(t, level)[d.dr_indices.index(index)]


def equivalence_class(t: AffineType, level: int, rep: Sequence[int]) -> list[Weight]:
    rep = check_weight(t, rep, level)
    key = class_key(t, rep)
    return [m for m in enumerate_level(t, level) if class_key(t, m) == key]


def classes(t: AffineType, level: int) -> dict[Weight, list[Weight]]:
    """Partition of the level set keyed by distinguished representative."""
    reps = distinguished_representatives(t, level)
    by_key = {class_key(t, r): r for r in reps}
    out = {r: [] for r in reps}
    for m in enumerate_level(t, level):
        out[by_key[class_key(t, m)]].append(m)
    return out


def iota(t: AffineType, level: int, finite_part: Sequence[int]) -> Weight:
    """Lift ``(m_1..m_n)`` to the level-l weight with ``m_0`` completed."""
    d = datum(t)
    finite_part = tuple(finite_part)
    if len(finite_part) != t.rank:
        raise ValueError(f"finite part must have {t.rank} entries")
    used = dot(d.comarks[1:], finite_part)
    if used > level:
        raise ValueError(f"finite part has level {used}, exceeding {level} by {used - level}")
    if (level - used) % d.comarks[0]:
        raise ValueError(f"level deficit {level - used} is not a multiple of the comark {d.comarks[0]}")
    return ((level - used) // d.comarks[0],) + finite_part


def alcove_points(t: AffineType, level: int) -> Iterator[tuple[int, ...]]:
    """Finite parts ``(m_1..m_n)`` with ``sum a_i^v m_i <= level``."""
    return bounded_tuples(datum(t).comarks[1:], level, exact=False)


def count_mx_oracle(t: AffineType, m: Sequence[int]) -> int:
    """Count of dominant maximal weights of the module with highest weight ``m``, by brute force.

    Two routes: exact rational membership of ``x - p`` in the projected root
    lattice, and the sieving congruence.  They must agree.
    """
    d = datum(t)
    m = check_weight(t, m)
    level = level_of(t, m)
    p = m[1:]
    big_n = d.group_order
    svecs = d.sieving_set
    p_ev = [dot(s, p) for s in svecs]

    rational = congruence = 0
    if d.marks[0] == 1:
        # root lattice membership of x - p reduces to adj * x == adj * p mod det
        det = d.det
        target = tuple(dot(row, p) % det for row in d.adj)
        for x in alcove_points(t, level):
            if tuple(dot(row, x) % det for row in d.adj) == target:
                rational += 1
            if all((dot(s, x) - e) % big_n == 0 for s, e in zip(svecs, p_ev)):
                congruence += 1
    else:
        for x in alcove_points(t, level):
            if in_root_lattice(t, tuple(a - b for a, b in zip(x, p))):
                rational += 1
            if all((dot(s, x) - e) % big_n == 0 for s, e in zip(svecs, p_ev)):
                congruence += 1
    if rational != congruence:
        raise AssertionError(f"oracle routes disagree for {t} at {m}: {rational} vs {congruence}")
    return rational


# ---------------------------------------------------------------------------
# A-type weights and partitions in a box

def _require_a(t: AffineType) -> None:
    if t.family != "A1":
        raise NotImplementedError(f"the partition codec only exists for A1, not {t.family}")


def weight_to_partition(t: AffineType, m: Sequence[int]) -> tuple[int, ...]:
    """Send ``sum m_i Lambda_i`` to a partition in the n x l box whose size is the evaluation."""
    _require_a(t)
    m = check_weight(t, m)
    n = t.rank
    columns = [i for i in range(n, 0, -1) for _ in range(m[i])]
    # conjugate of the partition with m_i parts equal to i
    return tuple(sum(1 for c in columns if c > r) for r in range(n) if any(c > r for c in columns))


def partition_to_weight(t: AffineType, level: int, partition: Sequence[int]) -> Weight:
    _require_a(t)
    n = t.rank
    parts = [p for p in partition if p > 0]
    if len(parts) > n or any(p > level for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{tuple(partition)} is not a partition inside the {n} x {level} box")
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])] if parts else []
    m = [0] * (n + 1)
    for c in conj:
        m[c] += 1
    m[0] = level - sum(m[1:])
    return tuple(m)


def format_weight(m: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(m):
        if c:
            terms.append(f"{'' if c == 1 else c}L{i}")
    return "+".join(terms) if terms else "0"

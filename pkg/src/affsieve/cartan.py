"""Cartan data for the affine families handled by the package.

Every family is described by its affine Cartan matrix in the convention
``a_ij = <h_i, alpha_j>`` with nodes labelled ``0..n``.  The finite Cartan
matrix is the block obtained by deleting node 0.  Marks and comarks are
hard-coded from Kac's tables and pinned by tests against the null vectors
of the affine matrix.

Labelling notes
---------------
* Exceptional simply-laced types use Bourbaki numbering; node 0 is attached
  to node 2 (E6), node 1 (E7) and node 8 (E8).
* ``A2_even`` (A_{2n}^{(2)}) follows Kac: ``0 <= 1 - ... - (n-1) <= n``,
  marks ``(2,2,...,2,1)`` and comarks ``(1,2,...,2)``.  This is the labelling
  in which ``l*Lambda_0`` has level ``l``.  Since ``a_0 = 2`` the projected
  root lattice is strictly larger than the finite root lattice and there is a
  single equivalence class at every level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]

FAMILIES = (
    "A1", "B1", "C1", "D1", "E6_1", "E7_1", "E8_1", "F4_1", "G2_1",
    "A2_even", "A2_odd", "D2", "E6_2", "D4_3",
)

MIN_RANK = {"A1": 1, "B1": 3, "C1": 2, "D1": 4, "A2_even": 1, "A2_odd": 3, "D2": 2}
FIXED_RANK = {"E6_1": 6, "E7_1": 7, "E8_1": 8, "F4_1": 4, "G2_1": 2, "E6_2": 4, "D4_3": 2}

# Conventional notation, for documentation and text reports.
NOTATION = {
    "A1": "A_{n}^{(1)}", "B1": "B_{n}^{(1)}", "C1": "C_{n}^{(1)}", "D1": "D_{n}^{(1)}",
    "E6_1": "E_6^{(1)}", "E7_1": "E_7^{(1)}", "E8_1": "E_8^{(1)}", "F4_1": "F_4^{(1)}",
    "G2_1": "G_2^{(1)}", "A2_even": "A_{2n}^{(2)}", "A2_odd": "A_{2n-1}^{(2)}",
    "D2": "D_{n+1}^{(2)}", "E6_2": "E_6^{(2)}", "D4_3": "D_4^{(3)}",
}

_ALIASES = {
    "A2EVEN": "A2_even", "A2_EVEN": "A2_even", "A2ODD": "A2_odd", "A2_ODD": "A2_odd",
    "E6": "E6_1", "E7": "E7_1", "E8": "E8_1", "F4": "F4_1", "G2": "G2_1",
    "E6_1": "E6_1", "E7_1": "E7_1", "E8_1": "E8_1", "F4_1": "F4_1", "G2_1": "G2_1",
    "E6_2": "E6_2", "D4_3": "D4_3", "A1": "A1", "B1": "B1", "C1": "C1", "D1": "D1", "D2": "D2",
}


class RankError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class AffineType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.family in FIXED_RANK:
            if self.rank != FIXED_RANK[self.family]:
                raise RankError(f"{self.family} has fixed rank {FIXED_RANK[self.family]}, got {self.rank}")
        elif self.rank < MIN_RANK[self.family]:
            raise RankError(f"{self.family} requires rank n >= {MIN_RANK[self.family]}, got {self.rank}")

    @property
    def n(self) -> int:
        return self.rank

    def __str__(self) -> str:
        if self.family in FIXED_RANK:
            return self.family
        return f"{self.family}[{self.rank}]"


def affine_type(family: str, rank: int | None = None) -> AffineType:
    """Build an ``AffineType`` accepting CLI aliases such as ``A2even``."""
    fam = _ALIASES.get(family.upper() if family.upper() in _ALIASES else family, family)
    if fam in FIXED_RANK and rank is None:
        rank = FIXED_RANK[fam]
    if rank is None:
        raise RankError(f"family {fam} needs an explicit rank")
    return AffineType(fam, int(rank))


def supported_types(max_rank: int, max_rank_a: int | None = None) -> list[AffineType]:
    """All types with rank at most ``max_rank`` (``max_rank_a`` for A1)."""
    out = []
    for fam in FAMILIES:
        if fam in FIXED_RANK:
            if FIXED_RANK[fam] <= max_rank:
                out.append(AffineType(fam, FIXED_RANK[fam]))
            continue
        top = max_rank_a if (fam == "A1" and max_rank_a is not None) else max_rank
        out.extend(AffineType(fam, n) for n in range(MIN_RANK[fam], top + 1))
    return out


# ---------------------------------------------------------------------------
# affine Cartan matrices

def _blank(size: int) -> list[list[int]]:
    return [[2 if i == j else 0 for j in range(size)] for i in range(size)]


def _link(a: list[list[int]], i: int, j: int, aij: int = -1, aji: int = -1) -> None:
    a[i][j] = aij
    a[j][i] = aji


def _simply_laced_chain(a, nodes: Iterable[int]) -> None:
    nodes = list(nodes)
    for x, y in zip(nodes, nodes[1:]):
        _link(a, x, y)


def affine_cartan(t: AffineType) -> Matrix:
    n, fam = t.rank, t.family
    a = _blank(n + 1)
    if fam == "A1":
        if n == 1:
            _link(a, 0, 1, -2, -2)
        else:
            _simply_laced_chain(a, range(n + 1))
            _link(a, n, 0)
    elif fam == "B1":
        _simply_laced_chain(a, range(1, n))
        _link(a, n - 1, n, -1, -2)
        _link(a, 0, 2)
    elif fam == "C1":
        _simply_laced_chain(a, range(1, n))
        _link(a, n - 1, n, -2, -1)
        _link(a, 0, 1, -1, -2)
    elif fam == "D1":
        _simply_laced_chain(a, range(1, n - 1))
        _link(a, n - 2, n - 1)
        _link(a, n - 2, n)
        _link(a, 0, 2)
    elif fam in ("E6_1", "E7_1", "E8_1"):
        _simply_laced_chain(a, [1, 3] + list(range(4, n + 1)))
        _link(a, 2, 4)
        _link(a, 0, {"E6_1": 2, "E7_1": 1, "E8_1": 8}[fam])
    elif fam == "F4_1":
        _simply_laced_chain(a, [0, 1, 2])
        _link(a, 2, 3, -1, -2)
        _link(a, 3, 4)
    elif fam == "G2_1":
        _link(a, 0, 1)
        _link(a, 1, 2, -1, -3)
    elif fam == "A2_even":
        if n == 1:
            _link(a, 0, 1, -4, -1)
        else:
            _link(a, 0, 1, -2, -1)
            _simply_laced_chain(a, range(1, n))
            _link(a, n - 1, n, -2, -1)
    elif fam == "A2_odd":
        _simply_laced_chain(a, range(1, n))
        _link(a, n - 1, n, -2, -1)
        _link(a, 0, 2)
    elif fam == "D2":
        _link(a, 0, 1, -2, -1)
        _simply_laced_chain(a, range(1, n))
        _link(a, n - 1, n, -1, -2)
    elif fam == "E6_2":
        _simply_laced_chain(a, [0, 1, 2])
        _link(a, 2, 3, -2, -1)
        _link(a, 3, 4)
    elif fam == "D4_3":
        _link(a, 0, 1)
        _link(a, 1, 2, -3, -1)
    return tuple(tuple(row) for row in a)


def finite_cartan(t: AffineType) -> Matrix:
    return tuple(row[1:] for row in affine_cartan(t)[1:])


def _marks_comarks(t: AffineType) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n, fam = t.rank, t.family
    twos = (2,) * max(n - 3, 0)
    table = {
        "A1": ((1,) * (n + 1), (1,) * (n + 1)),
        "B1": ((1, 1) + (2,) * (n - 1), (1, 1) + (2,) * (n - 2) + (1,)),
        "C1": ((1,) + (2,) * (n - 1) + (1,), (1,) * (n + 1)),
        "D1": ((1, 1) + twos + (1, 1), (1, 1) + twos + (1, 1)),
        "E6_1": ((1, 1, 2, 2, 3, 2, 1),) * 2,
        "E7_1": ((1, 2, 2, 3, 4, 3, 2, 1),) * 2,
        "E8_1": ((1, 2, 3, 4, 6, 5, 4, 3, 2),) * 2,
        "F4_1": ((1, 2, 3, 4, 2), (1, 2, 3, 2, 1)),
        "G2_1": ((1, 2, 3), (1, 2, 1)),
        "A2_even": ((2,) * n + (1,), (1,) + (2,) * n),
        "A2_odd": ((1, 1) + (2,) * (n - 2) + (1,), (1, 1) + (2,) * (n - 1)),
        "D2": ((1,) * (n + 1), (1,) + (2,) * (n - 1) + (1,)),
        "E6_2": ((1, 2, 3, 2, 1), (1, 2, 3, 4, 2)),
        "D4_3": ((1, 2, 1), (1, 2, 3)),
    }
    return table[fam]


GROUP_ORDER_TWO = {"B1", "C1", "A2_odd", "D2", "E7_1"}


def group_order(t: AffineType) -> int:
    if t.family == "A1":
        return t.rank + 1
    if t.family == "D1":
        return 4
    if t.family == "E6_1":
        return 3
    return 2 if t.family in GROUP_ORDER_TWO else 1


def dr_indices(t: AffineType) -> tuple[int, ...]:
    n, fam = t.rank, t.family
    if fam == "A1":
        return tuple(range(n + 1))
    if fam in ("B1", "D2", "E7_1"):
        return (0, n)
    if fam in ("C1", "A2_odd"):
        return (0, 1)
    if fam == "D1":
        return (0, 1, n - 1, n)
    if fam == "E6_1":
        return (0, 1, 6)
    return (0,)


def adjugate_rows(t: AffineType) -> tuple[int, ...]:
    """1-based rows of adj(A) that generate the sieving set."""
    n, fam = t.rank, t.family
    if fam in ("A1", "E7_1", "C1", "A2_odd"):
        return (n,)
    if fam == "D1":
        return (n,) if n % 2 else (1, n)
    return (1,)


def convention_sieving_set(t: AffineType) -> tuple[tuple[int, ...], ...]:
    """The preferred sieving vectors ``(s_1..s_n)`` used by every statistic."""
    n, fam = t.rank, t.family
    if fam == "A1":
        return (tuple(range(1, n + 1)),)
    if fam == "E6_1":
        return ((1, 0, 2, 0, 1, 2),)
    if fam == "E7_1":
        return ((0, 1, 0, 0, 1, 0, 1),)
    if fam in ("B1", "D2"):
        return ((0,) * (n - 1) + (1,),)
    if fam in ("C1", "A2_odd"):
        return (tuple(j % 2 for j in range(1, n + 1)),)
    if fam == "D1":
        if n % 2:
            return (tuple(2 if j % 2 else 0 for j in range(1, n - 1)) + (1, 3),)
        return ((0,) * (n - 2) + (2, 2), tuple(2 if j % 2 else 0 for j in range(1, n + 1)))
    return ((0,) * n,)


@dataclass(frozen=True)
class CartanDatum:
    type: AffineType
    affine_cartan: Matrix
    finite_cartan: Matrix
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    group_order: int
    sieving_set: tuple[tuple[int, ...], ...]
    dr_indices: tuple[int, ...]
    adj: Matrix = field(repr=False)
    det: int = field(repr=False)

    @property
    def extended_sieving_set(self) -> tuple[tuple[int, ...], ...]:
        return tuple((0,) + s for s in self.sieving_set)


_DATUM_CACHE: dict[AffineType, CartanDatum] = {}


def datum(t: AffineType) -> CartanDatum:
    if t not in _DATUM_CACHE:
        fin = finite_cartan(t)
        adj, det = adjugate(fin)
        marks, comarks = _marks_comarks(t)
        _DATUM_CACHE[t] = CartanDatum(
            type=t, affine_cartan=affine_cartan(t), finite_cartan=fin,
            marks=marks, comarks=comarks, group_order=group_order(t),
            sieving_set=convention_sieving_set(t), dr_indices=dr_indices(t),
            adj=adj, det=det,
        )
    return _DATUM_CACHE[t]


# ---------------------------------------------------------------------------
# exact integer linear algebra

def determinant(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    a = [list(row) for row in m]
    size = len(a)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def adjugate(m: Sequence[Sequence[int]]) -> tuple[Matrix, int]:
    """Classical adjoint and determinant, so that ``m @ adj == det * I``."""
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("adjugate needs a square matrix")
    if size == 1:
        return ((1,),), int(m[0][0])
    adj = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            minor = [[m[r][c] for c in range(size) if c != i] for r in range(size) if r != j]
            adj[i][j] = (-1) ** (i + j) * determinant(minor)
    return tuple(map(tuple, adj)), determinant(m)


def mat_vec(m: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


# ---------------------------------------------------------------------------
# root lattice membership

def root_coordinates(t: AffineType, x: Sequence[int]) -> tuple[Fraction, ...]:
    """Coordinates in the simple-root basis of a weight given in the fundamental basis."""
    d = datum(t)
    return tuple(Fraction(c, d.det) for c in mat_vec(d.adj, x))


def in_root_lattice(t: AffineType, x: Sequence[int]) -> bool:
    """Membership in the projected root lattice spanned by the classical parts of all simple roots.

    For every family except ``A2_even`` this is the finite root lattice.  For
    ``A2_even`` the projection of ``alpha_0`` equals ``-theta/2`` and the lattice
    is all of the weight lattice.
    """
    d = datum(t)
    c = mat_vec(d.adj, x)
    a0, tail = d.marks[0], d.marks[1:]
    for k in range(a0):
        # x - k * bar(alpha_0) has integral root coordinates; bar(alpha_0) = -(1/a0) sum a_i alpha_i
        if all((ci * a0 + k * ai * d.det) % (a0 * d.det) == 0 for ci, ai in zip(c, tail)):
            return True
    return False


def _coset_key(t: AffineType, x: Sequence[int]) -> tuple:
    d = datum(t)
    c = root_coordinates(t, x)
    a0, tail = d.marks[0], d.marks[1:]
    keys = []
    for k in range(a0):
        shifted = tuple((ci + Fraction(k * ai, a0)) % 1 for ci, ai in zip(c, tail))
        keys.append(shifted)
    return min(keys)


def coset_representatives(t: AffineType) -> list[tuple[int, ...]]:
    """One weight per coset of the projected root lattice, found by closing under the fundamental weights."""
    n = t.rank
    zero = (0,) * n
    reps = {_coset_key(t, zero): zero}
    frontier = [zero]
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    while frontier:
        nxt = []
        for x in frontier:
            for e in units:
                y = tuple(a + b for a, b in zip(x, e))
                key = _coset_key(t, y)
                if key not in reps:
                    reps[key] = y
                    nxt.append(y)
        frontier = nxt
    return sorted(reps.values())


# ---------------------------------------------------------------------------
# sieving sets

def reduce_vector(v: Sequence[int], modulus: int) -> tuple[int, ...]:
    return tuple(x % modulus for x in v)


def derive_sieving_set(t: AffineType) -> tuple[tuple[int, ...], ...]:
    """Rows of the adjugate of the finite Cartan matrix, reduced mod N."""
    d = datum(t)
    return tuple(reduce_vector(d.adj[i - 1], d.group_order) for i in adjugate_rows(t))


def span_mod(vectors: Sequence[Sequence[int]], modulus: int) -> frozenset[tuple[int, ...]]:
    """The subgroup of (Z/N)^n generated by ``vectors``, by exhaustive coefficients."""
    if not vectors:
        return frozenset()
    length = len(vectors[0])
    out = set()
    for coeffs in product(range(modulus), repeat=len(vectors)):
        out.add(tuple(sum(c * v[i] for c, v in zip(coeffs, vectors)) % modulus for i in range(length)))
    return frozenset(out)


@dataclass
class SievingValidation:
    type: AffineType
    vectors: tuple[tuple[int, ...], ...]
    characterizes_root_lattice: bool
    independent: bool
    distinct: bool
    failures: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.characterizes_root_lattice and self.independent and self.distinct


def validate_sieving_set(t: AffineType, vectors: Iterable[Sequence[int]]) -> SievingValidation:
    d = datum(t)
    big_n = d.group_order
    vecs = tuple(tuple(v) for v in vectors)
    failures = []
    for v in vecs:
        if len(v) != t.rank:
            raise ValueError(f"sieving vector {v} has length {len(v)}, expected {t.rank}")

    def kills(x):
        return all(dot(s, x) % big_n == 0 for s in vecs)

    # (1) zero on every simple root, and on a coset representative exactly when it is a root
    cond1 = True
    for j in range(t.rank):
        col = tuple(d.finite_cartan[i][j] for i in range(t.rank))
        if not kills(col):
            cond1 = False
            failures.append(f"condition 1: a sieving vector is nonzero mod {big_n} on simple root alpha_{j + 1}")
            break
    if cond1:
        for x in coset_representatives(t):
            if kills(x) != in_root_lattice(t, x):
                cond1 = False
                failures.append(f"condition 1: weight {x} is misclassified (root lattice member: {in_root_lattice(t, x)})")
                break

    # (2) independence: a vanishing combination must vanish termwise
    reduced = [reduce_vector(v, big_n) for v in vecs]
    cond2 = True
    for coeffs in product(range(big_n), repeat=len(reduced)):
        terms = [tuple(c * x % big_n for x in v) for c, v in zip(coeffs, reduced)]
        total = tuple(sum(col) % big_n for col in zip(*terms)) if terms else ()
        if any(total) or all(not any(term) for term in terms):
            continue
        cond2 = False
        failures.append(f"condition 2: coefficients {coeffs} give a nontrivial relation mod {big_n}")
        break

    cond3 = len(set(reduced)) == len(vecs)
    if not cond3:
        failures.append("condition 3: two vectors coincide after reduction")
    return SievingValidation(t, vecs, cond1, cond2, cond3, failures)

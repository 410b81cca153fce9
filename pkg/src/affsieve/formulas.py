"""Closed counting formulae and recursive triangular arrays, plus level-rank dualities.

Counts refer to the number of dominant maximal weights of the module whose
highest weight is the distinguished representative ``(l-1)Lambda_0 + Lambda_i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Callable, Iterable, Sequence

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius, totient

from .cartan import AffineType, RankError, affine_type, datum


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``, with ``C(-1, -1) = 1``."""
    if a == -1 and b == -1:
        return 1
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


# ---------------------------------------------------------------------------
# weighted compositions

def nu(*pairs: tuple[int, int]) -> tuple[int, ...]:
    """Expand ``(value, multiplicity)`` pairs, e.g. ``nu((1, 3), (2, 4))`` for (1^3, 2^4)."""
    out = []
    for value, mult in pairs:
        if mult < 0:
            raise ValueError(f"negative multiplicity for {value}")
        out.extend([value] * mult)
    return tuple(sorted(out))


def nu_label(values: Sequence[int]) -> str:
    c = Counter(values)
    return "(" + ",".join(f"{v}^{c[v]}" if c[v] != 1 else str(v) for v in sorted(c)) + ")"


def m_count_direct(values: Sequence[int], level: int) -> int:
    """Number of nonnegative solutions of ``sum values[j] * m_j == level`` by dynamic programming."""
    if level < 0:
        return 0
    ways = [1] + [0] * level
    for v in values:
        for x in range(v, level + 1):
            ways[x] += ways[x - v]
    return ways[level]


def _shape(values: Sequence[int]) -> tuple[int, list[int]] | None:
    """``(a, [t_1..t_k])`` when values are ``(a^t1, (2a)^t2, ..., (ka)^tk)``, else None."""
    if not values:
        return None
    a = min(values)
    if any(v % a for v in values):
        return None
    c = Counter(v // a for v in values)
    k = max(c)
    return a, [c.get(r, 0) for r in range(1, k + 1)]


def m_count_nested(values: Sequence[int], level: int) -> int:
    """Nested-sum closed form over group sums; requires the multiple-of-a shape."""
    shape = _shape(values)
    if shape is None:
        raise ValueError(f"{nu_label(values)} is not of the form (a^t1, (2a)^t2, ..., (ka)^tk)")
    a, ts = shape
    if level % a:
        return 0
    top = level // a
    k = len(ts)

    def bound(r, used):
        # r is 1-based; used = sum_{s < r} s * i_s
        if r == 1:
            return top if ts[0] > 1 else 0
        return (top - used) // r if ts[r - 1] > 0 else 0

    def rec(r, used):
        if r > k:
            return 1
        total = 0
        t = ts[r - 1]
        shift = 1 if r == 1 else 0
        for i in range(bound(r, used) + 1):
            w = binom(i + t - 1 - shift, t - 1 - shift)
            if w:
                total += w * rec(r + 1, used + r * i)
        return total

    return rec(1, 0)


def m_count(values: Sequence[int], level: int) -> int:
    """Number of solutions of ``values . m = level``; the closed and direct routes must agree."""
    values = tuple(values)
    direct = m_count_direct(values, level)
    if _shape(values) is not None:
        closed = m_count_nested(values, level)
        if closed != direct:
            raise AssertionError(f"nested sum {closed} != direct count {direct} for {nu_label(values)} at {level}")
    return direct


# Expansions of selected counts as sums of binomials, kept for comparison with the
# direct count.  Keys name the signature, with p standing for the free exponent.

def _even(level):
    return level % 2 == 0


BINOMIAL_EXPANSIONS: dict[str, tuple[Callable[[int], tuple[int, ...]], Callable[[int, int], int]]] = {
    "1^p": (lambda p: nu((1, p)), lambda p, l: binom(l + p - 1, l)),
    "1,2^p": (lambda p: nu((1, 1), (2, p)), lambda p, l: binom(l // 2 + p, l // 2)),
    "1^2,2^p": (lambda p: nu((1, 2), (2, p)),
                lambda p, l: binom(l // 2 + p + 1, l // 2) + binom((l - 1) // 2 + p + 1, (l - 1) // 2)),
    "1^3,2^p": (lambda p: nu((1, 3), (2, p)),
                lambda p, l: 2 * binom(l // 2 + p + 1, l // 2 - 1) + 2 * binom((l - 1) // 2 + p + 2, (l - 1) // 2)
                + binom(l // 2 + p + 1, l // 2)),
    "1^4,2^(p-3)": (lambda p: nu((1, 4), (2, p - 3)),
                    lambda p, l: (8 * binom(l // 2 + p - 1, l // 2 - 1) + binom(l // 2 + p - 2, l // 2)) if _even(l)
                    else (4 * binom((l - 1) // 2 + p, (l - 1) // 2) + 4 * binom((l - 1) // 2 + p - 1, (l - 1) // 2 - 1))),
    "2^p": (lambda p: nu((2, p)), lambda p, l: binom(l // 2 + p - 1, l // 2) if _even(l) else 0),
    "2,4^p": (lambda p: nu((2, 1), (4, p)), lambda p, l: binom(l // 4 + p, l // 4) if _even(l) else 0),
    "2^2,4^p": (lambda p: nu((2, 2), (4, p)),
                lambda p, l: (binom((l - 2) // 4 + p + 1, (l - 2) // 4) + binom(l // 4 + p + 1, l // 4)) if _even(l) else 0),
    "2^3,4^p": (lambda p: nu((2, 3), (4, p)),
                lambda p, l: (2 * binom(l // 2 + p + 1, l // 2 - 1) + 2 * binom((l - 1) // 2 + p + 2, (l - 1) // 2)
                              + binom(l // 2 + p + 1, l // 2)) if _even(l) else 0),
    "4^p": (lambda p: nu((4, p)), lambda p, l: binom(l // 4 + p - 1, l // 4) if l % 4 == 0 else 0),
}


def binomial_expansion(key: str, p: int, level: int, literal: bool = True) -> int:
    """Value of a binomial expansion of an m-count.

    With ``literal`` the stored expression is evaluated as written;
    otherwise the authoritative count is returned.
    """
    sig, expr = BINOMIAL_EXPANSIONS[key]
    if literal:
        return expr(p, level)
    return m_count(sig(p), level)


def expansion_verdicts(max_p: int = 6, max_level: int = 16) -> dict[str, list[tuple[int, int, int, int]]]:
    """Map each expansion to its mismatches ``(p, level, expansion, true)`` on a grid."""
    out = {}
    for key, (sig, expr) in BINOMIAL_EXPANSIONS.items():
        lo = 4 if key.startswith("1^4") else 1
        bad = []
        for p in range(lo, max_p + 1):
            for level in range(max_level + 1):
                true = m_count(sig(p), level)
                got = expr(p, level)
                if got != true:
                    bad.append((p, level, got, true))
        out[key] = bad
    return out


# ---------------------------------------------------------------------------
# closed formulae per type

def _delta(cond: bool) -> int:
    return 1 if cond else 0


def count_type_a(n: int, level: int, i: int) -> int:
    """Double Moebius sum for A_n^(1) at (l-1)Lambda_0 + Lambda_i."""
    size = n + 1 + level
    total = Fraction(0)
    for d in divisors(gcd(gcd(n + 1, level), i)):
        inner = 0
        for e in divisors(gcd((n + 1) // d, level // d)):
            inner += int(mobius(e)) * binom(size // (d * e), level // (d * e))
        total += Fraction(d, size) * inner
    if total.denominator != 1:
        raise AssertionError(f"non-integral count {total} for A{n} level {level} index {i}")
    return int(total)


def totient_count_type_a(n: int, level: int) -> int:
    """Euler-phi form of the A-type count at index 0."""
    size = n + 1 + level
    total = sum(int(totient(d)) * binom(size // d, level // d) for d in divisors(gcd(n + 1, level)))
    if total % size:
        raise AssertionError("non-integral Euler-phi count")
    return total // size


def primitive_necklaces(n: int, level: int) -> int:
    """Aperiodic necklaces with n+1 beads of one colour and l of another."""
    size = n + 1 + level
    total = sum(int(mobius(d)) * binom(size // d, level // d) for d in divisors(gcd(n + 1, level)))
    if total % size:
        raise AssertionError("non-integral necklace count")
    return total // size


def _closed_terms(t: AffineType, level: int, i: int) -> Fraction:
    n, fam = t.rank, t.family
    m = lambda *pairs: m_count(nu(*pairs), level)  # noqa: E731
    d0 = _delta(i == 0)
    if fam == "B1":
        total, fixed = m((1, 3), (2, n - 2)), m((1, 1), (2, n - 1))
        return Fraction(total - fixed, 2) + d0 * fixed
    if fam == "C1":
        fixed = m((2, (n + 1) // 2)) if n % 2 else m((1, 1), (2, n // 2))
        return Fraction(m((1, n + 1)) - fixed, 2) + d0 * fixed
    if fam == "A2_odd":
        fixed = m((2, 1), (4, (n - 1) // 2)) if n % 2 else m((2, 2), (4, (n - 2) // 2))
        return Fraction(m((1, 2), (2, n - 1)) - fixed, 2) + d0 * fixed
    if fam == "D2":
        fixed = m((2, n))
        return Fraction(m((1, 2), (2, n - 1)) - fixed, 2) + d0 * fixed
    if fam == "D1":
        total, half = m((1, 4), (2, n - 3)), m((2, n - 1))
        full = m((4, (n - 1) // 2)) if n % 2 else m((2, 3), (4, (n - 4) // 2))
        return Fraction(total - half, 4) + Fraction(_delta(i in (0, 1)) * (half - full), 2) + d0 * full
    if fam == "E6_1":
        fixed = m((3, 2), (6, 1))
        return Fraction(m((1, 3), (2, 3), (3, 1)) - fixed, 3) + d0 * fixed
    if fam == "E7_1":
        fixed = m((2, 2), (4, 2), (6, 1))
        return Fraction(m((1, 2), (2, 3), (3, 2), (4, 1)) - fixed, 2) + d0 * fixed
    single = {
        "A2_even": ((1, 1), (2, n)),
        "E8_1": ((1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)),
        "F4_1": ((1, 2), (2, 2), (3, 1)),
        "G2_1": ((1, 2), (2, 1)),
        "E6_2": ((1, 1), (2, 2), (3, 1), (4, 1)),
        "D4_3": ((1, 1), (2, 1), (3, 1)),
    }
    return Fraction(m(*single[fam]))


def _check_index(t: AffineType, i: int) -> None:
    valid = datum(t).dr_indices
    if i not in valid:
        raise ValueError(f"index {i} is not distinguished for {t}; valid indices are {list(valid)}")


def count_closed(t: AffineType, level: int, i: int = 0) -> int:
    _check_index(t, i)
    if level < 0:
        raise ValueError("level must be nonnegative")
    if level == 0:
        return _delta(i == 0)
    if t.family == "A1":
        return count_type_a(t.rank, level, i)
    value = _closed_terms(t, level, i)
    if value.denominator != 1 or value < 0:
        raise AssertionError(f"closed formula gives {value} for {t} level {level} index {i}")
    return int(value)


BINOMIAL_FAMILIES = ("B1", "C1", "A2_even", "D2")


def count_binomial(t: AffineType, level: int, i: int = 0) -> int:
    if t.family not in BINOMIAL_FAMILIES:
        raise ValueError(f"no binomial formula for {t.family}; available for {', '.join(BINOMIAL_FAMILIES)}")
    _check_index(t, i)
    n = t.rank
    dn = _delta(i == n)
    if t.family == "B1":
        return binom(n + (level - dn) // 2, n) + binom(n + (level - 1 - dn) // 2, n)
    if t.family == "C1":
        twice = binom(n + level, n) + (-1) ** i * _delta(n * level % 2 == 0) * binom((n + level) // 2, n // 2)
        if twice % 2:
            raise AssertionError("odd numerator in the C-type binomial formula")
        return twice // 2
    if t.family == "A2_even":
        return binom(n + level // 2, n)
    return binom(n + (level - dn) // 2, n)


# ---------------------------------------------------------------------------
# triangular arrays

def _tri_a2even_0(n, l, T):
    if l <= 1 or n == 0:
        return 1
    return T(n, l - 2) + T(n - 1, l)


def _tri_c1_0(n, l, T):
    if n == 0 or l == 0:
        return 1
    corr = binom((n + l) // 2 - 1, (l - 1) // 2) if (n * l) % 2 else 0
    return T(n, l - 1) + T(n - 1, l) - corr


def _tri_c1_1(n, l, T):
    if n == 0 or l == 0:
        return 0
    corr = binom((n + l) // 2 - 1, (l - 1) // 2) if (n * l) % 2 else 0
    return T(n, l - 1) + T(n - 1, l) + corr


def _tri_b1_0(n, l, T):
    if l == 0:
        return 1
    if n == 0:
        return 2
    if l == 1:
        return 2
    return T(n, l - 2) + T(n - 1, l)


def _tri_b1_n(n, l, T):
    return 0 if l == 0 else get_triangle("B1_0")(n, l - 1)


def _tri_d1_0(n, l, T):
    if l <= 1:
        return 1
    if n == 0:
        if l == 2:
            return 3
        return 2 if l % 2 else 4
    extra = 0
    if l % 2 == 0:
        extra = (-1) ** n * (1 + n % 2) * get_triangle("A2even_0")((n - 1) // 2, l // 2 - 1)
    return T(n, l - 2) + T(n - 1, l) + extra


def _tri_d1_1(n, l, T):
    if l == 0:
        return 0
    if l == 1:
        return 1
    if n == 0:
        return 2 if l % 2 else 0
    extra = 0
    if l % 2 == 0:
        extra = (-1) ** (n + 1) * (1 + n % 2) * get_triangle("A2even_0")((n - 1) // 2, l // 2 - 1)
    return T(n, l - 2) + T(n - 1, l) + extra


def _tri_a2odd(sign):
    def rule(n, l, T):
        if l == 0:
            return 1 if sign < 0 else 0
        if l == 1 or n == 0:
            return 1
        extra = 0
        if n % 2 and l % 2 == 0 and n > 1:
            extra = sign * get_triangle("A2even_0")((n - 1) // 2, l // 2 - 1)
        return T(n, l - 2) + T(n - 1, l) + extra
    return rule


def _tri_d2_n(n, l, T):
    return 0 if l == 0 else get_triangle("A2even_0")(n, l - 1)


# label -> (rule, family, index, minimum rank at which the array matches the count)
TRIANGLES = {
    "C1_0": (_tri_c1_0, "C1", "0", 2),
    "C1_1": (_tri_c1_1, "C1", "1", 2),
    "A2even_0": (_tri_a2even_0, "A2_even", "0", 1),
    "B1_0": (_tri_b1_0, "B1", "0", 3),
    "B1_n": (_tri_b1_n, "B1", "n", 3),
    "D1_0": (_tri_d1_0, "D1", "0", 4),
    "D1_1": (_tri_d1_1, "D1", "1", 4),
    "D1_n": (_tri_b1_n, "D1", "n", 4),
    "A2odd_0": (_tri_a2odd(-1), "A2_odd", "0", 3),
    "A2odd_1": (_tri_a2odd(+1), "A2_odd", "1", 3),
    "D2_0": (_tri_a2even_0, "D2", "0", 2),
    "D2_n": (_tri_d2_n, "D2", "n", 2),
}


@dataclass
class TriangularArray:
    label: str
    rule: Callable
    family: str
    index: str
    min_rank: int
    _memo: dict = field(default_factory=dict, repr=False)

    def __call__(self, n: int, level: int) -> int:
        if n < 0 or level < 0:
            raise ValueError("triangle coordinates are nonnegative")
        key = (n, level)
        if key not in self._memo:
            # fill lower cells first to keep recursion shallow
            for s in range(n + level):
                for a in range(min(n, s) + 1):
                    b = s - a
                    if b <= level and (a, b) not in self._memo:
                        self._memo[(a, b)] = self.rule(a, b, self)
            self._memo[key] = self.rule(n, level, self)
        return self._memo[key]

    def row(self, s: int) -> list[int]:
        """Cells with ``n + l == s``, from ``T(s, 0)`` down to ``T(0, s)``."""
        return [self(s - l, l) for l in range(s + 1)]

    def count_index(self, n: int) -> int:
        return n if self.index == "n" else int(self.index)


_TRIANGLE_CACHE: dict[str, TriangularArray] = {}


def get_triangle(label: str) -> TriangularArray:
    if label not in TRIANGLES:
        raise ValueError(f"unknown triangle {label!r}; expected one of {', '.join(TRIANGLES)}")
    if label not in _TRIANGLE_CACHE:
        rule, fam, idx, lo = TRIANGLES[label]
        _TRIANGLE_CACHE[label] = TriangularArray(label, rule, fam, idx, lo)
    return _TRIANGLE_CACHE[label]


triangle = get_triangle


# ---------------------------------------------------------------------------
# level-rank duality

@dataclass
class DualityRecord:
    identity: str
    applicable: bool
    lhs: tuple | None = None
    rhs: tuple | None = None
    lhs_count: int | None = None
    rhs_count: int | None = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return (not self.applicable) or self.lhs_count == self.rhs_count

    def to_dict(self) -> dict:
        return {
            "identity": self.identity, "applicable": self.applicable,
            "lhs": list(self.lhs) if self.lhs else None, "rhs": list(self.rhs) if self.rhs else None,
            "lhs_count": self.lhs_count, "rhs_count": self.rhs_count, "passed": self.passed, "note": self.note,
        }


def _count(fam: str, rank: int, level: int, index) -> int:
    t = affine_type(fam, rank)
    i = rank if index == "n" else index
    return count_closed(t, level, i)


def _record(name, lhs, rhs, note=""):
    return DualityRecord(name, True, lhs, rhs, _count(*lhs), _count(*rhs), note)


def _na(name, why):
    return DualityRecord(name, False, note=f"not applicable: {why}")


def duality_identities() -> list[str]:
    return ["A1", "B1_0", "B1_n", "C1", "D1_n", "A2_odd", "A2_even", "D2_0", "D2_n"]


def duality_check(identity: str, n: int, level: int, i: int | str = 0) -> DualityRecord:
    """Check one level-rank identity at ``(n, level, i)``; outside its range the record is 'not applicable'.

    Dual parameters are written ``(family, rank, level, index)`` where the
    index ``"n"`` means the last node of the dual rank.
    """
    if identity == "A1":
        if n < 1 or level < 2 or not (0 <= int(i) <= min(n, level)):
            return _na(identity, "needs n >= 1, l >= 2 and 0 <= i <= min(n, l)")
        i = int(i)
        g = gcd(gcd(n + 1, level), i)
        j = 0 if i == 0 else g % level
        return _record(identity, ("A1", n, level, i), ("A1", level - 1, n + 1, j),
                       f"gcd triple {g} on both sides")
    if identity == "B1_0":
        if n < 3 or level < 7 or level % 2 == 0:
            return _na(identity, "needs n >= 3 and odd l >= 7")
        return _record(identity, ("B1", n, level, 0), ("B1", (level - 1) // 2, 2 * n + 1, 0))
    if identity == "B1_n":
        if n < 3 or level < 8 or level % 2:
            return _na(identity, "needs n >= 3 and even l >= 8")
        return _record(identity, ("B1", n, level, "n"), ("B1", level // 2 - 1, 2 * n + 2, "n"))
    if identity == "C1":
        if n < 2 or level < 2 or i not in (0, 1):
            return _na(identity, "needs n, l >= 2 and i in {0, 1}")
        return _record(identity, ("C1", n, level, i), ("C1", level, n, i))
    if identity == "D1_n":
        if n < 4 or level < 9 or level % 2:
            return _na(identity, "needs n >= 4 and even l >= 9")
        rec = _record(identity, ("D1", n, level, "n"), ("B1", level // 2 - 1, 2 * n + 2, "n"),
                      "dual is of type B1")
        closed = 2 * binom(n + level // 2 - 1, level // 2 - 1)
        if rec.lhs_count != closed:
            raise AssertionError(f"D1 count {rec.lhs_count} differs from 2*C({n + level // 2 - 1},{level // 2 - 1})")
        return rec
    if identity == "A2_odd":
        if n < 3 or level < 7 or level % 2 == 0 or i not in (0, 1):
            return _na(identity, "needs n >= 3, odd l >= 7 and i in {0, 1}")
        return _record(identity, ("A2_odd", n, level, i), ("A2_even", (level - 1) // 2, 2 * n + 1, 0),
                       "the dual type has a single class")
    if identity == "A2_even":
        if n < 2 or level < 4:
            return _na(identity, "needs n >= 2 and l >= 4")
        dual = ("A2_even", level // 2, 2 * n, 0) if level % 2 == 0 else ("A2_even", (level - 1) // 2, 2 * n + 1, 0)
        return _record(identity, ("A2_even", n, level, 0), dual)
    if identity == "D2_0":
        if n < 2 or level < 4:
            return _na(identity, "needs n >= 2 and l >= 4")
        dual = ("D2", level // 2, 2 * n, 0) if level % 2 == 0 else ("D2", (level - 1) // 2, 2 * n + 1, 0)
        return _record(identity, ("D2", n, level, 0), dual)
    if identity == "D2_n":
        if n < 2 or level < 5:
            return _na(identity, "needs n >= 2 and l >= 5")
        dual = (("D2", level // 2 - 1, 2 * n + 2, "n") if level % 2 == 0
                else ("D2", (level - 1) // 2, 2 * n + 1, "n"))
        return _record(identity, ("D2", n, level, "n"), dual)
    raise ValueError(f"unknown identity {identity!r}; expected one of {', '.join(duality_identities())}")


def frenkel_dual(n: int, level: int, m: Sequence[int]) -> tuple[int, ...]:
    """Send a level-l weight of A_n^(1) to a level-(n+1) weight of A_{l-1}^(1).

    Each node i contributes one fundamental weight, indexed by the tail sum
    ``m_i + ... + m_n`` taken mod l.
    """
    if len(m) != n + 1 or sum(m) != level:
        raise ValueError(f"{tuple(m)} is not a level-{level} weight of rank {n}")
    out = [0] * level
    for i in range(n + 1):
        out[sum(m[i:]) % level] += 1
    return tuple(out)


def frenkel_check(n: int, level: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Weights whose Frenkel dual breaks ``ev'(dual) == ev(weight) mod level``; empty when the map is compatible."""
    from .weights import enumerate_level, s_evaluation

    if n < 1 or level < 2:
        raise ValueError("the Frenkel map needs n >= 1 and level >= 2")
    src, dst = affine_type("A1", n), affine_type("A1", level - 1)
    bad = []
    for m in enumerate_level(src, level):
        dual = frenkel_dual(n, level, m)
        if (s_evaluation(dst, dual)[0] - s_evaluation(src, m)[0]) % level:
            bad.append((m, dual))
    return bad

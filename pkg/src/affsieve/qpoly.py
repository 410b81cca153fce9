"""Exact integer polynomials in q (and in q1, q2) for the sieving statistics."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .cartan import AffineType, datum
from .weights import enumerate_level, halved_evaluation, is_bicyclic, s_evaluation


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class QPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "QPolynomial":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return QPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + QPolynomial(-c for c in other.coeffs)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    def shift(self, k: int) -> "QPolynomial":
        return QPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, divisor: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Long division by a monic polynomial, exact over the integers."""
        if divisor.is_zero() or divisor.coeffs[-1] != 1:
            raise ValueError("division is only supported by monic polynomials")
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                quot[k - dd] = c
                for i, y in enumerate(divisor.coeffs):
                    rem[k - dd + i] -= c * y
        return QPolynomial(quot), QPolynomial(rem[:dd] if dd else [])

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            num = str(c) if (c != 1 or k == 0) else ""
            if c == -1 and k:
                num = "-"
            terms.append(num + mono)
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class BiQPolynomial:
    """Polynomial in q1, q2 stored as ``{(deg1, deg2): coeff}``."""

    terms: tuple[tuple[tuple[int, int], int], ...]

    def __init__(self, terms=None):
        items = dict(terms or {})
        object.__setattr__(self, "terms", tuple(sorted((k, v) for k, v in items.items() if v)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def __add__(self, other: "BiQPolynomial") -> "BiQPolynomial":
        out = self.as_dict()
        for k, v in other.terms:
            out[k] = out.get(k, 0) + v
        return BiQPolynomial(out)

    def __mul__(self, other: "BiQPolynomial") -> "BiQPolynomial":
        out: dict[tuple[int, int], int] = {}
        for (a1, a2), x in self.terms:
            for (b1, b2), y in other.terms:
                key = (a1 + b1, a2 + b2)
                out[key] = out.get(key, 0) + x * y
        return BiQPolynomial(out)

    def __call__(self, x1, x2):
        return sum(c * x1 ** i * x2 ** j for (i, j), c in self.terms)

    def total(self) -> int:
        return sum(c for _, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*q1^{i}*q2^{j}" for (i, j), c in self.terms)


# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QPolynomial:
    """Gaussian binomial coefficient via the q-Pascal rule."""
    if b < 0 or b > a:
        return QPolynomial()
    if b == 0 or b == a:
        return QPolynomial([1])
    return q_binomial(a - 1, b - 1) + q_binomial(a - 1, b).shift(b)


def weight_gen_poly(t: AffineType, level: int):
    """Sum of q^ev over the level set; bivariate (halved evaluations) for D1 with even rank."""
    if is_bicyclic(t):
        out: dict[tuple[int, int], int] = {}
        for m in enumerate_level(t, level):
            key = halved_evaluation(t, m)
            out[key] = out.get(key, 0) + 1
        return BiQPolynomial(out)
    coeffs: dict[int, int] = {}
    for m in enumerate_level(t, level):
        e = s_evaluation(t, m)[0]
        coeffs[e] = coeffs.get(e, 0) + 1
    top = max(coeffs) if coeffs else -1
    return QPolynomial(coeffs.get(k, 0) for k in range(top + 1))


def series_coefficient(t: AffineType, level: int):
    """Coefficient of t^level in the product of 1/(1 - q^{s_i} t^{a_i}) over all nodes."""
    d = datum(t)
    if is_bicyclic(t):
        exps = [tuple(s[i] // 2 for s in d.extended_sieving_set) for i in range(t.rank + 1)]
        one = BiQPolynomial({(0, 0): 1})
        zero = BiQPolynomial()
        series = [one] + [zero] * level
        for e, a in zip(exps, d.comarks):
            mono = BiQPolynomial({e: 1})
            for lv in range(a, level + 1):
                series[lv] = series[lv] + series[lv - a] * mono
        return series[level]
    exps = [d.extended_sieving_set[0][i] for i in range(t.rank + 1)]
    series = [QPolynomial([1])] + [QPolynomial()] * level
    for e, a in zip(exps, d.comarks):
        # multiplying by 1/(1 - x) with x = q^e t^a is the running sum s[l] += x * s[l - a]
        for lv in range(a, level + 1):
            series[lv] = series[lv] + series[lv - a].shift(e)
    return series[level]


def reduce_mod_cyclic(p: QPolynomial, modulus: int) -> tuple[int, ...]:
    out = [0] * modulus
    for k, c in enumerate(p.coeffs):
        out[k % modulus] += c
    return tuple(out)


def reduce_mod_bicyclic(p: BiQPolynomial) -> dict[tuple[int, int], int]:
    """Residues of a bivariate polynomial modulo (q1^2 - 1, q2^2 - 1)."""
    out = {(a, b): 0 for a in (0, 1) for b in (0, 1)}
    for (i, j), c in p.terms:
        out[(i % 2, j % 2)] += c
    return out


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> QPolynomial:
    """Phi_d by dividing q^d - 1 by Phi_e for every proper divisor e of d."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    num = QPolynomial([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            num, rem = num.divmod(cyclotomic(e))
            if not rem.is_zero():
                raise AssertionError(f"Phi_{e} does not divide q^{d}-1")
    return num


def eval_at_primitive_root(p: QPolynomial, d: int) -> int:
    """Value at a primitive d-th root of unity, required to be an integer."""
    _, rem = p.divmod(cyclotomic(d))
    if rem.degree > 0:
        raise ValueError(f"value at a primitive {d}-th root of unity is not an integer (residue {rem})")
    return rem.coeffs[0] if rem.coeffs else 0


def eval_bicyclic_signs(p: BiQPolynomial, j1: int, j2: int) -> int:
    """Value at (q1, q2) = ((-1)^j1, (-1)^j2)."""
    return sum(c * (-1) ** (i * j1 + j * j2) for (i, j), c in p.terms)

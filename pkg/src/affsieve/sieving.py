"""Verification engine for cyclic and bicyclic sieving on level sets.

Every check computes both sides independently.  Fixed points are counted on
the enumerated level set, while polynomial values come from exact
cyclotomic reduction.
"""

from __future__ import annotations

import cmath
from dataclasses import asdict, dataclass, field

from .actions import decompose_orbits, element_order, fixed_count, group_elements, stabilizer
from .cartan import AffineType, datum
from .qpoly import (eval_at_primitive_root, eval_bicyclic_signs, reduce_mod_bicyclic, reduce_mod_cyclic,
                    weight_gen_poly)
from .weights import enumerate_level, is_bicyclic


@dataclass
class ElementRow:
    element: object
    order: int
    fixed: int
    evaluation: int
    passed: bool


@dataclass
class ResidueRow:
    residue: object
    coefficient_sum: int
    orbit_count: int
    passed: bool


@dataclass
class CspReport:
    type: AffineType
    level: int
    kind: str
    size: int
    element_rows: list[ElementRow] = field(default_factory=list)
    residue_rows: list[ResidueRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.element_rows) and all(r.passed for r in self.residue_rows)

    def failures(self) -> list[str]:
        out = []
        for r in self.element_rows:
            if not r.passed:
                out.append(f"element {r.element}: fixed {r.fixed} != evaluation {r.evaluation}")
        for r in self.residue_rows:
            if not r.passed:
                out.append(f"residue {r.residue}: coefficient sum {r.coefficient_sum} != orbit count {r.orbit_count}")
        return out

    def to_dict(self) -> dict:
        return {
            "family": self.type.family, "rank": self.type.rank, "level": self.level, "kind": self.kind,
            "size": self.size, "passed": self.passed,
            "elements": [_jsonable(asdict(r)) for r in self.element_rows],
            "residues": [_jsonable(asdict(r)) for r in self.residue_rows],
        }


def _jsonable(row: dict) -> dict:
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in row.items()}


def _float_eval(coeffs, d: int) -> complex:
    w = cmath.exp(2j * cmath.pi / d)
    return sum(c * w ** k for k, c in enumerate(coeffs))


def stabilizer_histogram(t: AffineType, level: int) -> tuple[int, ...]:
    """Entry j counts orbits whose stabilizer order divides j (every orbit counts at j = 0)."""
    if is_bicyclic(t):
        raise ValueError("D1 with even rank carries a bicyclic group; use the bicyclic engine")
    big_n = datum(t).group_order
    orbs = decompose_orbits(t, level).orbits
    return tuple(sum(1 for o in orbs if j % o.stabilizer_order == 0) for j in range(big_n))


def verify_csp(t: AffineType, level: int, float_check: bool = True) -> CspReport:
    if is_bicyclic(t):
        raise ValueError(f"{t} exhibits a bicyclic phenomenon; use verify_bicsp")
    big_n = datum(t).group_order
    poly = weight_gen_poly(t, level)
    size = len(enumerate_level(t, level))
    report = CspReport(t, level, "cyclic", size)
    for g in group_elements(t):
        o = element_order(t, g)
        fixed = fixed_count(t, level, g)
        value = eval_at_primitive_root(poly, o)
        if float_check and abs(_float_eval(poly.coeffs, o) - value) > 1e-6 * max(1, size):
            raise AssertionError(f"exact and floating evaluation disagree for {t} level {level} at order {o}")
        report.element_rows.append(ElementRow(g, o, fixed, value, fixed == value))
    residues = reduce_mod_cyclic(poly, big_n)
    hist = stabilizer_histogram(t, level)
    for j in range(big_n):
        report.residue_rows.append(ResidueRow(j, residues[j], hist[j], residues[j] == hist[j]))
    return report


def verify_bicsp(t: AffineType, level: int) -> CspReport:
    if not is_bicyclic(t):
        raise ValueError(f"the bicyclic engine only handles D1 with even rank, not {t}")
    poly = weight_gen_poly(t, level)
    size = len(enumerate_level(t, level))
    report = CspReport(t, level, "bicyclic", size)
    for g in group_elements(t):
        fixed = fixed_count(t, level, g)
        value = eval_bicyclic_signs(poly, *g)
        report.element_rows.append(ElementRow(g, element_order(t, g), fixed, value, fixed == value))
    residues = reduce_mod_bicyclic(poly)
    stabs = [stabilizer(t, o.representative) for o in decompose_orbits(t, level).orbits]
    for j in group_elements(t):
        # orbits whose stabilizer pairs trivially with the character (j1, j2)
        count = sum(1 for h in stabs if all((j[0] * c1 + j[1] * c2) % 2 == 0 for c1, c2 in h))
        report.residue_rows.append(ResidueRow(j, residues[j], count, residues[j] == count))
    return report


def verify(t: AffineType, level: int) -> CspReport:
    return verify_bicsp(t, level) if is_bicyclic(t) else verify_csp(t, level)

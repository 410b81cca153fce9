"""Index-permutation actions of the fundamental group on level-l weights.

Permutations are stored as image tuples: ``perm[i]`` is the image of node
``i``.  A permutation acts on coefficients by ``(sigma . m)_i = m_{sigma(i)}``.
Cycle notation ``(a, b, c)`` sends ``a -> b -> c -> a``.

Every type except D1 with even rank carries a cyclic group ``C_N`` whose
elements are integers ``j`` (meaning ``sigma^j``).  D1 with even rank carries
``C_2 x C_2`` with elements ``(j1, j2)`` meaning ``sigma_1^j1 sigma_2^j2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Callable, Sequence, Union

from .cartan import AffineType, datum
from .weights import Weight, enumerate_level, is_bicyclic
from .words import TupleDescriptor, enumerate_tuples, sagan_power

Perm = tuple[int, ...]
Element = Union[int, tuple[int, int]]


def from_cycles(size: int, cycles: Sequence[Sequence[int]]) -> Perm:
    perm = list(range(size))
    for cyc in cycles:
        for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
            perm[a] = b
    return tuple(perm)


def compose(p: Perm, q: Perm) -> Perm:
    """Permutation whose action on coefficients is ``p`` after ``q``."""
    # (p . (q . m))_i = (q . m)_{p(i)} = m_{q(p(i))}
    return tuple(q[p[i]] for i in range(len(p)))


def perm_power(p: Perm, j: int) -> Perm:
    out = tuple(range(len(p)))
    for _ in range(j):
        out = compose(out, p)
    return out


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def apply_perm(p: Perm, m: Sequence[int]) -> Weight:
    return tuple(m[p[i]] for i in range(len(p)))


def permutation_for(t: AffineType) -> tuple[Perm, ...]:
    """Generator(s) of the group; one permutation, or two for D1 with even rank."""
    n, fam = t.rank, t.family
    size = n + 1
    if fam == "A1":
        return (tuple((i + 1) % size for i in range(size)),)
    if fam in ("B1", "D2"):
        return (from_cycles(size, [(0, n)]),)
    if fam in ("C1", "A2_odd"):
        top = n if n % 2 else n - 1
        return (from_cycles(size, [(j, j + 1) for j in range(0, top, 2)]),)
    if fam == "E6_1":
        return (from_cycles(size, [(0, 1, 6), (2, 3, 5)]),)
    if fam == "E7_1":
        return (from_cycles(size, [(0, 7), (1, 6), (3, 5)]),)
    if fam == "D1" and n % 2:
        return (from_cycles(size, [(0, n, 1, n - 1)] + [(j, j + 1) for j in range(2, n - 2, 2)]),)
    if fam == "D1":
        s1 = from_cycles(size, [(0, n), (1, n - 1)])
        s2 = from_cycles(size, [(j, j + 1) for j in range(0, n - 3, 2)] + [(n - 1, n)])
        return (s1, s2)
    return (tuple(range(size)),)


def group_elements(t: AffineType) -> list[Element]:
    if is_bicyclic(t):
        return [(0, 0), (1, 0), (0, 1), (1, 1)]
    return list(range(datum(t).group_order))


def element_perm(t: AffineType, g: Element) -> Perm:
    gens = permutation_for(t)
    if is_bicyclic(t):
        j1, j2 = (x % 2 for x in g)
        return compose(perm_power(gens[0], j1), perm_power(gens[1], j2))
    if isinstance(g, tuple):
        raise ValueError(f"{t} carries a cyclic group; use an integer element")
    return perm_power(gens[0], g % datum(t).group_order)


def element_order(t: AffineType, g: Element) -> int:
    if is_bicyclic(t):
        return 1 if all(x % 2 == 0 for x in g) else 2
    big_n = datum(t).group_order
    return big_n // gcd(big_n, g % big_n)


def act(t: AffineType, g: Element, m: Sequence[int]) -> Weight:
    return apply_perm(element_perm(t, g), m)


def fixed_count(t: AffineType, level: int, g: Element) -> int:
    p = element_perm(t, g)
    return sum(1 for m in enumerate_level(t, level) if apply_perm(p, m) == m)


# ---------------------------------------------------------------------------
# transported Sagan actions

@dataclass(frozen=True)
class SaganModel:
    """Relabelling ``tau`` that turns the level set into a tuple set with a cyclic action."""

    tau: Perm
    descriptor: Callable[[int], TupleDescriptor]
    label: str

    def step(self, m: Sequence[int], level: int, j: int = 1) -> Weight:
        moved = sagan_power(apply_perm(self.tau, m), self.descriptor(level), j)
        return apply_perm(inverse(self.tau), moved)


def _desc_single(d, nu):
    return lambda level: TupleDescriptor.single(level, d, nu)


def _desc_double(r, d, nu, nu2):
    return lambda level: TupleDescriptor.double(level, r, d, nu, nu2)


def sagan_models(t: AffineType) -> dict[Element, tuple[SaganModel, int]]:
    """For each non-identity element with a word model: the model and the power of its generator.

    For A1 an element of order ``o`` is modelled by Sagan's chunk-``o`` action.

    D1 with odd rank uses the C4 model for the generator and its inverse,
    and a separate C2 model for the square.  D1 with even rank uses one C2
    model per commuting generator; the product element has no model.
    """
    n, fam = t.rank, t.family
    size = n + 1
    ident = tuple(range(size))
    if fam == "A1":
        # an element of order o uses Sagan's chunk-o action on the same words
        out = {}
        for j in range(1, n + 1):
            o = size // gcd(size, j)
            out[j] = (SaganModel(ident, _desc_single(o, (1,) * (size // o)), f"M({o};(1^{size // o}))"), 1)
        return out
    if fam in ("B1", "D2"):
        tau = from_cycles(size, [tuple(range(n, 0, -1))])
        nu2 = (1,) + (2,) * (n - 2) if fam == "B1" else (2,) * (n - 1)
        return {1: (SaganModel(tau, _desc_double(2, 1, (1,), nu2), "M(2,1)"), 1)}
    if fam in ("C1", "A2_odd"):
        if fam == "C1":
            desc = _desc_single(2, (1,) * ((n + 1) // 2)) if n % 2 else _desc_double(2, 1, (1,) * (n // 2), (1,))
        else:
            desc = (_desc_single(2, (1,) + (2,) * ((n - 1) // 2)) if n % 2
                    else _desc_double(2, 1, (1,) + (2,) * ((n - 2) // 2), (2,)))
        return {1: (SaganModel(ident, desc, "M(2)" if n % 2 else "M(2,1)"), 1)}
    if fam == "E6_1":
        model = SaganModel(from_cycles(size, [(4, 3, 2, 6)]), _desc_double(3, 1, (1, 2), (3,)), "M(3,1;(1,2),(3))")
        return {1: (model, 1), 2: (model, 2)}
    if fam == "E7_1":
        model = SaganModel(from_cycles(size, [(1, 7, 4, 3, 2, 6)]), _desc_double(2, 1, (1, 2, 3), (2, 4)),
                           "M(2,1;(1,2,3),(2,4))")
        return {1: (model, 1)}
    if fam == "D1" and n % 2:
        eta = (n - 3) // 2
        tau = from_cycles(size, [tuple(range(n - 1, 0, -2)) + (1,), tuple(range(n, 2, -2))])
        c4 = SaganModel(tau, _desc_double(2, 2, (1,), (2,) * eta), "M(4,2;(1),(2^eta))")
        c2 = SaganModel(tau, _desc_double(2, 1, (1, 1), (2,) * (2 * eta)), "M(2,1;(1^2),(2^(2eta)))")
        return {1: (c4, 1), 2: (c2, 1), 3: (c4, 3)}
    if fam == "D1":
        tau1 = from_cycles(size, [tuple(range(n, 1, -2)) + (1,), tuple(range(n - 1, 2, -2))])
        tau2 = from_cycles(size, [tuple(range(n - 1, 2, -2)) + tuple(range(n, 1, -2))])
        m1 = SaganModel(tau1, _desc_double(2, 1, (1, 1), (2,) * (n - 3)), "M(2,1;(1^2),(2^(n-3)))")
        m2 = SaganModel(tau2, _desc_double(2, 1, (1, 1) + (2,) * ((n - 4) // 2), (2,)),
                        "M(2,1;(1^2,2^((n-4)/2)),(2))")
        return {(1, 0): (m1, 1), (0, 1): (m2, 1)}
    return {}


def sagan_act(t: AffineType, g: Element, m: Sequence[int]) -> Weight:
    models = sagan_models(t)
    if g not in models:
        if element_order(t, g) == 1:
            return tuple(m)
        raise ValueError(f"no word model for element {g} of {t}")
    model, power = models[g]
    return model.step(m, sum(c * x for c, x in zip(datum(t).comarks, m)), power)


def transported_fixed_count(t: AffineType, level: int, g: Element) -> int:
    """Fixed points of the word-model action of ``g``, counted on the tuple set itself."""
    models = sagan_models(t)
    if g not in models:
        if element_order(t, g) == 1:
            return len(enumerate_level(t, level))
        raise ValueError(f"no word model for element {g} of {t}")
    model, power = models[g]
    desc = model.descriptor(level)
    return sum(1 for x in enumerate_tuples(desc) if sagan_power(x, desc, power) == x)


# ---------------------------------------------------------------------------
# orbits

@dataclass
class Orbit:
    members: list[Weight]
    stabilizer_order: int

    @property
    def representative(self) -> Weight:
        return self.members[0]


@dataclass
class OrbitDecomposition:
    type: AffineType
    level: int
    group_order: int
    model: str
    orbits: list[Orbit]

    def sizes(self) -> list[int]:
        return [len(o.members) for o in self.orbits]

    def orbit_containing(self, m: Sequence[int]) -> Orbit:
        m = tuple(m)
        for o in self.orbits:
            if m in o.members:
                return o
        raise KeyError(m)


def _group_size(t: AffineType) -> int:
    return 4 if is_bicyclic(t) else datum(t).group_order


def decompose_orbits(t: AffineType, level: int, model: str = "permutation") -> OrbitDecomposition:
    """Partition the level set into orbits; members sorted, orbits ordered by their minimum."""
    if model == "permutation":
        gens = permutation_for(t)
        movers = [lambda m, p=p: apply_perm(p, m) for p in gens]
    elif model == "sagan":
        if is_bicyclic(t):
            raise ValueError("D1 with even rank has no single word model for the whole group")
        models = sagan_models(t)
        if 1 in models:
            movers = [lambda m: sagan_act(t, 1, m)]
        else:
            movers = [lambda m: tuple(m)]
    else:
        raise ValueError(f"unknown model {model!r}; expected 'permutation' or 'sagan'")

    size = _group_size(t)
    seen = set()
    orbits = []
    for m in enumerate_level(t, level):
        if m in seen:
            continue
        orbit = {m}
        frontier = [m]
        while frontier:
            nxt = []
            for x in frontier:
                for mv in movers:
                    y = mv(x)
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= orbit
        members = sorted(orbit)
        if size % len(members):
            raise AssertionError(f"orbit of size {len(members)} in a group of order {size}")
        orbits.append(Orbit(members, size // len(members)))
    return OrbitDecomposition(t, level, size, model, orbits)


def stabilizer(t: AffineType, m: Sequence[int]) -> list[Element]:
    return [g for g in group_elements(t) if act(t, g, m) == tuple(m)]

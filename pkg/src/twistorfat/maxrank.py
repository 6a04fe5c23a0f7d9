"""Maximal-rank pairs ``(Delta, Delta(h))`` for the catalogued homogeneous spaces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple

from .errors import InputError
from .rootsys import (
    Root,
    RootSystem,
    add_vectors,
    build_root_system,
    long_pairs,
    root_eval,
    short_units,
    type_a_roots,
)

SPACE_FAMILIES = ("DGrass", "BGrass", "CGrass", "AGrass", "F4_SO9", "G2_SU3")
EXCEPTIONAL = ("F4_SO9", "G2_SU3")
CLASSICAL_WITH_MATRICES = ("DGrass", "BGrass", "CGrass")

# (predicate text, predicate, which parameter it names)
CONSTRAINTS: dict = {
    "DGrass": (
        ("n ≥ 2", lambda n, m: n >= 2, "n"),
        ("m ≥ 2", lambda n, m: m >= 2, "m"),
    ),
    "BGrass": (
        ("n ≥ 2", lambda n, m: n >= 2, "n"),
        ("m ≥ 0", lambda n, m: m >= 0, "m"),
    ),
    "CGrass": (
        ("n ≥ 1", lambda n, m: n >= 1, "n"),
        ("m ≥ 1", lambda n, m: m >= 1, "m"),
    ),
    "AGrass": (
        ("n ≥ 1", lambda n, m: n >= 1, "n"),
        ("m ≥ 1", lambda n, m: m >= 1, "m"),
    ),
    "F4_SO9": (),
    "G2_SU3": (),
}


def check_constraints(family: str, n: int, m: int) -> None:
    if family not in SPACE_FAMILIES:
        raise InputError(f"unknown space family {family!r}; expected one of {', '.join(SPACE_FAMILIES)}")
    for name, value in (("n", n), ("m", m)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise InputError(f"{name} must be an integer, got {value!r}")
    for text, pred, param in CONSTRAINTS[family]:
        if not pred(n, m):
            got = n if param == "n" else m
            raise InputError(f"{text} required for {family} (got {param}={got})")


@dataclass(frozen=True)
class SpaceSpec:
    family: str
    n: int = 0
    m: int = 0

    def __post_init__(self):
        if self.family in EXCEPTIONAL:
            # parameters carry no meaning for the exceptional spaces
            object.__setattr__(self, "n", 0)
            object.__setattr__(self, "m", 0)
        check_constraints(self.family, self.n, self.m)

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL

    @property
    def ambient_rank(self) -> int:
        return {
            "DGrass": self.n + self.m,
            "BGrass": self.n + self.m,
            "CGrass": self.n + self.m,
            "AGrass": self.n + self.m - 1,
            "F4_SO9": 4,
            "G2_SU3": 2,
        }[self.family]

    @property
    def label(self) -> str:
        n, m = self.n, self.m
        if self.family == "DGrass":
            return f"SO({2 * n + 2 * m})/SO({2 * n})×SO({2 * m})"
        if self.family == "BGrass":
            tail = f"×SO({2 * m + 1})" if m else ""
            return f"SO({2 * n + 2 * m + 1})/SO({2 * n}){tail}"
        if self.family == "CGrass":
            return f"Sp({n + m})/Sp({n})×Sp({m})"
        if self.family == "AGrass":
            return f"U({n + m})/U({n})×U({m})"
        return {"F4_SO9": "F4/SO(9)", "G2_SU3": "G2/SU(3)"}[self.family]

    def __str__(self) -> str:
        if self.is_exceptional:
            return self.family
        return f"{self.family}(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class MaxRankPair:
    ambient: RootSystem
    sub_roots: Tuple[Root, ...]
    spec: SpaceSpec
    applicable: bool = True

    @cached_property
    def complement_roots(self) -> Tuple[Root, ...]:
        sub = set(self.sub_roots)
        return tuple(r for r in self.ambient.roots if r not in sub)

    def is_closed_subsystem(self) -> bool:
        """Negation-closed and closed under sums that land in the ambient system."""
        sub = set(self.sub_roots)
        if any(-r not in sub for r in sub):
            return False
        for a in self.sub_roots:
            for b in self.sub_roots:
                s = add_vectors(a.coords, b.coords)
                if self.ambient.contains_vector(s) and Root(s) not in sub:
                    return False
        return True


def _blocks(n: int, m: int) -> Tuple[range, range]:
    return range(n), range(n, n + m)


def build_pair(spec: SpaceSpec) -> MaxRankPair:
    """Ambient root system plus the subsystem of the isotropy subalgebra.

    Index blocks follow the Grassmannian conventions: the first ``n``
    coordinates belong to the first factor of H, the next ``m`` to the second.
    """
    if not isinstance(spec, SpaceSpec):
        raise InputError(f"expected a SpaceSpec, got {type(spec).__name__}")
    fam, n, m = spec.family, spec.n, spec.m
    dim = n + m
    first, second = _blocks(n, m)
    applicable = True
    if fam == "DGrass":
        ambient = build_root_system("D", dim)
        sub = [*long_pairs(first, dim), *long_pairs(second, dim)]
    elif fam == "BGrass":
        ambient = build_root_system("B", dim)
        sub = [*long_pairs(first, dim), *long_pairs(second, dim), *short_units(second, dim)]
    elif fam == "CGrass":
        ambient = build_root_system("C", dim)
        sub = [
            *long_pairs(first, dim), *short_units(first, dim, 2),
            *long_pairs(second, dim), *short_units(second, dim, 2),
        ]
    elif fam == "AGrass":
        ambient = build_root_system("A", dim - 1)
        sub = [*type_a_roots(first, dim), *type_a_roots(second, dim)]
        applicable = False
    elif fam == "F4_SO9":
        ambient = build_root_system("F4", 4)
        sub = [*long_pairs(range(4), 4), *short_units(range(4), 4)]
    else:
        ambient = build_root_system("G2", 2)
        sub = [r for r in ambient.roots if r.norm2() == 6]
    return MaxRankPair(ambient, tuple(sorted(set(sub))), spec, applicable)


def complement(pair: MaxRankPair) -> List[Root]:
    """Roots of the isotropy complement, in the ambient's lexicographic order."""
    return list(pair.complement_roots)


def wall_violations(t0: Sequence, roots: Sequence[Root]) -> List[Root]:
    """Roots whose wall contains ``t0`` (those with ``alpha(t0) = 0``)."""
    return [r for r in roots if root_eval(r, t0) == 0]


def positive_representatives(roots: Sequence[Root]) -> List[Root]:
    """One root from each ``±`` pair, the one whose leading coordinate is positive."""
    return [r for r in roots if r.is_positive()]

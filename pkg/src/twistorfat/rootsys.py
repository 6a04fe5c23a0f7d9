"""Exact root systems of types A, B, C, D, G2 and F4.

Roots live in rational coordinates. Type A_{n-1} and G2 use the sum-zero
hyperplane of Q^n (resp. Q^3), so no radicals appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Sequence, Tuple

from .errors import InputError
from .exact import as_vector

FAMILIES = ("A", "B", "C", "D", "G2", "F4")


@dataclass(frozen=True, order=True)
class Root:
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", as_vector(self.coords))
        if not any(self.coords):
            raise InputError("the zero vector is not a root")

    @classmethod
    def of(cls, *values) -> "Root":
        return cls(tuple(values))

    def __neg__(self) -> "Root":
        return Root(tuple(-x for x in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def norm2(self) -> Fraction:
        return sum((x * x for x in self.coords), Fraction(0))

    def is_positive(self) -> bool:
        """First nonzero coordinate is positive."""
        return next(x for x in self.coords if x) > 0

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


def add_vectors(a: Sequence[Fraction], b: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    coord_dim: int
    roots: Tuple[Root, ...]

    def __contains__(self, item) -> bool:
        return item in self._set

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def contains_vector(self, coords: Sequence[Fraction]) -> bool:
        return any(coords) and Root(tuple(coords)) in self._set


def _unit(dim: int, i: int, scale=1) -> list:
    v = [Fraction(0)] * dim
    v[i] = Fraction(scale)
    return v


def long_pairs(indices: Sequence[int], dim: int) -> Iterable[Root]:
    """All ``±e_s ± e_t`` with ``s < t`` drawn from ``indices``."""
    for s, t in combinations(indices, 2):
        for a, b in product((1, -1), repeat=2):
            v = _unit(dim, s, a)
            v[t] = Fraction(b)
            yield Root(tuple(v))


def short_units(indices: Sequence[int], dim: int, scale=1) -> Iterable[Root]:
    """All ``±scale * e_s`` for ``s`` in ``indices``."""
    for s in indices:
        for a in (scale, -scale):
            yield Root(tuple(_unit(dim, s, a)))


def type_a_roots(indices: Sequence[int], dim: int) -> Iterable[Root]:
    """All ``e_s - e_t`` with ``s != t`` drawn from ``indices``."""
    for s, t in permutations(indices, 2):
        v = _unit(dim, s)
        v[t] = Fraction(-1)
        yield Root(tuple(v))


def _g2_roots() -> Iterable[Root]:
    yield from type_a_roots(range(3), 3)
    for i in range(3):
        v = [Fraction(-1)] * 3
        v[i] = Fraction(2)
        yield Root(tuple(v))
        yield -Root(tuple(v))


def _f4_roots() -> Iterable[Root]:
    yield from long_pairs(range(4), 4)
    yield from short_units(range(4), 4)
    for signs in product((1, -1), repeat=4):
        yield Root(tuple(Fraction(s, 2) for s in signs))


@lru_cache(maxsize=64)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Full root set of the given type, sorted lexicographically on coordinates."""
    if family not in FAMILIES:
        raise InputError(f"unknown root system family {family!r}; expected one of {FAMILIES}")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InputError(f"rank must be an integer, got {rank!r}")
    if family == "G2" and rank != 2:
        raise InputError("G2 has rank 2")
    if family == "F4" and rank != 4:
        raise InputError("F4 has rank 4")
    if family == "D" and rank < 2:
        raise InputError("type D requires rank >= 2")
    if rank < 1:
        raise InputError("rank must be positive")

    if family == "A":
        dim = rank + 1
        roots = type_a_roots(range(dim), dim)
    elif family == "B":
        dim = rank
        roots = (*long_pairs(range(dim), dim), *short_units(range(dim), dim))
    elif family == "C":
        dim = rank
        roots = (*long_pairs(range(dim), dim), *short_units(range(dim), dim, scale=2))
    elif family == "D":
        dim = rank
        roots = long_pairs(range(dim), dim)
    elif family == "G2":
        dim = 3
        roots = _g2_roots()
    else:
        dim = 4
        roots = _f4_roots()
    return RootSystem(family, rank, dim, tuple(sorted(set(roots))))


def root_eval(alpha: Root, t0: Sequence) -> Fraction:
    """The pairing ``<alpha, t0>``; with ``T = i*t0`` this is ``alpha(T)/i``."""
    t = as_vector(t0)
    if len(t) != len(alpha.coords):
        raise InputError(f"dimension mismatch: root has {len(alpha.coords)} coordinates, t0 has {len(t)}")
    return sum((a * x for a, x in zip(alpha.coords, t) if a and x), Fraction(0))


def expected_count(family: str, rank: int) -> int:
    return {
        "A": lambda n: n * (n + 1),
        "B": lambda n: 2 * n * n,
        "C": lambda n: 2 * n * n,
        "D": lambda n: 2 * n * (n - 1),
        "G2": lambda n: 12,
        "F4": lambda n: 48,
    }[family](rank)

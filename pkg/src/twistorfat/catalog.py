"""The catalogued spaces, with closed-form twistor elements where one is known."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from .errors import InputError
from .maxrank import CONSTRAINTS, SpaceSpec

Vector = Tuple[Fraction, ...]

ONE, ZERO = Fraction(1), Fraction(0)


def _zeros_then_ones(n: int, m: int) -> Vector:
    return (ZERO,) * n + (ONE,) * m


def _ones_then_zeros(n: int, m: int) -> Vector:
    return (ONE,) * n + (ZERO,) * m


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    title: str
    closed_form_t0: Optional[Callable[[int, int], Vector]]
    formula: str
    constraints: Tuple[str, ...]
    status_note: str

    @property
    def has_t0(self) -> bool:
        return self.closed_form_t0 is not None


_ENTRIES = (
    CatalogEntry(
        "DGrass",
        "SO(2n+2m)/SO(2n)×SO(2m)",
        _zeros_then_ones,
        "t0 = (0^n, 1^m)",
        tuple(c[0] for c in CONSTRAINTS["DGrass"]),
        "symplectically fat; T supported on the SO(2m) factor",
    ),
    CatalogEntry(
        "BGrass",
        "SO(2n+2m+1)/SO(2n)×SO(2m+1)",
        _ones_then_zeros,
        "t0 = (1^n, 0^m)",
        tuple(c[0] for c in CONSTRAINTS["BGrass"]),
        "symplectically fat; T supported on the SO(2n) factor",
    ),
    CatalogEntry(
        "CGrass",
        "Sp(n+m)/Sp(n)×Sp(m)",
        _zeros_then_ones,
        "t0 = (0^n, 1^m)",
        tuple(c[0] for c in CONSTRAINTS["CGrass"]),
        "symplectically fat; T supported on the Sp(m) factor",
    ),
    CatalogEntry(
        "AGrass",
        "U(n+m)/U(n)×U(m)",
        None,
        "none",
        tuple(c[0] for c in CONSTRAINTS["AGrass"]),
        "not applicable: Kaehler, Weinstein Thm 3.3",
    ),
    CatalogEntry(
        "F4_SO9",
        "F4/SO(9)",
        lambda n, m: (Fraction(2), ZERO, ZERO, ZERO),
        "t0 = (2, 0, 0, 0)",
        (),
        "symplectically fat; root-level certificate only",
    ),
    CatalogEntry(
        "G2_SU3",
        "G2/SU(3)",
        None,
        "none",
        (),
        "asserted fat in the literature without a construction; "
        "the ±i linear system is infeasible for the long-root SU(3) split (see certificate)",
    ),
)


def list_entries() -> List[CatalogEntry]:
    return list(_ENTRIES)


def get_entry(family: str) -> CatalogEntry:
    for e in _ENTRIES:
        if e.family == family:
            return e
    raise InputError(f"unknown space family {family!r}; expected one of {', '.join(e.family for e in _ENTRIES)}")


def instantiate(entry: CatalogEntry, n: int = 0, m: int = 0) -> Tuple[SpaceSpec, Optional[Vector]]:
    """Concrete spec and closed-form ``t0`` (None when the entry has none)."""
    spec = SpaceSpec(entry.family, n, m)
    if entry.closed_form_t0 is None:
        return spec, None
    return spec, entry.closed_form_t0(spec.n, spec.m)


def closed_form_t0(spec: SpaceSpec) -> Optional[Vector]:
    return instantiate(get_entry(spec.family), spec.n, spec.m)[1]


def in_range_specs(entry: CatalogEntry, max_rank: int) -> List[SpaceSpec]:
    """All in-constraint specs of ``entry`` with ``n + m <= max_rank``.

    Exceptional entries are included when their ambient rank fits.
    """
    if entry.family in ("F4_SO9", "G2_SU3"):
        spec = SpaceSpec(entry.family)
        return [spec] if spec.ambient_rank <= max_rank else []
    out = []
    for total in range(1, max_rank + 1):
        for n in range(0, total + 1):
            try:
                out.append(SpaceSpec(entry.family, n, total - n))
            except InputError:
                continue
    return out

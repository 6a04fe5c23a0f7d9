"""Twistor elements and fatness certificates.

A twistor element is a Cartan element ``T = i*t0`` with ``alpha(t0) = ±1``
on every complement root. Such a T gives ``(ad T|_m)^2 = -id`` and avoids
every complement wall, which certifies that the twistor bundle over K/H is
symplectically fat.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import catalog
from .errors import InputError, OracleDisagreement
from .exact import Span, as_vector, dense_to_sparse, solve
from .maxrank import (
    CLASSICAL_WITH_MATRICES,
    MaxRankPair,
    SpaceSpec,
    build_pair,
    positive_representatives,
    wall_violations,
)
from .rootsys import Root, root_eval

log = logging.getLogger(__name__)

UNITS = (Fraction(1), Fraction(-1))

CERTIFIED = "certified"
INFEASIBLE = "infeasible"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class TwistorElement:
    t0: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "t0", as_vector(self.t0))

    def __len__(self) -> int:
        return len(self.t0)

    def __iter__(self):
        return iter(self.t0)


@dataclass(frozen=True)
class TwistorCheck:
    passed: bool
    offending: Tuple[Tuple[Root, Fraction], ...] = ()

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class InfeasibilityWitness:
    """Complement roots whose linear relations admit no ``±1`` assignment."""

    roots: Tuple[Root, ...]
    relations: Tuple[Tuple[Root, Tuple[Tuple[Root, Fraction], ...]], ...]

    def describe(self) -> List[str]:
        lines = []
        for target, combo in self.relations:
            rhs = " + ".join(
                (str(r) if c == 1 else f"{c}*{r}") for r, c in combo
            )
            lines.append(f"{target} = {rhs}")
        return lines


SolveResult = Union[TwistorElement, InfeasibilityWitness]


def verify_twistor_element(pair: MaxRankPair, t0: Sequence) -> TwistorCheck:
    """Pass iff every complement root takes the value +1 or -1 on ``t0``."""
    t = as_vector(t0)
    if len(t) != pair.ambient.coord_dim:
        raise InputError(f"t0 has {len(t)} coordinates, {pair.spec} needs {pair.ambient.coord_dim}")
    bad = []
    for alpha in pair.complement_roots:
        v = root_eval(alpha, t)
        if v not in UNITS:
            bad.append((alpha, v))
    return TwistorCheck(not bad, tuple(bad))


# ------------------------------------------------------------------ solving


@dataclass(frozen=True)
class _Step:
    root: Root
    # None for a root independent of the earlier ones, else its expansion in them
    combo: Optional[Dict[int, Fraction]]


def _plan(reps: Sequence[Root]) -> List[_Step]:
    span = Span()
    steps = []
    for r in reps:
        vec = dense_to_sparse(r.coords)
        coords = span.coords(vec)
        if coords is None:
            steps.append(_Step(r, None))
        else:
            steps.append(_Step(r, {i: c for i, c in enumerate(coords) if c}))
        span.add(vec)
    return steps


def _search_signs(reps: Sequence[Root]) -> Optional[List[Fraction]]:
    """Depth-first over free roots (+1 before -1); dependent roots are forced."""
    steps = _plan(reps)
    values: List[Fraction] = [Fraction(0)] * len(steps)

    def go(i: int) -> bool:
        if i == len(steps):
            return True
        combo = steps[i].combo
        if combo is not None:
            v = sum((c * values[j] for j, c in combo.items()), Fraction(0))
            if v not in UNITS:
                return False
            values[i] = v
            return go(i + 1)
        for s in UNITS:
            values[i] = s
            if go(i + 1):
                return True
        return False

    return values if go(0) else None


def _solve_for_signs(reps: Sequence[Root], values: Sequence[Fraction], dim: int) -> Tuple[Fraction, ...]:
    if not reps:
        return (Fraction(0),) * dim
    x = solve([list(r.coords) for r in reps], values)
    if x is None:  # the sign search only returns consistent assignments
        raise AssertionError("sign assignment is inconsistent")
    return tuple(x)


def _witness(reps: Sequence[Root]) -> InfeasibilityWitness:
    core = list(reps)
    for r in list(reps):
        trial = [x for x in core if x != r]
        if _search_signs(trial) is None:
            core = trial
    relations = []
    for step in _plan(core):
        if step.combo is not None:
            relations.append((step.root, tuple((core[j], c) for j, c in sorted(step.combo.items()))))
    return InfeasibilityWitness(tuple(core), tuple(relations))


def solve_twistor_element(pair: MaxRankPair, use_closed_form: bool = True) -> SolveResult:
    """Find ``t0`` with every complement value in ``{±1}``, or explain why none exists.

    The catalog's closed form is tried first. Otherwise one root per ``±``
    pair is taken; roots linearly dependent on earlier ones have their value
    forced, so only the independent ones are branched on.
    """
    if use_closed_form:
        t0 = catalog.closed_form_t0(pair.spec)
        if t0 is not None and verify_twistor_element(pair, t0):
            return TwistorElement(t0)
    reps = positive_representatives(pair.complement_roots)
    values = _search_signs(reps)
    if values is None:
        return _witness(reps)
    t0 = _solve_for_signs(reps, values, pair.ambient.coord_dim)
    if not verify_twistor_element(pair, t0):
        raise AssertionError(f"solver produced an invalid t0 for {pair.spec}")
    return TwistorElement(t0)


def brute_force_feasible(reps: Sequence[Root], dim: int) -> bool:
    """Try every sign pattern on ``reps`` directly; exponential, for cross-checks only."""
    from itertools import product

    if not reps:
        return True
    rows = [list(r.coords) for r in reps]
    return any(solve(rows, list(signs)) is not None for signs in product(UNITS, repeat=len(reps)))


# ------------------------------------------------------------ certificates


def fiber_description(dim_m: int) -> str:
    if not isinstance(dim_m, int) or isinstance(dim_m, bool) or dim_m <= 0 or dim_m % 2:
        raise InputError(f"fiber needs an even positive dimension, got {dim_m!r}")
    return f"SO({dim_m})/U({dim_m // 2})"


@dataclass(frozen=True)
class FatnessCertificate:
    spec: SpaceSpec
    dim_m: int
    root_counts: Tuple[int, int, int]
    t0: Optional[TwistorElement]
    status: str
    fiber: str
    oracle_report: Optional[object] = None
    witness: Optional[InfeasibilityWitness] = None
    note: str = ""
    warnings: Tuple[str, ...] = field(default=())

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED


def certify_fatness(spec: SpaceSpec, run_oracle: bool = False, use_closed_form: bool = True) -> FatnessCertificate:
    """Build the pair, look for a twistor element and assemble the certificate.

    With ``run_oracle`` the matrix-level checks are attached for the
    classical families and must agree with the root-level verdict.
    """
    pair = build_pair(spec)
    comp = pair.complement_roots
    counts = (len(pair.ambient.roots), len(pair.sub_roots), len(comp))
    dim_m = len(comp)
    fiber = fiber_description(dim_m)
    entry = catalog.get_entry(spec.family)
    warnings: List[str] = []
    if run_oracle and spec.family not in CLASSICAL_WITH_MATRICES:
        warnings.append(f"no matrix realization for {spec.family}; oracle skipped, root-level certificate only")

    if not pair.applicable:
        return FatnessCertificate(
            spec, dim_m, counts, None, NOT_APPLICABLE, fiber,
            note="Kaehler, Weinstein Thm 3.3", warnings=tuple(warnings),
        )

    result = solve_twistor_element(pair, use_closed_form=use_closed_form)
    if isinstance(result, InfeasibilityWitness):
        return FatnessCertificate(
            spec, dim_m, counts, None, INFEASIBLE, fiber,
            witness=result, note=entry.status_note, warnings=tuple(warnings),
        )

    assert not wall_violations(result.t0, comp)
    report = None
    if run_oracle and spec.family in CLASSICAL_WITH_MATRICES:
        from .matlie import run_oracle as _oracle

        log.info("running matrix oracle for %s", spec)
        report = _oracle(spec, result.t0)
        if not report.concurs:
            raise OracleDisagreement(f"matrix oracle rejects t0={result.t0} for {spec}: {report}")
    return FatnessCertificate(
        spec, dim_m, counts, result, CERTIFIED, fiber,
        oracle_report=report, note=entry.status_note, warnings=tuple(warnings),
    )

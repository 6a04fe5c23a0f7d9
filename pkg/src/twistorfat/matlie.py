"""Matrix realizations of so(N) and sp(N) with exact structure constants.

This is the brute-force side of the certificate: it never looks at roots.
The Killing form comes from traces of adjoint matrices, m is the
Killing-orthogonal complement of h, and the fatness of T is read off the
2-form ``omega(X, Y) = B(T, [X, Y])`` on m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InputError
from .exact import (
    ONE,
    ZERO,
    ExactMatrix,
    Matrix,
    Span,
    as_vector,
    bracket,
    combine,
    dense_to_sparse,
    det,
    identity,
    matmul,
    nullspace,
    pfaffian,
    rank,
    transpose,
)
from .maxrank import CLASSICAL_WITH_MATRICES, SpaceSpec

SparseCoords = Dict[int, Fraction]

I_UNIT = (ZERO, ONE)


def so_basis(size: int) -> List[Tuple[ExactMatrix, Tuple[int, int]]]:
    """``E_st - E_ts`` for ``s < t``, tagged with ``(s, t)``."""
    return [
        (ExactMatrix(size, {(s, t): (ONE, ZERO), (t, s): (-ONE, ZERO)}), (s, t))
        for s, t in combinations(range(size), 2)
    ]


def sp_basis(rank_: int) -> List[Tuple[ExactMatrix, Tuple[int, int]]]:
    """Real basis of the compact form ``sp(N)`` inside ``u(2N)``.

    Elements are ``[[A, B], [-conj(B), conj(A)]]`` with A anti-Hermitian and
    B complex symmetric. Each is tagged with the index pair ``(s, t)`` it
    touches in ``{0..N-1}``.
    """
    n = rank_
    size = 2 * n
    out = []

    def block(a: Dict, b: Dict) -> ExactMatrix:
        e = {}
        for (s, t), (re, im) in a.items():
            e[(s, t)] = (re, im)
            e[(n + s, n + t)] = (re, -im)
        for (s, t), (re, im) in b.items():
            e[(s, n + t)] = (re, im)
            e[(n + s, t)] = (-re, im)
        return ExactMatrix(size, e)

    for s in range(n):
        out.append((block({(s, s): I_UNIT}, {}), (s, s)))
    for s, t in combinations(range(n), 2):
        out.append((block({(s, t): (ONE, ZERO), (t, s): (-ONE, ZERO)}, {}), (s, t)))
        out.append((block({(s, t): I_UNIT, (t, s): I_UNIT}, {}), (s, t)))
    for s in range(n):
        out.append((block({}, {(s, s): (ONE, ZERO)}), (s, s)))
        out.append((block({}, {(s, s): I_UNIT}), (s, s)))
    for s, t in combinations(range(n), 2):
        out.append((block({}, {(s, t): (ONE, ZERO), (t, s): (ONE, ZERO)}), (s, t)))
        out.append((block({}, {(s, t): I_UNIT, (t, s): I_UNIT}), (s, t)))
    return out


@dataclass(eq=False)
class MatrixAlgebra:
    spec: SpaceSpec
    size: int
    k_basis: Tuple[ExactMatrix, ...]
    h_index_set: Tuple[int, ...]
    m_basis: Tuple[ExactMatrix, ...]
    m_coords: Tuple[Tuple[Fraction, ...], ...]
    killing: Matrix
    structure: List[List[SparseCoords]]
    _k_span: Span
    _m_span: Span

    @property
    def dim_k(self) -> int:
        return len(self.k_basis)

    @property
    def dim_h(self) -> int:
        return len(self.h_index_set)

    @property
    def dim_m(self) -> int:
        return len(self.m_basis)

    def coords(self, x: ExactMatrix) -> List[Fraction]:
        if x.n != self.size:
            raise InputError(f"matrix is {x.n}x{x.n}, algebra acts on {self.size}")
        c = self._k_span.coords(x.as_real_vector())
        if c is None:
            raise InputError("matrix is not in the algebra")
        return c

    def in_h(self, coords: Sequence[Fraction]) -> bool:
        h = set(self.h_index_set)
        return all(not c or i in h for i, c in enumerate(coords))

    def ad(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> List[Fraction]:
        """Coordinates of ``[x, y]`` from structure constants."""
        out = [ZERO] * self.dim_k
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.structure[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j].items():
                    out[k] += ab * c
        return out

    def killing_of(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        total = ZERO
        for i, a in enumerate(x):
            if a:
                row = self.killing[i]
                total += a * sum((row[j] * b for j, b in enumerate(y) if b and row[j]), ZERO)
        return total

    def m_components(self, v: Sequence[Fraction]) -> Optional[List[Fraction]]:
        """Coordinates of a k-vector in the m basis, or None if it leaves m."""
        return self._m_span.coords(dense_to_sparse(v))


def _h_tags(spec: SpaceSpec) -> Tuple[List[int], int, str]:
    n, m = spec.n, spec.m
    if spec.family == "DGrass":
        return [2 * n, 2 * m], 2 * n + 2 * m, "so"
    if spec.family == "BGrass":
        return [2 * n, 2 * m + 1], 2 * n + 2 * m + 1, "so"
    return [n, m], n + m, "sp"


def _same_block(s: int, t: int, sizes: Sequence[int]) -> bool:
    edge = sizes[0]
    return (s < edge) == (t < edge)


@lru_cache(maxsize=16)
def build_matrix_algebra(spec: SpaceSpec) -> MatrixAlgebra:
    """Matrix model of k with h block-diagonal and m its Killing complement."""
    if not isinstance(spec, SpaceSpec) or spec.family not in CLASSICAL_WITH_MATRICES:
        fam = getattr(spec, "family", spec)
        raise InputError(f"no matrix realization for {fam}; only {', '.join(CLASSICAL_WITH_MATRICES)}")
    sizes, order, kind = _h_tags(spec)
    tagged = so_basis(order) if kind == "so" else sp_basis(order)
    basis = tuple(b for b, _ in tagged)
    size = basis[0].n
    h_idx = tuple(i for i, (_, (s, t)) in enumerate(tagged) if _same_block(s, t, sizes))

    k_span, structure, killing = lie_data(basis)
    dim = len(basis)
    m_vecs = nullspace([killing[i] for i in h_idx], dim)
    m_coords = tuple(tuple(v) for v in m_vecs)
    m_basis = tuple(combine(v, basis) for v in m_vecs)
    m_span = Span(dense_to_sparse(v) for v in m_vecs)
    return MatrixAlgebra(spec, size, basis, h_idx, m_basis, m_coords, killing, structure, k_span, m_span)


def lie_data(basis: Sequence[ExactMatrix]) -> Tuple[Span, List[List[SparseCoords]], Matrix]:
    """Coordinate span, structure constants and Killing Gram matrix of a matrix basis."""
    k_span = Span(b.as_real_vector() for b in basis)
    if k_span.dim != len(basis):
        raise InputError("basis is linearly dependent")
    dim = len(basis)
    structure: List[List[SparseCoords]] = [[{} for _ in range(dim)] for _ in range(dim)]
    for i, j in combinations(range(dim), 2):
        c = k_span.coords(bracket(basis[i], basis[j]).as_real_vector())
        if c is None:
            raise InputError("basis does not close under the bracket")
        sparse = dense_to_sparse(c)
        structure[i][j] = sparse
        structure[j][i] = {k: -v for k, v in sparse.items()}
    return k_span, structure, _killing_from_structure(structure)


def _killing_from_structure(structure: List[List[SparseCoords]]) -> Matrix:
    # B(e_i, e_k) = tr(ad e_i ad e_k) = sum_{j,l} c[i][j][l] * c[k][l][j]
    dim = len(structure)
    gram = [[ZERO] * dim for _ in range(dim)]
    for i in range(dim):
        ci = structure[i]
        for k in range(i, dim):
            ck = structure[k]
            total = ZERO
            for j in range(dim):
                for l, a in ci[j].items():
                    b = ck[l].get(j)
                    if b:
                        total += a * b
            gram[i][k] = gram[k][i] = total
    return gram


def killing_gram(alg: MatrixAlgebra) -> Matrix:
    return [list(row) for row in alg.killing]


def trace_form_gram(alg: MatrixAlgebra) -> Matrix:
    """``Re tr(XY)`` on basis pairs; only used to cross-check the Killing form."""
    return [[(x @ y).trace()[0] for y in alg.k_basis] for x in alg.k_basis]


def bracket_closure_defects(alg: MatrixAlgebra) -> List[Tuple[int, int]]:
    """Pairs ``(h_i, m_j)`` whose bracket leaves m; empty means ``[h, m] ⊆ m``."""
    bad = []
    for i in alg.h_index_set:
        e_i = [ONE if a == i else ZERO for a in range(alg.dim_k)]
        for j, mv in enumerate(alg.m_coords):
            if alg.m_components(alg.ad(e_i, mv)) is None:
                bad.append((i, j))
    return bad


def orthogonality_defects(alg: MatrixAlgebra) -> List[Tuple[int, int]]:
    bad = []
    for i in alg.h_index_set:
        e_i = [ONE if a == i else ZERO for a in range(alg.dim_k)]
        for j, mv in enumerate(alg.m_coords):
            if alg.killing_of(e_i, mv):
                bad.append((i, j))
    return bad


def embed_cartan_element(t0: Sequence, alg: MatrixAlgebra) -> ExactMatrix:
    """The matrix of ``T = i*t0`` in the standard maximal torus.

    so(N): coordinate s drives the rotation generator in the plane
    ``(2s, 2s+1)``; sp(N): ``diag(i*c, -i*c)``.
    """
    t = as_vector(t0)
    r = alg.spec.n + alg.spec.m
    if len(t) != r:
        raise InputError(f"t0 has {len(t)} entries, the torus of {alg.spec} has rank {r}")
    entries = {}
    if alg.spec.family in ("DGrass", "BGrass"):
        for s, c in enumerate(t):
            if c:
                entries[(2 * s, 2 * s + 1)] = (c, ZERO)
                entries[(2 * s + 1, 2 * s)] = (-c, ZERO)
    else:
        for s, c in enumerate(t):
            if c:
                entries[(s, s)] = (ZERO, c)
                entries[(r + s, r + s)] = (ZERO, -c)
    mat = ExactMatrix(alg.size, entries)
    if not alg.in_h(alg.coords(mat)):
        raise InputError("T does not lie in h")
    return mat


def _t_coords(alg: MatrixAlgebra, T: ExactMatrix) -> List[Fraction]:
    c = alg.coords(T)
    if not alg.in_h(c):
        raise InputError("T does not lie in h")
    return c


def ad_restricted(alg: MatrixAlgebra, T: ExactMatrix) -> Matrix:
    """Matrix of ``ad T`` on m in the m basis (column j is the image of m_j)."""
    t = _t_coords(alg, T)
    cols = []
    for mv in alg.m_coords:
        img = alg.m_components(alg.ad(t, mv))
        if img is None:
            raise AssertionError("ad T does not preserve m")
        cols.append(img)
    return transpose(cols) if cols else []


def killing_on_m(alg: MatrixAlgebra) -> Matrix:
    return [[alg.killing_of(a, b) for b in alg.m_coords] for a in alg.m_coords]


@dataclass(frozen=True)
class ComplexStructureCheck:
    square_ok: bool
    skew_ok: bool

    @property
    def passed(self) -> bool:
        return self.square_ok and self.skew_ok

    def __bool__(self) -> bool:
        return self.passed


def check_complex_structure(alg: MatrixAlgebra, T: ExactMatrix) -> ComplexStructureCheck:
    """``(ad T|_m)^2 = -id`` together with Killing-skewness of ``ad T`` on m."""
    a = ad_restricted(alg, T)
    n = alg.dim_m
    sq = matmul(a, a)
    minus_id = [[-x for x in row] for row in identity(n)]
    g = killing_on_m(alg)
    # B(aX, Y) + B(X, aY) = 0  <=>  a^T g + g a = 0
    lhs = matmul(transpose(a), g)
    rhs = matmul(g, a)
    skew = all(lhs[i][j] + rhs[i][j] == 0 for i in range(n) for j in range(n))
    return ComplexStructureCheck(sq == minus_id, skew)


def fatness_form(alg: MatrixAlgebra, T: ExactMatrix) -> Matrix:
    """``omega[i][j] = B(T, [m_i, m_j])``; non-degenerate iff T is fat."""
    if alg.dim_m % 2:
        raise InputError(f"dim m = {alg.dim_m} is odd")
    t = _t_coords(alg, T)
    # B(T, .) as a linear functional on k-coordinates
    functional = [sum((a * alg.killing[i][k] for i, a in enumerate(t) if a), ZERO) for k in range(alg.dim_k)]
    n = alg.dim_m
    omega = [[ZERO] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        br = alg.ad(alg.m_coords[i], alg.m_coords[j])
        v = sum((f * b for f, b in zip(functional, br) if f and b), ZERO)
        omega[i][j], omega[j][i] = v, -v
    return omega


@dataclass(frozen=True)
class OracleReport:
    dim_k: int
    dim_h: int
    dim_m: int
    bracket_closed: bool
    killing_orthogonal: bool
    adT_square_ok: bool
    killing_skew_ok: bool
    adT_rank: int
    fatness_det: Fraction
    fatness_pfaffian: Fraction

    @property
    def fatness_det_nonzero(self) -> bool:
        return self.fatness_det != 0

    @property
    def concurs(self) -> bool:
        return (
            self.bracket_closed and self.killing_orthogonal and self.adT_square_ok
            and self.killing_skew_ok and self.fatness_det_nonzero
        )


def run_oracle(spec: SpaceSpec, t0: Sequence) -> OracleReport:
    alg = build_matrix_algebra(spec)
    T = embed_cartan_element(t0, alg)
    cs = check_complex_structure(alg, T)
    omega = fatness_form(alg, T)
    return OracleReport(
        dim_k=alg.dim_k,
        dim_h=alg.dim_h,
        dim_m=alg.dim_m,
        bracket_closed=not bracket_closure_defects(alg),
        killing_orthogonal=not orthogonality_defects(alg),
        adT_square_ok=cs.square_ok,
        killing_skew_ok=cs.skew_ok,
        adT_rank=rank(ad_restricted(alg, T)),
        fatness_det=det(omega),
        fatness_pfaffian=pfaffian(omega),
    )

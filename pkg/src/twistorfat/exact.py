"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`. Complex matrices are
stored sparsely with Gaussian-rational entries ``(re, im)``; real matrices are
plain lists of lists. Nothing in this module ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import InputError

Q = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

Matrix = List[List[Fraction]]
Sparse = Dict[Hashable, Fraction]


# ---------------------------------------------------------------- rationals


def as_rational(value) -> Fraction:
    """Coerce int/str/Fraction to Fraction; floats are rejected."""
    if type(value) is Fraction:
        return value
    if isinstance(value, float):
        raise InputError(f"floats are not exact: {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"not a rational number: {value!r}") from exc


def as_vector(values: Iterable) -> Tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


def format_rational(q: Fraction) -> str:
    """Always ``"p/q"``, including integers (``"2/1"``)."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return as_rational(text.strip())


# ------------------------------------------------------- dense real matrices


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in bt] for row in a]


def det(a: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise InputError("determinant of a non-square matrix")
    m = [list(map(Fraction, row)) for row in a]
    result = ONE
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            result = -result
        p = m[k][k]
        result *= p
        for i in range(k + 1, n):
            f = m[i][k]
            if f:
                f /= p
                row_i, row_k = m[i], m[k]
                for j in range(k + 1, n):
                    if row_k[j]:
                        row_i[j] -= f * row_k[j]
    return result


def pfaffian(a: Sequence[Sequence[Fraction]]) -> Fraction:
    """Pfaffian of an antisymmetric matrix by skew-congruent elimination.

    After clearing row ``k`` beyond column ``k+1`` the expansion along that
    row has a single term, so ``pf(A) = a[k][k+1] * pf(trailing block)``.
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise InputError("pfaffian of a non-square matrix")
    if n % 2:
        return ZERO
    m = [list(map(Fraction, row)) for row in a]
    for i in range(n):
        for j in range(i, n):
            if m[i][j] != -m[j][i]:
                raise InputError("pfaffian needs an antisymmetric matrix")
    result = ONE
    for k in range(0, n, 2):
        pivot = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != k + 1:
            _swap_sym(m, k + 1, pivot)
            result = -result
        p = m[k][k + 1]
        result *= p
        for i in range(k + 2, n):
            c = m[k][i]
            if c:
                c /= p
                # column i -= c * column k+1, row i -= c * row k+1
                for r in range(n):
                    if m[r][k + 1]:
                        m[r][i] -= c * m[r][k + 1]
                for s in range(n):
                    if m[k + 1][s]:
                        m[i][s] -= c * m[k + 1][s]
    return result


def _swap_sym(m: Matrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]
    for row in m:
        row[i], row[j] = row[j], row[i]


def rref(a: Sequence[Sequence[Fraction]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(map(Fraction, row)) for row in a]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(a)[1]) if a else 0


def nullspace(a: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> Matrix:
    """Basis of ``{x : A x = 0}`` from the RREF, one vector per free column."""
    if not a:
        if ncols is None:
            raise InputError("nullspace of an empty matrix needs ncols")
        return identity(ncols)
    red, pivots = rref(a)
    n = len(red[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """One exact solution of ``A x = b`` (free variables set to 0), or None."""
    if not a:
        raise InputError("empty system")
    n = len(a[0])
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [ZERO] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return x


class Span:
    """Incremental echelon basis over sparse vectors, with coordinate recovery.

    Vectors are mappings ``key -> Fraction``. ``coords(v)`` returns the
    coefficients of ``v`` with respect to the *original* generators, or None
    when ``v`` is outside the span.
    """

    def __init__(self, generators: Iterable[Mapping[Hashable, Fraction]] = ()):
        self._reduced: List[Tuple[Hashable, Sparse, Dict[int, Fraction]]] = []
        self.size = 0
        self.independent: List[int] = []
        for g in generators:
            self.add(g)

    def _reduce(self, v: Mapping[Hashable, Fraction]) -> Tuple[Sparse, Dict[int, Fraction]]:
        res = {k: Fraction(x) for k, x in v.items() if x}
        combo: Dict[int, Fraction] = {}
        for pivot, vec, tr in self._reduced:
            c = res.get(pivot)
            if not c:
                continue
            c = c / vec[pivot]
            for k, x in vec.items():
                y = res.get(k, ZERO) - c * x
                if y:
                    res[k] = y
                else:
                    res.pop(k, None)
            for i, x in tr.items():
                combo[i] = combo.get(i, ZERO) + c * x
        return res, combo

    def add(self, v: Mapping[Hashable, Fraction]) -> bool:
        """Append a generator; return True if it enlarged the span."""
        index = self.size
        self.size += 1
        res, combo = self._reduce(v)
        if not res:
            return False
        tr = {i: -x for i, x in combo.items() if x}
        tr[index] = ONE
        pivot = min(res, key=_sort_key)
        self._reduced.append((pivot, res, tr))
        self.independent.append(index)
        return True

    @property
    def dim(self) -> int:
        return len(self._reduced)

    def contains(self, v: Mapping[Hashable, Fraction]) -> bool:
        return not self._reduce(v)[0]

    def coords(self, v: Mapping[Hashable, Fraction]) -> Optional[List[Fraction]]:
        res, combo = self._reduce(v)
        if res:
            return None
        out = [ZERO] * self.size
        for i, x in combo.items():
            out[i] += x
        return out


def _sort_key(k):
    return repr(k) if not isinstance(k, (int, tuple)) else k


def dense_to_sparse(v: Sequence[Fraction]) -> Sparse:
    return {i: x for i, x in enumerate(v) if x}


# ------------------------------------------- sparse Gaussian-rational matrices

Entry = Tuple[Fraction, Fraction]


def _cmul(a: Entry, b: Entry) -> Entry:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


class ExactMatrix:
    """Square matrix with exact Gaussian-rational entries, stored sparsely."""

    __slots__ = ("n", "_e")

    def __init__(self, n: int, entries: Optional[Mapping[Tuple[int, int], Entry]] = None):
        self.n = n
        e: Dict[Tuple[int, int], Entry] = {}
        for (r, c), (re, im) in (entries or {}).items():
            if not (0 <= r < n and 0 <= c < n):
                raise InputError(f"entry ({r},{c}) outside a {n}x{n} matrix")
            re, im = Fraction(re), Fraction(im)
            if re or im:
                e[(r, c)] = (re, im)
        self._e = e

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls(n)

    @classmethod
    def unit(cls, n: int, r: int, c: int, value: Entry = (ONE, ZERO)) -> "ExactMatrix":
        return cls(n, {(r, c): value})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        """Build from nested rows of ints, Fractions or ``(re, im)`` pairs."""
        n = len(rows)
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != n:
                raise InputError("matrix must be square")
            for c, x in enumerate(row):
                entries[(r, c)] = x if isinstance(x, tuple) else (x, 0)
        return cls(n, entries)

    def entries(self) -> Dict[Tuple[int, int], Entry]:
        return dict(self._e)

    def __getitem__(self, rc: Tuple[int, int]) -> Entry:
        return self._e.get(rc, (ZERO, ZERO))

    def _check(self, other: "ExactMatrix") -> None:
        if self.n != other.n:
            raise InputError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        out = dict(self._e)
        for k, (re, im) in other._e.items():
            a = out.get(k, (ZERO, ZERO))
            out[k] = (a[0] + re, a[1] + im)
        return ExactMatrix(self.n, out)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.n, {k: (-re, -im) for k, (re, im) in self._e.items()})

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scale(self, re, im=0) -> "ExactMatrix":
        z = (Fraction(re), Fraction(im))
        return ExactMatrix(self.n, {k: _cmul(z, v) for k, v in self._e.items()})

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        rows: Dict[int, List[Tuple[int, Entry]]] = {}
        for (r, c), v in other._e.items():
            rows.setdefault(r, []).append((c, v))
        out: Dict[Tuple[int, int], Entry] = {}
        for (r, k), a in self._e.items():
            for c, b in rows.get(k, ()):
                p = _cmul(a, b)
                acc = out.get((r, c), (ZERO, ZERO))
                out[(r, c)] = (acc[0] + p[0], acc[1] + p[1])
        return ExactMatrix(self.n, out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.n, {(c, r): v for (r, c), v in self._e.items()})

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix(self.n, {k: (re, -im) for k, (re, im) in self._e.items()})

    def adjoint(self) -> "ExactMatrix":
        return self.transpose().conjugate()

    def trace(self) -> Entry:
        re = sum((v[0] for (r, c), v in self._e.items() if r == c), ZERO)
        im = sum((v[1] for (r, c), v in self._e.items() if r == c), ZERO)
        return (re, im)

    def is_zero(self) -> bool:
        return not self._e

    def as_real_vector(self) -> Sparse:
        """Flatten to a sparse real vector keyed by ``(row, col, part)``."""
        out: Sparse = {}
        for (r, c), (re, im) in self._e.items():
            if re:
                out[(r, c, 0)] = re
            if im:
                out[(r, c, 1)] = im
        return out

    def to_rows(self) -> List[List[Entry]]:
        return [[self[(r, c)] for c in range(self.n)] for r in range(self.n)]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.n == other.n and self._e == other._e

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._e.items())))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.n}, {len(self._e)} nonzeros)"


def bracket(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    """Commutator ``XY - YX``."""
    return x @ y - y @ x


def combine(coeffs: Sequence[Fraction], basis: Sequence[ExactMatrix]) -> ExactMatrix:
    """Real linear combination of matrices."""
    if len(coeffs) != len(basis):
        raise InputError("coefficient count does not match basis size")
    if not basis:
        raise InputError("empty basis")
    out = ExactMatrix.zeros(basis[0].n)
    for c, b in zip(coeffs, basis):
        if c:
            out = out + b.scale(c)
    return out

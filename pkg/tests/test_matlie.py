import random
import zlib
from fractions import Fraction

import numpy as np
import pytest

from twistorfat.errors import InputError
from twistorfat.exact import ExactMatrix, bracket, det, rank
from twistorfat.maxrank import SpaceSpec, build_pair, complement, wall_violations
from twistorfat.matlie import (
    ad_restricted,
    bracket_closure_defects,
    build_matrix_algebra,
    check_complex_structure,
    embed_cartan_element,
    fatness_form,
    killing_gram,
    lie_data,
    orthogonality_defects,
    so_basis,
    trace_form_gram,
)
from twistorfat.rootsys import root_eval
from twistorfat.twistor import verify_twistor_element

F = Fraction
ORACLE_SPECS = [SpaceSpec("BGrass", 2, 0), SpaceSpec("CGrass", 1, 1), SpaceSpec("CGrass", 2, 1), SpaceSpec("DGrass", 2, 2)]


def to_numpy(x: ExactMatrix) -> np.ndarray:
    a = np.zeros((x.n, x.n), dtype=complex)
    for (r, c), (re, im) in x.entries().items():
        a[r, c] = float(re) + 1j * float(im)
    return a


def numpy_ad_matrices(basis):
    """Float route: ad matrices from least squares on flattened matrices."""
    flat = np.array([np.concatenate([to_numpy(b).real.ravel(), to_numpy(b).imag.ravel()]) for b in basis]).T
    mats = [to_numpy(b) for b in basis]
    ads = []
    for x in mats:
        cols = []
        for y in mats:
            z = x @ y - y @ x
            coef, *_ = np.linalg.lstsq(flat, np.concatenate([z.real.ravel(), z.imag.ravel()]), rcond=None)
            cols.append(coef)
        ads.append(np.array(cols).T)
    return ads


@pytest.mark.parametrize("spec,dims", [
    (SpaceSpec("BGrass", 2, 0), (10, 6, 4)),
    (SpaceSpec("CGrass", 1, 1), (10, 6, 4)),
    (SpaceSpec("DGrass", 2, 2), (28, 12, 16)),
    (SpaceSpec("CGrass", 2, 1), (21, 13, 8)),
])
def test_dimensions(spec, dims):
    alg = build_matrix_algebra(spec)
    assert (alg.dim_k, alg.dim_h, alg.dim_m) == dims
    assert alg.dim_m == len(complement(build_pair(spec)))


@pytest.mark.parametrize("spec", ORACLE_SPECS, ids=str)
def test_basis_satisfies_defining_relations(spec):
    alg = build_matrix_algebra(spec)
    for x in alg.k_basis:
        if spec.family == "CGrass":
            n = alg.size // 2
            omega = ExactMatrix(alg.size, {**{(i, n + i): (1, 0) for i in range(n)}, **{(n + i, i): (-1, 0) for i in range(n)}})
            assert x.adjoint() == -x
            assert (x.transpose() @ omega + omega @ x).is_zero()
        else:
            assert x.transpose() == -x and all(im == 0 for _, im in x.entries().values())


def test_so3_bracket_by_hand():
    e12 = ExactMatrix(3, {(0, 1): (1, 0), (1, 0): (-1, 0)})
    e23 = ExactMatrix(3, {(1, 2): (1, 0), (2, 1): (-1, 0)})
    e13 = ExactMatrix(3, {(0, 2): (1, 0), (2, 0): (-1, 0)})
    assert bracket(e12, e23) == e13
    assert bracket(e23, e12) == -e13
    assert bracket(e12, e12).is_zero()
    with pytest.raises(InputError):
        bracket(e12, ExactMatrix.zeros(4))


def test_jacobi_on_random_triples():
    basis = build_matrix_algebra(SpaceSpec("CGrass", 2, 1)).k_basis
    rng = random.Random(7)
    for _ in range(40):
        x, y, z = (rng.choice(basis) for _ in range(3))
        assert (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero()


def test_so3_killing_value():
    basis = [b for b, _ in so_basis(3)]
    _, _, gram = lie_data(basis)
    assert gram[0][0] == -2  # X = E12 - E21
    assert gram == [[F(-2), 0, 0], [0, F(-2), 0], [0, 0, F(-2)]]


@pytest.mark.parametrize("spec,const", [
    (SpaceSpec("BGrass", 2, 0), 3),   # so(5): N - 2
    (SpaceSpec("DGrass", 2, 2), 6),   # so(8)
    (SpaceSpec("CGrass", 1, 1), 6),   # sp(2): 2N + 2
    (SpaceSpec("CGrass", 2, 1), 8),   # sp(3)
])
def test_killing_is_classical_multiple_of_trace_form(spec, const):
    alg = build_matrix_algebra(spec)
    g, t = killing_gram(alg), trace_form_gram(alg)
    assert g == [[const * x for x in row] for row in t]


@pytest.mark.parametrize("spec", ORACLE_SPECS[:3], ids=str)
def test_killing_against_float_ad_traces(spec):
    alg = build_matrix_algebra(spec)
    ads = numpy_ad_matrices(alg.k_basis)
    approx = np.array([[np.trace(a @ b) for b in ads] for a in ads])
    exact = np.array(killing_gram(alg), dtype=float)
    assert np.allclose(approx, exact, atol=1e-9)


@pytest.mark.parametrize("spec", ORACLE_SPECS, ids=str)
def test_killing_invariance_on_basis_triples(spec):
    alg = build_matrix_algebra(spec)
    st, g, d = alg.structure, alg.killing, alg.dim_k
    for z in range(d):
        for x in range(d):
            zx = st[z][x]
            for y in range(x, d):
                zy = st[z][y]
                lhs = sum(c * g[k][y] for k, c in zx.items()) + sum(c * g[x][k] for k, c in zy.items())
                assert lhs == 0


@pytest.mark.parametrize("spec", ORACLE_SPECS, ids=str)
def test_reductive_split(spec):
    alg = build_matrix_algebra(spec)
    assert bracket_closure_defects(alg) == []
    assert orthogonality_defects(alg) == []
    g = alg.killing
    assert det([[g[i][j] for j in alg.h_index_set] for i in alg.h_index_set]) != 0
    gm = [[alg.killing_of(a, b) for b in alg.m_coords] for a in alg.m_coords]
    assert det(gm) != 0


def test_embed_examples():
    alg = build_matrix_algebra(SpaceSpec("BGrass", 2, 0))
    T = embed_cartan_element((1, 1), alg)
    assert T == ExactMatrix.from_rows([
        [0, 1, 0, 0, 0], [-1, 0, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, -1, 0, 0], [0, 0, 0, 0, 0],
    ])
    assert embed_cartan_element((0, 0), alg).is_zero()
    c = build_matrix_algebra(SpaceSpec("CGrass", 1, 1))
    assert embed_cartan_element((0, 1), c) == ExactMatrix.from_rows([
        [0, 0, 0, 0], [0, (0, 1), 0, 0], [0, 0, 0, 0], [0, 0, 0, (0, -1)],
    ])
    with pytest.raises(InputError):
        embed_cartan_element((1, 1, 1), alg)


def test_non_h_element_rejected():
    alg = build_matrix_algebra(SpaceSpec("DGrass", 2, 2))
    with pytest.raises(InputError):
        check_complex_structure(alg, alg.m_basis[0])
    with pytest.raises(InputError):
        fatness_form(alg, alg.m_basis[0])


def test_exceptional_has_no_matrix_model():
    with pytest.raises(InputError):
        build_matrix_algebra(SpaceSpec("F4_SO9"))
    with pytest.raises(InputError):
        build_matrix_algebra(SpaceSpec("AGrass", 1, 1))


def test_complex_structure_examples():
    b = build_matrix_algebra(SpaceSpec("BGrass", 2, 0))
    assert check_complex_structure(b, embed_cartan_element((1, 1), b))
    c = build_matrix_algebra(SpaceSpec("CGrass", 1, 1))
    assert check_complex_structure(c, embed_cartan_element((0, 1), c))
    bad = check_complex_structure(b, embed_cartan_element((2, 1), b))
    assert not bad and not bad.square_ok and bad.skew_ok
    a = ad_restricted(b, embed_cartan_element((2, 1), b))
    sq_eigs = sorted(np.round(np.linalg.eigvals(np.array(a, dtype=float) @ np.array(a, dtype=float)).real, 9))
    assert sq_eigs == [-4, -4, -1, -1]


def test_fatness_form_examples():
    c = build_matrix_algebra(SpaceSpec("CGrass", 1, 1))
    omega = fatness_form(c, embed_cartan_element((0, 1), c))
    assert all(omega[i][j] == -omega[j][i] for i in range(4) for j in range(4))
    assert det(omega) != 0
    for spec in ORACLE_SPECS:
        alg = build_matrix_algebra(spec)
        zero = fatness_form(alg, ExactMatrix.zeros(alg.size))
        assert all(x == 0 for row in zero for x in row)
    d = build_matrix_algebra(SpaceSpec("DGrass", 2, 2))
    assert det(fatness_form(d, embed_cartan_element((0, 0, 1, 0), d))) == 0


def random_t0(rng, r):
    if rng.random() < 0.35:
        return tuple(F(rng.choice((-1, 0, 1))) for _ in range(r))
    return tuple(F(rng.randint(-3, 3), rng.choice((1, 1, 2))) for _ in range(r))


@pytest.mark.parametrize("spec", ORACLE_SPECS, ids=str)
def test_root_and_matrix_sides_agree(spec):
    alg = build_matrix_algebra(spec)
    pair = build_pair(spec)
    comp = complement(pair)
    rng = random.Random(zlib.crc32(str(spec).encode()))
    seen = set()
    for _ in range(25):
        t0 = random_t0(rng, spec.n + spec.m)
        T = embed_cartan_element(t0, alg)
        root_ok = bool(verify_twistor_element(pair, t0))
        assert root_ok == bool(check_complex_structure(alg, T))
        walls = wall_violations(t0, comp)
        omega = fatness_form(alg, T)
        assert (not walls) == (det(omega) != 0)
        # rank identity: each vanishing complement root kills one dimension
        assert rank(ad_restricted(alg, T)) == alg.dim_m - len(walls)
        seen.add(root_ok)
    assert seen == {True, False}


@pytest.mark.parametrize("spec", ORACLE_SPECS, ids=str)
def test_ad_eigenvalues_are_root_values(spec):
    alg = build_matrix_algebra(spec)
    comp = complement(build_pair(spec))
    t0 = tuple(F(k + 2, 3) for k in range(spec.n + spec.m))
    a = np.array(ad_restricted(alg, embed_cartan_element(t0, alg)), dtype=float)
    eig = sorted(np.round(np.linalg.eigvals(a).imag, 9))
    expected = sorted(round(float(root_eval(r, t0)), 9) for r in comp)
    assert np.allclose(eig, expected)

from fractions import Fraction

import pytest

from twistorfat.catalog import get_entry, in_range_specs, instantiate, list_entries
from twistorfat.errors import InputError
from twistorfat.maxrank import build_pair
from twistorfat.twistor import certify_fatness, verify_twistor_element


def test_six_entries_in_order():
    assert [e.family for e in list_entries()] == ["DGrass", "BGrass", "CGrass", "AGrass", "F4_SO9", "G2_SU3"]


def test_instantiate_examples():
    assert instantiate(get_entry("DGrass"), 2, 3)[1] == (0, 0, 1, 1, 1)
    assert instantiate(get_entry("F4_SO9"))[1] == (2, 0, 0, 0)
    spec, t0 = instantiate(get_entry("BGrass"), 2, 0)
    assert spec.label == "SO(5)/SO(4)" and t0 == (1, 1)
    assert instantiate(get_entry("CGrass"), 3, 2)[1] == (0, 0, 0, 1, 1)
    spec, t0 = instantiate(get_entry("AGrass"), 1, 1)
    assert t0 is None and certify_fatness(spec).status == "not-applicable"
    assert instantiate(get_entry("G2_SU3"))[1] is None


def test_constraint_violation_named():
    with pytest.raises(InputError, match="n ≥ 2 required"):
        instantiate(get_entry("DGrass"), 1, 3)


def test_closed_forms_verify_everywhere_in_range():
    for entry in list_entries():
        if not entry.has_t0:
            continue
        for spec in in_range_specs(entry, 8):
            _, t0 = instantiate(entry, spec.n, spec.m)
            assert verify_twistor_element(build_pair(spec), t0), spec


def test_in_range_specs_respects_constraints():
    d = in_range_specs(get_entry("DGrass"), 5)
    assert {(s.n, s.m) for s in d} == {(2, 2), (2, 3), (3, 2)}
    assert in_range_specs(get_entry("F4_SO9"), 3) == []
    assert len(in_range_specs(get_entry("F4_SO9"), 4)) == 1


def _dim_k(spec):
    n, m = spec.n, spec.m
    N = {"DGrass": 2 * n + 2 * m, "BGrass": 2 * n + 2 * m + 1}.get(spec.family)
    return N * (N - 1) // 2 if N else (n + m) * (2 * (n + m) + 1)


def test_oracle_concurs_for_small_classical_entries():
    checked = 0
    for fam in ("DGrass", "BGrass", "CGrass"):
        for spec in in_range_specs(get_entry(fam), 8):
            if _dim_k(spec) > 36:
                continue
            cert = certify_fatness(spec, run_oracle=True)
            assert cert.certified and cert.oracle_report.concurs
            assert cert.oracle_report.dim_k == _dim_k(spec)
            assert cert.oracle_report.fatness_pfaffian ** 2 == cert.oracle_report.fatness_det
            checked += 1
    assert checked >= 8

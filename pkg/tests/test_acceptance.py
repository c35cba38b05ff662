"""The acceptance battery: one test per criterion, each printing its verdict.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines, or ``orbitkit paper-suite`` for the same battery from the CLI.

Criterion 7 is expected to be red: its rowmotion half encodes a claim from
the literature that is falsified by this engine (the hyperplane-change word
rotates under toggle-promotion, exactly, but is provably not a function of
itself under rowmotion).  The test asserts the criterion as stated and
therefore fails; the failure message carries the counterexample.
"""

import pytest

from orbitkit import suite


def _run(fn, **kw):
    res = fn(**kw)
    print()
    print(res.line())
    return res


def test_c01_promotion_equivariance():
    assert _run(suite.criterion_01_promotion_equivariance).passed


def test_c02_bk_toggle_equivariance():
    assert _run(suite.criterion_02_bk_toggle_equivariance).passed


def test_c03_product_order():
    assert _run(suite.criterion_03_product_order).passed


def test_c04_golden_orbits():
    assert _run(suite.criterion_04_golden_orbits).passed


def test_c05_homomesy():
    assert _run(suite.criterion_05_homomesy).passed


def test_c06_distribution_laws():
    assert _run(suite.criterion_06_distribution_laws).passed


def test_c07_resonance():
    res = _run(suite.criterion_07_resonance)
    assert res.passed, res.detail


def test_c08_structural_isomorphisms():
    assert _run(suite.criterion_08_structural_isomorphisms).passed


def test_c09_slice_decomposition():
    assert _run(suite.criterion_09_slice_decomposition).passed


def test_c10_hyperplane_equivariance():
    assert _run(suite.criterion_10_hyperplane_equivariance).passed


def test_c11_multifold_symmetry():
    assert _run(suite.criterion_11_multifold_symmetry).passed


def test_c12_minuscule_order():
    assert _run(suite.criterion_12_minuscule_order).passed


def test_c13_v_poset_sweeps():
    res = _run(suite.criterion_13_v_poset_sweeps)
    assert res.passed, res.certificates


def test_c14_antipodal_mesy_sweep():
    assert _run(suite.criterion_14_antipodal_mesy_sweep).passed


@pytest.mark.full
def test_c14_antipodal_mesy_sweep_full_scale():
    assert _run(suite.criterion_14_antipodal_mesy_sweep, scale="full").passed


def test_c15_mutation_sensitivity():
    assert _run(suite.criterion_15_mutation_sensitivity).passed

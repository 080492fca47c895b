import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from curvcheck.catalog import charts
from curvcheck.conformal import lcf_reconstruction, \
    lcf_reconstruction_residual, conformal_data, schouten_tensor, \
    remark7_residuals, schouten_operator_identity_residual
from curvcheck.exceptions import DimensionError, InapplicableFormulaError, \
    NonTracelessError
from curvcheck.geometry import point_geometry
from curvcheck.toy_data import sample_symmetric


def _geom(chart, x=None):
    return point_geometry(chart, chart.center() if x is None else x)


lcf_charts = [charts.sphere(n=3), charts.sphere(n=4, r=2.),
              charts.hyperbolic(n=3), charts.cylinder(n=3),
              charts.cylinder(n=4), charts.s2xh2(),
              charts.conformal_flat(n=3), charts.conformal_flat(n=4)]


@pytest.mark.parametrize('chart', lcf_charts, ids=lambda c: c.name)
def test_lcf_reconstruction(chart):
    x = chart.center() + 0.05
    assert lcf_reconstruction_residual(_geom(chart, x)) <= 1e-4


def test_product_of_spheres_is_not_lcf():
    data = conformal_data(_geom(charts.s2xs2()))
    assert abs(data.weyl.values).max() > 1e-2
    assert data.weyl_norm > 1e-2


def test_reconstruction_on_sphere_is_exact_formula():
    geom = _geom(charts.sphere(n=3))
    g = geom.g
    expected = np.einsum('ik,jl->ijkl', g, g) - np.einsum('il,jk->ijkl', g, g)
    np.testing.assert_allclose(lcf_reconstruction(geom), expected, atol=1e-5)


def test_conformal_needs_three_dimensions():
    with pytest.raises(DimensionError):
        conformal_data(_geom(charts.sphere(n=2)))


@pytest.mark.parametrize('chart', [charts.cylinder(n=4), charts.s2xh2(),
                                   charts.conformal_flat(n=3)],
                         ids=lambda c: c.name)
def test_schouten_eigenvalue_relation(chart):
    data = conformal_data(_geom(chart))
    assert data.schouten_relation_residual() <= 1e-9


def test_schouten_of_unit_sphere():
    geom = _geom(charts.sphere(n=4))
    np.testing.assert_allclose(schouten_tensor(geom), geom.g / 2, atol=1e-5)


###############################
# sectional curvature formulas #
###############################

@pytest.mark.parametrize('chart', [charts.cylinder(n=3), charts.cylinder(n=4),
                                   charts.s2xh2(), charts.conformal_flat(n=4)],
                         ids=lambda c: c.name)
def test_remark7(chart):
    resids = remark7_residuals(_geom(chart))
    assert resids.ricci_formula_residual <= 1e-4
    assert resids.schouten_formula_residual <= 1e-4


def test_schouten_formula_with_extra_factor():
    # only agrees with the other two formulas when n = 3
    assert remark7_residuals(_geom(charts.cylinder(n=3))).\
        extra_factor_residual <= 1e-4
    assert remark7_residuals(_geom(charts.cylinder(n=4))).\
        extra_factor_residual > 1e-2


def test_remark7_needs_lcf():
    with pytest.raises(InapplicableFormulaError):
        remark7_residuals(_geom(charts.s2xs2()))


@given(seed=st.integers(min_value=0, max_value=2 ** 31 - 1))
@settings(max_examples=20, deadline=None)
def test_schouten_operator_identity(seed):
    geom = _geom(charts.conformal_flat(n=4))
    theta = sample_symmetric(n=4, traceless=True, metric=geom.g,
                             random_state=seed)
    assert schouten_operator_identity_residual(geom, theta) <= 1e-5


def test_schouten_operator_identity_preconditions():
    geom = _geom(charts.cylinder(n=3))
    with pytest.raises(NonTracelessError):
        schouten_operator_identity_residual(geom, geom.g)

    geom = _geom(charts.s2xs2())
    theta = sample_symmetric(n=4, traceless=True, metric=geom.g,
                             random_state=0)
    with pytest.raises(InapplicableFormulaError):
        schouten_operator_identity_residual(geom, theta)

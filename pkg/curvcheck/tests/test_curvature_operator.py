import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from curvcheck.catalog import charts
from curvcheck.curvature_operator import s02_basis, basis_gram, \
    operator_matrix, operator_form, apply_operator, classify_spectrum, \
    sectional_curvature, frame_sectional_curvatures, plane_tensor, \
    bridging_identities, plane_invariance_residual, random_orthonormal_pair
from curvcheck.exceptions import ContractViolationError, DegeneratePlaneError
from curvcheck.geometry import point_geometry
from curvcheck.tensor_core import trace_g, norm_sq


def _geom(chart, x=None):
    return point_geometry(chart, chart.center() if x is None else x)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_s02_basis_is_orthonormal(n):
    geom = _geom(charts.sphere(n=n))
    basis = s02_basis(geom)
    assert basis.size == n * (n + 1) // 2 - 1
    np.testing.assert_allclose(basis_gram(basis, geom), np.eye(basis.size),
                               atol=1e-10)
    for theta in basis.elements:
        assert abs(trace_g(theta, geom.g_inv)) <= 1e-10


def test_s02_basis_euclidean_plane():
    basis = s02_basis(_geom(charts.euclidean(2)))
    np.testing.assert_allclose(basis.elements[0],
                               np.diag([1, -1]) / np.sqrt(2))
    np.testing.assert_allclose(basis.elements[1],
                               np.array([[0, 1], [1, 0]]) / np.sqrt(2))
    assert basis.labels == ['diag_1', 'e0.e1']


def test_unit_sphere_operator_is_identity():
    geom = _geom(charts.sphere(n=3))
    spec = operator_matrix(geom, s02_basis(geom))
    np.testing.assert_allclose(spec.matrix, np.eye(5), atol=1e-5)
    assert spec.classification == 'positive_definite'
    assert spec.asymmetry <= 1e-6


def test_hyperbolic_operator():
    geom = _geom(charts.hyperbolic(n=3))
    spec = operator_matrix(geom, s02_basis(geom))
    np.testing.assert_allclose(spec.eigenvalues, -np.ones(5), atol=1e-5)
    assert spec.classification == 'negative_definite'


def test_flat_operator_vanishes():
    geom = _geom(charts.euclidean(3))
    spec = operator_matrix(geom, s02_basis(geom))
    assert abs(spec.matrix).max() == 0
    assert spec.classification == 'positive_semidefinite'


def test_product_of_spheres_operator_is_indefinite():
    geom = _geom(charts.s2xs2())
    spec = operator_matrix(geom, s02_basis(geom))
    assert spec.classification == 'indefinite'
    assert spec.eigenvalues[0] < -0.5

    K = frame_sectional_curvatures(geom)
    assert K.min() >= -1e-6


def test_basis_from_another_point():
    chart = charts.sphere(n=2)
    geom = _geom(chart)
    other = s02_basis(point_geometry(chart, chart.center() + .1))
    with pytest.raises(ContractViolationError):
        operator_matrix(geom, other)


def test_apply_operator_on_sphere():
    geom = _geom(charts.sphere(n=3))
    theta = s02_basis(geom).elements[2]
    np.testing.assert_allclose(apply_operator(geom, theta), theta, atol=1e-5)


@pytest.mark.parametrize('evals, expected', [
    ([1., 2.], 'positive_definite'),
    ([0., 2.], 'positive_semidefinite'),
    ([-1., 2.], 'indefinite'),
    ([-1., 0.], 'negative_semidefinite'),
    ([-1., -2.], 'negative_definite')])
def test_classify_spectrum(evals, expected):
    assert classify_spectrum(evals) == expected


######################
# sectional curvature #
######################

def test_degenerate_plane():
    geom = _geom(charts.sphere(n=2))
    with pytest.raises(DegeneratePlaneError):
        sectional_curvature(geom, np.array([1., 0.]), np.array([2., 0.]))


@given(seed=st.integers(min_value=0, max_value=2 ** 31 - 1))
@settings(max_examples=20, deadline=None)
def test_operator_sectional_identity(seed):
    geom = _geom(charts.s2xs2())
    X, Y = random_orthonormal_pair(geom, seed)
    theta = plane_tensor(geom, X, Y)
    assert norm_sq(theta, geom.g_inv) == pytest.approx(2.)
    assert operator_form(geom, theta) == \
        pytest.approx(2 * sectional_curvature(geom, X, Y), abs=1e-6)


@pytest.mark.parametrize('chart', [charts.sphere(n=3), charts.s2xs2(),
                                   charts.conformal_flat(n=3)])
def test_bridging_identities(chart):
    resids = bridging_identities(_geom(chart), random_state=0)
    assert resids.op_sec_residual <= 1e-6
    assert resids.ricci_sum_residual <= 1e-5


def test_plane_invariance():
    geom = _geom(charts.conformal_flat(n=3))
    X, Y = random_orthonormal_pair(geom, 1)
    assert plane_invariance_residual(geom, X, Y, random_state=2) <= 1e-6

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from curvcheck.catalog import charts
from curvcheck.codazzi import metric_multiple, hessian, constant
from curvcheck.config.fd import FDSpec
from curvcheck.curvature_operator import sectional_curvature
from curvcheck.exceptions import BoundaryMarginError, SingularMetricError, \
    ShapeError
from curvcheck.finite_diff import central_diff, second_diff
from curvcheck.geometry import ChartManifold, point_geometry, \
    covariant_derivative, divergence, laplace_beltrami


def _s2_point(phi=1., theta=0.3):
    return np.array([phi, theta])


#####################
# finite differences #
#####################

def test_central_diff_polynomial():
    d = central_diff(lambda x: x[0] ** 2 * x[1], np.array([1., 2.]),
                     step=1e-3)
    np.testing.assert_allclose(d, [4., 1.], atol=1e-8)


def test_second_diff_polynomial():
    H = second_diff(lambda x: x[0] ** 2 * x[1], np.array([1., 2.]),
                    step=1e-2, richardson=True)
    np.testing.assert_allclose(H, [[4., 2.], [2., 0.]], atol=1e-8)


def test_richardson_improves_accuracy():
    x = np.array([0.7])
    plain = central_diff(lambda y: np.sin(y[0]), x, step=1e-2)
    rich = central_diff(lambda y: np.sin(y[0]), x, step=1e-2,
                        richardson=True)
    assert abs(rich[0] - np.cos(0.7)) < abs(plain[0] - np.cos(0.7)) / 100


def test_curvature_convergence_order():
    chart = charts.sphere(n=2)
    x = _s2_point()
    errs = [abs(point_geometry(chart, x, fd=FDSpec(step=h)).scalar - 2.)
            for h in [0.02, 0.01]]
    assert 3.5 <= errs[0] / errs[1] <= 4.5


###################
# point geometry #
###################

@pytest.mark.parametrize('n', [2, 3, 4])
def test_euclidean_is_flat(n):
    geom = point_geometry(charts.euclidean(n), np.zeros(n))
    assert abs(geom.gamma).max() == 0
    assert abs(geom.riemann_low).max() == 0
    assert geom.scalar == 0


def test_unit_sphere_curvature():
    geom = point_geometry(charts.sphere(n=2), _s2_point())
    assert geom.scalar == pytest.approx(2., abs=1e-6)
    np.testing.assert_allclose(geom.ricci, geom.g, atol=1e-6)
    sec = sectional_curvature(geom, np.array([1., 0.]), np.array([0., 1.]))
    assert sec == pytest.approx(1., abs=1e-6)


@pytest.mark.parametrize('n, r', [(2, 1.), (3, 1.), (4, 1.), (3, 2.)])
def test_round_sphere_ricci(n, r):
    chart = charts.sphere(n=n, r=r)
    geom = point_geometry(chart, chart.center())
    np.testing.assert_allclose(geom.ricci, (n - 1) / r ** 2 * geom.g,
                               atol=1e-5)
    assert geom.scalar == pytest.approx(n * (n - 1) / r ** 2, abs=1e-5)


def test_sphere_riemann_is_metric_wedge():
    geom = point_geometry(charts.sphere(n=3), np.array([1., 1.2, 0.4]))
    g = geom.g
    expected = np.einsum('ac,bd->abcd', g, g) - np.einsum('ad,bc->abcd', g, g)
    np.testing.assert_allclose(geom.riemann_low, expected, atol=1e-5)


def test_hyperbolic_plane():
    geom = point_geometry(charts.hyperbolic(n=2), np.array([0., 1.]))
    assert geom.scalar == pytest.approx(-2., abs=1e-6)


@given(phi=st.floats(min_value=0.7, max_value=2.4),
       theta=st.floats(min_value=-2.5, max_value=2.5))
@settings(max_examples=25, deadline=None)
def test_riemann_symmetries(phi, theta):
    geom = point_geometry(charts.sphere(n=2), np.array([phi, theta]))
    for name, resid in geom.symmetry_residuals().items():
        assert resid <= 5e-5, name
    assert geom.ricci_asymmetry <= 1e-5
    assert geom.scalar == pytest.approx(
        float(np.einsum('ij,ij->', geom.g_inv, geom.ricci)), abs=1e-12)


def test_boundary_margin():
    chart = charts.euclidean(2)
    with pytest.raises(BoundaryMarginError):
        point_geometry(chart, np.array([1., 0.]))

    with pytest.raises(ShapeError):
        point_geometry(chart, np.zeros(3))


def test_singular_metric():
    chart = ChartManifold(dim=2, domain=[[-1, 1], [-1, 1]],
                          metric=lambda x: np.diag([1., x[1]]))
    with pytest.raises(SingularMetricError):
        point_geometry(chart, np.array([0., -0.5]))


def test_bad_domain():
    with pytest.raises(ValueError):
        ChartManifold(dim=1, domain=[[1., 0.]], metric=lambda x: np.eye(1))


#########################
# covariant derivatives #
#########################

@pytest.mark.parametrize('chart', [charts.sphere(n=3), charts.hyperbolic(n=2),
                                   charts.conformal_flat(n=3)])
def test_metric_compatibility(chart):
    x = chart.center()
    field = metric_multiple(chart)
    assert abs(covariant_derivative(field, chart, x).values).max() <= 1e-6
    assert abs(divergence(field, chart, x).values).max() <= 1e-6


def test_constant_field_is_parallel_on_flat_chart():
    chart = charts.euclidean(3)
    field = constant(chart, [1., 2., 3.])
    nabla = covariant_derivative(field, chart, np.array([.1, .2, .3]))
    assert abs(nabla.values).max() == 0


def test_hessian_of_bilinear_is_parallel():
    chart = charts.euclidean(2)
    field = hessian(chart, 'x1x2')
    nabla = covariant_derivative(field, chart, np.array([.3, -.4]))
    assert abs(nabla.values).max() <= 1e-8


def test_divergence_of_cubic_hessian():
    chart = ChartManifold(dim=2, domain=[[-2, 2], [-2, 2]],
                          metric=lambda x: np.eye(2), flat=True)
    field = hessian(chart, 'cubic')
    delta = divergence(field, chart, np.array([1., 0.]))
    np.testing.assert_allclose(delta.values, [-6., 0.], atol=1e-8)


##################
# laplace beltrami #
##################

def test_laplacian_of_constant():
    chart = charts.sphere(n=2)
    lap = laplace_beltrami(lambda y: 3., chart, _s2_point())
    assert abs(lap) <= 1e-9


def test_flat_laplacian():
    lap = laplace_beltrami(lambda y: y[0] ** 2 + y[1] ** 2,
                           charts.euclidean(2), np.array([.2, .1]))
    assert lap == pytest.approx(4., abs=1e-6)


def test_spherical_harmonic():
    x = _s2_point(phi=1.1)
    lap = laplace_beltrami(lambda y: np.cos(y[0]), charts.sphere(n=2), x)
    assert lap == pytest.approx(-2 * np.cos(1.1), abs=1e-5)

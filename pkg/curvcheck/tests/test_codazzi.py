import numpy as np
import pytest

from curvcheck.catalog import charts
from curvcheck.codazzi import codazzi_residual, d_nabla, \
    harmonicity_diagnostics, metric_multiple, hessian, derivative_tensor, \
    constant, frame_constant, ricci_of, schouten_of, traceless_part_of, \
    make_field, avail_fields
from curvcheck.exceptions import ShapeError, UnsupportedConstructionError, \
    DimensionError
from curvcheck.geometry import ChartManifold, SymTensorField


def _f_times_g(n=2):
    return SymTensorField(rank=2, func=lambda y: y[0] * np.eye(n),
                          name='x1*g')


def _big_euclidean(n=2):
    return ChartManifold(dim=n, domain=[[-2, 2]] * n,
                         metric=lambda x: np.eye(n), flat=True)


def test_x1_times_metric_is_not_codazzi():
    chart = charts.euclidean(2)
    x = np.array([.2, -.3])
    assert codazzi_residual(_f_times_g(), chart, x) == \
        pytest.approx(1., abs=1e-8)

    dT = d_nabla(_f_times_g(), chart, x).values
    assert dT[0, 1, 0] == pytest.approx(0., abs=1e-8)
    assert dT[0, 1, 1] == pytest.approx(1., abs=1e-8)
    np.testing.assert_allclose(dT, -dT.transpose(1, 0, 2), atol=1e-12)


def test_hessian_of_trilinear_is_codazzi():
    chart = charts.euclidean(3)
    field = hessian(chart, 'x1x2x3')
    assert codazzi_residual(field, chart, np.array([.1, .2, -.3])) <= 1e-8


def test_rank3_derivative_tensor_is_codazzi():
    chart = charts.euclidean(2)
    field = derivative_tensor(chart, 'harmonic_quartic', order=3)
    assert field.rank == 3
    assert codazzi_residual(field, chart, np.array([.3, .4])) <= 1e-8


@pytest.mark.parametrize('chart', [charts.sphere(n=3), charts.hyperbolic(n=3),
                                   charts.s2xs2()])
def test_metric_multiple_is_codazzi(chart):
    field = metric_multiple(chart, lam=2.)
    assert codazzi_residual(field, chart, chart.center()) <= 1e-6


def test_einstein_ricci_is_codazzi():
    chart = charts.sphere(n=3)
    ric = ricci_of(chart)
    assert codazzi_residual(ric, chart, chart.center()) <= 1e-4


def test_cubic_hessian_diagnostics():
    chart = _big_euclidean(2)
    diag = harmonicity_diagnostics(hessian(chart, 'cubic'), chart,
                                   np.array([1., 0.]))
    assert diag.codazzi_residual <= 1e-8
    assert diag.trace_norm == pytest.approx(6.)
    assert diag.trace_gradient_norm == pytest.approx(6.)
    assert diag.divergence_norm == pytest.approx(6.)
    assert not diag.harmonic
    assert diag.identity_residual <= 1e-8
    assert diag.identity_holds is True


def test_harmonic_hessian_is_harmonic():
    chart = charts.euclidean(2)
    diag = harmonicity_diagnostics(hessian(chart, 'harmonic_cubic'), chart,
                                   np.array([.2, .5]))
    assert diag.harmonic
    assert diag.trace_norm <= 1e-10


def test_identity_makes_no_claim_off_codazzi():
    chart = charts.euclidean(2)
    diag = harmonicity_diagnostics(_f_times_g(), chart, np.array([.1, .1]))
    assert diag.identity_holds is None


################
# constructors #
################

def test_metric_multiple_value():
    chart = charts.euclidean(3)
    np.testing.assert_array_equal(metric_multiple(chart, 2.)(np.zeros(3)),
                                  2 * np.eye(3))


def test_traceless_part_of_constant():
    chart = charts.euclidean(2)
    field = traceless_part_of(constant(chart, [3., 1.]), chart)
    np.testing.assert_allclose(field(np.zeros(2)), np.diag([1., -1.]))


def test_frame_constant_on_sphere():
    chart = charts.sphere(n=2)
    x = np.array([1., .2])
    T = frame_constant(chart, [1., -1.])(x)
    g = chart.metric_at(x)[0]
    assert np.trace(np.linalg.solve(g, T)) == pytest.approx(0., abs=1e-12)


def test_hessian_needs_flat_chart():
    with pytest.raises(UnsupportedConstructionError):
        hessian(charts.sphere(n=2), 'x1x2')


def test_derivative_tensor_order():
    with pytest.raises(ShapeError):
        derivative_tensor(charts.euclidean(2), 'x1x2', order=1)


def test_numerical_hessian_fallback():
    chart = charts.euclidean(2)
    field = hessian(chart, lambda y: np.sin(y[0]) * y[1])
    x = np.array([.3, .4])
    expected = [[-np.sin(.3) * .4, np.cos(.3)], [np.cos(.3), 0.]]
    np.testing.assert_allclose(field(x), expected, atol=1e-7)
    assert field.fd_depth == 1


def test_schouten_needs_three_dimensions():
    with pytest.raises(DimensionError):
        schouten_of(charts.sphere(n=2))


def test_make_field():
    chart = charts.euclidean(2)
    assert make_field('metric_multiple', chart=chart, lam='3').name == '3.0*g'
    assert make_field('hessian', chart=chart, potential='x1x2').rank == 2

    with pytest.raises(ValueError):
        make_field('unknown', chart=chart)

    with pytest.raises(ValueError):
        make_field('constant', value=np.eye(2))

    assert 'hypersurface_sff' in avail_fields


def test_asymmetric_field_is_rejected():
    field = SymTensorField(rank=2, func=lambda y: np.array([[0., 1.],
                                                            [0., 0.]]))
    with pytest.raises(ValueError):
        field(np.zeros(2))

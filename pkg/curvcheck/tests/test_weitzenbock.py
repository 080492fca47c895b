import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from curvcheck.catalog import charts
from curvcheck.catalog.targets import get_target
from curvcheck.codazzi import metric_multiple, hessian, derivative_tensor, \
    ricci_of, frame_constant
from curvcheck.config.fd import FDSpec
from curvcheck.curvature_operator import s02_basis
from curvcheck.exceptions import NotCodazziError, NonTracelessError, \
    NonCommutingError, InapplicableFormulaError, VanishingNormError, \
    DimensionError
from curvcheck.geometry import point_geometry, SymTensorField
from curvcheck.suite.sampling import sample_points
from curvcheck.tensor_core import norm_sq
from curvcheck.toy_data import sample_symmetric, sample_eigenframe_tensor
from curvcheck.weitzenbock import q_form, q_p, q2_spectral_form, \
    bochner_residual, subharmonicity_gap, kato_gap, okumura_gap, \
    pinching_rhs, ricci_pinching_gaps, inequality_gaps

seeds = st.integers(min_value=0, max_value=2 ** 31 - 1)


##########
# Q form #
##########

def test_q_form_vanishes_on_flat_space():
    geom = point_geometry(charts.euclidean(3), np.zeros(3))
    T = sample_symmetric(n=3, traceless=True, random_state=0)
    assert q_form(geom, T) == 0


@given(seed=seeds)
@settings(max_examples=20, deadline=None)
def test_q2_on_unit_sphere(seed):
    # sec = 1 gives Q_2(T) = sum_{i<j} (lam_i - lam_j)^2 = n ||T||^2
    chart = charts.sphere(n=3)
    x = chart.center()
    geom = point_geometry(chart, x)
    T, evals, _ = sample_eigenframe_tensor(n=3, metric=geom.g,
                                           random_state=seed)
    assert norm_sq(T, geom.g_inv) == pytest.approx((evals ** 2).sum())
    assert q_form(geom, T) == pytest.approx(3 * (evals ** 2).sum(),
                                            rel=1e-6, abs=1e-6)


@pytest.mark.parametrize('chart, x',
                         [(charts.sphere(n=3, r=2.), [1., 1.3, .4]),
                          (charts.hyperbolic(n=4), [.1, .2, -.3, 1.2])])
def test_q2_spectral_oracle(chart, x):
    geom = point_geometry(chart, np.array(x),
                          fd=FDSpec(step=1e-3, richardson=True))
    for seed in range(1000):
        T, _, _ = sample_eigenframe_tensor(n=chart.dim, metric=geom.g,
                                           random_state=seed)
        assert q2_spectral_form(geom, T) == \
            pytest.approx(q_form(geom, T), abs=1e-8)


def test_q2_spectral_needs_commuting_tensor():
    chart = charts.cylinder(n=3)
    geom = point_geometry(chart, chart.center())
    basis = s02_basis(geom)
    theta = basis.elements[basis.labels.index('e0.e1')]
    with pytest.raises(NonCommutingError):
        q2_spectral_form(geom, theta)


def test_q_p_needs_traceless_field():
    chart = charts.sphere(n=2)
    with pytest.raises(NonTracelessError):
        q_p(metric_multiple(chart), chart, chart.center())

    field = frame_constant(chart, [1., -1.])
    assert q_p(field, chart, chart.center()) == pytest.approx(4., abs=1e-5)


##################
# Bochner formula #
##################

def test_bochner_harmonic_hessian():
    chart = charts.euclidean(2)
    out = bochner_residual(hessian(chart, 'harmonic_cubic'), chart,
                           np.array([.3, -.2]))
    assert out.q_term == 0
    assert out.grad_term == pytest.approx(4 * 36.)
    assert abs(out.residual) <= 1e-4


def test_bochner_rank3_field():
    chart = charts.euclidean(2)
    field = derivative_tensor(chart, 'harmonic_quartic', order=3)
    out = bochner_residual(field, chart, np.array([.1, .4]))
    assert abs(out.residual) <= 1e-4
    assert out.grad_term > 0


@pytest.mark.parametrize('chart', [charts.sphere(n=3), charts.hyperbolic(n=3)])
def test_bochner_metric_multiple(chart):
    out = bochner_residual(metric_multiple(chart, 2.), chart, chart.center())
    assert abs(out.residual) <= 1e-4
    assert abs(out.q_term) <= 1e-4


def test_bochner_einstein_ricci():
    chart = charts.sphere(n=3)
    out = bochner_residual(ricci_of(chart), chart, chart.center())
    assert abs(out.residual) <= 1e-4
    assert out.to_dict()['residual'] == out.residual


@pytest.mark.parametrize('name, field', [
    ('sphere:n=3', 'metric:2'),
    ('hyperbolic:n=3', 'metric:.5'),
    ('euclidean:n=2', 'hessian:harmonic_cubic'),
    ('sphere:n=3', 'ricci'),
    ('sphere:n=3,r=0.5', 'ricci'),
    ('sphere:n=2,r=2', 'ricci'),
    ('hyperbolic:n=3', 'ricci'),
    ('clifford:n=2,k=1', None)])
def test_bochner_at_sampled_points(name, field):
    target = get_target(name, field=field)
    fd = FDSpec()
    points, _ = sample_points(target, fd, n_points=50, seed=4)
    assert len(points) == 50
    for x in points:
        out = bochner_residual(target.field, target.chart, x, fd=fd)
        T = target.field(x)
        scale = max(1., norm_sq(T, point_geometry(target.chart, x).g_inv))
        assert abs(out.residual) <= 1e-4 * scale


def test_bochner_rejects_non_codazzi():
    chart = charts.euclidean(2)
    field = SymTensorField(rank=2, func=lambda y: y[0] * np.eye(2))
    with pytest.raises(NotCodazziError):
        bochner_residual(field, chart, np.zeros(2))


def test_bochner_rejects_varying_trace():
    chart = charts.euclidean(2)
    with pytest.raises(NonTracelessError):
        bochner_residual(hessian(chart, 'cubic'), chart, np.array([.2, .1]))


def test_subharmonicity():
    chart = charts.euclidean(2)
    gap = subharmonicity_gap(hessian(chart, 'harmonic_cubic'), chart,
                             np.array([.3, -.2]))
    assert gap >= 0


def test_subharmonicity_needs_nonnegative_q():
    chart = charts.hyperbolic(n=2)
    field = frame_constant(chart, [1., -1.])
    with pytest.raises((InapplicableFormulaError, NotCodazziError)):
        subharmonicity_gap(field, chart, chart.center())


############
# kato #
############

def test_kato_gap():
    chart = charts.euclidean(2)
    gap = kato_gap(hessian(chart, 'harmonic_cubic'), chart,
                   np.array([.3, -.2]))
    assert gap >= -1e-10


def test_kato_at_zero():
    chart = charts.euclidean(2)
    with pytest.raises(VanishingNormError):
        kato_gap(hessian(chart, 'harmonic_cubic'), chart, np.zeros(2))


###########
# okumura #
###########

def test_okumura_equality_cases():
    assert okumura_gap(np.diag([1., -1.])) == pytest.approx(0., abs=1e-12)
    assert okumura_gap(np.diag([-1., -1., 2.])) > 1


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_okumura_equality_at_umbilic_direction(n):
    T = np.diag([1.] * (n - 1) + [-(n - 1.)])
    T /= np.linalg.norm(T)
    assert okumura_gap(T) == pytest.approx(0., abs=1e-9)


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_okumura_random_batch(n):
    rng = np.random.RandomState(n)
    A = rng.standard_normal(size=(10 ** 4, n, n))
    A = A + np.swapaxes(A, 1, 2)
    A -= np.einsum('kii->k', A)[:, None, None] / n * np.eye(n)
    A /= np.linalg.norm(A, axis=(1, 2))[:, None, None]

    gaps = np.array([okumura_gap(T) for T in A])
    assert gaps.min() >= -1e-12


@given(seed=seeds, n=st.integers(min_value=2, max_value=6))
@settings(max_examples=100, deadline=None)
def test_okumura_random(seed, n):
    T = sample_symmetric(n=n, traceless=True, random_state=seed)
    assert okumura_gap(T) >= -1e-12 * max(1., np.abs(T).max() ** 3)


def test_okumura_with_metric():
    T, _, _ = sample_eigenframe_tensor(n=3, metric=np.diag([1., 4., 9.]),
                                       random_state=0)
    assert okumura_gap(T, metric=np.diag([1., 4., 9.])) >= -1e-12


def test_okumura_needs_traceless():
    with pytest.raises(NonTracelessError):
        okumura_gap(np.eye(3))


##################
# Ricci pinching #
##################

def test_pinching_rhs():
    assert pinching_rhs(2., 0., 3) == 0
    assert pinching_rhs(6., 1., 3) == pytest.approx((6 - np.sqrt(6)) / 2)


def test_cylinder_is_pinching_equality():
    chart = charts.cylinder(n=3)
    gaps = ricci_pinching_gaps(chart, chart.center())
    assert abs(gaps['identity_residual']) <= 1e-4
    assert abs(gaps['pinching_gap']) <= 1e-4
    assert gaps['laplacian_gap'] == pytest.approx(0., abs=1e-3)
    assert gaps['norm_laplacian_gap'] == pytest.approx(0., abs=1e-3)


def test_einstein_pinching():
    chart = charts.sphere(n=3)
    gaps = ricci_pinching_gaps(chart, chart.center())
    assert abs(gaps['pinching_gap']) <= 1e-4
    assert gaps['laplacian_gap'] == pytest.approx(0., abs=1e-3)
    assert gaps['norm_laplacian_gap'] is None


def test_pinching_needs_lcf():
    chart = charts.s2xs2()
    with pytest.raises(InapplicableFormulaError):
        ricci_pinching_gaps(chart, chart.center())


def test_pinching_needs_three_dimensions():
    chart = charts.sphere(n=2)
    with pytest.raises(DimensionError):
        ricci_pinching_gaps(chart, chart.center())


def test_inequality_gaps():
    chart = charts.euclidean(2)
    gaps = inequality_gaps(field=hessian(chart, 'harmonic_cubic'),
                           chart=chart, x=np.array([.3, -.2]))
    assert set(gaps) == {'kato', 'okumura'}

    gaps = inequality_gaps(matrix=np.diag([1., -1.]))
    assert set(gaps) == {'okumura'}

    chart = charts.cylinder(n=3)
    gaps = inequality_gaps(chart=chart, x=chart.center())
    assert {'okumura', 'pinching', 'laplacian_pinching'} <= set(gaps)
    assert min(gaps.values()) >= -1e-3

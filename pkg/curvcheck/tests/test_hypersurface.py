import numpy as np
import pytest

from curvcheck.catalog.hypersurfaces import equator, clifford
from curvcheck.codazzi import codazzi_residual
from curvcheck.exceptions import DegenerateImmersionError, ShapeError, \
    VanishingNormError, BoundaryMarginError, InapplicableFormulaError
from curvcheck.geometry import divergence, point_geometry
from curvcheck.hypersurface import Hypersurface, induced_geometry, \
    second_fundamental_form, induced_chart, sff_field, \
    simons_identity_residual, simons_kato_gap, gauss_equation_residual, \
    sphere_constraint_residual

clifford_params = [(2, 1), (3, 1), (4, 2)]


def _center(h):
    return h.param_domain.mean(axis=1)


def test_clifford_torus_is_flat():
    h = clifford(2, 1)
    u = np.array([.3, -.4])
    g, _ = induced_geometry(h, u)
    np.testing.assert_allclose(g.values, np.eye(2), atol=1e-8)
    assert sphere_constraint_residual(h, u) <= 1e-14

    geom = point_geometry(induced_chart(h), u)
    assert abs(geom.scalar) <= 1e-5


@pytest.mark.parametrize('n, k', clifford_params)
def test_clifford_rigidity_data(n, k):
    h = clifford(n, k)
    u = _center(h) + 0.1
    data = second_fundamental_form(h, u)
    assert abs(data.mean_curvature) <= 1e-8
    assert data.sff_norm_sq == pytest.approx(n, abs=1e-6)
    assert np.linalg.norm(data.normal) == pytest.approx(1.)


@pytest.mark.parametrize('n, k', clifford_params)
def test_clifford_sff_is_traceless_codazzi(n, k):
    h = clifford(n, k)
    chart, field = induced_chart(h), sff_field(h)
    u = _center(h)
    assert codazzi_residual(field, chart, u) <= 1e-4
    assert abs(divergence(field, chart, u).values).max() <= 1e-6


def test_clifford_simons_identity():
    h = clifford(2, 1)
    out = simons_identity_residual(h, np.array([.2, .1]))
    assert abs(out.lhs) <= 1e-4
    assert abs(out.q_term) <= 1e-4
    assert out.grad_term <= 1e-4
    assert abs(out.residual) <= 1e-4


@pytest.mark.parametrize('n, k', [(3, 1), (4, 2)])
def test_generalized_clifford_simons(n, k):
    h = clifford(n, k)
    assert abs(simons_identity_residual(h, _center(h)).residual) <= 1e-4
    assert simons_kato_gap(h, _center(h)) >= -1e-4


@pytest.mark.parametrize('n', [2, 3])
def test_equator_is_totally_geodesic(n):
    h = equator(n)
    u = _center(h)
    assert second_fundamental_form(h, u).sff_norm_sq <= 1e-8
    assert abs(simons_identity_residual(h, u).residual) <= 1e-4
    assert gauss_equation_residual(h, u) <= 1e-4

    with pytest.raises(VanishingNormError):
        simons_kato_gap(h, u)


@pytest.mark.parametrize('n, k', clifford_params)
def test_gauss_equation(n, k):
    h = clifford(n, k)
    assert gauss_equation_residual(h, _center(h)) <= 1e-4


def test_normal_orientation():
    h = clifford(2, 1)
    u = np.array([.1, .2])
    J_rows = [h(u + e * 1e-6) - h(u - e * 1e-6) for e in np.eye(2)]
    _, nu = induced_geometry(h, u)
    assert np.linalg.det(np.vstack([h(u)] + J_rows + [nu])) > 0

    _, nu_flip = induced_geometry(h, u, orientation=-1)
    np.testing.assert_allclose(nu_flip, -nu)

    s_plus = second_fundamental_form(h, u).sff.values
    s_minus = second_fundamental_form(h, u, orientation=-1).sff.values
    np.testing.assert_allclose(s_minus, -s_plus, atol=1e-12)


def test_non_minimal_hypersurface():
    # small circle latitude torus of S^3: radii 1/2 and sqrt(3)/2
    r1, r2 = .5, np.sqrt(3) / 2

    def immersion(u):
        return np.array([r1 * np.cos(u[0] / r1), r1 * np.sin(u[0] / r1),
                         r2 * np.cos(u[1] / r2), r2 * np.sin(u[1] / r2)])

    h = Hypersurface(dim=2, param_domain=[[-1, 1], [-1, 1]],
                     immersion=immersion)
    data = second_fundamental_form(h, np.zeros(2))
    assert abs(data.mean_curvature) > 1e-2

    with pytest.raises(InapplicableFormulaError):
        simons_identity_residual(h, np.zeros(2))


def test_degenerate_immersion():
    h = Hypersurface(dim=2, param_domain=[[-1, 1], [-1, 1]],
                     immersion=lambda u: np.array([np.cos(u[0]),
                                                   np.sin(u[0]), 0., 0.]))
    with pytest.raises(DegenerateImmersionError):
        induced_geometry(h, np.zeros(2))


def test_immersion_shape_and_margin():
    h = Hypersurface(dim=2, param_domain=[[-1, 1], [-1, 1]],
                     immersion=lambda u: np.zeros(3))
    with pytest.raises(ShapeError):
        h(np.zeros(2))

    with pytest.raises(BoundaryMarginError):
        induced_geometry(clifford(2, 1), np.array([np.pi / np.sqrt(2), 0.]))

"""
Hypersurfaces of the unit sphere S^{n+1} in R^{n+2}: induced metric, unit normal, second fundamental form and the identities satisfied by minimal hypersurfaces.

The unit normal nu is tangent to the sphere, orthogonal to the immersed tangent space and oriented so that det[F, d_1 F, ..., d_n F, nu] > 0. The immersion is differentiated with the nested finite-difference step and Richardson extrapolation so the induced metric and the second fundamental form are smooth evaluators that can be differentiated again.
"""
import numpy as np
from dataclasses import dataclass
from scipy.linalg import null_space, svdvals

from curvcheck.config.fd import FDSpec
from curvcheck.config.tolerances import FD_TOL
from curvcheck.exceptions import DegenerateImmersionError, \
    InapplicableFormulaError, VanishingNormError, ShapeError, \
    BoundaryMarginError
from curvcheck.finite_diff import central_diff, second_diff
from curvcheck.geometry.chart import ChartManifold, point_geometry
from curvcheck.geometry.fields import SymTensorField, _nabla, \
    laplace_beltrami, squared_norm_function, norm_function
from curvcheck.tensor_core import SymMatrix, norm_sq, trace_g
from curvcheck.weitzenbock import BochnerBreakdown

NORMAL_ORIENTATION = 'det[F, dF, nu] > 0'


class Hypersurface:
    """
    An immersed hypersurface of the unit sphere S^{n+1}.

    Parameters
    ----------
    dim: int
        Dimension n of the hypersurface.

    param_domain: array-like, shape (n, 2)
        Coordinate box of the parametrization.

    immersion: callable(u) -> array-like, shape (n + 2, )
        The immersion F; must map into the unit sphere.

    name: str
        Label used in reports.

    expected_sff_norm_sq: None, float
        Known constant value of ||S||^2, if any.

    minimal: bool
        Whether the hypersurface is known to be minimal.
    """
    def __init__(self, dim, param_domain, immersion, name='hypersurface',
                 expected_sff_norm_sq=None, minimal=False):
        self.dim = int(dim)
        self.param_domain = np.array(param_domain, dtype=float).\
            reshape(self.dim, 2)
        self.immersion = immersion
        self.name = name
        self.expected_sff_norm_sq = expected_sff_norm_sq
        self.minimal = minimal

    def __call__(self, u):
        F = np.asarray(self.immersion(np.asarray(u, dtype=float)),
                       dtype=float)
        if F.shape != (self.dim + 2, ):
            raise ShapeError("Immersion of {} returned shape {}, expected "
                             "({},)".format(self.name, F.shape, self.dim + 2))
        return F

    def check_margin(self, u, margin):
        u = np.asarray(u, dtype=float)
        dist = min((u - self.param_domain[:, 0]).min(),
                   (self.param_domain[:, 1] - u).min())
        if dist < margin:
            raise BoundaryMarginError("Point {} is {:.3g} from the boundary "
                                      "of {}; need {:.3g}".
                                      format(u.tolist(), dist, self.name,
                                             margin))

    def __repr__(self):
        return 'Hypersurface(name={!r}, dim={})'.format(self.name, self.dim)


@dataclass(frozen=True)
class SecondFundamentalData:
    """
    Extrinsic data at a point of a hypersurface.

    Attributes
    ----------
    induced_g: SymMatrix
        The induced metric.

    sff: SymMatrix
        S_ij = <d_i d_j F, nu>.

    mean_curvature: float
        H = trace_g S / n.

    sff_norm_sq: float
        ||S||^2 = g^{ik} g^{jl} S_ij S_kl.

    normal: np.ndarray, shape (n + 2, )
        The unit normal used.
    """
    induced_g: SymMatrix
    sff: SymMatrix
    mean_curvature: float
    sff_norm_sq: float
    normal: np.ndarray


def sphere_constraint_residual(h, u):
    """
    ||F(u)| - 1|.
    """
    return float(abs(np.linalg.norm(h(u)) - 1))


def _immersion_step(fd):
    step, richardson = fd.resolve(depth=1, order=1)
    return step, richardson


def induced_geometry(h, u, fd=None, orientation=1):
    """
    Induced metric and unit normal at a point.

    Parameters
    ----------
    h: Hypersurface
        The hypersurface.

    u: array-like, shape (n, )
        Parameter point.

    fd: None, FDSpec
        Finite-difference steps.

    orientation: int
        +1 for the normal with det[F, dF, nu] > 0, -1 for its opposite.

    Output
    ------
    induced_g, normal

    induced_g: SymMatrix
        g_ij = <d_i F, d_j F>.

    normal: np.ndarray, shape (n + 2, )
    """
    fd = FDSpec() if fd is None else fd
    u = np.asarray(u, dtype=float)
    step, richardson = _immersion_step(fd)
    h.check_margin(u, margin=step)

    F = h(u)
    J = central_diff(h, u, step=step, richardson=richardson)

    sv = svdvals(J)
    if sv.min() <= 1e-8 * max(sv.max(), 1.):
        raise DegenerateImmersionError("Jacobian of {} has rank < {} at {}".
                                       format(h.name, h.dim, u.tolist()))

    normals = null_space(np.vstack([J, F]))
    if normals.shape[1] != 1:
        raise DegenerateImmersionError("Normal space of {} at {} has "
                                       "dimension {}".
                                       format(h.name, u.tolist(),
                                              normals.shape[1]))
    nu = normals[:, 0] / np.linalg.norm(normals[:, 0])
    if np.linalg.det(np.vstack([F, J, nu])) < 0:
        nu = -nu

    return SymMatrix(J @ J.T), orientation * nu


def second_fundamental_form(h, u, fd=None, orientation=1):
    """
    Second fundamental form, mean curvature and ||S||^2 at a point.

    Parameters
    ----------
    h: Hypersurface
        The hypersurface.

    u: array-like, shape (n, )
        Parameter point.

    fd: None, FDSpec
        Finite-difference steps.

    orientation: int
        Orientation of the normal, see induced_geometry.

    Output
    ------
    data: SecondFundamentalData
    """
    fd = FDSpec() if fd is None else fd
    u = np.asarray(u, dtype=float)
    g, nu = induced_geometry(h, u, fd=fd, orientation=orientation)

    step, richardson = _immersion_step(fd)
    hess = second_diff(h, u, step=step, richardson=richardson)
    S = hess @ nu

    g_inv = np.linalg.inv(g.values)
    S = SymMatrix(0.5 * (S + S.T))

    return SecondFundamentalData(
        induced_g=g, sff=S,
        mean_curvature=float(trace_g(S.values, g_inv) / h.dim),
        sff_norm_sq=float(norm_sq(S.values, g_inv)),
        normal=nu)


def induced_chart(h, fd=None):
    """
    The parameter box with the induced metric, as a chart of depth 1.
    """
    fd = FDSpec() if fd is None else fd

    def metric(u):
        return induced_geometry(h, u, fd=fd)[0].values

    return ChartManifold(dim=h.dim, domain=h.param_domain, metric=metric,
                         name=h.name, flat=False, fd_depth=1)


def sff_field(h, fd=None, orientation=1):
    """
    The second fundamental form as a field on the induced chart.
    """
    fd = FDSpec() if fd is None else fd

    def func(u):
        return second_fundamental_form(h, u, fd=fd,
                                       orientation=orientation).sff.values

    return SymTensorField(rank=2, func=func, name='sff({})'.format(h.name),
                          fd_depth=1)


def _check_minimal(data, minimal_tol):
    if abs(data.mean_curvature) > minimal_tol:
        raise InapplicableFormulaError("Hypersurface is not minimal at the "
                                       "point: |H| = {:.3g}".
                                       format(abs(data.mean_curvature)))


def simons_identity_residual(h, u, fd=None, minimal_tol=FD_TOL):
    """
    The three terms of 1/2 Lap ||S||^2 = ||S||^2 (n - ||S||^2) + ||nabla S||^2, satisfied by minimal hypersurfaces of the unit sphere.

    Parameters
    ----------
    h: Hypersurface
        The hypersurface.

    u: array-like, shape (n, )
        Parameter point.

    fd: None, FDSpec
        Finite-difference steps.

    minimal_tol: float
        The point must have |H| <= minimal_tol.

    Output
    ------
    breakdown: BochnerBreakdown
        q_term is ||S||^2 (n - ||S||^2).
    """
    fd = FDSpec() if fd is None else fd
    u = np.asarray(u, dtype=float)
    data = second_fundamental_form(h, u, fd=fd)
    _check_minimal(data, minimal_tol)

    chart = induced_chart(h, fd=fd)
    field = sff_field(h, fd=fd)
    geom = point_geometry(chart, u, fd=fd)

    nabla, _ = _nabla(field, chart, u, fd=fd, geom=geom)
    lhs = 0.5 * laplace_beltrami(squared_norm_function(field, chart), chart,
                                 u, fd=fd, depth=field.fd_depth, geom=geom)
    nrm_sq = data.sff_norm_sq

    return BochnerBreakdown(lhs=float(lhs),
                            q_term=float(nrm_sq * (h.dim - nrm_sq)),
                            grad_term=float(norm_sq(nabla, geom.g_inv)))


def simons_kato_gap(h, u, fd=None, minimal_tol=FD_TOL, zero_tol=1e-6):
    """
    ||S|| Lap ||S|| - ||S||^2 (n - ||S||^2), non-negative on minimal hypersurfaces of the unit sphere away from the zeros of S.
    """
    fd = FDSpec() if fd is None else fd
    u = np.asarray(u, dtype=float)
    data = second_fundamental_form(h, u, fd=fd)
    _check_minimal(data, minimal_tol)

    nrm_sq = data.sff_norm_sq
    if np.sqrt(nrm_sq) < zero_tol:
        raise VanishingNormError("||S|| = {:.3g} is below {}".
                                 format(np.sqrt(nrm_sq), zero_tol))

    chart = induced_chart(h, fd=fd)
    field = sff_field(h, fd=fd)
    lap = laplace_beltrami(norm_function(field, chart), chart, u, fd=fd,
                           depth=field.fd_depth)

    return float(np.sqrt(nrm_sq) * lap - nrm_sq * (h.dim - nrm_sq))


def gauss_equation_residual(h, u, fd=None):
    """
    Max-norm of the intrinsic curvature of the induced metric minus g_ik g_jl - g_il g_jk + S_ik S_jl - S_il S_jk.
    """
    fd = FDSpec() if fd is None else fd
    u = np.asarray(u, dtype=float)
    chart = induced_chart(h, fd=fd)
    geom = point_geometry(chart, u, fd=fd)

    S = second_fundamental_form(h, u, fd=fd).sff.values
    g = geom.g

    gauss = np.einsum('ik,jl->ijkl', g, g) - np.einsum('il,jk->ijkl', g, g) \
        + np.einsum('ik,jl->ijkl', S, S) - np.einsum('il,jk->ijkl', S, S)

    return float(abs(geom.riemann_low - gauss).max())

import numpy as np
from dataclasses import dataclass, asdict

from curvcheck.codazzi import codazzi_residual, ricci_of, traceless_part_of
from curvcheck.conformal import lcf_reconstruction_residual
from curvcheck.config.fd import FDSpec
from curvcheck.config.tolerances import CODAZZI_TOL, LCF_TOL, TRACE_TOL, \
    FD_TOL
from curvcheck.curvature_operator import frame_sectional_curvatures
from curvcheck.exceptions import ShapeError, NonTracelessError, \
    NotCodazziError, NonCommutingError, VanishingNormError, \
    InapplicableFormulaError, DimensionError
from curvcheck.geometry.chart import point_geometry
from curvcheck.geometry.fields import _nabla, laplace_beltrami, \
    squared_norm_function, norm_function, trace_function, differential
from curvcheck.linalg_utils import orthonormal_frame, euclid_norm
from curvcheck.tensor_core import norm_sq, raise_all, trace_g, \
    symmetric_eigen


@dataclass(frozen=True)
class BochnerBreakdown:
    """
    The three terms of a Weitzenbock identity 1/2 Lap ||T||^2 = Q(T, T) + ||nabla T||^2 at a point.

    Attributes
    ----------
    lhs: float
        1/2 Lap ||T||^2.

    q_term: float
        The curvature term Q(T, T).

    grad_term: float
        ||nabla T||^2.
    """
    lhs: float
    q_term: float
    grad_term: float

    @property
    def residual(self):
        return self.lhs - self.q_term - self.grad_term

    def to_dict(self):
        out = asdict(self)
        out['residual'] = self.residual
        return out


def q_form(geom, T):
    """
    The quadratic form

    Q_p(T, T) = R_ij T^{i K} T^j_K - (p - 1) R_ijkl T^{ik K'} T^{jl}_{K'}

    of a symmetric p-tensor at a point, p >= 2.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at the point.

    T: array-like, shape (n, ) * p
        Covariant components.

    Output
    ------
    q: float
    """
    T = np.asarray(T, dtype=float)
    p = T.ndim
    if p < 2:
        raise ShapeError("Q_p needs p >= 2, got {}".format(p))
    n = geom.dim
    g_inv = geom.g_inv

    T_up = raise_all(T, g_inv)
    T_first = raise_all(T, g_inv, n_slots=1)
    T_two = raise_all(T, g_inv, n_slots=2)

    # M_ij = T^{iK} T^j_K
    M = T_up.reshape(n, -1) @ T_first.reshape(n, -1).T
    ricci_term = (geom.ricci * M).sum()

    # P[i, k, j, l] = T^{ik K'} T^{jl}_{K'}
    P = np.einsum('ika,jla->ikjl', T_up.reshape(n, n, -1),
                  T_two.reshape(n, n, -1))
    riemann_term = np.einsum('ijkl,ikjl->', geom.riemann_low, P)

    return float(ricci_term - (p - 1) * riemann_term)


def _check_traceless(T, g_inv, trace_tol=TRACE_TOL):
    nrm = np.sqrt(norm_sq(T, g_inv))
    tr = trace_g(T, g_inv)
    tr_norm = np.sqrt(norm_sq(tr, g_inv)) if np.ndim(tr) else abs(float(tr))
    if tr_norm > trace_tol * max(1., nrm):
        raise NonTracelessError("Field is not traceless: |trace_g T| = {:.3g}".
                                format(tr_norm))


def q_p(field, chart, x, fd=None, geom=None, trace_tol=TRACE_TOL):
    """
    The curvature term Q_p(T, T) of the Weitzenbock formula for a traceless symmetric p-tensor field.

    Parameters
    ----------
    field: SymTensorField
        A field of rank p >= 2, traceless at x.

    chart: ChartManifold
        The chart.

    x: array-like, shape (n, )
        The point.

    fd: None, FDSpec
        Finite-difference steps.

    geom: None, PointGeometry
        (Optional) Precomputed geometry at x.

    trace_tol: float
        Relative tolerance for the tracelessness precondition.

    Output
    ------
    q: float
    """
    if field.rank < 2:
        raise ShapeError("Q_p needs p >= 2, got {}".format(field.rank))
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)
    geom = point_geometry(chart, x, fd=fd) if geom is None else geom

    T = field(x)
    _check_traceless(T, geom.g_inv, trace_tol=trace_tol)
    return q_form(geom, T)


def q2_spectral_form(geom, T, commute_tol=1e-8, noise_tol=FD_TOL):
    """
    Q_2(T, T) = sum_{i<j} sec(e_i, e_j)(lambda_i - lambda_j)^2 with lambda_i, e_i the eigenvalues and g-orthonormal eigenvectors of T.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at the point.

    T: array-like, shape (n, n)
        Covariant components of a symmetric 2-tensor.

    commute_tol: float
        The commutator of T and Ric in an orthonormal frame may be at most commute_tol * ||T|| * ||Ric|| + noise_tol * ||T||.

    noise_tol: float
        Allowance for the finite-difference noise of Ric.

    Output
    ------
    q: float
    """
    E = orthonormal_frame(geom.g)
    M = E.T @ np.asarray(T, dtype=float) @ E
    M = 0.5 * (M + M.T)
    Rf = E.T @ geom.ricci @ E

    t_norm, r_norm = euclid_norm(M), euclid_norm(Rf)
    comm = euclid_norm(M @ Rf - Rf @ M)
    if comm > commute_tol * t_norm * r_norm + noise_tol * t_norm:
        raise NonCommutingError("T does not commute with Ric: "
                                "||[T, Ric]|| = {:.3g}".format(comm))

    evals, evecs = symmetric_eigen(M)
    K = frame_sectional_curvatures(geom, frame=E @ evecs)

    diffs = (evals[:, None] - evals[None, :]) ** 2
    return float(np.triu(K * diffs, k=1).sum())


def q2_spectral(field, chart, x, fd=None, geom=None, commute_tol=1e-8,
                noise_tol=FD_TOL):
    """
    Spectral form of Q_2 for a symmetric 2-tensor field that commutes with the Ricci tensor at x. See q2_spectral_form.
    """
    if field.rank != 2:
        raise ShapeError("q2_spectral needs a rank 2 field, got {}".
                         format(field.rank))
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)
    geom = point_geometry(chart, x, fd=fd) if geom is None else geom

    return q2_spectral_form(geom, field(x), commute_tol=commute_tol,
                            noise_tol=noise_tol)


def bochner_residual(field, chart, x, fd=None, codazzi_tol=CODAZZI_TOL,
                     trace_tol=TRACE_TOL):
    """
    The three terms of the Weitzenbock formula 1/2 Lap ||T||^2 = Q_p(T, T) + ||nabla T||^2 for a traceless Codazzi p-tensor. A Codazzi 2-tensor with constant trace is also accepted, in which case Q_2 is evaluated on T itself (Q_2 and Lap ||T||^2 do not see the trace part).

    Parameters
    ----------
    field: SymTensorField
        A field of rank p >= 2.

    chart: ChartManifold
        The chart.

    x: array-like, shape (n, )
        The point.

    fd: None, FDSpec
        Finite-difference steps.

    codazzi_tol: float
        Tolerance for the Codazzi and constant trace preconditions.

    trace_tol: float
        Relative tolerance for the tracelessness precondition.

    Output
    ------
    breakdown: BochnerBreakdown
    """
    if field.rank < 2:
        raise ShapeError("The Weitzenbock formula needs p >= 2, got {}".
                         format(field.rank))
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)

    geom = point_geometry(chart, x, fd=fd)
    nabla, _ = _nabla(field, chart, x, fd=fd, geom=geom)

    #################################
    # check the field preconditions #
    #################################
    cod = float(abs(nabla - np.swapaxes(nabla, 0, 1)).max())
    if cod > codazzi_tol:
        raise NotCodazziError("Field {} is not Codazzi at the point: "
                              "residual {:.3g}".format(field.name, cod))

    T = field(x)
    try:
        _check_traceless(T, geom.g_inv, trace_tol=trace_tol)
    except NonTracelessError:
        if field.rank != 2:
            raise

        depth = max(field.fd_depth, chart.fd_depth)
        d_trace = differential(trace_function(field, chart), chart, x,
                               fd=fd, depth=depth)
        d_norm = np.sqrt(norm_sq(d_trace, geom.g_inv))
        if d_norm > codazzi_tol:
            raise NonTracelessError("Field {} is neither traceless nor of "
                                    "constant trace: ||d trace|| = {:.3g}".
                                    format(field.name, d_norm))

    ############################
    # evaluate the three terms #
    ############################
    grad_term = norm_sq(nabla, geom.g_inv)
    q_term = q_form(geom, T)
    lhs = 0.5 * laplace_beltrami(squared_norm_function(field, chart),
                                 chart, x, fd=fd, depth=field.fd_depth,
                                 geom=geom)

    return BochnerBreakdown(lhs=float(lhs), q_term=float(q_term),
                            grad_term=float(grad_term))


def subharmonicity_gap(field, chart, x, fd=None, codazzi_tol=CODAZZI_TOL,
                       q_tol=FD_TOL):
    """
    1/2 Lap ||T||^2 at a point where Q(T, T) >= 0; non-negative values certify that ||T||^2 is subharmonic there.
    """
    breakdown = bochner_residual(field, chart, x, fd=fd,
                                 codazzi_tol=codazzi_tol)
    if breakdown.q_term < -q_tol:
        raise InapplicableFormulaError("Q(T, T) = {:.3g} < 0".
                                       format(breakdown.q_term))
    return breakdown.lhs


def kato_gap(field, chart, x, fd=None, zero_tol=1e-6):
    """
    ||nabla T||^2 - ||d ||T|| ||^2, which the Kato inequality says is non-negative away from the zeros of T.

    Parameters
    ----------
    field: SymTensorField
        The field.

    chart: ChartManifold
        The chart.

    x: array-like, shape (n, )
        The point.

    fd: None, FDSpec
        Finite-difference steps.

    zero_tol: float
        Points with ||T|| < zero_tol are rejected.

    Output
    ------
    gap: float
    """
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)

    nabla, geom = _nabla(field, chart, x, fd=fd)
    nrm = np.sqrt(norm_sq(field(x), geom.g_inv))
    if nrm < zero_tol:
        raise VanishingNormError("||T|| = {:.3g} is below {}".
                                 format(nrm, zero_tol))

    depth = max(field.fd_depth, chart.fd_depth)
    d_norm = differential(norm_function(field, chart), chart, x, fd=fd,
                          depth=depth)
    return float(norm_sq(nabla, geom.g_inv) - norm_sq(d_norm, geom.g_inv))


def okumura_gap(T, metric=None, trace_tol=1e-10):
    """
    tr(T^3) + (n - 2) / sqrt(n (n - 1)) ||T||^3 for a traceless symmetric matrix, which the Okumura inequality says is non-negative.

    Parameters
    ----------
    T: array-like, shape (n, n)
        Covariant components of a traceless symmetric 2-tensor.

    metric: None, array-like, shape (n, n)
        The metric; defaults to the identity.

    trace_tol: float
        Relative tolerance for the tracelessness precondition.

    Output
    ------
    gap: float
    """
    T = np.asarray(T, dtype=float)
    n = T.shape[0]
    if metric is not None:
        E = orthonormal_frame(metric)
        T = E.T @ T @ E

    T = 0.5 * (T + T.T)
    nrm = euclid_norm(T)
    if abs(np.trace(T)) > trace_tol * max(1., nrm):
        raise NonTracelessError("Okumura needs a traceless matrix, trace = "
                                "{:.3g}".format(np.trace(T)))

    cubic = np.trace(T @ T @ T)
    bound = -(n - 2) / np.sqrt(n * (n - 1)) * nrm ** 3
    return float(cubic - bound)


def pinching_rhs(scalar, rbar_norm, n):
    """
    (1 / (n - 1)) ||Ric_0||^2 (s - sqrt(n (n - 1)) ||Ric_0||).
    """
    return rbar_norm ** 2 * (scalar - np.sqrt(n * (n - 1)) * rbar_norm) \
        / (n - 1)


def ricci_pinching_gaps(chart, x, fd=None, lcf_tol=LCF_TOL,
                        codazzi_tol=CODAZZI_TOL, zero_tol=1e-6):
    """
    The Ricci pinching chain at a locally conformally flat point, with Ric_0 = Ric - (s / n) g the traceless Ricci tensor.

    Parameters
    ----------
    chart: ChartManifold
        The chart, n >= 3.

    x: array-like, shape (n, )
        The point.

    fd: None, FDSpec
        Finite-difference steps.

    lcf_tol: float
        The point must satisfy lcf_reconstruction_residual <= lcf_tol.

    codazzi_tol: float
        The Laplacian gaps need Ric to be Codazzi at x within this tolerance.

    zero_tol: float
        The norm form needs ||Ric_0|| >= zero_tol.

    Output
    ------
    gaps: dict
        identity_residual: Q_2(Ric_0) - s ||Ric_0||^2 / (n - 1) - n / (n - 2) tr(Ric_0^3), zero on LCF manifolds.

        pinching_gap: Q_2(Ric_0) - rhs, non-negative by the Okumura inequality.

        laplacian_gap: 1/2 Lap ||Ric||^2 - rhs, or None if Ric is not Codazzi at x.

        norm_laplacian_gap: ||Ric_0|| Lap ||Ric_0|| - rhs, or None if Ric is not Codazzi or Ric_0 vanishes at x.

        where rhs = pinching_rhs(s, ||Ric_0||, n).
    """
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)
    n = chart.dim
    if n < 3:
        raise DimensionError("The pinching chain needs n >= 3, got {}".
                             format(n))

    geom = point_geometry(chart, x, fd=fd)
    lcf = lcf_reconstruction_residual(geom)
    if lcf > lcf_tol:
        raise InapplicableFormulaError("Not locally conformally flat at the "
                                       "point: residual {:.3g}".format(lcf))

    s = geom.scalar
    rbar = geom.ricci - s / n * geom.g
    rbar_norm = np.sqrt(norm_sq(rbar, geom.g_inv))

    E = orthonormal_frame(geom.g)
    rbar_frame = E.T @ rbar @ E
    cubic = np.trace(rbar_frame @ rbar_frame @ rbar_frame)

    q = q_form(geom, rbar)
    rhs = pinching_rhs(s, rbar_norm, n)

    out = {'identity_residual': float(q - s * rbar_norm ** 2 / (n - 1) -
                                      n / (n - 2) * cubic),
           'pinching_gap': float(q - rhs),
           'laplacian_gap': None,
           'norm_laplacian_gap': None}

    ric = ricci_of(chart, fd=fd)
    if codazzi_residual(ric, chart, x, fd=fd, geom=geom) > codazzi_tol:
        return out

    lap = laplace_beltrami(squared_norm_function(ric, chart), chart, x,
                           fd=fd, depth=ric.fd_depth, geom=geom)
    out['laplacian_gap'] = float(0.5 * lap - rhs)

    if rbar_norm >= zero_tol:
        ric0 = traceless_part_of(ric, chart)
        lap_norm = laplace_beltrami(norm_function(ric0, chart), chart, x,
                                    fd=fd, depth=ric0.fd_depth, geom=geom)
        out['norm_laplacian_gap'] = float(rbar_norm * lap_norm - rhs)

    return out


def inequality_gaps(field=None, chart=None, x=None, matrix=None, fd=None):
    """
    Named gaps of the inequalities used to prove the vanishing theorems. Each gap is LHS - RHS; non-negative values certify the inequality. Gaps whose inputs are not supplied or whose preconditions fail are omitted.

    Parameters
    ----------
    field: None, SymTensorField
        Field for the Kato gap.

    chart: None, ChartManifold
        Chart for the Kato and Ricci pinching gaps.

    x: None, array-like
        The point.

    matrix: None, array-like, shape (n, n)
        A traceless symmetric matrix for the Okumura gap. Defaults to the traceless Ricci tensor of the chart at x.

    fd: None, FDSpec
        Finite-difference steps.

    Output
    ------
    gaps: dict
        Keys among 'kato', 'okumura', 'pinching', 'laplacian_pinching', 'norm_laplacian_pinching'.
    """
    fd = FDSpec() if fd is None else fd
    out = {}

    if field is not None and chart is not None and x is not None:
        try:
            out['kato'] = kato_gap(field, chart, x, fd=fd)
        except VanishingNormError:
            pass

    if matrix is None and chart is not None and x is not None:
        geom = point_geometry(chart, x, fd=fd)
        matrix = geom.ricci - geom.scalar / geom.dim * geom.g
        out['okumura'] = okumura_gap(matrix, metric=geom.g,
                                     trace_tol=1e-8)

    elif matrix is not None:
        out['okumura'] = okumura_gap(matrix)

    if chart is not None and x is not None and chart.dim >= 3:
        try:
            pinch = ricci_pinching_gaps(chart, x, fd=fd)
            out['pinching'] = pinch['pinching_gap']
            if pinch['laplacian_gap'] is not None:
                out['laplacian_pinching'] = pinch['laplacian_gap']
            if pinch['norm_laplacian_gap'] is not None:
                out['norm_laplacian_pinching'] = pinch['norm_laplacian_gap']
        except InapplicableFormulaError:
            pass

    return out

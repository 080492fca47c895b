import numpy as np

from curvcheck.config.fd import FDSpec
from curvcheck.exceptions import ShapeError, ContractViolationError
from curvcheck.finite_diff import central_diff, second_diff
from curvcheck.geometry.chart import point_geometry
from curvcheck.tensor_core import DenseTensor, is_symmetric, norm_sq, \
    trace_g


class SymTensorField:
    """
    A symmetric covariant p-tensor field on a chart.

    Parameters
    ----------
    rank: int
        The rank p >= 1.

    func: callable(x) -> array-like, shape (n, ) * p
        Evaluates the components T_{k1...kp}(x). Must be pure.

    name: str
        Label used in reports.

    fd_depth: int
        Depth of the evaluator; 0 if func is analytic, larger if func differentiates internally.
    """
    def __init__(self, rank, func, name='field', fd_depth=0):
        if rank < 1:
            raise ShapeError("Fields must have rank >= 1, got {}".
                             format(rank))
        self.rank = rank
        self.func = func
        self.name = name
        self.fd_depth = fd_depth

    def __call__(self, x):
        """
        Components at x as a validated array.
        """
        T = np.asarray(self.func(np.asarray(x, dtype=float)), dtype=float)
        if T.ndim != self.rank:
            raise ShapeError("Field {} returned rank {}, declared {}".
                             format(self.name, T.ndim, self.rank))

        if not is_symmetric(T, tol=1e-12):
            raise ContractViolationError("Field {} is not symmetric at {}".
                                         format(self.name, list(x)))
        return T

    def eval(self, x):
        return DenseTensor(self(x))

    def __repr__(self):
        return 'SymTensorField(name={!r}, rank={})'.format(self.name,
                                                           self.rank)


def _nabla(field, chart, x, fd, geom=None):
    """
    Array version of covariant_derivative; also returns the geometry used.
    """
    step, richardson = fd.resolve(depth=field.fd_depth, order=1)
    chart.check_margin(x, margin=fd.margin(depth=field.fd_depth, order=1))

    if geom is None:
        geom = point_geometry(chart, x, fd=fd)

    T = field(x)
    out = central_diff(field, x, step=step, richardson=richardson)

    for a in range(field.rank):
        # corr[i, k_a, rest] = Gamma^m_{i k_a} T_{.. m ..}
        corr = np.tensordot(geom.gamma, T, axes=([0], [a]))
        out = out - np.moveaxis(corr, 1, 1 + a)

    return out, geom


def covariant_derivative(field, chart, x, fd=None, geom=None):
    """
    The covariant derivative of a tensor field at a point; the derivative slot comes first.

    (nabla T)_{i k1...kp} = d_i T_{k1...kp} - sum_a Gamma^m_{i ka} T_{k1..m..kp}

    Parameters
    ----------
    field: SymTensorField
        The field T.

    chart: ChartManifold
        The chart the field lives on.

    x: array-like, shape (n, )
        The point.

    fd: None, FDSpec
        Finite-difference steps.

    geom: None, PointGeometry
        (Optional) Precomputed geometry at x.

    Output
    ------
    nabla_T: DenseTensor, rank p + 1
    """
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)
    out, _ = _nabla(field, chart, x, fd=fd, geom=geom)
    return DenseTensor(out)


def divergence(field, chart, x, fd=None, geom=None, nabla=None):
    """
    (delta T)_{k2...kp} = - g^{im} (nabla T)_{i m k2...kp}.

    Parameters
    ----------
    field: SymTensorField
        The field T.

    chart: ChartManifold
        The chart the field lives on.

    x: array-like, shape (n, )
        The point.

    fd: None, FDSpec
        Finite-difference steps.

    geom: None, PointGeometry
        (Optional) Precomputed geometry at x.

    nabla: None, array-like
        (Optional) Precomputed covariant derivative at x.

    Output
    ------
    delta_T: DenseTensor, rank p - 1
    """
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)
    if nabla is None or geom is None:
        nabla, geom = _nabla(field, chart, x, fd=fd, geom=geom)
    return DenseTensor(-trace_g(nabla, geom.g_inv))


def laplace_beltrami(func, chart, x, fd=None, depth=0, geom=None):
    """
    The Laplace-Beltrami operator g^{ij}(d_i d_j f - Gamma^k_ij d_k f) of a scalar function.

    Parameters
    ----------
    func: callable(x) -> float
        The scalar function f.

    chart: ChartManifold
        The chart.

    x: array-like, shape (n, )
        The point.

    fd: None, FDSpec
        Finite-difference steps.

    depth: int
        Depth of the evaluator func. Functions built from derived fields (e.g. the norm of a Ricci field) should pass the depth of that field.

    geom: None, PointGeometry
        (Optional) Precomputed geometry at x.

    Output
    ------
    lap: float
    """
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)
    depth = max(depth, chart.fd_depth)

    step, richardson = fd.resolve(depth=depth, order=2)
    chart.check_margin(x, margin=fd.margin(depth=depth, order=2))

    if geom is None:
        geom = point_geometry(chart, x, fd=fd)

    hess = second_diff(func, x, step=step, richardson=richardson)
    grad = central_diff(func, x, step=step, richardson=richardson)

    return float(np.einsum('ij,ij->', geom.g_inv, hess) -
                 np.einsum('ij,kij,k->', geom.g_inv, geom.gamma, grad))


def squared_norm_function(field, chart):
    """
    The scalar function x -> ||T(x)||^2_{g(x)}.
    """
    def func(y):
        return norm_sq(field(y), chart.metric_at(y)[1])
    return func


def norm_function(field, chart):
    """
    The scalar function x -> ||T(x)||_{g(x)}.
    """
    sq = squared_norm_function(field, chart)

    def func(y):
        return np.sqrt(sq(y))
    return func


def trace_function(field, chart):
    """
    The function x -> trace_g T(x) over the first two slots.
    """
    def func(y):
        return trace_g(field(y), chart.metric_at(y)[1])
    return func


def differential(func, chart, x, fd=None, depth=0):
    """
    Coordinate partial derivatives of a scalar (or tensor valued) function, with the margin check of a first derivative.

    Output
    ------
    d: np.ndarray, shape (n, ) + shape of func(x)
    """
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)
    step, richardson = fd.resolve(depth=depth, order=1)
    chart.check_margin(x, margin=fd.margin(depth=depth, order=1))
    return central_diff(func, x, step=step, richardson=richardson)

import numpy as np
from dataclasses import dataclass, asdict
from numbers import Number
from typing import Optional

from curvcheck.catalog.potentials import Polynomial, get_potential
from curvcheck.config.fd import FDSpec
from curvcheck.config.tolerances import CODAZZI_TOL
from curvcheck.exceptions import ShapeError, UnsupportedConstructionError, \
    DimensionError
from curvcheck.finite_diff import second_diff
from curvcheck.geometry.chart import point_geometry
from curvcheck.geometry.fields import SymTensorField, _nabla, \
    trace_function, differential
from curvcheck.linalg_utils import orthonormal_frame
from curvcheck.tensor_core import DenseTensor, norm_sq, trace_g


@dataclass(frozen=True)
class CodazziDiagnostics:
    """
    Codazzi and harmonicity diagnostics of a symmetric 2-tensor at a point.

    Attributes
    ----------
    codazzi_residual: float
        Max-norm of (nabla T)_{xyz} - (nabla T)_{yxz}.

    trace_norm: float
        |trace_g T|.

    trace_gradient_norm: float
        ||d(trace_g T)||.

    divergence_norm: float
        ||delta T||.

    d_nabla_norm: float
        ||d^nabla T||.

    harmonic: bool
        d_nabla_norm <= tol and divergence_norm <= tol.

    identity_residual: float
        ||delta T + d(trace_g T)||.

    identity_holds: None, bool
        Whether identity_residual <= tol; None when the field is not Codazzi at the point so the identity makes no claim.

    tol: float
        The tolerance used.
    """
    codazzi_residual: float
    trace_norm: float
    trace_gradient_norm: float
    divergence_norm: float
    d_nabla_norm: float
    harmonic: bool
    identity_residual: float
    identity_holds: Optional[bool]
    tol: float

    def to_dict(self):
        return asdict(self)


def _check_rank(field, min_rank=2, exact=None):
    if exact is not None and field.rank != exact:
        raise ShapeError("Field {} must have rank {}, got {}".
                         format(field.name, exact, field.rank))
    if field.rank < min_rank:
        raise ShapeError("Field {} must have rank >= {}, got {}".
                         format(field.name, min_rank, field.rank))


def codazzi_residual(field, chart, x, fd=None, geom=None):
    """
    How far a field is from satisfying the Codazzi equation at a point.

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

    geom: None, PointGeometry
        (Optional) Precomputed geometry at x.

    Output
    ------
    resid: float
        Max over all index tuples of |(nabla T)_{i0 i1 K} - (nabla T)_{i1 i0 K}|.
    """
    _check_rank(field, min_rank=2)
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)

    nabla, _ = _nabla(field, chart, x, fd=fd, geom=geom)
    return float(abs(nabla - np.swapaxes(nabla, 0, 1)).max())


def d_nabla(field, chart, x, fd=None, geom=None):
    """
    The exterior covariant derivative (d^nabla T)_{xyz} = (nabla_x T)_{yz} - (nabla_y T)_{xz} of a symmetric 2-tensor.

    Output
    ------
    dT: DenseTensor, rank 3
        Antisymmetric in the first two slots.
    """
    _check_rank(field, exact=2)
    fd = FDSpec() if fd is None else fd
    x = np.asarray(x, dtype=float)

    nabla, _ = _nabla(field, chart, x, fd=fd, geom=geom)
    return DenseTensor(nabla - nabla.transpose(1, 0, 2))


def harmonicity_diagnostics(field, chart, x, fd=None, tol=None):
    """
    Codazzi residual, trace, divergence and d^nabla norms of a symmetric 2-tensor, and whether it is harmonic. Also evaluates the identity delta T = -d(trace_g T) that holds for Codazzi 2-tensors.

    Parameters
    ----------
    field: SymTensorField
        A rank 2 field.

    chart: ChartManifold
        The chart.

    x: array-like, shape (n, )
        The point.

    fd: None, FDSpec
        Finite-difference steps.

    tol: None, float
        Tolerance for the harmonic flag and the identity; defaults to 10 * FD_TOL.

    Output
    ------
    diagnostics: CodazziDiagnostics
    """
    _check_rank(field, exact=2)
    fd = FDSpec() if fd is None else fd
    tol = CODAZZI_TOL if tol is None else tol
    x = np.asarray(x, dtype=float)

    nabla, geom = _nabla(field, chart, x, fd=fd)
    g_inv = geom.g_inv

    dT = nabla - nabla.transpose(1, 0, 2)
    delta = -trace_g(nabla, g_inv)

    T = field(x)
    trace = trace_g(T, g_inv)
    d_trace = differential(trace_function(field, chart), chart, x, fd=fd,
                           depth=max(field.fd_depth, chart.fd_depth))

    cod_resid = float(abs(dT).max())
    div_norm = np.sqrt(norm_sq(delta, g_inv))
    d_nabla_norm = np.sqrt(norm_sq(dT, g_inv))
    ident = np.sqrt(norm_sq(delta + d_trace, g_inv))

    return CodazziDiagnostics(
        codazzi_residual=cod_resid,
        trace_norm=float(abs(trace)),
        trace_gradient_norm=float(np.sqrt(norm_sq(d_trace, g_inv))),
        divergence_norm=float(div_norm),
        d_nabla_norm=float(d_nabla_norm),
        harmonic=bool(d_nabla_norm <= tol and div_norm <= tol),
        identity_residual=float(ident),
        identity_holds=bool(ident <= tol) if cod_resid <= tol else None,
        tol=tol)


################
# Constructors #
################


def metric_multiple(chart, lam=1., fd=None):
    """
    The field lam * g.
    """
    def func(y):
        return lam * chart.metric_at(y)[0]

    return SymTensorField(rank=2, func=func,
                          name='{}*g'.format(lam), fd_depth=chart.fd_depth)


def _get_polynomial(potential, dim):
    if isinstance(potential, str):
        return get_potential(potential, dim=dim)
    return potential


def derivative_tensor(chart, potential, order=2, fd=None):
    """
    The symmetric tensor of order-th partial derivatives of a potential on a flat chart. Since the Christoffel symbols vanish its covariant derivative is the (order + 1)-th derivative tensor, which is fully symmetric, so the field is a Codazzi tensor.

    Parameters
    ----------
    chart: ChartManifold
        Must be flat.

    potential: str, Polynomial, callable
        A catalog potential name, a Polynomial, or any smooth function (differentiated numerically; only order=2 is supported then).

    order: int
        Rank of the field.

    fd: None, FDSpec
        Steps for the numerical fallback.
    """
    if not chart.flat:
        raise UnsupportedConstructionError(
            "Derivative tensor fields are only Codazzi on flat charts; "
            "{} is not flat".format(chart.name))

    if order < 2:
        raise ShapeError("order must be >= 2, got {}".format(order))

    poly = _get_polynomial(potential, dim=chart.dim)
    name = 'D{}({})'.format(order, getattr(poly, 'name', 'f'))

    if isinstance(poly, Polynomial):
        def func(y):
            return poly.derivative_tensor(y, order=order)

        return SymTensorField(rank=order, func=func, name=name, fd_depth=0)

    if order != 2:
        raise UnsupportedConstructionError("Numerical derivative tensors are "
                                           "only available for order 2")
    fd = FDSpec() if fd is None else fd
    step, richardson = fd.resolve(depth=1, order=2)

    def func(y):
        return second_diff(poly, y, step=step, richardson=richardson)

    return SymTensorField(rank=2, func=func, name=name, fd_depth=1)


def hessian(chart, potential, fd=None):
    """
    The Hessian of a potential on a flat chart.
    """
    field = derivative_tensor(chart, potential, order=2, fd=fd)
    field.name = field.name.replace('D2', 'Hess', 1)
    return field


def constant(chart, value):
    """
    The field with constant coordinate components.
    """
    value = np.array(value, dtype=float)
    if value.ndim == 1:
        value = np.diag(value)

    def func(y):
        return value

    return SymTensorField(rank=value.ndim, func=func, name='constant',
                          fd_depth=0)


def frame_constant(chart, value):
    """
    The symmetric 2-tensor whose components in the Gram-Schmidt frame of the coordinate vectors are constant.
    """
    M = np.array(value, dtype=float)
    if M.ndim == 1:
        M = np.diag(M)

    def func(y):
        g = chart.metric_at(y)[0]
        # lowered frame vectors are the columns of W
        W = g @ orthonormal_frame(g)
        return W @ M @ W.T

    return SymTensorField(rank=2, func=func, name='frame_constant',
                          fd_depth=chart.fd_depth)


def ricci_of(chart, fd=None):
    """
    The Ricci tensor of a chart as a field.
    """
    fd = FDSpec() if fd is None else fd
    depth = chart.fd_depth + 1

    def func(y):
        return point_geometry(chart, y, fd=fd, depth=depth).ricci

    return SymTensorField(rank=2, func=func,
                          name='ricci({})'.format(chart.name),
                          fd_depth=chart.fd_depth + 2)


def schouten_of(chart, fd=None):
    """
    The Schouten tensor (n - 2)^{-1}(Ric - s (2n - 2)^{-1} g) of a chart as a field.
    """
    n = chart.dim
    if n < 3:
        raise DimensionError("The Schouten tensor needs n >= 3, got {}".
                             format(n))
    fd = FDSpec() if fd is None else fd
    depth = chart.fd_depth + 1

    def func(y):
        geom = point_geometry(chart, y, fd=fd, depth=depth)
        return (geom.ricci - geom.scalar / (2 * n - 2) * geom.g) / (n - 2)

    return SymTensorField(rank=2, func=func,
                          name='schouten({})'.format(chart.name),
                          fd_depth=chart.fd_depth + 2)


def traceless_part_of(field, chart):
    """
    The traceless part T - (trace_g T / n) g of a symmetric 2-tensor field.
    """
    _check_rank(field, exact=2)
    n = chart.dim

    def func(y):
        g, g_inv = chart.metric_at(y)
        T = field(y)
        return T - trace_g(T, g_inv) / n * g

    return SymTensorField(rank=2, func=func,
                          name='traceless({})'.format(field.name),
                          fd_depth=max(field.fd_depth, chart.fd_depth))


def _hypersurface_sff(hypersurface, fd=None, orientation=1):
    from curvcheck.hypersurface import sff_field
    return sff_field(hypersurface, fd=fd, orientation=orientation)


def make_field(kind, chart=None, fd=None, **kws):
    """
    Builds a symmetric tensor field from a named constructor.

    Parameters
    ----------
    kind: str or SymTensorField
        Must be one of avail_fields. A SymTensorField is returned unchanged.

    chart: None, ChartManifold
        The chart the field lives on (not needed for hypersurface_sff).

    fd: None, FDSpec
        Finite-difference steps for derived fields.

    **kws:
        Keyword arguments of the constructor e.g. lam for metric_multiple, potential for hessian, field for traceless_part_of, hypersurface for hypersurface_sff.

    Output
    ------
    field: SymTensorField
    """
    if isinstance(kind, SymTensorField):
        return kind

    if kind not in field_str2builder:
        raise ValueError("Bad input to kind: {}. Must be one of {}".
                         format(kind, avail_fields))

    if kind == 'hypersurface_sff':
        return _hypersurface_sff(fd=fd, **kws)

    if chart is None:
        raise ValueError("A chart is required for {} fields".format(kind))

    builder = field_str2builder[kind]

    if kind in ['metric_multiple', 'hessian', 'derivative_tensor',
                'ricci_of', 'schouten_of']:
        kws['fd'] = fd

    if kind == 'metric_multiple' and 'lam' in kws and \
            not isinstance(kws['lam'], Number):
        kws['lam'] = float(kws['lam'])

    return builder(chart=chart, **kws)


field_str2builder = {'metric_multiple': metric_multiple,
                     'hessian': hessian,
                     'derivative_tensor': derivative_tensor,
                     'constant': constant,
                     'frame_constant': frame_constant,
                     'ricci_of': ricci_of,
                     'schouten_of': schouten_of,
                     'traceless_part_of': traceless_part_of,
                     'hypersurface_sff': _hypersurface_sff
                     }

avail_fields = list(field_str2builder.keys())

import numpy as np
from dataclasses import dataclass

from curvcheck.config.fd import FDSpec
from curvcheck.exceptions import BoundaryMarginError, ShapeError
from curvcheck.finite_diff import central_diff
from curvcheck.linalg_utils import check_positive_definite


class ChartManifold:
    """
    A Riemannian metric on a coordinate box.

    Parameters
    ----------
    dim: int
        Dimension n.

    domain: array-like, shape (n, 2)
        Closed interval [lo, hi] for each coordinate axis.

    metric: callable(x) -> array-like, shape (n, n)
        Evaluates the metric components g_ij(x). Must be pure and deterministic.

    name: str
        Label used in reports.

    flat: bool
        Declares the metric components constant on the chart (so the Christoffel symbols vanish identically). Hessian type fields may only be built on flat charts.

    fd_depth: int
        Depth of the metric evaluator; 0 for an analytic metric, 1 for a metric computed from first derivatives of an immersion.
    """
    def __init__(self, dim, domain, metric, name='chart', flat=False,
                 fd_depth=0):
        self.dim = int(dim)
        self.domain = np.array(domain, dtype=float).reshape(self.dim, 2)
        self.metric = metric
        self.name = name
        self.flat = flat
        self.fd_depth = fd_depth

        if np.any(self.domain[:, 0] >= self.domain[:, 1]):
            raise ValueError("Bad input to domain: each interval must have "
                             "lo < hi, got {}".format(self.domain.tolist()))

    def metric_at(self, x):
        """
        Validated metric and its inverse at a point.

        Output
        ------
        g, g_inv: np.ndarray, shape (n, n)
        """
        g = np.asarray(self.metric(np.asarray(x, dtype=float)), dtype=float)
        if g.shape != (self.dim, self.dim):
            raise ShapeError("Metric of {} returned shape {}, expected {}".
                             format(self.name, g.shape, (self.dim, self.dim)))
        return check_positive_definite(g, name='metric of ' + self.name)

    def boundary_distance(self, x):
        """
        Smallest distance from x to a face of the coordinate box (negative outside).
        """
        x = np.asarray(x, dtype=float)
        return min((x - self.domain[:, 0]).min(), (self.domain[:, 1] - x).min())

    def check_margin(self, x, margin):
        """
        Raises a BoundaryMarginError unless x is at least margin inside the box.
        """
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim, ):
            raise ShapeError("Point has shape {}, expected ({},)".
                             format(x.shape, self.dim))

        dist = self.boundary_distance(x)
        if dist < margin:
            raise BoundaryMarginError("Point {} is {:.3g} from the boundary "
                                      "of {}; need {:.3g}".
                                      format(x.tolist(), dist, self.name,
                                             margin))

    def center(self):
        return self.domain.mean(axis=1)

    def __repr__(self):
        return 'ChartManifold(name={!r}, dim={})'.format(self.name, self.dim)


@dataclass(frozen=True)
class PointGeometry:
    """
    Curvature data at a point of a chart.

    Index conventions: gamma[k, i, j] = Gamma^k_ij, riemann_up[a, b, c, d] = R^a_bcd with R(d_c, d_d) d_b = R^a_bcd d_a, riemann_low[a, b, c, d] = g_ae R^e_bcd so that sec(X, Y) = R_abcd X^a Y^b X^c Y^d for orthonormal X, Y, ricci[b, d] = R^a_bad.

    Attributes
    ----------
    x: np.ndarray, shape (n, )
    g, g_inv: np.ndarray, shape (n, n)
    gamma: np.ndarray, shape (n, n, n)
    riemann_up, riemann_low: np.ndarray, shape (n, n, n, n)
    ricci: np.ndarray, shape (n, n)
        Symmetrized Ricci tensor.
    scalar: float
    step: float
        The finite-difference step used.
    ricci_asymmetry: float
        max |R_ij - R_ji| of the Ricci contraction before symmetrizing.
    """
    x: np.ndarray
    g: np.ndarray
    g_inv: np.ndarray
    gamma: np.ndarray
    riemann_up: np.ndarray
    riemann_low: np.ndarray
    ricci: np.ndarray
    scalar: float
    step: float
    ricci_asymmetry: float

    @property
    def dim(self):
        return len(self.x)

    def symmetry_residuals(self):
        """
        Max-norm residuals of the algebraic symmetries of the lowered Riemann tensor.

        Output
        ------
        resids: dict
            Keys 'antisym_first', 'antisym_last', 'pair', 'bianchi'.
        """
        R = self.riemann_low
        bianchi = R + np.einsum('iklj->ijkl', R) + np.einsum('iljk->ijkl', R)
        return {'antisym_first': abs(R + R.transpose(1, 0, 2, 3)).max(),
                'antisym_last': abs(R + R.transpose(0, 1, 3, 2)).max(),
                'pair': abs(R - R.transpose(2, 3, 0, 1)).max(),
                'bianchi': abs(bianchi).max()}


def christoffel(chart, x, step, richardson=False):
    """
    Christoffel symbols Gamma^k_ij = 1/2 g^{kl}(d_i g_lj + d_j g_li - d_l g_ij) from central differences of the metric.

    Output
    ------
    gamma: np.ndarray, shape (n, n, n)
        Exactly symmetric in the last two slots.
    """
    _, g_inv = chart.metric_at(x)
    dg = central_diff(lambda y: chart.metric_at(y)[0], x, step=step,
                      richardson=richardson)

    # term[l, i, j] = d_i g_lj + d_j g_li - d_l g_ij
    term = np.einsum('ilj->lij', dg) + np.einsum('jli->lij', dg) - dg
    gamma = 0.5 * np.einsum('kl,lij->kij', g_inv, term)
    return 0.5 * (gamma + gamma.transpose(0, 2, 1))


def point_geometry(chart, x, fd=None, depth=None):
    """
    All curvature data at a point.

    Parameters
    ----------
    chart: ChartManifold
        The chart.

    x: array-like, shape (n, )
        An interior point.

    fd: None, FDSpec
        Finite-difference steps. Defaults to FDSpec().

    depth: None, int
        Depth used to pick the step; defaults to the depth of the chart's metric evaluator. Evaluators that sit on top of the curvature (e.g. a Ricci field) pass a larger depth to get the smoother nested step.

    Output
    ------
    geom: PointGeometry
    """
    fd = FDSpec() if fd is None else fd
    depth = chart.fd_depth if depth is None else depth
    step, richardson = fd.resolve(depth=depth, order=1)

    x = np.asarray(x, dtype=float)
    chart.check_margin(x, margin=2 * step + fd.reach(chart.fd_depth))

    g, g_inv = chart.metric_at(x)

    def gamma_at(y):
        return christoffel(chart, y, step=step, richardson=richardson)

    gamma = gamma_at(x)

    # dgamma[m, k, i, j] = d_m Gamma^k_ij
    dgamma = central_diff(gamma_at, x, step=step, richardson=richardson)

    # R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb
    #           + Gamma^a_ce Gamma^e_db - Gamma^a_de Gamma^e_cb
    riemann_up = np.einsum('cadb->abcd', dgamma) \
        - np.einsum('dacb->abcd', dgamma) \
        + np.einsum('ace,edb->abcd', gamma, gamma) \
        - np.einsum('ade,ecb->abcd', gamma, gamma)

    riemann_low = np.einsum('ae,ebcd->abcd', g, riemann_up)

    ricci = np.einsum('abad->bd', riemann_up)
    ricci_asymmetry = abs(ricci - ricci.T).max()
    ricci = 0.5 * (ricci + ricci.T)
    scalar = float(np.einsum('ij,ij->', g_inv, ricci))

    return PointGeometry(x=x, g=g, g_inv=g_inv, gamma=gamma,
                         riemann_up=riemann_up, riemann_low=riemann_low,
                         ricci=ricci, scalar=scalar, step=step,
                         ricci_asymmetry=ricci_asymmetry)

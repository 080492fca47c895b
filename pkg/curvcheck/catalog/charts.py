"""
Catalog of charts with known curvature.
"""
import numpy as np
from sympy import Matrix, symbols, lambdify
from sympy.parsing.sympy_parser import parse_expr

from curvcheck.geometry.chart import ChartManifold

# polar angles stay this far from the poles so the round metric is well conditioned
POLE_GAP = 0.5


def _sphere_factor(angles):
    """
    Diagonal of the round metric of S^k in hyperspherical coordinates (phi_1, ..., phi_{k-1}, theta): 1, sin^2 phi_1, sin^2 phi_1 sin^2 phi_2, ...
    """
    angles = np.asarray(angles, dtype=float)
    k = len(angles)
    diag = np.ones(k)
    for a in range(1, k):
        diag[a] = diag[a - 1] * np.sin(angles[a - 1]) ** 2
    return diag


def _sphere_domain(k, scale=1.):
    """
    Coordinate box for hyperspherical coordinates on S^k.
    """
    dom = [[POLE_GAP, np.pi - POLE_GAP]] * (k - 1) + [[-np.pi, np.pi]]
    return scale * np.array(dom)


def sphere_point(angles, radius=1.):
    """
    The point of the round sphere of the given radius in R^{k+1} with hyperspherical coordinates (phi_1, ..., phi_{k-1}, theta).
    """
    angles = np.asarray(angles, dtype=float)
    k = len(angles)
    out = np.zeros(k + 1)
    prod = 1.
    for a in range(k - 1):
        out[a] = prod * np.cos(angles[a])
        prod *= np.sin(angles[a])
    out[k - 1] = prod * np.cos(angles[-1])
    out[k] = prod * np.sin(angles[-1])
    return radius * out


def euclidean(n=2):
    """
    Flat R^n on [-1, 1]^n.
    """
    return ChartManifold(dim=n, domain=[[-1., 1.]] * n,
                         metric=lambda x: np.eye(n),
                         name='euclidean:n={}'.format(n), flat=True)


def sphere(n=2, r=1.):
    """
    The round sphere S^n(r) in hyperspherical coordinates; sec = 1 / r^2.
    """
    if n < 2:
        raise ValueError("Bad input to n: must be >= 2, got {}".format(n))

    def metric(x):
        return r ** 2 * np.diag(_sphere_factor(x))

    return ChartManifold(dim=n, domain=_sphere_domain(n), metric=metric,
                         name='sphere:n={},r={:g}'.format(n, r))


def hyperbolic(n=2):
    """
    The upper half-space model of H^n; sec = -1.
    """
    if n < 2:
        raise ValueError("Bad input to n: must be >= 2, got {}".format(n))

    def metric(x):
        return np.eye(n) / x[-1] ** 2

    domain = [[-1., 1.]] * (n - 1) + [[0.5, 2.]]
    return ChartManifold(dim=n, domain=domain, metric=metric,
                         name='hyperbolic:n={}'.format(n))


def flat_torus(n=2, skew=0.3):
    """
    A flat torus R^n / 2 pi Z^n with a constant skewed metric.
    """
    A = np.eye(n) + skew / n * (np.ones((n, n)) - np.eye(n))
    return ChartManifold(dim=n, domain=[[0., 2 * np.pi]] * n,
                         metric=lambda x: A,
                         name='flat_torus:n={}'.format(n), flat=True)


def cylinder(n=3):
    """
    The cylinder R x S^{n-1}: locally conformally flat with parallel, non-Einstein Ricci tensor.
    """
    if n < 3:
        raise ValueError("Bad input to n: must be >= 3, got {}".format(n))

    def metric(x):
        return np.diag(np.concatenate([[1.], _sphere_factor(x[1:])]))

    domain = np.vstack([[[-1., 1.]], _sphere_domain(n - 1)])
    return ChartManifold(dim=n, domain=domain, metric=metric,
                         name='cylinder:n={}'.format(n))


def s2xs2():
    """
    The product S^2 x S^2 of unit spheres. Its Weyl tensor does not vanish, so it is not locally conformally flat.
    """
    def metric(x):
        return np.diag(np.concatenate([_sphere_factor(x[:2]),
                                       _sphere_factor(x[2:])]))

    domain = np.vstack([_sphere_domain(2), _sphere_domain(2)])
    return ChartManifold(dim=4, domain=domain, metric=metric, name='nonlcf')


def s2xh2():
    """
    The product S^2 x H^2 of a unit sphere and a hyperbolic plane: locally conformally flat with zero scalar curvature.
    """
    def metric(x):
        return np.diag(np.concatenate([_sphere_factor(x[:2]),
                                       np.ones(2) / x[3] ** 2]))

    domain = np.vstack([_sphere_domain(2), [[-1., 1.], [0.5, 2.]]])
    return ChartManifold(dim=4, domain=domain, metric=metric, name='s2xh2')


def conformal_flat(n=3, a=0.3, b=0.2):
    """
    The conformally flat metric exp(2 f) delta with f(x) = a sin(x_1) + b x_2^2, which has non-constant scalar curvature.
    """
    if n < 2:
        raise ValueError("Bad input to n: must be >= 2, got {}".format(n))

    def metric(x):
        f = a * np.sin(x[0]) + b * x[1] ** 2
        return np.exp(2 * f) * np.eye(n)

    return ChartManifold(dim=n, domain=[[-1., 1.]] * n, metric=metric,
                         name='conformal_flat:n={}'.format(n))


def inline_chart(dim, domain, metric, flat=False, name='inline'):
    """
    A chart whose metric is given as text.

    Parameters
    ----------
    dim: int
        Dimension n.

    domain: array-like, shape (n, 2)
        Coordinate box.

    metric: str
        Rows separated by ';', entries by ','; entries are expressions in x1, ..., xn e.g. 'exp(2*x1), 0; 0, exp(2*x1)'.

    flat: bool
        Declares the metric constant.

    name: str
        Label.

    Output
    ------
    chart: ChartManifold
    """
    xs = symbols(' '.join('x{}'.format(i + 1) for i in range(dim)))
    xs = xs if isinstance(xs, tuple) else (xs, )
    local = {str(s): s for s in xs}

    rows = [r for r in metric.split(';') if r.strip()]
    entries = [[parse_expr(e.strip(), local_dict=local) for e in r.split(',')]
               for r in rows]
    if len(entries) != dim or any(len(r) != dim for r in entries):
        raise ValueError("Bad input to metric: expected a {0}x{0} matrix, "
                         "got {1}".format(dim, metric))

    func = lambdify(xs, Matrix(entries), modules='numpy')

    def metric_func(x):
        return np.array(func(*x), dtype=float)

    return ChartManifold(dim=dim, domain=domain, metric=metric_func,
                         name=name, flat=flat)

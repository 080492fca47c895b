"""
Catalog of minimal hypersurfaces of the unit sphere S^{n+1}.
"""
import numpy as np

from curvcheck.catalog.charts import sphere_point, _sphere_domain
from curvcheck.hypersurface import Hypersurface


def equator(n=2):
    """
    The totally geodesic equator S^n = S^{n+1} cap {x_{n+2} = 0}.
    """
    if n < 2:
        raise ValueError("Bad input to n: must be >= 2, got {}".format(n))

    def immersion(u):
        return np.concatenate([sphere_point(u), [0.]])

    return Hypersurface(dim=n, param_domain=_sphere_domain(n),
                        immersion=immersion,
                        name='equator:n={}'.format(n),
                        expected_sff_norm_sq=0., minimal=True)


def _factor_point(u, r):
    # arc length on circles, rescaled hyperspherical angles otherwise
    return sphere_point(np.asarray(u) / r, radius=r)


def clifford(n=2, k=1):
    """
    The generalized Clifford torus S^k(sqrt(k / n)) x S^{n-k}(sqrt((n - k) / n)), a minimal hypersurface of S^{n+1} with ||S||^2 = n.
    """
    if not 1 <= k < n:
        raise ValueError("Bad input to k: must satisfy 1 <= k < n, got "
                         "n={}, k={}".format(n, k))

    r1, r2 = np.sqrt(k / n), np.sqrt((n - k) / n)

    def immersion(u):
        return np.concatenate([_factor_point(u[:k], r1),
                               _factor_point(u[k:], r2)])

    domain = np.vstack([_sphere_domain(k, scale=r1),
                        _sphere_domain(n - k, scale=r2)])

    return Hypersurface(dim=n, param_domain=domain, immersion=immersion,
                        name='clifford:n={},k={}'.format(n, k),
                        expected_sff_norm_sq=float(n), minimal=True)

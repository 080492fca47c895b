"""
Checks of the intrinsic curvature computed from the chart.
"""
import numpy as np

from curvcheck.checks.base import register_check
from curvcheck.codazzi import metric_multiple
from curvcheck.curvature_operator import bridging_identities, \
    frame_sectional_curvatures, plane_invariance_residual, \
    random_orthonormal_pair, sectional_curvature
from curvcheck.geometry.fields import covariant_derivative
from curvcheck.linalg_utils import orthonormal_frame


@register_check('riemann_symmetries', tol=5e-5,
                description='antisymmetries, pair symmetry and first '
                            'Bianchi identity of R_ijkl')
def riemann_symmetries(ctx):
    resids = ctx.geom.symmetry_residuals()
    worst = max(resids, key=resids.get)
    return resids[worst], 'worst: {}'.format(worst)


@register_check('metric_compatibility', tol=1e-5,
                description='max |nabla g| of the Levi-Civita connection')
def metric_compatibility(ctx):
    field = metric_multiple(ctx.chart, 1.)
    nabla = covariant_derivative(field, ctx.chart, ctx.x, fd=ctx.fd,
                                 geom=ctx.geom)
    return abs(nabla.values).max()


@register_check('ricci_symmetry', tol=1e-5,
                description='max |R_ij - R_ji| of the Ricci contraction')
def ricci_symmetry(ctx):
    return ctx.geom.ricci_asymmetry


@register_check('constant_curvature', tol=1e-4,
                description='sec and Ric against a declared constant '
                            'sectional curvature')
def constant_curvature(ctx):
    K = ctx.target.get_known('sectional')
    geom = ctx.geom
    n = geom.dim
    rng = ctx.rng()

    frame = orthonormal_frame(geom.g)
    secs = list(frame_sectional_curvatures(geom, frame)[np.triu_indices(n, 1)])
    for _ in range(5):
        X, Y = random_orthonormal_pair(geom, rng)
        secs.append(sectional_curvature(geom, X, Y))
    sec_err = abs(np.array(secs) - K).max()

    ric_frame = frame.T @ geom.ricci @ frame
    ric_err = abs(ric_frame - (n - 1) * K * np.eye(n)).max()

    return max(sec_err, ric_err), \
        'sec error {:.3g}, Ric error {:.3g}'.format(sec_err, ric_err)


@register_check('scalar_curvature', tol=1e-3,
                description='scalar curvature against its declared value')
def scalar_curvature(ctx):
    s0 = ctx.target.get_known('scalar')
    return ctx.geom.scalar - s0, 's = {:.10g}'.format(ctx.geom.scalar)


@register_check('plane_invariance', tol=1e-6,
                description='sec is unchanged when a plane is re-spanned')
def plane_invariance(ctx):
    rng = ctx.rng()
    X, Y = random_orthonormal_pair(ctx.geom, rng)
    return plane_invariance_residual(ctx.geom, X, Y, random_state=rng)


@register_check('bridging_identities', tol=1e-4,
                description='g(R(theta), theta) = 2 sec(X, Y) and '
                            'Ric(X, X) = sum_a sec(X, e_a)')
def bridging(ctx):
    res = bridging_identities(ctx.geom, n_pairs=20,
                              random_state=ctx.random_state)
    return max(res), 'operator-sectional {:.3g}, Ricci-sum {:.3g}'.\
        format(res.op_sec_residual, res.ricci_sum_residual)

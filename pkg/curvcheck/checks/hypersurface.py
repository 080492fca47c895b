"""
Checks of hypersurface targets.
"""
from curvcheck.checks.base import register_check
from curvcheck.exceptions import MissingReferenceError
from curvcheck.hypersurface import second_fundamental_form, \
    simons_identity_residual, simons_kato_gap, gauss_equation_residual, \
    sphere_constraint_residual


def _sff(ctx):
    hyper = ctx.target.require_hypersurface()
    return hyper, second_fundamental_form(hyper, ctx.x, fd=ctx.fd)


@register_check('sff_norm', tol=1e-5,
                description='||S||^2 against its declared value')
def sff_norm(ctx):
    hyper, data = _sff(ctx)
    expected = ctx.target.get_known('sff_norm_sq')
    return data.sff_norm_sq - expected, \
        '||S||^2 = {:.10g}, ||F| - 1| = {:.3g}'.\
        format(data.sff_norm_sq, sphere_constraint_residual(hyper, ctx.x))


@register_check('minimality', tol=1e-8,
                description='mean curvature of a minimal hypersurface')
def minimality(ctx):
    _, data = _sff(ctx)
    if not ctx.target.known.get('minimal'):
        raise MissingReferenceError("Target {} is not declared minimal".
                                    format(ctx.target.label))
    return data.mean_curvature


@register_check('simons_identity', tol=1e-4,
                description='1/2 Lap ||S||^2 = ||S||^2 (n - ||S||^2) + '
                            '||nabla S||^2')
def simons_identity(ctx):
    out = simons_identity_residual(ctx.target.require_hypersurface(), ctx.x,
                                   fd=ctx.fd)
    return out.residual, 'lhs {:.6g}, q {:.6g}, grad {:.6g}'.\
        format(out.lhs, out.q_term, out.grad_term)


@register_check('simons_kato', kind='gap', tol=1e-4,
                description='||S|| Lap ||S|| >= ||S||^2 (n - ||S||^2)')
def simons_kato(ctx):
    return simons_kato_gap(ctx.target.require_hypersurface(), ctx.x,
                           fd=ctx.fd)


@register_check('gauss_equation', tol=1e-4,
                description='intrinsic curvature from the Gauss equation')
def gauss_equation(ctx):
    return gauss_equation_residual(ctx.target.require_hypersurface(), ctx.x,
                                   fd=ctx.fd)

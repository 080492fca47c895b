"""
Checks of the Codazzi property of the target field and its consequences.
"""
import numpy as np

from curvcheck.checks.base import register_check
from curvcheck.codazzi import codazzi_residual, harmonicity_diagnostics
from curvcheck.config.tolerances import CODAZZI_TOL, TRACE_TOL
from curvcheck.exceptions import NotCodazziError, NonTracelessError, \
    InapplicableFormulaError
from curvcheck.hypersurface import sff_field
from curvcheck.tensor_core import norm_sq


@register_check('codazzi', tol=1e-4,
                description='codazzi residual of the target field')
def codazzi(ctx):
    field = ctx.target.require_field()
    return codazzi_residual(field, ctx.chart, ctx.x, fd=ctx.fd,
                            geom=ctx.geom), field.name


@register_check('codazzi_of_S', tol=1e-4,
                description='codazzi residual of the second fundamental form')
def codazzi_of_s(ctx):
    hyper = ctx.target.require_hypersurface()
    field = sff_field(hyper, fd=ctx.fd)
    return codazzi_residual(field, ctx.chart, ctx.x, fd=ctx.fd,
                            geom=ctx.geom)


def _diagnostics(ctx):
    field = ctx.target.require_field()
    return harmonicity_diagnostics(field, ctx.chart, ctx.x, fd=ctx.fd)


def _require_codazzi(diag):
    if diag.codazzi_residual > CODAZZI_TOL:
        raise NotCodazziError("Codazzi residual {:.3g}".
                              format(diag.codazzi_residual))


@register_check('harmonicity', tol=1e-4,
                description='codazzi fields with constant trace are harmonic')
def harmonicity(ctx):
    diag = _diagnostics(ctx)
    _require_codazzi(diag)
    if diag.trace_gradient_norm > CODAZZI_TOL:
        raise InapplicableFormulaError("Trace is not constant: ||d trace|| "
                                       "= {:.3g}".
                                       format(diag.trace_gradient_norm))

    return max(diag.d_nabla_norm, diag.divergence_norm), \
        '||d T|| = {:.3g}, ||delta T|| = {:.3g}'.\
        format(diag.d_nabla_norm, diag.divergence_norm)


@register_check('divergence_identity', tol=2e-5,
                description='delta T = -d(trace_g T) for codazzi 2-tensors')
def divergence_identity(ctx):
    diag = _diagnostics(ctx)
    _require_codazzi(diag)
    return diag.identity_residual


@register_check('divergence_free', tol=1e-4,
                description='traceless codazzi 2-tensors are divergence free')
def divergence_free(ctx):
    diag = _diagnostics(ctx)
    _require_codazzi(diag)

    T = ctx.target.field(ctx.x)
    nrm = np.sqrt(norm_sq(T, ctx.geom.g_inv))
    if diag.trace_norm > TRACE_TOL * max(1., nrm) or \
            diag.trace_gradient_norm > CODAZZI_TOL:
        raise NonTracelessError("|trace_g T| = {:.3g}".
                                format(diag.trace_norm))

    return diag.divergence_norm

"""
Checks of the Weitzenbock formula and the inequalities built on it.
"""
import numpy as np

from curvcheck.checks.base import register_check
from curvcheck.checks.operator import random_traceless
from curvcheck.codazzi import codazzi_residual, traceless_part_of
from curvcheck.config.tolerances import CODAZZI_TOL
from curvcheck.exceptions import NotCodazziError, ShapeError
from curvcheck.geometry.fields import laplace_beltrami, \
    squared_norm_function
from curvcheck.tensor_core import norm_sq, trace_g
from curvcheck.weitzenbock import bochner_residual, q_form, \
    q2_spectral_form, subharmonicity_gap, kato_gap, okumura_gap, \
    ricci_pinching_gaps


def _rank2_field(ctx):
    field = ctx.target.require_field()
    if field.rank != 2:
        raise ShapeError("Field {} has rank {}, expected 2".
                         format(field.name, field.rank))
    return field


def _traceless(T, geom):
    return T - trace_g(T, geom.g_inv) / geom.dim * geom.g


def _scale(T, geom):
    """
    max(1, ||T||^2); finite-difference noise in Lap ||T||^2 grows with ||T||^2.
    """
    return max(1., norm_sq(T, geom.g_inv))


@register_check('bochner', tol=1e-4,
                description='1/2 Lap ||T||^2 = Q(T, T) + ||nabla T||^2 for '
                            'codazzi fields, relative to max(1, ||T||^2)')
def bochner(ctx):
    field = ctx.target.require_field()
    out = bochner_residual(field, ctx.chart, ctx.x, fd=ctx.fd)
    scale = _scale(field(ctx.x), ctx.geom)
    return out.residual / scale, \
        'lhs {:.6g}, Q {:.6g}, grad {:.6g}, scale {:.6g}'.\
        format(out.lhs, out.q_term, out.grad_term, scale)


@register_check('q_spectral', tol=1e-6,
                description='Q_2 agrees with its spectral form for tensors '
                            'commuting with Ric')
def q_spectral(ctx):
    """
    Compares the two forms of Q_2 on the traceless part of the field and, where the curvature is constant (so every tensor commutes with Ric), on random traceless tensors.
    """
    geom = ctx.geom
    tensors = [_traceless(_rank2_field(ctx)(ctx.x), geom)]
    if ctx.target.known.get('sectional') is not None:
        rng = ctx.rng()
        tensors += [random_traceless(geom, rng) for _ in range(5)]

    diffs = [abs(q_form(geom, T) - q2_spectral_form(geom, T))
             for T in tensors]
    return max(diffs), 'Q_2 of the field {:.6g}'.\
        format(q_form(geom, tensors[0]))


@register_check('trace_insensitivity', tol=1e-6,
                description='Q_2(T) = Q_2(T - trace_g T g / n)')
def trace_insensitivity(ctx):
    geom = ctx.geom
    field = _rank2_field(ctx)
    T = field(ctx.x)
    value = q_form(geom, T) - q_form(geom, _traceless(T, geom))

    note = ''
    if codazzi_residual(field, ctx.chart, ctx.x, fd=ctx.fd,
                        geom=geom) <= CODAZZI_TOL:
        tl = traceless_part_of(field, ctx.chart)
        laps = [laplace_beltrami(squared_norm_function(f, ctx.chart),
                                 ctx.chart, ctx.x, fd=ctx.fd,
                                 depth=f.fd_depth, geom=geom)
                for f in [field, tl]]
        note = 'Lap ||T||^2 - Lap ||T_0||^2 = {:.3g}'.\
            format(laps[0] - laps[1])

    return value, note


@register_check('subharmonicity', kind='gap', tol=1e-4,
                description='1/2 Lap ||T||^2 >= 0 where Q(T, T) >= 0, '
                            'relative to max(1, ||T||^2)')
def subharmonicity(ctx):
    field = ctx.target.require_field()
    gap = subharmonicity_gap(field, ctx.chart, ctx.x, fd=ctx.fd)
    return gap / _scale(field(ctx.x), ctx.geom)


@register_check('kato', kind='gap', tol=1e-10,
                description='||nabla T||^2 >= ||d ||T|| ||^2')
def kato(ctx):
    return kato_gap(ctx.target.require_field(), ctx.chart, ctx.x, fd=ctx.fd)


@register_check('okumura', kind='gap', tol=1e-12,
                description='okumura inequality for the traceless Ricci '
                            'tensor (and the traceless part of a 2-tensor '
                            'field)')
def okumura(ctx):
    geom = ctx.geom
    mats = [geom.ricci - geom.scalar / geom.dim * geom.g]
    field = ctx.target.field
    if field is not None and field.rank == 2:
        mats.append(_traceless(field(ctx.x), geom))

    gaps = [okumura_gap(M, metric=geom.g, trace_tol=1e-8) for M in mats]
    return min(gaps), 'traceless Ricci gap {:.6g}'.format(gaps[0])


def _pinching(ctx):
    return ricci_pinching_gaps(ctx.chart, ctx.x, fd=ctx.fd)


@register_check('ricci_pinching', kind='gap', tol=1e-5,
                description='Q_2(Ric_0) >= ||Ric_0||^2 (s - sqrt(n(n-1)) '
                            '||Ric_0||) / (n - 1) on LCF points')
def ricci_pinching(ctx):
    gaps = _pinching(ctx)
    return gaps['pinching_gap'], 'LCF identity residual {:.3g}'.\
        format(gaps['identity_residual'])


@register_check('ricci_laplacian_pinching', kind='gap', tol=1e-4,
                description='1/2 Lap ||Ric||^2 >= ||Ric_0||^2 (s - '
                            'sqrt(n(n-1)) ||Ric_0||) / (n - 1) on LCF points '
                            'with codazzi Ricci tensor, relative to '
                            'max(1, ||Ric||^2)')
def ricci_laplacian_pinching(ctx):
    gaps = _pinching(ctx)
    if gaps['laplacian_gap'] is None:
        raise NotCodazziError("Ricci tensor is not codazzi at the point")

    note = ''
    if gaps['norm_laplacian_gap'] is not None:
        note = 'norm form gap {:.6g}'.format(gaps['norm_laplacian_gap'])
    return gaps['laplacian_gap'] / _scale(ctx.geom.ricci, ctx.geom), note

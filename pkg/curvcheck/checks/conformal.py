"""
Checks of conformal flatness and the LCF curvature formulas.
"""
from curvcheck.checks.base import register_check
from curvcheck.checks.operator import random_traceless
from curvcheck.conformal import lcf_reconstruction_residual, \
    remark7_residuals, schouten_operator_identity_residual
from curvcheck.config.tolerances import EIGEN_ZERO_TOL, LCF_TOL
from curvcheck.exceptions import InapplicableFormulaError


@register_check('lcf_reconstruction', tol=1e-4,
                description='R_ijkl agrees with its reconstruction from Ric '
                            'and s')
def lcf_reconstruction(ctx):
    return lcf_reconstruction_residual(ctx.geom), \
        'weyl norm {:.3g}'.format(ctx.conformal.weyl_norm)


@register_check('weyl_nonvanishing', kind='exceeds', tol=1e-2,
                description='negative control: the reconstruction fails on '
                            'non-LCF charts')
def weyl_nonvanishing(ctx):
    if ctx.target.known.get('lcf') is not False:
        raise InapplicableFormulaError("Target {} is not declared non-LCF".
                                       format(ctx.target.label))
    return lcf_reconstruction_residual(ctx.geom)


@register_check('schouten_relation', tol=1e-9,
                description='Schouten eigenvalues (r_i - s / (2n - 2)) / '
                            '(n - 2)')
def schouten_relation(ctx):
    return ctx.conformal.schouten_relation_residual()


@register_check('remark7', tol=1e-4,
                description='sec on Ricci eigenplanes of LCF points from the '
                            'Ricci and Schouten eigenvalues')
def remark7(ctx):
    res = remark7_residuals(ctx.geom)
    value = max(res.ricci_formula_residual, res.schouten_formula_residual)
    return value, 'sec = lambda_i + lambda_j; the form with an extra ' \
        '(n - 2)^{{-1}} has residual {:.6g}'.\
        format(res.extra_factor_residual)


@register_check('schouten_operator_identity', tol=1e-4,
                description='R_ijkl theta^jk theta^il = 2 Sch_ij theta^ik '
                            'theta^j_k on LCF points')
def schouten_operator_identity(ctx):
    thetas = list(ctx.basis.elements)
    thetas.append(random_traceless(ctx.geom, ctx.rng()))
    return max(schouten_operator_identity_residual(ctx.geom, t)
               for t in thetas)


@register_check('schouten_operator_implication', kind='gap', tol=1e-5,
                description='Schouten >= 0 implies operator >= 0 on LCF '
                            'points')
def schouten_operator_implication(ctx):
    resid = lcf_reconstruction_residual(ctx.geom)
    if resid > LCF_TOL:
        raise InapplicableFormulaError("Not LCF at the point: residual "
                                       "{:.3g}".format(resid))

    sch_min = ctx.conformal.schouten_eigs.min()
    if sch_min < -EIGEN_ZERO_TOL:
        raise InapplicableFormulaError("Schouten tensor has the negative "
                                       "eigenvalue {:.3g}".format(sch_min))

    evals = ctx.spectrum.eigenvalues
    return evals.min(), 'min Schouten eigenvalue {:.6g}, {}'.\
        format(sch_min, ctx.spectrum.classification)

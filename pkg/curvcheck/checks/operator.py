"""
Checks of the curvature operator of the second kind.
"""
import numpy as np

from curvcheck.checks.base import register_check
from curvcheck.config.tolerances import EIGEN_ZERO_TOL
from curvcheck.curvature_operator import basis_gram, frame_sectional_curvatures, \
    operator_form, random_orthonormal_pair, sectional_curvature
from curvcheck.exceptions import InapplicableFormulaError
from curvcheck.linalg_utils import orthonormal_frame
from curvcheck.tensor_core import norm_sq, trace_g, symmetric_eigen
from curvcheck.weitzenbock import q_form


def random_traceless(geom, rng):
    """
    A random traceless symmetric 2-tensor with unit norm, in coordinates.
    """
    n = geom.dim
    A = rng.standard_normal(size=(n, n))
    M = A + A.T
    M -= np.trace(M) / n * np.eye(n)
    M /= np.linalg.norm(M)

    W = geom.g @ orthonormal_frame(geom.g)
    return W @ M @ W.T


def _sampled_secs(geom, rng, n_pairs=20):
    n = geom.dim
    secs = list(frame_sectional_curvatures(geom)[np.triu_indices(n, 1)])
    for _ in range(n_pairs):
        X, Y = random_orthonormal_pair(geom, rng)
        secs.append(sectional_curvature(geom, X, Y))
    return np.array(secs)


@register_check('s02_basis', tol=1e-10,
                description='orthonormality and tracelessness of the S_0^2 '
                            'basis')
def s02_basis_check(ctx):
    basis, geom = ctx.basis, ctx.geom
    gram_err = abs(basis_gram(basis, geom) - np.eye(basis.size)).max()
    trace_err = max(abs(trace_g(theta, geom.g_inv))
                    for theta in basis.elements)
    return max(gram_err, trace_err), \
        'N = {}, gram error {:.3g}, trace error {:.3g}'.\
        format(basis.size, gram_err, trace_err)


@register_check('operator_symmetry', tol=1e-6,
                description='asymmetry of the operator matrix')
def operator_symmetry(ctx):
    return ctx.spectrum.asymmetry


@register_check('operator_spectrum', tol=1e-5,
                description='on constant curvature K every operator '
                            'eigenvalue equals K')
def operator_spectrum(ctx):
    K = ctx.target.get_known('sectional')
    evals = ctx.spectrum.eigenvalues
    return abs(evals - K).max(), 'eigenvalues in [{:.6g}, {:.6g}], {}'.\
        format(evals.min(), evals.max(), ctx.spectrum.classification)


@register_check('operator_sectional_implication', kind='gap', tol=1e-5,
                description='operator >= 0 implies sec >= 0')
def operator_sectional_implication(ctx):
    spec = ctx.spectrum
    if spec.eigenvalues.min() < -EIGEN_ZERO_TOL:
        raise InapplicableFormulaError("Operator is {} (min eigenvalue "
                                       "{:.3g})".
                                       format(spec.classification,
                                              spec.eigenvalues.min()))

    secs = _sampled_secs(ctx.geom, ctx.rng())
    return secs.min(), 'min operator eigenvalue {:.3g}'.\
        format(spec.eigenvalues.min())


@register_check('sectional_q_implication', kind='gap', tol=1e-5,
                description='sec >= 0 implies Q_2(theta, theta) >= 0 for '
                            'traceless theta; the operator form is reported '
                            'in the note')
def sectional_q_implication(ctx):
    """
    Q_2(theta, theta) = sum_{i<j} sec(e_i, e_j)(lambda_i - lambda_j)^2 only involves the eigenplanes of theta, so the premise is checked on the frame planes, random planes and the eigenplanes of every sampled theta. The value is the smallest Q_2(theta, theta) / ||theta||^2. The note reports the smallest g(R(theta), theta) / ||theta||^2, which can be negative even when sec >= 0 (S^2 x S^2), so the operator form itself is not what the implication is stated for.
    """
    geom, rng = ctx.geom, ctx.rng()
    secs = list(_sampled_secs(geom, rng))

    E = orthonormal_frame(geom.g)
    thetas = [random_traceless(geom, rng) for _ in range(20)]
    thetas += list(ctx.basis.elements)
    n = geom.dim
    for theta in thetas:
        _, V = symmetric_eigen(0.5 * (E.T @ theta @ E + E.T @ theta.T @ E))
        K = frame_sectional_curvatures(geom, frame=E @ V)
        secs.extend(K[np.triu_indices(n, 1)])

    if min(secs) < -EIGEN_ZERO_TOL:
        raise InapplicableFormulaError("sec takes the negative value {:.3g}".
                                       format(min(secs)))

    q_vals = [q_form(geom, t) / norm_sq(t, geom.g_inv) for t in thetas]
    op_vals = [operator_form(geom, t) / norm_sq(t, geom.g_inv)
               for t in thetas]

    return min(q_vals), 'operator form not implied by sec >= 0; ' \
        'min g(R(theta), theta) = {:.6g}'.format(min(op_vals))

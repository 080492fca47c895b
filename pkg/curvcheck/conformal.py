"""
Weyl and Schouten tensors, the curvature of a locally conformally flat (LCF) metric reconstructed from its Ricci tensor, and the sectional curvature formulas that hold on LCF manifolds.
"""
import numpy as np
from collections import namedtuple
from dataclasses import dataclass

from curvcheck.config.tolerances import LCF_TOL
from curvcheck.curvature_operator import operator_form, \
    frame_sectional_curvatures
from curvcheck.exceptions import DimensionError, InapplicableFormulaError, \
    NonTracelessError
from curvcheck.linalg_utils import orthonormal_frame
from curvcheck.tensor_core import DenseTensor, SymMatrix, norm_sq, \
    raise_all, trace_g, symmetric_eigen

EigenplaneResiduals = namedtuple('EigenplaneResiduals',
                                 ['ricci_formula_residual',
                                  'schouten_formula_residual',
                                  'extra_factor_residual'])


@dataclass(frozen=True)
class ConformalData:
    """
    Conformal curvature data at a point.

    Attributes
    ----------
    weyl: DenseTensor, rank 4
        R_ijkl minus its LCF reconstruction from Ric and s.

    weyl_norm: float
        g-norm of weyl.

    schouten: SymMatrix
        (n - 2)^{-1}(Ric - s (2n - 2)^{-1} g).

    schouten_eigs: np.ndarray
        Ascending eigenvalues of the Schouten tensor w.r.t. g.

    ricci_eigs: np.ndarray
        Ascending eigenvalues of the Ricci tensor w.r.t. g.
    """
    weyl: DenseTensor
    weyl_norm: float
    schouten: SymMatrix
    schouten_eigs: np.ndarray
    ricci_eigs: np.ndarray

    def schouten_relation_residual(self):
        """
        max_i |lambda_i - (n - 2)^{-1}(r_i - (2n - 2)^{-1} s)|, eigenvalues paired in ascending order.
        """
        n = len(self.ricci_eigs)
        s = self.ricci_eigs.sum()
        pred = (self.ricci_eigs - s / (2 * n - 2)) / (n - 2)
        return float(abs(self.schouten_eigs - pred).max())


def _check_dim(geom):
    if geom.dim < 3:
        raise DimensionError("Conformal curvature needs n >= 3, got {}".
                             format(geom.dim))


def lcf_reconstruction(geom):
    """
    The curvature tensor an LCF metric with the given Ricci tensor and scalar curvature would have,

    (n - 2)^{-1}(R_jl g_ik - R_jk g_il + R_ik g_jl - R_il g_jk) - s ((n - 1)(n - 2))^{-1}(g_jl g_ik - g_jk g_il).

    Output
    ------
    R_lcf: np.ndarray, shape (n, n, n, n)
    """
    _check_dim(geom)
    n = geom.dim
    g, ric, s = geom.g, geom.ricci, geom.scalar

    kn_ric = np.einsum('jl,ik->ijkl', ric, g) \
        - np.einsum('jk,il->ijkl', ric, g) \
        + np.einsum('ik,jl->ijkl', ric, g) \
        - np.einsum('il,jk->ijkl', ric, g)

    kn_g = np.einsum('jl,ik->ijkl', g, g) - np.einsum('jk,il->ijkl', g, g)

    return kn_ric / (n - 2) - s / ((n - 1) * (n - 2)) * kn_g


def schouten_tensor(geom):
    """
    (n - 2)^{-1}(Ric - s (2n - 2)^{-1} g).
    """
    _check_dim(geom)
    n = geom.dim
    return (geom.ricci - geom.scalar / (2 * n - 2) * geom.g) / (n - 2)


def _frame_eigs(geom, M):
    E = orthonormal_frame(geom.g)
    evals, evecs = symmetric_eigen(E.T @ M @ E)
    return evals, E @ evecs


def conformal_data(geom):
    """
    Weyl and Schouten tensors at a point.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at the point, n >= 3.

    Output
    ------
    data: ConformalData
    """
    weyl = geom.riemann_low - lcf_reconstruction(geom)
    sch = schouten_tensor(geom)

    return ConformalData(weyl=DenseTensor(weyl),
                         weyl_norm=float(np.sqrt(norm_sq(weyl, geom.g_inv))),
                         schouten=SymMatrix(sch),
                         schouten_eigs=_frame_eigs(geom, sch)[0],
                         ricci_eigs=_frame_eigs(geom, geom.ricci)[0])


def lcf_reconstruction_residual(geom):
    """
    Max-norm of R_ijkl minus its LCF reconstruction; small values certify the metric is conformally flat in curvature at the point.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at the point, n >= 3.

    Output
    ------
    resid: float
    """
    return float(abs(geom.riemann_low - lcf_reconstruction(geom)).max())


def _check_lcf(geom, lcf_tol):
    resid = lcf_reconstruction_residual(geom)
    if resid > lcf_tol:
        raise InapplicableFormulaError("Not locally conformally flat at {}: "
                                       "reconstruction residual {:.3g}".
                                       format(list(geom.x), resid))


def remark7_residuals(geom, lcf_tol=LCF_TOL):
    """
    Residuals of the sectional curvature formulas on the Ricci eigenplanes of an LCF point.

    With r_i the Ricci eigenvalues, e_i a g-orthonormal Ricci eigenbasis and lambda_i = (n - 2)^{-1}(r_i - (2n - 2)^{-1} s) the Schouten eigenvalues:

    sec(e_i, e_j) = (n - 2)^{-1}(r_i + r_j - (n - 1)^{-1} s)

    sec(e_i, e_j) = lambda_i + lambda_j

    The variant (n - 2)^{-1}(lambda_i + lambda_j) of the second formula only agrees with the first in dimension 3; its residual is returned for reference.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at an LCF point, n >= 3.

    lcf_tol: float
        Tolerance of the LCF gate.

    Output
    ------
    resids: EigenplaneResiduals
        Max over i < j of the absolute formula errors.
    """
    _check_dim(geom)
    _check_lcf(geom, lcf_tol)
    n = geom.dim
    s = geom.scalar

    # ties are fine: sec is constant on planes inside a Ricci eigenspace
    r, frame = _frame_eigs(geom, geom.ricci)
    lam = (r - s / (2 * n - 2)) / (n - 2)
    K = frame_sectional_curvatures(geom, frame=frame)

    iu = np.triu_indices(n, k=1)
    sec = K[iu]
    ric_pred = ((r[:, None] + r[None, :] - s / (n - 1)) / (n - 2))[iu]
    sch_pred = (lam[:, None] + lam[None, :])[iu]

    return EigenplaneResiduals(
        ricci_formula_residual=float(abs(sec - ric_pred).max()),
        schouten_formula_residual=float(abs(sec - sch_pred).max()),
        extra_factor_residual=float(abs(sec - sch_pred / (n - 2)).max()))


def schouten_operator_identity_residual(geom, theta, lcf_tol=LCF_TOL,
                                        trace_tol=1e-10):
    """
    |R_ijkl theta^{jk} theta^{il} - 2 Sch_ij theta^{ik} theta^j_k| for a traceless symmetric 2-tensor theta at an LCF point.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at an LCF point, n >= 3.

    theta: array-like, shape (n, n)
        Covariant components of a traceless symmetric 2-tensor.

    lcf_tol: float
        Tolerance of the LCF gate.

    trace_tol: float
        Relative tolerance for the tracelessness of theta.

    Output
    ------
    resid: float
    """
    _check_dim(geom)
    theta = np.asarray(theta, dtype=float)
    nrm = np.sqrt(norm_sq(theta, geom.g_inv))
    tr = trace_g(theta, geom.g_inv)
    if abs(tr) > trace_tol * max(1., nrm):
        raise NonTracelessError("theta is not traceless: trace {:.3g}".
                                format(tr))
    _check_lcf(geom, lcf_tol)

    lhs = operator_form(geom, theta)

    # (theta theta)^{ij} = theta^{ik} theta^j_k
    sq = raise_all(theta, geom.g_inv) @ theta @ geom.g_inv
    rhs = 2 * (schouten_tensor(geom) * sq).sum()

    return float(abs(lhs - rhs))

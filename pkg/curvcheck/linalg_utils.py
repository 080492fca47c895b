import numpy as np
from warnings import warn

from curvcheck.exceptions import ContractViolationError, SingularMetricError, \
    DegeneratePlaneError


def euclid_norm(x):
    """
    Computes the euclidean (or frobenius) norm of a vector (array).

    Output
    ------
    norm: float
        The euclian or frobenius norm of x.
    """
    return np.sqrt((np.asarray(x) ** 2).sum())


def symmetry_residual(M):
    """
    Max absolute entry of M - M^T.
    """
    M = np.asarray(M)
    return abs(M - M.T).max() if M.size else 0.


def check_symmetric(M, tol=1e-10, name='matrix'):
    """
    Checks a square matrix is symmetric up to a tolerance that scales with the size of the entries.

    Parameters
    ----------
    M: array-like, shape (n, n)
        The matrix.

    tol: float
        Relative tolerance; the allowed asymmetry is tol * max(1, max|M|).

    name: str
        Name used in the error message.

    Output
    ------
    M: array-like, shape (n, n)
        The matrix as a float array.
    """
    M = np.array(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ContractViolationError("{} must be square, got shape {}".
                                     format(name, M.shape))

    scale = max(1., abs(M).max()) if M.size else 1.
    resid = symmetry_residual(M)
    if resid > tol * scale:
        raise ContractViolationError("{} is not symmetric: max|M - M^T| = {}".
                                     format(name, resid))
    return M


def check_positive_definite(g, name='metric'):
    """
    Checks a metric is symmetric positive definite and returns its inverse.

    Parameters
    ----------
    g: array-like, shape (n, n)
        The metric components.

    Output
    ------
    g, g_inv: array-like, shape (n, n)
        The symmetrized metric and its symmetrized inverse.
    """
    g = np.array(g, dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise SingularMetricError("{} must be a square matrix, got shape {}".
                                  format(name, g.shape))

    if not np.all(np.isfinite(g)):
        raise SingularMetricError("{} has non-finite entries".format(name))

    g = 0.5 * (g + g.T)

    # smallest eigenvalue > 1e-10
    try:
        np.linalg.cholesky(g - 1e-10 * np.eye(g.shape[0]))
    except np.linalg.LinAlgError:
        raise SingularMetricError("{} is not positive definite".format(name))

    g_inv = np.linalg.inv(g)
    g_inv = 0.5 * (g_inv + g_inv.T)
    return g, g_inv


def gram_schmidt(vectors, metric=None, tol=1e-12):
    """
    Modified Gram-Schmidt with respect to an inner product matrix.

    Parameters
    ----------
    vectors: array-like, shape (n, k)
        The vectors to orthonormalize are the columns.

    metric: None, array-like, shape (n, n)
        The inner product <u, v> = u^T metric v. Defaults to the identity.

    tol: float
        A vector whose orthogonal part has norm below tol times its original norm is declared dependent.

    Output
    ------
    basis: array-like, shape (n, k)
        Orthonormal columns spanning the same nested subspaces as the input columns.
    """
    V = np.array(vectors, dtype=float)
    if V.ndim == 1:
        V = V.reshape(-1, 1)
    n, k = V.shape
    G = np.eye(n) if metric is None else np.asarray(metric, dtype=float)

    out = np.zeros_like(V)
    for j in range(k):
        v = V[:, j].copy()
        orig_norm = np.sqrt(max(v @ G @ v, 0.))
        for i in range(j):
            v = v - (out[:, i] @ G @ v) * out[:, i]

        norm = np.sqrt(max(v @ G @ v, 0.))
        if orig_norm == 0 or norm <= tol * orig_norm:
            raise DegeneratePlaneError("Vector {} is linearly dependent on "
                                       "the previous ones".format(j))
        out[:, j] = v / norm

    return out


def orthonormal_frame(metric):
    """
    The Gram-Schmidt frame of the coordinate vectors d/dx^1, ..., d/dx^n.

    Parameters
    ----------
    metric: array-like, shape (n, n)
        Metric at the point.

    Output
    ------
    frame: array-like, shape (n, n)
        Columns are the g-orthonormal frame vectors in coordinates. frame.T @ metric @ frame = I.
    """
    metric = np.asarray(metric, dtype=float)
    return gram_schmidt(np.eye(metric.shape[0]), metric=metric)


def off_diagonal_norm(A):
    """
    Frobenius norm of the off-diagonal part of a symmetric matrix.
    """
    return np.sqrt(2 * (np.triu(A, 1) ** 2).sum())


def jacobi_eigh(M, tol=1e-12, max_sweeps=100):
    """
    Eigen-decomposition of a symmetric matrix by the cyclic Jacobi rotation method.

    Parameters
    ----------
    M: array-like, shape (n, n)
        A symmetric matrix.

    tol: float
        Stop once the Frobenius norm of the off-diagonal part is below tol * max(1, ||M||_F).

    max_sweeps: int
        Maximum number of cyclic sweeps.

    Output
    ------
    evals, evecs

    evals: array-like, shape (n, )
        Unsorted eigenvalues.

    evecs: array-like, shape (n, n)
        The corresponding orthonormal eigenvectors as columns.

    References
    ----------
    Golub, G.H. and Van Loan, C.F., 2013. Matrix computations. JHU press. Section 8.5.
    """
    A = np.array(M, dtype=float)
    n = A.shape[0]
    V = np.eye(n)
    thresh = tol * max(1., euclid_norm(A))

    converged = False
    for sweep in range(max_sweeps):
        if off_diagonal_norm(A) <= thresh:
            converged = True
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0:
                    continue

                theta = (A[q, q] - A[p, p]) / (2 * apq)
                sign = 1. if theta >= 0 else -1.
                t = sign / (abs(theta) + np.sqrt(theta ** 2 + 1))
                c = 1 / np.sqrt(t ** 2 + 1)
                s = t * c

                # A <- P^T A P for the rotation P in the (p, q) plane
                Ap, Aq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * Ap - s * Aq
                A[:, q] = s * Ap + c * Aq

                Ap, Aq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * Ap - s * Aq
                A[q, :] = s * Ap + c * Aq

                A[p, q] = A[q, p] = 0.

                Vp, Vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * Vp - s * Vq
                V[:, q] = s * Vp + c * Vq

    if not converged:
        off = off_diagonal_norm(A)
        if off > thresh:
            warn("Jacobi eigensolver did not converge after {} sweeps; "
                 "off-diagonal norm {}".format(max_sweeps, off))

    return np.diag(A).copy(), V


def fix_signs(vecs, zero_tol=1e-12):
    """
    Flips each column so its first entry with magnitude above zero_tol is positive.
    """
    vecs = np.array(vecs, dtype=float)
    for j in range(vecs.shape[1]):
        nz = np.flatnonzero(abs(vecs[:, j]) > zero_tol)
        if len(nz) and vecs[nz[0], j] < 0:
            vecs[:, j] *= -1
    return vecs

"""
The curvature operator of the second kind acting on traceless symmetric 2-tensors, R(theta)_il = R_ijkl theta^{jk}, and the sectional curvature.
"""
import numpy as np
from collections import namedtuple
from dataclasses import dataclass
from typing import List
from sklearn.utils import check_random_state

from curvcheck.config.tolerances import EIGEN_ZERO_TOL
from curvcheck.exceptions import ContractViolationError
from curvcheck.linalg_utils import orthonormal_frame, gram_schmidt, \
    symmetry_residual
from curvcheck.tensor_core import inner, raise_all, symmetric_eigen

# theta = PLANE_TENSOR_SCALE * (X (x) Y + Y (x) X) gives g(R(theta), theta) = 2 sec(X, Y)
PLANE_TENSOR_SCALE = 1.

BridgingResiduals = namedtuple('BridgingResiduals',
                               ['op_sec_residual', 'ricci_sum_residual'])


@dataclass(frozen=True)
class S02Basis:
    """
    An orthonormal basis of the traceless symmetric 2-tensors at a point.

    Attributes
    ----------
    point: np.ndarray, shape (n, )
        The point.

    frame: np.ndarray, shape (n, n)
        Columns are the g-orthonormal frame vectors.

    elements: list of np.ndarray, shape (n, n)
        Covariant coordinate components of the N = n(n + 1)/2 - 1 basis tensors.

    frame_components: list of np.ndarray, shape (n, n)
        The same tensors written in the frame.

    labels: list of str
        'diag_k' for the traceless diagonal tensors, 'e_a.e_b' for the symmetrized frame products.
    """
    point: np.ndarray
    frame: np.ndarray
    elements: List[np.ndarray]
    frame_components: List[np.ndarray]
    labels: List[str]

    @property
    def size(self):
        return len(self.elements)


@dataclass(frozen=True)
class OperatorSpectrum:
    """
    Matrix, spectrum and sign classification of the curvature operator in an S02Basis.

    Attributes
    ----------
    matrix: np.ndarray, shape (N, N)
        The symmetrized matrix g(R(theta_b), theta_a).

    eigenvalues: np.ndarray, shape (N, )
        Ascending.

    eigenvectors: np.ndarray, shape (N, N)
        Columns, in the coordinates of the basis.

    classification: str
        One of avail_classifications.

    asymmetry: float
        max |matrix - matrix^T| before symmetrizing.
    """
    matrix: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    classification: str
    asymmetry: float


avail_classifications = ['positive_definite', 'positive_semidefinite',
                         'indefinite', 'negative_semidefinite',
                         'negative_definite']


def s02_basis(geom):
    """
    The Gram-Schmidt frame of the coordinate vectors and the induced orthonormal basis of traceless symmetric 2-tensors: the normalized traceless diagonal tensors (sum_{i<k} e^i e^i - k e^k e^k) / sqrt(k(k + 1)) followed by the symmetrized products (e^a e^b + e^b e^a) / sqrt(2), a < b.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at the point.

    Output
    ------
    basis: S02Basis
    """
    n = geom.dim
    frame = orthonormal_frame(geom.g)
    W = geom.g @ frame

    mats, labels = [], []
    for k in range(1, n):
        M = np.zeros((n, n))
        M[np.arange(k), np.arange(k)] = 1.
        M[k, k] = -k
        mats.append(M / np.sqrt(k * (k + 1)))
        labels.append('diag_{}'.format(k))

    for a in range(n):
        for b in range(a + 1, n):
            M = np.zeros((n, n))
            M[a, b] = M[b, a] = 1 / np.sqrt(2)
            mats.append(M)
            labels.append('e{}.e{}'.format(a, b))

    elements = [W @ M @ W.T for M in mats]
    return S02Basis(point=np.array(geom.x), frame=frame, elements=elements,
                    frame_components=mats, labels=labels)


def basis_gram(basis, geom):
    """
    Matrix of inner products g(theta_a, theta_b) of the basis elements.
    """
    N = basis.size
    G = np.zeros((N, N))
    for a in range(N):
        for b in range(N):
            G[a, b] = inner(basis.elements[a], basis.elements[b], geom.g_inv)
    return G


def apply_operator(geom, theta):
    """
    R(theta)_il = R_ijkl theta^{jk}.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at the point.

    theta: array-like, shape (n, n)
        Covariant components of a symmetric 2-tensor.

    Output
    ------
    R_theta: np.ndarray, shape (n, n)
    """
    theta_up = raise_all(theta, geom.g_inv)
    return np.einsum('ijkl,jk->il', geom.riemann_low, theta_up)


def operator_form(geom, theta):
    """
    g(R(theta), theta) = R_ijkl theta^{jk} theta^{il}.
    """
    return inner(apply_operator(geom, theta), theta, geom.g_inv)


def classify_spectrum(evals, zero_tol=EIGEN_ZERO_TOL):
    """
    Sign classification of a list of eigenvalues.

    Parameters
    ----------
    evals: array-like
        Eigenvalues.

    zero_tol: float
        Eigenvalues with |lambda| <= zero_tol count as zero.

    Output
    ------
    classification: str
        One of avail_classifications.
    """
    evals = np.asarray(evals)
    if np.all(evals > zero_tol):
        return 'positive_definite'
    elif np.all(evals >= -zero_tol):
        return 'positive_semidefinite'
    elif np.all(evals < -zero_tol):
        return 'negative_definite'
    elif np.all(evals <= zero_tol):
        return 'negative_semidefinite'
    else:
        return 'indefinite'


def operator_matrix(geom, basis, zero_tol=EIGEN_ZERO_TOL):
    """
    The matrix of the curvature operator of the second kind in an orthonormal basis of the traceless symmetric 2-tensors, with its spectrum.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at the point.

    basis: S02Basis
        A basis at the same point.

    zero_tol: float
        Threshold for the sign classification.

    Output
    ------
    spectrum: OperatorSpectrum
    """
    if np.shape(basis.point) != np.shape(geom.x) or \
            not np.allclose(basis.point, geom.x, rtol=0, atol=1e-14):
        raise ContractViolationError("Basis at {} does not match the "
                                     "geometry at {}".
                                     format(list(basis.point), list(geom.x)))

    N = basis.size
    images = [apply_operator(geom, theta) for theta in basis.elements]

    matrix = np.zeros((N, N))
    for a in range(N):
        for b in range(N):
            matrix[a, b] = inner(images[b], basis.elements[a], geom.g_inv)

    asym = symmetry_residual(matrix)
    matrix = 0.5 * (matrix + matrix.T)
    evals, evecs = symmetric_eigen(matrix)

    return OperatorSpectrum(matrix=matrix, eigenvalues=evals,
                            eigenvectors=evecs,
                            classification=classify_spectrum(evals, zero_tol),
                            asymmetry=float(asym))


def _orthonormal_pair(geom, X, Y):
    pair = gram_schmidt(np.column_stack([X, Y]), metric=geom.g)
    return pair[:, 0], pair[:, 1]


def sectional_curvature(geom, X, Y):
    """
    Sectional curvature of the plane spanned by two tangent vectors.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at the point.

    X, Y: array-like, shape (n, )
        Linearly independent tangent vectors in coordinates.

    Output
    ------
    sec: float
        R_ijkl X^i Y^j X^k Y^l after orthonormalizing (X, Y).
    """
    X, Y = _orthonormal_pair(geom, np.asarray(X, dtype=float),
                             np.asarray(Y, dtype=float))
    return float(np.einsum('abcd,a,b,c,d->', geom.riemann_low, X, Y, X, Y))


def frame_sectional_curvatures(geom, frame=None):
    """
    Matrix K[a, b] = sec(e_a, e_b) for a frame (zero on the diagonal).
    """
    frame = orthonormal_frame(geom.g) if frame is None else frame
    n = frame.shape[1]
    K = np.zeros((n, n))
    for a in range(n):
        for b in range(a + 1, n):
            K[a, b] = K[b, a] = sectional_curvature(geom, frame[:, a],
                                                    frame[:, b])
    return K


def random_orthonormal_pair(geom, random_state=None):
    """
    A random g-orthonormal pair of tangent vectors.
    """
    rng = check_random_state(random_state)
    while True:
        X, Y = rng.standard_normal(size=(2, geom.dim))
        try:
            return _orthonormal_pair(geom, X, Y)
        except ValueError:
            continue


def plane_tensor(geom, X, Y):
    """
    Covariant components of theta = PLANE_TENSOR_SCALE * (X (x) Y + Y (x) X).
    """
    Xl, Yl = geom.g @ X, geom.g @ Y
    return PLANE_TENSOR_SCALE * (np.outer(Xl, Yl) + np.outer(Yl, Xl))


def bridging_identities(geom, n_pairs=20, random_state=None):
    """
    Residuals of the operator-sectional identity g(R(theta), theta) = 2 sec(X, Y) over frame pairs and random orthonormal pairs (X, Y), and of the Ricci-sum identity Ric(X, X) = sum_a sec(X, e_a) over the frame vectors.

    Parameters
    ----------
    geom: PointGeometry
        Geometry at the point.

    n_pairs: int
        Number of random orthonormal pairs on top of the frame pairs.

    random_state: None, int, RandomState
        Seed for the random pairs.

    Output
    ------
    resids: BridgingResiduals
    """
    rng = check_random_state(random_state)
    frame = orthonormal_frame(geom.g)
    n = geom.dim

    pairs = [(frame[:, a], frame[:, b])
             for a in range(n) for b in range(a + 1, n)]
    pairs += [random_orthonormal_pair(geom, rng) for _ in range(n_pairs)]

    op_sec = 0.
    for X, Y in pairs:
        theta = plane_tensor(geom, X, Y)
        diff = operator_form(geom, theta) - 2 * sectional_curvature(geom, X, Y)
        op_sec = max(op_sec, abs(diff))

    K = frame_sectional_curvatures(geom, frame)
    ric_frame = frame.T @ geom.ricci @ frame
    ric_sum = abs(np.diag(ric_frame) - K.sum(axis=1)).max()

    return BridgingResiduals(op_sec_residual=float(op_sec),
                             ricci_sum_residual=float(ric_sum))


def plane_invariance_residual(geom, X, Y, n_respans=20, random_state=None):
    """
    Max change of the sectional curvature when the plane span(X, Y) is re-spanned by random invertible combinations of X and Y.
    """
    rng = check_random_state(random_state)
    base = sectional_curvature(geom, X, Y)

    resid = 0.
    for _ in range(n_respans):
        A = rng.standard_normal(size=(2, 2))
        while abs(np.linalg.det(A)) < 1e-3:
            A = rng.standard_normal(size=(2, 2))

        U = A[0, 0] * X + A[0, 1] * Y
        V = A[1, 0] * X + A[1, 1] * Y
        resid = max(resid, abs(sectional_curvature(geom, U, V) - base))

    return float(resid)

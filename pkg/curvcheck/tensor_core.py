"""
Dense tensors at a point.

Tensors are stored densely as numpy arrays with one axis of length n per slot. The array helpers (raise_all, inner, trace_g, ...) work on plain arrays and take the inverse metric; the public operations (symmetrize, adjust_index, trace_and_norm, symmetric_eigen) accept array-likes or DenseTensors.
"""
import numpy as np
from itertools import permutations
from math import factorial

from curvcheck.exceptions import ShapeError, ContractViolationError
from curvcheck.linalg_utils import check_positive_definite, check_symmetric, \
    jacobi_eigh, fix_signs


class DenseTensor:
    """
    An immutable dense tensor at a point.

    Parameters
    ----------
    entries: array-like
        Either an array of shape (n, ) * rank or, when dim and rank are given, the n ** rank entries in row-major order of the index tuples.

    dim: None, int
        Dimension n; inferred from entries when not provided.

    rank: None, int
        Number of slots; inferred from entries when not provided.

    Attributes
    ----------
    values: np.ndarray, shape (n, ) * rank
        Read only view of the entries.
    """
    def __init__(self, entries, dim=None, rank=None):
        arr = np.array(entries, dtype=float)

        if dim is not None and rank is not None:
            if arr.size != dim ** rank:
                raise ShapeError("Expected {} entries for dim={}, rank={}, "
                                 "got {}".format(dim ** rank, dim, rank,
                                                 arr.size))
            arr = arr.reshape((dim, ) * rank)

        if arr.ndim > 0 and len(set(arr.shape)) != 1:
            raise ShapeError("All slots must have the same length, "
                             "got shape {}".format(arr.shape))

        if dim is not None and arr.ndim > 0 and arr.shape[0] != dim:
            raise ShapeError("Expected dim={}, got shape {}".
                             format(dim, arr.shape))

        arr.setflags(write=False)
        self.values = arr

    @property
    def rank(self):
        return self.values.ndim

    @property
    def dim(self):
        return self.values.shape[0] if self.rank > 0 else None

    @property
    def entries(self):
        """Row-major flat copy of the entries."""
        return self.values.reshape(-1).copy()

    def is_symmetric(self, tol=1e-12):
        return is_symmetric(self.values, tol=tol)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.values
        return self.values.astype(dtype)

    def __getitem__(self, idx):
        return self.values[idx]

    def __repr__(self):
        return 'DenseTensor(rank={}, dim={})'.format(self.rank, self.dim)


class SymMatrix(DenseTensor):
    """
    A symmetric n x n matrix. Input that is symmetric up to 1e-10 (relative) is symmetrized exactly; larger asymmetry is a contract violation.
    """
    def __init__(self, entries, dim=None):
        M = check_symmetric(entries, tol=1e-10, name='SymMatrix')
        M = 0.5 * (M + M.T)
        super().__init__(M, dim=dim)

    def __repr__(self):
        return 'SymMatrix(dim={})'.format(self.dim)


def _as_array(T):
    return np.asarray(T, dtype=float)


def is_symmetric(T, tol=1e-12):
    """
    Whether an array is invariant under every permutation of its slots. Invariance under the adjacent transpositions is checked since they generate all permutations.
    """
    T = _as_array(T)
    scale = max(1., abs(T).max()) if T.size else 1.
    for a in range(T.ndim - 1):
        if abs(T - np.swapaxes(T, a, a + 1)).max() > tol * scale:
            return False
    return True


def symmetrize(T):
    """
    The full symmetrization of a tensor i.e. the average over all permutations of its slots.

    Parameters
    ----------
    T: array-like or DenseTensor

    Output
    ------
    T_sym: DenseTensor
    """
    A = _as_array(T)
    rank = A.ndim
    if rank <= 1:
        return DenseTensor(A)

    out = sum(np.transpose(A, perm) for perm in permutations(range(rank)))
    return DenseTensor(out / factorial(rank))


def adjust_index(T, slot, metric, direction='raise'):
    """
    Raises or lowers one slot of a tensor.

    Parameters
    ----------
    T: array-like or DenseTensor
        The tensor.

    slot: int
        Which slot to adjust.

    metric: array-like or SymMatrix, shape (n, n)
        The metric g_ij (always the lower index metric; it is inverted for raising).

    direction: str
        Must be one of ['raise', 'lower'].

    Output
    ------
    T_adj: DenseTensor
    """
    A = _as_array(T)
    if not 0 <= slot < A.ndim:
        raise ShapeError("slot={} out of range for rank {} tensor".
                         format(slot, A.ndim))

    g, g_inv = check_positive_definite(metric)
    if g.shape[0] != A.shape[0]:
        raise ShapeError("Metric dimension {} does not match tensor "
                         "dimension {}".format(g.shape[0], A.shape[0]))

    if direction == 'raise':
        M = g_inv
    elif direction == 'lower':
        M = g
    else:
        raise ValueError("Bad input to direction: {}".format(direction))

    return DenseTensor(contract_slot(A, M, slot))


def contract_slot(A, M, slot):
    """
    Contracts slot of array A with the first index of the matrix M; the result keeps the slot position.
    """
    out = np.tensordot(M, A, axes=([1], [slot]))
    return np.moveaxis(out, 0, slot)


def raise_all(A, g_inv, n_slots=None):
    """
    Raises the first n_slots slots (default all) of an array.
    """
    A = _as_array(A)
    n_slots = A.ndim if n_slots is None else n_slots
    for slot in range(n_slots):
        A = contract_slot(A, g_inv, slot)
    return A


def inner(A, B, g_inv):
    """
    The metric inner product g(A, B) of two covariant arrays: raises every slot of A and contracts with B.
    """
    A = _as_array(A)
    B = _as_array(B)
    if A.shape != B.shape:
        raise ShapeError("Shape mismatch {} vs {}".format(A.shape, B.shape))
    if A.ndim == 0:
        return float(A * B)
    return float((raise_all(A, g_inv) * B).sum())


def norm_sq(A, g_inv):
    """
    ||A||^2 = g(A, A), clipped at zero.
    """
    return max(inner(A, A, g_inv), 0.)


def trace_g(A, g_inv):
    """
    Metric trace over the first two slots, g^{ij} A_{ij...}.
    """
    A = _as_array(A)
    if A.ndim < 2:
        raise ShapeError("Trace needs rank >= 2, got rank {}".format(A.ndim))
    return np.tensordot(g_inv, A, axes=([0, 1], [0, 1]))


def trace_and_norm(T, S, metric):
    """
    The trace of T over its first two slots and the inner product g(T, S).

    Parameters
    ----------
    T, S: array-like or DenseTensor
        Tensors of the same rank and dimension.

    metric: array-like or SymMatrix, shape (n, n)
        The metric g_ij at the point.

    Output
    ------
    trace, inner_prod

    trace: DenseTensor
        trace_g T, a tensor of rank (rank - 2).

    inner_prod: float
        g(T, S) with every slot of T raised.
    """
    A = _as_array(T)
    B = _as_array(S)
    if A.shape != B.shape:
        raise ShapeError("T and S must have the same rank and dim, got "
                         "shapes {} and {}".format(A.shape, B.shape))

    g, g_inv = check_positive_definite(metric)
    if A.ndim and A.shape[0] != g.shape[0]:
        raise ShapeError("Metric dimension {} does not match tensor "
                         "dimension {}".format(g.shape[0], A.shape[0]))

    return DenseTensor(trace_g(A, g_inv)), inner(A, B, g_inv)


def symmetric_eigen(M, zero_tol=1e-12):
    """
    Eigenvalues and eigenvectors of a symmetric matrix computed with the cyclic Jacobi method.

    Parameters
    ----------
    M: array-like or SymMatrix, shape (n, n)
        Symmetric up to 1e-10.

    zero_tol: float
        Tolerance used by the eigenvector sign convention.

    Output
    ------
    evals, evecs

    evals: array-like, shape (n, )
        Eigenvalues in ascending order.

    evecs: array-like, shape (n, n)
        Orthonormal eigenvectors as columns; each has its first nonzero entry positive.
    """
    M = check_symmetric(M, tol=1e-10, name='M')
    if M.shape[0] == 0:
        raise ContractViolationError("Empty matrix")

    evals, evecs = jacobi_eigh(0.5 * (M + M.T))
    order = np.argsort(evals, kind='stable')
    return evals[order], fix_signs(evecs[:, order], zero_tol=zero_tol)

import numpy as np
from sklearn.utils import check_random_state

from curvcheck.linalg_utils import orthonormal_frame


def sample_metric(n=3, cond=10., random_state=None):
    """
    Samples a random positive definite matrix to use as a metric at a point.

    Parameters
    ----------
    n: int
        Dimension.

    cond: float
        Condition number of the metric.

    random_state: None, int
        The seed.

    Output
    ------
    g: array-like, shape (n, n)
    """
    rng = check_random_state(random_state)

    Q, _ = np.linalg.qr(rng.normal(size=(n, n)))
    evals = np.exp(rng.uniform(low=0, high=np.log(cond), size=n))
    g = (Q * evals) @ Q.T
    return 0.5 * (g + g.T)


def sample_symmetric(n=3, traceless=False, metric=None, scale=1.,
                     random_state=None):
    """
    Samples a random symmetric matrix (covariant 2-tensor at a point).

    Parameters
    ----------
    n: int
        Dimension.

    traceless: bool
        Whether to project out the g-trace.

    metric: None, array-like, shape (n, n)
        Metric the trace is taken with. Defaults to the identity.

    scale: float
        Standard deviation of the entries.

    random_state: None, int
        The seed.

    Output
    ------
    T: array-like, shape (n, n)
    """
    rng = check_random_state(random_state)
    g = np.eye(n) if metric is None else np.asarray(metric)

    A = scale * rng.normal(size=(n, n))
    T = 0.5 * (A + A.T)

    if traceless:
        tr = np.trace(np.linalg.solve(g, T))
        T = T - tr * g / n
    return T


def sample_eigenframe_tensor(n=3, metric=None, random_state=None):
    """
    Samples a traceless symmetric 2-tensor together with its eigenvalues and a g-orthonormal eigenframe.

    Parameters
    ----------
    n: int
        Dimension.

    metric: None, array-like, shape (n, n)
        The metric; defaults to the identity.

    random_state: None, int
        The seed.

    Output
    ------
    T, evals, frame

    T: array-like, shape (n, n)
        Covariant components.

    evals: array-like, shape (n, )
        Eigenvalues; they sum to zero.

    frame: array-like, shape (n, n)
        The g-orthonormal eigenvectors as columns.
    """
    rng = check_random_state(random_state)
    g = np.eye(n) if metric is None else np.asarray(metric)

    Q, _ = np.linalg.qr(rng.normal(size=(n, n)))
    E = orthonormal_frame(g) @ Q

    evals = rng.normal(size=n)
    evals -= evals.mean()

    # T_ij = sum_a lam_a (g e_a)_i (g e_a)_j
    gE = g @ E
    T = (gE * evals) @ gE.T
    return 0.5 * (T + T.T), evals, E

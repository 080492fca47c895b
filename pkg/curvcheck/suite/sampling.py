import numpy as np
from numpy.random import Generator, PCG64, SeedSequence

from curvcheck.exceptions import SuiteError

PRNG_NAME = 'PCG64'


def point_rng(seed, target_index):
    """
    The point sampler of one target; depends only on the suite seed and the position of the target in the suite.
    """
    return Generator(PCG64(SeedSequence([seed, target_index])))


def check_seed(seed, target_index, point_index):
    """
    Integer seed for the random draws of the checks at one point.
    """
    ss = SeedSequence([seed, target_index, point_index])
    return int(ss.generate_state(1)[0])


def sampling_box(target, fd):
    """
    The coordinate box of the target shrunk by the boundary margin its deepest evaluator needs.

    Output
    ------
    box: np.ndarray, shape (n, 2)
    """
    margin = fd.sampling_margin(target.fd_depth)
    box = target.chart.domain.copy()
    box[:, 0] += margin
    box[:, 1] -= margin

    if np.any(box[:, 0] >= box[:, 1]):
        raise SuiteError("The domain of {} is too small for a boundary "
                         "margin of {:.3g}".format(target.label, margin))
    return box


def sample_points(target, fd, n_points=50, seed=0, target_index=0,
                  strategy='uniform', points=None):
    """
    Sampled points of a target.

    Parameters
    ----------
    target: Target
        The target.

    fd: FDSpec
        Finite-difference steps; fix the boundary margin.

    n_points: int
        Number of points for the uniform strategy.

    seed: int
        Suite seed.

    target_index: int
        Position of the target in the suite.

    strategy: str
        'uniform' draws points uniformly in the shrunk box; 'fixed' uses the given points, dropping the ones outside the shrunk box.

    points: None, array-like, shape (n_fixed, n)
        Points for the fixed strategy.

    Output
    ------
    points, n_dropped

    points: np.ndarray, shape (n_points, n)

    n_dropped: int
        Number of fixed points dropped for being too close to the boundary.
    """
    box = sampling_box(target, fd)

    if strategy == 'uniform':
        rng = point_rng(seed, target_index)
        u = rng.random(size=(n_points, target.dim))
        return box[:, 0] + u * (box[:, 1] - box[:, 0]), 0

    elif strategy == 'fixed':
        pts = np.atleast_2d(np.array(points, dtype=float))
        if pts.shape[1] != target.dim:
            raise SuiteError("Points of {} have dimension {}, expected {}".
                             format(target.label, pts.shape[1], target.dim))

        inside = np.all((pts >= box[:, 0]) & (pts <= box[:, 1]), axis=1)
        if not inside.any():
            raise SuiteError("Every point of {} is within the boundary "
                             "margin".format(target.label))
        return pts[inside], int((~inside).sum())

    else:
        raise ValueError("Bad input to strategy: {}".format(strategy))

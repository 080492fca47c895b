"""
Second order central differences of array valued functions, with one optional level of Richardson extrapolation.
"""
import numpy as np


def richardson_combine(d_full, d_half):
    """
    Combines second order estimates at steps h and h/2 into a fourth order estimate.
    """
    return (4 * d_half - d_full) / 3


def central_diff(func, x, step, richardson=False):
    """
    First partial derivatives of an array valued function by central differences.

    Parameters
    ----------
    func: callable(x) -> array-like
        The function to differentiate.

    x: array-like, shape (n, )
        The point.

    step: float
        The step size h.

    richardson: bool
        Combine the estimates at h and h/2.

    Output
    ------
    deriv: np.ndarray, shape (n, ) + shape of func(x)
        deriv[k] is the partial derivative along the k-th coordinate.
    """
    x = np.asarray(x, dtype=float)

    def diff(h):
        parts = []
        for k in range(len(x)):
            e = np.zeros_like(x)
            e[k] = h
            f_plus = np.asarray(func(x + e), dtype=float)
            f_minus = np.asarray(func(x - e), dtype=float)
            parts.append((f_plus - f_minus) / (2 * h))
        return np.stack(parts)

    if richardson:
        return richardson_combine(diff(step), diff(step / 2))
    return diff(step)


def second_diff(func, x, step, richardson=False):
    """
    Second partial derivatives by nested central differences with half steps. Diagonal entries use the three point stencil f(x + h) - 2 f(x) + f(x - h) and off-diagonal entries the four point cross stencil at offsets h / 2, so no evaluation is further than h from x along any axis.

    Parameters
    ----------
    func: callable(x) -> array-like
        The function to differentiate.

    x: array-like, shape (n, )
        The point.

    step: float
        The step size h.

    richardson: bool
        Combine the estimates at h and h/2.

    Output
    ------
    hess: np.ndarray, shape (n, n) + shape of func(x)
        hess[i, j] is the mixed partial along coordinates i and j.
    """
    x = np.asarray(x, dtype=float)
    n = len(x)
    f0 = np.asarray(func(x), dtype=float)

    def diff(h):
        out = np.zeros((n, n) + f0.shape)
        eye = np.eye(n)
        for i in range(n):
            ei = h * eye[i]
            out[i, i] = (np.asarray(func(x + ei)) - 2 * f0 +
                         np.asarray(func(x - ei))) / h ** 2

            for j in range(i + 1, n):
                a = 0.5 * h * (eye[i] + eye[j])
                b = 0.5 * h * (eye[i] - eye[j])
                val = (np.asarray(func(x + a)) - np.asarray(func(x + b)) -
                       np.asarray(func(x - b)) + np.asarray(func(x - a))) \
                    / h ** 2
                out[i, j] = val
                out[j, i] = val
        return out

    if richardson:
        return richardson_combine(diff(step), diff(step / 2))
    return diff(step)

"""
Exact polynomial potentials used to build Hessian and higher derivative tensor fields on flat charts.
"""
import numpy as np
from itertools import combinations_with_replacement, permutations


class Polynomial:
    """
    A real polynomial in n variables stored as {exponent tuple: coefficient}.

    Parameters
    ----------
    terms: dict
        Maps exponent tuples (one non-negative int per variable) to coefficients.

    name: str
        Label.

    Examples
    --------
    >>> f = Polynomial({(1, 1, 1): 1.}, name='x1x2x3')
    >>> f.derivative_tensor([1., 2., 3.], order=2)[0, 1]
    3.0
    """
    def __init__(self, terms, name='poly'):
        self.terms = {tuple(int(e) for e in k): float(v)
                      for k, v in terms.items() if v != 0}
        self.name = name

        n_vars = {len(k) for k in self.terms}
        if len(n_vars) > 1:
            raise ValueError("Bad input to terms: exponent tuples have "
                             "different lengths {}".format(n_vars))
        self.n_vars = n_vars.pop() if n_vars else 0

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return float(sum(c * np.prod(x ** np.array(e))
                         for e, c in self.terms.items()))

    def partial(self, axis):
        """
        The partial derivative along one coordinate as a new Polynomial.
        """
        out = {}
        for e, c in self.terms.items():
            if e[axis] == 0:
                continue
            new_e = list(e)
            new_e[axis] -= 1
            new_e = tuple(new_e)
            out[new_e] = out.get(new_e, 0.) + c * e[axis]

        return Polynomial(out, name='d{}({})'.format(axis, self.name))

    def derivative_tensor(self, x, order):
        """
        The symmetric tensor of all order-th partial derivatives at x.

        Output
        ------
        D: np.ndarray, shape (n, ) * order
        """
        x = np.asarray(x, dtype=float)
        n = len(x)
        if self.n_vars and self.n_vars != n:
            raise ValueError("Polynomial in {} variables evaluated at a "
                             "point of dimension {}".format(self.n_vars, n))

        D = np.zeros((n, ) * order)
        for idx in combinations_with_replacement(range(n), order):
            poly = self
            for axis in idx:
                poly = poly.partial(axis)
            val = poly(x) if poly.terms else 0.

            for perm in set(permutations(idx)):
                D[perm] = val
        return D

    def __repr__(self):
        return 'Polynomial({!r})'.format(self.name)


def _pad(exps, n):
    exps = tuple(exps)
    return exps + (0, ) * (n - len(exps))


def get_potential(name, dim):
    """
    Builds a named catalog potential in dim variables.

    Parameters
    ----------
    name: str
        Must be one of avail_potentials.

    dim: int
        Number of variables.

    Output
    ------
    poly: Polynomial
    """
    if name not in potential_str2terms:
        raise ValueError("Bad input to potential: {}. Must be one of {}".
                         format(name, avail_potentials))

    terms, min_dim = potential_str2terms[name]
    if dim < min_dim:
        raise ValueError("Potential {} needs at least {} variables, got {}".
                         format(name, min_dim, dim))

    return Polynomial({_pad(e, dim): c for e, c in terms.items()}, name=name)


# name -> (terms, minimal number of variables)
potential_str2terms = {
    'x1x2': ({(1, 1): 1.}, 2),
    'x1x2x3': ({(1, 1, 1): 1.}, 3),
    'cubic': ({(3, ): 1.}, 1),
    'quadratic': ({(2, ): 1., (0, 2): 1.}, 2),

    # harmonic, so its Hessian is traceless
    'harmonic_cubic': ({(3, 0): 1., (1, 2): -3.}, 2),

    # harmonic, so its third derivative tensor is traceless
    'harmonic_quartic': ({(4, 0): 1., (2, 2): -6., (0, 4): 1.}, 2),

    # harmonic in three variables
    'harmonic_mixed': ({(2, 1, 0): 1., (0, 1, 2): -1., (1, 1, 1): 1.}, 3),
}

avail_potentials = list(potential_str2terms.keys())

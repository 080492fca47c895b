import numpy as np
from collections import namedtuple
from functools import cached_property
from sklearn.utils import check_random_state

from curvcheck.autoassign import autoassign
from curvcheck.config.base import Config
from curvcheck.conformal import conformal_data
from curvcheck.curvature_operator import s02_basis, operator_matrix
from curvcheck.geometry.chart import point_geometry

CheckValue = namedtuple('CheckValue', ['value', 'note'])

avail_kinds = ['residual', 'gap', 'exceeds']


def verdict(kind, value, tol):
    """
    Pass/fail verdict of a check value.

    Parameters
    ----------
    kind: str
        'residual' passes iff |value| <= tol, 'gap' iff value >= -tol and 'exceeds' iff value > tol.

    value: float
        The check value.

    tol: float
        The tolerance.

    Output
    ------
    verdict: str
        'pass' or 'fail'; non-finite values fail.
    """
    if value is None or not np.isfinite(value):
        return 'fail'

    if kind == 'residual':
        ok = abs(value) <= tol
    elif kind == 'gap':
        ok = value >= -tol
    elif kind == 'exceeds':
        ok = value > tol
    else:
        raise ValueError("Bad input to kind: {}. Must be one of {}".
                         format(kind, avail_kinds))

    return 'pass' if ok else 'fail'


class PointContext:
    """
    Everything the checks at one sampled point share. Derived geometry is computed lazily and cached, so a context must not be shared between threads.

    Parameters
    ----------
    target: Target
        The target.

    x: array-like, shape (n, )
        The point.

    fd: FDSpec
        Finite-difference steps.

    random_state: int
        Seed for checks that sample tangent vectors or tensors at the point.
    """
    def __init__(self, target, x, fd, random_state=0):
        self.target = target
        self.x = np.asarray(x, dtype=float)
        self.fd = fd
        self.random_state = random_state

    @property
    def chart(self):
        return self.target.chart

    def rng(self):
        """
        A fresh RandomState seeded with random_state, so every check sees the same draws.
        """
        return check_random_state(self.random_state)

    @cached_property
    def geom(self):
        return point_geometry(self.chart, self.x, fd=self.fd)

    @cached_property
    def basis(self):
        return s02_basis(self.geom)

    @cached_property
    def spectrum(self):
        return operator_matrix(self.geom, self.basis)

    @cached_property
    def conformal(self):
        return conformal_data(self.geom)


class Check(Config):
    """
    A named verification check.

    Parameters
    ----------
    name: str
        Registry name.

    func: callable(ctx) -> float or (float, str)
        Evaluates the check value (and an optional diagnostic note) at a PointContext. Raises a PreconditionError when the check does not apply.

    kind: str
        One of avail_kinds; fixes how the value is judged.

    default_tol: float
        Tolerance used when the suite does not override it.

    description: str
        One line description listed by the CLI.
    """
    @autoassign
    def __init__(self, name, func, kind='residual', default_tol=1e-4,
                 description=''):
        if kind not in avail_kinds:
            raise ValueError("Bad input to kind: {}. Must be one of {}".
                             format(kind, avail_kinds))

    def __call__(self, ctx):
        """
        Output
        ------
        out: CheckValue
        """
        out = self.func(ctx)
        if isinstance(out, tuple):
            value, note = out
        else:
            value, note = out, ''
        return CheckValue(value=float(value), note=note)

    def __repr__(self):
        return 'Check(name={!r}, kind={!r}, default_tol={})'.\
            format(self.name, self.kind, self.default_tol)


_registry = {}


def register_check(name, kind='residual', tol=1e-4, description=''):
    """
    Decorator adding a check function to the registry.
    """
    def decorator(func):
        if name in _registry:
            raise ValueError("Check {} is already registered".format(name))
        _registry[name] = Check(name=name, func=func, kind=kind,
                                default_tol=tol, description=description)
        return func
    return decorator

"""
Constructor decorator for Config objects.
"""
from functools import wraps
from inspect import signature


def autoassign(init):
    """
    Decorates a Config constructor so every argument, passed or defaulted, is stored as an attribute of the same name before the constructor body runs. These attributes are the parameters reported by Config.get_params, e.g.

    >>> class Steps(Config):
    ...     @autoassign
    ...     def __init__(self, step=1e-4, richardson=False): pass
    ...
    >>> Steps(step=1e-3).get_params()
    {'step': 0.001, 'richardson': False}

    Parameters
    ----------
    init: callable
        The __init__ method.

    Output
    ------
    decorated: callable
    """
    sig = signature(init)

    @wraps(init)
    def decorated(self, *args, **kwargs):
        bound = sig.bind(self, *args, **kwargs)
        bound.apply_defaults()
        assigned = list(bound.arguments.items())[1:]  # drop self
        self.__dict__.update(assigned)
        return init(self, *args, **kwargs)

    return decorated

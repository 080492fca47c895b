from curvcheck.checks.base import Check, CheckValue, PointContext, verdict, \
    _registry
from curvcheck.checks import geometry, operator, codazzi, weitzenbock, \
    conformal, hypersurface  # noqa: F401 populate the registry


def get_check(name):
    """
    Gets a registered check by name.

    Parameters
    ----------
    name: str or Check
        Must be one of avail_checks.

    Output
    ------
    check: Check
    """
    if isinstance(name, Check):
        return name

    if name not in check_str2obj:
        raise ValueError("Bad input to check: {}. Must be one of {}".
                         format(name, avail_checks))
    return check_str2obj[name]


check_str2obj = dict(_registry)

avail_checks = list(check_str2obj.keys())

__all__ = ['Check', 'CheckValue', 'PointContext', 'verdict', 'get_check',
           'check_str2obj', 'avail_checks']

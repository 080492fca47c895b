"""
Errors raised by curvcheck.

Every error is a ValueError. Subclasses of PreconditionError mean a documented precondition of a formula failed at the point; the suite reports those as inapplicable rather than as failures.
"""


class CurvCheckError(ValueError):
    pass


class ShapeError(CurvCheckError):
    pass


class SingularMetricError(CurvCheckError):
    pass


class BoundaryMarginError(CurvCheckError):
    pass


class ContractViolationError(CurvCheckError):
    pass


class DegenerateImmersionError(CurvCheckError):
    pass


class SuiteError(CurvCheckError):
    pass


class ReportWriteError(CurvCheckError):
    pass


class ConfigError(CurvCheckError):
    """
    Bad suite configuration.

    Parameters
    ----------
    msg: str
        The message.

    line: None, int
        (Optional) Line of the document the problem was found on.

    field: None, str
        (Optional) The section or section.key the problem was found in.
    """
    def __init__(self, msg, line=None, field=None):
        self.msg = msg
        self.line = line
        self.field = field

        where = []
        if line is not None:
            where.append('line {}'.format(line))
        if field is not None:
            where.append(str(field))

        if where:
            msg = '{} ({})'.format(msg, ', '.join(where))
        super().__init__(msg)


#######################
# precondition errors #
#######################

class PreconditionError(CurvCheckError):
    pass


class NonTracelessError(PreconditionError):
    pass


class NotCodazziError(PreconditionError):
    pass


class NonCommutingError(PreconditionError):
    pass


class DegeneratePlaneError(PreconditionError):
    pass


class VanishingNormError(PreconditionError):
    pass


class InapplicableFormulaError(PreconditionError):
    pass


class DimensionError(PreconditionError):
    pass


class UnsupportedConstructionError(PreconditionError):
    pass


class MissingReferenceError(PreconditionError):
    pass

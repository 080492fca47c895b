from curvcheck.config.base import Config
from curvcheck.autoassign import autoassign
from curvcheck.exceptions import ConfigError

# points closer than this many steps to the chart boundary are rejected
BOUNDARY_FACTOR = 3


class FDSpec(Config):
    """
    Finite-difference step sizes.

    Evaluators are tagged with a depth: 0 for analytic evaluators (a catalog metric, a polynomial Hessian) and d + 1 for an evaluator that itself differentiates something of depth d (e.g. the Ricci field of a chart, the induced metric of a hypersurface). Analytic evaluators are differentiated with step; derived evaluators use the larger nested_step (first derivatives) or outer_step (second derivatives), always with one level of Richardson extrapolation, so round-off does not get amplified by nesting.

    Parameters
    ----------
    step: float
        Central-difference step for analytic evaluators.

    richardson: bool
        Whether to apply one level of Richardson extrapolation (halving the step) for analytic evaluators.

    nested_step: float
        Step for first derivatives of derived evaluators.

    outer_step: float
        Step for second derivatives of derived evaluators.
    """
    @autoassign
    def __init__(self, step=1e-4, richardson=False,
                 nested_step=1e-2, outer_step=5e-2):
        self.validate()

    def validate(self):
        for key in ['step', 'nested_step', 'outer_step']:
            value = getattr(self, key)
            if not value > 0:
                raise ConfigError("Step sizes must be positive, got {}".
                                  format(value), field='fd.' + key)
        return self

    def resolve(self, depth=0, order=1):
        """
        The step to use to differentiate an evaluator of a given depth.

        Parameters
        ----------
        depth: int
            Depth of the evaluator being differentiated.

        order: int
            Derivative order; must be one of [1, 2].

        Output
        ------
        step, richardson: float, bool
        """
        if depth <= 0:
            return self.step, self.richardson
        elif order == 1:
            return self.nested_step, True
        else:
            return self.outer_step, True

    def reach(self, depth):
        """
        Upper bound on how far from a point an evaluator of the given depth looks.
        """
        return 2 * depth * self.nested_step

    def margin(self, depth=0, order=1):
        """
        Distance to the chart boundary needed to differentiate an evaluator of the given depth.
        """
        step, _ = self.resolve(depth=depth, order=order)
        return BOUNDARY_FACTOR * step + self.reach(depth)

    def sampling_margin(self, depth=0):
        """
        Margin that keeps every operation on an evaluator of the given depth away from the boundary; used to shrink the sampling box.
        """
        return self.margin(depth=max(depth, 1), order=2) + \
            BOUNDARY_FACTOR * self.step

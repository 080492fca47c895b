from collections import defaultdict

from curvcheck.exceptions import ConfigError


class Config:
    """
    Base configuration object for finite-difference steps, checks, targets and verification suites. Follows sklearn's get_params/set_params interface; the parameters are the attributes that do not end in '_', normally the constructor arguments stored by @autoassign.
    """
    def _get_param_names(self):
        return [k for k in self.__dict__.keys() if k[-1] != '_']

    def get_params(self, deep=True):
        """
        The parameters of this config.

        Parameters
        ----------
        deep: bool
            Also list the parameters of nested configs (e.g. the FDSpec of a suite) as '<name>__<param>'.

        Output
        ------
        params: dict
        """
        out = dict()
        for key in self._get_param_names():
            value = getattr(self, key)
            if deep and isinstance(value, Config):
                out.update((key + '__' + k, v)
                           for k, v in value.get_params().items())
            out[key] = value
        return out

    def set_params(self, **params):
        """
        Overrides parameters, e.g. suite.set_params(seed=3, fd__step=1e-3), then re-validates.

        Parameters
        ----------
        **params:
            New parameter values; nested configs are addressed as '<name>__<param>'.

        Output
        ------
        self: Config
        """
        if not params:
            return self
        current = self.get_params(deep=False)

        nested = defaultdict(dict)
        for key, value in params.items():
            key, delim, sub_key = key.partition('__')
            if key not in current:
                raise ConfigError("Bad input to {}: unknown parameter {!r}. "
                                  "Must be one of {}".
                                  format(type(self).__name__, key,
                                         sorted(current)), field=key)
            if delim:
                nested[key][sub_key] = value
            else:
                setattr(self, key, value)

        for key, sub_params in nested.items():
            if not isinstance(current[key], Config):
                raise ConfigError("Parameter {!r} of {} has no parameters "
                                  "of its own".
                                  format(key, type(self).__name__), field=key)
            current[key].set_params(**sub_params)

        return self.validate()

    def validate(self):
        """
        Checks the parameter values; subclasses raise ConfigError on bad ones. Called by set_params so overrides are checked when they are made.

        Output
        ------
        self: Config
        """
        return self

    def __repr__(self):
        params = ', '.join('{}={!r}'.format(k, v)
                           for k, v in self.get_params(deep=False).items())
        return '{}({})'.format(type(self).__name__, params)

"""
Suite configuration documents.

A suite is an INI style document of flat key-value sections:

    [suite]
    points_per_target = 50
    seed = 0
    strategy = uniform          # or fixed
    n_jobs = 1
    checks = bochner, kato      # optional, same as empty [check:...] sections

    [fd]
    step = 1e-4
    richardson = false
    nested_step = 1e-2
    outer_step = 5e-2

    [output]
    path = report.json
    format = json               # or text

    [target:sphere:n=3]         # label; also the catalog name unless catalog is given
    catalog = sphere:n=3
    field = ricci
    points = 1.0, 0.5, 0.3; 1.2, 0.4, -1.0

    [target:warped]             # inline chart
    dim = 2
    domain = -1, 1; 0.5, 2
    metric = 1, 0; 0, exp(2*x1)
    flat = false
    scalar = -2                 # optional known data: sectional, scalar, lcf

    [check:lcf_reconstruction]
    tol = 1e-3
"""
import numpy as np
from configparser import ConfigParser, Error as ConfigParserError, \
    ParsingError, DuplicateOptionError, DuplicateSectionError

from curvcheck.autoassign import autoassign
from curvcheck.config.base import Config
from curvcheck.config.fd import FDSpec
from curvcheck.exceptions import ConfigError

avail_strategies = ['uniform', 'fixed']
avail_formats = ['json', 'text']

_suite_keys = {'points_per_target', 'seed', 'strategy', 'n_jobs', 'checks'}
_fd_keys = {'step', 'richardson', 'nested_step', 'outer_step'}
_output_keys = {'path', 'format'}
_target_keys = {'catalog', 'field', 'points', 'dim', 'domain', 'metric',
                'flat', 'sectional', 'scalar', 'lcf'}
_check_keys = {'tol'}


class TargetConfig(Config):
    """
    A target of a suite; either a catalog entry or an inline chart.

    Parameters
    ----------
    label: str
        Report label.

    catalog: None, str
        Catalog name e.g. 'sphere:n=3'. Ignored when metric is given.

    field: None, str
        Field spec; see curvcheck.catalog.targets.parse_field.

    points: None, list of list of float
        Points for the fixed sampling strategy.

    dim, domain, metric, flat:
        Inline chart definition; see curvcheck.catalog.charts.inline_chart.

    known: None, dict
        Known data of an inline chart.
    """
    @autoassign
    def __init__(self, label, catalog=None, field=None, points=None,
                 dim=None, domain=None, metric=None, flat=False,
                 known=None):
        pass

    @property
    def inline(self):
        return self.metric is not None

    def build(self, fd=None):
        """
        Output
        ------
        target: Target
        """
        from curvcheck.catalog.targets import get_target, get_inline_target

        if self.inline:
            return get_inline_target(label=self.label, dim=self.dim,
                                     domain=self.domain, metric=self.metric,
                                     flat=self.flat, field=self.field, fd=fd,
                                     known=self.known)

        return get_target(self.catalog or self.label, field=self.field,
                          fd=fd, label=self.label)


class SuiteConfig(Config):
    """
    A verification suite.

    Parameters
    ----------
    targets: list of TargetConfig
        The targets.

    checks: dict
        Maps check names to tolerance overrides (None keeps the default).

    points_per_target: int
        Number of sampled points per target for the uniform strategy.

    seed: int
        Seed of the point sampler, 0 <= seed < 2^64.

    strategy: str
        One of avail_strategies.

    n_jobs: int
        Number of joblib workers.

    fd: None, FDSpec
        Finite-difference steps.

    output_path: None, str
        Where to write the report; None writes to stdout.

    output_format: str
        One of avail_formats.
    """
    @autoassign
    def __init__(self, targets=None, checks=None, points_per_target=50,
                 seed=0, strategy='uniform', n_jobs=1, fd=None,
                 output_path=None, output_format='json'):
        self.targets = [] if targets is None else list(targets)
        self.checks = {} if checks is None else dict(checks)
        self.fd = FDSpec() if fd is None else fd

    def get_tol(self, name):
        """
        The tolerance of a check: the override if there is one, else its default.
        """
        from curvcheck.checks import get_check

        tol = self.checks.get(name)
        return get_check(name).default_tol if tol is None else tol

    def validate(self):
        from curvcheck.checks import avail_checks

        if self.points_per_target <= 0:
            raise ConfigError("points_per_target must be positive, got {}".
                              format(self.points_per_target),
                              field='suite.points_per_target')

        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must be a 64 bit unsigned integer, got "
                              "{}".format(self.seed), field='suite.seed')

        if self.strategy not in avail_strategies:
            raise ConfigError("Bad input to strategy: {}. Must be one of {}".
                              format(self.strategy, avail_strategies),
                              field='suite.strategy')

        if self.output_format not in avail_formats:
            raise ConfigError("Bad input to format: {}. Must be one of {}".
                              format(self.output_format, avail_formats),
                              field='output.format')

        for name, tol in self.checks.items():
            if name not in avail_checks:
                raise ConfigError("Unknown check {}. Must be one of {}".
                                  format(name, avail_checks),
                                  field='check:' + name)
            if tol is not None and not tol > 0:
                raise ConfigError("Tolerance must be positive, got {}".
                                  format(tol), field='check:' + name)

        if self.strategy == 'fixed':
            for tc in self.targets:
                if not tc.points:
                    raise ConfigError("Target {} needs points for the fixed "
                                      "strategy".format(tc.label),
                                      field='target:' + tc.label)

        self.fd.validate()
        return self


###########
# parsing #
###########

def _line_of(text, section, key=None):
    """
    1-based line number of a section header or of a key inside it.
    """
    lines = text.splitlines()
    start = None
    for i, line in enumerate(lines):
        if line.strip() == '[{}]'.format(section):
            start = i
            break
    if start is None:
        return None
    if key is None:
        return start + 1

    for i in range(start + 1, len(lines)):
        stripped = lines[i].strip()
        if stripped.startswith('['):
            break
        if stripped.split('=', 1)[0].split(':', 1)[0].strip() == key:
            return i + 1
    return start + 1


def _float_rows(value):
    """
    Parses 'a, b; c, d' into [[a, b], [c, d]].
    """
    return [[float(v) for v in row.split(',')]
            for row in value.split(';') if row.strip()]


class _Reader:
    """
    Typed access to a parsed document that reports line numbers.
    """
    def __init__(self, parser, text):
        self.parser = parser
        self.text = text

    def error(self, msg, section, key=None):
        return ConfigError(msg, line=_line_of(self.text, section, key),
                           field=section if key is None
                           else '{}.{}'.format(section, key))

    def check_keys(self, section, allowed):
        for key in self.parser[section]:
            if key not in allowed:
                raise self.error("Unknown key {} in [{}]. Must be one of {}".
                                 format(key, section, sorted(allowed)),
                                 section, key)

    def get(self, section, key, cast=str, default=None):
        if not self.parser.has_option(section, key):
            return default
        raw = self.parser.get(section, key)
        try:
            if cast is bool:
                return self.parser.getboolean(section, key)
            return cast(raw)
        except ValueError:
            raise self.error("Bad value {!r} for {}".format(raw, key),
                             section, key)


def load_config(text):
    """
    Parses and validates a suite document; see the module docstring for the schema.

    Parameters
    ----------
    text: str
        The document.

    Output
    ------
    config: SuiteConfig
    """
    from curvcheck.catalog.targets import avail_targets, parse_target_name
    from curvcheck.checks import avail_checks

    # ';' separates matrix rows so it cannot start comments
    parser = ConfigParser(interpolation=None, inline_comment_prefixes=('#', ),
                          comment_prefixes=('#', ), delimiters=('=', ))
    parser.optionxform = str

    try:
        parser.read_string(text)
    except ParsingError as e:
        line = e.errors[0][0] if getattr(e, 'errors', None) else \
            getattr(e, 'lineno', None)
        raise ConfigError("Could not parse the document: {}".
                          format(e.message.splitlines()[0]), line=line)
    except (DuplicateOptionError, DuplicateSectionError) as e:
        raise ConfigError(e.message, line=e.lineno)
    except ConfigParserError as e:
        raise ConfigError(e.message)

    reader = _Reader(parser, text)
    kws = {}
    checks = {}
    targets = []

    for section in parser.sections():
        kind, _, name = section.partition(':')

        if section == 'suite':
            reader.check_keys(section, _suite_keys)
            kws['points_per_target'] = reader.get(section,
                                                  'points_per_target', int,
                                                  50)
            kws['seed'] = reader.get(section, 'seed', int, 0)
            kws['strategy'] = reader.get(section, 'strategy', str, 'uniform')
            kws['n_jobs'] = reader.get(section, 'n_jobs', int, 1)
            for c in reader.get(section, 'checks', str, '').split(','):
                if c.strip():
                    checks.setdefault(c.strip(), None)

        elif section == 'fd':
            reader.check_keys(section, _fd_keys)
            fd_kws = {key: reader.get(section, key, float)
                      for key in ['step', 'nested_step', 'outer_step']
                      if parser.has_option(section, key)}
            if parser.has_option(section, 'richardson'):
                fd_kws['richardson'] = reader.get(section, 'richardson', bool)
            try:
                kws['fd'] = FDSpec(**fd_kws)
            except ConfigError as e:
                key = e.field.split('.')[-1] if e.field else None
                raise reader.error(e.msg, section, key)

        elif section == 'output':
            reader.check_keys(section, _output_keys)
            kws['output_path'] = reader.get(section, 'path')
            kws['output_format'] = reader.get(section, 'format', str, 'json')

        elif kind == 'target' and name:
            reader.check_keys(section, _target_keys)
            targets.append(_read_target(reader, section, name,
                                        avail_targets, parse_target_name))

        elif kind == 'check' and name:
            reader.check_keys(section, _check_keys)
            if name not in avail_checks:
                raise reader.error("Unknown check {}. Must be one of {}".
                                   format(name, avail_checks), section)
            checks[name] = reader.get(section, 'tol', float)

        else:
            raise reader.error("Unknown section [{}]".format(section),
                               section)

    for name in checks:
        if name not in avail_checks:
            raise reader.error("Unknown check {}. Must be one of {}".
                               format(name, avail_checks), 'suite', 'checks')

    config = SuiteConfig(targets=targets, checks=checks, **kws)
    try:
        return config.validate()
    except ConfigError as e:
        if e.line is not None or e.field is None:
            raise
        if e.field.startswith(('target:', 'check:')):
            section, key = e.field, None
        else:
            section, _, key = e.field.partition('.')
        raise ConfigError(e.msg, line=_line_of(text, section, key or None),
                          field=e.field)


def _read_target(reader, section, label, avail_targets, parse_target_name):
    get = reader.get

    points = get(section, 'points', _float_rows)
    metric = get(section, 'metric')

    if metric is not None:
        dim = get(section, 'dim', int)
        domain = get(section, 'domain', _float_rows)
        if dim is None or domain is None:
            raise reader.error("Inline charts need dim and domain", section)
        if np.shape(domain) != (dim, 2):
            raise reader.error("domain must have {} rows of lo, hi".
                               format(dim), section, 'domain')

        known = {key: get(section, key, float)
                 for key in ['sectional', 'scalar']
                 if reader.parser.has_option(section, key)}
        if reader.parser.has_option(section, 'lcf'):
            known['lcf'] = get(section, 'lcf', bool)

        return TargetConfig(label=label, field=get(section, 'field'),
                            points=points, dim=dim, domain=domain,
                            metric=metric, flat=get(section, 'flat', bool,
                                                    False),
                            known=known)

    catalog = get(section, 'catalog', str, label)
    try:
        base, _ = parse_target_name(catalog)
    except ConfigError as e:
        raise reader.error(e.msg, section, 'catalog')
    if base not in avail_targets:
        raise reader.error("Unknown target {}. Must be one of {}".
                           format(catalog, avail_targets), section,
                           'catalog' if reader.parser.has_option(section,
                                                                 'catalog')
                           else None)

    return TargetConfig(label=label, catalog=catalog,
                        field=get(section, 'field'), points=points)

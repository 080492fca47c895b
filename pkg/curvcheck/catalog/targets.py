"""
Verification targets: a chart (or hypersurface), an optional symmetric tensor field on it and the curvature data known in closed form.
"""
import logging
import numpy as np

from curvcheck.catalog import charts, hypersurfaces
from curvcheck.codazzi import make_field, ricci_of
from curvcheck.config.fd import FDSpec
from curvcheck.exceptions import ConfigError, MissingReferenceError
from curvcheck.hypersurface import induced_chart

logger = logging.getLogger(__name__)


class Target:
    """
    A verification target.

    Parameters
    ----------
    label: str
        Label used in reports.

    chart: ChartManifold
        The chart; for hypersurfaces the induced chart.

    field: None, SymTensorField
        The symmetric tensor field field-based checks run on.

    hypersurface: None, Hypersurface
        The hypersurface, if the target is one.

    known: None, dict
        Closed form data. Keys among 'sectional' (constant sectional curvature), 'scalar' (constant scalar curvature), 'lcf' (whether the metric is locally conformally flat), 'sff_norm_sq', 'minimal'.
    """
    def __init__(self, label, chart, field=None, hypersurface=None,
                 known=None):
        self.label = label
        self.chart = chart
        self.field = field
        self.hypersurface = hypersurface
        self.known = {} if known is None else dict(known)

    @property
    def dim(self):
        return self.chart.dim

    @property
    def fd_depth(self):
        """
        Largest evaluator depth of the target.
        """
        depth = self.chart.fd_depth
        if self.field is not None:
            depth = max(depth, self.field.fd_depth)
        return depth

    def get_known(self, key):
        """
        Closed form value; raises MissingReferenceError if the target does not declare it.
        """
        if self.known.get(key) is None:
            raise MissingReferenceError("Target {} does not declare {}".
                                        format(self.label, key))
        return self.known[key]

    def require_field(self):
        if self.field is None:
            raise MissingReferenceError("Target {} has no field".
                                        format(self.label))
        return self.field

    def require_hypersurface(self):
        if self.hypersurface is None:
            raise MissingReferenceError("Target {} is not a hypersurface".
                                        format(self.label))
        return self.hypersurface

    def describe(self):
        return {'label': self.label,
                'chart': self.chart.name,
                'dim': self.dim,
                'field': None if self.field is None else self.field.name,
                'known': {k: v for k, v in sorted(self.known.items())}}

    def __repr__(self):
        return 'Target(label={!r}, dim={})'.format(self.label, self.dim)


##########################
# target name parsing #
##########################

def _parse_value(text):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        return float(text)


def parse_target_name(name):
    """
    Splits 'sphere:n=3,r=2' into ('sphere', {'n': 3, 'r': 2.}).
    """
    base, _, args = name.partition(':')
    kws = {}
    for item in filter(None, (a.strip() for a in args.split(','))):
        key, eq, value = item.partition('=')
        if not eq:
            raise ConfigError("Bad target argument {!r} in {!r}; expected "
                              "key=value".format(item, name))
        try:
            kws[key.strip()] = _parse_value(value)
        except ValueError:
            raise ConfigError("Bad value {!r} for {} in {!r}".
                              format(value, key, name))
    return base.strip(), kws


#############
# fields #
#############

def parse_field(spec, chart, fd=None, hypersurface=None):
    """
    Builds a field from a short text spec.

    Parameters
    ----------
    spec: str
        One of 'ricci', 'traceless_ricci', 'schouten', 'metric:<lam>', 'hessian:<potential>', 'derivative:<potential>:<order>', 'frame_constant:<d1>,...,<dn>', 'constant:<d1>,...,<dn>', 'sff'.

    chart: ChartManifold
        The chart the field lives on.

    fd: None, FDSpec
        Finite-difference steps for derived fields.

    hypersurface: None, Hypersurface
        Needed for 'sff'.

    Output
    ------
    field: SymTensorField
    """
    fd = FDSpec() if fd is None else fd
    kind, *args = [s.strip() for s in spec.split(':')]

    def diag_values():
        return [float(v) for v in args[0].split(',')]

    try:
        if kind == 'ricci':
            return ricci_of(chart, fd=fd)

        elif kind == 'traceless_ricci':
            return make_field('traceless_part_of', chart=chart,
                              field=ricci_of(chart, fd=fd))

        elif kind == 'schouten':
            return make_field('schouten_of', chart=chart, fd=fd)

        elif kind == 'metric':
            lam = float(args[0]) if args else 1.
            return make_field('metric_multiple', chart=chart, fd=fd, lam=lam)

        elif kind == 'hessian':
            return make_field('hessian', chart=chart, fd=fd,
                              potential=args[0])

        elif kind == 'derivative':
            return make_field('derivative_tensor', chart=chart, fd=fd,
                              potential=args[0], order=int(args[1]))

        elif kind in ['frame_constant', 'constant']:
            return make_field(kind, chart=chart, value=diag_values())

        elif kind == 'sff':
            if hypersurface is None:
                raise ConfigError("sff fields need a hypersurface target")
            return make_field('hypersurface_sff', fd=fd,
                              hypersurface=hypersurface)

    except IndexError:
        raise ConfigError("Field {!r} is missing an argument".format(spec))
    except ValueError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError("Bad input to field {!r}: {}".format(spec, e))

    raise ConfigError("Bad input to field: {!r}. Must be one of {}".
                      format(spec, avail_field_specs))


avail_field_specs = ['ricci', 'traceless_ricci', 'schouten', 'metric:<lam>',
                     'hessian:<potential>', 'derivative:<potential>:<order>',
                     'frame_constant:<diag>', 'constant:<diag>', 'sff']


#############
# catalog #
#############

def _sphere(n=2, r=1.):
    return charts.sphere(n=n, r=r), 'ricci', \
        {'sectional': 1 / r ** 2, 'scalar': n * (n - 1) / r ** 2,
         'lcf': True}


def _euclidean(n=2):
    return charts.euclidean(n=n), 'hessian:harmonic_cubic', \
        {'sectional': 0., 'scalar': 0., 'lcf': True}


def _hyperbolic(n=2):
    return charts.hyperbolic(n=n), 'ricci', \
        {'sectional': -1., 'scalar': -n * (n - 1.), 'lcf': True}


def _flat_torus(n=2):
    return charts.flat_torus(n=n), 'frame_constant:{}'.\
        format(','.join(['1', '-1'] + ['0'] * (n - 2))), \
        {'sectional': 0., 'scalar': 0., 'lcf': True}


def _cylinder(n=3):
    return charts.cylinder(n=n), 'ricci', \
        {'scalar': (n - 1.) * (n - 2.), 'lcf': True}


def _nonlcf():
    return charts.s2xs2(), 'ricci', {'scalar': 4., 'lcf': False}


def _s2xh2():
    return charts.s2xh2(), 'ricci', {'scalar': 0., 'lcf': True}


def _conformal_flat(n=3):
    return charts.conformal_flat(n=n), 'ricci', {'lcf': True}


def _equator(n=2):
    return hypersurfaces.equator(n=n), 'sff', \
        {'sectional': 1., 'scalar': n * (n - 1.), 'lcf': True,
         'sff_norm_sq': 0., 'minimal': True}


def _clifford(n=2, k=1):
    known = {'scalar': n * (n - 2.), 'sff_norm_sq': float(n),
             'minimal': True}
    if n == 2:
        known['sectional'] = 0.
    if k == 1:
        # S^1 x S^{n-1} is conformal to R x S^{n-1}
        known['lcf'] = True
    return hypersurfaces.clifford(n=n, k=k), 'sff', known


target_str2builder = {'euclidean': _euclidean,
                      'sphere': _sphere,
                      'hyperbolic': _hyperbolic,
                      'flat_torus': _flat_torus,
                      'cylinder': _cylinder,
                      'nonlcf': _nonlcf,
                      's2xh2': _s2xh2,
                      'conformal_flat': _conformal_flat,
                      'equator': _equator,
                      'clifford': _clifford,
                      }

avail_targets = list(target_str2builder.keys())

# the targets the catalog ships, as name strings
catalog_instances = ['euclidean:n=2', 'euclidean:n=3', 'euclidean:n=4',
                     'sphere:n=2', 'sphere:n=3', 'sphere:n=4',
                     'sphere:n=2,r=2', 'sphere:n=3,r=0.5',
                     'hyperbolic:n=2', 'hyperbolic:n=3',
                     'flat_torus:n=2', 'flat_torus:n=3',
                     'cylinder:n=3', 'cylinder:n=4',
                     'nonlcf', 's2xh2',
                     'conformal_flat:n=3', 'conformal_flat:n=4',
                     'equator:n=2', 'equator:n=3',
                     'clifford:n=2,k=1', 'clifford:n=3,k=1',
                     'clifford:n=4,k=2']


def get_target(name, field=None, fd=None, label=None):
    """
    Builds a catalog target.

    Parameters
    ----------
    name: str
        'base' or 'base:key=value,...' with base one of avail_targets e.g. 'sphere:n=3,r=2', 'clifford:n=3,k=1'.

    field: None, str
        A field spec for parse_field; defaults to the target's default field ('ricci' for curved charts, a harmonic Hessian on Euclidean space, 'sff' for hypersurfaces).

    fd: None, FDSpec
        Finite-difference steps.

    label: None, str
        Report label; defaults to name.

    Output
    ------
    target: Target
    """
    fd = FDSpec() if fd is None else fd
    base, kws = parse_target_name(name)
    if base not in target_str2builder:
        raise ConfigError("Bad input to target: {}. Must be one of {}".
                          format(name, avail_targets), field=name)

    try:
        obj, default_field, known = target_str2builder[base](**kws)
    except TypeError as e:
        raise ConfigError("Bad arguments for target {}: {}".format(name, e),
                          field=name)
    except ValueError as e:
        raise ConfigError(str(e), field=name)

    hyper = None
    if hasattr(obj, 'immersion'):
        hyper = obj
        chart = induced_chart(hyper, fd=fd)
    else:
        chart = obj

    field_spec = default_field if field is None else field
    field_obj = parse_field(field_spec, chart=chart, fd=fd,
                            hypersurface=hyper)

    logger.debug("Built target %s with chart %s and field %s", name,
                 chart.name, field_obj.name)

    return Target(label=name if label is None else label, chart=chart,
                  field=field_obj, hypersurface=hyper, known=known)


def get_inline_target(label, dim, domain, metric, flat=False, field=None,
                      fd=None, known=None):
    """
    Builds a target from an inline chart definition; see charts.inline_chart.
    """
    fd = FDSpec() if fd is None else fd
    try:
        chart = charts.inline_chart(dim=dim, domain=np.array(domain),
                                    metric=metric, flat=flat, name=label)
    except (ValueError, SyntaxError, TypeError) as e:
        raise ConfigError("Bad inline chart for {}: {}".format(label, e),
                          field='metric')

    field_obj = None
    if field is not None:
        field_obj = parse_field(field, chart=chart, fd=fd)

    return Target(label=label, chart=chart, field=field_obj, known=known)

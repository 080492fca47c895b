import pytest

from curvcheck.config.fd import FDSpec
from curvcheck.config.suite import SuiteConfig, TargetConfig, load_config
from curvcheck.exceptions import ConfigError

doc = """\
[suite]
points_per_target = 3
seed = 7
checks = bochner, kato

[fd]
step = 1e-3
richardson = true

[output]
format = text

[target:sphere:n=3]
field = ricci

[target:round]
catalog = sphere:n=2,r=2
points = 1.0, 0.5; 1.2, -1.0

[target:warped]
dim = 2
domain = -1, 1; 0.5, 2
metric = 1, 0; 0, exp(2*x1)   # hyperbolic plane
scalar = -2

[check:lcf_reconstruction]
tol = 1e-3
"""


def test_load_config():
    cfg = load_config(doc)
    assert cfg.points_per_target == 3
    assert cfg.seed == 7
    assert cfg.strategy == 'uniform'
    assert cfg.output_format == 'text'
    assert cfg.output_path is None
    assert cfg.fd.step == 1e-3
    assert cfg.fd.richardson
    assert cfg.fd.nested_step == 1e-2

    assert cfg.checks == {'bochner': None, 'kato': None,
                          'lcf_reconstruction': 1e-3}
    assert cfg.get_tol('lcf_reconstruction') == 1e-3

    labels = [tc.label for tc in cfg.targets]
    assert labels == ['sphere:n=3', 'round', 'warped']

    sphere, rnd, warped = cfg.targets
    assert sphere.catalog == 'sphere:n=3' and sphere.field == 'ricci'
    assert rnd.points == [[1., .5], [1.2, -1.]]
    assert warped.inline
    assert warped.domain == [[-1., 1.], [.5, 2.]]
    assert warped.known == {'scalar': -2.}


def test_targets_build():
    cfg = load_config(doc)
    targets = [tc.build(fd=cfg.fd) for tc in cfg.targets]
    assert [t.label for t in targets] == ['sphere:n=3', 'round', 'warped']
    assert targets[1].get_known('scalar') == pytest.approx(.5)
    assert targets[2].field is None


def test_default_tolerance():
    from curvcheck.checks import get_check
    cfg = SuiteConfig(targets=[TargetConfig(label='sphere:n=2')])
    assert cfg.get_tol('codazzi') == get_check('codazzi').default_tol


def test_set_params():
    cfg = load_config(doc)
    cfg.set_params(seed=11, fd__step=1e-2)
    assert cfg.seed == 11
    assert cfg.fd.step == 1e-2
    assert cfg.get_params(deep=False)['output_format'] == 'text'


def _error(text):
    with pytest.raises(ConfigError) as info:
        load_config(text)
    return info.value


def test_unknown_section():
    err = _error("[suite]\nseed = 1\n\n[plot]\ncolor = red\n")
    assert err.line == 4
    assert 'plot' in str(err)


def test_unknown_key():
    err = _error("[suite]\nseed = 1\nsed = 2\n")
    assert err.line == 3
    assert err.field == 'suite.sed'


def test_bad_value():
    err = _error("[suite]\n\npoints_per_target = many\n")
    assert err.line == 3


def test_unknown_check():
    err = _error("[target:sphere:n=2]\n\n[check:curvature_magic]\ntol = 1\n")
    assert err.line == 3

    _error("[suite]\nchecks = bochner, curvature_magic\n")


def test_bad_tolerance():
    err = _error("[check:codazzi]\ntol = -1\n")
    assert err.field == 'check:codazzi'
    assert err.line == 1


def test_bad_fd_step():
    err = _error("[fd]\nrichardson = false\nstep = 0\n")
    assert err.line == 3
    assert err.field == 'fd.step'

    with pytest.raises(ConfigError):
        FDSpec(outer_step=-1.)


def test_fixed_strategy_needs_points():
    err = _error("[suite]\nstrategy = fixed\n\n[target:sphere:n=2]\n")
    assert err.field == 'target:sphere:n=2'
    assert err.line == 4


def test_bad_strategy_and_format():
    assert _error("[suite]\nstrategy = sobol\n").field == 'suite.strategy'
    assert _error("[output]\nformat = xml\n").field == 'output.format'


def test_unknown_target():
    err = _error("[suite]\nseed = 1\n[target:klein_bottle]\n")
    assert err.line == 3


def test_inline_target_needs_domain():
    _error("[target:warped]\ndim = 2\nmetric = 1, 0; 0, 1\n")

    err = _error("[target:warped]\ndim = 2\ndomain = -1, 1\n"
                 "metric = 1, 0; 0, 1\n")
    assert err.field == 'target:warped.domain'


def test_parse_errors():
    _error("seed = 1\n")
    _error("[suite]\nseed = 1\nseed = 2\n")
    _error("[suite]\n[suite]\n")


def test_seed_range():
    _error("[suite]\nseed = -1\n")


def test_set_params_validates():
    cfg = load_config(doc)
    with pytest.raises(ConfigError):
        cfg.set_params(seed=-1)

    with pytest.raises(ConfigError):
        cfg.set_params(fd__nested_step=0.)

    with pytest.raises(ValueError):
        cfg.set_params(colour='red')


def test_params_follow_constructor_arguments():
    fd = FDSpec(step=1e-3)
    assert fd.get_params() == {'step': 1e-3, 'richardson': False,
                               'nested_step': 1e-2, 'outer_step': 5e-2}

    cfg = SuiteConfig(seed=4)
    params = cfg.get_params()
    assert params['seed'] == 4
    assert params['fd__step'] == 1e-4
    assert 'fd__step' not in cfg.get_params(deep=False)


def test_set_params_errors_name_the_parameter():
    cfg = SuiteConfig()
    with pytest.raises(ConfigError) as info:
        cfg.set_params(colour='red')
    assert info.value.field == 'colour'

    with pytest.raises(ConfigError) as info:
        cfg.set_params(seed__step=1.)
    assert info.value.field == 'seed'

import logging
import numpy as np
from joblib import Parallel, delayed

from curvcheck import __version__
from curvcheck.checks import PointContext, get_check, verdict, avail_checks
from curvcheck.curvature_operator import PLANE_TENSOR_SCALE
from curvcheck.exceptions import CurvCheckError, PreconditionError, \
    ConfigError
from curvcheck.hypersurface import NORMAL_ORIENTATION
from curvcheck.suite.report import CheckReport, Record, SCHEMA_VERSION
from curvcheck.suite.sampling import sample_points, check_seed, PRNG_NAME

logger = logging.getLogger(__name__)

INDEX_CONVENTION = 'R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb + ...; ' \
    'R_abcd = g_ae R^e_bcd; sec(X, Y) = R(X, Y, X, Y); Ric_bd = R^a_bad'

PLANE_TENSOR_CONVENTION = 'theta = {} (X (x) Y + Y (x) X) for g-orthonormal ' \
    'X, Y; g(R theta, theta) = 2 sec(X, Y)'.format(PLANE_TENSOR_SCALE)


def run_point(target, x, fd, checks, tols, random_state):
    """
    Runs checks at one point.

    Parameters
    ----------
    target: Target
        The target.

    x: array-like, shape (n, )
        The point.

    fd: FDSpec
        Finite-difference steps.

    checks: list of str
        Check names.

    tols: dict
        Tolerance of each check.

    random_state: int
        Seed of the draws of the checks at this point.

    Output
    ------
    results: list of (check, value, verdict, note)
    """
    ctx = PointContext(target=target, x=x, fd=fd, random_state=random_state)

    results = []
    for name in checks:
        check = get_check(name)
        try:
            out = check(ctx)
            value, note = out.value, out.note
            verd = verdict(check.kind, value, tols[name])

        except PreconditionError as e:
            value, verd = None, 'inapplicable'
            note = '{}: {}'.format(type(e).__name__, e)

        except (CurvCheckError, np.linalg.LinAlgError) as e:
            value, verd = None, 'fail'
            note = '{}: {}'.format(type(e).__name__, e)

        results.append((name, value, verd, note))
    return results


def _build_targets(cfg):
    targets = []
    for tc in cfg.targets:
        try:
            targets.append(tc.build(fd=cfg.fd))
        except ConfigError as e:
            if e.field is not None and e.field.startswith('target:'):
                raise
            raise ConfigError(e.msg, line=e.line,
                              field='target:' + tc.label)
    return targets


def run_suite(cfg, verbose=0):
    """
    Runs a verification suite.

    Parameters
    ----------
    cfg: SuiteConfig
        The suite.

    verbose: int
        joblib verbosity.

    Output
    ------
    report: CheckReport
    """
    cfg.validate()
    check_names = list(cfg.checks.keys()) or list(avail_checks)
    tols = {name: cfg.get_tol(name) for name in check_names}

    targets = _build_targets(cfg)

    #################
    # sample points #
    #################
    target_info = []
    job_configs = []
    where = []
    for t_idx, (tc, target) in enumerate(zip(cfg.targets, targets)):
        points, n_dropped = sample_points(target, fd=cfg.fd,
                                          n_points=cfg.points_per_target,
                                          seed=cfg.seed, target_index=t_idx,
                                          strategy=cfg.strategy,
                                          points=tc.points)
        if n_dropped:
            logger.warning("Dropped %d points of %s within the boundary "
                           "margin", n_dropped, target.label)

        info = target.describe()
        info['n_points'] = len(points)
        info['n_dropped'] = n_dropped
        target_info.append(info)

        for p_idx, x in enumerate(points):
            job_configs.append({'target': target, 'x': x, 'fd': cfg.fd,
                                'checks': check_names, 'tols': tols,
                                'random_state': check_seed(cfg.seed, t_idx,
                                                           p_idx)})
            where.append(p_idx)

    logger.info("Running %d checks at %d points of %d targets",
                len(check_names), len(job_configs), len(targets))

    ##############
    # run checks #
    ##############
    par = Parallel(n_jobs=cfg.n_jobs, verbose=verbose, prefer="threads")
    jobs = (delayed(run_point)(**kws)
            for kws in job_configs)
    output = par(jobs)

    records = []
    for kws, p_idx, results in zip(job_configs, where, output):
        for name, value, verd, note in results:
            records.append(Record(target=kws['target'].label, check=name,
                                  point_index=p_idx,
                                  point=[float(v) for v in kws['x']],
                                  value=value, tol=tols[name],
                                  kind=get_check(name).kind, verdict=verd,
                                  note=note))

    report = CheckReport(meta=suite_meta(cfg), targets=target_info,
                         records=records)
    report.records = report.sorted_records()
    summ = report.summary
    logger.info("%d passed, %d failed, %d inapplicable", summ['pass'],
                summ['fail'], summ['inapplicable'])
    return report


def suite_meta(cfg):
    """
    Conventions and parameters a report was computed under.
    """
    return {'schema_version': SCHEMA_VERSION,
            'tool_version': __version__,
            'index_convention': INDEX_CONVENTION,
            'plane_tensor_convention': PLANE_TENSOR_CONVENTION,
            'normal_orientation': NORMAL_ORIENTATION,
            'fd': cfg.fd.get_params(),
            'seed': cfg.seed,
            'prng': PRNG_NAME,
            'strategy': cfg.strategy,
            'notes': ['values are residuals (pass iff |value| <= tol), gaps '
                      '(pass iff value >= -tol) or exceedances (pass iff '
                      'value > tol)']}

"""
Command line entry point.

    verify --config suite.ini [--format json|text] [--out report.json] [--seed N] [--list-targets] [--list-checks] [--verbose]

Exit status: 0 if no check failed, 1 if some check failed, 2 on a configuration or infrastructure error (including an empty suite).
"""
import argparse
import logging
import sys

from curvcheck import __version__
from curvcheck.catalog.targets import avail_targets, catalog_instances, \
    avail_field_specs
from curvcheck.checks import check_str2obj
from curvcheck.config.suite import load_config
from curvcheck.exceptions import CurvCheckError
from curvcheck.suite.report import emit_report, EXIT_ERROR, EXIT_PASS
from curvcheck.suite.run import run_suite

logger = logging.getLogger('curvcheck')


def get_parser():
    parser = argparse.\
        ArgumentParser(prog='verify',
                       description="Numerically verify curvature identities "
                                   "and inequalities on a catalog of "
                                   "Riemannian manifolds.")

    parser.add_argument('--config', default=None,
                        help='Path to the suite document.')

    parser.add_argument('--format', default=None, choices=['json', 'text'],
                        help='Report format; overrides the document.')

    parser.add_argument('--out', default=None,
                        help='Where to write the report; overrides the '
                             'document. Defaults to stdout.')

    parser.add_argument('--seed', default=None, type=int,
                        help='Seed of the point sampler; overrides the '
                             'document.')

    parser.add_argument('--list-targets', action='store_true',
                        help='List the catalog targets and exit.')

    parser.add_argument('--list-checks', action='store_true',
                        help='List the checks and exit.')

    parser.add_argument('--verbose', '-v', action='count', default=0,
                        help='More logging on stderr.')

    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))

    return parser


def _list_targets():
    lines = ['builders: ' + ', '.join(avail_targets),
             'fields: ' + ', '.join(avail_field_specs),
             'instances:']
    lines.extend('  ' + name for name in catalog_instances)
    return '\n'.join(lines) + '\n'


def _list_checks():
    width = max(len(name) for name in check_str2obj)
    lines = ['{}  {:8s} tol={:<8.0e} {}'.
             format(name.ljust(width), c.kind, c.default_tol, c.description)
             for name, c in check_str2obj.items()]
    return '\n'.join(lines) + '\n'


def main(argv=None):
    """
    Runs the CLI.

    Parameters
    ----------
    argv: None, list of str
        Arguments; defaults to sys.argv[1:].

    Output
    ------
    exit_code: int
    """
    args = get_parser().parse_args(argv)

    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(levelname)s %(name)s: %(message)s')

    if args.list_targets or args.list_checks:
        if args.list_targets:
            sys.stdout.write(_list_targets())
        if args.list_checks:
            sys.stdout.write(_list_checks())
        return EXIT_PASS

    if args.config is None:
        logger.error("--config is required unless listing targets or checks")
        return EXIT_ERROR

    try:
        with open(args.config) as f:
            text = f.read()
    except OSError as e:
        logger.error("Could not read %s: %s", args.config, e)
        return EXIT_ERROR

    try:
        cfg = load_config(text)
        if args.seed is not None:
            cfg.set_params(seed=args.seed)
        if args.format is not None:
            cfg.set_params(output_format=args.format)
        if args.out is not None:
            cfg.set_params(output_path=args.out)

        if not cfg.targets:
            logger.warning("The suite has no targets")

        report = run_suite(cfg, verbose=max(args.verbose - 1, 0))
        doc, exit_code = emit_report(report, format=cfg.output_format,
                                     out=cfg.output_path)

    except CurvCheckError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_ERROR

    if cfg.output_path is None:
        sys.stdout.write(doc)

    return exit_code


if __name__ == '__main__':
    sys.exit(main())

from curvcheck.suite.run import run_suite, run_point
from curvcheck.suite.report import CheckReport, Record, emit_report, \
    render_report, read_report

__all__ = ['run_suite', 'run_point', 'CheckReport', 'Record', 'emit_report',
           'render_report', 'read_report']

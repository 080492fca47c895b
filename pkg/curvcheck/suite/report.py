"""
Check reports and their JSON and text renderings.

JSON schema (version 1): a single object with keys

    meta: schema_version, tool_version, index_convention, plane_tensor_convention, normal_orientation, fd, seed, prng, notes
    targets: list of {label, chart, dim, field, known, n_points, n_dropped}
    checks: list of records {target, check, point_index, point, value, tol, kind, verdict, note}, sorted by (target, check, point_index)
    summary: {pass, fail, inapplicable, total}
"""
import json
import numpy as np
import pandas as pd
from dataclasses import dataclass, field, asdict
from typing import List, Optional

from curvcheck.exceptions import ReportWriteError, ContractViolationError

SCHEMA_VERSION = 1

avail_verdicts = ['pass', 'fail', 'inapplicable']

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


@dataclass
class Record:
    """
    The result of one check at one point.

    Attributes
    ----------
    target: str
        Target label.

    check: str
        Check name.

    point_index: int
        Index of the point within the target.

    point: list of float
        The point.

    value: None, float
        Residual or gap; None when the check was inapplicable or errored.

    tol: float
        Tolerance used.

    kind: str
        'residual', 'gap' or 'exceeds'.

    verdict: str
        One of avail_verdicts.

    note: str
        Diagnostic note.
    """
    target: str
    check: str
    point_index: int
    point: List[float]
    value: Optional[float]
    tol: float
    kind: str
    verdict: str
    note: str = ''


@dataclass
class CheckReport:
    """
    Records of a suite run with the conventions they were computed under.
    """
    meta: dict
    targets: List[dict] = field(default_factory=list)
    records: List[Record] = field(default_factory=list)

    @property
    def summary(self):
        counts = {v: 0 for v in avail_verdicts}
        for rec in self.records:
            counts[rec.verdict] += 1
        counts['total'] = len(self.records)
        return counts

    @property
    def exit_code(self):
        """
        0 if nothing failed, 1 if a check failed, 2 if there was nothing to check.
        """
        if not self.targets:
            return EXIT_ERROR
        return EXIT_FAIL if self.summary['fail'] else EXIT_PASS

    def sorted_records(self):
        """
        Records sorted by (target position, check name, point index).
        """
        order = {t['label']: i for i, t in enumerate(self.targets)}
        return sorted(self.records,
                      key=lambda r: (order.get(r.target, len(order)),
                                     r.check, r.point_index))

    def to_dict(self):
        return {'meta': self.meta,
                'targets': self.targets,
                'checks': [asdict(r) for r in self.sorted_records()],
                'summary': self.summary}

    def to_dataframe(self):
        """
        Records as a pandas DataFrame, one row per record.
        """
        cols = ['target', 'check', 'point_index', 'value', 'tol', 'kind',
                'verdict', 'note']
        rows = [{c: getattr(r, c) for c in cols}
                for r in self.sorted_records()]
        return pd.DataFrame(rows, columns=cols)


def _clean(obj):
    """
    Converts numpy scalars and non-finite floats to plain JSON values.
    """
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    elif isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    elif isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    elif isinstance(obj, (int, np.integer)):
        return int(obj)
    elif isinstance(obj, (float, np.floating)):
        return float(obj) if np.isfinite(obj) else None
    return obj


def render_report(report, format='json'):
    """
    Renders a report as text.

    Parameters
    ----------
    report: CheckReport
        The report.

    format: str
        'json' for the versioned schema, 'text' for a table.

    Output
    ------
    doc: str
    """
    if format == 'json':
        return json.dumps(_clean(report.to_dict()), sort_keys=True,
                          indent=2) + '\n'

    elif format == 'text':
        df = report.to_dataframe()
        lines = ['curvcheck {} | seed {} | {}'.
                 format(report.meta.get('tool_version'),
                        report.meta.get('seed'),
                        report.meta.get('index_convention'))]
        if len(df):
            lines.append(df.to_string(index=False))
        summ = report.summary
        lines.append('pass: {pass} fail: {fail} inapplicable: '
                     '{inapplicable} total: {total}'.format(**summ))
        return '\n'.join(lines) + '\n'

    raise ValueError("Bad input to format: {}. Must be one of "
                     "['json', 'text']".format(format))


def emit_report(report, format='json', out=None):
    """
    Renders a report, writes it to a path (or returns it for stdout) and computes the exit status.

    Parameters
    ----------
    report: CheckReport
        The report.

    format: str
        'json' or 'text'.

    out: None, str
        Output path.

    Output
    ------
    doc, exit_code

    doc: str
        The rendered report.

    exit_code: int
        0 if no check failed, 1 if one did, 2 if the suite was empty.
    """
    doc = render_report(report, format=format)

    if out is not None:
        try:
            with open(out, 'w') as f:
                f.write(doc)
        except OSError as e:
            raise ReportWriteError("Could not write the report to {}: {}".
                                   format(out, e))

    return doc, report.exit_code


def read_report(text):
    """
    Parses a JSON report, rejecting unknown schema versions.

    Output
    ------
    report: dict
    """
    doc = json.loads(text)
    version = doc.get('meta', {}).get('schema_version')
    if version != SCHEMA_VERSION:
        raise ContractViolationError("Unsupported report schema version {}; "
                                     "this reader understands {}".
                                     format(version, SCHEMA_VERSION))

    for key in ['meta', 'targets', 'checks', 'summary']:
        if key not in doc:
            raise ContractViolationError("Report is missing {}".format(key))
    return doc

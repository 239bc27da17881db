# -*- coding: utf-8 -*-

"""
Emission of analysis, suite and search reports as JSON, markdown or CSV.

Reports are built as plain records (dicts of lists, strings and integers)
plus an optional table. In JSON, every integer is written as a decimal
string; CSV carries the table only.
"""

import io
import json

import pandas as pd

FORMATS = ('json', 'md', 'csv')


def decimal_strings(obj):
    """
    Returns a copy of `obj` with all integers (but not booleans) replaced
    by their decimal string, tuples turned into lists.
    """
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: decimal_strings(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [decimal_strings(v) for v in obj]
    return obj


def ideal_record(ideal):
    return dict(dim=ideal.dim, gens=[list(g) for g in ideal.gens],
                text=str(ideal))


def check_record(check):
    return dict(name=check.name, relation=check.relation, lhs=check.lhs,
                rhs=check.rhs, holds=check.holds, heuristic=check.heuristic)


def classification_record(classification):
    if classification is None:
        return None
    c = classification
    return dict(tag=c.tag, subcase=c.subcase, name=c.name, c=c.c,
                depth=c.depth, resolution=c.resolution and
                [dict(shift=shift, multiplicity=mult)
                 for shift, mult in c.resolution],
                closed_form=c.closed_form and str(c.closed_form),
                relations=[dict(index=i, value=v) for i, v in c.relations])


def series_table(profile):
    """
    Computed and predicted H(n) and s_n for each n of the window; the
    predictions are empty outside their valid range.
    """
    c = profile.classification
    form = c.closed_form if c is not None else None
    rows = []
    for n, h in enumerate(profile.table.values):
        rows.append(dict(
                n=n, H=h,
                H_predicted=form(n) if form and n >= form.n_min else None,
                s=profile.s_at(n),
                s_predicted=c.predicted_s(n, profile.d) if c else None))
    return pd.DataFrame(rows, columns=['n', 'H', 'H_predicted', 's',
                                       's_predicted'], dtype=object)


def profile_record(profile, checks, label=None):
    """Everything of an analysis in one record."""
    return dict(
            label=label, dim=profile.d, Q=ideal_record(profile.Q),
            I=ideal_record(profile.I), window=profile.table.N,
            hilbert_function=profile.table.values,
            coefficients=profile.e.e, postulation=profile.e.postulation,
            colength=profile.len_ai, multiplicity=profile.len_aq,
            sally_lengths=profile.s, rank=profile.rank, m=profile.m_inv,
            reduction_number=profile.reduction_number,
            flags=profile.flags._asdict(),
            classification=classification_record(profile.classification),
            checks=[check_record(c) for c in checks],
            failed=any(c.violated for c in checks))


def suite_record(results):
    return dict(claims=[dict(id=r.id, fixture=r.fixture, claim=r.claim,
                             description=r.description,
                             expected=_value_text(r.expected),
                             computed=_value_text(r.computed),
                             status=r.status, provenance=r.provenance)
                        for r in results],
                passed=sum(r.status == 'PASS' for r in results),
                failed=sum(r.status == 'FAIL' for r in results),
                skipped=sum(r.status == 'SKIP' for r in results))


def suite_table(results):
    return pd.DataFrame(
            [(r.id, r.status, r.provenance, _value_text(r.expected),
              _value_text(r.computed)) for r in results],
            columns=['id', 'status', 'provenance', 'expected', 'computed'])


def _value_text(value):
    if isinstance(value, tuple):
        return ', '.join(str(v) for v in value)
    return str(value)


def search_record(report):
    return dict(generator=report.generator, version=report.version,
                config=report.config.as_dict(), instances=report.instances,
                kept=report.kept, filtered=report.filtered,
                skipped=report.skipped, counts=report.counts,
                histogram=[dict(rank=k[0], m=k[1], s1=k[2], s2=k[3],
                                count=count)
                           for k, count in report.histogram],
                violations=report.violations,
                heuristic_failures=report.heuristic_failures,
                failed=report.failed)


def histogram_table(report):
    return pd.DataFrame([k + (count,) for k, count in report.histogram],
                        columns=['rank', 'm', 's1', 's2', 'count'])


def error_record(exc):
    return dict(error=type(exc).__name__, message=str(exc))


def _markdown_cell(value):
    if value is None or (isinstance(value, float) and value != value):
        return ''
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(decimal_strings(value))
    return str(value).replace('|', '\\|')


def markdown_table(table):
    lines = ['| %s |' % ' | '.join(str(c) for c in table.columns),
             '|%s' % ' --- |' * len(table.columns)]
    for row in table.itertuples(index=False):
        lines.append('| %s |' % ' | '.join(_markdown_cell(v) for v in row))
    return '\n'.join(lines) + '\n'


def render(record, fmt, table=None, title=None, omit=()):
    """
    Renders a record in format `fmt`: 'json' the record, 'md' a key-value
    listing of the record (without the keys in `omit`) followed by the
    table, 'csv' the table only (or the record as key-value pairs if there
    is none).
    """
    if fmt == 'json':
        return json.dumps(decimal_strings(record), indent=2) + '\n'
    if fmt == 'md':
        parts = ['# %s\n' % title] if title else []
        scalars = [(k, v) for k, v in record.items() if k not in omit]
        parts.append(markdown_table(pd.DataFrame(scalars,
                                                 columns=['key', 'value'])))
        if table is not None:
            parts.append(markdown_table(table))
        return '\n'.join(parts)
    if fmt == 'csv':
        if table is None:
            table = pd.DataFrame([(k, _markdown_cell(v))
                                  for k, v in record.items()],
                                 columns=['key', 'value'])
        out = io.StringIO()
        table.to_csv(out, index=False, lineterminator='\n')
        return out.getvalue()
    raise ValueError("Unknown format %r; choose one of %s" %
                     (fmt, ', '.join(FORMATS)))

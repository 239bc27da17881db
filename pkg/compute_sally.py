#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Computes Hilbert functions, Hilbert coefficients and Sally-module data of
m-primary monomial ideals, checks the known examples, and runs seeded
searches for counterexamples.

For usage information, call with --help.
"""

import io
import os
import sys
from argparse import ArgumentParser

import pandas as pd

from sallylab import config
from sallylab import report
from sallylab.closures import (integral_closure, is_reduction,
                               ratliff_rush_chain, reduction_number)
from sallylab.errors import ParseError, SallyLabError, ValidationError
from sallylab.fixtures import builtin_fixtures
from sallylab.hilbert import (binomial_fit, configured_window,
                              hilbert_function, multiplicity_crosscheck)
from sallylab.sally import analyze, check_inequalities, verify_closed_form
from sallylab.search import MODES, SearchConfig, sweep
from sallylab.specs import parse_spec, read_spec
from sallylab.verify import run_suite, suite_passed

SPEC_COMMANDS = ('analyze', 'hilbert', 'sally', 'classify', 'closure',
                 'reduction')


def opts_parser():
    descr = ("Computes Hilbert functions, Hilbert coefficients and "
             "Sally-module data of m-primary monomial ideals.")
    parser = ArgumentParser(description=descr)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True
    helps = dict(
            analyze='Full analysis: Hilbert function, coefficients, Sally '
                    'lengths, flags, classification and all checks.',
            hilbert='Hilbert function table and coefficients.',
            sally='Sally lengths, rank and the invariant m.',
            classify='Classification with its verified predictions.',
            closure='Integral closure and Ratliff-Rush closure of I.',
            reduction='Whether Q is a reduction of I, and the reduction '
                      'number.')
    subparsers = []
    for name in SPEC_COMMANDS:
        sub = commands.add_parser(name, help=helps[name])
        sub.add_argument('spec', metavar='SPEC',
                type=str,
                help='Ideal specification: a JSON file, "-" for standard '
                     'input, inline JSON, or the label of a built-in example '
                     '(%s)' % ', '.join(f.spec.label
                                        for f in builtin_fixtures()))
        sub.add_argument('--window', metavar='N',
                type=int, default=None,
                help='Number of Hilbert function values beyond H(0) to '
                     'compute (default: hilbert.window, or 2d+6 if 0)')
        subparsers.append(sub)
    subparsers.append(commands.add_parser(
            'verify-paper',
            help='Checks every claim attached to the built-in examples.'))
    sub = commands.add_parser(
            'search', help='Seeded random sweep over instances (Q, I).')
    sub.add_argument('--seed', type=int, default=None,
            help='Seed of the sweep (default: search.seed)')
    sub.add_argument('--samples', type=int, default=None,
            help='Number of instances (default: search.samples)')
    sub.add_argument('--dim', type=int, default=None,
            help='Number of variables (default: search.dim)')
    sub.add_argument('--box', type=int, default=None,
            help='Largest exponent of a pure power in Q '
                 '(default: search.box)')
    sub.add_argument('--mode', default=None, choices=MODES,
            type=lambda mode: mode.lower().replace('-', '_'),
            help='Which instances to keep and check (default: search.mode)')
    subparsers.append(sub)
    for sub in subparsers:
        sub.add_argument('--format', metavar='FORMAT',
                type=str, default='json', choices=report.FORMATS,
                help='Report format: json, md or csv (default: %(default)s)')
        sub.add_argument('--out', metavar='FILE',
                type=str, default=None,
                help='Write the report to FILE instead of standard output, '
                     'and the configuration next to it as a .vars file')
        config.prepare_argument_parser(sub)
    return parser


def load_spec(text):
    """
    Reads an ideal specification from a file, standard input, inline JSON
    or a built-in example label.
    """
    if text == '-':
        return parse_spec(sys.stdin.read())
    if text.lstrip().startswith('{'):
        return parse_spec(text)
    if os.path.exists(text):
        return read_spec(text)
    for fixture in builtin_fixtures():
        if fixture.spec.label == text:
            return fixture.spec
    raise ParseError("%r is neither a file nor a built-in example" % text)


def profile_of(spec, cfg, with_closures=True):
    Q, I = spec.ideals()
    window = configured_window(cfg, spec.dim)
    print("Analyzing %s with window %d..." % (spec.name, window),
          file=sys.stderr)
    return analyze(Q, I, window=window, cfg=cfg, with_closures=with_closures)


def cmd_analyze(spec, cfg):
    profile = profile_of(spec, cfg)
    checks = (check_inequalities(profile) +
              verify_closed_form(profile.classification, profile))
    record = report.profile_record(profile, checks, spec.label)
    return record, report.series_table(profile), int(record['failed'])


def cmd_hilbert(spec, cfg):
    Q, I = spec.ideals()
    window = configured_window(cfg, spec.dim)
    max_points = int(cfg['colength.max_points'])
    print("Tabulating H(n) of %s for n <= %d..." % (spec.name, window),
          file=sys.stderr)
    table = hilbert_function(I, window,
                             num_workers=config.num_workers(
                                     cfg, 'hilbert.num_workers'),
                             max_points=max_points)
    e = binomial_fit(table)
    crosscheck = None
    if is_reduction(Q, I):
        crosscheck = multiplicity_crosscheck(I, Q, e, max_points=max_points)
    record = dict(label=spec.label, I=report.ideal_record(I), window=window,
                  hilbert_function=table.values, coefficients=e.e,
                  postulation=e.postulation, multiplicity_matches=crosscheck)
    rows = pd.DataFrame([(n, h, e(n)) for n, h in enumerate(table.values)],
                        columns=['n', 'H', 'P'])
    return record, rows, int(crosscheck is False)


def cmd_sally(spec, cfg):
    profile = profile_of(spec, cfg, with_closures='lemma')
    record = dict(label=spec.label, colength=profile.len_ai,
                  coefficients=profile.e.e, sally_lengths=profile.s,
                  rank=profile.rank, m=profile.m_inv,
                  flags=profile.flags._asdict())
    rows = pd.DataFrame([(n, profile.s_at(n)) for n in range(profile.N + 1)],
                        columns=['n', 's'])
    return record, rows, 0


def cmd_classify(spec, cfg):
    profile = profile_of(spec, cfg, with_closures='lemma')
    checks = verify_closed_form(profile.classification, profile)
    failed = any(c.violated for c in checks)
    record = dict(label=spec.label,
                  classification=report.classification_record(
                          profile.classification),
                  checks=[report.check_record(c) for c in checks],
                  failed=failed)
    return record, report.series_table(profile), int(failed)


def cmd_closure(spec, cfg):
    _, I = spec.ideals()
    print("Computing closures of %s..." % spec.name, file=sys.stderr)
    closure = integral_closure(I, max_points=int(cfg['colength.max_points']))
    chain = ratliff_rush_chain(I, int(cfg['closures.ratliff_rush_max']),
                               closure=closure)
    record = dict(label=spec.label, I=report.ideal_record(I),
                  integral_closure=report.ideal_record(closure),
                  integrally_closed=closure == I,
                  ratliff_rush=report.ideal_record(chain.ideal),
                  ratliff_rush_closed=chain.ideal == I,
                  ratliff_rush_stable_at=chain.stable_at,
                  ratliff_rush_heuristic=chain.heuristic)
    return record, None, 0


def cmd_reduction(spec, cfg):
    Q, I = spec.ideals()
    reduction = is_reduction(Q, I)
    r = (reduction_number(Q, I, int(cfg['closures.reduction_max']))
         if reduction else None)
    record = dict(label=spec.label, Q=report.ideal_record(Q),
                  I=report.ideal_record(I), reduction=reduction,
                  reduction_number=r)
    return record, None, 0


def cmd_verify_paper(cfg):
    results = run_suite(cfg=cfg, progress=True)
    record = report.suite_record(results)
    print("%d claims: %d passed, %d failed, %d skipped" % (
            len(results), record['passed'], record['failed'],
            record['skipped']), file=sys.stderr)
    for result in results:
        if result.status != 'PASS':
            print(result, file=sys.stderr)
    return record, report.suite_table(results), int(not suite_passed(results))


def cmd_search(options, cfg):
    config.override(cfg, search__seed=options.seed,
                    search__samples=options.samples, search__dim=options.dim,
                    search__box=options.box, search__mode=options.mode)
    try:
        search_config = SearchConfig.from_config(cfg)
    except ValueError as exc:
        raise ValidationError(str(exc))
    workers = config.num_workers(cfg, 'search.num_workers')
    print("Sweeping %d instances (seed %d, mode %s) with %d worker(s)..." % (
            search_config.samples, search_config.seed, search_config.mode,
            workers), file=sys.stderr)
    result = sweep(search_config, cfg, num_workers=workers, progress=True)
    print("Kept %d, filtered %d, skipped %d; %d violation(s)" % (
            result.kept, result.filtered, sum(result.skipped.values()),
            len(result.violations)), file=sys.stderr)
    return (report.search_record(result), report.histogram_table(result),
            int(result.failed))


def emit(text, outfile):
    if outfile:
        with io.open(outfile, 'w') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    # parse command line
    parser = opts_parser()
    options = parser.parse_args(argv)
    cfg = config.from_parsed_arguments(options)
    expected = set(config.default_config())

    # run command
    try:
        if options.command in SPEC_COMMANDS:
            config.override(cfg, hilbert__window=options.window)
            spec = load_spec(options.spec)
            command = globals()['cmd_' + options.command]
            record, table, status = command(spec, cfg)
        elif options.command == 'verify-paper':
            record, table, status = cmd_verify_paper(cfg)
        else:
            record, table, status = cmd_search(options, cfg)
    except (ParseError, ValidationError) as exc:
        print("Error: %s" % exc, file=sys.stderr)
        return 2
    except SallyLabError as exc:
        emit(report.render(report.error_record(exc), options.format),
             options.out)
        print("Error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1

    # write report
    emit(report.render(record, options.format, table,
                       title=options.command, omit=('claims',)),
         options.out)
    if options.out:
        config.write_config_file(os.path.splitext(options.out)[0] + '.vars',
                                 cfg)
    config.warn_unused_variables(cfg, expected)
    return status


if __name__ == "__main__":
    sys.exit(main() or 0)

# -*- coding: utf-8 -*-

"""
Runs the claims of the built-in fixtures against freshly computed profiles.
"""

import sys
from collections import namedtuple

import tqdm

from . import config
from .errors import BudgetExceeded, SallyLabError
from .fixtures import builtin_fixtures
from .hilbert import configured_window
from .sally import analyze

PASS = 'PASS'
FAIL = 'FAIL'
SKIP = 'SKIP'

# claims on H(n) reach up to n = 8
MIN_WINDOW = 8


class ClaimResult(namedtuple('ClaimResult',
                             ['fixture', 'claim', 'description', 'expected',
                              'computed', 'status', 'provenance'])):
    """
    Outcome of one claim: the expected and computed values are kept as
    they are, so a FAIL shows both.
    """
    __slots__ = ()

    @property
    def id(self):
        return '%s/%s' % (self.fixture, self.claim)

    def __str__(self):
        text = '%-4s %s: %s [%s]' % (self.status, self.id, self.description,
                                     self.provenance)
        if self.status != PASS:
            text += '\n     expected: %s\n     computed: %s' % (
                    self.expected, self.computed)
        return text


def describe_error(exc):
    return '%s: %s' % (type(exc).__name__, exc)


def run_fixture(fixture, cfg):
    """Evaluates all claims of a fixture, returning a list of ClaimResults."""
    spec = fixture.spec
    Q, I = spec.ideals()
    window = max(configured_window(cfg, spec.dim), MIN_WINDOW)
    try:
        profile = analyze(Q, I, window=window, cfg=cfg)
    except SallyLabError as exc:
        status = SKIP if isinstance(exc, BudgetExceeded) else FAIL
        return [ClaimResult(spec.label, claim.id, claim.description,
                            claim.expected if not callable(claim.expected)
                            else None, describe_error(exc), status,
                            claim.provenance)
                for claim in fixture.claims]
    results = []
    for claim in fixture.claims:
        try:
            expected = claim.expected_value(profile)
            computed = claim.compute(profile)
        except BudgetExceeded as exc:
            results.append(ClaimResult(spec.label, claim.id,
                                       claim.description, None,
                                       describe_error(exc), SKIP,
                                       claim.provenance))
            continue
        except SallyLabError as exc:
            results.append(ClaimResult(spec.label, claim.id,
                                       claim.description, None,
                                       describe_error(exc), FAIL,
                                       claim.provenance))
            continue
        if isinstance(computed, list):
            computed = tuple(computed)
        results.append(ClaimResult(spec.label, claim.id, claim.description,
                                   expected, computed,
                                   PASS if computed == expected else FAIL,
                                   claim.provenance))
    return results


def run_suite(fixtures=None, cfg=None, progress=False):
    """
    Runs the claims of `fixtures` (default: all built-in ones) and returns
    the list of ClaimResults in fixture order.
    """
    if fixtures is None:
        fixtures = builtin_fixtures()
    if cfg is None:
        cfg = config.default_config()
    if progress:
        fixtures = tqdm.tqdm(fixtures, desc='Verifying', file=sys.stderr,
                             ascii=bool(cfg.get('tqdm.ascii')))
    results = []
    for fixture in fixtures:
        results.extend(run_fixture(fixture, cfg))
    return results


def suite_passed(results):
    return all(r.status == PASS for r in results)

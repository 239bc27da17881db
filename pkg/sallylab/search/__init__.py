# -*- coding: utf-8 -*-

"""
Seeded random instances (Q, I) and sweeps over them, checking every
inequality and prediction that applies to each kept instance.

Instance `index` of a sweep with seed `seed` is drawn from numpy's PCG64
generator seeded with SeedSequence(seed, spawn_key=(index,)), so each
instance can be reproduced on its own and sweeps parallelize freely.
"""

import sys
from collections import Counter, namedtuple
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import numpy as np
import pandas as pd
import tqdm

from .. import config, __version__
from ..closures import is_reduction
from ..errors import (BudgetExceeded, InsufficientWindow, NegativeRank,
                      RangeViolation)
from ..ideals import MonomialIdeal, box_points
from ..sally import (analyze, check_hypotheses, check_inequalities,
                     verify_closed_form, m_value, violations)
from ..sally.checks import Check

GENERATOR = 'numpy PCG64, SeedSequence(seed, spawn_key=(index,))'

MODES = ('hypotheses', 'no_m_condition', 'all')

# checks that hold on every instance with a parameter reduction
UNIVERSAL_CHECKS = ('northcott', 'narita', 'sally_identity', 'huneke_ooishi',
                    'difference_is_e0', 'multiplicity')

# analysis settings handed to worker processes
ANALYSIS_KEYS = ('hilbert.window', 'hilbert.num_workers',
                 'closures.reduction_max', 'closures.ratliff_rush_max',
                 'colength.max_points')


class SearchConfig(namedtuple('SearchConfig',
                              ['dim', 'box', 'extra_gens', 'samples', 'seed',
                               'mode'])):
    """
    Parameters of a sweep: instances in `dim` variables with pure powers in
    Q of exponent 2..`box`, a number of extra generators of I drawn from the
    inclusive range `extra_gens`, `samples` instances in total, the `seed`
    and the filter `mode`.
    """
    __slots__ = ()

    def __new__(cls, dim=2, box=12, extra_gens=(1, 4), samples=1000, seed=1,
                mode='hypotheses'):
        extra_gens = config.parse_range(extra_gens) \
            if not isinstance(extra_gens, tuple) else extra_gens
        mode = str(mode).lower().replace('-', '_')
        if dim < 1:
            raise ValueError("search.dim must be positive, got %d" % dim)
        if box < 2:
            raise ValueError("search.box must be at least 2, got %d" % box)
        if extra_gens[0] < 0 or extra_gens[1] < extra_gens[0]:
            raise ValueError("Invalid search.extra_gens range %r" %
                             (extra_gens,))
        if samples < 0:
            raise ValueError("search.samples must be nonnegative, got %d" %
                             samples)
        if not 0 <= seed < 2**64:
            raise ValueError("search.seed must be a 64-bit unsigned integer, "
                             "got %d" % seed)
        if mode not in MODES:
            raise ValueError("search.mode must be one of %s, got %r" %
                             (', '.join(MODES), mode))
        return super(SearchConfig, cls).__new__(
                cls, int(dim), int(box), tuple(int(v) for v in extra_gens),
                int(samples), int(seed), mode)

    @classmethod
    def from_config(cls, cfg):
        """
        Builds a SearchConfig from the search.* keys of `cfg`, filling in
        the defaults of this package.
        """
        config.add_defaults(cfg, pyfile=__file__)
        return cls(dim=cfg['search.dim'], box=cfg['search.box'],
                   extra_gens=cfg['search.extra_gens'],
                   samples=cfg['search.samples'], seed=cfg['search.seed'],
                   mode=cfg['search.mode'])

    def as_dict(self):
        d = self._asdict()
        d['extra_gens'] = '%d:%d' % self.extra_gens
        return d


def instance_rng(seed, index):
    return np.random.Generator(np.random.PCG64(
            np.random.SeedSequence(seed, spawn_key=(index,))))


def integral_candidates(exponents):
    """
    Returns the exponent rows strictly inside the box spanned by the pure
    powers `exponents` that lie in the Newton polyhedron of Q, i.e. those
    with sum(a_i / q_i) >= 1. Monomials outside it are not integral over Q.
    """
    total = int(np.prod(exponents))
    points = box_points(exponents)
    return points[points @ (total // np.asarray(exponents)) >= total]


def random_instance(search_config, index):
    """
    Returns the instance (Q, I) number `index` of a sweep: Q is generated by
    pure powers with exponents in 2..box, I by Q and a random number of
    distinct monomials strictly inside the box spanned by Q and integral
    over Q, so that Q is always a reduction of I. Without such monomials
    (as in one variable) I equals Q.
    """
    rng = instance_rng(search_config.seed, index)
    d = search_config.dim
    exponents = rng.integers(2, search_config.box + 1, size=d)
    lo, hi = search_config.extra_gens
    k = int(rng.integers(lo, hi + 1))
    candidates = integral_candidates(exponents)
    chosen = rng.choice(len(candidates), size=min(k, len(candidates)),
                        replace=False)
    Q = MonomialIdeal(d, np.diag(exponents))
    I = MonomialIdeal(d, np.concatenate((Q.exponents, candidates[chosen])))
    return Q, I


def mode_checks(profile, mode):
    """
    Returns the checks a kept instance is held to in the given mode. The
    hypotheses mode adds the predictions of the classification. The other
    modes keep only the checks that hold for any parameter reduction, and
    no_m_condition adds the main inequality without its condition on mI^2.
    """
    checks = check_inequalities(profile)
    if mode == 'hypotheses':
        return checks + verify_closed_form(profile.classification, profile)
    checks = [c for c in checks if c.name in UNIVERSAL_CHECKS]
    if mode == 'no_m_condition' and profile.d >= 2:
        e = profile.e.e
        lhs, rhs = e[1], e[0] - profile.len_ai + e[2]
        checks.append(Check('main_inequality_without_m_condition', '>=',
                            lhs, rhs, lhs >= rhs, False))
    return checks


def keep_hypotheses(flags):
    return (flags.i3_equals_qi2 and flags.m_i2_in_qi and
            not flags.i2_equals_qi)


def keep_no_m_condition(flags):
    return flags.i3_equals_qi2 and not flags.m_i2_in_qi


def keep_all(flags):
    return True


def get_mode_filter(mode):
    """
    Returns the function deciding from the Hypotheses flags whether an
    instance is kept in the given mode.
    """
    return globals()['keep_' + mode]


Outcome = namedtuple('Outcome', ['index', 'status', 'reason', 'tag', 'key',
                                 'violation', 'heuristic_failures'])
Outcome.__doc__ = """
Result of one instance of a sweep. `status` is 'kept', 'filtered' or
'skipped' (with a `reason`); kept instances carry the classification `tag`,
the histogram `key` (rank, m, s_1, s_2), a `violation` record or None, and
the number of failed heuristic checks.
"""


def _instance_record(Q, I, profile=None):
    record = dict(Q=[list(g) for g in Q.gens], I=[list(g) for g in I.gens],
                  ideal=str(I))
    if profile is not None:
        record.update(e=list(profile.e.e), len_ai=profile.len_ai,
                      s=list(profile.s), rank=profile.rank,
                      postulation=profile.e.postulation)
    return record


def evaluate_instance(search_config, cfg, index):
    """
    Draws, filters and analyzes instance `index`, and returns its Outcome.
    Per-instance errors end up as skip reasons or violations.
    """
    Q, I = random_instance(search_config, index)
    if not is_reduction(Q, I):
        return Outcome(index, 'skipped', 'not_a_reduction', None, None, None,
                       0)
    flags = check_hypotheses(I, Q, with_closures=False,
                             max_points=int(cfg['colength.max_points']))
    if not get_mode_filter(search_config.mode)(flags):
        return Outcome(index, 'filtered', None, None, None, None, 0)
    try:
        profile = analyze(Q, I, cfg=cfg, with_closures='lemma')
    except InsufficientWindow:
        return Outcome(index, 'skipped', 'insufficient_window', None, None,
                       None, 0)
    except BudgetExceeded:
        return Outcome(index, 'skipped', 'budget_exceeded', None, None, None,
                       0)
    except (RangeViolation, NegativeRank) as exc:
        record = _instance_record(Q, I)
        record.update(index=index, failed=['%s: %s' %
                                           (type(exc).__name__, exc)])
        return Outcome(index, 'kept', None, 'ERROR', None, record, 0)

    checks = mode_checks(profile, search_config.mode)
    failed = violations(checks)
    heuristic_failures = sum(1 for c in checks
                             if c.heuristic and not c.holds)
    violation = None
    if failed:
        violation = _instance_record(Q, I, profile)
        violation.update(index=index, failed=[str(c) for c in failed])
    tag = (profile.classification.name if profile.classification
           else 'NO_TAG')
    key = (profile.rank, m_value(profile.e, profile.len_ai),
           profile.s_at(1), profile.s_at(2))
    return Outcome(index, 'kept', None, tag, key, violation,
                   heuristic_failures)


class SearchReport(namedtuple('SearchReport',
                              ['config', 'generator', 'version', 'instances',
                               'kept', 'filtered', 'skipped', 'counts',
                               'histogram', 'violations',
                               'heuristic_failures'])):
    """
    Aggregate of a sweep: the SearchConfig, the random generator and
    package version, the number of instances drawn, kept and filtered out,
    skip reasons with counts, instance counts per classification tag, the
    histogram of (rank, m, s_1, s_2) as sorted (key, count) pairs, the
    violation records in instance order and the number of failed heuristic
    checks.
    """
    __slots__ = ()

    @property
    def failed(self):
        """Whether a violation occurred in a mode where none may occur."""
        return bool(self.violations) and self.config.mode != 'no_m_condition'


def histogram(keys):
    """
    Counts (rank, m, s_1, s_2) keys, returned as a list of (key, count)
    pairs sorted by key.
    """
    if not keys:
        return []
    df = pd.DataFrame(list(keys), columns=['rank', 'm', 's1', 's2'])
    counts = df.groupby(['rank', 'm', 's1', 's2']).size().sort_index()
    return [(tuple(int(v) for v in key), int(count))
            for key, count in counts.items()]


def analysis_settings(cfg):
    """
    Reads the analysis settings from `cfg` into a plain dictionary that
    can be sent to worker processes.
    """
    return {k: cfg[k] for k in ANALYSIS_KEYS}


def sweep(search_config, cfg=None, num_workers=1, progress=False):
    """
    Evaluates instances 0..samples-1 of `search_config` and aggregates them
    into a SearchReport. With `num_workers` above one, instances are
    evaluated in a process pool; outcomes are collected in instance order
    either way, so the report does not depend on the number of workers.
    """
    if cfg is None:
        cfg = config.default_config()
    evaluate = partial(evaluate_instance, search_config,
                       analysis_settings(cfg))
    indices = range(search_config.samples)
    pool = None
    if num_workers > 1:
        pool = ProcessPoolExecutor(num_workers)
        outcomes = pool.map(evaluate, indices, chunksize=8)
    else:
        outcomes = map(evaluate, indices)
    if progress:
        outcomes = tqdm.tqdm(outcomes, total=search_config.samples,
                             desc='Sweeping', file=sys.stderr,
                             ascii=bool(cfg.get('tqdm.ascii')))
    kept = filtered = heuristic_failures = 0
    skipped = Counter()
    counts = Counter()
    keys = []
    found = []
    try:
        for outcome in outcomes:
            if outcome.status == 'skipped':
                skipped[outcome.reason] += 1
                continue
            if outcome.status == 'filtered':
                filtered += 1
                continue
            kept += 1
            counts[outcome.tag] += 1
            heuristic_failures += outcome.heuristic_failures
            if outcome.key is not None:
                keys.append(outcome.key)
            if outcome.violation is not None:
                found.append(outcome.violation)
            if progress:
                outcomes.set_postfix(kept=kept, violations=len(found),
                                     refresh=False)
    finally:
        if pool is not None:
            pool.shutdown()
    return SearchReport(search_config, GENERATOR, __version__,
                        search_config.samples, kept, filtered,
                        dict(sorted(skipped.items())),
                        dict(sorted(counts.items())), histogram(keys), found,
                        heuristic_failures)

# -*- coding: utf-8 -*-

"""
Reading and writing of KEY=VALUE configurations.
"""

import io
import os
import sys

THREADS_ENV = 'SALLYLAB_THREADS'


class TrackingDict(dict):
    """
    Dictionary that remembers which keys were read, so that settings which
    were given but never used (most likely misspelled) can be reported.
    """
    def __init__(self, *args, **kwargs):
        super(TrackingDict, self).__init__(*args, **kwargs)
        self.keys_read = set()

    def __getitem__(self, key):
        self.keys_read.add(key)
        return dict.__getitem__(self, key)

    def get(self, key, *args, **kwargs):
        self.keys_read.add(key)
        return dict.get(self, key, *args, **kwargs)

    @property
    def keys_not_read(self):
        return set(self.keys()) - self.keys_read


def parse_value(value):
    """
    Converts `value` to an int or float if possible, otherwise leaves a str.
    """
    for convert in (int, float):
        try:
            return convert(value)
        except ValueError:
            continue
    return value


def parse_range(value):
    """
    Parses an inclusive `LO:HI` range (or a single integer) into a tuple.
    """
    if isinstance(value, int):
        return value, value
    lo, _, hi = str(value).partition(':')
    lo = int(lo)
    hi = int(hi) if hi else lo
    if hi < lo:
        raise ValueError("Empty range %r" % value)
    return lo, hi


def parse_variable_assignments(assignments):
    """
    Parses a list of KEY=VALUE strings into a TrackingDict.
    """
    variables = TrackingDict()
    for assignment in assignments or ():
        try:
            key, value = assignment.split('=', 1)
        except ValueError:
            raise ValueError("Expected KEY=VALUE, got %r" % assignment)
        variables[key.strip()] = parse_value(value.strip())
    return variables


def parse_config_file(filename):
    """
    Parses a file of KEY=VALUE lines. Empty lines and lines starting with '#'
    are ignored.
    """
    with io.open(filename, 'r') as f:
        return parse_variable_assignments(
                [l.rstrip('\r\n') for l in f
                 if l.strip() and not l.lstrip().startswith('#')])


def write_config_file(filename, cfg):
    """
    Writes a configuration in a form understood by parse_config_file().
    Keys are sorted alphabetically.
    """
    with io.open(filename, 'w') as f:
        f.writelines("%s=%s\n" % (key, dict.__getitem__(cfg, key))
                     for key in sorted(cfg))


def prepare_argument_parser(parser):
    """
    Adds --vars and --var arguments to an ArgumentParser instance.
    """
    parser.add_argument('--vars', metavar='FILE',
            action='append', type=str,
            default=[os.path.join(os.path.dirname(__file__), 'defaults.vars')],
            help='File of KEY=VALUE settings, read after the package '
                 'defaults. Repeatable; later files take precedence.')
    parser.add_argument('--var', metavar='KEY=VALUE',
            action='append', type=str,
            help='Sets a single setting, taking precedence over --vars '
                 'files. Repeatable.')


def from_parsed_arguments(options):
    """
    Builds a configuration from the --vars files and --var settings of an
    ArgumentParser namespace.
    """
    cfg = TrackingDict()
    for fn in options.vars:
        cfg.update(parse_config_file(fn))
    cfg.update(parse_variable_assignments(options.var))
    return cfg


def default_config():
    """
    Returns the package defaults, for library use without a command line.
    """
    return parse_config_file(
            os.path.join(os.path.dirname(__file__), 'defaults.vars'))


def add_defaults(cfg, filename='defaults.vars', pyfile=None):
    """
    Adds all settings of a configuration file that are not defined in `cfg`
    yet. With `pyfile`, the file name is relative to that Python module.
    """
    if pyfile is not None:
        filename = os.path.join(os.path.dirname(pyfile), filename)
    for k, v in parse_config_file(filename).items():
        if k not in cfg:
            cfg[k] = v


def override(cfg, **settings):
    """
    Sets dotted keys given as keyword arguments with '__' in place of '.',
    skipping values that are None (flags that were not given).
    """
    for key, value in settings.items():
        if value is not None:
            cfg[key.replace('__', '.')] = value
    return cfg


def num_workers(cfg, key):
    """
    Returns the worker count configured under `key`, capped by the
    SALLYLAB_THREADS environment variable.
    """
    workers = max(1, int(cfg.get(key, 1) or 1))
    cap = os.environ.get(THREADS_ENV)
    if cap:
        workers = min(workers, max(1, int(cap)))
    return workers


def warn_unused_variables(cfg, expected=()):
    """
    Prints a warning about configuration variables that have never been read.
    """
    unused = cfg.keys_not_read - set(expected)
    if unused:
        print("Warning: configuration variables never read, check their "
              "spelling: " +
              ", ".join(sorted(unused)), file=sys.stderr)

# -*- coding: utf-8 -*-

"""
Ideal specifications: the JSON format naming a parameter ideal Q and the
extra generators of I = Q + (extra), e.g.

    {"dim": 2, "Q": [[7, 0], [0, 7]],
     "extra": [[1, 6], [2, 5], [4, 3], [5, 2]], "label": "ex-3.8-1"}

Variables are positional. Instead of an exponent vector, a monomial may be
given as a string such as "x^2*y^3".
"""

import io
import json
import re
from collections import namedtuple

from .errors import ParseError, ValidationError
from .ideals import MAX_EXPONENT, Monomial, MonomialIdeal, is_parameter_ideal
from .ideals.monomials import variable_names

FACTOR = re.compile(r'\s*([a-z][0-9]*)\s*(?:\^\s*([0-9]+))?\s*(\*|$)')


class IdealSpec(namedtuple('IdealSpec', ['dim', 'Q', 'extra', 'label'])):
    """
    A parsed specification: `Q` and `extra` are tuples of exponent tuples,
    `label` is a str or None.
    """
    __slots__ = ()

    def __new__(cls, dim, Q, extra=(), label=None):
        return super(IdealSpec, cls).__new__(
                cls, dim, tuple(tuple(g) for g in Q),
                tuple(tuple(g) for g in extra), label)

    @property
    def name(self):
        return self.label or render_ideal(self)

    def ideals(self):
        """Returns the pair (Q, I) of MonomialIdeals."""
        return spec_ideals(self)


def parse_monomial(text, dim, field=None):
    """
    Parses a product of variable powers such as "x^2*y^3" or "x1*x3^2" into
    an exponent tuple. "1" is the unit monomial.
    """
    names = variable_names(dim)
    exponents = [0] * dim
    if not text.strip():
        raise ParseError("Empty monomial", field=field)
    if text.strip() == '1':
        return tuple(exponents)
    pos = 0
    while pos < len(text):
        match = FACTOR.match(text, pos)
        if not match:
            raise ParseError("Cannot parse monomial %r at position %d" %
                             (text, pos), column=pos + 1, field=field)
        name, power, sep = match.groups()
        if name not in names:
            raise ParseError("Unknown variable %r in %r; variables are %s" %
                             (name, text, ', '.join(names)),
                             column=match.start(1) + 1, field=field)
        exponents[names.index(name)] += int(power) if power else 1
        pos = match.end()
        if sep and pos == len(text):
            raise ParseError("Monomial %r ends with '*'" % text,
                             column=pos, field=field)
    return tuple(exponents)


def _parse_exponents(entry, dim, field):
    if isinstance(entry, str):
        exponents = parse_monomial(entry, dim, field)
    elif not isinstance(entry, list) or not all(
            isinstance(e, int) and not isinstance(e, bool) for e in entry):
        raise ParseError("%s must be a list of integers or a monomial "
                         "string, got %s" % (field, json.dumps(entry)),
                         field=field)
    elif len(entry) != dim:
        raise ValidationError("%s has %d exponents, but dim is %d" %
                              (field, len(entry), dim))
    else:
        exponents = tuple(entry)
    if any(e < 0 for e in exponents):
        raise ValidationError("%s has a negative exponent: %r" %
                              (field, list(exponents)))
    if any(e > MAX_EXPONENT for e in exponents):
        raise ValidationError("%s has an exponent above %d: %r" %
                              (field, MAX_EXPONENT, list(exponents)))
    return exponents


def parse_spec(text):
    """
    Parses and validates an ideal specification given as JSON text. Raises
    ParseError for malformed input, with line and column for JSON syntax
    errors and the offending field otherwise, and ValidationError for
    well-formed input describing an invalid instance.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("Invalid JSON: %s" % exc.msg, line=exc.lineno,
                         column=exc.colno)
    if not isinstance(data, dict):
        raise ParseError("Expected a JSON object, got %s" %
                         type(data).__name__)
    unknown = set(data) - {'dim', 'Q', 'extra', 'label'}
    if unknown:
        raise ParseError("Unknown fields: %s" % ', '.join(sorted(unknown)),
                         field=sorted(unknown)[0])
    for key in ('dim', 'Q'):
        if key not in data:
            raise ParseError("Missing field %r" % key, field=key)
    dim = data['dim']
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ParseError("dim must be an integer, got %s" % json.dumps(dim),
                         field='dim')
    if dim < 1:
        raise ValidationError("dim must be positive, got %d" % dim)
    gens = {}
    for key in ('Q', 'extra'):
        entries = data.get(key, [])
        if not isinstance(entries, list):
            raise ParseError("%s must be a list, got %s" %
                             (key, json.dumps(entries)), field=key)
        gens[key] = [_parse_exponents(entry, dim, '%s[%d]' % (key, i))
                     for i, entry in enumerate(entries)]
    label = data.get('label')
    if label is not None and not isinstance(label, str):
        raise ParseError("label must be a string, got %s" % json.dumps(label),
                         field='label')
    if not is_parameter_ideal(MonomialIdeal(dim, gens['Q'])) or \
            len(gens['Q']) != dim:
        raise ValidationError("Q must consist of pure powers of each of the "
                              "%d variables, got %r" % (dim, gens['Q']))
    return IdealSpec(dim, gens['Q'], gens['extra'], label)


def read_spec(filename):
    """Parses the specification stored in a file."""
    with io.open(filename, 'r') as f:
        return parse_spec(f.read())


def render_spec(spec):
    """
    Renders an IdealSpec as JSON text understood by parse_spec().
    """
    data = dict(dim=spec.dim, Q=[list(g) for g in spec.Q],
                extra=[list(g) for g in spec.extra])
    if spec.label is not None:
        data['label'] = spec.label
    return json.dumps(data)


def render_ideal(spec):
    """The ideal I = Q + (extra) in monomial notation."""
    return str(spec_ideals(spec)[1])


def spec_ideals(spec):
    """
    Returns (Q, I) for an IdealSpec, I being generated by Q and the extra
    generators.
    """
    Q = MonomialIdeal(spec.dim, [Monomial(g) for g in spec.Q])
    I = MonomialIdeal(spec.dim, [Monomial(g) for g in spec.Q + spec.extra])
    return Q, I

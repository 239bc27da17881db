# -*- coding: utf-8 -*-

import pytest
from hypothesis import given, strategies as st

from sallylab.errors import ParseError, ValidationError
from sallylab.fixtures import get_fixture
from sallylab.specs import (IdealSpec, parse_monomial, parse_spec,
                            render_spec, spec_ideals)

EXAMPLE = ('{"dim":2, "Q":[[7,0],[0,7]], '
           '"extra":[[1,6],[2,5],[4,3],[5,2]], "label":"ex-3.8-1"}')


def test_documented_example():
    spec = parse_spec(EXAMPLE)
    assert spec.dim == 2
    assert spec.Q == ((7, 0), (0, 7))
    assert spec.extra == ((1, 6), (2, 5), (4, 3), (5, 2))
    assert spec.label == 'ex-3.8-1'
    assert spec == get_fixture('ex-3.8-1').spec


def test_no_extra_generators():
    Q, I = spec_ideals(parse_spec('{"dim":2,"Q":[[5,0],[0,5]],"extra":[]}'))
    assert I == Q
    spec = parse_spec('{"dim":2,"Q":[[5,0],[0,5]]}')
    assert spec.extra == () and spec.label is None


def test_monomial_strings():
    spec = parse_spec('{"dim": 2, "Q": ["x^5", "y^5"], '
                      '"extra": ["x^2*y^3", "x^3 * y^2"]}')
    assert spec.Q == ((5, 0), (0, 5))
    assert spec.extra == ((2, 3), (3, 2))


@pytest.mark.parametrize('text', [
    '{"dim":2,"Q":[[5,0],[0,-1]]}',
    '{"dim":2,"Q":[[5,0],[0,5]],"extra":[[1,-1]]}',
    '{"dim":2,"Q":[[5,0],[1,5]]}',
    '{"dim":2,"Q":[[5,0]]}',
    '{"dim":2,"Q":[[5,0],[5,0]]}',
    '{"dim":2,"Q":[[5,0],[0,5]],"extra":[[1,2,3]]}',
    '{"dim":0,"Q":[]}',
    '{"dim":2,"Q":[[2199023255553,0],[0,5]]}',
    '{"dim":2,"Q":[[5,0],[0,5]],"extra":["x^2199023255553"]}',
])
def test_validation_errors(text):
    with pytest.raises(ValidationError):
        parse_spec(text)


def test_json_syntax_error():
    with pytest.raises(ParseError) as excinfo:
        parse_spec('{\n  "dim": 2,\n  "Q": [[5, 0], [0, 5]],,\n}')
    assert excinfo.value.line == 3
    assert excinfo.value.column is not None


@pytest.mark.parametrize('text,field', [
    ('{"dim":"2","Q":[]}', 'dim'),
    ('{"dim":2,"Q":[[1,"a"],[0,1]]}', 'Q[0]'),
    ('{"dim":2,"Q":[[1,0],[0,1]],"extra":{}}', 'extra'),
    ('{"dim":2}', 'Q'),
    ('{"dim":2,"Q":[[1,0],[0,1]],"colour":1}', 'colour'),
    ('{"dim":2,"Q":[[1,0],[0,1]],"label":3}', 'label'),
    ('{"dim":2,"Q":["x^","y"]}', 'Q[0]'),
])
def test_field_errors(text, field):
    with pytest.raises(ParseError) as excinfo:
        parse_spec(text)
    assert excinfo.value.field == field


def test_parse_monomial():
    assert parse_monomial('x^2*y^3', 2) == (2, 3)
    assert parse_monomial('x*y*x', 2) == (2, 1)
    assert parse_monomial('1', 3) == (0, 0, 0)
    assert parse_monomial('x1^2*x3', 5) == (2, 0, 1, 0, 0)
    for text in ('', 'q', 'x*', 'x^', 'x^2y', 'x1'):
        with pytest.raises(ParseError):
            parse_monomial(text, 2)


@given(st.integers(1, 4).flatmap(lambda d: st.tuples(
        st.just(d),
        st.lists(st.integers(1, 9), min_size=d, max_size=d),
        st.lists(st.tuples(*[st.integers(0, 9)] * d), max_size=4),
        st.none() | st.text(max_size=8))))
def test_render_parses_back(args):
    d, powers, extra, label = args
    Q = [tuple(a if j == i else 0 for j in range(d))
         for i, a in enumerate(powers)]
    spec = IdealSpec(d, Q, extra, label)
    assert parse_spec(render_spec(spec)) == spec

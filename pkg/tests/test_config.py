# -*- coding: utf-8 -*-

import pytest

from sallylab import config


def test_parse_value():
    assert config.parse_value('3') == 3
    assert config.parse_value('0.5') == 0.5
    assert config.parse_value('all') == 'all'
    assert config.parse_value('1:4') == '1:4'


def test_parse_range():
    assert config.parse_range('1:4') == (1, 4)
    assert config.parse_range('3') == (3, 3)
    assert config.parse_range(2) == (2, 2)
    with pytest.raises(ValueError):
        config.parse_range('4:1')


def test_tracking_dict():
    cfg = config.TrackingDict(a=1, b=2, c=3)
    assert cfg['a'] == 1
    assert cfg.get('b') == 2
    assert cfg.keys_not_read == {'c'}


def test_assignments():
    cfg = config.parse_variable_assignments(['search.box = 7', 'x=a=b'])
    assert cfg == {'search.box': 7, 'x': 'a=b'}
    with pytest.raises(ValueError):
        config.parse_variable_assignments(['nonsense'])


def test_file_round_trip(tmp_path):
    filename = str(tmp_path / 'settings.vars')
    cfg = config.default_config()
    config.override(cfg, hilbert__window=12, search__mode=None)
    assert 'search.mode' not in cfg
    config.write_config_file(filename, cfg)
    assert config.parse_config_file(filename) == cfg
    assert not config.parse_config_file(filename).keys_read


def test_comments_ignored(tmp_path):
    filename = tmp_path / 'settings.vars'
    filename.write_text('# a comment\n\nhilbert.window=5\n')
    assert config.parse_config_file(str(filename)) == {'hilbert.window': 5}


def test_add_defaults():
    cfg = config.TrackingDict({'search.box': 5})
    config.add_defaults(cfg, pyfile=config.__file__)
    assert cfg['search.box'] == 5
    assert cfg['hilbert.window'] == 0


def test_num_workers(monkeypatch):
    cfg = {'hilbert.num_workers': 8}
    monkeypatch.delenv(config.THREADS_ENV, raising=False)
    assert config.num_workers(cfg, 'hilbert.num_workers') == 8
    assert config.num_workers(cfg, 'search.num_workers') == 1
    monkeypatch.setenv(config.THREADS_ENV, '2')
    assert config.num_workers(cfg, 'hilbert.num_workers') == 2


def test_warn_unused_variables(capsys):
    cfg = config.TrackingDict({'used': 1, 'expected': 2, 'typo': 3})
    cfg['used']
    config.warn_unused_variables(cfg, expected={'expected'})
    _, err = capsys.readouterr()
    assert 'typo' in err and 'expected' not in err.split(':')[-1]

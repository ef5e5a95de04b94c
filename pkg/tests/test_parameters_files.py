# -*- coding: utf-8 -*-
"""
Tests of utils/parameters_files.py and utils/newick_data.py
"""


import io
import os

import pytest

from utils import newick_data
from utils import parameters_files
from utils.errors import InputError, InstanceError, NewickError, ParameterFileError
from utils.extremal import gen_caterpillar, gen_random


def test_split_param_path():
    assert parameters_files.split_param_path('runs/count') == ('runs', 'count', '.PARAM')
    assert parameters_files.split_param_path('count.PARAM') == ('.', 'count', '.PARAM')
    assert parameters_files.split_param_path('runs/count.pkl') == ('runs', 'count', '.pkl')
    with pytest.raises(ParameterFileError):
        parameters_files.split_param_path('runs/')


def test_save_then_upload(tmp_path):
    dic = {'analysis': 'count', 'tree_file_count': 'trees.nwk', 'k_count': 3}
    name = parameters_files.save_param_file(dic, str(tmp_path), 'count')
    assert name == os.path.join(str(tmp_path), 'count.PARAM')
    assert parameters_files.upload_param_file(str(tmp_path), 'count') == dic


def test_upload_errors(tmp_path):
    with pytest.raises(ParameterFileError, match='not found'):
        parameters_files.upload_param_file(str(tmp_path), 'missing')
    (tmp_path / 'broken.PARAM').write_bytes(b'not a pickle')
    with pytest.raises(ParameterFileError):
        parameters_files.upload_param_file(str(tmp_path), 'broken')
    parameters_files.save_param_file([1, 2], str(tmp_path), 'listed')
    with pytest.raises(ParameterFileError, match='dictionnary'):
        parameters_files.upload_param_file(str(tmp_path), 'listed')


def test_save_into_missing_directory(tmp_path):
    with pytest.raises(ParameterFileError):
        parameters_files.save_param_file({}, str(tmp_path / 'nowhere'), 'count')


# ======================================================================== #
# Newick and instance files                                                 #
# ======================================================================== #


def test_newick_file_skips_comments_and_blank_lines(tmp_path):
    path = tmp_path / 'trees.nwk'
    path.write_text('# two trees\n\n(a,(b,c));\n\n((a,b),(c,d));\n')
    trees = newick_data.read_newick_file(str(path))
    assert [line for line, _ in trees] == [3, 5]
    assert [t.n for _, t in trees] == [3, 4]


def test_newick_file_reports_the_line(tmp_path):
    path = tmp_path / 'trees.nwk'
    path.write_text('(a,(b,c));\n((a,b),,c);\n')
    with pytest.raises(NewickError) as info:
        newick_data.read_newick_file(str(path))
    assert info.value.line == 2
    assert info.value.column == 8
    assert 'line 2' in str(info.value)


def test_newick_file_errors(tmp_path):
    with pytest.raises(InputError, match='not found'):
        newick_data.read_newick_file(str(tmp_path / 'missing.nwk'))
    path = tmp_path / 'empty.nwk'
    path.write_text('# nothing here\n')
    with pytest.raises(InputError, match='no tree'):
        newick_data.read_newick_file(str(path))


def test_newick_file_from_stdin(monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO('(a,(b,(c,d)));\n'))
    ((line, tree),) = newick_data.read_newick_file('-')
    assert line == 1
    assert tree == gen_caterpillar(4)


def test_write_then_read(tmp_path):
    trees = [gen_random(n, n) for n in range(3, 9)]
    path = str(tmp_path / 'out.nwk')
    newick_data.write_newick_file(trees, path)
    assert [t for _, t in newick_data.read_newick_file(path)] == trees


def test_instance_file(tmp_path, data_dir):
    data = newick_data.read_instance_file(os.path.join(data_dir, 'instances', 'quartet.json'))
    assert data['mode'] == 'quartet_exact_partition'
    path = tmp_path / 'bad.json'
    path.write_text('{"mode": ')
    with pytest.raises(InstanceError, match='not valid JSON'):
        newick_data.read_instance_file(str(path))
    path.write_text('[1, 2]')
    with pytest.raises(InstanceError, match='JSON object'):
        newick_data.read_instance_file(str(path))

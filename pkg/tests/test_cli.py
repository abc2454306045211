# Copyright © 2015-2018 STRG.AT GmbH, Vienna, Austria
#
# This file is part of the The SCORE Framework.
#
# The SCORE Framework and all its parts are free software: you can redistribute
# them and/or modify them under the terms of the GNU Lesser General Public
# License version 3 as published by the Free Software Foundation which is in the
# file named COPYING.LESSER.txt.
#
# The SCORE Framework and all its parts are distributed without any WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
# PARTICULAR PURPOSE. For more details see the GNU Lesser General Public
# License.
#
# If you have not received a copy of the GNU Lesser General Public License see
# http://www.gnu.org/licenses/.
#
# The License-Agreement realised between you as Licensee and STRG.AT GmbH as
# Licenser including the issue of its valid conclusion and its pre- and
# post-contractual effects is governed by the laws of Austria. Any disputes
# concerning this License-Agreement including the issue of its valid conclusion
# and its pre- and post-contractual effects are exclusively decided by the
# competent court, in whose district STRG.AT GmbH has its registered seat, at
# the discretion of STRG.AT GmbH also the competent court, in whose district the
# Licensee has his registered seat, an establishment or assets.

import json
import pytest
from score.ainf import ConfiguredAinfModule
from score.ainf._exceptions import MaurerCartanViolation
from score.ainf.cli import main


@pytest.fixture
def write_fixture(runner, tmpdir):
    def write(name, *options):
        path = str(tmpdir.join('%s.json' % name))
        result = runner.invoke(main, ['fixture', name, path] + list(options))
        assert result.exit_code == 0, result.output
        return path
    return write


def test_validate_passes(runner, write_fixture):
    path = write_fixture('ground-ring')
    result = runner.invoke(main, ['validate', path])
    assert result.exit_code == 0, result.output
    assert result.output.rstrip().endswith('verdict: pass')
    assert 'input: sha256:' in result.output


def test_fixture_to_stdout(runner):
    result = runner.invoke(main, ['fixture', 'dual-numbers'])
    assert result.exit_code == 0
    assert json.loads(result.output)['ring'] == 'Z'


def test_negated_coefficient_fails(runner, write_fixture):
    path = write_fixture('dual-numbers')
    with open(path) as file:
        doc = json.load(file)
    for term in doc['mu']['2']:
        if term[0] == ['K>K:e', 'K>K:eps']:
            term[2] = -term[2]
    with open(path, 'w') as file:
        json.dump(doc, file)
    result = runner.invoke(main, ['validate', path])
    assert result.exit_code == 1
    assert 'witness' in result.output
    assert 'verdict: fail' in result.output


def test_undeclared_generator_is_an_input_error(runner, write_fixture):
    path = write_fixture('dual-numbers')
    with open(path) as file:
        doc = json.load(file)
    doc['mu']['2'][0][1] = 'K>K:nope'
    with open(path, 'w') as file:
        json.dump(doc, file)
    result = runner.invoke(main, ['validate', path])
    assert result.exit_code == 2
    assert '$.mu.2[0][1]' in result.output


def test_missing_file(runner, tmpdir):
    result = runner.invoke(main, ['validate', str(tmpdir.join('nope.json'))])
    assert result.exit_code == 2


def test_hochschild_json(runner, write_fixture):
    path = write_fixture('ground-ring')
    result = runner.invoke(main, ['hh', '--json', path])
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data['command'] == 'hh'
    assert data['results']['groups'] == {'0': 'Z', '-1': '0', '-2': '0'}
    assert all(data['results']['stable'].values())


def test_generate_ground_ring(runner, write_fixture):
    path = write_fixture('ground-ring')
    result = runner.invoke(main, ['generate', '--json', path])
    assert result.exit_code == 0, result.output
    certificate = json.loads(result.output)['results']['certificate']
    assert certificate['verdict'] == 'generated'
    assert certificate['tau'] == [[['K>K:e', 'K>K:e'], 1]]
    assert certificate['unit'] == [['K>K:e', 1]]


def test_generate_zero_subcategory(runner, write_fixture):
    path = write_fixture('zero-subcategory')
    result = runner.invoke(main, ['generate', path])
    assert result.exit_code == 1
    assert 'verdict: inconclusive' in result.output


def test_generate_scaled_pair(runner, write_fixture):
    path = write_fixture('scaled-pair')
    result = runner.invoke(main, ['generate', path])
    assert result.exit_code == 1
    assert 'refuted-at-bound' in result.output


def test_cardy(runner, write_fixture):
    path = write_fixture('coproduct-pair', '--n', '1')
    result = runner.invoke(main, ['cardy', path])
    assert result.exit_code == 0, result.output
    assert 'homotopy: solved' in result.output


def test_cardy_torsion(runner, write_fixture):
    path = write_fixture('torsion')
    result = runner.invoke(main, ['cardy', path])
    assert result.exit_code == 1
    assert 'rational-only' in result.output


def test_cardy_without_coproduct(runner, write_fixture):
    path = write_fixture('dual-numbers')
    result = runner.invoke(main, ['cardy', path])
    assert result.exit_code == 2


def test_strata(runner):
    result = runner.invoke(main, ['strata', '--json', 'R_4'])
    assert result.exit_code == 0, result.output
    assert len(json.loads(result.output)['results']['strata']) == 5


def test_unknown_space(runner):
    result = runner.invoke(main, ['strata', 'Q_1'])
    assert result.exit_code == 2


def test_bad_degree_range(runner, write_fixture):
    path = write_fixture('ground-ring')
    result = runner.invoke(main, ['hh', '--degrees', 'x', path])
    assert result.exit_code == 2


def test_threads_do_not_change_the_output(runner, write_fixture):
    path = write_fixture('mu3')
    single = runner.invoke(main, ['validate', '--json', path])
    threaded = runner.invoke(main, ['validate', '--json', path],
                             env={'AINF_THREADS': '4'})
    assert single.exit_code == threaded.exit_code
    assert single.output == threaded.output


def test_bad_thread_count(runner, write_fixture):
    path = write_fixture('ground-ring')
    result = runner.invoke(main, ['validate', path],
                           env={'AINF_THREADS': 'many'})
    assert result.exit_code == 2


def test_timing(runner, write_fixture):
    path = write_fixture('ground-ring')
    plain = runner.invoke(main, ['validate', path])
    timed = runner.invoke(main, ['validate', '--timing', path])
    assert 'timing:' not in plain.output
    assert 'timing:' in timed.output


def test_reports_are_reproducible(runner, write_fixture):
    path = write_fixture('split-summand')
    first = runner.invoke(main, ['generate', '--json', path])
    second = runner.invoke(main, ['generate', '--json', path])
    assert first.output == second.output


def test_certificate_replays_in_a_separate_run(runner, write_fixture, tmpdir):
    path = write_fixture('split-summand')
    certificate = str(tmpdir.join('certificate.json'))
    result = runner.invoke(main, ['generate', '--certificate', certificate,
                                  path])
    assert result.exit_code == 0, result.output
    with open(certificate) as file:
        doc = json.load(file)
    assert doc['verdict'] == 'generated'
    assert doc['tau'] == [[['K>L:i', 'L>K:pi'], 1]]
    result = runner.invoke(main, ['replay', path, certificate])
    assert result.exit_code == 0, result.output
    assert result.output.rstrip().endswith('verdict: pass')


def test_tampered_certificate_fails_to_replay(runner, write_fixture, tmpdir):
    path = write_fixture('split-summand')
    certificate = str(tmpdir.join('certificate.json'))
    runner.invoke(main, ['generate', '--certificate', certificate, path])
    with open(certificate) as file:
        doc = json.load(file)
    doc['tau'][0][1] = 2
    with open(certificate, 'w') as file:
        json.dump(doc, file)
    result = runner.invoke(main, ['replay', '--json', path, certificate])
    assert result.exit_code == 1
    report = json.loads(result.output)
    assert report['verdict'] == 'fail'
    assert report['sections'][0]['check'] == 'replay'
    assert report['sections'][0]['failures']


def test_certificate_with_an_undeclared_generator(runner, write_fixture,
                                                  tmpdir):
    path = write_fixture('split-summand')
    certificate = str(tmpdir.join('certificate.json'))
    runner.invoke(main, ['generate', '--certificate', certificate, path])
    with open(certificate) as file:
        doc = json.load(file)
    doc['tau'][0][0][1] = 'L>K:rho'
    with open(certificate, 'w') as file:
        json.dump(doc, file)
    result = runner.invoke(main, ['replay', path, certificate])
    assert result.exit_code == 2
    assert '$.tau[0][0][1]' in result.output


def test_computation_errors_are_reported(runner, write_fixture, monkeypatch):
    path = write_fixture('ground-ring')

    def broken(self, document, **kwargs):
        raise MaurerCartanViolation('Twisted complex violates the '
                                    'Maurer-Cartan equation')

    monkeypatch.setattr(ConfiguredAinfModule, 'generate', broken)
    result = runner.invoke(main, ['generate', path])
    assert result.exit_code == 1
    assert isinstance(result.exception, SystemExit)
    assert 'MaurerCartanViolation' in result.output

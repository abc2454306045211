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
import score.ainf
from score.ainf import fixtures
from score.ainf._exceptions import SchemaError
from score.ainf._report import Report, VerificationReport, Violation
from score.ainf.fileformat import CategoryFile


def test_defaults():
    conf = score.ainf.init({})
    assert conf.max_length == 3
    assert conf.degrees is None
    assert conf.ring is None
    assert conf.workers == 1
    assert conf.timing is False


def test_string_values():
    conf = score.ainf.init({
        'max_length': '2',
        'timing': 'true',
        'degrees': '-1..0',
        'ring': 'F2',
    })
    assert conf.max_length == 2
    assert conf.timing is True
    assert conf.degrees == (-1, 0)
    assert conf.ring == 'F2'


def test_invalid_ring():
    with pytest.raises(ValueError):
        score.ainf.init({'ring': 'Q'})


@pytest.mark.parametrize('text, degrees', [
    (None, None),
    ('3', (3,)),
    ('-2..0', (-2, -1, 0)),
    (' 1 .. 2 ', (1, 2)),
    ([0, 1], (0, 1)),
])
def test_parse_degrees(text, degrees):
    assert score.ainf.parse_degrees(text) == degrees


@pytest.mark.parametrize('text', ['x', '1..', '2..1', '1,2'])
def test_parse_degrees_rejects(text):
    with pytest.raises(ValueError):
        score.ainf.parse_degrees(text)


def test_validate_ground_ring():
    conf = score.ainf.init({})
    report = conf.validate(fixtures.fixture_file('ground-ring'))
    assert report.verdict == 'pass'
    checks = [section.check for section in report.sections]
    assert 'cohomological-unit' in checks
    assert checks.count('chain-map') == 2


def test_hochschild_of_the_ground_ring():
    conf = score.ainf.init({})
    report = conf.hochschild(fixtures.fixture_file('ground-ring'))
    assert report.verdict == 'pass'
    assert report.results['groups'] == {'0': 'Z', '-1': '0', '-2': '0'}
    assert all(report.results['stable'].values())


def test_hochschild_degree_selection():
    conf = score.ainf.init({'degrees': '0'})
    report = conf.hochschild(fixtures.fixture_file('ground-ring'))
    assert report.results['groups'] == {'0': 'Z'}


def test_generate_split_summand():
    conf = score.ainf.init({'max_length': 1})
    report = conf.generate(fixtures.fixture_file('split-summand'))
    assert report.verdict == 'generated'
    assert report.sections[0].passed
    assert report.results['certificate']['tau'] == \
        [[['K>L:i', 'L>K:pi'], 1]]


def test_generate_zero_subcategory():
    conf = score.ainf.init({})
    report = conf.generate(fixtures.fixture_file('zero-subcategory'))
    assert report.verdict == 'inconclusive'
    assert report.sections == []


def test_replay_a_written_certificate(tmpdir):
    conf = score.ainf.init({'max_length': 1})
    document = fixtures.fixture_file('split-summand')
    path = str(tmpdir.join('certificate.json'))
    conf.generate(document, path)
    report = conf.replay(document, path)
    assert report.verdict == 'pass'
    assert report.sections[0].check == 'replay'
    assert report.results['certificate']['summands'] == 0


def test_only_generated_certificates_replay(tmpdir):
    conf = score.ainf.init({})
    document = fixtures.fixture_file('zero-subcategory')
    path = str(tmpdir.join('certificate.json'))
    conf.generate(document, path)
    with pytest.raises(SchemaError) as excinfo:
        conf.replay(document, path)
    assert excinfo.value.path == '$.verdict'


def test_generate_needs_an_object(ground):
    conf = score.ainf.init({})
    with pytest.raises(SchemaError):
        conf.generate(CategoryFile(ground))


def test_cardy_coproduct_pair():
    conf = score.ainf.init({})
    report = conf.cardy(fixtures.fixture_file('coproduct-pair', n=1))
    assert report.verdict == 'pass'
    assert report.results['homotopy'] == 'solved'


def test_cardy_torsion():
    conf = score.ainf.init({'max_length': 1})
    report = conf.cardy(fixtures.fixture_file('torsion'))
    assert report.verdict == 'fail'
    assert report.results['homotopy'] == 'rational-only'


def test_cardy_needs_a_coproduct(dual):
    conf = score.ainf.init({})
    with pytest.raises(SchemaError):
        conf.cardy(CategoryFile(dual, K='K'))


def test_strata():
    conf = score.ainf.init({})
    report = conf.strata('R_4')
    assert report.verdict == 'pass'
    assert len(report.results['strata']) == 5
    assert report.results['dimension'] == 2


def test_timing_is_opt_in():
    document = fixtures.fixture_file('dual-numbers')
    assert score.ainf.init({}).validate(document).timing is None
    timed = score.ainf.init({'timing': True}).validate(document)
    assert timed.timing >= 0
    assert 'timing:' in timed.to_text()


def test_report_rendering():
    section = VerificationReport('ainf', [Violation('w', 'r')], checked=3,
                                 details={'arity': 2})
    report = Report('validate', 'abc', 'fail', [section],
                    {'groups': {'0': 'Z'}})
    text = report.to_text()
    assert text.splitlines() == [
        'command: validate',
        'input: sha256:abc',
        'ainf: FAIL (3 checked)',
        '  witness w -> r',
        '  arity: 2',
        'groups:',
        '  0: Z',
        'verdict: fail',
    ]
    data = json.loads(report.to_json())
    assert data['sections'][0]['failures'] == [{'witness': 'w',
                                                'residual': 'r'}]
    assert 'timing' not in data


def test_combined_reports():
    first = VerificationReport('a', [], checked=2)
    second = VerificationReport('b', [Violation('x', 'y')], checked=1)
    combined = VerificationReport.combine('both', [first, second])
    assert combined.checked == 3
    assert not combined
    assert combined.failures == [Violation('x', 'y')]

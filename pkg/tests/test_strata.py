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

import pytest
from score.ainf._exceptions import InvalidSpace, UnknownSignTag
from score.ainf.strata import (
    SpaceId, STRIP_BREAKING, parse_space, dimension, enumerate_codim1,
    facet_count, factor_dimensions_consistent, strata_term_bijection,
    sign_formula, SIGN_TAGS)


@pytest.mark.parametrize('d, count', [(2, 0), (3, 2), (4, 5), (5, 9)])
def test_disc_facets(d, count):
    space = SpaceId.disc(d)
    assert len(enumerate_codim1(space)) == count
    assert facet_count(space) == count
    assert strata_term_bijection(space).passed


def test_disc_strata_name_their_blocks():
    strata = enumerate_codim1(parse_space('R_3'))
    assert sorted(stratum.term for stratum in strata) == \
        [('mu', 0, 1), ('mu', 1, 2)]
    assert all(stratum.factors == (SpaceId.disc(2), SpaceId.disc(2))
               for stratum in strata)


@pytest.mark.parametrize('r, s', [(r, s) for r in range(4) for s in range(4)
                                  if r + s <= 3])
def test_strip_strata_match_bimodule_morphism_terms(r, s):
    space = SpaceId.strip(r, s)
    strata = enumerate_codim1(space)
    assert len(strata) == facet_count(space)
    report = strata_term_bijection(space)
    assert report.passed, report.failures


@pytest.mark.parametrize('d', [1, 2, 3, 4])
@pytest.mark.parametrize('strip_breaking', [False, True])
def test_cyclic_strata_match_hochschild_terms(d, strip_breaking):
    space = SpaceId.cyclic(d)
    strata = enumerate_codim1(space, strip_breaking)
    assert len(strata) == facet_count(space, strip_breaking)
    assert strata_term_bijection(space, None, strip_breaking).passed


def test_strip_breaking_strata_of_a_single_input():
    assert enumerate_codim1(SpaceId.cyclic(1)) == []
    strata = enumerate_codim1(SpaceId.cyclic(1), True)
    assert len(strata) == 1
    assert strata[0].factors == (SpaceId.cyclic(1), STRIP_BREAKING)


@pytest.mark.parametrize('d', [1, 2, 3])
def test_annulus_strata_match_homotopy_terms(d):
    space = SpaceId.annulus(d)
    assert len(enumerate_codim1(space)) == facet_count(space)
    assert strata_term_bijection(space).passed


@pytest.mark.parametrize('d', [1, 2, 3])
def test_homotopy_family_strata(d):
    space = SpaceId.homotopy(d)
    strata = enumerate_codim1(space)
    assert len(strata) == facet_count(space)
    assert all(factor_dimensions_consistent(s) for s in strata)
    with pytest.raises(InvalidSpace):
        strata_term_bijection(space)


@pytest.mark.parametrize('text', ['R_5', 'R_{2|1|1}', 'R_3^1', 'C_3^-',
                                  'P_3'])
def test_factor_dimensions_add_up(text):
    space = parse_space(text)
    for stratum in enumerate_codim1(space):
        assert factor_dimensions_consistent(stratum), stratum.ref


@pytest.mark.parametrize('text, kind, params, dim', [
    ('R_4', 'R', (4,), 2),
    ('R_{1|1|0}', 'R_rs', (1, 0), 1),
    ('R_1|1|2', 'R_rs', (1, 2), 3),
    ('R_3^1', 'R1', (3,), 2),
    ('R^1', 'plane', (), 0),
    ('C_2^-', 'C', (2,), 2),
    ('C_2', 'C', (2,), 2),
    ('P_2', 'P', (2,), 2),
])
def test_parse_space(text, kind, params, dim):
    space = parse_space(text)
    assert space == SpaceId(kind, params)
    assert dimension(space) == dim
    assert parse_space(str(space)) == space


@pytest.mark.parametrize('text', ['Q_3', 'R_1', 'R_', 'C_0', 'R^2'])
def test_parse_space_rejects_garbage(text):
    with pytest.raises(InvalidSpace):
        parse_space(text)


def test_plane_has_no_boundary():
    assert enumerate_codim1(SpaceId.plane()) == []
    assert facet_count(SpaceId.plane()) == 0


def test_stratum_rendering():
    stratum = enumerate_codim1(SpaceId.disc(3))[0]
    assert stratum.ref == 'R_2 x R_2 [insert] mu(0,1)'
    assert stratum.to_dict() == {'factors': ['R_2', 'R_2'],
                                 'family': 'insert', 'term': 'mu(0,1)'}


def test_sign_formulas():
    assert sign_formula('cardy', n=1) == -1
    assert sign_formula('cardy', n=3) == 1
    assert sign_formula('dagger', degrees=[1, 2]) == -1
    assert sign_formula('oc', degrees=[0, 1]) == -1
    assert sign_formula('oc_check', degrees=[0]) == -1
    assert sign_formula('coproduct_boundary_shifted', middle=0, n=0) == -1
    assert 'f' in SIGN_TAGS


def test_unknown_sign_tag():
    with pytest.raises(UnknownSignTag):
        sign_formula('spade')

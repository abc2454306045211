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
import sympy
from score.ainf import fixtures
from score.ainf._exceptions import ChainMapViolation
from score.ainf.bimodule import (
    LEFT, RIGHT, BimoduleHom, TensorComplex, TensorElement, yoneda_module)
from score.ainf.category import Chain
from score.ainf.hochschild import (
    TruncatedCC, GradedMap, bar_differential, hochschild_degree,
    hochschild_homology, verify_chain_map, cc_of_delta, cc_of_delta_word,
    cc_composite, composition_map)
from score.ainf.linalg import ChainComplexZ, FinAbGroup, homology


def b_squared(category, word):
    total = Chain()
    for other, coefficient in bar_differential(category, word).items():
        total = total + coefficient * bar_differential(category, other)
    return category.normalize(total)


def sympy_rank(matrix):
    if not matrix.rows or not matrix.cols:
        return 0
    return sympy.Matrix(matrix.tolist()).rank()


def test_bar_differential_of_the_ground_ring(ground, g):
    e = g(ground, 'e')
    assert bar_differential(ground, (e,)) == Chain()
    assert bar_differential(ground, (e, e)) == Chain()
    assert bar_differential(ground, (e, e, e)) == Chain.of((e, e), -1)


def test_bar_differential_sees_mu1(g):
    category = fixtures.torsion_algebra()
    u, v = g(category, 'u'), g(category, 'v')
    assert bar_differential(category, (u,)) == Chain.of((v,), -2)


def test_hochschild_degree(dual, g):
    e, eps = g(dual, 'e'), g(dual, 'eps')
    assert hochschild_degree((eps,)) == 1
    assert hochschild_degree((e, e, eps)) == -1
    assert hochschild_degree((eps, eps, e)) == 0


def test_b_squares_to_zero(shipped):
    for length in range(1, 6):
        for word in shipped.cyclic_words(length):
            assert b_squared(shipped, word) == Chain(), word


def test_truncated_complex_of_the_ground_ring(ground, g):
    e = g(ground, 'e')
    complex_ = TruncatedCC(ground, 3)
    assert complex_.degrees() == [-2, -1, 0]
    assert complex_.basis(-2) == ((e, e, e),)
    complex_.check()


def test_hochschild_homology_of_the_ground_ring(ground):
    result = hochschild_homology(ground, 3)
    assert result.max_length == 3
    assert result.groups == {0: FinAbGroup(1), -1: FinAbGroup(0),
                             -2: FinAbGroup(0)}
    assert all(result.stable.values())
    complex_ = TruncatedCC(ground, 3)
    for k in complex_.degrees():
        free = complex_.dimension(k) - \
            sympy_rank(complex_.differential(k)) - \
            sympy_rank(complex_.differential(k - 1))
        assert result.groups[k].free_rank == free


def test_hochschild_homology_degree_selection(ground):
    result = hochschild_homology(ground, 2, degrees=[0])
    assert list(result.groups) == [0]
    assert result.groups[0] == FinAbGroup(1)


def test_dual_numbers_ranks_match_brute_force(dual):
    complex_ = TruncatedCC(dual, 3)
    complex_.check()
    for k in complex_.degrees():
        group = homology(complex_, k)
        free = complex_.dimension(k) - \
            sympy_rank(complex_.differential(k)) - \
            sympy_rank(complex_.differential(k - 1))
        assert group.free_rank == free


def test_truncation_is_restricted_to_objects(split):
    complex_ = TruncatedCC(split, 2, objects=['L'])
    assert all(x.source == 'L' and x.target == 'L'
               for k in complex_.degrees()
               for word in complex_.basis(k) for x in word)


def small_complex():
    # Z·a --1--> Z·b
    return ChainComplexZ.from_boundary(
        {0: ['a'], 1: ['b']},
        lambda label: {'b': 1} if label == 'a' else {})


def test_identity_and_zero_are_chain_maps():
    complex_ = small_complex()
    identity = GradedMap(complex_, complex_, 0, Chain.of)
    zero = GradedMap(complex_, complex_, 0, lambda label: Chain())
    assert verify_chain_map(identity).passed
    assert verify_chain_map(zero).passed
    assert verify_chain_map(identity).checked == 2


def test_broken_chain_map_names_its_witness():
    complex_ = small_complex()
    f = GradedMap(complex_, complex_, 0,
                  lambda label: Chain.of('a') if label == 'a' else Chain())
    report = verify_chain_map(f)
    assert not report.passed
    assert [violation.witness for violation in report.failures] == ['a']


def test_odd_maps_anticommute():
    complex_ = small_complex()
    shifted = ChainComplexZ.from_boundary(
        {-1: ['a'], 0: ['b']},
        lambda label: {'b': 1} if label == 'a' else {})
    f = GradedMap(complex_, shifted, -1, Chain.of)
    assert not verify_chain_map(f).passed
    h = GradedMap(complex_, shifted, -1,
                  lambda label: Chain.of(label, 1 if label == 'a' else -1))
    assert verify_chain_map(h).passed


def test_cc_of_ground_ring_coproduct(g):
    _, delta = fixtures.ground_ring_coproduct()
    e = g(delta.category, 'e')
    assert cc_of_delta_word(delta, (e,)) == Chain.of((e, e))
    assert cc_of_delta_word(delta, (e, e)) == Chain.of((e, e, e))


@pytest.mark.parametrize('factory', [
    fixtures.ground_ring_coproduct,
    fixtures.dual_numbers_coproduct,
    lambda: fixtures.coproduct_pair(0),
    lambda: fixtures.coproduct_pair(1),
    lambda: fixtures.coproduct_pair(2),
])
def test_cc_of_a_coproduct_is_a_chain_map(factory):
    _, delta = factory()
    for N in range(1, 4):
        cc_of_delta(delta, N)
        cc_composite(delta, N)


def test_cc_of_a_broken_coproduct_is_rejected(g):
    category, delta = fixtures.dual_numbers_coproduct()
    e, eps = g(category, 'e'), g(category, 'eps')
    terms = []
    for inputs, output, coefficient in delta.components[(0, 0)].terms():
        if inputs == (e,) and output == TensorElement(eps, e):
            coefficient = -coefficient
        terms.append((inputs, output, coefficient))
    broken = BimoduleHom(delta.source, delta.target, 1, {(0, 0): terms})
    with pytest.raises(ChainMapViolation) as excinfo:
        cc_of_delta(broken, 2)
    assert excinfo.value.witness == (eps, e)


@pytest.mark.parametrize('N', [0, 1, 2, 3])
def test_composition_is_a_chain_map(shipped, N):
    K = shipped.objects[0]
    right = yoneda_module(shipped, K, RIGHT)
    left = yoneda_module(shipped, K, LEFT)
    report = verify_chain_map(composition_map(TensorComplex(right, left, N)))
    assert report.passed, report.failures

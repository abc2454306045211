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

from collections import defaultdict
import pytest
from score.ainf import fixtures
from score.ainf._exceptions import SideMismatch, DegreeRuleViolation
from score.ainf.bimodule import (
    LEFT, RIGHT, Bimodule, BimoduleHom, TensorElement, TensorComplex,
    diagonal_bimodule, tensor_bimodule, yoneda_module, verify_bimodule,
    verify_module, verify_bimodule_hom, identity_hom, tensor_over_category,
    mu_composition, hom_complex, tensor_word_degree)
from score.ainf.category import Chain
from score.ainf.linalg import FinAbGroup, homology


def tabulate(P, bound, negate=None):
    """
    *P* with its operations written out as tables on words with at most
    *bound* algebra inputs. The coefficient of *negate*, a pair of a word
    and an output, is negated.
    """
    operations = defaultdict(list)
    for word, slot in P.words(bound):
        for output, coefficient in P.act(word, slot).items():
            if negate == (word, output):
                coefficient = -coefficient
            operations[(len(word) - slot - 1, slot)].append(
                (word, output, coefficient))
    return Bimodule(P.category, P.spaces, dict(operations), P.objects)


def d_squared(complex_, word):
    total = Chain()
    for other, coefficient in complex_.boundary(word).items():
        total = total + coefficient * complex_.boundary(other)
    return complex_.category.normalize(total)


def test_yoneda_spaces(ground, dual, g):
    e = g(ground, 'e')
    assert yoneda_module(ground, 'K', LEFT).space('K') == (e,)
    assert [x.degree for x in yoneda_module(dual, 'K', LEFT).space('K')] == \
        [0, 1]
    category, _ = fixtures.coproduct_pair(1)
    assert yoneda_module(category, 'K', RIGHT).space('L') == \
        (g(category, 'g'),)
    assert yoneda_module(category, 'K', LEFT).space('L') == \
        (g(category, 'f'),)


def test_diagonal_operations_of_the_ground_ring(ground, g):
    e = g(ground, 'e')
    diagonal = diagonal_bimodule(ground)
    assert diagonal.act((e,), 0) == Chain()
    assert diagonal.act((e, e), 0) == Chain.of(e, -1)
    assert diagonal.act((e, e), 1) == Chain.of(e)


def test_diagonal_bimodules_of_shipped_fixtures(shipped):
    report = verify_bimodule(diagonal_bimodule(shipped), 4)
    assert report.passed, report.failures


def test_yoneda_modules_are_modules(shipped):
    for K in shipped.objects:
        for side in (LEFT, RIGHT):
            module = yoneda_module(shipped, K, side)
            assert verify_module(module, 3).passed, (K, side)


def test_tensor_bimodules_of_yoneda_modules(shipped):
    for K in shipped.objects:
        for L in shipped.objects:
            P = tensor_bimodule(yoneda_module(shipped, K, LEFT),
                                yoneda_module(shipped, L, RIGHT))
            report = verify_bimodule(P, 2)
            assert report.passed, (K, L, report.failures)


def test_tensor_bimodule_operations_of_the_dual_numbers(dual, g):
    e, eps = g(dual, 'e'), g(dual, 'eps')
    P = tensor_bimodule(yoneda_module(dual, 'K', LEFT),
                        yoneda_module(dual, 'K', RIGHT))
    # μ^{0|1|0}(x ⊗ y) = (−1)^{deg y} μ¹x ⊗ y + x ⊗ μ¹y with μ¹ = 0
    assert P.act((TensorElement(e, eps),), 0) == Chain()
    # μ^{1|1|0}: the left factor absorbs the input, signed by deg y
    assert P.act((TensorElement(e, eps), eps), 0) == \
        Chain.of(TensorElement(eps, eps))
    assert P.act((TensorElement(e, e), eps), 0) == \
        Chain.of(TensorElement(eps, e), -1)
    # μ^{0|1|1}: the right factor absorbs the input
    assert P.act((eps, TensorElement(e, e)), 1) == \
        Chain.of(TensorElement(e, eps))
    assert P.act((eps, TensorElement(e, eps), e), 1) == Chain()


def test_tensor_bimodule_differential_on_the_torsion_algebra(g):
    category = fixtures.torsion_algebra()
    e, u, v = g(category, 'e'), g(category, 'u'), g(category, 'v')
    P = tensor_bimodule(yoneda_module(category, 'K', LEFT),
                        yoneda_module(category, 'K', RIGHT))
    # (−1)^{deg y+1} μ¹(x) ⊗ y − x ⊗ μ¹(y) with μ¹(u) = 2v
    assert P.act((TensorElement(u, e),), 0) == \
        Chain.of(TensorElement(v, e), -2)
    assert P.act((TensorElement(e, u),), 0) == \
        Chain.of(TensorElement(e, v), -2)
    assert P.act((TensorElement(u, u),), 0) == \
        Chain.of(TensorElement(v, u), 2) + Chain.of(TensorElement(u, v), -2)
    assert P.act((TensorElement(v, v),), 0) == Chain()


def test_tabulated_diagonal_bimodule_passes(dual):
    P = tabulate(diagonal_bimodule(dual), 1)
    assert verify_bimodule(P, 2).passed


def test_negated_bimodule_operation_is_detected(dual, g):
    e, eps = g(dual, 'e'), g(dual, 'eps')
    P = tabulate(diagonal_bimodule(dual), 1, negate=((eps, e), eps))
    report = verify_bimodule(P, 2)
    assert not report.passed
    assert (eps, e, e) in [violation.witness for violation in report.failures]


def test_sides_are_checked(dual):
    left = yoneda_module(dual, 'K', LEFT)
    right = yoneda_module(dual, 'K', RIGHT)
    with pytest.raises(SideMismatch):
        tensor_bimodule(right, left)
    with pytest.raises(SideMismatch):
        TensorComplex(left, right, 1)
    with pytest.raises(SideMismatch):
        yoneda_module(dual, 'K', 'up')


def test_zero_and_identity_morphisms(dual):
    P = diagonal_bimodule(dual)
    for n in (0, 1, 3):
        assert verify_bimodule_hom(BimoduleHom(P, P, n)).passed
    assert verify_bimodule_hom(identity_hom(P)).passed


@pytest.mark.parametrize('factory', [
    fixtures.ground_ring_coproduct,
    fixtures.dual_numbers_coproduct,
    lambda: fixtures.coproduct_pair(0),
    lambda: fixtures.coproduct_pair(1),
    lambda: fixtures.coproduct_pair(2),
])
def test_shipped_coproducts(factory):
    _, delta = factory()
    delta.degree_check()
    report = verify_bimodule_hom(delta, 4)
    assert report.passed, report.failures


def test_negated_coproduct_component_is_detected(g):
    category, delta = fixtures.dual_numbers_coproduct()
    e, eps = g(category, 'e'), g(category, 'eps')
    terms = []
    for inputs, output, coefficient in delta.components[(0, 0)].terms():
        if inputs == (e,) and output == TensorElement(eps, e):
            coefficient = -coefficient
        terms.append((inputs, output, coefficient))
    mutated = BimoduleHom(delta.source, delta.target, 1, {(0, 0): terms})
    report = verify_bimodule_hom(mutated, 2)
    assert not report.passed
    assert (eps, e) in [violation.witness for violation in report.failures]


def test_coproduct_degree_rule(dual, g):
    e, eps = g(dual, 'e'), g(dual, 'eps')
    source = diagonal_bimodule(dual)
    target = tensor_bimodule(yoneda_module(dual, 'K', LEFT),
                             yoneda_module(dual, 'K', RIGHT))
    delta = BimoduleHom(source, target, 0,
                        {(0, 0): [((e,), TensorElement(e, eps), 1)]})
    with pytest.raises(DegreeRuleViolation):
        delta.degree_check()


def test_tensor_word_degree(ground, dual, g):
    e = g(ground, 'e')
    assert tensor_word_degree((e, e)) == 0
    assert tensor_word_degree((e, e, e)) == -1
    assert tensor_word_degree((e, e, e, e)) == -2
    e, eps = g(dual, 'e'), g(dual, 'eps')
    assert tensor_word_degree((eps, e, eps)) == 1
    assert tensor_word_degree((e, eps, e)) == 0


def test_tensor_complex_of_the_ground_ring(ground, g):
    e = g(ground, 'e')
    right = yoneda_module(ground, 'K', RIGHT)
    left = yoneda_module(ground, 'K', LEFT)
    complex_ = tensor_over_category(right, left, 0)
    assert complex_.degrees() == [0]
    assert complex_.basis(0) == ((e, e),)
    assert complex_.boundary((e, e)) == Chain()
    assert mu_composition(ground, (e, e)) == Chain.of(e)
    for N in range(4):
        complex_ = tensor_over_category(right, left, N)
        assert homology(complex_, 0) == FinAbGroup(1)


@pytest.mark.parametrize('factory', [
    fixtures.ground_ring,
    fixtures.dual_numbers,
    lambda: fixtures.path_category(3),
    fixtures.torsion_algebra,
    fixtures.split_summand,
    lambda: fixtures.coproduct_pair(1)[0],
])
def test_tensor_complexes_square_to_zero(factory):
    category = factory()
    K = category.objects[0]
    right = yoneda_module(category, K, RIGHT)
    left = yoneda_module(category, K, LEFT)
    for N in range(4):
        tensor_over_category(right, left, N)


def test_tensor_complex_of_mu3_squares_to_zero(mu3):
    right = yoneda_module(mu3, 'K', RIGHT)
    left = yoneda_module(mu3, 'K', LEFT)
    complex_ = tensor_over_category(right, left, 3)
    assert sum(complex_.dimension(k) for k in complex_.degrees()) > 1000
    short = TensorComplex(right, left, 1)
    for k in short.degrees():
        for word in short.basis(k):
            if len(word) <= 2:
                assert d_squared(short, word) == Chain(), word


def test_hom_complex_of_the_torsion_algebra(g):
    category = fixtures.torsion_algebra()
    complex_ = hom_complex(category, 'K', 'K')
    assert complex_.basis(-1) == (g(category, 'u'),)
    assert homology(complex_, 0) == FinAbGroup(1, [2])

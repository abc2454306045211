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

"""
Small categories with known answers. All of them are strictly unital:
``μ²(x, e) = x`` and ``μ²(e, x) = (−1)^{deg x} x`` in written order, and no
higher product has a unit among its inputs. Only
:func:`cohomological_unit_algebra` declares a unit that is not strict.
"""

import logging
from collections import defaultdict
from .bimodule import (
    LEFT, RIGHT, BimoduleHom, TensorElement, diagonal_bimodule,
    tensor_bimodule, yoneda_module, hom_complex, mu_composition)
from .category import AinfCategoryData, Chain, GradedBasis
from .constants import Constants
from .fileformat import CategoryFile
from .hochschild import TruncatedCC, cc_of_delta_word
from .linalg import ChainComplexZ
from .signs import sign


log = logging.getLogger(__name__)


def _strict_unit_terms(generators, units):
    terms = []
    for x in generators:
        left = units.get(x.source)
        if left is not None:
            terms.append(((left, x), x, 1))
        right = units.get(x.target)
        if right is not None and x != right:
            terms.append(((x, right), x, sign(x.degree)))
    return terms


def _assemble(name, objects, hom, products, units, ring=Constants.RING_Z):
    # generator names are unique across a fixture, so products refer to them
    # by name only
    bases = {key: GradedBasis(key[0], key[1], generators)
             for key, generators in hom.items()}
    by_name = {g.name: g for basis in bases.values() for g in basis}
    unit_generators = {obj: by_name[unit] for obj, unit in units.items()
                       if unit is not None}
    tables = defaultdict(list)
    for inputs, output, coefficient in products:
        tables[len(inputs)].append(
            (tuple(by_name[x] for x in inputs), by_name[output], coefficient))
    tables[2].extend(_strict_unit_terms(by_name.values(), unit_generators))
    unit_chains = {obj: Chain.of(unit_generators[obj])
                   if obj in unit_generators else Chain()
                   for obj in units}
    category = AinfCategoryData(objects, bases, dict(tables), ring,
                                unit_chains, name)
    category.validate()
    log.debug('Built fixture %s', name)
    return category


def generator(category, name):
    """
    The generator called *name*, wherever it lives.
    """
    for g in category.generators():
        if g.name == name:
            return g
    raise KeyError(name)


def ground_ring(ring=Constants.RING_Z):
    """
    One object K with ``hom(K, K) = ℤ·e``.
    """
    return _assemble('ground-ring', ['K'], {('K', 'K'): [('e', 0)]}, [],
                     {'K': 'e'}, ring)


def dual_numbers(eps_degree=1, ring=Constants.RING_Z):
    """
    ``ℤ[ε]/ε²`` with ε in degree *eps_degree*.
    """
    return _assemble('dual-numbers', ['K'],
                     {('K', 'K'): [('e', 0), ('eps', eps_degree)]}, [],
                     {'K': 'e'}, ring)


def path_category(size=2, ring=Constants.RING_Z):
    """
    The A_n quiver: objects ``L1 … Ln`` and one degree zero arrow ``pij``
    from ``Li`` to ``Lj`` for every ``i < j``, composing to ``pik``.
    """
    objects = ['L%d' % i for i in range(1, size + 1)]
    hom = {}
    for i in range(1, size + 1):
        hom[('L%d' % i, 'L%d' % i)] = [('e%d' % i, 0)]
        for j in range(i + 1, size + 1):
            hom[('L%d' % i, 'L%d' % j)] = [('p%d%d' % (i, j), 0)]
    products = []
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            for k in range(j + 1, size + 1):
                products.append((('p%d%d' % (i, j), 'p%d%d' % (j, k)),
                                 'p%d%d' % (i, k), 1))
    units = {'L%d' % i: 'e%d' % i for i in range(1, size + 1)}
    return _assemble('A%d' % size, objects, hom, products, units, ring)


def mu3_algebra(ring=Constants.RING_Z):
    """
    An algebra with nonvanishing μ¹, μ² and μ³: ``μ¹(t) = c``,
    ``μ²(a, a) = b``, ``μ²(b, a) = c`` (written order) and
    ``μ³(a, a, a) = t``, all other products of non-units zero.
    """
    hom = {('K', 'K'): [('e', 0), ('a', 0), ('b', 0), ('c', 0), ('t', -1)]}
    products = [
        (('t',), 'c', 1),
        (('a', 'a'), 'b', 1),
        (('a', 'b'), 'c', 1),
        (('a', 'a', 'a'), 't', 1),
    ]
    return _assemble('mu3', ['K'], hom, products, {'K': 'e'}, ring)


def torsion_algebra(ring=Constants.RING_Z):
    """
    ``μ¹(u) = 2v`` with u in degree −1: the class of v is 2-torsion.
    """
    hom = {('K', 'K'): [('e', 0), ('u', -1), ('v', 0)]}
    return _assemble('torsion', ['K'], hom, [(('u',), 'v', 2)], {'K': 'e'},
                     ring)


def cohomological_unit_algebra(ring=Constants.RING_Z):
    """
    ``μ¹(w) = c`` with w in degree −1 and e a strict unit. The declared unit
    is ``e + c``, a cohomological unit that is not strict.
    """
    hom = {('K', 'K'): [('e', 0), ('w', -1), ('c', 0)]}
    category = _assemble('cohomological-unit', ['K'], hom,
                         [(('w',), 'c', 1)], {'K': 'e'}, ring)
    unit = Chain.of(generator(category, 'e')) + \
        Chain.of(generator(category, 'c'))
    return AinfCategoryData(category.objects, category.hom, category.mu,
                            category.ring, {'K': unit}, category.name)


def zero_subcategory(ring=Constants.RING_Z):
    """
    K and a zero object Z: nothing maps between them, Z has no morphisms.
    """
    return _assemble('zero-subcategory', ['K', 'Z'],
                     {('K', 'K'): [('eK', 0)]}, [], {'K': 'eK', 'Z': None},
                     ring)


def split_summand(ring=Constants.RING_Z):
    """
    K is a summand of L: ``π∘i = e_K`` and ``f = i∘π`` is an idempotent of L.
    """
    hom = {
        ('K', 'K'): [('eK', 0)],
        ('L', 'L'): [('eL', 0), ('f', 0)],
        ('K', 'L'): [('i', 0)],
        ('L', 'K'): [('pi', 0)],
    }
    products = [
        (('i', 'pi'), 'eK', 1),
        (('pi', 'i'), 'f', 1),
        (('f', 'f'), 'f', 1),
        (('i', 'f'), 'i', 1),
        (('f', 'pi'), 'pi', 1),
    ]
    return _assemble('split-summand', ['K', 'L'], hom, products,
                     {'K': 'eK', 'L': 'eL'}, ring)


def scaled_pair(scale=2, ring=Constants.RING_Z):
    """
    Like :func:`split_summand` without the idempotent, but ``π∘i`` and
    ``i∘π`` are *scale* times the units. The unit of K is then only reached
    with rational coefficients.
    """
    hom = {
        ('K', 'K'): [('eK', 0)],
        ('L', 'L'): [('eL', 0)],
        ('K', 'L'): [('i', 0)],
        ('L', 'K'): [('pi', 0)],
    }
    products = [
        (('i', 'pi'), 'eK', scale),
        (('pi', 'i'), 'eL', scale),
    ]
    return _assemble('scaled-pair', ['K', 'L'], hom, products,
                     {'K': 'eK', 'L': 'eL'}, ring)


def _coproduct(category, K, objects, n, terms):
    source = diagonal_bimodule(category, objects)
    target = tensor_bimodule(yoneda_module(category, K, LEFT, objects),
                             yoneda_module(category, K, RIGHT, objects))
    return BimoduleHom(source, target, n, terms)


def coproduct_pair(n=0, ring=Constants.RING_Z):
    """
    Objects K and L with ``f: K → L`` in degree 0, ``g: L → K`` in degree n
    and ``h = g∘f``. Returns the category and the degree n morphism from the
    diagonal bimodule of ``{L}`` to ``Y^l_K ⊗ Y^r_K`` sending ``e_L`` to
    ``f ⊗ g``.
    """
    hom = {
        ('K', 'K'): [('eK', 0), ('h', n)],
        ('L', 'L'): [('eL', 0)],
        ('K', 'L'): [('f', 0)],
        ('L', 'K'): [('g', n)],
    }
    category = _assemble('coproduct-pair', ['K', 'L'], hom,
                         [(('f', 'g'), 'h', 1)], {'K': 'eK', 'L': 'eL'}, ring)
    e_L = generator(category, 'eL')
    element = TensorElement(generator(category, 'f'),
                            generator(category, 'g'))
    delta = _coproduct(category, 'K', ('L',), n,
                       {(0, 0): [((e_L,), element, 1)]})
    return category, delta


def ground_ring_coproduct(ring=Constants.RING_Z):
    """
    ``Δ(e) = e ⊗ e`` of degree 0 on the ground ring.
    """
    category = ground_ring(ring)
    e = generator(category, 'e')
    delta = _coproduct(category, 'K', ('K',), 0,
                       {(0, 0): [((e,), TensorElement(e, e), 1)]})
    return category, delta


def dual_numbers_coproduct(ring=Constants.RING_Z):
    """
    The degree one morphism ``Δ(e) = e ⊗ ε − ε ⊗ e``, ``Δ(ε) = ε ⊗ ε`` on
    the dual numbers with ε in degree one.
    """
    category = dual_numbers(1, ring)
    e = generator(category, 'e')
    eps = generator(category, 'eps')
    terms = [
        ((e,), TensorElement(e, eps), 1),
        ((e,), TensorElement(eps, e), -1),
        ((eps,), TensorElement(eps, eps), 1),
    ]
    return category, _coproduct(category, 'K', ('K',), 1, {(0, 0): terms})


def torsion_cardy(closed_open='v', ring=Constants.RING_Z):
    """
    The torsion algebra with a one dimensional closed complex ``S = ℤ·s``,
    ``OC(e) = s``, ``CO(s) = closed_open`` and ``Δ = 0``. With ``CO(s) = v``
    a homotopy exists over ℚ only, with ``CO(s) = e`` not at all.
    """
    category = torsion_algebra(ring)
    e = generator(category, 'e')
    delta = _coproduct(category, 'K', ('K',), 0, {})
    closed = ChainComplexZ.from_boundary({0: ['s']}, lambda label: Chain(),
                                         ring=category.ring)
    open_closed = {(e,): Chain.of('s')}
    closed_open = {'s': Chain.of(generator(category, closed_open))}
    return category, delta, closed, open_closed, closed_open


def telescoping_sector(delta, max_length):
    """
    Tabulates the closed sector ``S = hom(K, K)``, ``CO = id`` and
    ``OC = μ∘CC(Δ)`` on cyclic words of length at most *max_length*, with
    the generators of ``hom(K, K)`` named by their references.
    """
    category = delta.category
    K = delta.target.left.base
    hom = hom_complex(category, K, K)
    generators = {g.ref: g for k in hom.degrees() for g in hom.basis(k)}
    bases = {k: [g.ref for g in hom.basis(k)] for k in hom.degrees()}

    def ref(generator):
        return generator.ref

    def boundary(label):
        return (-category.mu_word((generators[label],))).map_keys(ref)

    closed = ChainComplexZ.from_boundary(bases, boundary, ring=category.ring)
    cyclic = TruncatedCC(category, max_length, delta.source.objects)
    open_closed = {}
    for k in cyclic.degrees():
        for word in cyclic.basis(k):
            image = mu_composition(category, cc_of_delta_word(delta, word))
            if image:
                open_closed[word] = image.map_keys(ref)
    closed_open = {label: Chain.of(g) for label, g in generators.items()}
    return closed, open_closed, closed_open


def _ground_ring_file(ring, max_length, **params):
    category, delta = ground_ring_coproduct(ring)
    closed, open_closed, closed_open = telescoping_sector(delta, max_length)
    return CategoryFile(category, n=0, K='K', subcategory=['K'], delta=delta,
                        closed=closed, open_closed=open_closed,
                        closed_open=closed_open)


def _coproduct_pair_file(ring, max_length, n, **params):
    category, delta = coproduct_pair(n, ring)
    closed, open_closed, closed_open = telescoping_sector(delta, max_length)
    return CategoryFile(category, n=n, K='K', subcategory=['L'], delta=delta,
                        closed=closed, open_closed=open_closed,
                        closed_open=closed_open)


def _torsion_file(ring, **params):
    category, delta, closed, open_closed, closed_open = torsion_cardy(
        'v', ring)
    return CategoryFile(category, n=0, K='K', subcategory=['K'], delta=delta,
                        closed=closed, open_closed=open_closed,
                        closed_open=closed_open)


FIXTURES = {
    'ground-ring': _ground_ring_file,
    'dual-numbers': lambda ring, eps_degree, **params: CategoryFile(
        dual_numbers(eps_degree, ring), K='K', subcategory=['K']),
    'path': lambda ring, size, **params: CategoryFile(
        path_category(size, ring), K='L1', subcategory=['L1']),
    'mu3': lambda ring, **params: CategoryFile(
        mu3_algebra(ring), K='K', subcategory=['K']),
    'cohomological-unit': lambda ring, **params: CategoryFile(
        cohomological_unit_algebra(ring), K='K', subcategory=['K']),
    'zero-subcategory': lambda ring, **params: CategoryFile(
        zero_subcategory(ring), K='K', subcategory=['Z']),
    'split-summand': lambda ring, **params: CategoryFile(
        split_summand(ring), K='K', subcategory=['L']),
    'scaled-pair': lambda ring, **params: CategoryFile(
        scaled_pair(2, ring), K='K', subcategory=['L']),
    'coproduct-pair': _coproduct_pair_file,
    'torsion': _torsion_file,
}


def fixture_file(name, ring=Constants.RING_Z, n=0, eps_degree=1, size=2,
                 max_length=3):
    """
    The shipped fixture *name* as a :class:`CategoryFile`, ready to be
    written with :func:`score.ainf.fileformat.dump`.
    """
    try:
        factory = FIXTURES[name]
    except KeyError:
        raise ValueError('Unknown fixture %r' % (name,))
    return factory(ring=ring, n=n, eps_degree=eps_degree, size=size,
                   max_length=max_length)

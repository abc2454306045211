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
A∞-modules and bimodules over a category, their morphisms, and the bar-type
complexes built from them.

Module and bimodule elements are *arrows* like generators: an element of a
left module at L points into L, an element of a right module at L points out
of L, an element of a bimodule at (X, Y) has source X and target Y. A word on
which a bimodule operation acts is stored in boundary order as
``(b_1, …, b_s, p, a_1, …, a_r)``: *s* right inputs, the module element at
index *s* (the *slot*) and *r* left inputs.
"""

import logging
from collections import defaultdict, namedtuple
from ._exceptions import (
    SideMismatch, UnknownObject, DegreeRuleViolation, InvalidCategory)
from ._parallel import parallel_map
from ._report import VerificationReport, Violation, describe
from .category import Chain, ZERO, MultilinearMap, is_composable
from .constants import Constants
from .linalg import ChainComplexZ, boundary_matrices
from .signs import sign, reduced_degree, reduced_sum


log = logging.getLogger(__name__)


LEFT = 'left'
RIGHT = 'right'


class TensorElement(namedtuple('TensorElement', ('x', 'y'))):
    """
    The element ``x ⊗ y`` of ``Y^l_K(Y) ⊗ Y^r_K(X)``: *x* is an arrow
    K → Y, *y* an arrow X → K.
    """
    __slots__ = ()

    @property
    def source(self):
        return self.y.source

    @property
    def target(self):
        return self.x.target

    @property
    def degree(self):
        return self.x.degree + self.y.degree

    @property
    def ref(self):
        return '%s (x) %s' % (describe(self.x), describe(self.y))


def tensor(left_chain, right_chain):
    """
    ``Σ c·c' · (x ⊗ y)`` for chains of left and right module elements.
    """
    return Chain((TensorElement(x, y), a * b)
                 for x, a in left_chain.items()
                 for y, b in right_chain.items())


def _slot_weights(word, slot):
    return [x.degree if i == slot else reduced_degree(x)
            for i, x in enumerate(word)]


def _words_ending_at(category, length, obj, objects):
    if length == 0:
        return [()]
    return [word for word in category.composable_words(length, objects)
            if word[-1].target == obj]


def _words_starting_at(category, length, obj, objects):
    if length == 0:
        return [()]
    return list(category.composable_words(length, objects, start=obj))


class SideModule:
    """
    A left or right A∞-module given by explicit operation tables.

    *spaces* maps objects to the module elements living there, *actions* maps
    the number of algebra inputs to a :class:`MultilinearMap` on words in
    boundary order: ``(m, a_1, …, a_r)`` for a left module,
    ``(b_1, …, b_s, n)`` for a right module.
    """

    def __init__(self, category, side, spaces, actions=None, objects=None,
                 name=None):
        if side not in (LEFT, RIGHT):
            raise SideMismatch('Unknown module side %r' % (side,))
        self.category = category
        self.side = side
        self.objects = tuple(objects if objects is not None
                             else category.objects)
        self.spaces = {obj: tuple(elements)
                       for obj, elements in spaces.items()}
        self.actions = {}
        for arity, table in (actions or {}).items():
            if not isinstance(table, MultilinearMap):
                table = MultilinearMap(arity + 1, table)
            self.actions[arity] = table
        self.name = name

    def space(self, obj):
        if obj not in self.objects:
            raise UnknownObject('Unknown object %r' % (obj,))
        return self.spaces.get(obj, ())

    def module_element(self, word):
        return word[0] if self.side == LEFT else word[-1]

    def act(self, word):
        try:
            table = self.actions[len(word) - 1]
        except KeyError:
            return ZERO
        return table(word)


class YonedaModule(SideModule):
    """
    ``Y^l_K(L) = hom(K, L)`` or ``Y^r_K(L) = hom(L, K)``; the actions are the
    signed higher products of the category.
    """

    def __init__(self, category, base, side, objects=None):
        if base not in category.objects:
            raise UnknownObject('Unknown object %r' % (base,))
        objects = tuple(objects if objects is not None else category.objects)
        if side == LEFT:
            spaces = {obj: tuple(category.hom_space(base, obj))
                      for obj in objects}
        else:
            spaces = {obj: tuple(category.hom_space(obj, base))
                      for obj in objects}
        super().__init__(category, side, spaces, objects=objects,
                         name='Y^%s_%s' % (side[0], base))
        self.base = base

    def act(self, word):
        result = self.category.mu_word(word)
        if self.side == LEFT:
            return -result
        return sign(reduced_sum(word[:-1]) + 1) * result


def yoneda_module(category, K, side, objects=None):
    """
    The left (``Y^l_K``) or right (``Y^r_K``) Yoneda module of the object *K*,
    optionally restricted to a subset of *objects*.
    """
    return YonedaModule(category, K, side, objects)


class Bimodule:
    """
    An A∞-bimodule given by explicit operation tables: *spaces* maps object
    pairs (X, Y) to the elements with source X and target Y, *operations*
    maps ``(r, s)`` to a :class:`MultilinearMap` on words
    ``(b_1, …, b_s, p, a_1, …, a_r)``.
    """

    def __init__(self, category, spaces, operations=None, objects=None,
                 name=None):
        self.category = category
        self.objects = tuple(objects if objects is not None
                             else category.objects)
        self.spaces = {key: tuple(elements)
                       for key, elements in spaces.items()}
        self.operations = {}
        for (r, s), table in (operations or {}).items():
            if not isinstance(table, MultilinearMap):
                table = MultilinearMap(r + s + 1, table)
            self.operations[(r, s)] = table
        self.name = name

    def elements(self, source, target):
        return self.spaces.get((source, target), ())

    def all_elements(self):
        for source in self.objects:
            for target in self.objects:
                yield from self.elements(source, target)

    def act(self, word, slot):
        try:
            table = self.operations[(len(word) - slot - 1, slot)]
        except KeyError:
            return ZERO
        return table(word)

    def words(self, bound):
        """
        Yields ``(word, slot)`` for every composable word with ``r + s`` at
        most *bound*.
        """
        for source in self.objects:
            for target in self.objects:
                elements = self.elements(source, target)
                if not elements:
                    continue
                for total in range(bound + 1):
                    for s in range(total + 1):
                        r = total - s
                        rights = _words_ending_at(
                            self.category, s, source, self.objects)
                        lefts = _words_starting_at(
                            self.category, r, target, self.objects)
                        for p in elements:
                            for right in rights:
                                for left in lefts:
                                    yield right + (p,) + left, s


class DiagonalBimodule(Bimodule):
    """
    The category acting on its own morphisms:
    ``μ^{r|1|s} = (−1)^{✠(right inputs)+1} μ^{r+s+1}``.
    """

    def __init__(self, category, objects=None):
        objects = tuple(objects if objects is not None else category.objects)
        spaces = {(x, y): tuple(category.hom_space(x, y))
                  for x in objects for y in objects}
        super().__init__(category, spaces, objects=objects, name='diagonal')

    def act(self, word, slot):
        return sign(reduced_sum(word[:slot]) + 1) * \
            self.category.mu_word(word)


def diagonal_bimodule(category, objects=None):
    return DiagonalBimodule(category, objects)


class TensorBimodule(Bimodule):
    """
    ``Y^l ⊗ Y^r``: only the operations with ``r = 0`` or ``s = 0`` survive,
    and they are induced by the module actions on one tensor factor.
    """

    def __init__(self, left, right):
        if left.side != LEFT or right.side != RIGHT:
            raise SideMismatch('Tensor bimodule needs a left and a right '
                               'module, got %s and %s' %
                               (left.side, right.side))
        if left.category is not right.category or \
                left.objects != right.objects:
            raise SideMismatch('Modules over different categories')
        spaces = {}
        for x in left.objects:
            for y in left.objects:
                spaces[(x, y)] = tuple(
                    TensorElement(a, b)
                    for a in left.space(y) for b in right.space(x))
        super().__init__(left.category, spaces, objects=left.objects,
                         name='tensor')
        self.left = left
        self.right = right

    def act(self, word, slot):
        p = word[slot]
        rights = word[:slot]
        lefts = word[slot + 1:]
        x = Chain.of(p.x)
        y = Chain.of(p.y)
        if not rights and not lefts:
            return sign(p.y.degree) * tensor(self.left.act((p.x,)), y) + \
                tensor(x, self.right.act((p.y,)))
        if not rights:
            return sign(p.y.degree) * tensor(
                self.left.act((p.x,) + lefts), y)
        if not lefts:
            return tensor(x, self.right.act(rights + (p.y,)))
        return ZERO


def tensor_bimodule(left, right):
    return TensorBimodule(left, right)


class _ModuleAsBimodule:
    # a side module seen as a bimodule with one kind of inputs

    def __init__(self, module):
        self.module = module
        self.category = module.category

    def act(self, word, slot):
        return self.module.act(word)


def bimodule_residual(P, word, slot):
    """
    The quadratic bimodule equation on *word*: every block of the word is
    collapsed (by ``μ`` if it avoids the slot, by the bimodule operation
    otherwise) and the result is fed into the outer bimodule operation.
    """
    category = P.category
    weights = _slot_weights(word, slot)
    n = len(word)
    result = defaultdict(int)
    for i in range(n):
        for j in range(i + 1, n + 1):
            if i <= slot < j:
                inner = P.act(word[i:j], slot - i)
                new_slot = i
            else:
                inner = category.mu_word(word[i:j])
                new_slot = slot - (j - i) + 1 if j <= slot else slot
            if not inner:
                continue
            parity = sign(sum(weights[:i]))
            for middle, coefficient in inner.items():
                outer = P.act(word[:i] + (middle,) + word[j:], new_slot)
                for output, value in outer.items():
                    result[output] += parity * coefficient * value
    return category.normalize(Chain(result))


def verify_bimodule(P, bound=4, workers=1):
    """
    Checks the bimodule equation on every word with ``r + s <= bound``.
    """
    items = list(P.words(bound))
    residuals = parallel_map(lambda item: bimodule_residual(P, *item),
                             items, workers)
    failures = [Violation(word, residual)
                for (word, _), residual in zip(items, residuals) if residual]
    return VerificationReport('bimodule', failures, checked=len(items))


def verify_module(M, bound=4, workers=1):
    """
    Checks the module equation of a :class:`SideModule` on every word with at
    most *bound* algebra inputs.
    """
    category = M.category
    items = []
    for obj in M.objects:
        for element in M.space(obj):
            for length in range(bound + 1):
                if M.side == LEFT:
                    for word in _words_starting_at(category, length, obj,
                                                   M.objects):
                        items.append(((element,) + word, 0))
                else:
                    for word in _words_ending_at(category, length, obj,
                                                 M.objects):
                        items.append((word + (element,), length))
    adaptor = _ModuleAsBimodule(M)
    residuals = parallel_map(lambda item: bimodule_residual(adaptor, *item),
                             items, workers)
    failures = [Violation(word, residual)
                for (word, _), residual in zip(items, residuals) if residual]
    return VerificationReport('module', failures, checked=len(items))


class BimoduleHom:
    """
    A morphism of A∞-bimodules of degree *shift* (the symbol n): components
    ``Δ^{r|1|s}`` keyed by ``(r, s)`` as :class:`MultilinearMap` tables on
    words ``(b_1, …, b_s, p, a_1, …, a_r)`` of the *source* bimodule with
    values in the *target* bimodule.
    """

    def __init__(self, source, target, shift, components=None):
        if source.category is not target.category:
            raise SideMismatch('Bimodules over different categories')
        self.source = source
        self.target = target
        self.shift = shift
        self.components = {}
        for (r, s), table in (components or {}).items():
            if not isinstance(table, MultilinearMap):
                table = MultilinearMap(r + s + 1, table)
            self.components[(r, s)] = table

    @property
    def category(self):
        return self.source.category

    def __call__(self, word, slot):
        try:
            table = self.components[(len(word) - slot - 1, slot)]
        except KeyError:
            return ZERO
        return table(word)

    def degree_check(self):
        """
        Raises :class:`DegreeRuleViolation` unless every term of
        ``Δ^{r|1|s}`` has degree ``deg p + Σ deg + n − (r + s)``.
        """
        for (r, s), table in sorted(self.components.items()):
            for inputs, output, _ in table.terms():
                if not is_composable(inputs):
                    raise InvalidCategory('Δ^{%d|1|%d}%s is not composable'
                                          % (r, s, describe(inputs)))
                expected = sum(x.degree for x in inputs) + self.shift - r - s
                if output.degree != expected:
                    raise DegreeRuleViolation(
                        'Δ^{%d|1|%d}%s has degree %d, expected %d' % (
                            r, s, describe(inputs), output.degree, expected))


def bimodule_hom_residual(delta, word, slot):
    """
    The equation of a bimodule morphism of degree n on *word*::

        Σ (−1)^{n·✠(b_1…b_i)} μ_Q(…, Δ(block), …)
            − (−1)^n Σ (−1)^{✠(b_1…b_i)} Δ(…, μ(block), …)

    where the first sum runs over blocks containing the slot and the second
    over all blocks, collapsed as in the bimodule equation of the source.
    """
    category = delta.category
    n = delta.shift
    weights = _slot_weights(word, slot)
    length = len(word)
    first = defaultdict(int)
    second = defaultdict(int)
    for i in range(length):
        prefix = sum(weights[:i])
        for j in range(i + 1, length + 1):
            block = word[i:j]
            if i <= slot < j:
                image = delta(block, slot - i)
                for middle, coefficient in image.items():
                    outer = delta.target.act(
                        word[:i] + (middle,) + word[j:], i)
                    for output, value in outer.items():
                        first[output] += sign(n * prefix) * \
                            coefficient * value
                inner = delta.source.act(block, slot - i)
                new_slot = i
            else:
                inner = category.mu_word(block)
                new_slot = slot - (j - i) + 1 if j <= slot else slot
            for middle, coefficient in inner.items():
                outer = delta(word[:i] + (middle,) + word[j:], new_slot)
                for output, value in outer.items():
                    second[output] += sign(prefix) * coefficient * value
    return category.normalize(Chain(first) - sign(n) * Chain(second))


def verify_bimodule_hom(delta, bound=4, workers=1):
    """
    Checks the morphism equation of *delta* on every source word with
    ``r + s <= bound``.
    """
    items = list(delta.source.words(bound))
    residuals = parallel_map(
        lambda item: bimodule_hom_residual(delta, *item), items, workers)
    failures = [Violation(word, residual)
                for (word, _), residual in zip(items, residuals) if residual]
    return VerificationReport('bimodule-hom', failures, checked=len(items),
                              details={'n': delta.shift})


def identity_hom(P):
    """
    The degree zero morphism ``P → P`` with ``Δ^{0|1|0} = id``.
    """
    terms = [((p,), p, 1) for p in P.all_elements()]
    return BimoduleHom(P, P, 0, {(0, 0): terms})


def tensor_word_degree(word):
    """
    Degree of ``q ⊗ a_1 ⊗ … ⊗ a_d ⊗ p`` (boundary order ``(q, a…, p)``).
    Interior letters count with ``deg − 1``, so ``e ⊗ e ⊗ e`` over the ground
    ring sits in degree −1.
    """
    return word[0].degree + word[-1].degree + \
        sum(a.degree - 1 for a in word[1:-1])


class TensorComplex(ChainComplexZ):
    """
    The length-truncated tensor product ``R ⊗_B L`` of a right module *R* and
    a left module *L*. Basis elements are words ``(q, a_1, …, a_d, p)`` with
    ``q ∈ L(L_0)``, ``a_i`` morphisms between objects of *objects*,
    ``p ∈ R(L_d)`` and ``d <= max_length``.
    """

    def __init__(self, right, left, max_length, objects=None):
        if right.side != RIGHT or left.side != LEFT:
            raise SideMismatch('Need a right and a left module, got %s and '
                               '%s' % (right.side, left.side))
        if right.category is not left.category:
            raise SideMismatch('Modules over different categories')
        self.right = right
        self.left = left
        self.category = left.category
        self.max_length = max_length
        self.objects = tuple(objects if objects is not None
                             else left.objects)
        bases = defaultdict(list)
        for word in self._words():
            bases[tensor_word_degree(word)].append(word)
        super().__init__(bases, boundary_matrices(bases, self.boundary),
                         ring=self.category.ring)
        log.debug('Tensor complex with N=%d has %d generators', max_length,
                  sum(len(b) for b in bases.values()))

    def _words(self):
        category = self.category
        for start in self.objects:
            for q in self.left.space(start):
                for d in range(self.max_length + 1):
                    for middle in _words_starting_at(category, d, start,
                                                     self.objects):
                        end = middle[-1].target if middle else start
                        for p in self.right.space(end):
                            yield (q,) + middle + (p,)

    def boundary(self, word):
        """
        The differential of a single word: blocks containing ``q`` act through
        the left module, blocks containing ``p`` through the right module, all
        other blocks through ``μ``; a block starting at position i carries the
        sign ``(−1)^{deg q + ✠(a_1 … a_{i−1})}``.
        """
        weights = [word[0].degree] + \
            [reduced_degree(a) for a in word[1:-1]] + [word[-1].degree]
        n = len(word)
        result = defaultdict(int)
        for i in range(n):
            parity = sign(sum(weights[:i]))
            for j in range(i + 1, n + 1):
                if i == 0 and j == n:
                    continue
                block = word[i:j]
                if i == 0:
                    inner = self.left.act(block)
                elif j == n:
                    inner = self.right.act(block)
                else:
                    inner = self.category.mu_word(block)
                for middle, coefficient in inner.items():
                    result[word[:i] + (middle,) + word[j:]] += \
                        parity * coefficient
        return self.category.normalize(Chain(result))


def tensor_over_category(right, left, max_length, objects=None):
    """
    Builds ``R ⊗_B L`` truncated at word length *max_length* and checks that
    its differential squares to zero (:class:`NotAComplex` otherwise).
    """
    complex_ = TensorComplex(right, left, max_length, objects)
    complex_.check()
    return complex_


def mu_composition(category, element):
    """
    The chain level composition ``R ⊗_B L → hom(K, K)`` of Yoneda modules::

        q ⊗ a_1 ⊗ … ⊗ a_d ⊗ p ↦ (−1)^{deg q + ✠_1^d} μ^{d+2}(q, a_1, …, p)

    *element* is a word ``(q, a…, p)`` or a :class:`Chain` of such words.
    """
    if not isinstance(element, Chain):
        element = Chain.of(tuple(element))
    result = Chain()
    for word, coefficient in element.items():
        parity = word[0].degree + reduced_sum(word[1:-1])
        result = result + (sign(parity) * coefficient) * \
            category.mu_word(word)
    return category.normalize(result)


def hom_complex(category, source, target):
    """
    ``hom(source, target)`` as a complex with differential ``−μ¹``.
    """
    bases = defaultdict(list)
    for generator in category.hom_space(source, target):
        bases[generator.degree].append(generator)
    return ChainComplexZ.from_boundary(
        bases, lambda g: -category.mu_word((g,)), ring=category.ring)

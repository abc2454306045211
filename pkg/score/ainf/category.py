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
Finite A∞-categories over ℤ or ℤ/2.

All words of morphisms are stored in *boundary order* ``(x_1, …, x_d)`` with
``x_i.target == x_{i+1}.source``; the written form ``μ^d(x_d, …, x_1)`` is the
reverse.
"""

import itertools
import logging
from collections import defaultdict, namedtuple
from ._exceptions import (
    InvalidCategory, NotComposable, DegreeRuleViolation, DuplicateGenerator,
    UnknownObject, UnknownGenerator)
from ._parallel import parallel_map
from ._report import VerificationReport, Violation, describe
from .constants import Constants
from .signs import sign, reduced_degree


log = logging.getLogger(__name__)


class Generator(namedtuple('Generator', ('source', 'target', 'name',
                                         'degree'))):
    """
    A named basis element of ``hom(source, target)``.
    """
    __slots__ = ()

    @property
    def ref(self):
        return '%s>%s:%s' % (self.source, self.target, self.name)

    def __str__(self):
        return self.ref


class Chain:
    """
    A finitely supported integer combination of hashable basis labels.
    Chains are values: all operations return new chains and zero coefficients
    are never stored.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms = {}
        if terms is None:
            return
        items = terms.items() if hasattr(terms, 'items') else terms
        for key, coefficient in items:
            if not coefficient:
                continue
            value = self._terms.get(key, 0) + coefficient
            if value:
                self._terms[key] = value
            else:
                del self._terms[key]

    @classmethod
    def of(cls, key, coefficient=1):
        return cls({key: coefficient})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __contains__(self, key):
        return key in self._terms

    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def __eq__(self, other):
        if isinstance(other, Chain):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        return Chain(itertools.chain(self.items(), other.items()))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Chain({key: -value for key, value in self.items()})

    def __mul__(self, scalar):
        return Chain({key: scalar * value for key, value in self.items()})

    __rmul__ = __mul__

    def map_keys(self, func):
        return Chain((func(key), value) for key, value in self.items())

    def reduced(self, ring=Constants.RING_Z):
        if ring == Constants.RING_F2:
            return Chain({key: value % 2 for key, value in self.items()})
        return self

    def describe(self):
        if not self._terms:
            return '0'
        parts = []
        for key, value in self.items():
            if value == 1:
                parts.append(describe(key))
            elif value == -1:
                parts.append('-' + describe(key))
            else:
                parts.append('%d*%s' % (value, describe(key)))
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return 'Chain(%s)' % self.describe()


ZERO = Chain()


def expand(chains):
    """
    Multilinear expansion: yields ``(labels, coefficient)`` for every
    combination of one label from each of the given chains.
    """
    for combination in itertools.product(*[list(c.items()) for c in chains]):
        coefficient = 1
        for _, value in combination:
            coefficient *= value
        yield tuple(key for key, _ in combination), coefficient


def is_composable(word):
    return all(a.target == b.source for a, b in zip(word, word[1:]))


class GradedBasis:
    """
    The finite basis of ``hom(source, target)``: generators with unique names
    and integer degrees.
    """

    def __init__(self, source, target, generators=()):
        self.source = source
        self.target = target
        result = []
        by_name = {}
        for item in generators:
            if isinstance(item, Generator):
                generator = item
                if (generator.source, generator.target) != (source, target):
                    raise InvalidCategory(
                        '%s does not belong to hom(%s, %s)' %
                        (generator.ref, source, target))
            else:
                name, degree = item
                generator = Generator(source, target, name, int(degree))
            if generator.name in by_name:
                raise DuplicateGenerator(
                    'Duplicate generator %s in hom(%s, %s)' %
                    (generator.name, source, target))
            by_name[generator.name] = generator
            result.append(generator)
        self.generators = tuple(result)
        self._by_name = by_name

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __contains__(self, generator):
        return self._by_name.get(getattr(generator, 'name', None)) == generator

    def lookup(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownGenerator('No generator %s in hom(%s, %s)' %
                                   (name, self.source, self.target))

    def in_degree(self, degree):
        return tuple(g for g in self.generators if g.degree == degree)

    def degrees(self):
        return sorted(set(g.degree for g in self.generators))


class MultilinearMap:
    """
    A sparse operation table of fixed *arity*. *terms* is an iterable of
    ``(inputs, output, coefficient)`` with inputs in boundary order; terms
    with equal inputs and output are summed.
    """

    def __init__(self, arity, terms=()):
        self.arity = arity
        table = defaultdict(lambda: defaultdict(int))
        for inputs, output, coefficient in terms:
            inputs = tuple(inputs)
            if len(inputs) != arity:
                raise InvalidCategory('Term with %d inputs in a table of '
                                      'arity %d' % (len(inputs), arity))
            table[inputs][output] += coefficient
        self._table = {}
        for inputs, outputs in table.items():
            chain = Chain(outputs)
            if chain:
                self._table[inputs] = chain

    def __call__(self, inputs):
        return self._table.get(tuple(inputs), ZERO)

    def __len__(self):
        return sum(len(chain) for chain in self._table.values())

    def support(self):
        return list(self._table)

    def terms(self):
        for inputs, chain in self._table.items():
            for output, coefficient in chain.items():
                yield inputs, output, coefficient


class AinfCategoryData:
    """
    Objects, finite hom spaces and the sparse structure maps ``μ^d`` of an
    A∞-category.

    *hom* maps ordered object pairs to :class:`GradedBasis` instances (or to
    lists of ``(name, degree)`` pairs), *mu* maps arities to
    :class:`MultilinearMap` instances (or to term lists). *units* optionally
    maps objects to degree zero cycles; they are metadata, the category never
    relies on them unless a unit is explicitly requested.
    """

    def __init__(self, objects, hom, mu, ring=Constants.RING_Z, units=None,
                 name=None):
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise InvalidCategory('Duplicate objects in %r' % (self.objects,))
        if ring not in Constants.RINGS:
            raise InvalidCategory('Unknown coefficient ring %r' % (ring,))
        self.ring = ring
        self.name = name
        self.hom = {}
        for (source, target), basis in hom.items():
            self._check_object(source)
            self._check_object(target)
            if not isinstance(basis, GradedBasis):
                basis = GradedBasis(source, target, basis)
            self.hom[(source, target)] = basis
        self.mu = {}
        for arity, table in mu.items():
            if not isinstance(table, MultilinearMap):
                table = MultilinearMap(arity, table)
            if arity < 1:
                raise InvalidCategory('Structure maps have arity >= 1')
            self.mu[arity] = table
        self.units = {}
        for obj, unit in (units or {}).items():
            self._check_object(obj)
            self.units[obj] = unit if isinstance(unit, Chain) else Chain(unit)
        self._outgoing = defaultdict(list)
        for obj in self.objects:
            for target in self.objects:
                self._outgoing[obj].extend(self.hom_space(obj, target))

    def _check_object(self, obj):
        if obj not in self.objects:
            raise UnknownObject('Unknown object %r' % (obj,))

    def __repr__(self):
        return '<AinfCategoryData %s objects=%r>' % (
            self.name or '', self.objects)

    @property
    def d_max(self):
        arities = [d for d, table in self.mu.items() if len(table)]
        return max(arities) if arities else 0

    def hom_space(self, source, target):
        self._check_object(source)
        self._check_object(target)
        try:
            return self.hom[(source, target)]
        except KeyError:
            return GradedBasis(source, target)

    def generators(self):
        for obj in self.objects:
            yield from self._outgoing[obj]

    def lookup(self, source, target, name):
        return self.hom_space(source, target).lookup(name)

    def outgoing(self, obj, objects=None):
        if objects is None:
            return list(self._outgoing[obj])
        return [g for g in self._outgoing[obj] if g.target in objects]

    def composable_words(self, length, objects=None, start=None):
        """
        All composable words of the given length whose objects lie in
        *objects* (default: all objects), optionally starting at *start*.
        """
        if objects is None:
            objects = self.objects
        starts = [start] if start is not None else \
            [obj for obj in self.objects if obj in objects]

        def extend(word, obj):
            if len(word) == length:
                yield word
                return
            for generator in self.outgoing(obj, objects):
                yield from extend(word + (generator,), generator.target)

        for obj in starts:
            if obj in objects:
                yield from extend((), obj)

    def cyclic_words(self, length, objects=None):
        """
        Composable words of the given length whose last target is the first
        source.
        """
        for word in self.composable_words(length, objects):
            if word[-1].target == word[0].source:
                yield word

    def mu_word(self, word):
        """
        ``μ^d`` of a single composable word of generators (boundary order).
        """
        try:
            table = self.mu[len(word)]
        except KeyError:
            return ZERO
        return table(word)

    def normalize(self, chain):
        return chain.reduced(self.ring)

    def is_zero(self, chain):
        return not self.normalize(chain)

    def validate(self):
        """
        Checks that every term of every structure map is composable, lands in
        the right hom space, obeys the degree rule ``deg = 2 − d + Σ deg`` and
        only references declared generators. Units must be degree zero chains
        of endomorphisms.
        """
        declared = set(self.generators())
        for arity, table in sorted(self.mu.items()):
            for inputs, output, coefficient in table.terms():
                for generator in inputs + (output,):
                    if generator not in declared:
                        raise UnknownGenerator(
                            'μ^%d references undeclared %s' %
                            (arity, generator))
                if not is_composable(inputs):
                    raise NotComposable('μ^%d term %s is not composable' %
                                        (arity, describe(inputs)))
                if (output.source, output.target) != \
                        (inputs[0].source, inputs[-1].target):
                    raise NotComposable(
                        'μ^%d%s lands in hom(%s, %s), not in hom(%s, %s)' % (
                            arity, describe(inputs), output.source,
                            output.target, inputs[0].source,
                            inputs[-1].target))
                expected = 2 - arity + sum(g.degree for g in inputs)
                if output.degree != expected:
                    raise DegreeRuleViolation(
                        'μ^%d%s has degree %d, expected %d' % (
                            arity, describe(inputs), output.degree,
                            expected))
        for obj, unit in self.units.items():
            for generator in unit:
                if generator not in declared or \
                        (generator.source, generator.target) != (obj, obj):
                    raise InvalidCategory('Unit of %s is not an endomorphism'
                                          % (obj,))

    def restrict(self, objects):
        """
        The full subcategory on *objects*.
        """
        objects = [obj for obj in self.objects if obj in set(objects)]
        for obj in objects:
            self._check_object(obj)
        hom = {key: basis for key, basis in self.hom.items()
               if key[0] in objects and key[1] in objects}
        mu = {}
        for arity, table in self.mu.items():
            mu[arity] = MultilinearMap(arity, [
                (inputs, output, coefficient)
                for inputs, output, coefficient in table.terms()
                if all(g.source in objects and g.target in objects
                       for g in inputs)])
        units = {obj: unit for obj, unit in self.units.items()
                 if obj in objects}
        return AinfCategoryData(objects, hom, mu, self.ring, units, self.name)

    def with_term_negated(self, arity, inputs, output):
        """
        A copy in which the coefficient of *output* in ``μ^arity(inputs)`` is
        negated.
        """
        inputs = tuple(inputs)
        mu = {}
        for d, table in self.mu.items():
            terms = []
            for term_inputs, term_output, coefficient in table.terms():
                if d == arity and term_inputs == inputs and \
                        term_output == output:
                    coefficient = -coefficient
                terms.append((term_inputs, term_output, coefficient))
            mu[d] = MultilinearMap(d, terms)
        return AinfCategoryData(self.objects, self.hom, mu, self.ring,
                                self.units, self.name)

    def with_ring(self, ring):
        return AinfCategoryData(self.objects, self.hom, self.mu, ring,
                                self.units, self.name)


def apply_mu(category, d, inputs):
    """
    Applies ``μ^d`` multilinearly to a tuple of :class:`Chain` objects (or
    generators) given in boundary order.
    """
    inputs = tuple(x if isinstance(x, Chain) else Chain.of(x) for x in inputs)
    if len(inputs) != d:
        raise ValueError('μ^%d applied to %d inputs' % (d, len(inputs)))
    result = defaultdict(int)
    for word, coefficient in expand(inputs):
        if not is_composable(word):
            raise NotComposable('%s is not composable' % describe(word))
        for output, value in category.mu_word(word).items():
            result[output] += coefficient * value
    return category.normalize(Chain(result))


def ainf_residual(category, word):
    """
    The left hand side of the A∞ relation on the composable *word*::

        Σ (−1)^{✠_1^k} μ^{d−d2+1}(x_1, …, x_k, μ^{d2}(x_{k+1}, …), …)
    """
    weights = [reduced_degree(x) for x in word]
    d = len(word)
    result = defaultdict(int)
    for length in range(1, d + 1):
        for k in range(0, d - length + 1):
            inner = category.mu_word(word[k:k + length])
            if not inner:
                continue
            parity = sign(sum(weights[:k]))
            for middle, coefficient in inner.items():
                outer = category.mu_word(
                    word[:k] + (middle,) + word[k + length:])
                for output, value in outer.items():
                    result[output] += parity * coefficient * value
    return category.normalize(Chain(result))


def verify_ainf(category, up_to, workers=1):
    """
    Checks the A∞ relation on every composable generator word of length at
    most *up_to*. Failures are returned in the report, not raised.
    """
    words = [word for d in range(1, up_to + 1)
             for word in category.composable_words(d)]
    log.debug('Checking A∞ relations on %d words', len(words))
    residuals = parallel_map(lambda word: ainf_residual(category, word),
                             words, workers)
    failures = [Violation(word, residual)
                for word, residual in zip(words, residuals) if residual]
    return VerificationReport('ainf', failures, checked=len(words))


def verify_leibniz(category):
    """
    ``(μ¹)² = 0`` and the Leibniz rule, expanded on their own.
    """
    failures = []
    checked = 0

    def mu1(chain):
        return apply_mu(category, 1, (chain,))

    def mu2(first, second):
        return apply_mu(category, 2, (first, second))

    for x in category.generators():
        checked += 1
        residual = mu1(mu1(Chain.of(x)))
        if residual:
            failures.append(Violation((x,), residual))
    for x1, x2 in category.composable_words(2):
        checked += 1
        first, second = Chain.of(x1), Chain.of(x2)
        residual = category.normalize(
            mu1(mu2(first, second)) +
            mu2(mu1(first), second) +
            sign(reduced_degree(x1)) * mu2(first, mu1(second)))
        if residual:
            failures.append(Violation((x1, x2), residual))
    return VerificationReport('leibniz', failures, checked=checked)

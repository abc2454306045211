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
The length filtered cyclic bar complex of a category and the maps out of it.

A cyclic word ``(a_1, …, a_d)`` is stored in boundary order with the
distinguished letter ``a_d`` last; its degree is
``deg a_d + Σ_{i<d} (deg a_i − 1)``.
"""

import logging
from collections import defaultdict, namedtuple
from ._exceptions import ChainMapViolation
from ._parallel import parallel_map
from ._report import VerificationReport, Violation
from .bimodule import TensorComplex, hom_complex, mu_composition
from .category import Chain
from .constants import Constants
from .linalg import (
    ChainComplexZ, IntMatrix, boundary_matrices, homology, kernel_basis,
    in_image)
from .signs import sign, reduced_degree, hochschild_wrap, diamond, circ


log = logging.getLogger(__name__)


def hochschild_degree(word):
    return word[-1].degree + sum(a.degree - 1 for a in word[:-1])


def bar_differential(category, word):
    """
    The Hochschild differential of a single cyclic word.

    The first sum collapses every block that wraps around the distinguished
    letter, ``(a_{t+1}, …, a_d, a_1, …, a_r)`` for ``0 <= r <= t <= d−1``,
    into the new distinguished letter. The second sum collapses blocks inside
    ``a_1, …, a_{d−1}`` with the usual bar sign.

    Words are graded by :func:`hochschild_degree`: the distinguished letter
    ``a_d`` keeps its degree and every other letter counts with ``deg − 1``,
    so over the ground ring ``(e, e, e)`` sits in degree −2 and ``(e, e)``
    in degree −1.
    """
    word = tuple(word)
    d = len(word)
    degrees = [a.degree for a in word]
    result = defaultdict(int)
    for r in range(d):
        parity = sign(hochschild_wrap(degrees, r))
        for t in range(r, d):
            block = word[t:] + word[:r]
            for output, coefficient in category.mu_word(block).items():
                result[word[r:t] + (output,)] += parity * coefficient
    weights = [reduced_degree(a) for a in word[:-1]]
    for i in range(d - 1):
        parity = sign(sum(weights[:i]))
        for j in range(i + 1, d):
            for output, coefficient in category.mu_word(word[i:j]).items():
                result[word[:i] + (output,) + word[j:]] += \
                    parity * coefficient
    return category.normalize(Chain(result))


class TruncatedCC(ChainComplexZ):
    """
    The subcomplex of the cyclic bar complex spanned by words of length at
    most *max_length* whose objects lie in *objects*.
    """

    def __init__(self, category, max_length, objects=None):
        self.category = category
        self.max_length = max_length
        self.objects = tuple(objects if objects is not None
                             else category.objects)
        bases = defaultdict(list)
        for length in range(1, max_length + 1):
            for word in category.cyclic_words(length, self.objects):
                bases[hochschild_degree(word)].append(word)
        super().__init__(bases, boundary_matrices(bases, self.boundary),
                         ring=category.ring)
        log.debug('Truncated cyclic bar complex N=%d: %s', max_length,
                  {k: len(v) for k, v in sorted(bases.items())})

    def boundary(self, word):
        return bar_differential(self.category, word)


HochschildHomology = namedtuple(
    'HochschildHomology', ('max_length', 'groups', 'stable'))


def _inclusion_surjective(small, large, k):
    # every cycle of the larger truncation is homologous to one of the smaller
    columns = []
    for vector in kernel_basis(small.differential(k), small.ring):
        image = [0] * large.dimension(k)
        for label, value in zip(small.basis(k), vector):
            image[large.index(k, label)] += value
        columns.append(image)
    columns += [
        large.differential(k - 1).column(j)
        for j in range(large.dimension(k - 1))]
    A = IntMatrix.from_columns(columns, large.dimension(k))
    for z in kernel_basis(large.differential(k), large.ring):
        if not in_image(A, z, large.ring):
            return False
    return True


def hochschild_homology(category, max_length, degrees=None, objects=None):
    """
    Homology of the length ≤ *max_length* truncation in every degree of
    *degrees* (default: all degrees occurring in the truncation), together
    with a per-degree flag telling whether the homology agrees with that of
    the ``max_length + 1`` truncation via the inclusion.
    """
    small = TruncatedCC(category, max_length, objects)
    large = TruncatedCC(category, max_length + 1, objects)
    small.check()
    large.check()
    if degrees is None:
        degrees = small.degrees()
    groups = {}
    stable = {}
    for k in degrees:
        groups[k] = homology(small, k)
        stable[k] = groups[k] == homology(large, k) and \
            _inclusion_surjective(small, large, k)
        if not stable[k]:
            log.debug('HH_%d has not stabilized at N=%d', k, max_length)
    return HochschildHomology(max_length, groups, stable)


class GradedMap:
    """
    A linear map between two :class:`ChainComplexZ` instances raising the
    degree by *shift*. *image* maps a basis label of the source to a
    :class:`Chain` of basis labels of the target.
    """

    def __init__(self, source, target, shift, image, name=None):
        self.source = source
        self.target = target
        self.shift = shift
        self._image = image
        self.name = name

    def __call__(self, label):
        return self._image(label)

    def apply(self, chain):
        result = Chain()
        for label, coefficient in chain.items():
            result = result + coefficient * self(label)
        return result

    def matrix(self, k):
        columns = [self.target.vector(k + self.shift, self(label))
                   for label in self.source.basis(k)]
        return IntMatrix.from_columns(columns,
                                      self.target.dimension(k + self.shift))

    def compose(self, other, name=None):
        """``self ∘ other``."""
        return GradedMap(other.source, self.target, self.shift + other.shift,
                         lambda label: self.apply(other(label)), name)


def _commutator_column(f, k, label):
    target = f.target
    ring = target.ring
    forward = target.apply(k + f.shift, target.vector(k + f.shift, f(label)))
    boundary = f.source.apply(k, f.source.vector(k, Chain.of(label)))
    image = f.matrix(k + 1).apply(boundary)
    column = [a - sign(f.shift) * b for a, b in zip(forward, image)]
    if ring == Constants.RING_F2:
        column = [value % 2 for value in column]
    return Chain(zip(target.basis(k + f.shift + 1), column))


def verify_chain_map(f, shift=None, workers=1):
    """
    Checks ``d∘f − (−1)^shift f∘d = 0`` on every basis element of the
    source; failing basis elements are the witnesses.
    """
    if shift is not None and shift != f.shift:
        f = GradedMap(f.source, f.target, shift, f, f.name)
    items = [(k, label) for k in f.source.degrees()
             for label in f.source.basis(k)]
    residuals = parallel_map(lambda item: _commutator_column(f, *item),
                             items, workers)
    failures = [Violation(label, residual)
                for (_, label), residual in zip(items, residuals)
                if residual]
    return VerificationReport('chain-map', failures, checked=len(items),
                              details={'shift': f.shift})


def cc_of_delta_word(delta, word):
    """
    ``CC_*(Δ)`` of a single cyclic word: for every splitting ``r + s <= d−1``
    the component ``Δ^{r|1|s}`` eats ``a_{d−s}, …, a_{d−1}, a_d, a_1, …,
    a_r`` and the remaining letters are moved between the two tensor
    factors of the result.
    """
    word = tuple(word)
    d = len(word)
    degrees = [a.degree for a in word]
    n = delta.shift
    result = defaultdict(int)
    for r in range(d):
        for s in range(d - r):
            inputs = word[d - 1 - s:d - 1] + (word[-1],) + word[:r]
            middle = word[r:d - 1 - s]
            image = delta(inputs, s)
            if not image:
                continue
            base = diamond(degrees, r, s, n)
            middle_degrees = [a.degree for a in middle]
            for element, coefficient in image.items():
                parity = base + circ(element.x.degree, element.y.degree,
                                     middle_degrees)
                result[(element.x,) + middle + (element.y,)] += \
                    sign(parity) * coefficient
    return delta.category.normalize(Chain(result))


def cc_of_delta(delta, max_length, check=True):
    """
    The map ``CC_*(Δ)`` from the length ≤ *max_length* cyclic bar complex of
    the source objects into ``Y^r_K ⊗_B Y^l_K`` as a :class:`GradedMap` of
    degree n. Raises :class:`ChainMapViolation` if it does not commute with
    the differentials and *check* is set.
    """
    target_bimodule = delta.target
    source = TruncatedCC(delta.category, max_length, delta.source.objects)
    target = TensorComplex(target_bimodule.right, target_bimodule.left,
                           max_length, target_bimodule.objects)
    f = GradedMap(source, target, delta.shift,
                  lambda word: cc_of_delta_word(delta, word), 'CC(Δ)')
    if check:
        report = verify_chain_map(f)
        if not report.passed:
            violation = report.failures[0]
            raise ChainMapViolation('CC(Δ) is not a chain map',
                                    violation.witness, violation.residual)
    return f


def composition_map(tensor_complex):
    """
    ``mu_composition`` as a degree zero :class:`GradedMap` from a tensor
    complex of Yoneda modules of K into ``hom(K, K)``.
    """
    K = tensor_complex.left.base
    category = tensor_complex.category
    target = hom_complex(category, K, K)
    return GradedMap(tensor_complex, target, 0,
                     lambda word: mu_composition(category, word), 'μ')


def cc_composite(delta, max_length, check=True):
    """
    ``μ ∘ CC_*(Δ)``: cyclic words into ``hom(K, K)``, degree n.
    """
    f = cc_of_delta(delta, max_length, check=False)
    composite = composition_map(f.target).compose(f, 'μ∘CC(Δ)')
    if check:
        report = verify_chain_map(composite)
        if not report.passed:
            violation = report.failures[0]
            raise ChainMapViolation('μ∘CC(Δ) is not a chain map',
                                    violation.witness, violation.residual)
    return composite

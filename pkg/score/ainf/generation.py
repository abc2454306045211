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
Split-generation certificates.

The universal twisted complex ``U_K^N`` has one summand per word
``(a_1, …, a_k, p)`` with ``a_i`` morphisms of the subcategory B, ``p`` an
arrow from the last object into K and ``k <= N``. The summand is the first
object of the word, shifted by minus the degree of the word. Its differential
either peels ``a_1`` off the word or collapses a block of the word.

Collapse entries are identity morphisms. They are not taken from the units
declared on the category (which need only be cohomological units) but are
the strict identities of the Yoneda modules, adjoined to the category as
formal generators by :class:`ModuleIdentities`.
"""

import logging
from collections import defaultdict, namedtuple
from ._exceptions import (
    MissingUnit, NotACycle, MaurerCartanViolation, ClosednessViolation,
    UnknownObject, Unsolvable, RationalOnly)
from ._report import VerificationReport, Violation, describe
from .bimodule import (
    TensorComplex, yoneda_module, mu_composition, hom_complex, LEFT, RIGHT,
    tensor_word_degree, tensor_over_category)
from .cardy import HomotopyWitness, solve_homotopy
from .category import Chain, ZERO, apply_mu
from .constants import Constants
from .hochschild import bar_differential, cc_of_delta_word, hochschild_degree
from .linalg import IntMatrix, solve, in_image
from .signs import sign, reduced_degree


log = logging.getLogger(__name__)


def word_degree(word):
    """``deg p + Σ (deg a_i − 1)`` of a word ``(a_1, …, a_k, p)``."""
    return word[-1].degree + sum(a.degree - 1 for a in word[:-1])


class Summand(namedtuple('Summand', ('word', 'obj', 'shift'))):
    """
    A summand ``obj[shift]`` of a twisted complex, labelled by its *word*.
    """
    __slots__ = ()

    @property
    def length(self):
        return len(self.word) - 1

    @property
    def order(self):
        # D strictly decreases this key
        return (self.length, self.shift)

    @property
    def ref(self):
        return describe(self.word)


class TwistedComplex:
    """
    A twisted complex over *category*: *summands* and the differential
    *entries*, a mapping ``(source summand, target summand) → Chain`` of
    morphisms between the underlying objects.
    """

    def __init__(self, category, summands, entries):
        self.category = category
        self.summands = tuple(summands)
        self.entries = {key: chain for key, chain in entries.items() if chain}
        position = {summand: i for i, summand in enumerate(self.summands)}
        self._outgoing = defaultdict(list)
        for (source, target), chain in sorted(
                self.entries.items(),
                key=lambda item: (position[item[0][0]],
                                  position[item[0][1]])):
            self._outgoing[source].append((target, chain))

    def __len__(self):
        return len(self.summands)

    def entry(self, source, target):
        return self.entries.get((source, target), ZERO)

    def outgoing(self, source):
        return self._outgoing.get(source, [])

    def with_entry(self, source, target, chain):
        entries = dict(self.entries)
        entries[(source, target)] = chain
        return TwistedComplex(self.category, self.summands, entries)

    def summand(self, word):
        for summand in self.summands:
            if summand.word == tuple(word):
                return summand
        raise KeyError(describe(tuple(word)))

    def paths(self, source, max_steps):
        """
        Yields ``(entries, end)`` for every path of at least one step and at
        most *max_steps* steps starting at *source*.
        """
        def walk(current, chains):
            if len(chains) == max_steps:
                return
            for target, chain in self.outgoing(current):
                extended = chains + (chain,)
                yield extended, target
                yield from walk(target, extended)

        yield from walk(source, ())

    def check_filtration(self):
        failures = [Violation((source, target), chain)
                    for (source, target), chain in self.entries.items()
                    if not target.order < source.order]
        return VerificationReport('filtration', failures,
                                  checked=len(self.entries))

    def maurer_cartan_residuals(self):
        """
        ``Σ_d μ^d(D, …, D)`` per pair of summands, nonzero pairs only.
        """
        d_max = self.category.d_max
        residuals = {}
        for source in self.summands:
            totals = defaultdict(Chain)
            for chains, target in self.paths(source, d_max):
                totals[target] = totals[target] + \
                    apply_mu(self.category, len(chains), chains)
            for target, chain in totals.items():
                chain = self.category.normalize(chain)
                if chain:
                    residuals[(source, target)] = chain
        return residuals

    def verify_maurer_cartan(self):
        report = VerificationReport('maurer-cartan', [
            Violation(key, chain)
            for key, chain in self.maurer_cartan_residuals().items()],
            checked=len(self.summands))
        return report

    def check(self):
        report = self.verify_maurer_cartan()
        if not report.passed:
            violation = report.failures[0]
            raise MaurerCartanViolation(
                'Twisted complex violates the Maurer-Cartan equation at %s'
                % describe(violation.witness), violation.witness,
                violation.residual)


class Identity(namedtuple('Identity', ('obj',))):
    """
    The identity endomorphism of the Yoneda module of *obj*.
    """
    __slots__ = ()

    source = property(lambda self: self.obj)
    target = property(lambda self: self.obj)
    degree = 0
    name = 'id'

    @property
    def ref(self):
        return 'id_%s' % (self.obj,)


class ModuleIdentities:
    """
    *category* with a strict identity :class:`Identity` adjoined at every
    object: ``μ²(id, x) = x``, ``μ²(x, id) = (−1)^{deg x} x`` and every
    other product involving an identity vanishes. All other attributes are
    those of *category*.
    """

    def __init__(self, category):
        self.category = category

    def __getattr__(self, name):
        return getattr(self.category, name)

    @property
    def d_max(self):
        return max(self.category.d_max, 2)

    def identity(self, obj):
        return Identity(obj)

    def mu_word(self, word):
        if not any(isinstance(x, Identity) for x in word):
            return self.category.mu_word(word)
        if len(word) != 2:
            return ZERO
        first, second = word
        if isinstance(first, Identity):
            return Chain.of(second)
        return Chain.of(first, sign(first.degree))


def _unit(category, obj):
    try:
        return category.units[obj]
    except KeyError:
        raise MissingUnit('No unit given for object %r' % (obj,))


def _right_yoneda_act(category, block):
    return sign(sum(reduced_degree(b) for b in block[:-1]) + 1) * \
        category.mu_word(block)


def build_universal_complex(category, objects, K, max_length, check=True):
    """
    Builds ``U_K^N`` over the subcategory on *objects*; *max_length* is N.
    Collapse entries are multiples of the module identity of the first
    object, so no unit of the category is needed.
    Raises :class:`MaurerCartanViolation` if *check* is set and the result
    is not a twisted complex.
    """
    if K not in category.objects:
        raise UnknownObject('Unknown object %r' % (K,))
    unital = ModuleIdentities(category)
    objects = tuple(obj for obj in category.objects if obj in set(objects))
    summands = []
    by_word = {}
    for length in range(max_length + 1):
        for obj in objects:
            if length:
                prefixes = category.composable_words(length, objects,
                                                     start=obj)
            else:
                prefixes = [()]
            for prefix in prefixes:
                end = prefix[-1].target if prefix else obj
                for p in category.hom_space(end, K):
                    word = prefix + (p,)
                    summand = Summand(word, obj, -word_degree(word))
                    summands.append(summand)
                    by_word[word] = summand
    entries = defaultdict(Chain)
    for summand in summands:
        word = summand.word
        if summand.length:
            first = word[0]
            target = by_word[word[1:]]
            entries[(summand, target)] += Chain.of(
                first, sign(reduced_degree(first)))
        weights = [reduced_degree(a) for a in word[:-1]]
        n = len(word)
        for i in range(n):
            parity = sign(sum(weights[:i]))
            for j in range(i + 1, n + 1):
                block = word[i:j]
                if j == n:
                    inner = _right_yoneda_act(category, block)
                else:
                    inner = category.mu_word(block)
                if not inner:
                    continue
                identity = Chain.of(unital.identity(summand.obj))
                for output, coefficient in inner.items():
                    target = by_word[word[:i] + (output,) + word[j:]]
                    entries[(summand, target)] += \
                        (parity * coefficient) * identity
    complex_ = TwistedComplex(
        unital, summands,
        {key: category.normalize(chain) for key, chain in entries.items()})
    log.debug('U_%s^%d has %d summands and %d nonzero entries', K,
              max_length, len(summands), len(complex_.entries))
    if check:
        complex_.check()
    return complex_


class EvaluationMorphism:
    """
    The closed morphism ``U_K^N → Y^r_K``; its only nonzero components sit on
    the summands ``(p,)`` of word length zero and are ``p`` itself.
    """

    def __init__(self, complex_, K):
        self.complex = complex_
        self.K = K
        self.components = {
            summand: Chain.of(summand.word[0])
            for summand in complex_.summands if summand.length == 0}

    def component(self, summand):
        return self.components.get(summand, ZERO)

    def residuals(self):
        """
        ``Σ μ^{j+1}(D, …, D, ev)`` per summand, nonzero ones only.
        """
        category = self.complex.category
        d_max = category.d_max
        residuals = {}
        for source in self.complex.summands:
            total = Chain()
            if source in self.components and d_max >= 1:
                total = total + apply_mu(category, 1,
                                         (self.components[source],))
            for chains, target in self.complex.paths(source,
                                                     max(d_max - 1, 0)):
                if target not in self.components:
                    continue
                total = total + apply_mu(
                    category, len(chains) + 1,
                    chains + (self.components[target],))
            total = category.normalize(total)
            if total:
                residuals[source] = total
        return residuals

    def check(self):
        residuals = self.residuals()
        if residuals:
            source = next(s for s in self.complex.summands if s in residuals)
            raise ClosednessViolation(
                'Evaluation morphism is not closed on %s' % source.ref,
                source, residuals[source])
        return self


def evaluation_morphism(complex_, K):
    """
    The evaluation morphism of ``U_K^N``, checked for closedness.
    """
    return EvaluationMorphism(complex_, K).check()


def verify_cohomological_unit(category, K, unit, objects=None):
    """
    Checks that left multiplication by *unit* on ``hom(K, L)`` and right
    multiplication on ``hom(L, K)`` induce the identity on homology for every
    object L. Raises :class:`NotACycle` unless *unit* is a degree zero cycle.
    """
    if K not in category.objects:
        raise UnknownObject('Unknown object %r' % (K,))
    unit = unit if isinstance(unit, Chain) else Chain(unit)
    for generator in unit:
        if generator.degree != 0 or \
                (generator.source, generator.target) != (K, K):
            raise NotACycle('%s is not a degree zero endomorphism of %s' %
                            (generator.ref, K))
    if apply_mu(category, 1, (unit,)):
        raise NotACycle('μ¹ of the unit candidate of %s is not zero' % (K,))
    objects = objects if objects is not None else category.objects
    failures = []
    checked = 0
    for obj in objects:
        for side in (LEFT, RIGHT):
            if side == LEFT:
                complex_ = hom_complex(category, K, obj)
            else:
                complex_ = hom_complex(category, obj, K)
            for k in complex_.degrees():
                for vector in complex_.cycles(k):
                    checked += 1
                    z = Chain(zip(complex_.basis(k), vector))
                    if side == LEFT:
                        image = apply_mu(category, 2, (unit, z))
                        expected = z
                    else:
                        image = apply_mu(category, 2, (z, unit))
                        expected = sign(k) * z
                    difference = category.normalize(image - expected)
                    if difference and not in_image(
                            complex_.differential(k - 1),
                            complex_.vector(k, difference), category.ring):
                        failures.append(Violation(
                            (obj, side, z.describe()), difference))
    return VerificationReport('cohomological-unit', failures, checked=checked,
                              details={'object': str(K)})


class GenerationCertificate:
    """
    Result of :func:`generation_test`. When the *verdict* is
    ``generated``, *tau* is a degree zero cycle of ``Y^r_K ⊗_B Y^l_K`` and
    *h* a degree −1 endomorphism of K with ``μ(τ) − e_K = μ¹(h)``;
    *complex* is the universal twisted complex.
    """

    def __init__(self, verdict, K, objects, max_length, unit, tau=None,
                 h=None, complex_=None):
        self.verdict = verdict
        self.K = K
        self.objects = tuple(objects)
        self.max_length = max_length
        self.unit = unit
        self.tau = tau if tau is not None else Chain()
        self.h = h if h is not None else Chain()
        self.complex = complex_

    @property
    def generated(self):
        return self.verdict == Constants.VERDICT_GENERATED

    def to_dict(self):
        """
        The certificate file of :mod:`score.ainf.fileformat`: generators by
        reference, tensor words as lists of references.
        """
        return {
            'format': Constants.FORMAT_VERSION,
            'verdict': self.verdict,
            'object': str(self.K),
            'subcategory': [str(obj) for obj in self.objects],
            'max_length': self.max_length,
            'unit': _terms_to_list(self.unit),
            'tau': _terms_to_list(self.tau),
            'h': _terms_to_list(self.h),
            'summands': len(self.complex) if self.complex else 0,
        }


def _terms_to_list(chain):
    def refs(key):
        ref = getattr(key, 'ref', None)
        return ref if ref is not None else [x.ref for x in key]

    return sorted([refs(key), value] for key, value in chain.items())


def _generation_system(category, tensor, K, unit):
    hom = hom_complex(category, K, K)
    taus = tensor.basis(0)
    homotopies = hom.basis(-1)
    cycle_rows = tensor.dimension(1)
    unit_rows = hom.dimension(0)
    columns = []
    for word in taus:
        boundary = tensor.vector(1, tensor.boundary(word))
        composite = hom.vector(0, mu_composition(category, word))
        columns.append(boundary + composite)
    for generator in homotopies:
        mu1 = category.mu_word((generator,))
        columns.append([0] * cycle_rows + [-v for v in hom.vector(0, mu1)])
    A = IntMatrix.from_columns(columns, cycle_rows + unit_rows)
    b = [0] * cycle_rows + hom.vector(0, unit)
    return A, b, taus, homotopies


def generation_test(category, objects, K, max_length, unit=None):
    """
    Searches for a degree zero cycle τ of ``Y^r_K ⊗_B Y^l_K`` (words of
    length at most *max_length*) and ``h ∈ hom(K, K)`` of degree −1 with
    ``μ(τ) − e_K = μ¹(h)`` by solving a single linear system over the
    coefficient ring of the category.

    Only K needs a unit: *unit*, or the unit declared on the category. The
    verdict is ``generated`` only once the tensor complex squares to zero
    and the universal complex carries a closed evaluation morphism;
    otherwise it is ``fail``.
    """
    if unit is None:
        unit = _unit(category, K)
    unit = unit if isinstance(unit, Chain) else Chain(unit)
    objects = tuple(obj for obj in category.objects if obj in set(objects))
    right = yoneda_module(category, K, RIGHT, objects)
    left = yoneda_module(category, K, LEFT, objects)
    tensor = tensor_over_category(right, left, max_length, objects)
    A, b, taus, homotopies = _generation_system(category, tensor, K, unit)
    try:
        x = solve(A, b, category.ring)
    except RationalOnly:
        log.warning('Unit of %s is hit over Q but not over Z at N=%d', K,
                    max_length)
        return GenerationCertificate(Constants.VERDICT_REFUTED, K, objects,
                                     max_length, unit)
    except Unsolvable:
        log.debug('Unit of %s not hit at N=%d', K, max_length)
        return GenerationCertificate(Constants.VERDICT_INCONCLUSIVE, K,
                                     objects, max_length, unit)
    tau = category.normalize(Chain(zip(taus, x[:len(taus)])))
    h = category.normalize(Chain(zip(homotopies, x[len(taus):])))
    return certify(category, objects, K, max_length, unit, tau, h)


def certify(category, objects, K, max_length, unit, tau, h):
    """
    Attaches ``U_K^N`` to a solution ``(τ, h)``. The certificate is
    ``generated`` if the universal complex satisfies Maurer-Cartan and its
    evaluation morphism is closed, ``fail`` otherwise.
    """
    complex_ = build_universal_complex(category, objects, K, max_length,
                                       check=False)
    report = VerificationReport.combine('universal-complex', [
        complex_.verify_maurer_cartan(), _closedness(complex_, K)])
    if not report.passed:
        log.warning('U_%s^%d does not carry a closed evaluation: %s', K,
                    max_length, describe(report.failures[0].witness))
        return GenerationCertificate(Constants.VERDICT_FAIL, K, objects,
                                     max_length, unit, tau, h, complex_)
    return GenerationCertificate(Constants.VERDICT_GENERATED, K, objects,
                                 max_length, unit, tau, h, complex_)


def generation_from_open_closed(data, delta, sigma, max_length, unit=None,
                                H=None):
    """
    Derives a certificate for ``data.K`` from a cycle σ of the truncated
    cyclic bar complex (words of length at most *max_length*) whose image
    ``OC(σ)`` is sent by CO to the unit class of ``hom(K, K)``.

    τ is ``CC(Δ)(σ)``. On a cycle the homotopy equation reads
    ``μ(τ) = CO(OC(σ)) − (−1)^n μ¹H(σ)``, so ``h = g − (−1)^n H(σ)`` for
    any g with ``μ¹(g) = CO(OC(σ)) − e_K``. The homotopy *H* is solved for
    unless given.

    The verdict is ``inconclusive`` if there is no homotopy or no g,
    ``refuted-at-bound`` if either exists over ℚ only, and ``generated``
    only if the resulting certificate replays.
    """
    category = data.category
    K = data.K
    n = data.n
    if unit is None:
        unit = _unit(category, K)
    unit = unit if isinstance(unit, Chain) else Chain(unit)
    sigma = sigma if isinstance(sigma, Chain) else Chain(sigma)
    objects = tuple(obj for obj in category.objects
                    if obj in set(delta.source.objects))
    # interior letters of CC(Δ)(σ) number at most N−1
    bound = max(max_length - 1, 0)
    boundary = Chain()
    for word, coefficient in sigma.items():
        if len(word) > max_length:
            raise NotACycle('%s is longer than %d' % (describe(word),
                                                      max_length))
        if hochschild_degree(word) != -n:
            raise NotACycle('%s has degree %d, expected %d' % (
                describe(word), hochschild_degree(word), -n))
        boundary = boundary + coefficient * bar_differential(category, word)
    boundary = category.normalize(boundary)
    if boundary:
        raise NotACycle('b(σ) = %s' % boundary)
    if H is None:
        try:
            H = solve_homotopy(data, delta, max_length)
        except RationalOnly:
            log.warning('Cardy homotopy for %s exists over Q only at N=%d',
                        K, max_length)
            return GenerationCertificate(Constants.VERDICT_REFUTED, K,
                                         objects, bound, unit)
        except Unsolvable:
            log.debug('No Cardy homotopy for %s at N=%d', K, max_length)
            return GenerationCertificate(Constants.VERDICT_INCONCLUSIVE, K,
                                         objects, bound, unit)
    elif not isinstance(H, HomotopyWitness):
        H = HomotopyWitness(H)
    tau = Chain()
    closed = Chain()
    for word, coefficient in sigma.items():
        tau = tau + coefficient * Chain(cc_of_delta_word(delta, word))
        closed = closed + coefficient * data.open_closed(word)
    tau = category.normalize(tau)
    target = category.normalize(data.closed_open_chain(closed) - unit)
    hom = hom_complex(category, K, K)
    try:
        # the hom complex differential is −μ¹
        x = solve(hom.differential(-1), hom.vector(0, -target),
                  category.ring)
    except RationalOnly:
        log.warning('CO(OC(σ)) hits the unit of %s over Q only', K)
        return GenerationCertificate(Constants.VERDICT_REFUTED, K, objects,
                                     bound, unit)
    except Unsolvable:
        log.debug('CO(OC(σ)) is not cohomologous to the unit of %s', K)
        return GenerationCertificate(Constants.VERDICT_INCONCLUSIVE, K,
                                     objects, bound, unit)
    g = Chain(zip(hom.basis(-1), x))
    h = category.normalize(g - sign(n) * H.apply(sigma))
    certificate = certify(category, objects, K, bound, unit, tau, h)
    if certificate.verdict != Constants.VERDICT_GENERATED:
        return certificate
    report = replay(category, certificate)
    if not report.passed:
        log.warning('Certificate from σ does not replay: %s',
                    describe(report.failures[0].witness))
        return GenerationCertificate(Constants.VERDICT_FAIL, K, objects,
                                     bound, unit, tau, h, certificate.complex)
    return certificate


def _closedness(complex_, K):
    evaluation = EvaluationMorphism(complex_, K)
    return VerificationReport('closedness', [
        Violation(summand, chain)
        for summand, chain in evaluation.residuals().items()],
        checked=len(complex_.summands))


def replay(category, certificate):
    """
    Re-checks a ``generated`` certificate from scratch: τ is a cycle of the
    tensor complex, ``μ(τ) − e_K − μ¹(h)`` vanishes, the universal complex
    satisfies Maurer-Cartan and its evaluation morphism is closed. The unit
    of the certificate must be a cohomological unit of K.
    """
    K = certificate.K
    objects = certificate.objects
    try:
        reports = [verify_cohomological_unit(category, K, certificate.unit)]
    except NotACycle as e:
        reports = [VerificationReport('cohomological-unit',
                                      [Violation(K, str(e))], checked=1)]
    right = yoneda_module(category, K, RIGHT, objects)
    left = yoneda_module(category, K, LEFT, objects)
    tensor = TensorComplex(right, left, certificate.max_length, objects)
    boundary = Chain()
    for word, coefficient in certificate.tau.items():
        if tensor_word_degree(word) != 0:
            reports.append(VerificationReport(
                'tau-degree', [Violation(word, Chain.of(word, coefficient))],
                checked=1))
        boundary = boundary + coefficient * tensor.boundary(word)
    boundary = category.normalize(boundary)
    reports.append(VerificationReport(
        'tau-cycle', [Violation(certificate.tau, boundary)] if boundary
        else [], checked=1))
    residual = category.normalize(
        mu_composition(category, certificate.tau) - certificate.unit -
        apply_mu(category, 1, (certificate.h,)))
    reports.append(VerificationReport(
        'unit-factorization', [Violation(certificate.tau, residual)]
        if residual else [], checked=1))
    complex_ = build_universal_complex(category, objects, K,
                                       certificate.max_length, check=False)
    reports.append(complex_.verify_maurer_cartan())
    reports.append(_closedness(complex_, K))
    return VerificationReport.combine('replay', reports)

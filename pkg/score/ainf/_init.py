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

import logging
import re
import time
from score.init import ConfiguredModule, parse_bool
from ._exceptions import (
    SchemaError, NotAComplex, NotACycle, NoSolution, NoIntegralSolution)
from ._report import Report, VerificationReport, Violation
from .bimodule import diagonal_bimodule, verify_bimodule, verify_bimodule_hom
from .cardy import (
    solve_homotopy, verify_homotopy_equation, verify_cardy_on_homology)
from .category import verify_ainf, verify_leibniz
from .constants import Constants
from .fileformat import load, load_certificate, dump_certificate, digest
from .generation import (
    generation_test, replay, verify_cohomological_unit)
from .hochschild import hochschild_homology, verify_chain_map
from .strata import (
    DEFAULT_EQUATIONS, parse_space, dimension, enumerate_codim1, facet_count,
    strata_term_bijection)


log = logging.getLogger(__name__)
defaults = {
    'max_length': 3,
    'degrees': None,
    'ring': None,
    'bimodule_bound': 4,
    'ainf_arity': 4,
    'workers': 1,
    'timing': False,
}


def parse_degrees(value):
    """
    Parses ``a..b`` (inclusive) or a single degree ``k`` into a tuple of
    degrees. ``None`` stays ``None``.
    """
    if value in (None, 'None', ''):
        return None
    if isinstance(value, (tuple, list, range)):
        return tuple(int(k) for k in value)
    match = re.match(r'^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$', str(value))
    if not match:
        raise ValueError('Cannot parse degree range %r' % (value,))
    first = int(match.group(1))
    last = int(match.group(2)) if match.group(2) is not None else first
    if last < first:
        raise ValueError('Empty degree range %r' % (value,))
    return tuple(range(first, last + 1))


def init(confdict, ctx=None):
    """
    Initializes this module acoording to :ref:`our module initialization
    guidelines <module_initialization>` with the following configuration keys:

    :confkey:`max_length` :faint:`[default=3]`
        The truncation bound N: bar-type complexes only contain words of at
        most this many morphisms.

    :confkey:`degrees` :faint:`[default=None]`
        A degree range ``a..b`` restricting homology computations. The
        default computes every degree present in the truncation.

    :confkey:`ring` :faint:`[default=None]`
        Either ``Z`` or ``F2``. Overrides the coefficient ring declared in
        loaded category files.

    :confkey:`bimodule_bound` :faint:`[default=4]`
        Bimodule and bimodule morphism equations are checked on all words
        with at most this many algebra inputs.

    :confkey:`ainf_arity` :faint:`[default=4]`
        The A∞ relations are checked on all composable words up to this
        length.

    :confkey:`workers` :faint:`[default=1]`
        Number of threads used to check independent words. Reports do not
        depend on this value.

    :confkey:`timing` :faint:`[default=False]`
        Whether reports carry the wall-clock time of the computation. Off by
        default, so that identical inputs give identical reports.
    """
    conf = dict(defaults.items())
    conf.update(confdict)
    ring = conf['ring']
    if ring in (None, 'None', ''):
        ring = None
    elif ring not in Constants.RINGS:
        raise ValueError('Unknown ring %r, expected one of %s' %
                         (ring, ', '.join(Constants.RINGS)))
    c = ConfiguredAinfModule(
        max_length=int(conf['max_length']),
        degrees=parse_degrees(conf['degrees']),
        ring=ring,
        bimodule_bound=int(conf['bimodule_bound']),
        ainf_arity=int(conf['ainf_arity']),
        workers=int(conf['workers']),
        timing=parse_bool(conf['timing']))
    c.ctx_conf = ctx
    return c


def _verdict(sections):
    if all(section.passed for section in sections):
        return Constants.VERDICT_PASS
    return Constants.VERDICT_FAIL


def _failure(check, witness, message):
    return VerificationReport(check, [Violation(witness, message)],
                              checked=1)


class ConfiguredAinfModule(ConfiguredModule):
    """
    This module's :class:`configuration class
    <score.init.ConfiguredModule>`. Every command method takes a loaded
    :class:`score.ainf.fileformat.CategoryFile` and returns a
    :class:`score.ainf._report.Report`.
    """

    def __init__(self, max_length, degrees, ring, bimodule_bound, ainf_arity,
                 workers, timing):
        super().__init__(__package__)
        self.max_length = max_length
        self.degrees = degrees
        self.ring = ring
        self.bimodule_bound = bimodule_bound
        self.ainf_arity = ainf_arity
        self.workers = workers
        self.timing = timing

    def load(self, path):
        return load(path, self.ring)

    def _report(self, command, digest_, verdict, sections, results, started):
        timing = time.perf_counter() - started if self.timing else None
        report = Report(command, digest_, verdict, sections, results, timing)
        log.debug('%s finished with verdict %s', command, verdict)
        return report

    def validate(self, document):
        """
        The A∞ relations, the Leibniz rule, the diagonal bimodule, every
        declared unit and, if present, the coproduct and the chain map
        property of OC and CO.
        """
        started = time.perf_counter()
        category = document.category
        sections = [
            verify_ainf(category, self.ainf_arity, self.workers),
            verify_leibniz(category),
            verify_bimodule(diagonal_bimodule(category), self.bimodule_bound,
                            self.workers),
        ]
        for obj in category.objects:
            unit = category.units.get(obj)
            if not unit:
                continue
            try:
                sections.append(
                    verify_cohomological_unit(category, obj, unit))
            except NotACycle as e:
                sections.append(_failure('cohomological-unit', obj, str(e)))
        if document.delta is not None:
            sections.append(verify_bimodule_hom(
                document.delta, self.bimodule_bound, self.workers))
        if document.has_closed_sector and document.K is not None:
            data = document.open_closed_data()
            sections.append(verify_chain_map(data.oc_map(self.max_length),
                                             workers=self.workers))
            sections.append(verify_chain_map(data.co_map(),
                                             workers=self.workers))
        return self._report('validate', document.digest, _verdict(sections),
                            sections, {}, started)

    def hochschild(self, document):
        """
        Hochschild homology of the truncated cyclic bar complex, with a
        stabilization flag per degree.
        """
        started = time.perf_counter()
        category = document.category
        try:
            result = hochschild_homology(category, self.max_length,
                                         self.degrees)
        except NotAComplex as e:
            section = _failure('bar-complex', e.degree, str(e))
            return self._report('hh', document.digest,
                                Constants.VERDICT_FAIL, [section], {},
                                started)
        results = {
            'max_length': result.max_length,
            'groups': {str(k): group.format(category.ring)
                       for k, group in result.groups.items()},
            'stable': {str(k): flag for k, flag in result.stable.items()},
        }
        return self._report('hh', document.digest, Constants.VERDICT_PASS,
                            [], results, started)

    def generate(self, document, certificate_path=None):
        """
        Runs the generation test for the file's ``object`` against its
        ``subcategory`` and replays a positive certificate. The certificate
        is also written to *certificate_path*, if given.
        """
        started = time.perf_counter()
        category = document.category
        if document.K is None:
            raise SchemaError('$', 'generate needs a top level "object"')
        objects = document.subcategory or category.objects
        certificate = generation_test(category, objects, document.K,
                                      self.max_length)
        sections = []
        verdict = certificate.verdict
        if certificate.generated:
            check = replay(category, certificate)
            sections.append(check)
            if not check.passed:
                verdict = Constants.VERDICT_FAIL
        if certificate_path is not None:
            dump_certificate(certificate, certificate_path)
            log.info('Wrote certificate to %s', certificate_path)
        return self._report('generate', document.digest, verdict, sections,
                            {'certificate': certificate.to_dict()}, started)

    def replay(self, document, certificate_path):
        """
        Re-checks a certificate file written by :meth:`generate` against the
        category of *document*.
        """
        started = time.perf_counter()
        category = document.category
        certificate = load_certificate(certificate_path, category)
        if not certificate.generated:
            raise SchemaError('$.verdict', 'only generated certificates can '
                              'be replayed, got %s' % certificate.verdict)
        check = replay(category, certificate)
        return self._report('replay', document.digest, _verdict([check]),
                            [check], {'certificate': certificate.to_dict()},
                            started)

    def cardy(self, document):
        """
        Checks the closed sector, finds (or checks the supplied) homotopy H
        and compares both sides of the Cardy relation on homology.
        """
        started = time.perf_counter()
        delta = document.delta
        if delta is None or not document.has_closed_sector or \
                document.K is None or document.n is None:
            raise SchemaError('$', 'cardy needs "object", "n", "coproduct" '
                              'and "closed"')
        data = document.open_closed_data()
        N = self.max_length
        sections = [
            verify_bimodule_hom(delta, self.bimodule_bound, self.workers),
            verify_chain_map(data.oc_map(N), workers=self.workers),
            verify_chain_map(data.co_map(), workers=self.workers),
        ]
        results = {}
        H = document.homotopy
        if H is None:
            try:
                H = solve_homotopy(data, delta, N)
            except NoIntegralSolution as e:
                results['homotopy'] = 'rational-only'
                sections.append(_failure('homotopy-solve', 'H', str(e)))
            except NoSolution as e:
                results['homotopy'] = 'none'
                sections.append(_failure('homotopy-solve', 'H', str(e)))
            else:
                results['homotopy'] = 'solved'
        else:
            results['homotopy'] = 'given'
        if H is not None:
            sections.append(verify_homotopy_equation(data, delta, H, N))
            results['homotopy_components'] = len(H)
        sections.append(verify_cardy_on_homology(data, delta, N,
                                                 self.degrees))
        return self._report('cardy', document.digest, _verdict(sections),
                            sections, results, started)

    def strata(self, text, include_strip_breaking=False):
        """
        Lists the codimension one strata of the space named by *text*,
        compares their number with the closed form and, where an equation
        belongs to the space, matches strata with its terms.
        """
        started = time.perf_counter()
        space = parse_space(text)
        strata = enumerate_codim1(space, include_strip_breaking)
        expected = facet_count(space, include_strip_breaking)
        count = VerificationReport(
            'facet-count',
            [] if expected == len(strata) else
            [Violation(str(space), 'closed form gives %d' % expected)],
            checked=1, details={'enumerated': len(strata),
                                'closed_form': expected})
        sections = [count]
        if space.kind in DEFAULT_EQUATIONS:
            sections.append(strata_term_bijection(space, None,
                                                  include_strip_breaking))
        results = {
            'space': str(space),
            'dimension': dimension(space),
            'strata': [stratum.ref for stratum in strata],
        }
        return self._report('strata', digest(str(space)), _verdict(sections),
                            sections, results, started)

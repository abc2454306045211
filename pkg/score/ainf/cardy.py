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
Chain level checks of the Cardy relation

    (−1)^n μ¹∘H + H∘b + μ∘CC(Δ) − CO∘OC = 0

for user supplied maps ``OC`` (cyclic words into a closed complex S, degree
n), ``CO`` (S into ``hom(K, K)``, degree 0) and a homotopy ``H`` (cyclic
words into ``hom(K, K)``, degree n−1).
"""

import logging
from collections import defaultdict
from ._exceptions import (
    ChainMapViolation, NoSolution, NoIntegralSolution, Unsolvable,
    RationalOnly)
from ._report import VerificationReport, Violation
from .bimodule import hom_complex, mu_composition
from .category import Chain, apply_mu
from .hochschild import (
    TruncatedCC, GradedMap, bar_differential, cc_of_delta_word,
    verify_chain_map)
from .linalg import IntMatrix, solve, in_image
from .signs import sign, cardy


log = logging.getLogger(__name__)


def _as_callable(table):
    if table is None:
        return lambda label: Chain()
    if callable(table):
        return table
    table = {key: value if isinstance(value, Chain) else Chain(value)
             for key, value in table.items()}
    return lambda label: table.get(label, Chain())


class OpenClosedData:
    """
    The closed sector: the complex *closed* standing in for symplectic
    cochains, the open-closed map *open_closed* and the closed-open map
    *closed_open*, each given as a mapping or a callable on basis labels.
    """

    def __init__(self, category, K, closed, open_closed, closed_open, n,
                 objects=None):
        self.category = category
        self.K = K
        self.closed = closed
        self.n = n
        self.objects = tuple(objects if objects is not None
                             else category.objects)
        self._open_closed = _as_callable(open_closed)
        self._closed_open = _as_callable(closed_open)

    def open_closed(self, word):
        return self._open_closed(tuple(word))

    def closed_open(self, label):
        return self._closed_open(label)

    def cyclic_complex(self, max_length):
        return TruncatedCC(self.category, max_length, self.objects)

    def oc_map(self, max_length):
        return GradedMap(self.cyclic_complex(max_length), self.closed,
                         self.n, self.open_closed, 'OC')

    def co_map(self):
        return GradedMap(self.closed, hom_complex(self.category, self.K,
                                                  self.K),
                         0, self.closed_open, 'CO')

    def verify(self, max_length):
        """
        Raises :class:`ChainMapViolation` unless OC and CO commute with the
        differentials.
        """
        for f in (self.oc_map(max_length), self.co_map()):
            report = verify_chain_map(f)
            if not report.passed:
                violation = report.failures[0]
                raise ChainMapViolation('%s is not a chain map' % f.name,
                                        violation.witness, violation.residual)
        return self

    def closed_open_chain(self, chain):
        result = Chain()
        for label, coefficient in chain.items():
            result = result + coefficient * self.closed_open(label)
        return result


class HomotopyWitness:
    """
    A map ``H`` from cyclic words to ``hom(K, K)`` of degree n−1.
    """

    def __init__(self, table=None):
        self.table = {}
        for word, value in (table or {}).items():
            value = value if isinstance(value, Chain) else Chain(value)
            if value:
                self.table[tuple(word)] = value

    def __call__(self, word):
        return self.table.get(tuple(word), Chain())

    def apply(self, chain):
        result = Chain()
        for word, coefficient in chain.items():
            result = result + coefficient * self(word)
        return result

    def __len__(self):
        return len(self.table)


def _composite(data, delta, word):
    # μ∘CC(Δ)(word) − CO∘OC(word)
    category = data.category
    return mu_composition(category, cc_of_delta_word(delta, word)) - \
        data.closed_open_chain(data.open_closed(word))


def homotopy_residual(data, delta, H, word):
    category = data.category
    bar = bar_differential(category, word)
    residual = sign(data.n) * apply_mu(category, 1, (H(word),)) + \
        H.apply(bar) + _composite(data, delta, word)
    return category.normalize(residual)


def verify_homotopy_equation(data, delta, H, max_length):
    """
    Checks the homotopy equation on every cyclic word of length at most
    *max_length*; failing words are the witnesses.
    """
    complex_ = data.cyclic_complex(max_length)
    failures = []
    checked = 0
    for k in complex_.degrees():
        for word in complex_.basis(k):
            checked += 1
            residual = homotopy_residual(data, delta, H, word)
            if residual:
                failures.append(Violation(word, residual))
    return VerificationReport('homotopy-equation', failures, checked=checked,
                              details={'n': data.n})


def solve_homotopy(data, delta, max_length):
    """
    Solves the homotopy equation for H on the length ≤ *max_length*
    truncation. Raises :class:`NoIntegralSolution` if only rational
    solutions exist and :class:`NoSolution` if there are none.
    """
    category = data.category
    n = data.n
    complex_ = data.cyclic_complex(max_length)
    hom = hom_complex(category, data.K, data.K)
    words = [(k, word) for k in complex_.degrees()
             for word in complex_.basis(k)]
    columns = [(word, g) for k, word in words
               for g in hom.basis(k + n - 1)]
    rows = [(word, g) for k, word in words for g in hom.basis(k + n)]
    row_index = {row: i for i, row in enumerate(rows)}
    entries = [[0] * len(columns) for _ in rows]
    for j, (word, g) in enumerate(columns):
        for output, coefficient in category.mu_word((g,)).items():
            entries[row_index[(word, output)]][j] += sign(n) * coefficient
    by_word = defaultdict(list)
    for j, (word, g) in enumerate(columns):
        by_word[word].append((j, g))
    for k, word in words:
        for other, coefficient in complex_.boundary(word).items():
            for j, g in by_word.get(other, ()):
                entries[row_index[(word, g)]][j] += coefficient
    b = [0] * len(rows)
    for k, word in words:
        for g, value in (-_composite(data, delta, word)).items():
            b[row_index[(word, g)]] += value
    A = IntMatrix(len(rows), len(columns), entries)
    try:
        x = solve(A, b, category.ring)
    except RationalOnly as e:
        raise NoIntegralSolution(
            'Homotopy exists over Q but not over Z at N=%d' % max_length) \
            from e
    except Unsolvable as e:
        raise NoSolution('No homotopy at N=%d' % max_length) from e
    table = defaultdict(Chain)
    for (word, g), value in zip(columns, x):
        if value:
            table[word] = table[word] + Chain.of(g, value)
    H = HomotopyWitness({word: category.normalize(chain)
                         for word, chain in table.items()})
    log.debug('Found homotopy with %d nonzero components', len(H))
    return H


def verify_cardy_on_homology(data, delta, max_length, degrees=None):
    """
    Compares ``μ∘CC(Δ)`` and ``CO∘OC`` on every cycle of the truncated
    cyclic bar complex in *degrees*, modulo boundaries of ``hom(K, K)``. The
    comparison passes if the two agree for all cycles either on the nose or
    after the global sign ``(−1)^{n(n+1)/2}``.
    """
    category = data.category
    n = data.n
    global_sign = sign(cardy(n))
    complex_ = data.cyclic_complex(max_length)
    hom = hom_complex(category, data.K, data.K)
    if degrees is None:
        degrees = complex_.degrees()
    failures = {1: [], global_sign: []}
    checked = 0
    for k in degrees:
        boundaries = hom.differential(k + n - 1)
        for vector in complex_.cycles(k):
            checked += 1
            cycle = Chain(zip(complex_.basis(k), vector))
            first = Chain()
            second = Chain()
            for word, coefficient in cycle.items():
                first = first + coefficient * mu_composition(
                    category, cc_of_delta_word(delta, word))
                second = second + coefficient * data.closed_open_chain(
                    data.open_closed(word))
            for candidate in failures:
                difference = category.normalize(first - candidate * second)
                if difference and not in_image(
                        boundaries, hom.vector(k + n, difference),
                        category.ring):
                    failures[candidate].append(
                        Violation(cycle, difference))
    unsigned, signed = failures[1], failures[global_sign]
    details = {
        'n': n,
        'global_sign': global_sign,
        'unsigned': not unsigned,
        'signed': not signed,
    }
    passed = not unsigned or not signed
    return VerificationReport('cardy-homology',
                              [] if passed else unsigned or signed,
                              checked=checked, details=details)


def telescoping_configuration(delta, max_length, co_sign=1):
    """
    The configuration ``S = hom(K, K)``, ``CO = co_sign·id``,
    ``OC = μ∘CC(Δ)``. With ``co_sign = 1`` the homotopy equation holds with
    ``H = 0``.
    """
    category = delta.category
    K = delta.target.left.base
    closed = hom_complex(category, K, K)

    def open_closed(word):
        return mu_composition(category, cc_of_delta_word(delta, word))

    def closed_open(label):
        return Chain.of(label, co_sign)

    return OpenClosedData(category, K, closed, open_closed, closed_open,
                          delta.shift, delta.source.objects)


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
Codimension one boundary strata of the abstract moduli spaces of discs and
annuli, and their correspondence with the terms of the algebraic equations.

Every stratum carries a *term* key naming the block of the input word on
which the corresponding composition acts; positions are 0-based indices into
the word in boundary order. For ``R_{r|1|s}`` the word is
``(b_1, …, b_s, p, a_1, …, a_r)`` with the module element at index s.
"""

import logging
import re
from collections import Counter, namedtuple
from ._exceptions import InvalidSpace, UnknownSignTag
from ._report import VerificationReport, Violation
from . import signs


log = logging.getLogger(__name__)


DISC = 'R'
STRIP = 'R_rs'
CYCLIC = 'R1'
PLANE = 'plane'
ANNULUS = 'C'
HOMOTOPY = 'P'

KINDS = (DISC, STRIP, CYCLIC, PLANE, ANNULUS, HOMOTOPY)

# factor of a stratum where a strip breaks off; strips modulo translation
# have dimension −1
STRIP_BREAKING = 'strip'


class SpaceId(namedtuple('SpaceId', ('kind', 'params'))):
    """
    One of the spaces ``R_d``, ``R_{r|1|s}``, ``R_d^1``, ``R^1``, ``C_d^-``
    and ``P_d``. Parameters are validated on construction.
    """
    __slots__ = ()

    def __new__(cls, kind, params=()):
        params = tuple(int(p) for p in params)
        if kind not in KINDS:
            raise InvalidSpace('Unknown kind of space %r' % (kind,))
        if kind == STRIP:
            if len(params) != 2 or min(params) < 0:
                raise InvalidSpace('R_{r|1|s} needs r, s >= 0, got %r' %
                                   (params,))
        elif kind == PLANE:
            if params:
                raise InvalidSpace('R^1 takes no parameters')
        else:
            if len(params) != 1:
                raise InvalidSpace('%s takes one parameter' % kind)
            minimum = 2 if kind == DISC else 1
            if params[0] < minimum:
                raise InvalidSpace('%s needs d >= %d, got %d' %
                                   (kind, minimum, params[0]))
        return super().__new__(cls, kind, params)

    @classmethod
    def disc(cls, d):
        return cls(DISC, (d,))

    @classmethod
    def strip(cls, r, s):
        return cls(STRIP, (r, s))

    @classmethod
    def cyclic(cls, d):
        return cls(CYCLIC, (d,))

    @classmethod
    def plane(cls):
        return cls(PLANE, ())

    @classmethod
    def annulus(cls, d):
        return cls(ANNULUS, (d,))

    @classmethod
    def homotopy(cls, d):
        return cls(HOMOTOPY, (d,))

    @property
    def ref(self):
        if self.kind == DISC:
            return 'R_%d' % self.params
        if self.kind == STRIP:
            return 'R_{%d|1|%d}' % self.params
        if self.kind == CYCLIC:
            return 'R_%d^1' % self.params
        if self.kind == PLANE:
            return 'R^1'
        if self.kind == ANNULUS:
            return 'C_%d^-' % self.params
        return 'P_%d' % self.params

    def __str__(self):
        return self.ref


_SPACE_PATTERNS = (
    (re.compile(r'^R_\{?(\d+)\|1\|(\d+)\}?$'), STRIP),
    (re.compile(r'^R_\{?(\d+)\}?\^1$'), CYCLIC),
    (re.compile(r'^R\^1$'), PLANE),
    (re.compile(r'^R_\{?(\d+)\}?$'), DISC),
    (re.compile(r'^C_\{?(\d+)\}?(\^-)?$'), ANNULUS),
    (re.compile(r'^P_\{?(\d+)\}?$'), HOMOTOPY),
)


def parse_space(text):
    """
    Parses ``R_4``, ``R_{1|1|0}``, ``R_3^1``, ``R^1``, ``C_2^-`` or ``P_2``.
    """
    text = text.strip().replace(' ', '')
    for pattern, kind in _SPACE_PATTERNS:
        match = pattern.match(text)
        if match:
            params = [g for g in match.groups() if g and g.isdigit()]
            return SpaceId(kind, params)
    raise InvalidSpace('Cannot parse space %r' % (text,))


class StratumLabel(namedtuple('StratumLabel',
                              ('space', 'factors', 'family', 'term'))):
    """
    A codimension one stratum of *space*: the product of the two *factors*
    glued according to *family*; *term* is the key of the equation term the
    stratum accounts for.
    """
    __slots__ = ()

    @property
    def ref(self):
        return '%s x %s [%s] %s' % (self.factors[0], self.factors[1],
                                    self.family, _term_ref(self.term))

    def to_dict(self):
        return {
            'factors': [str(f) for f in self.factors],
            'family': self.family,
            'term': _term_ref(self.term),
        }


def _term_ref(term):
    return '%s(%s)' % (term[0], ','.join(str(t) for t in term[1:]))


def dimension(space):
    """
    ``R_d``: d−2, ``R_{r|1|s}``: r+s, ``R_d^1``: d−1, ``R^1``: 0,
    ``C_d^-`` and ``P_d``: d.
    """
    kind, params = space
    if kind == DISC:
        return params[0] - 2
    if kind == STRIP:
        return params[0] + params[1]
    if kind == CYCLIC:
        return params[0] - 1
    if kind == PLANE:
        return 0
    return params[0]


def _disc_strata(space):
    d = space.params[0]
    for d2 in range(2, d):
        d1 = d + 1 - d2
        for k in range(d1):
            yield StratumLabel(space, (SpaceId.disc(d1), SpaceId.disc(d2)),
                               'insert', ('mu', k, k + d2 - 1))


def _strip_strata(space):
    r, s = space.params
    for m in range(r):
        yield StratumLabel(
            space, (SpaceId.strip(m, s), SpaceId.disc(r - m + 1)),
            'B1', ('delta', 0, s + m))
    for l in range(s):
        yield StratumLabel(
            space, (SpaceId.strip(r, l), SpaceId.disc(s - l + 1)),
            'B2', ('delta', s - l, s + r))
    for m in range(r + 1):
        for l in range(s + 1):
            if (m, l) == (0, 0):
                continue
            yield StratumLabel(
                space, (SpaceId.disc(m + l + 1), SpaceId.strip(r - m, s - l)),
                'B3', ('mu_P', s - l, s + m))
    for l in range(s + 1):
        for k in range(l - 1):
            yield StratumLabel(
                space, (SpaceId.disc(l - k),
                        SpaceId.strip(r, s - (l - k) + 1)),
                'B4', ('mu', s - l, s - k - 1))
    for m in range(r + 1):
        for k in range(m - 1):
            yield StratumLabel(
                space, (SpaceId.disc(m - k),
                        SpaceId.strip(r - (m - k) + 1, s)),
                'B5', ('mu', s + k + 1, s + m))


def _cyclic_terms(d, smallest):
    for d2 in range(smallest, d + 1):
        d1 = d + 1 - d2
        inner = SpaceId.disc(d2) if d2 >= 2 else None
        for k in range(d1 - 1):
            yield d1, d2, inner, 'interior', \
                ('interior', k, k + d2 - 1)
        for k in range(d2):
            yield d1, d2, inner, 'wrap', \
                ('wrap', d - 1 - k, d2)


def _cyclic_strata(space, include_strip_breaking):
    d = space.params[0]
    smallest = 1 if include_strip_breaking else 2
    for d1, d2, inner, family, term in _cyclic_terms(d, smallest):
        factors = (SpaceId.cyclic(d1), inner or STRIP_BREAKING)
        yield StratumLabel(space, factors, family, term)


def _annulus_strata(space):
    d = space.params[0]
    yield StratumLabel(space, (SpaceId.plane(), SpaceId.cyclic(d)),
                       'open-closed', ('co-oc',))
    for r in range(d):
        for s in range(d - r):
            yield StratumLabel(
                space, (SpaceId.disc(d - r - s + 1), SpaceId.strip(r, s)),
                'coproduct', ('coproduct', r, s))
    for d1, d2, inner, family, term in _cyclic_terms(d, 2):
        yield StratumLabel(space, (SpaceId.annulus(d1), inner),
                           'bubbling-' + family, term)


def _homotopy_strata(space):
    d = space.params[0]
    for end in ('end0', 'end1'):
        for r in range(d):
            for s in range(d - r):
                yield StratumLabel(
                    space, (SpaceId.disc(d - r - s + 1), SpaceId.strip(r, s)),
                    end, (end, r, s))
    for d1 in range(1, d):
        for k in range(1, d1 + 1):
            yield StratumLabel(
                space, (SpaceId.homotopy(d1), SpaceId.disc(d - d1 + 1)),
                'bubbling', ('bubble', d1, k))


def enumerate_codim1(space, include_strip_breaking=False):
    """
    The complete list of codimension one strata of *space*. With
    *include_strip_breaking* the strata of ``R_d^1`` where a strip (a μ¹
    term) breaks off are listed too.
    """
    if space.kind == DISC:
        strata = list(_disc_strata(space))
    elif space.kind == STRIP:
        strata = list(_strip_strata(space))
    elif space.kind == CYCLIC:
        strata = list(_cyclic_strata(space, include_strip_breaking))
    elif space.kind == ANNULUS:
        strata = list(_annulus_strata(space))
    elif space.kind == HOMOTOPY:
        strata = list(_homotopy_strata(space))
    else:
        strata = []
    return strata


def facet_count(space, include_strip_breaking=False):
    """
    Closed form for the number of codimension one strata.
    """
    kind, params = space
    if kind == DISC:
        d = params[0]
        return d * (d - 1) // 2 - 1
    if kind == STRIP:
        r, s = params
        return r + s + (r + 1) * (s + 1) - 1 + s * (s - 1) // 2 + \
            r * (r - 1) // 2
    if kind == CYCLIC:
        d = params[0]
        return d * d if include_strip_breaking else d * (d - 1)
    if kind == ANNULUS:
        d = params[0]
        return 1 + d * (d + 1) // 2 + d * (d - 1)
    if kind == HOMOTOPY:
        d = params[0]
        return d * (d + 1) + d * (d - 1) // 2
    return 0


def factor_dimensions_consistent(stratum):
    total = 0
    for factor in stratum.factors:
        if factor == STRIP_BREAKING:
            total -= 1
        else:
            total += dimension(factor)
    return total == dimension(stratum.space) - 1


# equation term enumerators, independent of the strata above

def ainf_terms(d, include_strip_breaking=False):
    """
    The blocks ``μ^{d−ℓ+1}(…, μ^ℓ(x_{k+1}, …), …)`` of the A∞ relation.
    """
    for length in range(1, d + 1):
        if not include_strip_breaking and length in (1, d):
            continue
        for k in range(d - length + 1):
            yield ('mu', k, k + length - 1)


def bimodule_hom_terms(r, s, include_strip_breaking=False):
    """
    The terms of the bimodule morphism equation on a word with *r* left and
    *s* right inputs, with values in a tensor bimodule: outer operations with
    inputs on both sides vanish there and are never listed.
    """
    n = r + s + 1
    for i in range(s + 1):
        for j in range(s + 1, n + 1):
            outer_right, outer_left = i, n - j
            if outer_right and outer_left:
                continue
            if (i, j) == (0, n) and not include_strip_breaking:
                continue
            yield ('delta', i, j - 1)
    for i in range(n):
        for j in range(i + 1, n + 1):
            if j - i == 1 and not include_strip_breaking:
                continue
            if i <= s < j:
                yield ('mu_P', i, j - 1)
            else:
                yield ('mu', i, j - 1)


def hochschild_terms(d, include_strip_breaking=False):
    """
    Wrap-around and interior blocks of the Hochschild differential on a word
    of length *d*.
    """
    smallest = 1 if include_strip_breaking else 2
    for r in range(d):
        for t in range(r, d):
            length = d - t + r
            if length >= smallest:
                yield ('wrap', t, length)
    for i in range(d - 1):
        for j in range(i + 1, d):
            if j - i >= smallest:
                yield ('interior', i, j - 1)


def homotopy_terms(d):
    """
    The terms of ``(−1)^n μ¹∘H + H∘b + μ∘CC(Δ) − CO∘OC`` on a word of length
    *d*, up to the strip breaking ones (μ¹ after H and the μ¹ blocks of b).
    """
    yield ('co-oc',)
    for r in range(d):
        for s in range(d - r):
            yield ('coproduct', r, s)
    for term in hochschild_terms(d):
        yield term


def _equation_terms(space, equation, include_strip_breaking):
    kind, params = space
    if (kind, equation) == (DISC, 'ainf'):
        return list(ainf_terms(params[0], include_strip_breaking))
    if (kind, equation) == (STRIP, 'bimodule-hom'):
        return list(bimodule_hom_terms(params[0], params[1],
                                       include_strip_breaking))
    if (kind, equation) == (CYCLIC, 'hochschild'):
        return list(hochschild_terms(params[0], include_strip_breaking))
    if (kind, equation) == (ANNULUS, 'homotopy'):
        return list(homotopy_terms(params[0]))
    raise InvalidSpace('No equation %r for %s' % (equation, space))


DEFAULT_EQUATIONS = {
    DISC: 'ainf',
    STRIP: 'bimodule-hom',
    CYCLIC: 'hochschild',
    ANNULUS: 'homotopy',
}


def strata_term_bijection(space, equation=None, include_strip_breaking=False):
    """
    Matches the strata of *space* with the terms of *equation* by their term
    keys. Unmatched strata and unmatched terms are reported as failures.
    """
    if equation is None:
        try:
            equation = DEFAULT_EQUATIONS[space.kind]
        except KeyError:
            raise InvalidSpace('No equation is associated with %s' % (space,))
    strata = enumerate_codim1(space, include_strip_breaking)
    terms = _equation_terms(space, equation, include_strip_breaking)
    stratum_keys = Counter(stratum.term for stratum in strata)
    term_keys = Counter(terms)
    failures = []
    for stratum in strata:
        if stratum_keys[stratum.term] > 1 or stratum.term not in term_keys:
            failures.append(Violation(stratum.ref, 'no matching term'))
        if not factor_dimensions_consistent(stratum):
            failures.append(Violation(stratum.ref, 'factor dimensions'))
    for term in terms:
        if term_keys[term] > 1 or term not in stratum_keys:
            failures.append(Violation(_term_ref(term), 'no matching stratum'))
    log.debug('%s against %s: %d strata, %d terms', space, equation,
              len(strata), len(terms))
    return VerificationReport('strata-terms', failures,
                              checked=len(strata) + len(terms),
                              details={'space': str(space),
                                       'equation': equation,
                                       'strata': len(strata),
                                       'terms': len(terms)})


def _f_parity(degrees, outer, right, middle, left, deg_q, deg_p, between,
              r, s, n):
    return (degrees[-1] + signs.dagger(outer) +
            signs.ddagger(right, middle, left) +
            signs.circ(deg_q, deg_p, between) +
            signs.diamond(degrees, r, s, n))


_SIGN_FORMULAS = {
    'dagger': lambda degrees: signs.dagger(degrees),
    'ddagger': lambda right, middle, left: signs.ddagger(right, middle, left),
    'diamond': lambda degrees, r, s, n: signs.diamond(degrees, r, s, n),
    'circ': lambda deg_q, deg_p, middle: signs.circ(deg_q, deg_p, middle),
    'cardy': lambda n: signs.cardy(n),
    'oc': lambda degrees: degrees[-1] + signs.dagger(degrees),
    'f': _f_parity,
    'oc_check': lambda degrees: 1 + degrees[0],
    'coproduct_boundary': lambda middle: middle,
    'coproduct_boundary_shifted': lambda middle, n: middle + n + 1,
    'hochschild_wrap': lambda degrees, r: signs.hochschild_wrap(degrees, r),
}

SIGN_TAGS = tuple(sorted(_SIGN_FORMULAS))


def sign_formula(tag, **arguments):
    """
    Evaluates one of the named sign formulas and returns ``±1``.
    """
    try:
        formula = _SIGN_FORMULAS[tag]
    except KeyError:
        raise UnknownSignTag('Unknown sign formula %r' % (tag,))
    return signs.sign(formula(**arguments))

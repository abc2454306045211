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
The JSON category file.

Generators are referenced as ``"S>T:name"``. Every operation table lists its
inputs in boundary order ``[x_1, …, x_d]``, the reverse of the written order
``μ^d(x_d, …, x_1)``::

    {
      "format": 1,
      "ring": "Z",
      "objects": ["K"],
      "hom": [{"source": "K", "target": "K", "generators": [["e", 0]]}],
      "mu": {"2": [[["K>K:e", "K>K:e"], "K>K:e", 1]]},
      "units": {"K": [["K>K:e", 1]]}
    }

Optional keys: ``n`` (degree of the coproduct and of OC), ``object`` (the
object K), ``subcategory`` (the objects of B), ``coproduct`` (components
``[r, s, inputs, [x, y], coefficient]`` of Δ from the diagonal bimodule of
its ``objects`` to ``Y^l_K ⊗ Y^r_K``), ``closed`` (generators and
differential of the closed complex S), ``open_closed``, ``closed_open`` and
``homotopy``.

Certificates of :func:`score.ainf.generation.generation_test` are written as
separate files that refer to the generators of a category file::

    {
      "format": 1,
      "verdict": "generated",
      "object": "K",
      "subcategory": ["K"],
      "max_length": 1,
      "unit": [["K>K:e", 1]],
      "tau": [[["K>K:e", "K>K:e"], 1]],
      "h": []
    }

A tensor word ``[q, a_1, …, a_d, p]`` starts and ends at the object.
"""

import hashlib
import json
import logging
from collections import defaultdict
from jsonschema import Draft7Validator
from jsonschema.exceptions import best_match
from ._exceptions import SchemaError, InvalidCategory
from .bimodule import (
    LEFT, RIGHT, BimoduleHom, TensorElement, diagonal_bimodule,
    tensor_bimodule, yoneda_module)
from .cardy import OpenClosedData, HomotopyWitness
from .category import (
    AinfCategoryData, Chain, GradedBasis, is_composable)
from .constants import Constants
from .generation import GenerationCertificate
from .linalg import ChainComplexZ


log = logging.getLogger(__name__)


_NAME = {'type': 'string', 'pattern': '^[^>:\\s]+$'}
_REF = {'type': 'string', 'pattern': '^[^>:\\s]+>[^>:\\s]+:\\S+$'}
_COEFFICIENT = {'type': 'integer', 'not': {'const': 0}}
_WORD = {'type': 'array', 'items': _REF, 'minItems': 1}

SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'type': 'object',
    'required': ['format', 'ring', 'objects', 'hom', 'mu'],
    'additionalProperties': False,
    'properties': {
        'format': {'const': Constants.FORMAT_VERSION},
        'name': {'type': 'string'},
        'ring': {'enum': list(Constants.RINGS)},
        'objects': {'type': 'array', 'items': _NAME, 'minItems': 1},
        'hom': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['source', 'target', 'generators'],
                'additionalProperties': False,
                'properties': {
                    'source': _NAME,
                    'target': _NAME,
                    'generators': {
                        'type': 'array',
                        'items': {
                            'type': 'array',
                            'items': [_NAME, {'type': 'integer'}],
                            'minItems': 2, 'maxItems': 2,
                        },
                    },
                },
            },
        },
        'mu': {
            'type': 'object',
            'propertyNames': {'pattern': '^[1-9][0-9]*$'},
            'additionalProperties': {
                'type': 'array',
                'items': {
                    'type': 'array',
                    'items': [_WORD, _REF, _COEFFICIENT],
                    'minItems': 3, 'maxItems': 3,
                },
            },
        },
        'units': {
            'type': 'object',
            'additionalProperties': {
                'type': 'array',
                'items': {'type': 'array', 'items': [_REF, _COEFFICIENT],
                          'minItems': 2, 'maxItems': 2},
            },
        },
        'n': {'type': 'integer'},
        'object': _NAME,
        'subcategory': {'type': 'array', 'items': _NAME},
        'coproduct': {
            'type': 'object',
            'required': ['objects', 'terms'],
            'additionalProperties': False,
            'properties': {
                'objects': {'type': 'array', 'items': _NAME, 'minItems': 1},
                'terms': {
                    'type': 'array',
                    'items': {
                        'type': 'array',
                        'items': [
                            {'type': 'integer', 'minimum': 0},
                            {'type': 'integer', 'minimum': 0},
                            _WORD,
                            {'type': 'array', 'items': _REF,
                             'minItems': 2, 'maxItems': 2},
                            _COEFFICIENT,
                        ],
                        'minItems': 5, 'maxItems': 5,
                    },
                },
            },
        },
        'closed': {
            'type': 'object',
            'required': ['generators'],
            'additionalProperties': False,
            'properties': {
                'generators': {
                    'type': 'array',
                    'items': {'type': 'array',
                              'items': [{'type': 'string', 'minLength': 1},
                                        {'type': 'integer'}],
                              'minItems': 2, 'maxItems': 2},
                },
                'differential': {
                    'type': 'array',
                    'items': {'type': 'array',
                              'items': [{'type': 'string'},
                                        {'type': 'string'}, _COEFFICIENT],
                              'minItems': 3, 'maxItems': 3},
                },
            },
        },
        'open_closed': {
            'type': 'array',
            'items': {'type': 'array',
                      'items': [_WORD, {'type': 'string'}, _COEFFICIENT],
                      'minItems': 3, 'maxItems': 3},
        },
        'closed_open': {
            'type': 'array',
            'items': {'type': 'array',
                      'items': [{'type': 'string'}, _REF, _COEFFICIENT],
                      'minItems': 3, 'maxItems': 3},
        },
        'homotopy': {
            'type': 'array',
            'items': {'type': 'array',
                      'items': [_WORD, _REF, _COEFFICIENT],
                      'minItems': 3, 'maxItems': 3},
        },
    },
}


_TERMS = {
    'type': 'array',
    'items': {'type': 'array', 'items': [_REF, _COEFFICIENT],
              'minItems': 2, 'maxItems': 2},
}

CERTIFICATE_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'type': 'object',
    'required': ['format', 'verdict', 'object', 'subcategory', 'max_length',
                 'unit', 'tau', 'h'],
    'additionalProperties': False,
    'properties': {
        'format': {'const': Constants.FORMAT_VERSION},
        'verdict': {'enum': list(Constants.VERDICTS)},
        'object': _NAME,
        'subcategory': {'type': 'array', 'items': _NAME},
        'max_length': {'type': 'integer', 'minimum': 0},
        'unit': _TERMS,
        'tau': {
            'type': 'array',
            'items': {
                'type': 'array',
                'items': [{'type': 'array', 'items': _REF, 'minItems': 2},
                          _COEFFICIENT],
                'minItems': 2, 'maxItems': 2,
            },
        },
        'h': _TERMS,
        'summands': {'type': 'integer', 'minimum': 0},
    },
}

def json_path(parts):
    """
    ``$.mu.2[0][1]`` for the parts ``['mu', '2', 0, 1]``.
    """
    result = '$'
    for part in parts:
        if isinstance(part, int):
            result += '[%d]' % part
        else:
            result += '.%s' % part
    return result


def digest(data):
    if isinstance(data, str):
        data = data.encode('utf-8')
    return hashlib.sha256(data).hexdigest()


class CategoryFile:
    """
    A loaded category file: the category itself plus whatever optional
    sections were present. *digest* is the SHA-256 of the raw input.
    """

    def __init__(self, category, digest=None, n=None, K=None,
                 subcategory=None, delta=None, closed=None, open_closed=None,
                 closed_open=None, homotopy=None):
        self.category = category
        self.digest = digest
        self.n = n
        self.K = K
        self.subcategory = tuple(subcategory) if subcategory is not None \
            else None
        self.delta = delta
        self.closed = closed
        self.open_closed = dict(open_closed or {})
        self.closed_open = dict(closed_open or {})
        self.homotopy = homotopy

    @property
    def has_closed_sector(self):
        return self.closed is not None

    def open_closed_data(self):
        objects = self.delta.source.objects if self.delta is not None \
            else self.subcategory
        return OpenClosedData(self.category, self.K, self.closed,
                              self.open_closed, self.closed_open, self.n or 0,
                              objects)


class _Reader:

    def __init__(self, doc, ring=None):
        self.doc = doc
        self.ring = ring or doc['ring']
        self.generators = {}

    def fail(self, parts, message):
        raise SchemaError(json_path(parts), message)

    def resolve(self, ref, parts):
        try:
            return self.generators[ref]
        except KeyError:
            self.fail(parts, 'undeclared generator %s' % ref)

    def word(self, refs, parts):
        word = tuple(self.resolve(ref, parts + [i])
                     for i, ref in enumerate(refs))
        if not is_composable(word):
            self.fail(parts, 'word is not composable')
        return word

    def check_object(self, obj, parts):
        if obj not in self.objects:
            self.fail(parts, 'unknown object %s' % obj)
        return obj

    def read(self, digest_):
        doc = self.doc
        self.objects = []
        for i, obj in enumerate(doc['objects']):
            if obj in self.objects:
                self.fail(['objects', i], 'duplicate object %s' % obj)
            self.objects.append(obj)
        bases = {}
        for i, entry in enumerate(doc['hom']):
            key = (self.check_object(entry['source'], ['hom', i, 'source']),
                   self.check_object(entry['target'], ['hom', i, 'target']))
            if key in bases:
                self.fail(['hom', i], 'hom(%s, %s) declared twice' % key)
            try:
                bases[key] = GradedBasis(key[0], key[1],
                                         [tuple(g) for g in
                                          entry['generators']])
            except InvalidCategory as e:
                self.fail(['hom', i, 'generators'], str(e))
            for generator in bases[key]:
                self.generators[generator.ref] = generator
        mu = {}
        for key in sorted(doc['mu'], key=int):
            arity = int(key)
            terms = []
            for i, (refs, output, coefficient) in enumerate(doc['mu'][key]):
                parts = ['mu', key, i]
                if len(refs) != arity:
                    self.fail(parts + [0], '%d inputs in a table of arity %d'
                              % (len(refs), arity))
                inputs = self.word(refs, parts + [0])
                output = self.resolve(output, parts + [1])
                if (output.source, output.target) != \
                        (inputs[0].source, inputs[-1].target):
                    self.fail(parts + [1], 'output %s does not lie in '
                              'hom(%s, %s)' % (output.ref, inputs[0].source,
                                               inputs[-1].target))
                expected = 2 - arity + sum(x.degree for x in inputs)
                if output.degree != expected:
                    self.fail(parts + [1], 'output has degree %d, expected %d'
                              % (output.degree, expected))
                terms.append((inputs, output, coefficient))
            mu[arity] = terms
        units = {}
        for obj, terms in doc.get('units', {}).items():
            self.check_object(obj, ['units', obj])
            unit = Chain()
            for i, (ref, coefficient) in enumerate(terms):
                generator = self.resolve(ref, ['units', obj, i, 0])
                if (generator.source, generator.target) != (obj, obj) or \
                        generator.degree != 0:
                    self.fail(['units', obj, i, 0], '%s is not a degree zero '
                              'endomorphism of %s' % (ref, obj))
                unit = unit + Chain.of(generator, coefficient)
            units[obj] = unit
        self.category = AinfCategoryData(self.objects, bases, mu, self.ring,
                                         units, doc.get('name'))
        K = doc.get('object')
        if K is not None:
            self.check_object(K, ['object'])
        subcategory = doc.get('subcategory')
        for i, obj in enumerate(subcategory or ()):
            self.check_object(obj, ['subcategory', i])
        n = doc.get('n')
        delta = self.read_coproduct(K, n)
        closed = self.read_closed()
        open_closed, closed_open = self.read_open_closed(closed, K)
        homotopy = self.read_homotopy(K)
        log.debug('Loaded category %s with %d objects', doc.get('name'),
                  len(self.objects))
        return CategoryFile(self.category, digest_, n, K, subcategory, delta,
                            closed, open_closed, closed_open, homotopy)

    def require(self, value, key, section):
        if value is None:
            self.fail([section], 'needs a top level "%s"' % key)
        return value

    def read_coproduct(self, K, n):
        section = self.doc.get('coproduct')
        if section is None:
            return None
        K = self.require(K, 'object', 'coproduct')
        n = self.require(n, 'n', 'coproduct')
        objects = tuple(
            self.check_object(obj, ['coproduct', 'objects', i])
            for i, obj in enumerate(section['objects']))
        category = self.category
        components = defaultdict(list)
        for i, (r, s, refs, (x, y), coefficient) in \
                enumerate(section['terms']):
            parts = ['coproduct', 'terms', i]
            if len(refs) != r + s + 1:
                self.fail(parts + [2], 'Δ^{%d|1|%d} needs %d inputs' %
                          (r, s, r + s + 1))
            inputs = self.word(refs, parts + [2])
            for generator in inputs:
                if generator.source not in objects or \
                        generator.target not in objects:
                    self.fail(parts + [2], '%s leaves the coproduct objects'
                              % generator.ref)
            x = self.resolve(x, parts + [3, 0])
            y = self.resolve(y, parts + [3, 1])
            p = inputs[s]
            if (x.source, x.target) != (K, p.target):
                self.fail(parts + [3, 0], '%s is not in hom(%s, %s)' %
                          (x.ref, K, p.target))
            if (y.source, y.target) != (p.source, K):
                self.fail(parts + [3, 1], '%s is not in hom(%s, %s)' %
                          (y.ref, p.source, K))
            components[(r, s)].append(
                (inputs, TensorElement(x, y), coefficient))
        source = diagonal_bimodule(category, objects)
        target = tensor_bimodule(yoneda_module(category, K, LEFT, objects),
                                 yoneda_module(category, K, RIGHT, objects))
        delta = BimoduleHom(source, target, n, dict(components))
        try:
            delta.degree_check()
        except InvalidCategory as e:
            self.fail(['coproduct', 'terms'], str(e))
        return delta

    def read_closed(self):
        section = self.doc.get('closed')
        if section is None:
            return None
        degrees = {}
        bases = defaultdict(list)
        for i, (label, degree) in enumerate(section['generators']):
            if label in degrees:
                self.fail(['closed', 'generators', i],
                          'duplicate generator %s' % label)
            degrees[label] = degree
            bases[degree].append(label)
        images = defaultdict(Chain)
        for i, (source, target, coefficient) in \
                enumerate(section.get('differential', ())):
            parts = ['closed', 'differential', i]
            for j, label in enumerate((source, target)):
                if label not in degrees:
                    self.fail(parts + [j], 'undeclared generator %s' % label)
            if degrees[target] != degrees[source] + 1:
                self.fail(parts, 'the differential raises the degree by one')
            images[source] = images[source] + Chain.of(target, coefficient)
        return ChainComplexZ.from_boundary(
            dict(bases), lambda label: images.get(label, Chain()),
            ring=self.ring)

    def closed_label(self, closed, label, parts):
        if closed is None:
            self.fail(parts, 'needs a "closed" section')
        for k in closed.degrees():
            if label in closed.basis(k):
                return label
        self.fail(parts, 'unknown closed generator %s' % label)

    def read_open_closed(self, closed, K):
        open_closed = defaultdict(Chain)
        for i, (refs, label, coefficient) in \
                enumerate(self.doc.get('open_closed', ())):
            parts = ['open_closed', i]
            word = self.word(refs, parts + [0])
            if word[-1].target != word[0].source:
                self.fail(parts + [0], 'word is not cyclic')
            label = self.closed_label(closed, label, parts + [1])
            open_closed[word] = open_closed[word] + Chain.of(label,
                                                             coefficient)
        closed_open = defaultdict(Chain)
        for i, (label, ref, coefficient) in \
                enumerate(self.doc.get('closed_open', ())):
            parts = ['closed_open', i]
            label = self.closed_label(closed, label, parts + [0])
            K = self.require(K, 'object', 'closed_open')
            generator = self.resolve(ref, parts + [1])
            if (generator.source, generator.target) != (K, K):
                self.fail(parts + [1], '%s is not an endomorphism of %s' %
                          (ref, K))
            closed_open[label] = closed_open[label] + \
                Chain.of(generator, coefficient)
        return dict(open_closed), dict(closed_open)

    def read_homotopy(self, K):
        terms = self.doc.get('homotopy')
        if terms is None:
            return None
        K = self.require(K, 'object', 'homotopy')
        table = defaultdict(Chain)
        for i, (refs, ref, coefficient) in enumerate(terms):
            parts = ['homotopy', i]
            word = self.word(refs, parts + [0])
            generator = self.resolve(ref, parts + [1])
            if (generator.source, generator.target) != (K, K):
                self.fail(parts + [1], '%s is not an endomorphism of %s' %
                          (ref, K))
            table[word] = table[word] + Chain.of(generator, coefficient)
        return HomotopyWitness(table)

    def endomorphisms(self, terms, K, parts):
        chain = Chain()
        for i, (ref, coefficient) in enumerate(terms):
            generator = self.resolve(ref, parts + [i, 0])
            if (generator.source, generator.target) != (K, K):
                self.fail(parts + [i, 0], '%s is not an endomorphism of %s'
                          % (ref, K))
            chain = chain + Chain.of(generator, coefficient)
        return chain

    def read_certificate(self, category):
        doc = self.doc
        self.objects = list(category.objects)
        self.generators = {g.ref: g for g in category.generators()}
        K = self.check_object(doc['object'], ['object'])
        subcategory = tuple(
            self.check_object(obj, ['subcategory', i])
            for i, obj in enumerate(doc['subcategory']))
        max_length = doc['max_length']
        tau = Chain()
        for i, (refs, coefficient) in enumerate(doc['tau']):
            parts = ['tau', i, 0]
            word = self.word(refs, parts)
            if word[0].source != K or word[-1].target != K:
                self.fail(parts, 'word does not start and end at %s' % K)
            if len(word) - 2 > max_length:
                self.fail(parts, 'word is longer than max_length')
            for generator in word[:-1]:
                if generator.target not in subcategory:
                    self.fail(parts, '%s leaves the subcategory' %
                              generator.ref)
            tau = tau + Chain.of(word, coefficient)
        return GenerationCertificate(
            doc['verdict'], K, subcategory, max_length,
            self.endomorphisms(doc['unit'], K, ['unit']), tau,
            self.endomorphisms(doc['h'], K, ['h']))


def _parse(text, schema):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError('%d:%d' % (e.lineno, e.colno), e.msg)
    error = best_match(Draft7Validator(schema).iter_errors(doc))
    if error is not None:
        raise SchemaError(json_path(error.absolute_path), error.message)
    return doc


def _read(path):
    with open(path, 'rb') as file:
        data = file.read()
    try:
        return data, data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise SchemaError('$', 'not UTF-8: %s' % e)


def loads(text, ring=None, digest_=None):
    """
    Parses a category file from a string. Raises :class:`SchemaError` with a
    ``line:column`` position for malformed JSON and with a JSON path for
    everything else. *ring* overrides the ring declared in the file.
    """
    if digest_ is None:
        digest_ = digest(text)
    return _Reader(_parse(text, SCHEMA), ring).read(digest_)


def load(path, ring=None):
    data, text = _read(path)
    return loads(text, ring, digest(data))


def loads_certificate(text, category):
    """
    Parses a certificate file, resolving its generators in *category*.
    Raises :class:`SchemaError` like :func:`loads`.
    """
    doc = _parse(text, CERTIFICATE_SCHEMA)
    return _Reader(doc, category.ring).read_certificate(category)


def load_certificate(path, category):
    return loads_certificate(_read(path)[1], category)


def _refs(word):
    return [x.ref for x in word]


def _terms(chain):
    return sorted(chain.items(), key=lambda item: str(item[0]))


def to_dict(document):
    """
    The JSON structure of a :class:`CategoryFile`; ``loads(dumps(doc))``
    yields an equivalent file.
    """
    category = document.category
    result = {
        'format': Constants.FORMAT_VERSION,
        'ring': category.ring,
        'objects': list(category.objects),
        'hom': [
            {'source': source, 'target': target,
             'generators': [[g.name, g.degree] for g in basis]}
            for (source, target), basis in sorted(category.hom.items())
            if len(basis)],
        'mu': {
            str(arity): [[_refs(inputs), output.ref, coefficient]
                         for inputs, output, coefficient in table.terms()]
            for arity, table in sorted(category.mu.items()) if len(table)},
    }
    if category.name:
        result['name'] = category.name
    if category.units:
        result['units'] = {
            obj: [[g.ref, c] for g, c in _terms(unit)]
            for obj, unit in category.units.items()}
    if document.n is not None:
        result['n'] = document.n
    if document.K is not None:
        result['object'] = document.K
    if document.subcategory is not None:
        result['subcategory'] = list(document.subcategory)
    delta = document.delta
    if delta is not None:
        result['coproduct'] = {
            'objects': list(delta.source.objects),
            'terms': [
                [r, s, _refs(inputs), [output.x.ref, output.y.ref],
                 coefficient]
                for (r, s), table in sorted(delta.components.items())
                for inputs, output, coefficient in table.terms()],
        }
    closed = document.closed
    if closed is not None:
        generators = []
        differential = []
        for k in closed.degrees():
            for label in closed.basis(k):
                generators.append([label, k])
                vector = closed.vector(k, Chain.of(label))
                image = closed.apply(k, vector)
                differential.extend(
                    [label, target, value]
                    for target, value in zip(closed.basis(k + 1), image)
                    if value)
        result['closed'] = {'generators': generators,
                            'differential': differential}
    if document.open_closed:
        result['open_closed'] = [
            [_refs(word), label, value]
            for word, chain in document.open_closed.items()
            for label, value in _terms(chain)]
    if document.closed_open:
        result['closed_open'] = [
            [label, g.ref, value]
            for label, chain in sorted(document.closed_open.items())
            for g, value in _terms(chain)]
    if document.homotopy is not None:
        result['homotopy'] = [
            [_refs(word), g.ref, value]
            for word, chain in document.homotopy.table.items()
            for g, value in _terms(chain)]
    return result


def dumps(document):
    return json.dumps(to_dict(document), sort_keys=True, indent=2,
                      ensure_ascii=False) + '\n'


def dump(document, path):
    with open(path, 'w', encoding='utf-8') as file:
        file.write(dumps(document))


def dumps_certificate(certificate):
    return json.dumps(certificate.to_dict(), sort_keys=True, indent=2,
                      ensure_ascii=False) + '\n'


def dump_certificate(certificate, path):
    with open(path, 'w', encoding='utf-8') as file:
        file.write(dumps_certificate(certificate))

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

import json
from collections import namedtuple


def describe(key):
    """
    Human readable rendering of a basis label: generators by their reference,
    words as ``(x | y | z)``.
    """
    ref = getattr(key, 'ref', None)
    if ref is not None:
        return ref
    if isinstance(key, tuple):
        return '(%s)' % ' | '.join(describe(part) for part in key)
    return str(key)


def _describe_value(value):
    if hasattr(value, 'describe'):
        return value.describe()
    return describe(value)


Violation = namedtuple('Violation', ('witness', 'residual'))


class VerificationReport:
    """
    Outcome of one verifier: the name of the *check*, the number of inputs
    that were *checked* and the list of failing :class:`Violation` objects.
    """

    def __init__(self, check, failures=(), checked=0, details=None):
        self.check = check
        self.failures = list(failures)
        self.checked = checked
        self.details = dict(details or {})

    @property
    def passed(self):
        return not self.failures

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return '<VerificationReport %s %s (%d checked, %d failures)>' % (
            self.check, 'pass' if self.passed else 'fail', self.checked,
            len(self.failures))

    @classmethod
    def combine(cls, check, reports):
        failures = []
        checked = 0
        for report in reports:
            failures.extend(report.failures)
            checked += report.checked
        return cls(check, failures, checked)

    def to_dict(self):
        result = {
            'check': self.check,
            'passed': self.passed,
            'checked': self.checked,
            'failures': [{'witness': _describe_value(v.witness),
                          'residual': _describe_value(v.residual)}
                         for v in self.failures],
        }
        if self.details:
            result['details'] = self.details
        return result

    def format_lines(self):
        lines = ['%s: %s (%d checked)' % (
            self.check, 'pass' if self.passed else 'FAIL', self.checked)]
        for violation in self.failures:
            lines.append('  witness %s -> %s' % (
                _describe_value(violation.witness),
                _describe_value(violation.residual)))
        for key in sorted(self.details):
            lines.append('  %s: %s' % (key, self.details[key]))
        return lines


class Report:
    """
    What a command line run prints: the *command*, the SHA-256 *digest* of the
    input, the *verdict*, the verifier reports in *sections* and additional
    *results* (homology tables, certificates, strata lists). *timing* is only
    present when requested, so that default output is reproducible byte by
    byte.
    """

    def __init__(self, command, digest, verdict, sections=(), results=None,
                 timing=None):
        self.command = command
        self.digest = digest
        self.verdict = verdict
        self.sections = list(sections)
        self.results = dict(results or {})
        self.timing = timing

    def to_dict(self):
        result = {
            'command': self.command,
            'digest': self.digest,
            'verdict': self.verdict,
            'sections': [section.to_dict() for section in self.sections],
            'results': self.results,
        }
        if self.timing is not None:
            result['timing'] = self.timing
        return result

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2,
                          ensure_ascii=False)

    def to_text(self):
        lines = ['command: %s' % self.command]
        if self.digest:
            lines.append('input: sha256:%s' % self.digest)
        for section in self.sections:
            lines.extend(section.format_lines())
        for key in sorted(self.results):
            value = self.results[key]
            if isinstance(value, (list, tuple)):
                lines.append('%s:' % key)
                lines.extend('  %s' % _format_item(item) for item in value)
            elif isinstance(value, dict):
                lines.append('%s:' % key)
                lines.extend('  %s: %s' % (k, _format_item(value[k]))
                             for k in sorted(value))
            else:
                lines.append('%s: %s' % (key, value))
        if self.timing is not None:
            lines.append('timing: %.3fs' % self.timing)
        lines.append('verdict: %s' % self.verdict)
        return '\n'.join(lines)


def _format_item(item):
    if isinstance(item, dict):
        return ', '.join('%s=%s' % (k, item[k]) for k in sorted(item))
    return str(item)

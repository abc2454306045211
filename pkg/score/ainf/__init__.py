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

from ._init import init, ConfiguredAinfModule, parse_degrees
from ._exceptions import (
    AinfError, InvalidCategory, NotComposable, DegreeRuleViolation,
    DuplicateGenerator, UnknownObject, UnknownGenerator, SideMismatch,
    MissingUnit, InvalidSpace, UnknownSignTag, DimensionMismatch, NotAComplex,
    Unsolvable, RationalOnly, NoSolution, NoIntegralSolution, NotACycle,
    MaurerCartanViolation, ClosednessViolation, ChainMapViolation,
    SchemaError)
from ._report import VerificationReport, Violation, Report
from .category import (
    Generator, Chain, AinfCategoryData, verify_ainf, verify_leibniz)
from .linalg import (
    IntMatrix, ChainComplexZ, FinAbGroup, smith_normal_form, homology)
from .fileformat import (
    CategoryFile, load, loads, dump, dumps, load_certificate,
    dump_certificate)
from .generation import (
    GenerationCertificate, generation_test, generation_from_open_closed,
    replay)

__all__ = ('init', 'ConfiguredAinfModule', 'parse_degrees', 'AinfError',
           'InvalidCategory', 'NotComposable', 'DegreeRuleViolation',
           'DuplicateGenerator', 'UnknownObject', 'UnknownGenerator',
           'SideMismatch', 'MissingUnit', 'InvalidSpace', 'UnknownSignTag',
           'DimensionMismatch', 'NotAComplex', 'Unsolvable', 'RationalOnly',
           'NoSolution', 'NoIntegralSolution', 'NotACycle',
           'MaurerCartanViolation', 'ClosednessViolation',
           'ChainMapViolation', 'SchemaError', 'VerificationReport',
           'Violation', 'Report', 'Generator', 'Chain', 'AinfCategoryData',
           'verify_ainf', 'verify_leibniz', 'IntMatrix', 'ChainComplexZ',
           'FinAbGroup', 'smith_normal_form', 'homology', 'CategoryFile',
           'load', 'loads', 'dump', 'dumps', 'load_certificate',
           'dump_certificate', 'GenerationCertificate', 'generation_test',
           'generation_from_open_closed', 'replay')

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

import pytest
from click.testing import CliRunner
from score.ainf import fixtures


SHIPPED = {
    'ground-ring': fixtures.ground_ring,
    'dual-numbers': fixtures.dual_numbers,
    'dual-numbers-even': lambda: fixtures.dual_numbers(eps_degree=2),
    'path-3': lambda: fixtures.path_category(3),
    'mu3': fixtures.mu3_algebra,
    'torsion': fixtures.torsion_algebra,
    'cohomological-unit': fixtures.cohomological_unit_algebra,
    'zero-subcategory': fixtures.zero_subcategory,
    'split-summand': fixtures.split_summand,
    'scaled-pair': fixtures.scaled_pair,
    'coproduct-pair-0': lambda: fixtures.coproduct_pair(0)[0],
    'coproduct-pair-1': lambda: fixtures.coproduct_pair(1)[0],
    'coproduct-pair-2': lambda: fixtures.coproduct_pair(2)[0],
}


@pytest.fixture(params=sorted(SHIPPED))
def shipped(request):
    return SHIPPED[request.param]()


@pytest.fixture
def ground():
    return fixtures.ground_ring()


@pytest.fixture
def dual():
    return fixtures.dual_numbers()


@pytest.fixture
def mu3():
    return fixtures.mu3_algebra()


@pytest.fixture
def split():
    return fixtures.split_summand()


@pytest.fixture
def g():
    """
    Looks up a generator of a category by name: ``g(category, 'e')``.
    """
    return fixtures.generator


@pytest.fixture
def runner():
    return CliRunner()

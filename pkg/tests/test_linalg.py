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

import itertools
import math
import random
import pytest
import sympy
from score.ainf._exceptions import (
    DimensionMismatch, NotAComplex, Unsolvable, RationalOnly)
from score.ainf.linalg import (
    IntMatrix, ChainComplexZ, FinAbGroup, smith_normal_form, homology,
    kernel_basis, solve, solve_integer, in_image, rank)


def det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, value in enumerate(rows[0]):
        if value:
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * value * det(minor)
    return total


def invariant_factors(entries, rows, cols):
    """
    Invariant factors from determinantal divisors: d_k is the gcd of all
    k×k minors and the k-th factor is d_k / d_{k-1}.
    """
    factors = []
    previous = 1
    for k in range(1, min(rows, cols) + 1):
        divisor = 0
        for chosen_rows in itertools.combinations(range(rows), k):
            for chosen_cols in itertools.combinations(range(cols), k):
                minor = [[entries[i][j] for j in chosen_cols]
                         for i in chosen_rows]
                divisor = math.gcd(divisor, det(minor))
        if not divisor:
            break
        factors.append(divisor // previous)
        previous = divisor
    return factors


def check_decomposition(entries, rows, cols):
    A = IntMatrix(rows, cols, entries)
    snf = smith_normal_form(A)
    assert snf.U @ A @ snf.V == snf.D
    assert abs(det(snf.U.tolist())) == 1
    assert abs(det(snf.V.tolist())) == 1
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert snf.D[i, j] == 0
    assert all(value >= 0 for value in snf.diagonal)
    factors = invariant_factors(entries, rows, cols)
    assert snf.invariant_factors == factors
    return factors


def test_smith_normal_form_textbook_example():
    A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    snf = smith_normal_form(A)
    assert snf.diagonal == [2, 6, 12]
    assert snf.U @ A @ snf.V == snf.D


def test_smith_normal_form_divisibility_chain():
    snf = smith_normal_form(IntMatrix.from_rows([[6, 0], [0, 4]]))
    assert snf.diagonal == [2, 12]


def test_smith_normal_form_of_zero_and_empty_matrices():
    assert smith_normal_form(IntMatrix.zero(2, 3)).rank == 0
    snf = smith_normal_form(IntMatrix(0, 2))
    assert snf.D.shape == (0, 2)
    assert snf.V == IntMatrix.identity(2)


def test_smith_normal_form_is_deterministic():
    A = IntMatrix.from_rows([[3, -1, 2], [0, 2, -3], [1, 1, 1]])
    assert smith_normal_form(A) == smith_normal_form(A)


def test_smith_normal_form_exhaustive_2x2():
    values = range(-2, 3)
    for a, b, c, d in itertools.product(values, repeat=4):
        entries = [[a, b], [c, d]]
        check_decomposition(entries, 2, 2)


def test_smith_normal_form_and_homology_random_sample():
    generator = random.Random(20150612)
    for _ in range(10000):
        rows = generator.randint(1, 4)
        cols = generator.randint(1, 4)
        entries = [[generator.randint(-3, 3) for _ in range(cols)]
                   for _ in range(rows)]
        factors = check_decomposition(entries, rows, cols)
        complex_ = ChainComplexZ({0: range(cols), 1: range(rows)},
                                 {0: IntMatrix(rows, cols, entries)})
        assert homology(complex_, 1) == FinAbGroup(
            rows - len(factors), [d for d in factors if d > 1])
        assert homology(complex_, 0) == FinAbGroup(cols - len(factors))


def test_rank_agrees_with_sympy():
    generator = random.Random(7)
    for _ in range(200):
        entries = [[generator.randint(-3, 3) for _ in range(4)]
                   for _ in range(3)]
        A = IntMatrix(3, 4, entries)
        assert rank(A) == sympy.Matrix(entries).rank()


def test_homology_with_torsion():
    # Z --2--> Z
    complex_ = ChainComplexZ({0: ['a'], 1: ['b']},
                             {0: IntMatrix.from_rows([[2]])})
    assert homology(complex_, 0) == FinAbGroup(0)
    assert homology(complex_, 1) == FinAbGroup(0, [2])
    assert homology(complex_, 1).format() == 'Z/2'


def test_homology_over_f2():
    complex_ = ChainComplexZ({0: ['a'], 1: ['b']},
                             {0: IntMatrix.from_rows([[2]])}, ring='F2')
    assert homology(complex_, 0) == FinAbGroup(1)
    assert homology(complex_, 1) == FinAbGroup(1)


def test_homology_of_degrees_outside_the_complex():
    complex_ = ChainComplexZ({0: ['a']})
    assert homology(complex_, 0) == FinAbGroup(1)
    assert homology(complex_, 5).is_trivial


def test_differentials_are_checked_not_assumed():
    complex_ = ChainComplexZ(
        {0: ['a'], 1: ['b'], 2: ['c']},
        {0: IntMatrix.from_rows([[1]]), 1: IntMatrix.from_rows([[1]])})
    with pytest.raises(NotAComplex) as excinfo:
        complex_.check()
    assert excinfo.value.degree == 1
    with pytest.raises(NotAComplex):
        homology(complex_, 1)


def test_differential_shape_is_validated():
    with pytest.raises(DimensionMismatch):
        ChainComplexZ({0: ['a', 'b'], 1: ['c']},
                      {0: IntMatrix.from_rows([[1, 0], [0, 1]])})


def test_from_boundary():
    complex_ = ChainComplexZ.from_boundary(
        {0: ['a', 'b'], 1: ['c']},
        lambda label: {'c': 1} if label == 'a' else {'c': -1})
    assert complex_.differential(0) == IntMatrix.from_rows([[1, -1]])
    assert homology(complex_, 0) == FinAbGroup(1)
    assert homology(complex_, 1) == FinAbGroup(0)


def test_boundary_leaving_the_complex_is_rejected():
    with pytest.raises(KeyError):
        ChainComplexZ.from_boundary({0: ['a'], 1: ['c']},
                                    lambda label: {'x': 1})


def test_kernel_basis():
    A = IntMatrix.from_rows([[1, 1, 0], [0, 2, 2]])
    basis = kernel_basis(A)
    assert len(basis) == 1
    assert A.apply(basis[0]) == [0, 0]


def test_kernel_basis_over_f2_lies_in_the_kernel():
    A = IntMatrix.from_rows([[1, 1, 0], [0, 2, 2]])
    assert len(kernel_basis(A, 'F2')) == 2
    for vector in kernel_basis(A, 'F2'):
        assert all(value % 2 == 0 for value in A.apply(vector))


def test_solve_integer():
    A = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert solve_integer(A, [4, 9]) == [2, 3]
    assert A.apply(solve_integer(A, [0, 0])) == [0, 0]


def test_solve_integer_distinguishes_rational_from_unsolvable():
    with pytest.raises(RationalOnly):
        solve_integer(IntMatrix.from_rows([[2]]), [1])
    with pytest.raises(Unsolvable):
        solve_integer(IntMatrix.from_rows([[0]]), [1])
    with pytest.raises(Unsolvable):
        solve_integer(IntMatrix(1, 0), [1])


def test_solve_over_f2():
    A = IntMatrix.from_rows([[1, 1], [0, 1]])
    x = solve(A, [1, 1], 'F2')
    assert [value % 2 for value in A.apply(x)] == [1, 1]
    assert solve(IntMatrix.from_rows([[2]]), [0], 'F2') == [0]
    with pytest.raises(Unsolvable):
        solve(IntMatrix.from_rows([[2]]), [1], 'F2')


def test_in_image():
    A = IntMatrix.from_rows([[2]])
    assert in_image(A, [4])
    assert not in_image(A, [3])
    assert in_image(A, [3], 'F2') is False
    assert in_image(A, [2], 'F2')


def test_matrix_dimensions_are_checked():
    with pytest.raises(DimensionMismatch):
        IntMatrix(2, 2, [[1, 2]])
    with pytest.raises(DimensionMismatch):
        IntMatrix.identity(2) @ IntMatrix.identity(3)
    with pytest.raises(DimensionMismatch):
        IntMatrix.identity(2).apply([1, 2, 3])


def test_group_formatting():
    assert FinAbGroup(2, [2]).format() == 'Z^2 + Z/2'
    assert FinAbGroup(1, [4, 2]).format() == 'Z + Z/2 + Z/4'
    assert FinAbGroup(0).format() == '0'
    assert FinAbGroup(1).format('F2') == 'F2'

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
Exact linear algebra over the integers (and over GF(2)): Smith normal form
with transformation matrices, homology of cohomologically graded chain
complexes and integral solvability of linear systems.
"""

import logging
from collections import namedtuple
from sympy.polys.domains import QQ, ZZ, GF
from sympy.polys.matrices import DomainMatrix
from ._exceptions import (
    DimensionMismatch, NotAComplex, Unsolvable, RationalOnly)
from .constants import Constants


log = logging.getLogger(__name__)


class IntMatrix:
    """
    A dense, immutable matrix of arbitrary precision integers.
    """

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise DimensionMismatch('Negative matrix dimensions')
        self.rows = rows
        self.cols = cols
        if entries is None:
            self._entries = [[0] * cols for _ in range(rows)]
            return
        entries = [[int(value) for value in row] for row in entries]
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise DimensionMismatch('Expected %dx%d entries' % (rows, cols))
        self._entries = entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [list(column) for column in columns]
        entries = [[column[i] for column in columns] for i in range(rows)]
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, index):
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError('Entry (%d, %d) outside of %dx%d matrix' %
                             (i, j, self.rows, self.cols))
        return self._entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    __hash__ = None

    def __repr__(self):
        return 'IntMatrix(%d, %d, %r)' % (self.rows, self.cols, self._entries)

    def tolist(self):
        return [list(row) for row in self._entries]

    def row(self, i):
        return list(self._entries[i])

    def column(self, j):
        return [row[j] for row in self._entries]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [self.column(j) for j in range(self.cols)])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch('Cannot multiply %dx%d with %dx%d' %
                                    (self.rows, self.cols,
                                     other.rows, other.cols))
        others = [[(j, value) for j, value in enumerate(row) if value]
                  for row in other._entries]
        entries = []
        for row in self._entries:
            result = [0] * other.cols
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in others[k]:
                    result[j] += a * b
            entries.append(result)
        return IntMatrix(self.rows, other.cols, entries)

    def apply(self, vector):
        vector = [int(value) for value in vector]
        if len(vector) != self.cols:
            raise DimensionMismatch('Vector of length %d for %d columns' %
                                    (len(vector), self.cols))
        return [sum(a * b for a, b in zip(row, vector))
                for row in self._entries]

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionMismatch('Row counts differ')
        return IntMatrix(self.rows, self.cols + other.cols,
                         [a + b for a, b in zip(self._entries, other._entries)])

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionMismatch('Column counts differ')
        return IntMatrix(self.rows + other.rows, self.cols,
                         self._entries + other._entries)

    def is_zero(self, ring=Constants.RING_Z):
        if ring == Constants.RING_F2:
            return all(value % 2 == 0 for row in self._entries for value in row)
        return all(value == 0 for row in self._entries for value in row)

    def to_domain_matrix(self, domain):
        return DomainMatrix(
            [[domain.convert(value) for value in row] for row in self._entries],
            self.shape, domain)

    def to_sparse(self, domain):
        """
        The nonzero entries as a sparse :class:`DomainMatrix` over *domain*.
        """
        rows = {}
        for i, row in enumerate(self._entries):
            entries = {j: domain.convert(value)
                       for j, value in enumerate(row) if value}
            entries = {j: value for j, value in entries.items() if value}
            if entries:
                rows[i] = entries
        return DomainMatrix(rows, self.shape, domain)


class SmithDecomposition(namedtuple('SmithDecomposition', ('U', 'D', 'V'))):
    """
    Result of :func:`smith_normal_form`: unimodular *U* and *V* with
    ``U·A·V = D``.
    """
    __slots__ = ()

    @property
    def diagonal(self):
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]

    @property
    def invariant_factors(self):
        return [value for value in self.diagonal if value]

    @property
    def rank(self):
        return len(self.invariant_factors)


def smith_normal_form(A):
    """
    Computes the Smith normal form of the :class:`IntMatrix` *A* together with
    its transformation matrices.

    The pivot is always the entry of smallest nonzero absolute value in the
    remaining block, ties going to the lowest (row, column) index, so the
    result is reproducible.
    """
    m, n = A.rows, A.cols
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()
    t = 0
    while t < min(m, n):
        pivot = _smallest_entry(D, t)
        if pivot is None:
            break
        _swap_rows(D, U, t, pivot[0])
        _swap_columns(D, V, t, pivot[1])
        p = D[t][t]
        for i in range(t + 1, m):
            q = D[i][t] // p
            if q:
                _add_row(D, U, i, t, -q)
        for j in range(t + 1, n):
            q = D[t][j] // p
            if q:
                _add_column(D, V, j, t, -q)
        if any(D[i][t] for i in range(t + 1, m)) or \
                any(D[t][j] for j in range(t + 1, n)):
            continue
        offending = _first_indivisible_row(D, t, p)
        if offending is not None:
            _add_row(D, U, t, offending, 1)
            continue
        if p < 0:
            D[t] = [-value for value in D[t]]
            U[t] = [-value for value in U[t]]
        t += 1
    return SmithDecomposition(
        IntMatrix(m, m, U), IntMatrix(m, n, D), IntMatrix(n, n, V))


def _smallest_entry(D, t):
    best = None
    for i in range(t, len(D)):
        for j in range(t, len(D[i])):
            value = D[i][j]
            if value and (best is None or abs(value) < best[0]):
                best = (abs(value), i, j)
    if best is None:
        return None
    return best[1], best[2]


def _first_indivisible_row(D, t, p):
    for i in range(t + 1, len(D)):
        for j in range(t + 1, len(D[i])):
            if D[i][j] % p:
                return i
    return None


def _swap_rows(D, U, a, b):
    if a != b:
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]


def _swap_columns(D, V, a, b):
    if a == b:
        return
    for matrix in (D, V):
        for row in matrix:
            row[a], row[b] = row[b], row[a]


def _add_row(D, U, target, source, factor):
    for matrix in (D, U):
        matrix[target] = [a + factor * b
                          for a, b in zip(matrix[target], matrix[source])]


def _add_column(D, V, target, source, factor):
    for matrix in (D, V):
        for row in matrix:
            row[target] += factor * row[source]


class FinAbGroup(namedtuple('FinAbGroup', ('free_rank', 'torsion'))):
    """
    A finitely generated abelian group ``Z^free_rank + Z/d_1 + ...``.
    """
    __slots__ = ()

    def __new__(cls, free_rank, torsion=()):
        return super().__new__(cls, free_rank, tuple(sorted(torsion)))

    @property
    def is_trivial(self):
        return not self.free_rank and not self.torsion

    def format(self, ring=Constants.RING_Z):
        base = 'F2' if ring == Constants.RING_F2 else 'Z'
        parts = []
        if self.free_rank == 1:
            parts.append(base)
        elif self.free_rank > 1:
            parts.append('%s^%d' % (base, self.free_rank))
        parts.extend('Z/%d' % d for d in self.torsion)
        return ' + '.join(parts) or '0'

    def __str__(self):
        return self.format()


class ChainComplexZ:
    """
    A cohomologically graded complex of finitely generated free modules.

    *bases* maps each degree to a sequence of hashable basis labels,
    *differentials* maps a degree *k* to the :class:`IntMatrix` of
    ``d^k: C^k → C^{k+1}`` (missing degrees are zero maps). That consecutive
    differentials compose to zero is checked by :meth:`check`, never assumed.
    """

    def __init__(self, bases, differentials=None, ring=Constants.RING_Z):
        self.ring = ring
        self.bases = {k: tuple(labels) for k, labels in bases.items()}
        self._index = {k: {label: i for i, label in enumerate(labels)}
                       for k, labels in self.bases.items()}
        self.differentials = {}
        for k, matrix in (differentials or {}).items():
            expected = (self.dimension(k + 1), self.dimension(k))
            if matrix.shape != expected:
                raise DimensionMismatch(
                    'Differential at degree %d has shape %dx%d, expected '
                    '%dx%d' % ((k,) + matrix.shape + expected))
            self.differentials[k] = matrix

    @classmethod
    def from_boundary(cls, bases, boundary, ring=Constants.RING_Z):
        """
        Builds a complex from a function *boundary* mapping a basis label of
        degree *k* to a mapping ``{label: coefficient}`` of degree *k+1*.
        """
        return cls(bases, boundary_matrices(bases, boundary), ring=ring)

    def degrees(self):
        return sorted(k for k, labels in self.bases.items() if labels)

    def basis(self, k):
        return self.bases.get(k, ())

    def dimension(self, k):
        return len(self.basis(k))

    def index(self, k, label):
        return self._index[k][label]

    def vector(self, k, chain):
        """
        Coordinates of *chain* (a mapping label → coefficient) in degree *k*.
        """
        vector = [0] * self.dimension(k)
        index = self._index.get(k, {})
        for label, coefficient in chain.items():
            if not coefficient:
                continue
            try:
                vector[index[label]] += coefficient
            except KeyError:
                raise KeyError('%r is not a basis element of degree %d' %
                               (label, k))
        return vector

    def differential(self, k):
        try:
            return self.differentials[k]
        except KeyError:
            return IntMatrix.zero(self.dimension(k + 1), self.dimension(k))

    def apply(self, k, vector):
        return self.differential(k).apply(vector)

    def check_at(self, k):
        """
        Raises :class:`NotAComplex` if ``d^k ∘ d^{k-1}`` does not vanish.
        """
        if k not in self.differentials or k - 1 not in self.differentials:
            return
        domain = GF(2) if self.ring == Constants.RING_F2 else ZZ
        composite = self.differentials[k].to_sparse(domain).matmul(
            self.differentials[k - 1].to_sparse(domain))
        if not composite.is_zero_matrix:
            raise NotAComplex(k)

    def check(self):
        for k in self.degrees():
            self.check_at(k)

    def cycles(self, k):
        return kernel_basis(self.differential(k), self.ring)


def boundary_matrices(bases, boundary):
    """
    The differential matrices of the complex spanned by *bases* whose
    differential sends a label to the mapping ``boundary(label)``.
    """
    index = {k: {label: i for i, label in enumerate(labels)}
             for k, labels in bases.items()}
    differentials = {}
    for k, labels in bases.items():
        target = index.get(k + 1, {})
        if not labels or not target:
            continue
        columns = []
        for label in labels:
            column = [0] * len(target)
            for image, coefficient in boundary(label).items():
                try:
                    column[target[image]] += coefficient
                except KeyError:
                    raise KeyError('Boundary of %r leaves the complex: %r' %
                                   (label, image))
            columns.append(column)
        differentials[k] = IntMatrix.from_columns(columns, len(target))
    return differentials


def rank(A, ring=Constants.RING_Z):
    """
    Rank of *A* over ℚ (for ``Z``) or over GF(2).
    """
    if not A.rows or not A.cols:
        return 0
    domain = GF(2) if ring == Constants.RING_F2 else QQ
    return A.to_domain_matrix(domain).rank()


def _rref_mod2(A):
    reduced, pivots = A.to_domain_matrix(GF(2)).rref()
    entries = [[int(value) % 2 for value in row]
               for row in reduced.to_Matrix().tolist()]
    return entries, list(pivots)


def kernel_basis(A, ring=Constants.RING_Z):
    """
    A basis of the kernel of *A*: a ℤ-basis (columns of *V* beyond the rank of
    the Smith decomposition) or a GF(2)-basis.
    """
    if not A.cols:
        return []
    if not A.rows:
        return IntMatrix.identity(A.cols).tolist()
    if ring == Constants.RING_F2:
        reduced, pivots = _rref_mod2(A)
        basis = []
        for free in range(A.cols):
            if free in pivots:
                continue
            vector = [0] * A.cols
            vector[free] = 1
            for row, pivot in enumerate(pivots):
                vector[pivot] = reduced[row][free]
            basis.append(vector)
        return basis
    snf = smith_normal_form(A)
    return [snf.V.column(j) for j in range(snf.rank, A.cols)]


def homology(C, k):
    """
    Returns ``ker(d^k)/im(d^{k-1})`` of the :class:`ChainComplexZ` *C* as a
    :class:`FinAbGroup`. Over GF(2) the free rank is the dimension of the
    homology vector space.
    """
    C.check_at(k)
    dimension = C.dimension(k)
    outgoing = C.differential(k)
    incoming = C.differential(k - 1)
    if C.ring == Constants.RING_F2:
        return FinAbGroup(dimension - rank(outgoing, C.ring) -
                          rank(incoming, C.ring))
    snf = smith_normal_form(incoming)
    free = dimension - rank(outgoing) - snf.rank
    return FinAbGroup(free, [d for d in snf.invariant_factors if d > 1])


def solve_integer(A, b):
    """
    Returns an integer vector *x* with ``A·x = b``. Raises
    :class:`Unsolvable` if there is no rational solution and
    :class:`RationalOnly` if all rational solutions are non-integral.
    """
    b = [int(value) for value in b]
    if len(b) != A.rows:
        raise DimensionMismatch('Right hand side of length %d for %d rows' %
                                (len(b), A.rows))
    snf = smith_normal_form(A)
    c = snf.U.apply(b)
    r = snf.rank
    if any(c[r:]):
        raise Unsolvable('Right hand side is not in the rational span')
    y = [0] * A.cols
    for i in range(r):
        d = snf.D[i, i]
        if c[i] % d:
            raise RationalOnly('Coordinate %d requires division by %d' %
                               (i, d))
        y[i] = c[i] // d
    return snf.V.apply(y)


def _solve_mod2(A, b):
    augmented = A.hstack(IntMatrix(A.rows, 1, [[value] for value in b]))
    reduced, pivots = _rref_mod2(augmented)
    if A.cols in pivots:
        raise Unsolvable('Right hand side is not in the span over GF(2)')
    x = [0] * A.cols
    for row, pivot in enumerate(pivots):
        x[pivot] = reduced[row][A.cols]
    return x


def solve(A, b, ring=Constants.RING_Z):
    """
    Solves ``A·x = b`` over the given coefficient ring.
    """
    if ring == Constants.RING_F2:
        if len(b) != A.rows:
            raise DimensionMismatch('Right hand side of length %d for %d '
                                    'rows' % (len(b), A.rows))
        if not A.cols:
            if any(value % 2 for value in b):
                raise Unsolvable('No unknowns')
            return []
        if not A.rows:
            return [0] * A.cols
        return _solve_mod2(A, b)
    return solve_integer(A, b)


def in_image(A, b, ring=Constants.RING_Z):
    """
    Whether *b* lies in the image of *A* over the given ring.
    """
    try:
        solve(A, b, ring)
    except (Unsolvable, RationalOnly):
        return False
    return True

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
Koszul sign bookkeeping. Functions returning a *parity* return an integer
whose residue mod 2 is the exponent of −1; :func:`sign` turns a parity into
``±1``.
"""


def sign(parity):
    return -1 if parity % 2 else 1


def _degree(x):
    return x if isinstance(x, int) else x.degree


def reduced_degree(x):
    """
    ``‖x‖ = deg(x) + 1`` of a generator (or of a plain integer degree).
    """
    return _degree(x) + 1


def reduced_sum(letters):
    """
    The sum of reduced degrees of *letters*, i.e. ✠ over the given range.
    """
    return sum(reduced_degree(x) for x in letters)


def koszul_sign(degrees, perm):
    """
    Sign of reordering factors of the given *degrees* so that position *i* of
    the result holds factor ``perm[i]``: the product of
    ``(−1)^{deg_a·deg_b}`` over all pairs of factors whose order is inverted.
    """
    degrees = list(degrees)
    perm = list(perm)
    if len(degrees) != len(perm):
        raise ValueError('Permutation of length %d for %d degrees' %
                         (len(perm), len(degrees)))
    if sorted(perm) != list(range(len(perm))):
        raise ValueError('Not a permutation: %r' % (perm,))
    parity = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                parity += degrees[perm[i]] * degrees[perm[j]]
    return sign(parity)


def block_parity(weights, start):
    """
    Parity of the sign that a bar-type operator picks up when acting on the
    block beginning at *start*: the sum of the weights in front of it.
    """
    return sum(weights[:start])


def dagger(degrees):
    """``† = Σ_k k·deg(x_k)`` for degrees of ``x_1, …, x_d``."""
    return sum(k * deg for k, deg in enumerate(degrees, 1))


def ddagger(right, middle, left):
    """
    ``‡ = Σ_j (s−j+1)·deg(x_|j) + s·deg(x̲) + Σ_j (j+s)·deg(x_j)`` with
    *right* the degrees of ``x_|1, …, x_|s`` and *left* those of
    ``x_1, …, x_r``.
    """
    s = len(right)
    return (sum((s - j + 1) * deg for j, deg in enumerate(right, 1)) +
            s * middle +
            sum((j + s) * deg for j, deg in enumerate(left, 1)))


def _reduced_range(degrees, first, last):
    # ✠_first^last over 1-based positions
    return sum(deg + 1 for deg in degrees[first - 1:last])


def diamond(degrees, r, s, n):
    """
    ``◇ = ✠_1^r·(1 + ✠_{r+1}^d) + n·✠_{r+1}^{d−s−1}`` for the degrees of a
    cyclic word ``a_1, …, a_d``.
    """
    d = len(degrees)
    return (_reduced_range(degrees, 1, r) *
            (1 + _reduced_range(degrees, r + 1, d)) +
            n * _reduced_range(degrees, r + 1, d - s - 1))


def circ(deg_q, deg_p, middle):
    """``∘ = deg(q)·(deg(p) + ✠(middle))``."""
    return deg_q * (deg_p + sum(deg + 1 for deg in middle))


def hochschild_wrap(degrees, r):
    """
    ``§ = ✠_1^r·(1 + ✠_{r+1}^d) + ✠_{r+1}^{d−1} + 1``, the sign of a term of
    the Hochschild differential whose block wraps around the last letter.
    """
    d = len(degrees)
    return (_reduced_range(degrees, 1, r) *
            (1 + _reduced_range(degrees, r + 1, d)) +
            _reduced_range(degrees, r + 1, d - 1) + 1)


def cardy(n):
    return n * (n + 1) // 2

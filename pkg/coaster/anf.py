# -*- coding: utf-8 -*-
#
# Copyright 2026 The coaster authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reading and writing algebraic normal form (ANF) text.

An expression is a XOR of monomials joined by ``+`` (``^`` is accepted as
well). A monomial is the constant ``1`` or a product of variables written
``x_i``, ``x_{i}`` or ``xi``, either juxtaposed or joined by ``*``.
Whitespace is ignored anywhere, so formulas can be pasted as typeset::

    >>> monomials('x_0x_1 + x_0')
    [1, 3]

Monomials are returned as integer masks: bit ``i - base`` is set when
``x_i`` occurs. A monomial occurring twice cancels.

"""

import re

from coaster import errors
from coaster._utils import popcount

_VARIABLE = re.compile(r'x_?(?:\{(\d+)\}|(\d+))')
_SEPARATOR = re.compile(r'[+^]')


def monomials(text, n=None, base=0):
    """Returns the sorted list of monomial masks of `text`.

    :param n: When given, variables must map to indices below `n`.
    :param base: Index of the first variable, so that ``x_1 … x_11`` can
                 be read onto indices ``0 … 10`` with ``base=1``.

    :raises: :class:`errors.AnfError` on malformed text.

    """

    compact = ''.join(text.split())
    if not compact:
        raise errors.AnfError('empty expression')

    parity = {}
    for term in _SEPARATOR.split(compact):
        mask = _monomial(term, n, base)
        if mask is not None:
            parity[mask] = parity.get(mask, 0) ^ 1

    return sorted(mask for mask, odd in parity.items() if odd)


def _monomial(term, n, base):
    if term == '1':
        return 0
    if term == '0':
        return None
    if not term or term.startswith('*') or term.endswith('*'):
        raise errors.AnfError('malformed token {!r}'.format(term))

    mask = 0
    position = 0
    while position < len(term):
        if term[position] == '*':
            position += 1

        match = _VARIABLE.match(term, position)
        if match is None:
            raise errors.AnfError(
                'malformed token {!r} in {!r}'.format(term[position:], term))

        index = int(match.group(1) or match.group(2)) - base
        if index < 0 or (n is not None and index >= n):
            raise errors.AnfError(
                'variable {!r} is out of range'.format(match.group(0)))

        mask |= 1 << index
        position = match.end()

    return mask


def degree(masks):
    return max((popcount(mask) for mask in masks), default=0)


def to_text(masks, base=0):
    """Renders monomial masks back to ANF text, lowest degree first."""

    if not masks:
        return '0'

    terms = []
    for mask in sorted(masks, key=lambda m: (popcount(m), _indices(m))):
        if mask == 0:
            terms.append('1')
        else:
            terms.append(''.join('x_{}'.format(i + base)
                                 for i in _indices(mask)))

    return ' + '.join(terms)


def _indices(mask):
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]

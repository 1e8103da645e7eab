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

"""Exact analysis of Boolean combining functions.

A function of `n` variables is held as a :class:`TruthTable` of ``2**n``
bits. Evaluation at point `x` reads variable ``x_i`` from bit `i` of the
index, everywhere in coaster::

    >>> parse_anf('x_0x_1 + x_0', 2).bits.tolist()
    [0, 1, 0, 0]

The spectral tools work on whole tables with numpy butterflies.

"""

import logging
import math
from fractions import Fraction

import numpy as np

from coaster import anf, errors, fields, models, validators, _utils

logger = logging.getLogger(__name__)

MAX_VARIABLES = 20


class TruthTable(object):
    """An immutable Boolean function of `n` variables.

    :param bits: Sequence of ``2**n`` zeros and ones.
    :param n: Variable count, derived from the length when omitted.

    :raises: :class:`errors.ValidationError` if `bits` is not a table.

    """

    __slots__ = ('_bits', '_n')

    def __init__(self, bits, n=None):
        bits = np.array(bits, dtype=np.uint8)

        if bits.ndim != 1 or bits.size == 0:
            raise errors.ValidationError('a truth table is a flat sequence')

        if n is None:
            n = bits.size.bit_length() - 1

        if not 0 <= n <= MAX_VARIABLES:
            raise errors.ValidationError(
                'variable count should be between 0 and {}'.format(
                    MAX_VARIABLES))

        if bits.size != 1 << n:
            raise errors.ValidationError(
                'a table of {} variables has {} entries, got {}'.format(
                    n, 1 << n, bits.size))

        if np.any(bits > 1):
            raise errors.ValidationError('table entries should be bits')

        bits.setflags(write=False)

        self._bits = bits
        self._n = n

    @classmethod
    def from_anf(cls, text, n, base=0):
        return parse_anf(text, n, base)

    @property
    def n(self):
        return self._n

    @property
    def bits(self):
        return self._bits

    @property
    def weight(self):
        return int(self._bits.sum())

    def __len__(self):
        return self._bits.size

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented

        return self._n == other._n and np.array_equal(self._bits, other._bits)

    def __hash__(self):
        return hash((self._n, self._bits.tobytes()))

    def __repr__(self):
        return '<{}.{}(n={}, weight={})>'.format(
            type(self).__module__, type(self).__name__, self._n, self.weight)

    def __invert__(self):
        return TruthTable(self._bits ^ 1, self._n)

    def __call__(self, values):
        """Evaluates the function at the point with coordinates `values`,
        ``values[i]`` being ``x_i``.

        """

        if len(values) != self._n:
            raise errors.ValidationError(
                'expected {} inputs, got {}'.format(self._n, len(values)))

        return int(self._bits[_utils.bits_to_int(values)])

    def evaluate(self, indices):
        """Vectorised evaluation at packed input indices."""

        return self._bits[np.asarray(indices, dtype=np.int64)]

    def anf_text(self, base=0):
        coefficients = anf_transform(self)
        return anf.to_text(np.flatnonzero(coefficients).tolist(), base)


class LinearMask(object):
    """The linear function ``x -> a.x`` selecting the variables of `mask`.

    :param mask: Integer selector, bit `i` standing for ``x_i``.
    :param n: Variable count.

    """

    __slots__ = ('mask', 'n')

    def __init__(self, mask, n):
        if not 0 <= n <= MAX_VARIABLES:
            raise errors.ValidationError(
                'variable count should be between 0 and {}'.format(
                    MAX_VARIABLES))

        if not 0 <= mask < (1 << n):
            raise errors.ValidationError(
                'mask {:#x} does not fit {} variables'.format(mask, n))

        self.mask = mask
        self.n = n

    @classmethod
    def from_variables(cls, indices, n, base=0):
        mask = 0
        for index in indices:
            position = index - base
            if not 0 <= position < n:
                raise errors.ValidationError(
                    'variable x_{} is out of range'.format(index))
            if mask >> position & 1:
                raise errors.ValidationError(
                    'variable x_{} is repeated'.format(index))
            mask |= 1 << position

        return cls(mask, n)

    def variables(self, base=0):
        return [i + base for i in range(self.n) if self.mask >> i & 1]

    @property
    def weight(self):
        return _utils.popcount(self.mask)

    def __call__(self, values):
        return _utils.popcount(self.mask & _utils.bits_to_int(values)) & 1

    def table(self):
        indices = np.arange(1 << self.n, dtype=np.int64) & self.mask
        return TruthTable(_parity(indices), self.n)

    def __eq__(self, other):
        if not isinstance(other, LinearMask):
            return NotImplemented

        return (self.mask, self.n) == (other.mask, other.n)

    def __hash__(self):
        return hash((self.mask, self.n))

    def __repr__(self):
        return '<{}.{}({})>'.format(type(self).__module__,
                                    type(self).__name__, self.variables())


class Bias(object):
    """A signed bias `epsilon`, with ``Pr[f = a.x] = (1 + epsilon) / 2``
    exactly.

    Held as a :class:`fractions.Fraction` in ``[-1, 1]``.

    """

    __slots__ = ('epsilon',)

    def __init__(self, epsilon):
        epsilon = Fraction(epsilon)

        if not -1 <= epsilon <= 1:
            raise errors.ValidationError(
                'bias {} is out of [-1, 1]'.format(epsilon))

        self.epsilon = epsilon

    @classmethod
    def from_walsh(cls, coefficient, n):
        return cls(Fraction(int(coefficient), 1 << n))

    @classmethod
    def from_log2(cls, exponent, sign=1):
        """``sign * 2**exponent`` for an integer `exponent` <= 0."""

        return cls(sign * Fraction(2) ** exponent)

    @property
    def log2_abs(self):
        if self.epsilon == 0:
            return -math.inf

        return (math.log2(abs(self.epsilon.numerator)) -
                math.log2(self.epsilon.denominator))

    @property
    def n_b(self):
        return -self.log2_abs

    @property
    def probability(self):
        return (1 + self.epsilon) / 2

    @property
    def sign(self):
        return (self.epsilon > 0) - (self.epsilon < 0)

    def power(self, exponent):
        return Bias(self.epsilon ** exponent)

    def __bool__(self):
        return self.epsilon != 0

    def __float__(self):
        return float(self.epsilon)

    def __abs__(self):
        return Bias(abs(self.epsilon))

    def __eq__(self, other):
        if not isinstance(other, Bias):
            return NotImplemented

        return self.epsilon == other.epsilon

    def __hash__(self):
        return hash(self.epsilon)

    def __repr__(self):
        return '<{}.{}({})>'.format(type(self).__module__,
                                    type(self).__name__, self.epsilon)


class FunctionProfile(models.Model):
    """The cryptographic properties of a combining function.

    `resiliency_order` is -1 for unbalanced functions.

    """

    variables = fields.Integer(validators.Range(0, MAX_VARIABLES),
                               required=True)
    balanced = fields.Boolean(required=True)
    algebraic_degree = fields.Integer(validators.Range(0), required=True)
    resiliency_order = fields.Integer(validators.Range(-1), required=True)
    nonlinearity = fields.Integer(validators.Range(0), required=True)
    algebraic_immunity = fields.Integer(validators.Range(0))

    def validate(self):
        super(FunctionProfile, self).validate()

        n = self.variables

        if 1 <= self.resiliency_order <= n - 2:
            if self.algebraic_degree + self.resiliency_order > n - 1:
                raise errors.ValidationError(
                    'degree {} and resiliency {} break the Siegenthaler '
                    'bound for {} variables'.format(
                        self.algebraic_degree, self.resiliency_order, n))

        if n and n % 2 == 0:
            bound = (1 << (n - 1)) - (1 << (n // 2 - 1))
            if self.nonlinearity > bound:
                raise errors.ValidationError(
                    'nonlinearity {} exceeds {}'.format(
                        self.nonlinearity, bound))


def parse_anf(text, n, base=0):
    """Returns the :class:`TruthTable` of ANF `text` over ``x_base …
    x_{base+n-1}``.

    :raises: :class:`errors.AnfError` on a malformed token or a variable
             out of range.

    """

    if not 0 <= n <= MAX_VARIABLES:
        raise errors.AnfError(
            'variable count should be between 0 and {}'.format(MAX_VARIABLES))

    coefficients = np.zeros(1 << n, dtype=np.uint8)
    coefficients[anf.monomials(text, n, base)] = 1

    return TruthTable(_mobius(coefficients), n)


def anf_transform(f):
    """Returns the ANF coefficients of `f`: entry `u` is 1 when the
    monomial with variable mask `u` occurs.

    """

    return _mobius(f.bits)


def walsh_transform(f):
    """Returns the Walsh spectrum ``W(a) = sum_x (-1)**(f(x) + a.x)`` of
    `f` as an int64 array indexed by mask.

    """

    spectrum = 1 - 2 * f.bits.astype(np.int64)

    h = 1
    while h < spectrum.size:
        view = spectrum.reshape(-1, 2, h)
        low = view[:, 0, :].copy()
        high = view[:, 1, :].copy()
        view[:, 0, :] = low + high
        view[:, 1, :] = low - high
        h <<= 1

    return spectrum


def algebraic_degree(f):
    coefficients = anf_transform(f)
    present = np.flatnonzero(coefficients)

    if present.size == 0:
        return 0

    return int(_weights(f.n)[present].max())


def resiliency_order(f, spectrum=None):
    """Largest `m` such that ``W(a) = 0`` for every mask of weight at
    most `m`, zero mask included; -1 if `f` is unbalanced.

    """

    if spectrum is None:
        spectrum = walsh_transform(f)

    if spectrum[0] != 0:
        return -1

    nonzero = _weights(f.n)[spectrum != 0]

    return int(nonzero.min()) - 1


def nonlinearity(f, spectrum=None):
    if spectrum is None:
        spectrum = walsh_transform(f)

    return (1 << f.n) // 2 - int(np.abs(spectrum).max()) // 2


def algebraic_immunity(f):
    """Smallest degree of a nonzero annihilator of `f` or of ``f + 1``.

    An annihilator of degree `d` exists iff the monomials of degree at
    most `d`, evaluated on the support of the function, are linearly
    dependent; rank is taken by elimination over integer bitsets.

    """

    weights = _weights(f.n)
    points = np.arange(1 << f.n, dtype=np.int64)
    supports = [points[f.bits == 1], points[f.bits == 0]]

    for d in range(f.n + 1):
        masks = np.flatnonzero(weights <= d)

        for support in supports:
            if masks.size > support.size:
                logger.debug('annihilator of degree %d by counting', d)
                return d

            rows = (_evaluations(int(mask), support) for mask in masks)
            rank = _rank(rows)

            logger.debug('degree %d: %d monomials, rank %d on %d points',
                         d, masks.size, rank, support.size)

            if rank < masks.size:
                return d

    return f.n


def profile(f, immunity=True):
    """Returns the :class:`FunctionProfile` of `f`.

    :param immunity: Set to `False` to skip the algebraic immunity,
                     the only costly property.

    """

    spectrum = walsh_transform(f)

    result = FunctionProfile(
        variables=f.n,
        balanced=bool(spectrum[0] == 0),
        algebraic_degree=algebraic_degree(f),
        resiliency_order=resiliency_order(f, spectrum),
        nonlinearity=nonlinearity(f, spectrum),
        algebraic_immunity=algebraic_immunity(f) if immunity else None)

    result.validate()

    return result


def approximation_bias(f, mask):
    """Bias of the linear approximation `mask` of `f`, computed from the
    tables.

    """

    if mask.n != f.n:
        raise errors.ValidationError(
            'mask over {} variables for a function of {}'.format(mask.n, f.n))

    disagreements = int(np.count_nonzero(f.bits != mask.table().bits))

    return Bias(1 - Fraction(2 * disagreements, 1 << f.n))


def best_affine_approximations(f, max_weight=None, limit=None):
    """Returns ``(LinearMask, Bias)`` pairs for every mask of weight at
    most `max_weight`, by decreasing absolute bias, then weight, then
    mask value. Zero biases are included at the end.

    """

    if max_weight is None:
        max_weight = f.n

    spectrum = walsh_transform(f)
    weights = _weights(f.n)
    masks = np.flatnonzero(weights <= max_weight)

    order = np.lexsort((masks, weights[masks], -np.abs(spectrum[masks])))
    masks = masks[order]

    if limit is not None:
        masks = masks[:limit]

    return [(LinearMask(int(mask), f.n), Bias.from_walsh(spectrum[mask], f.n))
            for mask in masks]


def restrict(f, fixed):
    """Substitutes constants for some variables of `f`.

    :param fixed: Mapping, or sequence of pairs, of variable index to bit.

    :returns: A :class:`TruthTable` on the remaining variables, which
              keep their relative order.

    """

    pairs = list(fixed.items()) if hasattr(fixed, 'items') else list(fixed)

    index = [slice(None)] * f.n
    seen = set()

    for variable, bit in pairs:
        if not 0 <= variable < f.n:
            raise errors.ValidationError(
                'variable x_{} is out of range'.format(variable))
        if variable in seen:
            raise errors.ValidationError(
                'variable x_{} is fixed twice'.format(variable))
        if bit not in (0, 1):
            raise errors.ValidationError(
                'x_{} should be fixed to a bit'.format(variable))

        seen.add(variable)
        # the last axis of the reshaped table is x_0
        index[f.n - 1 - variable] = bit

    cube = f.bits.reshape((2,) * f.n)
    remaining = np.asarray(cube[tuple(index)]).reshape(-1)

    return TruthTable(remaining, f.n - len(seen))


def _mobius(values):
    result = np.array(values, dtype=np.uint8)

    h = 1
    while h < result.size:
        view = result.reshape(-1, 2, h)
        view[:, 1, :] ^= view[:, 0, :]
        h <<= 1

    return result


def _weights(n):
    indices = np.arange(1 << n, dtype=np.int64)
    weights = np.zeros(1 << n, dtype=np.int64)

    for i in range(n):
        weights += (indices >> i) & 1

    return weights


def _parity(values):
    parity = np.zeros(values.shape, dtype=np.uint8)
    values = values.copy()

    while np.any(values):
        parity ^= (values & 1).astype(np.uint8)
        values >>= 1

    return parity


def _evaluations(mask, support):
    hits = (support & mask) == mask
    packed = np.packbits(hits, bitorder='little')

    return int.from_bytes(packed.tobytes(), 'little')


def _rank(rows):
    pivots = {}

    for row in rows:
        while row:
            top = row.bit_length() - 1
            pivot = pivots.get(top)
            if pivot is None:
                pivots[top] = row
                break
            row ^= pivot

    return len(pivots)

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

"""Nonlinear feedback shift registers.

Registers are Fibonacci style. A register of length `L` has cells
``0 … L-1``; cell 0 is the output cell. One clock computes the feedback
from the current cells, shifts every cell one place toward cell 0 and
writes the feedback into cell ``L-1``. The feedback is ANF text over the
cells, ``x_i`` being cell `i`::

    spec = NlfsrSpec(label=0, length=7, feedback='x_0 + x_1')

A fill is stored as an integer, bit `i` holding cell `i`.

Registers longer than :data:`WALKABLE_LENGTH` cells are never walked;
they must declare their period.

"""

import collections
import functools
import itertools
import logging
import math
import numbers

import numpy as np

from coaster import anf, errors, fields, models, validators, _utils

logger = logging.getLogger(__name__)

WALKABLE_LENGTH = 24

LcmPeriod = collections.namedtuple('LcmPeriod', ['value', 'log2'])


class NlfsrSpec(models.Model):
    """The description of one register.

    `feedback` may be left out for full-size registers whose feedback is
    unknown; such a register only carries its length and
    `declared_period` and cannot be clocked.

    """

    label = fields.Integer(validators.Range(0), required=True)
    length = fields.Integer(validators.Range(1, 64), required=True)
    feedback = fields.Anf()
    output_shift = fields.Integer(validators.Range(0), default=0)
    declared_period = fields.Integer(validators.Range(1))

    def validate(self):
        super(NlfsrSpec, self).validate()

        if self.feedback is not None:
            try:
                anf.monomials(self.feedback, self.length)
            except errors.AnfError as error:
                raise errors.ValidationError('feedback {}'.format(error))

        if self.declared_period is None:
            if self.feedback is None:
                raise errors.ValidationError(
                    'register {} needs a feedback or a declared '
                    'period'.format(self.label))
            if self.length > WALKABLE_LENGTH:
                raise errors.ValidationError(
                    'register {} is too long to walk and needs a declared '
                    'period'.format(self.label))

        elif self.declared_period > (1 << self.length) - 1:
            raise errors.ValidationError(
                'declared_period {} exceeds 2^{} - 1'.format(
                    self.declared_period, self.length))

    @property
    def clockable(self):
        return self.feedback is not None

    @property
    def walkable(self):
        return self.clockable and self.length <= WALKABLE_LENGTH


class RegisterState(object):
    """A register spec together with a nonzero fill.

    :param fill: An integer (bit `i` is cell `i`) or a sequence of cell
                 bits.

    :raises: :class:`errors.RegisterError` for a zero or oversized fill.

    """

    __slots__ = ('spec', 'fill')

    def __init__(self, spec, fill):
        if not isinstance(fill, numbers.Integral):
            fill = _check_cells(fill, spec.length)

        if fill == 0:
            raise errors.RegisterError(
                'register {} cannot hold the all-zero fill'.format(spec.label))
        if not 0 < fill < (1 << spec.length):
            raise errors.RegisterError(
                'fill {:#x} does not fit register {}'.format(fill, spec.label))

        self.spec = spec
        self.fill = int(fill)

    @property
    def cells(self):
        return _utils.int_to_bits(self.fill, self.spec.length)

    @property
    def output(self):
        return self.fill & 1

    def clock(self, steps=1):
        return clock(self, steps)

    def __eq__(self, other):
        if not isinstance(other, RegisterState):
            return NotImplemented

        return self.spec == other.spec and self.fill == other.fill

    def __hash__(self):
        return hash((self.spec.label, self.spec.length, self.fill))

    def __repr__(self):
        return '<{}.{}(label={}, fill={:#x})>'.format(
            type(self).__module__, type(self).__name__, self.spec.label,
            self.fill)


def feedback_masks(spec):
    if not spec.clockable:
        raise errors.RegisterError(
            'register {} has no feedback function'.format(spec.label))

    return _compile(spec.feedback, spec.length)


@functools.lru_cache(maxsize=None)
def _compile(feedback, length):
    return tuple(anf.monomials(feedback, length))


def step(fill, masks, length, inject=0):
    """One clock of a fill; `inject` is XORed into the feedback bit."""

    bit = inject
    for mask in masks:
        if fill & mask == mask:
            bit ^= 1

    return (fill >> 1) | (bit << (length - 1))


def clock(state, steps):
    """Returns `state` clocked `steps` times."""

    if steps < 0:
        raise errors.RegisterError('cannot clock backwards')

    masks = feedback_masks(state.spec)
    length = state.spec.length
    fill = state.fill

    for _ in range(steps):
        fill = step(fill, masks, length)

    return RegisterState(state.spec, fill)


def output_sequence(state, t0=0, count=None):
    """Yields ``x(t0), x(t0 + 1), …``, the register output shifted by
    `output_shift`. Infinite when `count` is :keyword:`None`.

    """

    if count is not None and count < 0:
        raise errors.RegisterError('count should be nonnegative')

    masks = feedback_masks(state.spec)
    length = state.spec.length
    fill = clock(state, t0 + state.spec.output_shift).fill

    produced = 0
    while count is None or produced < count:
        yield fill & 1
        fill = step(fill, masks, length)
        produced += 1


def period(spec):
    """The period of `spec`: `declared_period` when given, otherwise the
    cycle length through the fill with only cell ``L-1`` set.

    """

    if spec.declared_period is not None:
        return spec.declared_period

    if not spec.walkable:
        raise errors.RegisterError(
            'register {} has no period to walk'.format(spec.label))

    masks = feedback_masks(spec)
    start = 1 << (spec.length - 1)
    fill = step(start, masks, spec.length)

    steps = 1
    while fill != start:
        if steps >= 1 << spec.length:
            raise errors.RegisterError(
                'register {} does not return to its start fill'.format(
                    spec.label))
        fill = step(fill, masks, spec.length)
        steps += 1

    return steps


def is_primitive(spec):
    """`True` when the period of `spec` is ``2^L - 1``."""

    try:
        return period(spec) == (1 << spec.length) - 1
    except errors.RegisterError:
        return False


def lcm_period(periods):
    """Exact least common multiple of `periods`, with its log2."""

    periods = list(periods)

    if not periods or any(p < 1 for p in periods):
        raise errors.RegisterError('periods should be positive integers')

    value = math.lcm(*periods)

    return LcmPeriod(value, math.log2(value))


class CycleTable(object):
    """Every nonzero fill of a walkable register, placed on its cycle.

    Fill `s` sits on cycle ``c`` at phase ``p`` so that clocking it `k`
    times gives ``states(c)[(p + k) % T_c]`` and its output at time `k`
    is ``sequence(c)[(p + k) % T_c]``. Cycles are numbered by their
    smallest fill and start there.

    :raises: :class:`errors.RegisterError` when a fill has no
             predecessor, i.e. the feedback is not invertible.

    """

    def __init__(self, spec):
        if not spec.walkable:
            raise errors.RegisterError(
                'register {} cannot be walked'.format(spec.label))

        masks = feedback_masks(spec)
        size = 1 << spec.length

        cycle_of = np.full(size, -1, dtype=np.int64)
        phase_of = np.full(size, -1, dtype=np.int64)
        self._states = []
        self._sequences = []

        for start in range(1, size):
            if cycle_of[start] >= 0:
                continue

            index = len(self._states)
            walk = []
            fill = start
            while True:
                if cycle_of[fill] >= 0 or len(walk) >= size:
                    raise errors.RegisterError(
                        'register {} feedback is not invertible'.format(
                            spec.label))
                cycle_of[fill] = index
                phase_of[fill] = len(walk)
                walk.append(fill)
                fill = step(fill, masks, spec.length)
                if fill == start:
                    break

            states = np.array(walk, dtype=np.int64)
            self._states.append(states)
            self._sequences.append((states & 1).astype(np.uint8))

        self.spec = spec
        self._cycle_of = cycle_of
        self._phase_of = phase_of

        logger.debug('register %d: %d cycles of lengths %s', spec.label,
                     len(self._states), [len(s) for s in self._states])

    @property
    def cycles(self):
        return len(self._states)

    @property
    def primitive(self):
        return self.cycles == 1

    def locate(self, fill):
        if not 0 < fill < self._cycle_of.size:
            raise errors.RegisterError('fill {:#x} is not a nonzero fill of '
                                       'register {}'.format(fill,
                                                            self.spec.label))

        return int(self._cycle_of[fill]), int(self._phase_of[fill])

    def period_of(self, fill):
        cycle, _ = self.locate(fill)
        return len(self._states[cycle])

    def states(self, cycle):
        return self._states[cycle]

    def sequence(self, cycle):
        return self._sequences[cycle]

    def state_at(self, fill, steps):
        cycle, phase = self.locate(fill)
        states = self._states[cycle]

        return int(states[(phase + steps) % len(states)])

    def output(self, fill, positions):
        """Outputs of `fill` at times `positions`, without output shift."""

        cycle, phase = self.locate(fill)
        sequence = self._sequences[cycle]
        positions = np.asarray(positions, dtype=np.int64)

        return sequence[(positions + phase) % sequence.size]


@functools.lru_cache(maxsize=32)
def _cycle_table(spec_json):
    return CycleTable(NlfsrSpec.from_json(spec_json))


def cycle_table(spec):
    """Shared :class:`CycleTable` of `spec`, built once per spec."""

    return _cycle_table(spec.to_json(sort_keys=True))


class RegisterSource(object):
    """Random access to the shifted output ``x(t)`` of a register state,
    through its :class:`CycleTable`.

    """

    def __init__(self, state):
        self.state = state
        self.table = cycle_table(state.spec)

    @property
    def period(self):
        return self.table.period_of(self.state.fill)

    def at(self, positions):
        positions = np.asarray(positions, dtype=np.int64)
        return self.table.output(self.state.fill,
                                 positions + self.state.spec.output_shift)

    def __iter__(self):
        return output_sequence(self.state)


class ArraySource(object):
    """Random access over materialized bits ``s(start), s(start + 1), …``.

    :raises: :class:`errors.KeystreamError` when a position falls
             outside the held bits.

    """

    def __init__(self, bits, start=0):
        self.bits = np.asarray(bits, dtype=np.uint8)
        self.start = start

    def __len__(self):
        return self.bits.size

    def at(self, positions):
        positions = np.asarray(positions, dtype=np.int64) - self.start

        if positions.size and (positions.min() < 0 or
                               positions.max() >= self.bits.size):
            raise errors.KeystreamError(
                'positions {}..{} fall outside the {} available bits'.format(
                    positions.min() + self.start,
                    positions.max() + self.start, self.bits.size))

        return self.bits[positions]

    def __iter__(self):
        return iter(self.bits.tolist())


def decimate(source, factor, count, start=0):
    """Returns ``s(start), s(start + factor), …``, `count` bits.

    Sources with an ``at`` method are indexed directly; any other
    iterable is consumed lazily.

    """

    if factor < 1:
        raise errors.RegisterError('decimation factor should be positive')
    if count < 0:
        raise errors.RegisterError('count should be nonnegative')

    if hasattr(source, 'at'):
        return source.at(start + factor * np.arange(count, dtype=np.int64))

    picked = itertools.islice(iter(source), start, start + factor * count,
                              factor)

    try:
        return np.fromiter(picked, dtype=np.uint8, count=count)
    except ValueError:
        raise errors.KeystreamError(
            'source ended before {} decimated bits'.format(count))


def _check_cells(cells, length):
    cells = tuple(cells)

    if len(cells) != length or any(bit not in (0, 1) for bit in cells):
        raise errors.RegisterError(
            'a fill of a length {} register is {} bits'.format(length, length))

    return _utils.bits_to_int(cells)

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

"""Keystream generators built from registers and a combining function.

The keystream bit at time `t` is the combiner evaluated on the shifted
register outputs, register ``registers[k]`` feeding combiner variable
``x_{variable_base + k}``::

    spec = toy_spec()
    state = key_load(spec, KeyIv(key=(1, 0, 1, 1) * 8, iv=(0,) * 8))
    bits = keystream(state, 0, 64)

"""

import functools
import logging

import numpy as np

from coaster import (boolfn, combiners, errors, fields, models, registers,
                     validators, _utils)

logger = logging.getLogger(__name__)

KEYSTREAM_LIMIT = 1 << 63

SCHEDULES = ('recompute', 'hold')

# (length, feedback) in label order, all primitive trinomials
TOY_REGISTERS = [(7, 'x_0 + x_1'), (9, 'x_0 + x_4'), (10, 'x_0 + x_3'),
                 (11, 'x_0 + x_2'), (5, 'x_0 + x_2'), (6, 'x_0 + x_1')]

SMALL_TOY_REGISTERS = [(3, 'x_0 + x_1'), (4, 'x_0 + x_1'), (5, 'x_0 + x_2')]


class CipherSpec(models.Model):
    """An ordered list of registers and the ANF of their combiner.

    `combiner` may be omitted for ciphers whose combining function is
    unknown; they can be planned against but not run.

    """

    name = fields.String(required=True)
    registers = fields.Collection(registers.NlfsrSpec)
    combiner = fields.Anf()
    variable_base = fields.Integer(validators.Range(0), default=0)
    keystream_limit = fields.Integer(validators.Range(1),
                                     default=KEYSTREAM_LIMIT)

    def validate(self):
        super(CipherSpec, self).validate()

        if not self.registers:
            raise errors.ValidationError('registers should not be empty')

        if len(self.registers) > boolfn.MAX_VARIABLES:
            raise errors.ValidationError(
                'registers should be at most {}'.format(boolfn.MAX_VARIABLES))

        labels = self.labels
        if len(set(labels)) != len(labels):
            raise errors.ValidationError(
                'register labels should be distinct, got {}'.format(labels))

        if self.combiner is not None:
            try:
                boolfn.parse_anf(self.combiner, len(self.registers),
                                 self.variable_base)
            except errors.AnfError as error:
                raise errors.ValidationError('combiner {}'.format(error))

    @property
    def labels(self):
        return [register.label for register in self.registers]

    def register(self, label):
        for register in self.registers:
            if register.label == label:
                return register

        raise errors.RegisterError(
            '{} has no register {}'.format(self.name, label))

    def index_of(self, label):
        self.register(label)

        return self.labels.index(label)

    def period_of(self, label):
        return registers.period(self.register(label))

    def combiner_table(self):
        if self.combiner is None:
            raise errors.KeystreamError(
                '{} has no combining function'.format(self.name))

        return _combiner_table(self.combiner, len(self.registers),
                               self.variable_base)


@functools.lru_cache(maxsize=16)
def _combiner_table(text, n, base):
    return boolfn.parse_anf(text, n, base)


class KeyIv(models.Model):
    """Key and initial value bits, loaded as ``K || IV``."""

    key = fields.Bits(required=True)
    iv = fields.Bits(default=tuple)

    @classmethod
    def from_hex(cls, key, iv=''):
        """:raises: :class:`errors.DecodeError` if `key` or `iv` is not hex."""

        try:
            key_bits = _utils.hex_to_bits(key)
            iv_bits = _utils.hex_to_bits(iv) if iv else ()
        except ValueError:
            raise errors.DecodeError(
                'key and iv should be hex, got {!r} and {!r}'.format(key, iv))

        return cls(key=key_bits, iv=iv_bits)

    @property
    def bits(self):
        return tuple(self.key) + tuple(self.iv)


class CipherState(object):
    """One :class:`registers.RegisterState` per register of `spec`."""

    def __init__(self, spec, fills):
        if hasattr(fills, 'items'):
            fills = [fills[label] for label in spec.labels]

        fills = list(fills)
        if len(fills) != len(spec.registers):
            raise errors.RegisterError(
                '{} has {} registers, got {} fills'.format(
                    spec.name, len(spec.registers), len(fills)))

        self.spec = spec
        self.registers = [
            fill if isinstance(fill, registers.RegisterState)
            else registers.RegisterState(register, fill)
            for register, fill in zip(spec.registers, fills)]

    @property
    def fills(self):
        return {state.spec.label: state.fill for state in self.registers}

    def __eq__(self, other):
        if not isinstance(other, CipherState):
            return NotImplemented

        return self.spec == other.spec and self.registers == other.registers

    __hash__ = None

    def __repr__(self):
        return '<{}.{}({}, fills={})>'.format(
            type(self).__module__, type(self).__name__, self.spec.name,
            self.fills)


class KeystreamSource(object):
    """Random access to the keystream of a state whose registers can all
    be walked.

    """

    def __init__(self, state):
        self.state = state
        self.table = state.spec.combiner_table()
        self.sources = [registers.RegisterSource(register)
                        for register in state.registers]

    def at(self, positions):
        positions = np.asarray(positions, dtype=np.int64)

        if positions.size:
            _check_limit(self.state.spec, int(positions.min()),
                         int(positions.max()) + 1)

        index = np.zeros(positions.shape, dtype=np.int64)
        for k, source in enumerate(self.sources):
            index |= source.at(positions).astype(np.int64) << k

        return self.table.evaluate(index)

    def __iter__(self):
        return stream(self.state)


def stream(state, t0=0):
    """Yields ``S(t0), S(t0 + 1), …`` clocking every register."""

    _check_limit(state.spec, t0, t0)

    table = state.spec.combiner_table()
    outputs = [registers.output_sequence(register, t0)
               for register in state.registers]

    t = t0
    for bits in zip(*outputs):
        if t >= state.spec.keystream_limit:
            raise errors.KeystreamError(
                '{} keystream is limited to {} bits'.format(
                    state.spec.name, state.spec.keystream_limit))
        yield int(table.bits[_utils.bits_to_int(bits)])
        t += 1


def keystream(state, t0, count):
    """Returns ``S(t0), …, S(t0 + count - 1)`` as a uint8 array.

    :raises: :class:`errors.KeystreamError` past the keystream limit.

    """

    if count < 0:
        raise errors.KeystreamError('count should be nonnegative')

    _check_limit(state.spec, t0, t0 + count)

    if all(register.walkable for register in state.spec.registers):
        positions = np.arange(t0, t0 + count, dtype=np.int64)
        return KeystreamSource(state).at(positions)

    bits = stream(state, t0)

    return np.fromiter(bits, dtype=np.uint8, count=count)


def _check_limit(spec, start, stop):
    if start < 0:
        raise errors.KeystreamError('keystream positions are nonnegative')

    if stop > spec.keystream_limit:
        raise errors.KeystreamError(
            '{} keystream is limited to {} bits'.format(
                spec.name, spec.keystream_limit))


def key_load(spec, keyiv, schedule='recompute', extra_clocks=32):
    """Initializes every register from ``K || IV``.

    1. Register `i` takes the first ``L_i`` bits, bit `j` into cell `j`.
    2. It is clocked ``a - L_i`` times, the next unused bit being XORed
       into the feedback at each clock.
    3. For `extra_clocks` more clocks the combiner output of the current
       register outputs is XORed into every feedback. With
       ``schedule='recompute'`` that output is recomputed before every
       clock; with ``'hold'`` the first value is kept.
    4. Cell ``L_i - 1`` of every register is set to 1.

    :raises: :class:`errors.RegisterError` if ``K || IV`` is shorter
             than a register or a register has no feedback.

    """

    if schedule not in SCHEDULES:
        raise errors.ValidationError(
            'schedule should be in {}'.format(SCHEDULES))

    bits = keyiv.bits
    longest = max(register.length for register in spec.registers)

    if len(bits) < longest:
        raise errors.RegisterError(
            'K||IV has {} bits but {} needs at least {}'.format(
                len(bits), spec.name, longest))

    table = spec.combiner_table()
    masks = [registers.feedback_masks(register) for register in spec.registers]
    lengths = [register.length for register in spec.registers]

    fills = []
    for length, mask in zip(lengths, masks):
        fill = _utils.bits_to_int(bits[:length])
        for bit in bits[length:]:
            fill = registers.step(fill, mask, length, inject=bit)
        fills.append(fill)

    held = None
    for _ in range(extra_clocks):
        if schedule == 'recompute' or held is None:
            outputs = [fill & 1 for fill in fills]
            held = int(table.bits[_utils.bits_to_int(outputs)])

        fills = [registers.step(fill, mask, length, inject=held)
                 for fill, mask, length in zip(fills, masks, lengths)]

    fills = [fill | 1 << (length - 1) for fill, length in zip(fills, lengths)]

    logger.debug('%s loaded %d bits: %s', spec.name, len(bits),
                 ['{:#x}'.format(fill) for fill in fills])

    return CipherState(spec, fills)


def achterbahn128_spec(feedbacks=None):
    """Achterbahn-128: registers 0 … 12 of lengths ``21 + i`` combined by
    `F`.

    :param feedbacks: Optional map of register label to feedback ANF.

    """

    return _achterbahn('achterbahn-128', range(13), combiners.F_ANF, 0,
                       feedbacks)


def achterbahn80_spec(feedbacks=None):
    """Achterbahn-80: registers 1 … 11 combined by `G`."""

    return _achterbahn('achterbahn-80', range(1, 12), combiners.G_ANF,
                       combiners.G_BASE, feedbacks)


def _achterbahn(name, labels, combiner, base, feedbacks):
    feedbacks = feedbacks or {}

    spec = CipherSpec(
        name=name,
        registers=[registers.NlfsrSpec(label=label, length=21 + label,
                                       feedback=feedbacks.get(label),
                                       declared_period=(1 << 21 + label) - 1)
                   for label in labels],
        combiner=combiner,
        variable_base=base)

    spec.validate()

    return spec


V2_LENGTHS = {1: 19, 2: 22, 3: 23, 4: 25, 6: 27, 8: 29}


def achterbahn_v2_spec():
    """The registers of Achterbahn version 2 that its approximation
    involves. Their feedbacks and the combiner are not known, so only
    lengths and periods are declared.

    """

    spec = CipherSpec(
        name='achterbahn-v2',
        registers=[registers.NlfsrSpec(label=label, length=length,
                                       declared_period=(1 << length) - 1)
                   for label, length in sorted(V2_LENGTHS.items())])

    spec.validate()

    return spec


def toy_spec():
    """Primitive registers of lengths 7, 9, 10 and 11 combined linearly,
    plus registers 4 and 5 (lengths 5 and 6) entering only through the
    product ``x_4x_5``.

    """

    return _toy('toy', TOY_REGISTERS, combiners.TOY_ANF)


def small_toy_spec():
    """Three registers of lengths 3, 4 and 5, small enough to check whole
    keystream periods.

    """

    return _toy('toy-small', SMALL_TOY_REGISTERS, combiners.SMALL_TOY_ANF)


def _toy(name, layout, combiner):
    spec = CipherSpec(
        name=name,
        registers=[registers.NlfsrSpec(label=label, length=length,
                                       feedback=feedback)
                   for label, (length, feedback)
                   in enumerate(layout)],
        combiner=combiner)

    spec.validate()

    return spec


BUILTIN = {
    'achterbahn-128': achterbahn128_spec,
    'achterbahn-80': achterbahn80_spec,
    'achterbahn-v2': achterbahn_v2_spec,
    'toy': toy_spec,
    'toy-small': small_toy_spec,
}


def builtin_spec(name):
    try:
        factory = BUILTIN[name]
    except KeyError:
        raise errors.ValidationError(
            'unknown cipher {!r}, expected one of {}'.format(
                name, sorted(BUILTIN)))

    return factory()

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

import functools


def repr_options(options):
    return ', '.join('{}={!r}'.format(k, v) for k, v in options.items())


def popcount(value):
    return bin(value).count('1')


def bits_to_int(bits):
    """Packs a bit sequence into an integer, bit `i` of the result being
    `bits[i]`.

    """

    value = 0
    for i, bit in enumerate(bits):
        if bit:
            value |= 1 << i
    return value


def int_to_bits(value, length):
    return tuple((value >> i) & 1 for i in range(length))


def hex_to_bits(text):
    """Reads a hex string as a bit tuple, most significant bit of each
    byte first.

    """

    text = text.strip().lower()
    if text.startswith('0x'):
        text = text[2:]

    data = bytes.fromhex(text)
    return tuple((byte >> (7 - i)) & 1 for byte in data for i in range(8))


def bits_to_hex(bits):
    """Inverse of :func:`hex_to_bits`; a trailing partial byte is padded
    with zeros.

    """

    out = bytearray()
    for start in range(0, len(bits), 8):
        chunk = list(bits[start:start + 8])
        chunk.extend([0] * (8 - len(chunk)))
        byte = 0
        for bit in chunk:
            byte = (byte << 1) | bit
        out.append(byte)
    return out.hex()


def nullable(method):
    """Makes a validator, encoder or decoder method skip `None`, the
    value of a field that was not given.

    """

    @functools.wraps(method)
    def wrapper(self, value):
        if value is not None:
            return method(self, value)

    return wrapper

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

"""Builtin ciphers, plans and the figures expected of them.

Plans and cipher specs can also be read from JSON files holding their
:func:`models.Model.encode` form::

    plan = load_plan('a80')
    plan = load_plan('plans/custom.json')

"""

import json
from fractions import Fraction

from coaster import attack, cipher, combiners, errors

Claim = attack.Claim


def toy_plan():
    """One offset ``T_0 T_3`` cancels registers 0 and 3; registers 1
    and 2 are guessed.

    """

    return attack.make_plan(cipher.toy_spec(), [0, 1, 2, 3],
                            pairing=[[0, 3]], targets=[1, 2], name='toy')


def toy_decimated_plan():
    return attack.make_plan(cipher.toy_spec(), [0, 1, 2, 3],
                            pairing=[[3]], decimation=[0], targets=[1, 2],
                            name='toy-decimated')


def toy_direct_plan():
    """No offsets on the small toy: both approximation registers are
    guessed and register 1 enters only through ``x_1x_2``.

    """

    return attack.make_plan(cipher.small_toy_spec(), [0, 2], targets=[0, 2],
                            name='toy-direct')


def v2_plan():
    return attack.make_plan(cipher.achterbahn_v2_spec(), [1, 2, 3, 4, 6, 8],
                            pairing=[[1, 8], [2, 6]], decimation=[3],
                            targets=[4], base_bias=Fraction(1, 8), name='v2')


def a80_plan():
    return attack.make_plan(cipher.achterbahn80_spec(),
                            [1, 3, 4, 5, 6, 7, 10],
                            pairing=[[4, 7], [5, 6]], decimation=[10],
                            targets=[1, 3], name='a80')


def a128_plan():
    return attack.make_plan(cipher.achterbahn128_spec(),
                            [0, 1, 2, 3, 4, 7, 8, 9, 10],
                            pairing=[[0, 3, 7], [4, 10], [8, 9]],
                            targets=[1, 2], name='a128')


PLANS = {
    'toy': toy_plan,
    'toy-decimated': toy_decimated_plan,
    'toy-direct': toy_direct_plan,
    'v2': v2_plan,
    'a80': a80_plan,
    'a128': a128_plan,
}

CLAIMS = {
    'toy-direct': [
        Claim('log2_samples', 2.0, 1e-9),
        Claim('log2_time', 10.0, 1e-9),
    ],
    'v2': [
        Claim('log2_data', 49.8),
        Claim('log2_time', 49.0),
    ],
    'a80': [
        Claim('log2_time', 70.0),
        Claim('log2_data', 56.32,
              note='published figure; N T_10 + T_4 T_7 + T_5 T_6 gives '
                   '2^55.58'),
        Claim('log2_time_folded', 45.0, 0.5,
              note='published figure; the folded cost with targets of '
                   'lengths 22 and 24 gives 2^52.04'),
    ],
    'a128': [
        Claim('log2_time_folded', 75.4),
        Claim('log2_data', 61.0, relation='below'),
    ],
}

FUNCTIONS = {
    'F': {'balanced': True, 'algebraic_degree': 4, 'resiliency_order': 8,
          'nonlinearity': 3584, 'algebraic_immunity': 4},
    'G': {'balanced': True, 'algebraic_degree': 4, 'resiliency_order': 6,
          'nonlinearity': 896, 'algebraic_immunity': 4},
}

APPROXIMATIONS = {
    'F': ([0, 1, 2, 3, 4, 7, 8, 9, 10], Fraction(1, 8)),
    'G': ([1, 3, 4, 5, 6, 7, 10], Fraction(-1, 8)),
}


def claims(name):
    return list(CLAIMS.get(name, []))


def builtin_plan(name):
    try:
        factory = PLANS[name]
    except KeyError:
        raise errors.ValidationError(
            'unknown plan {!r}, expected one of {}'.format(
                name, sorted(PLANS)))

    return factory()


def builtin_function(name):
    """Returns ``(text, n, base)`` of a builtin combiner."""

    try:
        return combiners.BUILTIN[name]
    except KeyError:
        raise errors.ValidationError(
            'unknown function {!r}, expected one of {}'.format(
                name, sorted(combiners.BUILTIN)))


def load_plan(reference):
    """A builtin plan by name, or a plan read from a JSON file."""

    if reference in PLANS:
        return builtin_plan(reference)

    return attack.ParityCheckPlan.load(_read(reference))


def load_spec(reference):
    """A builtin cipher spec by name, or one read from a JSON file."""

    if reference in cipher.BUILTIN:
        return cipher.builtin_spec(reference)

    return cipher.CipherSpec.load(_read(reference))


def _read(path):
    try:
        with open(path) as f:
            return json.load(f)
    except OSError as error:
        raise errors.DecodeError('cannot read {}: {}'.format(
            path, error.strerror))
    except ValueError as error:
        raise errors.DecodeError('{} is not JSON: {}'.format(path, error))

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

"""ANF text of the combining functions coaster ships with.

`F_ANF` combines the 13 registers of Achterbahn-128 over ``x_0 … x_12``.
`G_ANF` is its Achterbahn-80 sub-function ``F(0, x_1, …, x_11, 0)``,
written over ``x_1 … x_11`` and loaded with ``base=1``.

"""

F_ANF = (
    'x_0 + x_1 + x_2 + x_3 + x_4 + x_5 + x_7 + x_9 + x_{11} + x_{12}'
    ' + x_0x_5 + x_2x_{10} + x_2x_{11} + x_4x_8 + x_4x_{12} + x_5x_6'
    ' + x_6x_8 + x_6x_{10} + x_6x_{11} + x_6x_{12} + x_7x_8 + x_7x_{12}'
    ' + x_8x_9 + x_8x_{10} + x_9x_{10} + x_9x_{11} + x_9x_{12}'
    ' + x_{10}x_{12} + x_0x_5x_8 + x_0x_5x_{10} + x_0x_5x_{11}'
    ' + x_0x_5x_{12} + x_1x_2x_8 + x_1x_2x_{12} + x_1x_4x_{10}'
    ' + x_1x_4x_{11} + x_1x_8x_9 + x_1x_9x_{10} + x_1x_9x_{11}'
    ' + x_1x_9x_{12} + x_2x_3x_8 + x_2x_3x_{12} + x_2x_4x_8'
    ' + x_2x_4x_{10} + x_2x_4x_{11} + x_2x_4x_{12} + x_2x_7x_8'
    ' + x_2x_7x_{12} + x_2x_8x_{10} + x_2x_8x_{11} + x_2x_9x_{10}'
    ' + x_2x_9x_{11} + x_2x_{10}x_{12} + x_2x_{11}x_{12} + x_3x_4x_8'
    ' + x_3x_4x_{12} + x_3x_8x_9 + x_3x_9x_{12} + x_4x_7x_8'
    ' + x_4x_7x_{12} + x_4x_8x_9 + x_4x_9x_{12} + x_5x_6x_8'
    ' + x_5x_6x_{10} + x_5x_6x_{11} + x_5x_6x_{12} + x_6x_8x_{10}'
    ' + x_6x_8x_{11} + x_6x_{10}x_{12} + x_6x_{11}x_{12} + x_7x_8x_9'
    ' + x_7x_9x_{12} + x_8x_9x_{10} + x_8x_9x_{11} + x_9x_{10}x_{12}'
    ' + x_9x_{11}x_{12} + x_0x_5x_8x_{10} + x_0x_5x_8x_{11}'
    ' + x_0x_5x_{10}x_{12} + x_0x_5x_{11}x_{12} + x_1x_2x_3x_8'
    ' + x_1x_2x_3x_{12} + x_1x_2x_7x_8 + x_1x_2x_7x_{12} + x_1x_3x_5x_8'
    ' + x_1x_3x_5x_{12} + x_1x_3x_8x_9 + x_1x_3x_9x_{12}'
    ' + x_1x_4x_8x_{10} + x_1x_4x_8x_{11} + x_1x_4x_{10}x_{12}'
    ' + x_1x_4x_{11}x_{12} + x_1x_5x_7x_8 + x_1x_5x_7x_{12}'
    ' + x_1x_7x_8x_9 + x_1x_7x_9x_{12} + x_1x_8x_9x_{10}'
    ' + x_1x_8x_9x_{11} + x_1x_9x_{10}x_{12} + x_1x_9x_{11}x_{12}'
    ' + x_2x_3x_4x_8 + x_2x_3x_4x_{12} + x_2x_3x_5x_8 + x_2x_3x_5x_{12}'
    ' + x_2x_4x_7x_8 + x_2x_4x_7x_{12} + x_2x_4x_8x_{10}'
    ' + x_2x_4x_8x_{11} + x_2x_4x_{10}x_{12} + x_2x_4x_{11}x_{12}'
    ' + x_2x_5x_7x_8 + x_2x_5x_7x_{12} + x_2x_8x_9x_{10}'
    ' + x_2x_8x_9x_{11} + x_2x_9x_{10}x_{12} + x_2x_9x_{11}x_{12}'
    ' + x_3x_4x_8x_9 + x_3x_4x_9x_{12} + x_4x_7x_8x_9 + x_4x_7x_9x_{12}'
    ' + x_5x_6x_8x_{10} + x_5x_6x_8x_{11} + x_5x_6x_{10}x_{12}'
    ' + x_5x_6x_{11}x_{12}'
)

G_ANF = (
    'x_1 + x_2 + x_3 + x_4 + x_5 + x_7 + x_9 + x_{11}'
    ' + x_2x_{10} + x_2x_{11} + x_4x_8 + x_5x_6 + x_6x_8 + x_6x_{10}'
    ' + x_6x_{11} + x_7x_8 + x_8x_9 + x_8x_{10} + x_9x_{10} + x_9x_{11}'
    ' + x_1x_2x_8 + x_1x_4x_{10} + x_1x_4x_{11} + x_1x_8x_9'
    ' + x_1x_9x_{10} + x_1x_9x_{11} + x_2x_3x_8 + x_2x_4x_8'
    ' + x_2x_4x_{10} + x_2x_4x_{11} + x_2x_7x_8 + x_2x_8x_{10}'
    ' + x_2x_8x_{11} + x_2x_9x_{10} + x_2x_9x_{11} + x_3x_4x_8'
    ' + x_3x_8x_9 + x_4x_7x_8 + x_4x_8x_9 + x_5x_6x_8 + x_5x_6x_{10}'
    ' + x_5x_6x_{11} + x_6x_8x_{10} + x_6x_8x_{11} + x_7x_8x_9'
    ' + x_8x_9x_{10} + x_8x_9x_{11} + x_1x_2x_3x_8 + x_1x_2x_7x_8'
    ' + x_1x_3x_5x_8 + x_1x_3x_8x_9 + x_1x_4x_8x_{10}'
    ' + x_1x_4x_8x_{11} + x_1x_5x_7x_8 + x_1x_7x_8x_9'
    ' + x_1x_8x_9x_{10} + x_1x_8x_9x_{11} + x_2x_3x_4x_8'
    ' + x_2x_3x_5x_8 + x_2x_4x_7x_8 + x_2x_4x_8x_{10}'
    ' + x_2x_4x_8x_{11} + x_2x_5x_7x_8 + x_2x_8x_9x_{10}'
    ' + x_2x_8x_9x_{11} + x_3x_4x_8x_9 + x_4x_7x_8x_9'
    ' + x_5x_6x_8x_{10} + x_5x_6x_8x_{11}'
)

G_BASE = 1

# 3-resilient, degree 2; x_4x_5 is the only nonlinear term
TOY_ANF = 'x_0 + x_1 + x_2 + x_3 + x_4x_5'

SMALL_TOY_ANF = 'x_0 + x_2 + x_1x_2'

BUILTIN = {
    'F': (F_ANF, 13, 0),
    'G': (G_ANF, 11, G_BASE),
    'toy': (TOY_ANF, 6, 0),
    'toy-small': (SMALL_TOY_ANF, 3, 0),
}

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

"""Decoders read JSON data back into field values. They are the inverse
of :mod:`encoders`.

"""

from fractions import Fraction

from coaster import errors
from coaster._utils import nullable


class Decoder(object):
    def __call__(self, value):
        return self.decode(value)


class Model(Decoder):
    def __init__(self, model):
        self._model = model

    @nullable
    def decode(self, value):
        return self._model.decode(value)


class List(Decoder):
    def __init__(self, *decoders):
        self._decoders = decoders

    @nullable
    def decode(self, value):
        result = []
        for item in value:
            for decoder in self._decoders:
                item = decoder(item)

            result.append(item)

        return result


class Collection(List):
    def __init__(self, model):
        super(Collection, self).__init__(Model(model))


class Ratio(Decoder):
    @nullable
    def decode(self, value):
        try:
            return Fraction(value)
        except (TypeError, ValueError):
            raise errors.DecodeError('{!r} is not a fraction'.format(value))


class Bits(Decoder):
    @nullable
    def decode(self, value):
        if not isinstance(value, str) or set(value) - set('01'):
            raise errors.DecodeError('{!r} is not a bit string'.format(value))

        return tuple(int(bit) for bit in value)


class Map(Decoder):
    @nullable
    def decode(self, value):
        try:
            return {int(key): item for key, item in value.items()}
        except (AttributeError, ValueError):
            raise errors.DecodeError('{!r} is not an integer map'.format(value))

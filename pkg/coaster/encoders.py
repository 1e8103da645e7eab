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

"""Encoders turn field values into JSON-friendly data."""

from coaster import errors
from coaster._utils import nullable


class Encoder(object):
    def __call__(self, value):
        return self.encode(value)


class Model(Encoder):
    @nullable
    def encode(self, value):
        return value.encode()


class List(Encoder):
    def __init__(self, *encoders):
        self._encoders = encoders

    @nullable
    def encode(self, value):
        if not isinstance(value, (list, tuple)):
            raise errors.EncodeError('should be a list')

        result = []
        for item in value:
            for encoder in self._encoders:
                item = encoder(item)

            result.append(item)

        return result


class Collection(List):
    def __init__(self):
        super(Collection, self).__init__(Model())


class Ratio(Encoder):
    """Writes a fraction as ``"num/den"`` so no precision is lost."""

    @nullable
    def encode(self, value):
        return '{}/{}'.format(value.numerator, value.denominator)


class Bits(Encoder):
    @nullable
    def encode(self, value):
        return ''.join(str(int(bit)) for bit in value)


class Map(Encoder):
    """JSON object keys are strings; integer keys are written as such."""

    @nullable
    def encode(self, value):
        return {str(key): int(item) for key, item in sorted(value.items())}

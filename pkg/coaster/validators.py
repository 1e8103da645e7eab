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

"""The `validators` module contains the checks attached to :mod:`fields`.

A validator is any callable `object` which receives a `value` as the
target for the validation. If the validation fails it raises an
:class:`errors.ValidationError` with an error message.

Validators are passed to :class:`fields.Field` and subclasses as positional
arguments::

    class NlfsrSpec(Model):
        length = fields.Integer(validators.Range(1, 64), required=True)

"""

import numbers
import collections.abc
from fractions import Fraction

from coaster import anf, errors
from coaster._utils import nullable


class Validator(object):
    def __call__(self, value):
        self.validate(value)

    def validate(self, value):
        raise NotImplementedError()


class Required(Validator):
    """This validator forces fields to have a value other than :keyword:`None`."""

    def validate(self, value):
        if value is None:
            raise errors.ValidationError('is required')


class In(Validator):
    """This validator forces fields to have their value in the given list.

    :param choices: A `list` of possible values.

    """

    def __init__(self, choices):
        self.choices = choices

    def validate(self, value):
        if value not in self.choices:
            raise errors.ValidationError('should be in {}'.format(self.choices))


class String(Validator):
    @nullable
    def validate(self, value):
        if not isinstance(value, str):
            raise errors.ValidationError('should be a string')


class Integer(Validator):
    """Accepts Python and numpy integers, but not booleans."""

    @nullable
    def validate(self, value):
        if isinstance(value, bool) or not isinstance(value, numbers.Integral):
            raise errors.ValidationError('should be an integer')


class Float(Validator):
    """Accepts any real number; integers are valid floats here since JSON
    configs write ``1`` for ``1.0``.

    """

    @nullable
    def validate(self, value):
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise errors.ValidationError('should be a float')


class Boolean(Validator):
    @nullable
    def validate(self, value):
        if not isinstance(value, bool):
            raise errors.ValidationError('should be a boolean')


class Ratio(Validator):
    """This validator forces values to be exact rationals."""

    def __init__(self, lower=None, upper=None):
        self.lower = lower
        self.upper = upper

    @nullable
    def validate(self, value):
        if not isinstance(value, (Fraction, numbers.Integral)):
            raise errors.ValidationError('should be a fraction')

        _check_bounds(value, self.lower, self.upper)


class Range(Validator):
    """This validator forces numeric values into ``[lower, upper]``.
    Either bound may be :keyword:`None`.

    """

    def __init__(self, lower=None, upper=None):
        self.lower = lower
        self.upper = upper

    @nullable
    def validate(self, value):
        _check_bounds(value, self.lower, self.upper)


def _check_bounds(value, lower, upper):
    if lower is not None and value < lower:
        raise errors.ValidationError('should be at least {}'.format(lower))
    if upper is not None and value > upper:
        raise errors.ValidationError('should be at most {}'.format(upper))


class Bits(Validator):
    """This validator forces values to be sequences of 0/1 integers."""

    @nullable
    def validate(self, value):
        if not isinstance(value, collections.abc.Sequence) or isinstance(value, str):
            raise errors.ValidationError('should be a bit sequence')

        for bit in value:
            if bit not in (0, 1) or isinstance(bit, bool):
                raise errors.ValidationError('should contain only 0 and 1')


class Anf(String):
    """This validator forces values to be well formed ANF text, see
    :mod:`anf`.

    :param n: Optional variable count the expression must fit in.
    :param base: Index of the first variable.

    """

    def __init__(self, n=None, base=0):
        super(Anf, self).__init__()
        self.n = n
        self.base = base

    @nullable
    def validate(self, value):
        super(Anf, self).validate(value)

        try:
            anf.monomials(value, self.n, self.base)
        except errors.AnfError as error:
            raise errors.ValidationError('should be ANF text ({})'.format(error))


class Model(Validator):
    """This validator forces fields values to be an instance of the given
    :class:`models.Model` subclass and also validates the whole `model`.

    :param model: A subclass of :class:`models.Model`

    """

    def __init__(self, model):
        self.model = model

    @nullable
    def validate(self, value):
        if not isinstance(value, self.model):
            raise errors.ValidationError(
                "should be an instance of '{}'".format(self.model.__name__))

        value.validate()


class List(Validator):
    """This validator forces field values to be a :keyword:`list` (or a
    tuple). Inner validators check every element::

        targets = fields.Field(validators.List(validators.Integer()))

    :param \\*validators: Inner validators as positional arguments.

    """

    def __init__(self, *validators):
        self.validators = validators

    @nullable
    def validate(self, value):
        if not isinstance(value, (list, tuple)):
            raise errors.ValidationError('should be a list')

        for item in value:
            for validator in self.validators:
                validator(item)


class Map(Validator):
    """This validator forces values to be dicts whose keys and values pass
    the given validators.

    """

    def __init__(self, keys, values):
        self.keys = keys
        self.values = values

    @nullable
    def validate(self, value):
        if not isinstance(value, collections.abc.Mapping):
            raise errors.ValidationError('should be a mapping')

        for key, item in value.items():
            self.keys(key)
            self.values(item)

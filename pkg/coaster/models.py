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

"""The `models` module contains the record abstraction every configuration
file and every report in coaster is built on: the `Model`.

To define a record subclass :class:`Model` and add :mod:`fields` as class
attributes::

    class NlfsrSpec(Model):
         label = fields.Integer(required=True)
         length = fields.Integer(required=True)
         feedback = fields.Anf()

    spec = NlfsrSpec.load({'label': 1, 'length': 7, 'feedback': 'x_0 + x_1'})

    print(spec.to_json(sort_keys=True))
    '{"declared_period": null, "feedback": "x_0 + x_1", "label": 1, ...}'

Invariants spanning several fields are checked by overriding
:func:`Model.validate` and calling the base implementation first.

"""

import json

from coaster import fields, errors, _utils


class ModelMeta(type):
    def __new__(cls, name, bases, attrs):
        declared = {}

        for base in reversed(bases):
            declared.update(getattr(base, '_fields', {}))
            for k, v in base.__dict__.items():
                if isinstance(v, fields.Field):
                    declared[k] = v

        for k, v in attrs.items():
            if isinstance(v, fields.Field):
                declared[k] = v

        attrs['_fields'] = declared

        return super(ModelMeta, cls).__new__(cls, name, bases, attrs)

    def __repr__(cls):
        return '<{}.{}({})>'.format(cls.__module__, cls.__name__,
                                    _utils.repr_options(cls._fields))


class Model(object, metaclass=ModelMeta):
    """The `Model` class. All coaster records subclass this.

    The default :func:`__init__` takes keyword arguments with the field
    values. A key that is not a field raises :class:`errors.FieldError`.

    Field values can be read and written as attributes or as dict-like
    items::

        >>> spec['length'] is spec.length
        True
        >>> spec['foo'] = 'bar'
        Traceback (most recent call last):
          ...
        coaster.errors.FieldError: foo

    Two models are equal when they are of the same class and encode to
    the same data.

    :param \\*\\*kwargs: Keyword arguments with the fields values.

    """

    def __new__(cls, *args, **kwargs):
        model = super(Model, cls).__new__(cls)
        model._data = {}

        return model

    def __init__(self, **kwargs):
        for k, v in kwargs.items():
            self[k] = v

    def __repr__(self):
        cls = type(self)

        return '<{}.{}({})>'.format(cls.__module__, cls.__name__,
                                    _utils.repr_options(dict(self)))

    def __iter__(self):
        for name in self._fields:
            value = getattr(self, name)

            if isinstance(value, Model):
                value = dict(value)
            elif isinstance(value, list):
                value = [dict(item) if isinstance(item, Model) else item
                         for item in value]

            yield name, value

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented

        return self.encode() == other.encode()

    __hash__ = None

    def __getitem__(self, k):
        if k not in self._fields:
            raise errors.FieldError(k)

        return getattr(self, k)

    def __setitem__(self, k, v):
        if k not in self._fields:
            raise errors.FieldError(k)

        setattr(self, k, v)

    @property
    def is_valid(self):
        """`True` when :func:`validate` raises nothing."""

        try:
            self.validate()
        except errors.ValidationError:
            return False
        else:
            return True

    def validate(self):
        """Validates every field of this `model`.

        The first failing field raises :class:`errors.ValidationError`
        with the field name prepended to the message.

        """

        for name, field in self._fields.items():
            try:
                field.validate(getattr(self, name))
            except errors.ValidationError as err:
                raise errors.ValidationError('{} {}'.format(name, err))

    def encode(self):
        """Returns the `model` as JSON-friendly data. Fields declared
        `read_only` are left out.

        """

        return {
            name: field.encode(getattr(self, name))
            for name, field in self._fields.items()
            if not field.options.get('read_only', False)
        }

    def to_json(self, *args, **kwargs):
        """Returns :func:`encode` as a json string. Takes the same
        arguments as :py:func:`json.dumps`.

        """

        return json.dumps(self.encode(), *args, **kwargs)

    @classmethod
    def decode(cls, raw):
        """Returns a dict of decoded field values read from `raw` data.
        Missing keys are skipped so defaults apply.

        """

        result = {}

        for name, field in cls._fields.items():
            try:
                value = raw[name]
            except KeyError:
                continue
            else:
                value = field.decode(value)

            result[name] = value

        return result

    @classmethod
    def load(cls, raw):
        """Builds and validates a `model` from `raw` decoded JSON data.

        :raises: :class:`errors.DecodeError` when `raw` is not an object,
                 :class:`errors.ValidationError` when the result is invalid.

        """

        if not isinstance(raw, dict):
            raise errors.DecodeError(
                '{} expects an object, got {!r}'.format(cls.__name__, raw))

        model = cls(**cls.decode(raw))
        model.validate()

        return model

    @classmethod
    def from_json(cls, text):
        try:
            raw = json.loads(text)
        except ValueError as error:
            raise errors.DecodeError(str(error))

        return cls.load(raw)

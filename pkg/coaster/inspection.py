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

"""Declared fields of records, for code that lays records out, such as
:mod:`coaster.reports`.

"""

from coaster import models


def encoded_fields(model):
    """Returns the ``(name, field)`` pairs of `model` that appear in its
    encoding, in declaration order. Read-only fields are left out.

    :param model: A `models.Model` subclass or instance.

    :raises: :py:exc:`TypeError` for anything else.

    """

    if not is_model(model):
        raise TypeError('{!r} is not a record'.format(model))

    return [(name, field) for name, field in model._fields.items()
            if not field.options.get('read_only', False)]


def field_names(model):
    return [name for name, _ in encoded_fields(model)]


def is_model(obj):
    if isinstance(obj, models.Model):
        return True

    return isinstance(obj, type) and issubclass(obj, models.Model)

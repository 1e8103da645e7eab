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

"""The `errors` module contains all exceptions raised by coaster.

Everything derives from :class:`CoasterError`, so callers (the command line
tool in particular) can tell library failures apart from programming errors.

"""


class CoasterError(Exception):
    """Base class for all coaster exceptions."""

    pass


class FieldError(CoasterError):
    """Raised when a record is given a field it does not declare. This is
    the equivalent of :class:`AttributeError` for :mod:`models`.

    """

    pass


class ValidationError(CoasterError):
    """Raised when a `value` doesn't validate. See :mod:`validators`."""

    pass


class EncodeError(CoasterError):
    pass


class DecodeError(CoasterError):
    pass


class AnfError(ValidationError):
    """Raised on malformed ANF text or on a variable outside the table."""

    pass


class RegisterError(CoasterError):
    """Raised when a register cannot do what it is asked: no concrete
    feedback, an all-zero fill, or a period too long to walk.

    """

    pass


class KeystreamError(CoasterError):
    """Raised when keystream positions exceed the usage limit or the
    available captured keystream.

    """

    pass


class PlanError(ValidationError):
    """Raised for parity-check plans that cannot be built or run, such as
    a register left uncancelled.

    """

    pass


class SampleError(CoasterError):
    """Raised when fewer samples are available than a test needs."""

    pass


class VerificationError(CoasterError):
    """Raised when a published figure fails to reproduce."""

    pass

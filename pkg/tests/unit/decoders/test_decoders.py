# -*- coding: utf-8 -*-

from fractions import Fraction

from expects import *
from .._helpers import Tap

from coaster import decoders, errors


class TestModel(object):
    def test_should_return_none_if_value_is_none(self):
        expect(self.decoder(None)).to(be_none)

    def test_should_return_value_returned_by_model_decode(self):
        raw = {'position': 3, 'note': 'tap'}

        expect(self.decoder(raw)).to(equal(Tap.decode(raw)))

    def setup_method(self):
        self.decoder = decoders.Model(Tap)


class TestCollection(object):
    def test_should_decode_every_item(self):
        result = decoders.Collection(Tap)([{'position': 1}, {'position': 2}])

        expect(result).to(equal([{'position': 1}, {'position': 2}]))


class TestRatio(object):
    def test_should_read_num_den_strings(self):
        expect(self.decoder('-1/8')).to(equal(Fraction(-1, 8)))

    def test_should_read_integers(self):
        expect(self.decoder(1)).to(equal(Fraction(1)))

    def test_should_raise_decode_error_on_garbage(self):
        expect(lambda: self.decoder('one eighth')).to(raise_error(
            errors.DecodeError, contain('not a fraction')))

    def setup_method(self):
        self.decoder = decoders.Ratio()


class TestBits(object):
    def test_should_read_bit_strings(self):
        expect(self.decoder('1001')).to(equal((1, 0, 0, 1)))

    def test_should_raise_decode_error_on_other_characters(self):
        expect(lambda: self.decoder('102')).to(raise_error(errors.DecodeError))

    def test_should_raise_decode_error_on_lists(self):
        expect(lambda: self.decoder([1, 0])).to(raise_error(errors.DecodeError))

    def setup_method(self):
        self.decoder = decoders.Bits()


class TestMap(object):
    def test_should_read_integer_keys(self):
        expect(self.decoder({'0': 5, '12': 1})).to(equal({0: 5, 12: 1}))

    def test_should_raise_decode_error_on_non_integer_keys(self):
        expect(lambda: self.decoder({'a': 1})).to(raise_error(errors.DecodeError))

    def test_should_raise_decode_error_if_not_a_mapping(self):
        expect(lambda: self.decoder([1])).to(raise_error(errors.DecodeError))

    def setup_method(self):
        self.decoder = decoders.Map()

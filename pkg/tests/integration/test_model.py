# -*- coding: utf-8 -*-

from fractions import Fraction

from expects import *

from coaster import attack, catalog, cipher, errors, registers


class TestValidation(object):
    def test_should_fail_validation_if_name_is_none(self):
        def callback():
            attack.ParityCheckPlan().validate()

        expect(callback).to(raise_error(
            errors.ValidationError, end_with('required')))

    def test_should_fail_validation_if_a_register_label_is_not_an_integer(self):
        def callback():
            spec = cipher.CipherSpec(name='toy', registers=[
                registers.NlfsrSpec(label='a', length=3,
                                    feedback='x_0 + x_1')])
            spec.validate()

        expect(callback).to(raise_error(errors.ValidationError,
                                        'registers label should be an integer'))

    def test_should_fail_validation_if_the_embedded_cipher_is_invalid(self):
        def callback():
            plan = catalog.toy_plan()
            plan.cipher.registers[0].length = 0
            plan.validate()

        expect(callback).to(raise_error(
            errors.ValidationError, start_with('cipher registers length')))

    def test_should_fail_validation_if_key_bits_are_not_bits(self):
        def callback():
            cipher.KeyIv(key=(0, 2)).validate()

        expect(callback).to(raise_error(errors.ValidationError,
                                        'key should contain only 0 and 1'))


class TestEncode(object):
    def test_should_return_dict_with_encoded_cipher(self):
        plan = catalog.toy_plan()

        result = plan.encode()

        expect(result['cipher']).to(have_keys('name', 'registers',
                                              'combiner'))
        expect(result['cipher']['registers']).to(have_len(6))

    def test_should_return_dict_with_encoded_basis(self):
        plan = catalog.a128_plan()

        result = plan.encode()

        expect(result['basis']).to(equal(
            [basis.encode() for basis in plan.basis]))
        expect(result['base_bias']).to(equal('1/8'))


class TestDecode(object):
    def test_should_load_an_encoded_plan(self):
        plan = catalog.toy_decimated_plan()

        result = attack.ParityCheckPlan.load(plan.encode())

        expect(result).to(equal(plan))
        expect(result.cipher.register(3)).to(be_a(registers.NlfsrSpec))
        expect(result.base_bias).to(equal(Fraction(1, 2)))

    def test_should_fail_on_a_bad_ratio(self):
        encoded = catalog.toy_plan().encode()
        encoded['base_bias'] = 'half'

        expect(lambda: attack.ParityCheckPlan.load(encoded)).to(
            raise_error(errors.DecodeError))

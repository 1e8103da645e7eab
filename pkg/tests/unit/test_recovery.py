# -*- coding: utf-8 -*-

import numpy as np
from expects import *

from coaster import (attack, catalog, cipher, errors, experiments, recovery,
                     registers)
from coaster.cipher import CipherState

PLANTED = {0: 5, 1: 9, 2: 22}


def small_state(noiseless=False):
    spec = cipher.small_toy_spec()
    if noiseless:
        spec = experiments.noiseless_spec(catalog.toy_direct_plan())

    return CipherState(spec, PLANTED)


def source_of(state):
    return cipher.KeystreamSource(state)


class TestCrossCorrelate(object):
    def test_should_rotate_the_first_sequence(self):
        result = recovery.crosscorrelate([1, 0, 0], [0, 1, 0])

        expect(np.rint(result.values).tolist()).to(equal([0, 0, 1]))
        expect(result.argmax).to(equal(2))

    def test_fft_and_direct_scans_agree(self):
        rng = np.random.default_rng(7)

        for period in (31, 127, 511):
            for _ in range(20):
                u = rng.normal(size=period)
                v = rng.normal(size=period)

                fast = recovery.crosscorrelate(u, v)
                slow = recovery.direct_crosscorrelate(u, v)

                expect(np.allclose(fast.values, slow.values)).to(be_true)
                expect(fast.argmax).to(equal(slow.argmax))

    def test_fft_and_direct_scans_agree_on_folded_counts(self):
        rng = np.random.default_rng(8)

        for period in (31, 127, 511):
            for _ in range(20):
                signs = 1.0 - 2.0 * rng.integers(0, 2, period)
                counts = rng.integers(0, 9, period) - 4.0

                fast = recovery.crosscorrelate(signs, counts)
                slow = recovery.direct_crosscorrelate(signs, counts)

                expect(np.rint(fast.values).tolist()).to(
                    equal(slow.values.tolist()))

    def test_should_raise_on_sequences_of_different_lengths(self):
        expect(lambda: recovery.crosscorrelate([1, 2], [1, 2, 3])).to(
            raise_error(errors.ValidationError,
                        'expected two sequences of the same nonzero length'))


class TestFoldDisagreements(object):
    def test_should_count_ones_per_residue(self):
        v1 = [2, 0, 1]
        v2 = [1, 0, 0]

        expect(recovery.fold_disagreements(v1, v2, 2, 0)).to(equal(1))
        expect(recovery.fold_disagreements(v1, v2, 2, 1)).to(equal(3))

    def test_should_match_a_direct_count(self):
        rng = np.random.default_rng(3)
        sigma = rng.integers(0, 2, (4, 7))
        reference = rng.integers(0, 2, 7)
        v1 = sigma.sum(axis=0)

        for rotation in range(7):
            row = np.roll(reference, -rotation)
            expected = int(np.count_nonzero(sigma ^ row))

            expect(recovery.fold_disagreements(v1, reference, 4, rotation)).to(
                equal(expected))


class TestRecoveryParams(object):
    def test_folded_samples_are_a_multiple_of_the_second_period(self):
        params = recovery.recovery_params(catalog.toy_plan())

        expect(params.samples_needed).to(equal(2046))
        expect(params.sign_known).to(be_false)
        expect(params.candidates).to(equal(511 * 1023))

    def test_exhaustive_samples_are_not_rounded(self):
        params = recovery.recovery_params(catalog.toy_plan(),
                                          method='exhaustive')

        expect(params.samples_needed).to(equal(2030))

    def test_direct_plan_on_the_small_toy(self):
        plan = catalog.toy_direct_plan()

        expect(recovery.recovery_params(plan).samples_needed).to(equal(248))
        expect(recovery.recovery_params(plan, method='exhaustive')
               .samples_needed).to(equal(229))

    def test_threshold_is_half_the_amplified_bias(self):
        params = recovery.recovery_params(catalog.toy_plan())

        expect(float(params.threshold)).to(equal(0.125))


class TestFoldedRecover(object):
    def setup_method(self):
        self.plan = catalog.toy_direct_plan()
        self.params = recovery.recovery_params(self.plan)

    def test_should_recover_planted_fills_without_noise(self):
        result = recovery.folded_recover(source_of(small_state(True)),
                                         self.plan, self.params)

        expect(result.recovered_states).to(equal({0: 5, 2: 22}))
        expect(result.empirical_bias).to(equal(1))
        expect(result).to(have_properties(method='folded',
                                          verdict='keystream',
                                          samples=248,
                                          work_counter=7 * 248))

    def test_should_recover_planted_fills_from_the_keystream(self):
        result = recovery.folded_recover(source_of(small_state()),
                                         self.plan, self.params)

        expect(result.recovered_states).to(equal({0: 5, 2: 22}))
        expect(result.verdict).to(equal('keystream'))

    def test_fft_and_direct_scans_agree(self):
        source = source_of(small_state())

        fast = recovery.folded_recover(source, self.plan, self.params)
        slow = recovery.folded_recover(source, self.plan, self.params,
                                       scan='direct')

        expect(slow).to(equal(fast))

    def test_should_agree_with_the_exhaustive_search(self):
        source = source_of(small_state())

        folded = recovery.folded_recover(source, self.plan, self.params)
        exhaustive = recovery.exhaustive_recover(source, self.plan,
                                                 self.params)

        expect(exhaustive.recovered_states).to(
            equal(folded.recovered_states))
        expect(exhaustive.empirical_bias).to(equal(folded.empirical_bias))

    def test_should_agree_on_random_bits(self):
        rng = np.random.default_rng(11)
        source = registers.ArraySource(rng.integers(0, 2, 248, dtype=np.uint8))

        folded = recovery.folded_recover(source, self.plan, self.params)
        exhaustive = recovery.exhaustive_recover(source, self.plan,
                                                 self.params)

        expect(exhaustive.recovered_states).to(
            equal(folded.recovered_states))

    def test_parallel_search_gives_the_serial_result(self):
        source = source_of(small_state())

        serial = recovery.folded_recover(source, self.plan, self.params)
        parallel = recovery.folded_recover(source, self.plan, self.params,
                                           workers=2)

        expect(parallel).to(equal(serial))

    def test_should_raise_unless_there_are_two_targets(self):
        plan = attack.make_plan(cipher.small_toy_spec(), [0, 2],
                                pairing=[[2]], targets=[0])

        expect(lambda: recovery.folded_recover(
            source_of(small_state()), plan, self.params)).to(
            raise_error(errors.PlanError,
                        'folded recovery needs two targets, toy-small has 1'))

    def test_should_raise_when_samples_do_not_fold(self):
        params = recovery.recovery_params(self.plan, method='exhaustive')

        expect(lambda: recovery.folded_recover(
            source_of(small_state()), self.plan, params)).to(
            raise_error(errors.PlanError,
                        '229 samples are not a multiple of T_2 = 31'))

    def test_should_raise_on_unknown_scans(self):
        expect(lambda: recovery.folded_recover(
            source_of(small_state()), self.plan, self.params,
            scan='naive')).to(raise_error(errors.ValidationError))


class TestExhaustiveRecover(object):
    def test_should_recover_a_single_target(self):
        plan = attack.make_plan(cipher.small_toy_spec(), [0, 2],
                                pairing=[[2]], targets=[0])
        params = recovery.recovery_params(plan)
        state = CipherState(
            experiments.noiseless_spec(plan), PLANTED)

        result = recovery.exhaustive_recover(source_of(state), plan, params)

        expect(result.recovered_states).to(equal({0: 5}))
        expect(result.method).to(equal('exhaustive'))

    def test_should_raise_without_targets(self):
        plan = attack.make_plan(cipher.small_toy_spec(), [0, 2],
                                pairing=[[0, 2]])
        params = attack.sample_size(plan.amplified_bias)

        expect(lambda: recovery.exhaustive_recover(
            source_of(small_state()), plan, params)).to(
            raise_error(errors.PlanError, 'plan toy-small has no target'))


class TestRecover(object):
    def test_should_dispatch_on_the_method(self):
        plan = catalog.toy_direct_plan()
        params = recovery.recovery_params(plan)
        source = source_of(small_state(True))

        result = recovery.recover(source, plan, params, method='exhaustive')

        expect(result.method).to(equal('exhaustive'))

    def test_should_raise_on_unknown_methods(self):
        plan = catalog.toy_direct_plan()

        expect(lambda: recovery.recover(None, plan, None, method='guess')).to(
            raise_error(errors.ValidationError))

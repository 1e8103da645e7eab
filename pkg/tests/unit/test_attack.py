# -*- coding: utf-8 -*-

import math
from fractions import Fraction

import numpy as np
from expects import *

from coaster import attack, boolfn, catalog, cipher, errors, registers
from coaster.cipher import CipherState


def toy_state():
    return CipherState(cipher.toy_spec(),
                       {0: 3, 1: 77, 2: 300, 3: 1025, 4: 11, 5: 40})


class TestMakePlan(object):
    def test_should_pair_registers_by_the_lcm_of_their_periods(self):
        plan = catalog.toy_plan()

        expect(plan.m).to(equal(1))
        expect(plan.basis[0].offset).to(equal(127 * 2047))
        expect(plan.offsets).to(equal([0, 127 * 2047]))

    def test_should_compute_the_base_bias_from_the_combiner(self):
        expect(catalog.toy_plan().base_bias).to(equal(Fraction(1, 2)))
        expect(catalog.toy_direct_plan().base_bias).to(equal(Fraction(1, 2)))

    def test_should_accept_a_linear_mask(self):
        mask = boolfn.LinearMask(0b001111, 6)

        plan = attack.make_plan(cipher.toy_spec(), mask, pairing=[[0, 3]],
                                targets=[1, 2])

        expect(plan.approximation).to(equal([0, 1, 2, 3]))
        expect(plan.mask()).to(equal(mask))

    def test_offsets_are_every_subset_sum(self):
        plan = catalog.v2_plan()
        first, second = [basis.offset for basis in plan.basis]

        expect(plan.offsets).to(equal([0, first, second, first + second]))
        expect(plan.max_offset).to(equal(first + second))

    def test_decimation_factor_is_the_product_of_periods(self):
        expect(catalog.toy_decimated_plan().decimation_factor).to(equal(127))
        expect(catalog.toy_plan().decimation_factor).to(equal(1))

    def test_sign_is_known_only_without_decimation(self):
        expect(catalog.toy_plan().sign_known).to(be_true)
        expect(catalog.toy_decimated_plan().sign_known).to(be_false)

    def test_candidates_count_every_nonzero_target_fill(self):
        expect(catalog.toy_plan().candidates).to(equal(511 * 1023))

    def test_amplified_bias_is_raised_to_the_number_of_terms(self):
        expect(catalog.v2_plan().amplified_bias.epsilon).to(
            equal(Fraction(1, 1 << 12)))

    def test_should_raise_when_a_register_is_left_uncancelled(self):
        expect(lambda: attack.make_plan(cipher.toy_spec(), [0, 1, 2, 3],
                                        pairing=[[0]], targets=[1, 2])).to(
            raise_error(errors.PlanError, 'register 3 is left uncancelled'))

    def test_should_raise_when_targets_are_outside_the_approximation(self):
        expect(lambda: attack.make_plan(cipher.toy_spec(), [0, 3], targets=[0, 1])).to(
            raise_error(errors.PlanError, contain('should be approximation registers')))

    def test_should_raise_when_a_register_is_decimated_and_guessed(self):
        expect(lambda: attack.make_plan(cipher.toy_spec(), [0, 3],
                                        decimation=[0], targets=[0, 3])).to(
            raise_error(errors.PlanError, contain('both decimated and a target')))

    def test_should_raise_on_unknown_registers(self):
        expect(lambda: attack.make_plan(cipher.toy_spec(), [0, 7], targets=[0])).to(
            raise_error(errors.PlanError, 'toy has no register 7'))

    def test_should_raise_on_repeated_registers(self):
        expect(lambda: attack.make_plan(cipher.toy_spec(), [0, 0, 3], targets=[0, 3],
                                        base_bias=Fraction(1, 2))).to(
            raise_error(errors.PlanError, contain('repeats')))

    def test_should_raise_on_a_zero_bias(self):
        expect(lambda: attack.make_plan(cipher.toy_spec(), [0], targets=[0])).to(
            raise_error(errors.PlanError, 'base bias should be nonzero'))

    def test_should_need_a_base_bias_without_combiner(self):
        expect(lambda: attack.make_plan(cipher.achterbahn_v2_spec(), [1], targets=[1])).to(
            raise_error(errors.PlanError, contain('give the base bias')))

    def test_should_raise_when_offsets_pass_the_keystream_limit(self):
        spec = cipher.toy_spec()
        spec.keystream_limit = 1000

        expect(lambda: attack.make_plan(spec, [0, 1, 2, 3], pairing=[[0, 3]],
                                        targets=[1, 2])).to(
            raise_error(errors.PlanError, contain('beyond the keystream limit')))

    def test_plan_errors_are_validation_errors(self):
        plan = catalog.toy_plan()
        plan.basis[0].offset += 1

        expect(plan.is_valid).to(be_false)

    def test_should_round_trip_through_json(self):
        plan = catalog.a80_plan()

        expect(attack.ParityCheckPlan.from_json(plan.to_json())).to(equal(plan))


class TestEstimate(object):
    def test_direct_plan_figures_are_exact(self):
        result = attack.estimate(catalog.toy_direct_plan())

        expect(result).to(have_properties(
            parity_terms=1, log2_samples=2.0, log2_data=2.0, log2_time=10.0,
            log2_time_terms=10.0))
        expect(result.log2_time_folded).to(be_above(0))

    def test_v2_figures(self):
        result = attack.estimate(catalog.v2_plan())

        expect(result.log2_samples).to(equal(24.0))
        expect(result.log2_data).to(be_within(49.80, 49.82))
        expect(result.log2_time).to(equal(49.0))
        expect(result.log2_time_terms).to(equal(51.0))
        expect(result.log2_time_folded).to(be_none)

    def test_a80_time(self):
        result = attack.estimate(catalog.a80_plan())

        expect(result.amplified_bias_log2).to(equal(-12.0))
        expect(result.log2_time).to(equal(70.0))
        expect(result.log2_data).to(be_within(55.5, 55.7))

    def test_d_scales_the_samples(self):
        result = attack.estimate(catalog.v2_plan(), d=4)

        expect(result.log2_samples).to(equal(26.0))

    def test_base_bias_can_be_overridden(self):
        result = attack.estimate(catalog.v2_plan(), base_bias=Fraction(1, 4))

        expect(result.log2_samples).to(equal(16.0))

    def test_claims_are_checked(self):
        result = attack.estimate(catalog.a80_plan(), claims=catalog.claims('a80'))

        statuses = dict((claim.name, claim.status) for claim in result.claims)
        expect(statuses).to(equal({'log2_time': 'match', 'log2_data': 'noted',
                                   'log2_time_folded': 'noted'}))
        expect(result.mismatches).to(be_empty)

    def test_builtin_plans_reproduce_their_claims(self):
        for name in catalog.PLANS:
            result = attack.estimate(catalog.builtin_plan(name),
                                     claims=catalog.claims(name))

            expect(result.mismatches).to(be_empty)

    def test_should_raise_on_nonpositive_d(self):
        expect(lambda: attack.estimate(catalog.v2_plan(), d=0)).to(
            raise_error(errors.SampleError))


class TestCheckClaim(object):
    def test_about_holds_within_tolerance(self):
        expect(attack.check_claim('log2_time', 49, 49.05).status).to(equal('match'))

    def test_about_fails_outside_tolerance(self):
        result = attack.check_claim('log2_time', 49, 49.5)

        expect(result.status).to(equal('mismatch'))
        expect(result.failed).to(be_true)

    def test_below_is_strict(self):
        expect(attack.check_claim('log2_data', 61, 61, relation='below').status).to(
            equal('mismatch'))
        expect(attack.check_claim('log2_data', 61, 60.2, relation='below').status).to(
            equal('match'))

    def test_failure_with_a_note_is_noted(self):
        result = attack.check_claim('log2_data', 56.32, 55.59, note='other sum')

        expect(result.status).to(equal('noted'))
        expect(result.failed).to(be_false)


class TestSampleSize(object):
    def test_single_candidate_needs_d_over_epsilon_squared(self):
        params = attack.sample_size(Fraction(1, 4))

        expect(params.samples_needed).to(equal(16))
        expect(params.threshold).to(equal(Fraction(1, 8)))
        expect(params.error_prob).to(be_within(0.3084, 0.3086))

    def test_d_raises_the_sample_size_and_lowers_the_error(self):
        params = attack.sample_size(Fraction(1, 4), d=9)

        expect(params.samples_needed).to(equal(144))
        expect(params.error_prob).to(be_below(0.07))

    def test_sign_of_epsilon_does_not_matter(self):
        expect(attack.sample_size(Fraction(-1, 8)).samples_needed).to(equal(64))

    def test_many_candidates_need_more_samples(self):
        params = attack.sample_size(Fraction(1, 4), candidates=1 << 20)

        spread = 1 + 2 * math.sqrt(2 * math.log(1 << 20))
        expect(params.samples_needed).to(equal(math.ceil(spread ** 2 * 16)))

    def test_should_accept_a_bias(self):
        expect(attack.sample_size(boolfn.Bias(Fraction(1, 2))).samples_needed).to(
            equal(4))

    def test_should_raise_on_zero_epsilon(self):
        expect(lambda: attack.sample_size(0)).to(raise_error(errors.SampleError))

    def test_should_raise_on_nonpositive_d(self):
        expect(lambda: attack.sample_size(Fraction(1, 4), d=-1)).to(
            raise_error(errors.SampleError))


class TestDecide(object):
    def test_one_sided_on_the_sign_of_epsilon(self):
        params = attack.sample_size(Fraction(-1, 4))

        expect(attack.decide(Fraction(-1, 4), params)).to(equal('keystream'))
        expect(attack.decide(Fraction(1, 4), params)).to(equal('random'))

    def test_threshold_is_inclusive(self):
        params = attack.sample_size(Fraction(1, 4))

        expect(attack.decide(Fraction(1, 8), params)).to(equal('keystream'))

    def test_two_sided_when_the_sign_is_unknown(self):
        params = attack.sample_size(Fraction(1, 4), sign_known=False)

        expect(attack.decide(Fraction(-1, 4), params)).to(equal('keystream'))
        expect(attack.decide(Fraction(1, 16), params)).to(equal('random'))


class TestDistinguish(object):
    def test_constant_zero_parity_checks_are_keystream(self):
        params = attack.sample_size(Fraction(1, 4))

        result = attack.distinguish(np.zeros(20, dtype=np.uint8), params)

        expect(result).to(have_properties(
            verdict='keystream', empirical_bias=Fraction(1), samples=16,
            method='distinguish'))

    def test_balanced_parity_checks_are_random(self):
        params = attack.sample_size(Fraction(1, 4))

        result = attack.distinguish([0, 1] * 8, params, plan='toy')

        expect(result.verdict).to(equal('random'))
        expect(result.empirical_bias).to(equal(0))
        expect(result.disagreements).to(equal(8))
        expect(result.plan).to(equal('toy'))

    def test_should_raise_on_too_few_bits(self):
        params = attack.sample_size(Fraction(1, 4))

        expect(lambda: attack.distinguish([0] * 15, params)).to(raise_error(
            errors.SampleError, 'need 16 samples, got 15'))


class TestDistinguisherCalibration(object):
    def setup_method(self):
        self.params = attack.sample_size(Fraction(1, 16))
        self.rng = np.random.default_rng(2024)

    def verdicts(self, epsilon, trials=400):
        samples = self.params.samples_needed
        draws = self.rng.random((trials, samples))
        bits = (draws >= (1 + epsilon) / 2).astype(np.uint8)

        return [attack.distinguish(row, self.params).verdict for row in bits]

    def test_error_probability_at_d_1(self):
        misses = self.verdicts(1 / 16).count('random')
        false_alarms = self.verdicts(0).count('keystream')

        error = (misses + false_alarms) / 800

        expect(self.params.samples_needed).to(equal(256))
        expect(error).to(be_within(0.2, 0.42))
        expect(abs(error - self.params.error_prob)).to(be_below(0.06))

    def test_fair_coins_are_flagged_at_the_predicted_rate(self):
        false_alarms = self.verdicts(0).count('keystream') / 400

        expect(false_alarms).to(be_within(0.2, 0.42))


class TestAttackResult(object):
    def test_bias_should_be_a_count_over_the_samples(self):
        result = attack.AttackResult(method='distinguish', verdict='random',
                                     empirical_bias=Fraction(1, 3), samples=4)

        expect(result.validate).to(raise_error(errors.ValidationError))

    def test_bias_should_have_the_parity_of_the_samples(self):
        result = attack.AttackResult(method='distinguish', verdict='random',
                                     empirical_bias=Fraction(1, 4), samples=4)

        expect(result.validate).to(raise_error(errors.ValidationError))

    def test_valid_result(self):
        attack.AttackResult(method='folded', verdict='keystream',
                            empirical_bias=Fraction(1, 2), samples=4,
                            recovered_states={1: 5, 2: 9}).validate()


class TestParityChecks(object):
    def test_sample_times_are_decimated(self):
        plan = catalog.toy_decimated_plan()

        expect(attack.sample_times(plan, 3, start=2).tolist()).to(
            equal([254, 381, 508]))

    def test_sample_times_should_raise_past_64_bit_positions(self):
        plan = catalog.toy_decimated_plan()

        expect(lambda: attack.sample_times(plan, 1 << 62)).to(
            raise_error(errors.KeystreamError))

    def test_sigma_is_the_xor_over_the_offsets(self):
        plan = catalog.toy_plan()
        source = cipher.KeystreamSource(toy_state())
        tau = plan.basis[0].offset

        result = attack.sigma_stream(source, plan, 50)

        expected = source.at(np.arange(50)) ^ source.at(np.arange(50) + tau)
        expect(result.tolist()).to(equal(expected.tolist()))

    def test_correct_guesses_remove_the_target_outputs(self):
        plan = catalog.toy_plan()
        state = toy_state()
        source = cipher.KeystreamSource(state)

        guessed = attack.sigma_stream(source, plan, 200,
                                      guesses={1: 77, 2: state.registers[2]})
        unguessed = attack.sigma_stream(source, plan, 200)
        targets = attack.approximation_parity(plan, state, 200, labels=[1, 2])

        expect(guessed.tolist()).to(equal((unguessed ^ targets).tolist()))

    def test_correct_guesses_leave_only_the_nonlinear_term(self):
        plan = catalog.toy_plan()
        state = toy_state()
        tau = plan.basis[0].offset
        x4 = registers.RegisterSource(state.registers[4])
        x5 = registers.RegisterSource(state.registers[5])
        t = np.arange(300)

        result = attack.sigma_stream(cipher.KeystreamSource(state), plan, 300,
                                     guesses={1: 77, 2: 300})

        expected = (x4.at(t) & x5.at(t)) ^ (x4.at(t + tau) & x5.at(t + tau))
        expect(result.tolist()).to(equal(expected.tolist()))

    def test_correct_guesses_show_the_amplified_bias(self):
        plan = catalog.toy_plan()
        state = toy_state()

        sigma = attack.sigma_stream(cipher.KeystreamSource(state), plan, 4000,
                                    guesses={1: 77, 2: 300})

        empirical = 1 - 2 * sigma.mean()
        expect(empirical).to(be_within(0.15, 0.35))

    def test_approximation_parity_of_cancelled_registers_vanishes(self):
        plan = catalog.toy_plan()

        result = attack.approximation_parity(plan, toy_state(), 100, labels=[0, 3])

        expect(int(result.sum())).to(equal(0))

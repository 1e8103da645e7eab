# -*- coding: utf-8 -*-

from fractions import Fraction

from expects import *

from coaster import attack, catalog, errors, experiments, reports
from coaster.experiments import ExperimentConfig


def direct_config(**kwargs):
    kwargs.setdefault('plan', 'toy-direct')
    kwargs.setdefault('trials', 4)

    return ExperimentConfig(**kwargs)


class TestExperimentConfig(object):
    def test_defaults(self):
        config = ExperimentConfig()

        expect(config).to(have_properties(
            plan='toy', seed=0, trials=20, d=1.0, method='both', scan='fft',
            mode='keystream', workers=1))
        expect(config.is_valid).to(be_true)

    def test_should_reject_unknown_modes(self):
        config = ExperimentConfig(mode='silent')

        expect(config.validate).to(raise_error(
            errors.ValidationError, start_with('mode should be in')))

    def test_should_reject_zero_trials(self):
        expect(ExperimentConfig(trials=0).validate).to(raise_error(
            errors.ValidationError, 'trials should be at least 1'))


class TestPlanning(object):
    def test_noiseless_spec_combines_the_approximation_linearly(self):
        spec = experiments.noiseless_spec(catalog.toy_plan())

        expect(spec.name).to(equal('toy-noiseless'))
        expect(spec.combiner).to(equal('x_0 + x_1 + x_2 + x_3'))
        expect(spec.registers).to(equal(catalog.toy_plan().cipher.registers))

    def test_methods_for_two_targets(self):
        plan = catalog.toy_plan()

        expect(experiments.methods_for(ExperimentConfig(), plan)).to(
            equal(['exhaustive', 'folded']))
        expect(experiments.methods_for(ExperimentConfig(method='folded'),
                                       plan)).to(equal(['folded']))

    def test_methods_for_one_target(self):
        plan = attack.make_plan(catalog.load_spec('toy-small'), [0, 2],
                                pairing=[[2]], targets=[0])

        expect(experiments.methods_for(ExperimentConfig(), plan)).to(
            equal(['exhaustive']))

    def test_required_bits_cover_the_last_offset(self):
        expect(experiments.required_bits(catalog.toy_plan(), 2046)).to(
            equal(2045 + 127 * 2047 + 1))
        expect(experiments.required_bits(catalog.toy_decimated_plan(), 10)).to(
            equal(9 * 127 + 2047 + 1))

    def test_experiment_plan_can_swap_the_cipher(self):
        config = ExperimentConfig(plan='toy', cipher='toy')

        plan = experiments.experiment_plan(config)

        expect(plan).to(equal(catalog.toy_plan()))


class TestBiasCurve(object):
    def test_should_give_running_biases(self):
        result = experiments.bias_curve([0, 1, 0, 0], points=4)

        expect(result).to(equal([[1, 1.0], [2, 0.0], [3, 1 / 3], [4, 0.5]]))

    def test_should_not_repeat_prefixes(self):
        result = experiments.bias_curve([0, 0], points=16)

        expect([t for t, _ in result]).to(equal([1, 2]))


class TestRunExperiment(object):
    def test_noiseless_trials_always_recover(self):
        report = experiments.run_experiment(direct_config(mode='noiseless'))

        expect(report.success_rate).to(equal(1.0))
        expect(report.agreement).to(be_true)
        expect(report.within_bounds).to(be_none)
        for record in report.trials:
            expect(record.sigma_bias).to(equal(1))

    def test_keystream_trials(self):
        report = experiments.run_experiment(direct_config())

        expect(report).to(have_properties(plan='toy-direct', samples=248,
                                          expected_bias=Fraction(1, 2),
                                          agreement=True))
        expect(report.trials).to(have_len(4))
        expect(report.bias_curve).not_to(be_empty)

        for record in report.trials:
            expect([result.method for result in record.results]).to(
                equal(['exhaustive', 'folded']))
            expect(set(record.planted)).to(equal({0, 2}))

    def test_random_input_is_never_recovered(self):
        report = experiments.run_experiment(direct_config(mode='random'))

        expect(report.success_rate).to(equal(0.0))
        expect(report.agreement).to(be_true)
        expect(report.bias_curve).to(equal([]))
        for record in report.trials:
            expect(record.planted).to(equal({}))
            expect(record.sigma_bias).to(be_none)

    def test_trials_are_timed_outside_their_encoding(self):
        report = experiments.run_experiment(direct_config(trials=1))
        record = report.trials[0]

        expect(record.seconds).to(be_above_or_equal(0))
        expect(record.encode()).not_to(have_key('seconds'))
        expect(reports.to_text(report)).not_to(contain('seconds'))

    def test_equal_configs_give_equal_reports(self):
        first = experiments.run_experiment(direct_config(seed=5))
        second = experiments.run_experiment(direct_config(seed=5))

        expect(first.to_json()).to(equal(second.to_json()))

    def test_seeds_change_the_planted_fills(self):
        first = experiments.run_experiment(direct_config(seed=1, trials=3))
        second = experiments.run_experiment(direct_config(seed=2, trials=3))

        expect([r.planted for r in first.trials]).not_to(
            equal([r.planted for r in second.trials]))


class TestVerify(object):
    def setup_method(self):
        self.report = experiments.verify(immunity=False)

    def test_every_published_figure_reproduces(self):
        expect(self.report.mismatches).to(be_empty)

    def test_documented_discrepancies_are_noted(self):
        noted = [check.name for check in self.report.checks
                 if check.status == 'noted']

        expect(noted).to(equal(['a80.log2_data', 'a80.log2_time_folded']))

    def test_should_check_the_restriction_of_f(self):
        names = [check.name for check in self.report.checks]

        expect(names).to(contain('F.restricted_is_G', 'G.best_weight_7',
                                 'samples(2^-12).log2'))

    def test_raise_for_mismatch(self):
        self.report.checks.append(attack.check_claim('made.up', 1.0, 2.0, 0))

        expect(self.report.raise_for_mismatch).to(raise_error(
            errors.VerificationError,
            '1 figures failed to reproduce: made.up'))

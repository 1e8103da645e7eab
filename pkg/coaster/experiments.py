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

"""Seeded end-to-end attack trials and the verification of published
figures.

A trial loads a random key and IV into the plan's cipher, captures just
enough keystream for the parity checks, and runs the recoveries on it::

    report = run_experiment(ExperimentConfig(plan='toy', trials=20))
    report.success_rate

All randomness comes from ``numpy.random.default_rng((seed, trial))``,
so equal configs give equal reports.

"""

import logging
import math
import time
from fractions import Fraction

import numpy as np

from coaster import (anf, attack, boolfn, catalog, cipher, errors, fields,
                     models, recovery, registers, validators)

logger = logging.getLogger(__name__)

MODES = ('keystream', 'random', 'noiseless')
METHODS = ('both',) + recovery.METHODS


class ExperimentConfig(models.Model):
    """What to run. `cipher` optionally replaces the plan's cipher spec
    by a builtin name or a JSON file, for instance to inject other
    feedbacks.

    """

    plan = fields.String(required=True, default='toy')
    cipher = fields.String()
    seed = fields.Integer(validators.Range(0), default=0)
    trials = fields.Integer(validators.Range(1), default=20)
    d = fields.Float(validators.Range(0), default=1.0)
    method = fields.String(choices=METHODS, default='both')
    scan = fields.String(choices=recovery.SCANS, default='fft')
    mode = fields.String(choices=MODES, default='keystream')
    workers = fields.Integer(validators.Range(1), default=1)
    key_bits = fields.Integer(validators.Range(1), default=16)
    iv_bits = fields.Integer(validators.Range(0), default=16)


class TrialRecord(models.Model):
    """One seeded trial. `seconds`, the wall-clock time of its
    recoveries, is kept out of encodings.

    """

    trial = fields.Integer(validators.Range(0), required=True)
    planted = fields.Map()
    results = fields.Collection(attack.AttackResult)
    sigma_bias = fields.Ratio(validators.Ratio(-1, 1))
    recovered = fields.Boolean(required=True)
    agree = fields.Boolean(required=True)
    seconds = fields.Float(validators.Range(0), read_only=True)


class ExperimentReport(models.Model):
    """Trials of one config.

    `within_bounds` tells whether every measured bias of the parity
    checks under the planted fills lies within 4 standard deviations,
    ``4 / sqrt(N)``, of `expected_bias` (in absolute value when its sign
    is unknown).

    """

    config = fields.Embedded(ExperimentConfig, required=True)
    plan = fields.String(required=True)
    samples = fields.Integer(validators.Range(1), required=True)
    expected_bias = fields.Ratio(required=True)
    trials = fields.Collection(TrialRecord)
    success_rate = fields.Float(validators.Range(0, 1), required=True)
    agreement = fields.Boolean(required=True)
    within_bounds = fields.Boolean()
    bias_curve = fields.List()


def experiment_plan(config):
    plan = catalog.load_plan(config.plan)

    if config.cipher is None:
        return plan

    spec = catalog.load_spec(config.cipher)

    return attack.make_plan(
        spec, plan.approximation,
        pairing=[basis.registers for basis in plan.basis],
        decimation=plan.decimation, targets=plan.targets,
        base_bias=None if spec.combiner else plan.base_bias,
        name=plan.name)


def noiseless_spec(plan):
    """The plan's cipher with the approximation as its combiner, so every
    parity check under the right fills is 0.

    """

    spec = plan.cipher
    base = spec.variable_base
    masks = [1 << spec.index_of(label) for label in plan.approximation]

    return cipher.CipherSpec(
        name='{}-noiseless'.format(spec.name),
        registers=spec.registers,
        combiner=anf.to_text(masks, base),
        variable_base=base,
        keystream_limit=spec.keystream_limit)


def methods_for(config, plan):
    if config.method != 'both':
        return [config.method]

    if len(plan.targets) == 2:
        return ['exhaustive', 'folded']

    return ['exhaustive']


def required_bits(plan, samples):
    return (samples - 1) * plan.decimation_factor + plan.max_offset + 1


def run_trial(config, plan, params, trial):
    """Runs the recoveries of one seeded trial."""

    rng = np.random.default_rng((config.seed, trial))
    samples = params.samples_needed
    length = required_bits(plan, samples)

    state = _trial_state(config, plan, rng)

    if config.mode == 'random':
        bits = rng.integers(0, 2, length, dtype=np.uint8)
        planted = {}
    else:
        bits = cipher.keystream(state, 0, length)
        planted = {label: state.fills[label] for label in plan.targets}

    source = registers.ArraySource(bits)

    results = []
    elapsed = 0.0
    for method in methods_for(config, plan):
        started = time.perf_counter()
        if method == 'folded':
            result = recovery.folded_recover(source, plan, params,
                                             scan=config.scan,
                                             workers=config.workers)
        else:
            result = recovery.exhaustive_recover(source, plan, params,
                                                 workers=config.workers)
        seconds = time.perf_counter() - started
        elapsed += seconds
        logger.info('trial %d %s: %.2fs', trial, method, seconds)
        results.append(result)

    sigma_bias = None
    if planted:
        sigma = attack.sigma_stream(source, plan, samples, guesses=planted)
        sigma_bias = Fraction(samples - 2 * int(np.count_nonzero(sigma)),
                              samples)

    recovered = bool(planted) and all(
        result.recovered_states == planted and result.verdict == 'keystream'
        for result in results)

    agree = all(result.recovered_states == results[0].recovered_states
                for result in results)

    return TrialRecord(trial=trial, planted=planted, results=results,
                       sigma_bias=sigma_bias, recovered=recovered,
                       agree=agree, seconds=elapsed)


def bias_curve(sigma, points=16):
    """Running bias ``(t, 1 - 2 c_t / t)`` of the first `t` parity checks
    at `points` evenly spaced prefixes.

    """

    sigma = np.asarray(sigma, dtype=np.int64)
    ones = np.cumsum(sigma)
    stops = np.unique(np.linspace(1, sigma.size, points).astype(np.int64))

    return [[int(t), float(1 - 2 * Fraction(int(ones[t - 1]), int(t)))]
            for t in stops]


def run_experiment(config):
    """Runs every trial of `config` and summarizes them."""

    config.validate()

    plan = experiment_plan(config)
    methods = methods_for(config, plan)
    params = recovery.recovery_params(
        plan, config.d, 'folded' if 'folded' in methods else 'exhaustive')

    logger.info('%s: %d trials of %d samples, %s', plan.name, config.trials,
                params.samples_needed, methods)

    trials = [run_trial(config, plan, params, trial)
              for trial in range(config.trials)]

    expected = plan.amplified_bias.epsilon
    spread = 4 / math.sqrt(params.samples_needed)

    within = None
    if config.mode == 'keystream':
        within = all(_within(record.sigma_bias, expected, plan.sign_known,
                             spread)
                     for record in trials)

    curve = []
    if trials and trials[0].planted:
        source = _trial_source(config, plan, 0)
        sigma = attack.sigma_stream(source, plan, params.samples_needed,
                                    guesses=trials[0].planted)
        curve = bias_curve(sigma)

    return ExperimentReport(
        config=config,
        plan=plan.name,
        samples=params.samples_needed,
        expected_bias=expected,
        trials=trials,
        success_rate=sum(record.recovered for record in trials) / len(trials),
        agreement=all(record.agree for record in trials),
        within_bounds=within,
        bias_curve=curve)


def _within(measured, expected, sign_known, spread):
    if sign_known:
        return abs(float(measured - expected)) <= spread

    return abs(float(abs(measured) - abs(expected))) <= spread


def _trial_source(config, plan, trial):
    rng = np.random.default_rng((config.seed, trial))

    return cipher.KeystreamSource(_trial_state(config, plan, rng))


def _trial_state(config, plan, rng):
    keyiv = cipher.KeyIv(
        key=tuple(int(bit) for bit in rng.integers(0, 2, config.key_bits)),
        iv=tuple(int(bit) for bit in rng.integers(0, 2, config.iv_bits)))

    spec = noiseless_spec(plan) if config.mode == 'noiseless' else plan.cipher

    return cipher.key_load(spec, keyiv)


class VerificationReport(models.Model):
    checks = fields.Collection(attack.ClaimCheck)

    @property
    def mismatches(self):
        return [check for check in self.checks if check.failed]

    def raise_for_mismatch(self):
        if self.mismatches:
            raise errors.VerificationError(
                '{} figures failed to reproduce: {}'.format(
                    len(self.mismatches),
                    ', '.join(check.name for check in self.mismatches)))


def verify(immunity=True):
    """Recomputes every function property, bias and complexity figure
    coaster knows a published value for.

    """

    checks = []

    tables = {}
    for name, expected in sorted(catalog.FUNCTIONS.items()):
        text, n, base = catalog.builtin_function(name)
        tables[name] = table = boolfn.parse_anf(text, n, base)
        profile = boolfn.profile(table, immunity=immunity)

        for key, value in sorted(expected.items()):
            if key == 'algebraic_immunity' and not immunity:
                continue
            checks.append(attack.check_claim(
                '{}.{}'.format(name, key), float(value),
                float(getattr(profile, key)), 0))

        labels, bias = catalog.APPROXIMATIONS[name]
        mask = boolfn.LinearMask.from_variables(labels, n, base)
        computed = boolfn.approximation_bias(table, mask)
        checks.append(attack.check_claim(
            '{}.bias'.format(name), float(bias), float(computed.epsilon), 0))

    best, bias = boolfn.best_affine_approximations(tables['G'], 7, limit=1)[0]
    checks.append(attack.check_claim(
        'G.best_weight_7', 1.0,
        float(best.variables(1) == catalog.APPROXIMATIONS['G'][0] and
              abs(bias.epsilon) == Fraction(1, 8)), 0))

    restricted = boolfn.restrict(tables['F'], {0: 0, 12: 0})
    checks.append(attack.check_claim(
        'F.restricted_is_G', 1.0, float(restricted == tables['G']), 0))

    a128 = cipher.achterbahn128_spec()
    checks.append(attack.check_claim(
        'lcm(T_0, T_3, T_7).log2', 59.3,
        registers.lcm_period(a128.period_of(label)
                             for label in (0, 3, 7)).log2, 0.05))

    eighth = boolfn.Bias(Fraction(1, 8))
    for m, exponent in ((2, -12), (3, -24)):
        checks.append(attack.check_claim(
            'amplified_bias(2^-3, {}).log2'.format(m), exponent,
            attack.amplified_bias(eighth, m).log2_abs, 0))

    params = attack.sample_size(Fraction(1, 4096))
    checks.append(attack.check_claim(
        'samples(2^-12).log2', 24.0, math.log2(params.samples_needed), 0))
    checks.append(attack.check_claim(
        'error_prob(d=1)', 0.3, params.error_prob, 0.01))

    for name in sorted(catalog.CLAIMS):
        result = attack.estimate(catalog.builtin_plan(name),
                                 claims=catalog.claims(name))
        for check in result.claims:
            check.name = '{}.{}'.format(name, check.name)
            checks.append(check)

    report = VerificationReport(checks=checks)

    logger.info('%d checks, %d mismatches', len(checks),
                len(report.mismatches))

    return report

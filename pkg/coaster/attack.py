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

"""Parity-check plans, their complexity and the distinguisher.

A plan XORs the linear approximation of the keystream at every offset
of the set spanned by its basis, ``tau = e_1 tau_1 + … + e_m tau_m`` with
``e_i`` in ``{0, 1}``. Register `j` vanishes from that sum as soon as
one basis offset is a multiple of its period ``T_j``. Registers in the
decimation set are sampled every ``D`` bits, ``D`` the product of their
periods, so they only add a constant. The remaining targets are guessed.

The bias of the parity check is ``epsilon ** (2 ** m)``; telling it from
a fair coin takes ``N = d / epsilon**2`` samples for an error
probability of ``Phi(-sqrt(d) / 2)``.

"""

import collections
import logging
import math
from fractions import Fraction

import numpy as np
from scipy.stats import norm

from coaster import (boolfn, cipher, errors, fields, models, registers,
                     validators)

logger = logging.getLogger(__name__)

VERDICTS = ('keystream', 'random')
METHODS = ('distinguish', 'exhaustive', 'folded')
STATUSES = ('match', 'mismatch', 'noted')
RELATIONS = ('about', 'below')

_LABELS = [validators.Integer(), validators.Range(0)]


class BasisOffset(models.Model):
    """A basis offset, a multiple of the period of every register in
    `registers`.

    """

    registers = fields.List(inner_validators=_LABELS, required=True)
    offset = fields.Integer(validators.Range(1), required=True)

    @property
    def log2(self):
        return math.log2(self.offset)


class ParityCheckPlan(models.Model):
    """Everything needed to evaluate the parity check against a cipher.

    Labels in `approximation`, `decimation` and `targets` name registers
    of `cipher`; `base_bias` is the bias of the approximation against
    the combining function.

    """

    name = fields.String(required=True)
    cipher = fields.Embedded(cipher.CipherSpec, required=True)
    approximation = fields.List(inner_validators=_LABELS)
    basis = fields.Collection(BasisOffset)
    decimation = fields.List(inner_validators=_LABELS)
    targets = fields.List(inner_validators=_LABELS)
    base_bias = fields.Ratio(validators.Ratio(-1, 1), required=True)

    def validate(self):
        super(ParityCheckPlan, self).validate()

        spec = self.cipher
        approximation = set(self.approximation)

        if not self.approximation:
            raise errors.PlanError('approximation should not be empty')

        if len(approximation) != len(self.approximation):
            raise errors.PlanError(
                'approximation repeats a register: {}'.format(
                    self.approximation))

        _check_labels(spec, self.approximation)

        for role in ('decimation', 'targets'):
            labels = getattr(self, role)
            if not set(labels) <= approximation:
                raise errors.PlanError(
                    '{} {} should be approximation registers'.format(
                        role, labels))

        if set(self.decimation) & set(self.targets):
            raise errors.PlanError(
                'a register cannot be both decimated and a target')

        if self.base_bias == 0:
            raise errors.PlanError('base bias should be nonzero')

        for basis in self.basis:
            for label in basis.registers:
                if label not in approximation:
                    raise errors.PlanError(
                        'basis register {} is not in the approximation'.format(
                            label))
                if basis.offset % spec.period_of(label):
                    raise errors.PlanError(
                        'offset {} is not a multiple of T_{}'.format(
                            basis.offset, label))

        for label in self.approximation:
            if label in self.decimation or label in self.targets:
                continue

            period = spec.period_of(label)
            if not any(basis.offset % period == 0 for basis in self.basis):
                raise errors.PlanError(
                    'register {} is left uncancelled'.format(label))

        if self.max_offset >= spec.keystream_limit:
            raise errors.PlanError(
                'offsets reach 2^{:.2f}, beyond the keystream limit'.format(
                    math.log2(self.max_offset)))

    @property
    def m(self):
        return len(self.basis)

    @property
    def offsets(self):
        """All ``2**m`` subset sums of the basis, subset `k` taking
        basis offset `i` when bit `i` of `k` is set.

        """

        values = [basis.offset for basis in self.basis]

        return [sum(value for i, value in enumerate(values) if k >> i & 1)
                for k in range(1 << len(values))]

    @property
    def max_offset(self):
        return sum(basis.offset for basis in self.basis)

    @property
    def decimation_factor(self):
        return math.prod(self.cipher.period_of(label)
                         for label in self.decimation)

    @property
    def sign_known(self):
        """Decimated registers add an unknown constant to the parity
        check, which hides the sign of its bias.

        """

        return not self.decimation

    @property
    def bias(self):
        return boolfn.Bias(self.base_bias)

    @property
    def amplified_bias(self):
        return amplified_bias(self.bias, self.m)

    @property
    def candidates(self):
        return math.prod((1 << self.cipher.register(label).length) - 1
                         for label in self.targets)

    def mask(self):
        return _mask(self.cipher, self.approximation)


def _check_labels(spec, labels):
    known = set(spec.labels)

    for label in labels:
        if label not in known:
            raise errors.PlanError(
                '{} has no register {}'.format(spec.name, label))


def _mask(spec, labels):
    return boolfn.LinearMask.from_variables(
        [spec.index_of(label) for label in labels], len(spec.registers))


def make_plan(spec, approximation, pairing=(), decimation=(), targets=(),
              base_bias=None, name=None):
    """Builds and validates a :class:`ParityCheckPlan`.

    :param approximation: A :class:`boolfn.LinearMask` over the combiner
                          variables, or a list of register labels.
    :param pairing: Groups of register labels, one basis offset each,
                    the offset being the lcm of their periods.
    :param base_bias: Bias of the approximation. Computed from the
                      combiner when omitted.

    :raises: :class:`errors.PlanError` if a register is left
             uncancelled or the offsets overflow the keystream limit.

    """

    if isinstance(approximation, boolfn.LinearMask):
        labels = [spec.labels[i] for i in approximation.variables()]
    else:
        labels = list(approximation)

    _check_labels(spec, labels)

    basis = []
    for group in pairing:
        group = list(group)
        _check_labels(spec, group)
        if not group:
            raise errors.PlanError('a basis offset needs registers')

        offset = registers.lcm_period(spec.period_of(label)
                                      for label in group).value
        basis.append(BasisOffset(registers=group, offset=offset))

    if base_bias is None:
        if spec.combiner is None:
            raise errors.PlanError(
                '{} has no combiner, give the base bias'.format(spec.name))
        base_bias = boolfn.approximation_bias(spec.combiner_table(),
                                              _mask(spec, labels))

    plan = ParityCheckPlan(
        name=name or spec.name,
        cipher=spec,
        approximation=labels,
        basis=basis,
        decimation=list(decimation),
        targets=list(targets),
        base_bias=Fraction(getattr(base_bias, 'epsilon', base_bias)))

    plan.validate()

    logger.debug('plan %s: offsets 2^%s, decimation %d, targets %s',
                 plan.name, ['{:.2f}'.format(b.log2) for b in plan.basis],
                 plan.decimation_factor, plan.targets)

    return plan


def amplified_bias(base, m):
    """``base ** (2 ** m)``, the bias of a XOR of ``2**m`` terms."""

    if m < 0:
        raise errors.PlanError('m should be nonnegative')

    return base.power(1 << m)


class CostModel(models.Model):
    """Unit costs of the folded recovery: `sigma` per parity check
    evaluated, `accumulate` per addition into the per-residue counts and
    `reference` per bit of the reference sequence.

    """

    sigma = fields.Float(validators.Range(0), default=16.0)
    accumulate = fields.Float(validators.Range(0), default=26.0)
    reference = fields.Float(validators.Range(0), default=8.0)


Claim = collections.namedtuple(
    'Claim', ['quantity', 'claimed', 'tolerance', 'relation', 'note'],
    defaults=(0.1, 'about', None))


class ClaimCheck(models.Model):
    """A published figure compared with the computed one.

    A failed claim with a `note` is a documented discrepancy and gets
    the `noted` status rather than `mismatch`.

    """

    name = fields.String(required=True)
    claimed = fields.Float(required=True)
    computed = fields.Float(required=True)
    tolerance = fields.Float(validators.Range(0), default=0.1)
    relation = fields.String(choices=RELATIONS, default='about')
    status = fields.String(choices=STATUSES, required=True)
    note = fields.String()

    @property
    def failed(self):
        return self.status == 'mismatch'


def check_claim(name, claimed, computed, tolerance=0.1, relation='about',
                note=None):
    if relation == 'about':
        holds = abs(computed - claimed) <= tolerance + 1e-9
    else:
        holds = computed < claimed

    if holds:
        status = 'match'
    else:
        status = 'noted' if note else 'mismatch'

    return ClaimCheck(name=name, claimed=float(claimed),
                      computed=float(computed), tolerance=float(tolerance),
                      relation=relation, status=status, note=note)


class AttackEstimate(models.Model):
    """Log2 complexities of a plan.

    `log2_time` counts candidate guesses times samples; `log2_time_terms`
    also counts the ``2**m`` terms of every parity check. The folded
    time is only given for plans with two targets.

    """

    plan = fields.String(required=True)
    parity_terms = fields.Integer(validators.Range(1), required=True)
    base_bias_log2 = fields.Float(required=True)
    amplified_bias_log2 = fields.Float(required=True)
    d = fields.Float(validators.Range(0), default=1.0)
    log2_samples = fields.Float(required=True)
    log2_data = fields.Float(required=True)
    log2_time = fields.Float(required=True)
    log2_time_terms = fields.Float(required=True)
    log2_time_folded = fields.Float()
    log2_total = fields.Float(required=True)
    claims = fields.Collection(ClaimCheck)

    def validate(self):
        super(AttackEstimate, self).validate()

        expected = self.base_bias_log2 * self.parity_terms
        if abs(self.amplified_bias_log2 - expected) > 1e-9:
            raise errors.ValidationError(
                'amplified bias 2^{} is not 2^{} to the power {}'.format(
                    self.amplified_bias_log2, self.base_bias_log2,
                    self.parity_terms))

    @property
    def mismatches(self):
        return [claim for claim in self.claims if claim.failed]


def estimate(plan, base_bias=None, d=1, cost=None, claims=()):
    """Returns the :class:`AttackEstimate` of `plan`.

    The data is ``N D + tau_1 + … + tau_m`` bits for ``N`` decimated
    samples and a decimation factor ``D``. The exhaustive time is
    ``N`` times the number of target guesses. The folded time is
    ``T_A [N (sigma + accumulate) + T_B log2 T_B] + T_B reference``.

    :param claims: :class:`Claim` tuples naming estimate fields.

    """

    if base_bias is None:
        bias = plan.bias
    else:
        bias = boolfn.Bias(getattr(base_bias, 'epsilon', base_bias))

    if not bias:
        raise errors.PlanError('base bias should be nonzero')
    if d <= 0:
        raise errors.SampleError('d should be positive')

    cost = cost or CostModel()
    terms = 1 << plan.m

    log2_samples = math.log2(d) + 2 * terms * bias.n_b
    log2_data = _log2_sum(
        [log2_samples + math.log2(plan.decimation_factor)] +
        [basis.log2 for basis in plan.basis])

    lengths = sum(plan.cipher.register(label).length for label in plan.targets)
    log2_time = log2_samples + lengths

    folded = None
    if len(plan.targets) == 2:
        folded = _folded_time(plan, log2_samples, cost)

    best = log2_time if folded is None else min(log2_time, folded)

    result = AttackEstimate(
        plan=plan.name,
        parity_terms=terms,
        base_bias_log2=bias.log2_abs,
        amplified_bias_log2=bias.log2_abs * terms,
        d=float(d),
        log2_samples=log2_samples,
        log2_data=log2_data,
        log2_time=log2_time,
        log2_time_terms=plan.m + log2_time,
        log2_time_folded=folded,
        log2_total=max(log2_data, best))

    result.claims = [
        check_claim(claim.quantity, claim.claimed,
                    getattr(result, claim.quantity), claim.tolerance,
                    claim.relation, claim.note)
        for claim in claims]

    result.validate()

    return result


def _folded_time(plan, log2_samples, cost):
    first, second = plan.targets
    log2_a = math.log2(plan.cipher.period_of(first))
    log2_b = math.log2(plan.cipher.period_of(second))

    inner = _log2_sum(
        _terms([(log2_samples, cost.sigma + cost.accumulate),
                (log2_b, log2_b)]))

    return _log2_sum([log2_a + inner] +
                     _terms([(log2_b, cost.reference)]))


def _terms(pairs):
    return [exponent + math.log2(factor)
            for exponent, factor in pairs if factor > 0]


def _log2_sum(exponents):
    top = max(exponents)

    return top + math.log2(sum(2.0 ** (e - top) for e in exponents))


class DistinguisherParams(models.Model):
    """Sample size and error probability of a distinguisher for bias
    `epsilon`.

    `candidates` is the number of hypotheses tested on the same data.
    When `sign_known` is false the test is two-sided.

    """

    epsilon = fields.Ratio(validators.Ratio(-1, 1), required=True)
    d = fields.Float(validators.Range(0), default=1.0)
    candidates = fields.Integer(validators.Range(1), default=1)
    samples_needed = fields.Integer(validators.Range(1), required=True)
    error_prob = fields.Float(validators.Range(0, 0.5), required=True)
    sign_known = fields.Boolean(default=True)

    def validate(self):
        super(DistinguisherParams, self).validate()

        if self.epsilon == 0:
            raise errors.SampleError('epsilon should be nonzero')

        if not 0 < self.error_prob < 0.5:
            raise errors.ValidationError(
                'error_prob should be in (0, 1/2), got {}'.format(
                    self.error_prob))

    @property
    def threshold(self):
        return abs(self.epsilon) / 2


def sample_size(epsilon, d=1, candidates=1, sign_known=True):
    """Returns the :class:`DistinguisherParams` for bias `epsilon`.

    With one candidate ``N = ceil(d / epsilon**2)``. With `K` candidates
    ``N = ceil((sqrt(d) + 2 sqrt(2 ln K))**2 / epsilon**2)``, so that
    the midpoint threshold also holds off every wrong candidate.

    :raises: :class:`errors.SampleError` for a zero bias or ``d <= 0``.

    """

    epsilon = Fraction(getattr(epsilon, 'epsilon', epsilon))

    if epsilon == 0:
        raise errors.SampleError('epsilon should be nonzero')
    if d <= 0:
        raise errors.SampleError('d should be positive')
    if candidates < 1:
        raise errors.SampleError('candidates should be at least 1')

    if candidates == 1:
        samples = math.ceil(Fraction(d) / epsilon ** 2)
    else:
        spread = math.sqrt(d) + 2 * math.sqrt(2 * math.log(candidates))
        samples = math.ceil(spread ** 2 / float(epsilon ** 2))

    params = DistinguisherParams(
        epsilon=epsilon,
        d=float(d),
        candidates=candidates,
        samples_needed=max(samples, 1),
        error_prob=float(norm.cdf(-math.sqrt(d) / 2)),
        sign_known=sign_known)

    params.validate()

    return params


class AttackResult(models.Model):
    """The outcome of a distinguisher or a state recovery.

    ``empirical_bias = 1 - 2 c / samples`` for the `c` ones of the
    parity checks kept.

    """

    plan = fields.String()
    method = fields.String(choices=METHODS, required=True)
    verdict = fields.String(choices=VERDICTS, required=True)
    empirical_bias = fields.Ratio(validators.Ratio(-1, 1), required=True)
    samples = fields.Integer(validators.Range(1), required=True)
    threshold = fields.Ratio(validators.Ratio(0, 1))
    recovered_states = fields.Map()
    work_counter = fields.Integer(validators.Range(0), default=0)

    def validate(self):
        super(AttackResult, self).validate()

        scaled = self.empirical_bias * self.samples
        if scaled.denominator != 1 or (self.samples - scaled) % 2:
            raise errors.ValidationError(
                'empirical_bias {} is not 1 - 2c/{}'.format(
                    self.empirical_bias, self.samples))

    @property
    def disagreements(self):
        return int((self.samples - self.empirical_bias * self.samples) / 2)


def decide(empirical_bias, params, sign_known=None):
    """Midpoint test. One-sided on ``sign(epsilon) * empirical_bias``
    when the sign is known, on its absolute value otherwise.

    """

    if sign_known is None:
        sign_known = params.sign_known

    if sign_known:
        sign = 1 if params.epsilon > 0 else -1
        hit = sign * empirical_bias >= params.threshold
    else:
        hit = abs(empirical_bias) >= params.threshold

    return 'keystream' if hit else 'random'


def distinguish(bits, params, plan=None):
    """Decides whether the first `samples_needed` `bits` are biased.

    :raises: :class:`errors.SampleError` on too few bits.

    """

    bits = np.asarray(bits, dtype=np.uint8)
    samples = params.samples_needed

    if bits.size < samples:
        raise errors.SampleError(
            'need {} samples, got {}'.format(samples, bits.size))

    ones = int(np.count_nonzero(bits[:samples]))
    empirical = Fraction(samples - 2 * ones, samples)

    return AttackResult(
        plan=plan,
        method='distinguish',
        verdict=decide(empirical, params),
        empirical_bias=empirical,
        samples=samples,
        threshold=params.threshold,
        work_counter=samples)


def sample_times(plan, count, start=0):
    """Undecimated positions ``(start + k) D`` of the `count` samples.

    :raises: :class:`errors.KeystreamError` past 64-bit positions.

    """

    factor = plan.decimation_factor
    last = (start + count - 1) * factor + plan.max_offset

    if count and last >= 1 << 63:
        raise errors.KeystreamError(
            'sample positions reach 2^{:.2f}'.format(math.log2(last)))

    return (start + np.arange(count, dtype=np.int64)) * factor


def sigma_stream(source, plan, count, guesses=None, start=0):
    """Returns `count` decimated parity checks ``sigma``.

    Each is the XOR of the keystream at every plan offset, plus the
    outputs of the guessed target registers at the same positions.

    :param source: Keystream with an ``at(positions)`` method.
    :param guesses: Map of target label to fill or
                    :class:`registers.RegisterState`.

    """

    times = sample_times(plan, count, start)
    sigma = np.zeros(count, dtype=np.uint8)

    for tau in plan.offsets:
        sigma ^= source.at(times + tau)

    for label, guess in (guesses or {}).items():
        sigma ^= register_parity(plan, label, guess, times)

    return sigma


def register_parity(plan, label, guess, times):
    """XOR over the plan offsets of one register's output at `times`."""

    if not isinstance(guess, registers.RegisterState):
        guess = registers.RegisterState(plan.cipher.register(label), guess)

    source = registers.RegisterSource(guess)
    parity = np.zeros(times.shape, dtype=np.uint8)

    for tau in plan.offsets:
        parity ^= source.at(times + tau)

    return parity


def approximation_parity(plan, state, count, start=0, labels=None):
    """XOR over the plan offsets of the approximation evaluated on the
    register outputs of `state`.

    :param labels: Restricts the approximation to these registers.

    """

    times = sample_times(plan, count, start)
    parity = np.zeros(count, dtype=np.uint8)

    for label in (plan.approximation if labels is None else labels):
        register = state.registers[state.spec.index_of(label)]
        parity ^= register_parity(plan, label, register, times)

    return parity

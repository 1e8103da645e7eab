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

"""Recovery of the target register fills from parity checks.

Both searches score every guess by the correlation
``sum_k (-1) ** sigma(k)`` of the parity checks it completes and keep the
guess of largest absolute correlation, the first one in integer fill
order on ties.

:func:`exhaustive_recover` tries every combination of target fills.
:func:`folded_recover` handles two targets `A` and `B` with ``N = Q T_B``
samples: for each fill of `A` the parity checks are folded into ``T_B``
per-residue counts ``V1`` and all fills of `B` are scored at once as the
rotations of one reference sequence ``V2``, by FFT cross-correlation.

"""

import collections
import itertools
import logging
import math
import multiprocessing
from fractions import Fraction

import numpy as np

from coaster import attack, errors, registers

logger = logging.getLogger(__name__)

SCANS = ('fft', 'direct')
METHODS = ('folded', 'exhaustive')

Correlation = collections.namedtuple('Correlation', ['values', 'argmax'])


def crosscorrelate(u, v):
    """Circular cross-correlation ``C[i] = sum_k u[(k + i) % T] v[k]`` of
    two real sequences of length `T`, in ``O(T log T)``.

    """

    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)

    if u.ndim != 1 or u.shape != v.shape or u.size < 1:
        raise errors.ValidationError(
            'expected two sequences of the same nonzero length')

    spectrum = np.fft.rfft(u) * np.conj(np.fft.rfft(v))
    values = np.fft.irfft(spectrum, n=u.size)

    return Correlation(values, int(np.argmax(values)))


def direct_crosscorrelate(u, v):
    """:func:`crosscorrelate` by direct ``O(T^2)`` rotation scan."""

    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)

    values = np.array([np.dot(np.roll(u, -i), v) for i in range(u.size)])

    return Correlation(values, int(np.argmax(values)))


def fold_disagreements(v1, v2, q, rotation):
    """Number of parity checks equal to 1 at `rotation`::

        sum_k (V2'[k] + 1) V1[k] + V2'[k] (Q - V1[k]),  V2'[k] = V2[k + i]

    """

    v1 = np.asarray(v1, dtype=np.int64)
    rotated = np.roll(np.asarray(v2, dtype=np.int64), -rotation)

    return int(np.sum((rotated ^ 1) * v1 + rotated * (q - v1)))


class _Target(object):
    """The parity rows of every candidate fill of a target register.

    Row `k` of fill `s` is the XOR over the plan offsets of the output
    of `s` at sample time ``k D``.

    """

    def __init__(self, plan, label):
        spec = plan.cipher.register(label)

        self.label = label
        self.table = registers.cycle_table(spec)
        self.shift = spec.output_shift
        self.factor = plan.decimation_factor
        self.fills = np.arange(1, 1 << spec.length, dtype=np.int64)
        self.bases = [_offset_xor(self.table.sequence(cycle), plan.offsets)
                      for cycle in range(self.table.cycles)]

    def base(self, fill):
        cycle, phase = self.table.locate(int(fill))
        return self.bases[cycle], phase

    def row(self, fill, count):
        base, phase = self.base(fill)
        period = base.size
        k = np.arange(count, dtype=np.int64)

        return base[(phase + self.shift + (self.factor % period) * k) % period]

    def rows(self, count):
        return np.array([self.row(fill, count) for fill in self.fills],
                        dtype=np.uint8)


def _offset_xor(sequence, offsets):
    period = sequence.size
    u = np.arange(period, dtype=np.int64)
    result = np.zeros(period, dtype=np.uint8)

    for tau in offsets:
        result ^= sequence[(u + tau % period) % period]

    return result


def recovery_params(plan, d=1, method='folded'):
    """:class:`attack.DistinguisherParams` sized for a search over every
    target fill, the sample count rounded up to a multiple of ``T_B``
    for folded recovery.

    """

    params = attack.sample_size(plan.amplified_bias, d,
                                candidates=plan.candidates, sign_known=False)

    if method == 'folded' and len(plan.targets) == 2:
        period = plan.cipher.period_of(plan.targets[1])
        params.samples_needed = -(-params.samples_needed // period) * period

    return params


def recover(source, plan, params, method='folded', **kwargs):
    if method not in METHODS:
        raise errors.ValidationError(
            'method should be in {}'.format(METHODS))

    if method == 'folded':
        return folded_recover(source, plan, params, **kwargs)

    return exhaustive_recover(source, plan, params,
                              workers=kwargs.get('workers', 1))


def exhaustive_recover(source, plan, params, workers=1):
    """Tries every combination of nonzero target fills.

    The last target is scored for all its fills at once, as a product
    of the ``+-1`` matrix of its rows with the partial parity checks.

    """

    if not plan.targets:
        raise errors.PlanError('plan {} has no target'.format(plan.name))

    samples = params.samples_needed
    sigma = attack.sigma_stream(source, plan, samples)

    targets = [_Target(plan, label) for label in plan.targets]
    outer = [target.rows(samples) for target in targets[:-1]]
    signs = 1.0 - 2.0 * targets[-1].rows(samples).astype(np.float64)

    combos = list(itertools.product(*[range(len(rows)) for rows in outer]))
    shared = {'sigma': sigma, 'outer': outer, 'signs': signs}

    best = _search(_scan_exhaustive, shared, combos, workers)
    _, value, combo, last = best

    fills = [int(target.fills[index])
             for target, index in zip(targets, list(combo) + [last])]

    work = len(combos) * len(targets[-1].fills) * samples * len(plan.offsets)

    return _result(plan, 'exhaustive', params, value, fills, work)


def _scan_exhaustive(shared, combos):
    best = None

    for combo in combos:
        partial = shared['sigma'].copy()
        for rows, index in zip(shared['outer'], combo):
            partial ^= rows[index]

        correlations = shared['signs'] @ (1.0 - 2.0 * partial)
        index = int(np.argmax(np.abs(correlations)))
        value = int(np.rint(correlations[index]))

        if best is None or abs(value) > best[0]:
            best = (abs(value), value, combo, index)

    return best


def folded_recover(source, plan, params, scan='fft', workers=1):
    """Recovers two target fills with ``T_A`` folds and one rotation
    search per fold.

    Fill `B` at rotation `i` is the all-ones reference fill clocked
    ``i D`` times.

    :param scan: ``'fft'`` for cross-correlation, ``'direct'`` to count
                 disagreements rotation by rotation.

    :raises: :class:`errors.PlanError` unless there are two targets, the
             second one primitive, ``N`` a multiple of ``T_B`` and ``D``
             prime to ``T_B``.

    """

    if scan not in SCANS:
        raise errors.ValidationError('scan should be in {}'.format(SCANS))

    if len(plan.targets) != 2:
        raise errors.PlanError(
            'folded recovery needs two targets, {} has {}'.format(
                plan.name, len(plan.targets)))

    first, second = (_Target(plan, label) for label in plan.targets)

    if not second.table.primitive:
        raise errors.PlanError(
            'register {} is not primitive'.format(second.label))

    period = int(second.fills.size)
    samples = params.samples_needed

    if samples % period:
        raise errors.PlanError(
            '{} samples are not a multiple of T_{} = {}'.format(
                samples, second.label, period))

    step = plan.decimation_factor % period
    if math.gcd(step, period) != 1:
        raise errors.PlanError(
            'decimation factor shares a divisor with T_{}'.format(
                second.label))

    sigma = attack.sigma_stream(source, plan, samples)

    base, phase = second.base(period)
    phases = (phase + np.arange(period, dtype=np.int64) * step) % period
    reference = base[(phases + second.shift) % period]

    shared = {
        'sigma': sigma,
        'rows': first.rows(samples),
        'q': samples // period,
        'reference': reference,
        'rotation_fills': second.table.states(0)[phases],
        'scan': scan,
    }

    best = _search(_scan_folded, shared, list(range(first.fills.size)),
                   workers)
    _, value, index, fill = best

    logger.debug('folded %s: Q=%d, rotation scan %s', plan.name,
                 shared['q'], scan)

    work = first.fills.size * samples * len(plan.offsets)

    return _result(plan, 'folded', params, value,
                   [int(first.fills[index]), int(fill)], work)


def _scan_folded(shared, indices):
    sigma = shared['sigma']
    q = shared['q']
    reference = shared['reference']
    rotation_fills = shared['rotation_fills']
    period = reference.size
    samples = sigma.size

    signs = 1.0 - 2.0 * reference
    best = None

    for index in indices:
        folded = (sigma ^ shared['rows'][index]).reshape(q, period)
        v1 = folded.sum(axis=0, dtype=np.int64)

        if shared['scan'] == 'fft':
            twice = np.rint(2 * crosscorrelate(signs, v1 - q / 2).values)
            correlations = -twice.astype(np.int64)
        else:
            correlations = np.array(
                [samples - 2 * fold_disagreements(v1, reference, q, i)
                 for i in range(period)], dtype=np.int64)

        magnitudes = np.abs(correlations)
        top = int(magnitudes.max())
        ties = np.flatnonzero(magnitudes == top)
        pick = ties[np.argmin(rotation_fills[ties])]

        if best is None or top > best[0]:
            best = (top, int(correlations[pick]), index,
                    int(rotation_fills[pick]))

    return best


def _search(scan, shared, items, workers):
    """Runs `scan` over `items`, split in contiguous chunks over
    `workers` processes, and keeps the first best result in item order.

    """

    if workers <= 1 or len(items) < 2:
        return scan(shared, items)

    chunks = [chunk.tolist() for chunk in
              np.array_split(np.arange(len(items)), min(workers, len(items)))]

    with multiprocessing.Pool(len(chunks), initializer=_share,
                              initargs=(scan, shared)) as pool:
        results = pool.map(_scan_chunk,
                           [[items[i] for i in chunk] for chunk in chunks])

    best = None
    for result in results:
        if best is None or result[0] > best[0]:
            best = result

    return best


_WORKER = {}


def _share(scan, shared):
    _WORKER['scan'] = scan
    _WORKER['shared'] = shared


def _scan_chunk(items):
    return _WORKER['scan'](_WORKER['shared'], items)


def _result(plan, method, params, value, fills, work):
    samples = params.samples_needed
    empirical = Fraction(value, samples)

    result = attack.AttackResult(
        plan=plan.name,
        method=method,
        verdict=attack.decide(empirical, params, sign_known=False),
        empirical_bias=empirical,
        samples=samples,
        threshold=params.threshold,
        recovered_states=dict(zip(plan.targets, fills)),
        work_counter=work)

    logger.info('%s %s: fills %s, bias %s over %d samples', method,
                plan.name, result.recovered_states,
                float(empirical), samples)

    return result

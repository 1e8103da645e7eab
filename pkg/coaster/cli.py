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

"""The ``coaster`` command.

Subcommands: ``analyze`` profiles a combining function, ``estimate``
prices a plan, ``attack`` runs seeded toy attacks, ``keystream`` prints
keystream bits and ``verify`` recomputes every published figure.

Exit status is 0 on success, 1 on usage or input errors and 2 when a
published figure fails to reproduce.

"""

import argparse
import logging
import os
import sys

from coaster import (anf, attack, boolfn, catalog, cipher, combiners,
                     errors, experiments, fields, models, reports,
                     validators, _utils)

logger = logging.getLogger(__name__)


class Approximation(models.Model):
    variables = fields.List(inner_validators=[validators.Integer()])
    weight = fields.Integer(validators.Range(0))
    bias = fields.Ratio(validators.Ratio(-1, 1))
    log2_bias = fields.Float()


class AnalysisReport(models.Model):
    function = fields.String(required=True)
    profile = fields.Embedded(boolfn.FunctionProfile, required=True)
    approximations = fields.Collection(Approximation)


class KeystreamReport(models.Model):
    cipher = fields.String(required=True)
    key = fields.String()
    iv = fields.String()
    t0 = fields.Integer(validators.Range(0), default=0)
    count = fields.Integer(validators.Range(0), required=True)
    keystream = fields.String(required=True)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, '{}: error: {}\n'.format(self.prog, message))


def build_parser():
    parser = _Parser(prog='coaster', description=__doc__.split('\n\n')[0])
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='log debug records to stderr')

    commands = parser.add_subparsers(dest='command', metavar='COMMAND',
                                     parser_class=_Parser)
    commands.required = True

    analyze = commands.add_parser('analyze', help='profile a function')
    analyze.add_argument('function', nargs='?', help='ANF text')
    analyze.add_argument('--builtin', choices=sorted(combiners.BUILTIN))
    analyze.add_argument('--variables', type=int,
                         help='variable count, inferred when omitted')
    analyze.add_argument('--base', type=int, default=0,
                         help='index of the first variable')
    analyze.add_argument('--max-weight', type=int)
    analyze.add_argument('--top', type=int, default=5)
    analyze.add_argument('--no-immunity', action='store_true',
                         help='skip the algebraic immunity')
    _output_options(analyze)
    analyze.set_defaults(run=cmd_analyze)

    estimate = commands.add_parser('estimate', help='price a plan')
    _plan_options(estimate)
    estimate.add_argument('--d', type=float, default=1.0)
    estimate.add_argument('--sigma-cost', type=float, default=16.0)
    estimate.add_argument('--accumulate-cost', type=float, default=26.0)
    estimate.add_argument('--reference-cost', type=float, default=8.0)
    _output_options(estimate)
    estimate.set_defaults(run=cmd_estimate)

    attack_ = commands.add_parser('attack', help='run seeded toy attacks')
    _plan_options(attack_)
    attack_.add_argument('--spec', help='cipher spec, builtin name or file')
    attack_.add_argument('--seed', type=int, default=0)
    attack_.add_argument('--trials', type=int, default=20)
    attack_.add_argument('--workers', type=int, default=os.cpu_count() or 1)
    attack_.add_argument('--d', type=float, default=1.0)
    attack_.add_argument('--method', choices=experiments.METHODS,
                         default='both')
    attack_.add_argument('--scan', choices=('fft', 'direct'), default='fft')
    mode = attack_.add_mutually_exclusive_group()
    mode.add_argument('--random-input', action='store_true',
                      help='attack fair coin bits instead of keystream')
    mode.add_argument('--noiseless', action='store_true',
                      help='use the approximation itself as combiner')
    _output_options(attack_)
    attack_.set_defaults(run=cmd_attack)

    keystream = commands.add_parser('keystream', help='print keystream')
    keystream.add_argument('--builtin', default='toy',
                           choices=sorted(cipher.BUILTIN))
    keystream.add_argument('--spec', help='cipher spec file')
    keystream.add_argument('--key', required=True, help='hex')
    keystream.add_argument('--iv', default='', help='hex')
    keystream.add_argument('--t0', type=int, default=0)
    keystream.add_argument('--count', type=int, default=64)
    keystream.add_argument('--schedule', choices=cipher.SCHEDULES,
                           default='recompute')
    keystream.add_argument('--extra-clocks', type=int, default=32)
    _output_options(keystream)
    keystream.set_defaults(run=cmd_keystream)

    verify = commands.add_parser('verify', help='recompute published '
                                                'figures')
    verify.add_argument('--no-immunity', action='store_true')
    _output_options(verify)
    verify.set_defaults(run=cmd_verify)

    return parser


def _plan_options(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--builtin', choices=sorted(catalog.PLANS),
                       help='builtin plan')
    group.add_argument('--plan', help='plan file')


def _output_options(parser):
    parser.add_argument('--format', choices=reports.FORMATS, default='text')
    parser.add_argument('--out', help='also write the report in DIR')


def _plan_reference(args):
    return args.plan or args.builtin or 'toy'


def cmd_analyze(args):
    if args.builtin:
        text, n, base = catalog.builtin_function(args.builtin)
        name = args.builtin
    elif args.function:
        text, base = args.function, args.base
        n = args.variables
        if n is None:
            masks = anf.monomials(text, None, base)
            n = max(max((mask.bit_length() for mask in masks), default=0), 1)
        name = text
    else:
        raise errors.ValidationError('give ANF text or --builtin')

    table = boolfn.parse_anf(text, n, base)
    profile = boolfn.profile(table, immunity=not args.no_immunity)

    approximations = [
        Approximation(variables=mask.variables(base), weight=mask.weight,
                      bias=bias.epsilon, log2_bias=bias.log2_abs)
        for mask, bias in boolfn.best_affine_approximations(
            table, args.max_weight, limit=args.top)
        if bias]

    return AnalysisReport(function=name, profile=profile,
                          approximations=approximations)


def cmd_estimate(args):
    reference = _plan_reference(args)
    plan = catalog.load_plan(reference)
    cost = attack.CostModel(sigma=args.sigma_cost,
                            accumulate=args.accumulate_cost,
                            reference=args.reference_cost)
    cost.validate()

    return attack.estimate(plan, d=args.d, cost=cost,
                           claims=catalog.claims(reference))


def cmd_attack(args):
    mode = 'keystream'
    if args.random_input:
        mode = 'random'
    elif args.noiseless:
        mode = 'noiseless'

    config = experiments.ExperimentConfig(
        plan=_plan_reference(args), cipher=args.spec, seed=args.seed,
        trials=args.trials, d=args.d, method=args.method, scan=args.scan,
        mode=mode, workers=max(args.workers, 1))

    return experiments.run_experiment(config)


def cmd_keystream(args):
    spec = catalog.load_spec(args.spec or args.builtin)
    keyiv = cipher.KeyIv.from_hex(args.key, args.iv)
    state = cipher.key_load(spec, keyiv, schedule=args.schedule,
                            extra_clocks=args.extra_clocks)
    bits = cipher.keystream(state, args.t0, args.count)

    return KeystreamReport(cipher=spec.name, key=args.key, iv=args.iv,
                           t0=args.t0, count=args.count,
                           keystream=_utils.bits_to_hex(bits.tolist()))


def cmd_verify(args):
    return experiments.verify(immunity=not args.no_immunity)


def _emit(args, record):
    text = reports.render(record, args.format)
    sys.stdout.write(text)

    if args.out:
        path = reports.write(args.out,
                             '{}.{}'.format(args.command, args.format), text)
        logger.info('wrote %s', path)

        curve = getattr(record, 'bias_curve', None)
        if curve:
            reports.write(args.out, 'bias.csv', reports.bias_curve_csv(curve))


def _configure_logging(verbose):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(message)s'))

    root = logging.getLogger('coaster')
    root.handlers = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    _configure_logging(args.verbose)

    try:
        record = args.run(args)
        _emit(args, record)

        if isinstance(record, experiments.VerificationReport):
            record.raise_for_mismatch()
        elif isinstance(record, attack.AttackEstimate) and record.mismatches:
            raise errors.VerificationError(
                'figures failed to reproduce: {}'.format(
                    ', '.join(claim.name for claim in record.mismatches)))

    except errors.VerificationError as error:
        logger.error('coaster: %s', error)
        return 2
    except errors.CoasterError as error:
        logger.error('coaster: %s', error)
        return 1

    return 0

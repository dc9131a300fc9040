from __future__ import print_function
from __future__ import absolute_import
import argparse
import sys
from . import RunConfig
from .CavityRun import runSingle
from .ConvergenceReport import runConvergence
from .DetuningSweep import runDetuningSweep
from .UtilsParallel import broadcast, rank


def _parser():
    parser = argparse.ArgumentParser(prog='dce', description='Particle creation in a one-dimensional cavity with a moving wall')
    commands = parser.add_subparsers(dest='command')
    for name, text in (('run', 'single run, one CSV row per checkpoint'),
            ('converge', 'repeat the run for every sweep.k_max value and compare the spectra'),
            ('detune', 'run every sweep.detuning point and measure the oscillations')):
        sub = commands.add_parser(name, help=text)
        sub.add_argument('--config', help='key = value run configuration file')
        sub.add_argument('--set', dest='overrides', action='append', default=[], metavar='SECTION.KEY=VALUE',
            help='override one configuration key, may be repeated')
        sub.add_argument('--omega', help='trajectory.omega, accepts multiples of pi such as 3pi')
        sub.add_argument('--epsilon', help='trajectory.epsilon')
        sub.add_argument('--k-max', dest='k_max', help='modes.k_max')
        sub.add_argument('--t-max', dest='t_max', help='schedule.t_max')
        sub.add_argument('--output', help='output.directory')
        sub.add_argument('--quiet', action='store_true', help='no banner or progress output')
    return parser


SHORTCUTS = {'omega': 'trajectory.omega', 'epsilon': 'trajectory.epsilon', 'k_max': 'modes.k_max',
    't_max': 'schedule.t_max', 'output': 'output.directory'}


def parameters(args):
    raw = RunConfig.readConfig(args.config) if args.config else {}
    raw.update(RunConfig.parseOverrides(args.overrides))
    for field, key in SHORTCUTS.items():
        value = getattr(args, field)
        if value is not None:
            raw[key] = value
    return RunConfig.buildParameters(raw)


def main(argv=None):
    """
    Exit status 0 when every run reached t_max, 1 when a run or sweep point failed or the configuration is invalid
    """
    parser = _parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return 2
    try:
        params = parameters(args)
    except (IOError, OSError, ValueError) as error:
        print('dce: %s' % error, file=sys.stderr)
        return 1

    verbose = not args.quiet
    try:
        if args.command == 'run':
            failed = False
            if rank == 0:
                run = runSingle(params, verbose=verbose)
                failed = not run.complete
        elif args.command == 'converge':
            failed = runConvergence(params, verbose=verbose).failed
        else:
            failed = runDetuningSweep(params, verbose=verbose).failed
    except ValueError as error:
        print('dce: %s' % error, file=sys.stderr)
        return 1
    return 1 if broadcast(failed) else 0


if __name__ == '__main__':
    sys.exit(main())

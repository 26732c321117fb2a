# main.py
"""
Command-line entry point for the complete-sets toolkit

Exit codes: 0 success, 1 domain error (JSON error body on stdout), 2 usage error.
"""
import argparse
import logging
import re
import sys
from typing import List, Optional, TextIO

from cli.commands import (
    CONJECTURES,
    THEOREM_PARTS,
    cmd_ap_bound,
    cmd_census,
    cmd_check,
    cmd_conjecture,
    cmd_enumerate,
    cmd_growth,
    cmd_normal_form,
    cmd_theorem,
)
from cli.output import OutputRecord, error_record, write_record
from config.settings import LOG_LEVELS, get_settings
from utils.errors import CompleteSetError, SetLiteralError
from utils.logging_config import setup_logging
from utils.validators import SetLiteralParser

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


class SetLiteralArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reads literals such as -2,5,3,-1 as positional values"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # subparsers are built with type(self), so they inherit this matcher
        self._negative_number_matcher = re.compile(r'^-\d+(\s*,\s*-?\d+)*$|^-\d*\.\d+$')


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be a positive integer")
    return value


def _int_list(text: str) -> List[int]:
    try:
        return SetLiteralParser.parse(text)
    except SetLiteralError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    parser = SetLiteralArgumentParser(
        prog='completeset',
        description="Decide, construct and count complete integer sets (product divisible by sum)",
    )
    parser.add_argument('--log-level', choices=LOG_LEVELS, help="Overrides CSET_LOG_LEVEL")
    sub = parser.add_subparsers(dest='command', required=True)

    check = sub.add_parser('check', help="Completeness and certificate of one set")
    check.add_argument('set', help="Comma-separated integers, e.g. 3,5,7")

    nf = sub.add_parser('normal-form', help="Normal form of a set")
    nf.add_argument('set')

    census = sub.add_parser('census', help="Exact count of complete subsets of {1..N}")
    census.add_argument('--n', type=int, required=True)
    census.add_argument('--min-size', type=_positive_int, default=2)
    census.add_argument('--format', choices=('json', 'csv'), default='json')
    census.add_argument('--threads', type=_positive_int, help="Overrides CSET_THREADS")
    census.add_argument('--histogram', action='store_true')

    enum = sub.add_parser('enumerate', help="Stream complete subsets of {1..N}")
    enum.add_argument('--n', type=int, required=True)
    enum.add_argument('--min-size', type=_positive_int, default=2)
    enum.add_argument('--max-size', type=_positive_int)
    enum.add_argument('--threads', type=_positive_int)

    bound = sub.add_parser('ap-bound', help="Odd-length homogeneous AP lower bound")
    bound.add_argument('--n', type=int, required=True)

    growth = sub.add_parser('growth', help="Growth table against N ln N and N ln N ln ln N")
    growth.add_argument('--ns', type=_int_list, required=True, help="Ascending list, e.g. 10,100,1000")
    growth.add_argument('--exact-up-to', type=int, default=20)
    growth.add_argument('--format', choices=('json', 'csv'), default='json')
    growth.add_argument('--threads', type=_positive_int)

    theorem = sub.add_parser('theorem', help="Closure-theorem checkers")
    theorem.add_argument('part', choices=THEOREM_PARTS)
    theorem.add_argument('sets', nargs='+', help="Set literals (ap takes 'd,n')")
    theorem.add_argument('--t', type=int, help="Multiplier for 'scaled'")
    theorem.add_argument('--q', type=int, help="Scale factor for 'scale'")
    theorem.add_argument('--pairs', type=int, help="Balanced pairs for 'grow'")

    conj = sub.add_parser('conjecture', help="Conjecture and open-question scans")
    conj.add_argument('name', choices=CONJECTURES)
    conj.add_argument('--set', dest='set_literal')
    conj.add_argument('--max-n', type=int, default=7)
    conj.add_argument('--include-even', action='store_true')
    conj.add_argument('--bound', type=int, default=100)
    conj.add_argument('--max-added', type=int, default=1)
    conj.add_argument('--r-min', type=int, default=-10)
    conj.add_argument('--r-max', type=int, default=10)
    conj.add_argument('--n-max', type=int, default=12)
    conj.add_argument('--max', dest='max_shift', type=int, default=10, help="Shift bound M for 'translate'")
    conj.add_argument('--threads', type=_positive_int, help="Overrides CSET_THREADS")

    return parser


def _dispatch(args: argparse.Namespace, out: TextIO):
    emit = lambda record: write_record(record, out)

    if args.command == 'check':
        emit(cmd_check(args.set))
    elif args.command == 'normal-form':
        emit(cmd_normal_form(args.set))
    elif args.command == 'census':
        result = cmd_census(args.n, args.min_size, args.format, args.threads, args.histogram)
        if isinstance(result, OutputRecord):
            emit(result)
        else:
            out.write(result)
    elif args.command == 'enumerate':
        cmd_enumerate(args.n, emit, args.min_size, args.max_size, args.threads)
    elif args.command == 'ap-bound':
        emit(cmd_ap_bound(args.n))
    elif args.command == 'growth':
        result = cmd_growth(args.ns, args.exact_up_to, args.format, args.threads)
        if isinstance(result, OutputRecord):
            emit(result)
        else:
            out.write(result)
    elif args.command == 'theorem':
        parameter = {'scaled': args.t, 'scale': args.q, 'grow': args.pairs}.get(args.part)
        emit(cmd_theorem(args.part, args.sets, parameter))
    elif args.command == 'conjecture':
        for record in cmd_conjecture(
            args.name, args.set_literal, args.max_n, args.include_even, args.bound, args.max_added,
            args.r_min, args.r_max, args.n_max, args.max_shift, args.threads,
        ):
            emit(record)


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE_ERROR

    command = args.command if args.command != 'theorem' else f'theorem {args.part}'
    try:
        settings = get_settings()
        setup_logging(args.log_level or settings.log_level, settings.log_file)
        _dispatch(args, out)
    except SetLiteralError as e:
        write_record(error_record(command, e), out)
        return EXIT_USAGE_ERROR
    except CompleteSetError as e:
        write_record(error_record(command, e), out)
        return EXIT_DOMAIN_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

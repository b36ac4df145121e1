#!/usr/bin/env python3
"""
Paracontact Lab - Command Line Entry Point
Classify homogeneous almost paracontact metric manifolds and verify their curvature identities
"""

import argparse
import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from config.settings import Settings
from models.catalog import builtin, builtin_names
from models.loader import dumps, export, resolve
from report.formatters import FORMATS, render
from report.runner import run_check
from utils.errors import ParacontactError
from utils.helpers import setup_exception_handler
from utils.logger import Logger

EXIT_OK = 0
EXIT_IDENTITY_FAILED = 1
EXIT_INPUT_ERROR = 2


def _parse_expectation(text):
    """flag=true|false"""
    flag, sep, value = text.partition('=')
    value = value.strip().lower()
    if not sep or not flag.strip() or value not in ('true', 'false'):
        raise argparse.ArgumentTypeError(f"expected flag=true|false, got '{text}'")
    return flag.strip(), value == 'true'


def build_parser():
    """Build the argument parser"""
    parser = argparse.ArgumentParser(
        prog="paracontact",
        description="Exact curvature analysis of homogeneous almost paracontact metric manifolds",
    )
    parser.add_argument('--config', metavar='PATH', help="settings file (default: config/config.ini)")
    parser.add_argument('-v', '--verbose', action='store_true', help="log debug output to stderr")

    subparsers = parser.add_subparsers(dest='command', required=True)

    check_parser = subparsers.add_parser('check', help="classify a model and run the identity suite")
    check_parser.add_argument('model', help="built-in model name or path to a model file")
    check_parser.add_argument('--report', choices=FORMATS, help="report format (default from settings)")
    check_parser.add_argument('--identities', metavar='LIST',
                              help="comma-separated identity keys, or 'all'")
    check_parser.add_argument('--expect', metavar='FLAG=BOOL', action='append', type=_parse_expectation,
                              default=[], help="assert a classification flag; repeatable")

    models_parser = subparsers.add_parser('models', help="built-in model catalog")
    models_sub = models_parser.add_subparsers(dest='models_command', required=True)
    models_sub.add_parser('list', help="print built-in model names")
    export_parser = models_sub.add_parser('export', help="write a built-in model in canonical file form")
    export_parser.add_argument('name', help="built-in model name")
    export_parser.add_argument('-o', '--output', metavar='PATH', help="output file (default: stdout)")

    return parser


class ParacontactApp:
    """Main application class for the command line"""

    def __init__(self, argv=None):
        """Initialize the application"""
        self.logger = Logger.get_logger()
        self.argv = argv
        self.args = None
        self.settings = None

    def initialize(self):
        """Parse arguments and load settings"""
        setup_exception_handler()

        for stream in (sys.stdout, sys.stderr):
            encoding = (getattr(stream, 'encoding', None) or '').lower().replace('-', '')
            if encoding != 'utf8' and hasattr(stream, 'reconfigure'):
                try:
                    stream.reconfigure(encoding='utf-8')
                except ValueError as e:
                    self.logger.debug(f"Could not switch {stream} to UTF-8: {e}")

        self.args = build_parser().parse_args(self.argv)
        self.settings = Settings(self.args.config)

        logger = Logger()
        logger.configure(self.settings)
        if self.args.verbose:
            logger.set_level('DEBUG')

    def run(self):
        """Run the selected command and return the exit code"""
        try:
            self.initialize()
        except SystemExit as e:
            # argparse reports usage errors with code 2
            return EXIT_OK if e.code in (0, None) else EXIT_INPUT_ERROR

        try:
            if self.args.command == 'check':
                return self.cmd_check()
            return self.cmd_models()

        except ParacontactError as e:
            self.logger.debug(f"{type(e).__name__}: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_INPUT_ERROR

        except KeyboardInterrupt:
            self.logger.info("Interrupted by user")
            return EXIT_INPUT_ERROR

        except Exception as e:
            self.logger.critical(f"Unexpected error: {e}", exc_info=True)
            return EXIT_INPUT_ERROR

    def cmd_check(self):
        """Run the full check on one model and print the report"""
        args = self.args
        spec = resolve(args.model, self.settings.get_search_directory())

        if args.identities is not None:
            identities = args.identities.split(',')
        else:
            identities = self.settings.get_identity_filter()

        result = run_check(spec, identities, dict(args.expect))
        fmt = args.report or self.settings.get_report_format()
        sys.stdout.write(render(result, fmt))
        return EXIT_OK if result.overall else EXIT_IDENTITY_FAILED

    def cmd_models(self):
        """List built-in models or export one of them"""
        args = self.args
        if args.models_command == 'list':
            for name in builtin_names():
                print(name)
            return EXIT_OK

        spec = builtin(args.name)
        if args.output:
            export(spec, args.output)
        else:
            sys.stdout.write(dumps(spec))
        return EXIT_OK


def main(argv=None):
    """Main function to start the command line application"""
    app = ParacontactApp(argv)
    exit_code = app.run()
    sys.exit(exit_code)


if __name__ == "__main__":
    main()

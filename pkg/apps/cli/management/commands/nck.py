"""
Management command front end for the noncompactness toolkit.

    python manage.py nck jung --trials 1000 --dim 5 --seed 7
    python manage.py nck bracket --input ramp.json --delta 2^-12 --epsilon 0.01
"""
import logging
import sys

from django.core.management.base import BaseCommand, CommandError

from apps.cli.config import COMMAND_CHOICES, RunConfig
from apps.cli.runner import run
from apps.core.exceptions import ToolkitError

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = (
        'Chebyshev balls, Jung checks, modulus profiles, certified nets and '
        'measure brackets for families of paths'
    )

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # Usage errors surface as CommandError so they exit with status 1
        parser.called_from_command_line = False
        return parser

    def run_from_argv(self, argv):
        # Django parses before its own error handling starts
        parser = self.create_parser(argv[0], argv[1])
        try:
            parser.parse_args(argv[2:])
        except CommandError as e:
            self.stderr.write(parser.format_usage(), ending='')
            self.stderr.write(str(e))
            sys.exit(e.returncode)
        super().run_from_argv(argv)

    def add_arguments(self, parser):
        parser.add_argument('command', nargs='?', help=f'One of: {", ".join(COMMAND_CHOICES)}')
        parser.add_argument('--input', help='Point-set or family file')
        parser.add_argument('--output', help='Artifact file; stdout when omitted')
        parser.add_argument('--dim', help='Dimension N')
        # Reals accept decimal literals and power notation such as 2^-12
        parser.add_argument('--delta', help='Scale delta')
        parser.add_argument('--alpha', help='Modulus bound alpha at delta')
        parser.add_argument('--epsilon', help='Quantization budget epsilon')
        parser.add_argument('--trials', help='Random Jung trials')
        parser.add_argument('--seed', help='Seed for every random choice')
        parser.add_argument('--format', help='json or csv')
        parser.add_argument('--kind', help='ramp, sine_sweep or simplex_osc')
        parser.add_argument('--mesh', help='Grid step for generated families')
        parser.add_argument('--k-max', help='Number of generated members')
        parser.add_argument('--tol', help='Numerical tolerance')

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(options)
        except ToolkitError as e:
            raise CommandError(str(e), returncode=e.exit_code)

        try:
            outcome = run(config, stdout=self.stdout)
        except Exception as e:
            logger.exception(f'Unhandled error in nck {config.command}: {str(e)}')
            raise

        if outcome.exit_code:
            raise CommandError(outcome.message, returncode=outcome.exit_code)
        if not outcome.wrote_stdout:
            self.stdout.write(self.style.SUCCESS(outcome.message))

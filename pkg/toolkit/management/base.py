"""
Common ground for the toolkit's management commands.

Exit status: 0 when the computation succeeded or the certificate verified, 1
when a certificate was refuted, 2 when an input could not be read or did not
validate.
"""
import logging

from django.core.management.base import BaseCommand, CommandError

from helpers.conf import topology_setting
from homology.linalg import Coefficients

from ..fixtures import resolve_image


REFUTED = 1
BAD_INPUT = 2

OPTIONS = {
    'budget': dict(type=int, help='node limit for searches (default: SEARCH_BUDGET setting)'),
    'max_path_len': dict(type=int, help='longest path a section search tries'),
    'max_detour': dict(type=int, help='how many steps longer than a shortest path a searched path may be'),
    'coeff': dict(help='coefficients: int, q or p<prime> (default: COEFFICIENTS setting)'),
    'max_steps': dict(type=int, help='longest homotopy a contraction search tries'),
}


class TopologyCommand(BaseCommand):
    """
    Subclasses list the shared flags they take in ``topology_options`` and
    call :meth:`image` for every image argument (``@name`` or a file).
    """
    requires_system_checks = []
    requires_migrations_checks = False
    topology_options = ()

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        for name in self.topology_options:
            parser.add_argument('--' + name.replace('_', '-'), dest=name, **OPTIONS[name])
        return parser

    def execute(self, *args, **options):
        if options.get('verbosity', 1) >= 3:
            logging.getLogger().setLevel(logging.DEBUG)
        try:
            return super().execute(*args, **options)
        except (ValueError, OSError) as e:
            raise CommandError(str(e), returncode=BAD_INPUT)

    def image(self, ref):
        return resolve_image(ref)

    def coefficients(self, options):
        return Coefficients.parse(options.get('coeff') or topology_setting('COEFFICIENTS'))

    def emit(self, *lines):
        for line in lines:
            self.stdout.write(str(line))

    def verdict(self, verdict, success=None):
        """Print the outcome of a verifier; a refutation ends the command with status 1."""
        if not verdict:
            self.stdout.write('REFUTED: {}'.format(verdict.reason))
            raise CommandError('certificate refuted', returncode=REFUTED)
        self.stdout.write(success or 'verified')

from django.core.management.base import CommandError

from ..base import REFUTED, TopologyCommand
from ...reproduce import TARGETS, reproduce


class Command(TopologyCommand):
    help = 'Re-run the canned pipeline of one or more targets and print PASS, PARTIAL, REFUTED or FAIL.'
    topology_options = ('budget',)

    def add_arguments(self, parser):
        parser.add_argument('targets', nargs='*', metavar='target', help=', '.join(TARGETS))
        parser.add_argument('--all', action='store_true')
        parser.add_argument('--search', action='store_true', help='also run the contraction and section searches')

    def handle(self, *args, **options):
        names = list(TARGETS) if options['all'] else options['targets']
        if not names:
            raise ValueError('name a target or pass --all')
        failed = []
        for name in names:
            report = reproduce(name, search=options['search'], budget=options['budget'])
            self.emit(report.render())
            if report.failed:
                failed.append(name)
        if failed:
            raise CommandError('failed: {}'.format(', '.join(failed)), returncode=REFUTED)

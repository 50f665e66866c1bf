from grid.images import power
from helpers.verdicts import Verdict
from planning.witnesses import load_witness

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Check that the parts of a witness cover X^n (X itself with --n 1).'

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('witness')
        parser.add_argument('--n', type=int, default=2)

    def handle(self, *args, **options):
        image = self.image(options['image'])
        base = power(image, options['n'])
        cover, _ = load_witness(options['witness'], base, image)
        uncovered = cover.uncovered()
        if uncovered:
            self.verdict(Verdict.failure('{} of {} points uncovered, first {}', len(uncovered), len(base),
                                         min(uncovered)))
        self.verdict(Verdict.success(), '{} parts cover all {} points'.format(len(cover), len(base)))

from grid.images import power
from planning.sections import verify_tc_witness
from planning.witnesses import load_witness

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Certify TC(X) <= l from a cover of X×X with a section on every part.'

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('witness')
        parser.add_argument('--mode', choices=('adjacent', 'connected'))

    def handle(self, *args, **options):
        image = self.image(options['image'])
        cover, sections = load_witness(options['witness'], power(image, 2), image)
        if sections is None:
            raise ValueError('{} holds a cover but no rules'.format(options['witness']))
        bound = verify_tc_witness(image, cover, sections, options['mode'])
        self.verdict(bound.verdict, 'TC <= {}'.format(bound.value))

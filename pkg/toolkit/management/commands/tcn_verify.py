from grid.images import power
from planning.sections import verify_tcn_witness
from planning.witnesses import load_witness

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Certify TC_n(X) <= l from a cover of X^n with a spider rule on every part.'

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('witness')
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--mode', choices=('adjacent', 'connected'))

    def handle(self, *args, **options):
        image = self.image(options['image'])
        n = options['n']
        cover, sections = load_witness(options['witness'], power(image, n), image)
        if sections is None:
            raise ValueError('{} holds a cover but no rules'.format(options['witness']))
        bound = verify_tcn_witness(image, n, cover, sections, options['mode'])
        self.verdict(bound.verdict, 'TC_{} <= {}'.format(n, bound.value))

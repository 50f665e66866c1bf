from homology.cohomology import homology
from homology.complexes import build_clique_complex

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Simplicial homology of the clique complex, with torsion over the integers.'
    topology_options = ('coeff',)

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('--max-dim', type=int, help='highest simplex dimension built')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        K = build_clique_complex(image, max_dim=options['max_dim'])
        self.emit('simplices: {}'.format(' '.join(str(n) for n in K.sizes())))
        self.emit(*homology(K, self.coefficients(options)).lines())

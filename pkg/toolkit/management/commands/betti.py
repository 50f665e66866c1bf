from homology.cohomology import homology
from homology.complexes import build_clique_complex

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Betti numbers of the clique complex of a digital image.'
    topology_options = ('coeff',)

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('--degree', type=int, help='only this degree')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        coefficients = self.coefficients(options)
        degree = options['degree']
        top = image.dimension if degree is None else degree
        result = homology(build_clique_complex(image, max_dim=top + 1), coefficients)
        degrees = range(top + 1) if degree is None else [degree]
        for q in degrees:
            self.emit('b_{} = {}'.format(q, result.betti(q)))

from homology.cohomology import cohomology_generators, cup, is_coboundary, nilpotency
from homology.complexes import build_clique_complex

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Cup products of cohomology generators and the cup length.'
    topology_options = ('coeff', 'budget')

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('--degrees', type=int, nargs=2, default=(1, 1), metavar=('P', 'Q'))

    def handle(self, *args, **options):
        image = self.image(options['image'])
        coefficients = self.coefficients(options)
        p, q = options['degrees']
        K = build_clique_complex(image, max_dim=max(image.dimension + 1, p + q))
        left = cohomology_generators(K, p, coefficients)
        right = cohomology_generators(K, q, coefficients)
        self.emit('generators: {} in degree {}, {} in degree {}'.format(len(left), p, len(right), q))
        for i, phi in enumerate(left, start=1):
            for j, psi in enumerate(right, start=1):
                product = cup(phi, psi)
                zero = product.is_zero() or is_coboundary(product)
                self.emit('u{} ⌣ v{} = {}'.format(i, j, '0' if zero else 'nonzero'))
        self.emit('cup length: {}'.format(nilpotency(K, budget=options['budget'], coefficients=coefficients)))

from homology.cohomology import cohomology
from homology.complexes import build_clique_complex

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Simplicial cohomology with cocycle and coboundary ranks.'
    topology_options = ('coeff',)

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('--max-dim', type=int)
        parser.add_argument('--order', help='comma-separated point labels giving the vertex order')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        order = None
        if options['order']:
            by_label = {label: p for p, label in image.labels}
            try:
                order = [by_label[label] for label in options['order'].split(',')]
            except KeyError as e:
                raise ValueError('no point labelled {}'.format(e))
        K = build_clique_complex(image, max_dim=options['max_dim'], order=order)
        result = cohomology(K, self.coefficients(options))
        self.emit(*result.lines())
        for q in range(len(result.ranks)):
            self.emit('rank Z^{} = {}, rank B^{} = {}'.format(q, result.cycle_ranks[q], q, result.boundary_ranks[q]))

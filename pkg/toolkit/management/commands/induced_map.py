from helpers.parsing import read_source
from homology.cohomology import induced_cohomology_map
from homology.complexes import build_clique_complex
from homotopy.formats import parse_script

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Rank and kernel of the map induced on cohomology by a digital map.'
    topology_options = ('coeff',)

    def add_arguments(self, parser):
        parser.add_argument('domain')
        parser.add_argument('codomain')
        parser.add_argument('map', help='a length-0 homotopy file ("homotopy 0", "t 0", then x -> f(x))')
        parser.add_argument('--degree', type=int, action='append', help='degrees to report (default: all)')
        parser.add_argument('--allow-discontinuous', action='store_true',
                            help='report zero maps in degrees where either group is zero without checking continuity')

    def handle(self, *args, **options):
        domain = self.image(options['domain'])
        codomain = self.image(options['codomain'])
        script = parse_script(read_source(options['map']), domain, codomain, source=options['map'])
        if script.length:
            raise ValueError('{}: a map file holds exactly one map'.format(options['map']))
        f = script[0]
        K_dom, K_cod = build_clique_complex(domain), build_clique_complex(codomain)
        degrees = options['degree'] or range(min(K_dom.max_dim, K_cod.max_dim) + 1)
        for q in degrees:
            induced = induced_cohomology_map(f, K_dom, K_cod, q, self.coefficients(options),
                                             allow_discontinuous=options['allow_discontinuous'])
            line = 'H^{}: {} -> {}, rank {}, kernel rank {}'.format(
                q, induced.source_rank, induced.target_rank, induced.rank, induced.kernel_rank)
            if not induced.continuity_checked:
                line += ' (continuity not checked)'
            self.emit(line)

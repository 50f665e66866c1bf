from helpers.parsing import read_source
from homotopy.formats import parse_script
from homotopy.scripts import ContractionCertificate, verify_contraction, verify_homotopy

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Verify a homotopy script, or with --contraction a contraction certificate.'

    def add_arguments(self, parser):
        parser.add_argument('domain')
        parser.add_argument('script')
        parser.add_argument('--codomain', help='image the maps land in (default: the domain)')
        parser.add_argument('--contraction', action='store_true',
                            help='also require f_0 to be the inclusion and f_n constant')

    def handle(self, *args, **options):
        domain = self.image(options['domain'])
        codomain = self.image(options['codomain']) if options['codomain'] else domain
        script = parse_script(read_source(options['script']), domain, codomain, source=options['script'])
        if options['contraction']:
            target = script[script.length](domain.sorted_points[0])
            verdict = verify_contraction(ContractionCertificate(script, target))
            self.verdict(verdict, 'contraction to {} in {} steps verified'.format(target, script.length))
        else:
            self.verdict(verify_homotopy(script), 'homotopy of length {} verified'.format(script.length))

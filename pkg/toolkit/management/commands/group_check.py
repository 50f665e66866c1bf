from grid.images import power
from homotopy.formats import load_certificate
from planning.groups import group_check, load_group, tcn_upper_via_group
from planning.witnesses import load_witness

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = (
        'Check a group table for the axioms and continuity; with --n, a cat cover of H^(n-1) and its '
        'contractions, also bound TC_n(H).'
    )

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('table')
        parser.add_argument('--n', type=int)
        parser.add_argument('--cover', help='cover of H^(n-1)')
        parser.add_argument('--contraction', action='append', default=[], help='one per cover part, in order')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        table = load_group(options['table'], image)
        n = options['n']
        if n is None:
            self.verdict(group_check(image, table), 'group law with continuous multiplication and inversion')
            return

        if not options['cover']:
            raise ValueError('--n needs --cover and its contractions')
        base = power(image, n - 1)
        cover, _ = load_witness(options['cover'], base, base)
        certificates = [load_certificate(path, base.subimage(part), base)
                        for path, part in zip(options['contraction'], cover.parts)]
        bound = tcn_upper_via_group(image, table, n, cover, certificates)
        self.emit(*bound.certificate)
        self.verdict(bound.verdict, 'TC_{} <= {}'.format(n, bound.value))

from grid.images import power
from planning.search import SectionOutcome, synthesize_section
from planning.witnesses import CoverWitness, dump_witness, load_witness

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Search for a continuous section over one part of a cover, or over all of X×X.'
    topology_options = ('budget', 'max_path_len', 'max_detour')

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('witness', nargs='?', help='cover file; omit for U = X×X')
        parser.add_argument('--part', type=int, default=1)
        parser.add_argument('--mode', choices=('adjacent', 'connected'))
        parser.add_argument('--output', help='write the section found as a one-part witness')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        base = power(image, 2)
        if options['witness']:
            cover, _ = load_witness(options['witness'], base, image)
            if not 1 <= options['part'] <= len(cover):
                raise ValueError('part {} does not exist; the cover has {}'.format(options['part'], len(cover)))
            members = cover.parts[options['part'] - 1]
        else:
            members = base.points

        result = synthesize_section(members, image, budget=options['budget'],
                                    max_path_len=options['max_path_len'], mode=options['mode'],
                                    max_detour=options['max_detour'])
        self.emit('{} after {} nodes'.format(result.outcome, result.nodes))
        if result.reason:
            self.emit(result.reason)
        if result.outcome == SectionOutcome.FOUND and options['output']:
            with open(options['output'], 'w') as fh:
                fh.write(dump_witness(CoverWitness(base, [members]), [result.rule]))

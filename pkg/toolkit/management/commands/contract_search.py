from homotopy.formats import dump_script
from homotopy.search import find_contraction

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Search for a contraction; prints contractible, not-contractible (exhaustive) or unknown.'
    topology_options = ('budget', 'max_steps')

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('--output', help='write the contraction found to this file')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        result = find_contraction(image, max_steps=options['max_steps'], budget=options['budget'])
        self.emit('{} after {} nodes'.format(result.outcome, result.nodes))
        if result.reason:
            self.emit(result.reason)
        if result.certificate:
            self.emit('contraction to {} in {} steps'.format(result.certificate.target, result.certificate.length))
            if options['output']:
                with open(options['output'], 'w') as fh:
                    fh.write(dump_script(result.certificate.script))

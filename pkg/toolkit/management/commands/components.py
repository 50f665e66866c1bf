from grid.images import components
from helpers.parsing import format_point

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'List the connected components of a digital image.'

    def add_arguments(self, parser):
        parser.add_argument('image')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        parts = components(image)
        for i, part in enumerate(parts, start=1):
            self.emit('component {}: {} points'.format(i, len(part)))
            for p in sorted(part):
                label = image.label(p)
                self.emit('  ' + format_point(p) + ('  # {}'.format(label) if label else ''))

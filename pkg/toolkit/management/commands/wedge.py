from grid.formats import dump_image
from grid.images import wedge

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Validate and write the wedge of two images at a common point.'

    def add_arguments(self, parser):
        parser.add_argument('first')
        parser.add_argument('second')
        parser.add_argument('--at', type=int, nargs='+', required=True, metavar='C', help='wedge point coordinates')

    def handle(self, *args, **options):
        result = wedge(self.image(options['first']), self.image(options['second']), tuple(options['at']))
        self.stdout.write(dump_image(result), ending='')

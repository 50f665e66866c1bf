from grid.formats import dump_image
from grid.images import product

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Write the product of two images with the product adjacency.'

    def add_arguments(self, parser):
        parser.add_argument('first')
        parser.add_argument('second')

    def handle(self, *args, **options):
        result = product(self.image(options['first']), self.image(options['second']))
        self.stdout.write(dump_image(result), ending='')

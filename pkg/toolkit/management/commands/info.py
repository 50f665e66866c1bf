from grid.images import components, diameter, is_connected, is_simple_closed_curve
from surfaces.genus import is_closed_surface

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Summarize a digital image.'

    def add_arguments(self, parser):
        parser.add_argument('image', help='@fixture or image file')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        parts = components(image)
        self.emit(
            'points: {}'.format(len(image)),
            'dimension: {}'.format(image.dimension),
            'adjacency: {}'.format(image.adjacency),
            'components: {}'.format(len(parts)),
            'diameter: {}'.format(diameter(image)),
            'simple closed curve: {}'.format('yes' if is_simple_closed_curve(image) else 'no'),
        )
        if image.dimension == 3 and not image.adjacency.explicit and is_connected(image):
            self.emit('closed surface: {}'.format('yes' if is_closed_surface(image) else 'no'))

from surfaces.genus import classify_neighbors, genus

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Genus of a closed 3D digital surface, after the |M3| .. |M6| table it is computed from.'

    def add_arguments(self, parser):
        parser.add_argument('image')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        g = genus(image)
        self.emit(*classify_neighbors(image).table())
        self.emit(g)

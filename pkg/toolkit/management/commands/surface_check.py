from helpers.verdicts import Verdict
from surfaces.genus import is_closed_surface

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Check that a 3D digital image is a closed digital surface.'

    def add_arguments(self, parser):
        parser.add_argument('image')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        if is_closed_surface(image):
            self.verdict(Verdict.success(), 'closed surface')
        else:
            self.verdict(Verdict.failure('not a closed surface'))

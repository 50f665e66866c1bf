from homotopy.formats import load_certificate
from planning.sections import verify_cat_witness
from planning.witnesses import load_witness

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Certify cat(X) <= l from a cover of X and one contraction file per part.'

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('cover')
        parser.add_argument('contractions', nargs='+', help='contraction of part i inside X, in part order')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        cover, _ = load_witness(options['cover'], image, image)
        paths = options['contractions']
        if len(paths) != len(cover):
            raise ValueError('{} contraction files for {} parts'.format(len(paths), len(cover)))
        certificates = [load_certificate(path, image.subimage(part), image) for path, part in zip(paths, cover.parts)]
        bound = verify_cat_witness(image, cover, certificates)
        self.verdict(bound.verdict, 'cat <= {}'.format(bound.value))

from surfaces.export import to_csv, to_obj

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Export an image as an OBJ mesh of unit cubes (or a CSV point list).'

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('--csv', action='store_true')
        parser.add_argument('--output', help='file to write instead of standard output')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        text = to_csv(image) if options['csv'] else to_obj(image)
        if options['output']:
            with open(options['output'], 'w') as fh:
                fh.write(text)
        else:
            self.stdout.write(text, ending='')

from grid.images import power
from planning.paths import Spider
from planning.sections import verify_section, verify_spider_section
from planning.witnesses import load_witness

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Verify the section rule of one part of a witness.'

    def add_arguments(self, parser):
        parser.add_argument('image')
        parser.add_argument('witness')
        parser.add_argument('--part', type=int, default=1)
        parser.add_argument('--n', type=int, default=2, help='factors of the base; rules with n != 2 are spiders')
        parser.add_argument('--mode', choices=('adjacent', 'connected'))

    def handle(self, *args, **options):
        image = self.image(options['image'])
        n, i = options['n'], options['part']
        cover, sections = load_witness(options['witness'], power(image, n), image)
        if not sections:
            raise ValueError('{} holds no rules'.format(options['witness']))
        if not 1 <= i <= len(cover):
            raise ValueError('part {} does not exist; the cover has {}'.format(i, len(cover)))
        part, rule = cover.parts[i - 1], sections[i - 1]
        if n == 2 and not any(isinstance(s, Spider) for s in rule.values()):
            verdict = verify_section(part, rule, image, options['mode'])
        else:
            verdict = verify_spider_section(part, rule, image, n, options['mode'])
        self.verdict(verdict, 'section over part {} ({} members) verified'.format(i, len(part)))

from planning.search import tc_is_one

from ..base import TopologyCommand


class Command(TopologyCommand):
    help = 'Decide whether TC(X) = 1: yes, no or unknown within the budget.'
    topology_options = ('budget', 'max_path_len')

    def add_arguments(self, parser):
        parser.add_argument('image')

    def handle(self, *args, **options):
        image = self.image(options['image'])
        decision = tc_is_one(image, budget=options['budget'], max_path_len=options['max_path_len'])
        self.emit(decision.answer, decision.reason)

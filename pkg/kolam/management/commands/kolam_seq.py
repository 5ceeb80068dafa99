from kolam.cli import KolamCommand
from kolam.sequence import generate_sequence, sequence_cycle_string


class Command(KolamCommand):
    help = "Print the generator cycle for m dots and n arms, e.g. 6→5→4→3→2→1→6."

    def add_arguments(self, parser):
        self.add_spec_arguments(parser)

    def handle(self, *args, **options):
        spec = self.spec_from(options)
        self.stdout.write(sequence_cycle_string(generate_sequence(spec)))

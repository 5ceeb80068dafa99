from kolam.cli import KolamCommand
from kolam.layout import build_matrix, dump_matrix_json, dump_matrix_text
from kolam.sequence import generate_sequence


class Command(KolamCommand):
    help = "Print the m x n dot matrix: one concentric layer per line, one arm per column."

    def add_arguments(self, parser):
        self.add_spec_arguments(parser)
        parser.add_argument("--json", action="store_true", help="Emit the JSON dump instead of text.")

    def handle(self, *args, **options):
        spec = self.spec_from(options)
        matrix = build_matrix(generate_sequence(spec), spec.n)
        if options["json"]:
            self.stdout.write(dump_matrix_json(matrix))
        else:
            self.stdout.write(dump_matrix_text(matrix), ending="")

from kolam.catalog import regrouped_rows, table_rows
from kolam.cli import KolamCommand


class Command(KolamCommand):
    help = (
        "Regenerate the published table of generator sequences.\n"
        "Rows keep the printed grouping of n values; --regroup groups them by the cycle they generate."
    )

    def add_arguments(self, parser):
        parser.add_argument("--regroup", action="store_true")

    def handle(self, *args, **options):
        rows = regrouped_rows() if options["regroup"] else table_rows()
        for row in rows:
            self.stdout.write(row.format())

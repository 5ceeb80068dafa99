from django.core.management.base import CommandError

from kolam.cli import EXIT_CHECK_FAILED, KolamCommand
from kolam.verification import FAULTS, run_checks


class Command(KolamCommand):
    help = "Check the matrix, path and Eulerian structure of a kolam; exit 0 only if every check passes."

    def add_arguments(self, parser):
        self.add_spec_arguments(parser)
        parser.add_argument("--inject-fault", choices=FAULTS, default=None, help="Test hook: corrupt the path first.")

    def handle(self, *args, **options):
        spec = self.spec_from(options)
        results = run_checks(spec, fault=options["inject_fault"])

        for result in results:
            style = self.style.SUCCESS if result.passed else self.style.ERROR
            self.stdout.write(style(result.format()))

        failed = [r for r in results if not r.passed]
        if failed:
            raise CommandError(f"{len(failed)} of {len(results)} checks failed", returncode=EXIT_CHECK_FAILED)
        self.stdout.write(self.style.SUCCESS(f"All {len(results)} checks passed for m={spec.m}, n={spec.n}."))

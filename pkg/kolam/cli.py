"""
Shared plumbing for the kolam management commands.

Exit codes:
    0   success
    1   a verification check failed (kolam_verify)
    2   domain validation (bad m/n, bulge, render settings, degenerate geometry)
    64  usage: malformed flags
    74  I/O failure
"""
from __future__ import annotations

import sys
from functools import partial

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from kolam.config import ResolvedOptions, resolve_options
from kolam.exceptions import GeometryError, RenderError, SpecError
from kolam.geometry import ConnectionStyle
from kolam.render import FillMode
from kolam.sequence import KolamSpec, make_spec


EXIT_CHECK_FAILED = 1
EXIT_VALIDATION = 2
EXIT_USAGE = 64
EXIT_IO = 74


def _usage_error(parser, message):
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {message}\n")
    raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)


class KolamCommand(BaseCommand):
    """
    Base class for kolam_* commands: maps domain errors to exit codes and
    reroutes argparse failures from exit 2 to 64.
    """

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = partial(_usage_error, parser)
        return parser

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except (SpecError, GeometryError, RenderError) as exc:
            raise CommandError(str(exc), returncode=EXIT_VALIDATION) from exc
        except OSError as exc:
            raise CommandError(f"I/O failure: {exc}", returncode=EXIT_IO) from exc

    # ------------------------------------------------------------------
    # argument groups
    # ------------------------------------------------------------------
    def add_spec_arguments(self, parser):
        parser.add_argument("-m", "--dots", type=int, required=True, help="Dots per arm (m).")
        parser.add_argument("-n", "--arms", type=int, required=True, help="Number of arms (n).")

    def add_style_arguments(self, parser):
        parser.add_argument(
            "--style",
            choices=[s.value for s in ConnectionStyle],
            default=None,
            help="Connection style (default from settings or config file).",
        )
        parser.add_argument("--bulge", default=None, help="Arc sagitta as a fraction of the chord, in (0, 1).")

    def add_render_arguments(self, parser):
        parser.add_argument("--config", default=None, help="key=value file with render defaults.")
        parser.add_argument("--canvas", dest="canvas_px", type=int, default=None, help="Canvas edge in px.")
        parser.add_argument("--margin", dest="margin_ratio", type=float, default=None)
        parser.add_argument("--stroke-width", dest="stroke_width_px", type=float, default=None)
        parser.add_argument("--hide-dots", dest="show_dots", action="store_const", const=False, default=None)
        parser.add_argument("--show-arms", dest="show_arms", action="store_const", const=True, default=None)
        parser.add_argument("--fill", dest="fill_mode", choices=[f.value for f in FillMode], default=None)
        parser.add_argument("--palette", default=None, help="Comma-separated hex colors.")

    # ------------------------------------------------------------------
    # option resolution
    # ------------------------------------------------------------------
    def resolve(self, options) -> ResolvedOptions:
        keys = ("canvas_px", "margin_ratio", "stroke_width_px", "show_dots", "show_arms",
                "fill_mode", "palette", "style", "bulge")
        overrides = {key: options.get(key) for key in keys}
        return resolve_options(options.get("config"), overrides)

    def spec_from(self, options, resolved: ResolvedOptions | None = None) -> KolamSpec:
        if resolved is None:
            return make_spec(options["dots"], options["arms"])
        return make_spec(options["dots"], options["arms"], resolved.style, resolved.bulge)

    @property
    def gallery_workers(self) -> int:
        return settings.KOLAM_GALLERY_WORKERS

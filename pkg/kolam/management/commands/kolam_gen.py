import logging
from pathlib import Path

from kolam.cli import KolamCommand
from kolam.geometry import make_strokes
from kolam.graph import build_graph, dump_graph_json
from kolam.layout import build_closed_path, build_matrix, dump_matrix_json, dump_path_json
from kolam.render import render_dot_grid, render_svg
from kolam.sequence import generate_sequence

logger = logging.getLogger(__name__)


class Command(KolamCommand):
    help = "Render one kolam as SVG, optionally with JSON dumps of its matrix, path and graph."

    def add_arguments(self, parser):
        self.add_spec_arguments(parser)
        self.add_style_arguments(parser)
        self.add_render_arguments(parser)
        parser.add_argument("-o", "--output", required=True, help="Where to write the SVG.")
        parser.add_argument("--emit-matrix", default=None, metavar="PATH")
        parser.add_argument("--emit-path", default=None, metavar="PATH")
        parser.add_argument("--emit-graph", default=None, metavar="PATH")
        parser.add_argument("--emit-dot-grid", default=None, metavar="PATH", help="Also write the bare dot grid SVG.")

    def handle(self, *args, **options):
        resolved = self.resolve(options)
        spec = self.spec_from(options, resolved)

        path = build_closed_path(spec)
        matrix = build_matrix(generate_sequence(spec), spec.n)
        strokes = make_strokes(path, spec.style, spec.bulge)
        document = render_svg(spec, strokes, matrix, resolved.render)

        output = Path(options["output"])
        output.write_bytes(document)
        self.stdout.write(self.style.SUCCESS(f"Wrote {output} ({len(strokes)} strokes, {spec.style.value})"))

        sidecars = (
            (options["emit_matrix"], lambda: dump_matrix_json(matrix)),
            (options["emit_path"], lambda: dump_path_json(path)),
            (options["emit_graph"], lambda: dump_graph_json(build_graph(path))),
        )
        for target, dump in sidecars:
            if target:
                Path(target).write_text(dump() + "\n", encoding="utf-8")
                logger.info("wrote %s", target)

        if options["emit_dot_grid"]:
            Path(options["emit_dot_grid"]).write_bytes(render_dot_grid(spec, resolved.render))
            logger.info("wrote %s", options["emit_dot_grid"])

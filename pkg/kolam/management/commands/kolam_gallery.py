from kolam.catalog import GALLERY_PRESETS
from kolam.cli import KolamCommand
from kolam.gallery import MANIFEST_NAME, generate_gallery


class Command(KolamCommand):
    help = (
        "Render a published figure set into a directory, plus manifest.json with sha256 checksums.\n"
        "Presets: paper-even (m = 2..12, n coprime up to 13), paper-m20 (m = 20), paper-styles ((4, 5) in all styles)."
    )

    def add_arguments(self, parser):
        parser.add_argument("out_dir", help="Output directory; created if missing.")
        parser.add_argument("--preset", choices=GALLERY_PRESETS, default="paper-even")
        parser.add_argument("--workers", type=int, default=None, help="Size of the rendering pool.")
        self.add_style_arguments(parser)
        self.add_render_arguments(parser)

    def handle(self, *args, **options):
        resolved = self.resolve(options)
        workers = options["workers"] or self.gallery_workers
        files = generate_gallery(
            options["out_dir"],
            options["preset"],
            resolved.style,
            resolved.bulge,
            resolved.render,
            workers=workers,
        )
        self.stdout.write(self.style.SUCCESS(
            f"Rendered {len(files)} files for {options['preset']} into {options['out_dir']} ({MANIFEST_NAME} updated)"
        ))

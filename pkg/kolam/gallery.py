"""
Batch rendering of figure sets.

Each entry is rendered independently on a bounded joblib thread pool; the
manifest is written once, after every worker has finished, in preset order.
"""
from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path

from joblib import Parallel, delayed

from kolam.catalog import GalleryEntry, gallery_preset
from kolam.geometry import make_strokes
from kolam.layout import build_closed_path, build_matrix
from kolam.render import RenderConfig, render_svg
from kolam.sequence import generate_sequence, make_spec

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


@dataclass(frozen=True)
class GalleryFile:
    name: str
    sha256: str


def render_entry(entry: GalleryEntry, bulge, cfg: RenderConfig) -> bytes:
    spec = make_spec(entry.m, entry.n, entry.style, bulge)
    path = build_closed_path(spec)
    strokes = make_strokes(path, spec.style, spec.bulge)
    matrix = build_matrix(generate_sequence(spec), spec.n)
    return render_svg(spec, strokes, matrix, cfg)


def _write_entry(out_dir: Path, entry: GalleryEntry, bulge, cfg: RenderConfig) -> GalleryFile:
    document = render_entry(entry, bulge, cfg)
    target = out_dir / entry.filename
    target.write_bytes(document)
    logger.info("wrote %s (%d bytes)", target, len(document))
    return GalleryFile(name=entry.filename, sha256=hashlib.sha256(document).hexdigest())


def write_manifest(out_dir: Path, files: list[GalleryFile]) -> Path:
    payload = {"files": [{"name": f.name, "sha256": f.sha256} for f in files]}
    target = out_dir / MANIFEST_NAME
    target.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return target


def generate_gallery(out_dir, preset: str, style, bulge, cfg: RenderConfig, workers: int = 4) -> list[GalleryFile]:
    """
    Render every entry of ``preset`` into ``out_dir`` (created if missing) and
    write the checksum manifest. Returns the files in preset order.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    entries = gallery_preset(preset, style)

    files = Parallel(n_jobs=max(1, workers), prefer="threads")(
        delayed(_write_entry)(out_dir, entry, bulge, cfg) for entry in entries
    )
    manifest = write_manifest(out_dir, files)
    logger.info("gallery %s: %d files, manifest at %s", preset, len(files), manifest)
    return files

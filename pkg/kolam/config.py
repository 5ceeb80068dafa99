"""
Render configuration.

Three layers, later ones winning: the built-ins in ``settings.KOLAM_RENDER``
and ``settings.KOLAM_STYLE_DEFAULTS``, an optional key=value file (read with
python-dotenv), then explicit overrides from command-line flags.

Example file::

    canvas_px=1200
    show_arms=true
    palette=#1d3557,#e63946
    style=convex
"""
from __future__ import annotations

import errno
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Optional

from django.conf import settings
from dotenv import dotenv_values

from kolam.exceptions import RenderConfigError
from kolam.geometry import ConnectionStyle
from kolam.render import FillMode, RenderConfig

logger = logging.getLogger(__name__)

TRUE_WORDS = {"1", "true", "yes", "on"}
FALSE_WORDS = {"0", "false", "no", "off"}


def parse_bool(value: str) -> bool:
    word = value.strip().lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ValueError(f"expected a boolean, got {value!r}")


def parse_palette(value: str) -> tuple:
    return tuple(color.strip() for color in value.split(",") if color.strip())


RENDER_FIELDS = {
    "canvas_px": int,
    "margin_ratio": float,
    "show_dots": parse_bool,
    "show_arms": parse_bool,
    "stroke_width_px": float,
    "dot_radius_px": float,
    "fill_mode": FillMode,
    "palette": parse_palette,
    "dot_color": str.strip,
}

STYLE_FIELDS = {
    "style": ConnectionStyle,
    "bulge": Fraction,
}


@dataclass(frozen=True)
class ResolvedOptions:
    render: RenderConfig
    style: ConnectionStyle
    bulge: Fraction


def _parse(key: str, value: Any, source: str):
    parser = RENDER_FIELDS.get(key) or STYLE_FIELDS.get(key)
    if parser is None:
        raise RenderConfigError(f"unknown setting {key!r} in {source}")
    if not isinstance(value, str):
        return value
    try:
        return parser(value.strip())
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise RenderConfigError(f"bad value {value!r} for {key!r} in {source}") from exc


def read_config_file(path) -> dict:
    """Parse a key=value config file. A missing file is an OSError, not a config error."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(errno.ENOENT, "render config file not found", str(path))
    values = {}
    for key, raw in dotenv_values(path).items():
        key = key.strip().lower()
        if raw is None:
            raise RenderConfigError(f"setting {key!r} in {path} has no value")
        values[key] = _parse(key, raw, str(path))
    logger.debug("read %d settings from %s", len(values), path)
    return values


def resolve_options(
    config_path: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> ResolvedOptions:
    """
    Merge built-ins, the config file and overrides. ``None`` overrides are
    ignored so argparse defaults never shadow the file.
    """
    merged: dict = {}
    for key, value in {**settings.KOLAM_RENDER, **settings.KOLAM_STYLE_DEFAULTS}.items():
        merged[key] = _parse(key, value, "settings")

    config_path = config_path or settings.KOLAM_CONFIG
    if config_path:
        merged.update(read_config_file(config_path))

    for key, value in (overrides or {}).items():
        if value is not None:
            merged[key] = _parse(key, value, "command line")

    style = ConnectionStyle(merged.pop("style"))
    bulge = Fraction(merged.pop("bulge"))
    return ResolvedOptions(render=RenderConfig(**merged), style=style, bulge=bulge)

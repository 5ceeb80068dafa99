"""
Published configurations: the generator-sequence table and the figure sets.

``PRINTED_TABLE`` keeps the n groupings exactly as printed. Two of them do not
match their cycle: under m = 4 the printed table files n = 13 with
4→3→2→1 and n = 11 with 4→1→2→3, while 13 ≡ 1 and 11 ≡ 3 (mod 4).
``table_rows`` reproduces the printed layout (each cycle generated from the
row's first n) and logs every such mismatch; ``regrouped_rows`` groups the
same n values by the cycle they actually produce.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import pandas as pd

from kolam.geometry import ConnectionStyle
from kolam.sequence import generate_sequence, make_spec, sequence_cycle_string

logger = logging.getLogger(__name__)

PRINTED_TABLE = (
    (2, (3, 5, 7, 9, 11, 13)),
    (4, (3, 7, 13)),
    (4, (5, 9, 11)),
    (6, (5, 11)),
    (6, (7, 13)),
    (8, (3, 11)),
    (8, (5, 13)),
    (8, (7,)),
    (8, (9,)),
    (10, (3, 13)),
    (10, (7,)),
    (10, (9,)),
    (10, (11,)),
    (12, (5,)),
    (12, (7,)),
    (12, (11,)),
    (12, (13,)),
)

# (m, [n, ...]) per figure grid
EVEN_FIGURES = (
    (2, (3, 5, 7, 9, 11, 13)),
    (4, (3, 5, 7, 9, 11, 13)),
    (6, (5, 7, 11, 13)),
    (8, (3, 5, 7, 9, 11, 13)),
    (10, (3, 7, 9, 11, 13)),
    (12, (5, 7, 11, 13)),
)

M20_FIGURES = ((20, (7, 13, 19, 23, 27, 91)),)


@dataclass(frozen=True)
class GalleryEntry:
    m: int
    n: int
    style: ConnectionStyle

    @property
    def filename(self) -> str:
        return f"kolam_m{self.m}_n{self.n}_{self.style.value}.svg"


@dataclass(frozen=True)
class TableRow:
    m: int
    arms: tuple
    cycle: str

    def format(self) -> str:
        return f"{self.m}\t{', '.join(str(n) for n in self.arms)}\t{self.cycle}"


def cycle_for(m: int, n: int) -> str:
    return sequence_cycle_string(generate_sequence(make_spec(m, n)))


def table_rows() -> list[TableRow]:
    rows = []
    for m, arms in PRINTED_TABLE:
        cycle = cycle_for(m, arms[0])
        for n in arms[1:]:
            actual = cycle_for(m, n)
            if actual != cycle:
                logger.warning("printed table lists n=%d under %s but it generates %s", n, cycle, actual)
        rows.append(TableRow(m=m, arms=arms, cycle=cycle))
    return rows


def catalog_frame() -> pd.DataFrame:
    """One row per (m, n) listed in the printed table, with its generated cycle."""
    records = [
        {"m": m, "n": n, "cycle": cycle_for(m, n)}
        for m, arms in PRINTED_TABLE
        for n in arms
    ]
    return pd.DataFrame.from_records(records, columns=["m", "n", "cycle"])


def regrouped_rows() -> list[TableRow]:
    frame = catalog_frame().sort_values(["m", "n"], kind="stable")
    grouped = frame.groupby(["m", "cycle"], sort=False)["n"].agg(tuple)
    rows = [
        TableRow(m=int(m), arms=tuple(int(n) for n in arms), cycle=cycle)
        for (m, cycle), arms in grouped.items()
    ]
    return sorted(rows, key=lambda row: (row.m, row.arms[0]))


def gallery_preset(name: str, style: ConnectionStyle = ConnectionStyle.STRAIGHT) -> list[GalleryEntry]:
    style = ConnectionStyle(style)
    if name == "paper-even":
        groups = EVEN_FIGURES
    elif name == "paper-m20":
        groups = M20_FIGURES
    elif name == "paper-styles":
        styles = (ConnectionStyle.CONVEX_ARC, ConnectionStyle.STRAIGHT, ConnectionStyle.CONCAVE_ARC)
        return [GalleryEntry(4, 5, s) for s in styles]
    else:
        raise KeyError(name)
    return [GalleryEntry(m, n, style) for m, arms in groups for n in arms]


GALLERY_PRESETS = ("paper-even", "paper-m20", "paper-styles")

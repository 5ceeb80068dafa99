"""
Structural checks run by ``kolam_verify``.

Each check returns a CheckResult instead of raising, so a report always lists
every check. Faults can be injected into the path to confirm the checks bite.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from kolam.exceptions import SpecError
from kolam.graph import build_graph, circuit_vertices, rotate_edges, verify_eulerian
from kolam.layout import (
    ClosedPath,
    build_closed_path,
    build_matrix,
    fill_order,
    matrix_to_path_consistency,
    path_follows_matrix,
)
from kolam.sequence import KolamSpec, generate_sequence

logger = logging.getLogger(__name__)

FAULTS = ("shuffle-path", "perturb-radius")

FAULT_SEED = 20250101


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def format(self) -> str:
        line = f"{'PASS' if self.passed else 'FAIL'}  {self.name}"
        return f"{line}: {self.detail}" if self.detail else line


def inject_fault(path: ClosedPath, fault: str) -> ClosedPath:
    dots = list(path.dots)
    if fault == "shuffle-path":
        order = np.random.default_rng(FAULT_SEED).permutation(len(dots))
        if len(dots) > 1 and (order == np.arange(len(dots))).all():
            order = np.roll(order, 1)
        dots = [dots[i] for i in order]
    elif fault == "perturb-radius":
        if path.m < 2:
            raise SpecError("perturb-radius needs at least two dots per arm")
        first = dots[0]
        dots[0] = replace(first, radius=first.radius % path.m + 1)
    else:
        raise ValueError(f"unknown fault {fault!r}")
    return ClosedPath(points=tuple(dots + dots[:1]), m=path.m, n=path.n)


def run_checks(spec: KolamSpec, fault: Optional[str] = None) -> list[CheckResult]:
    m, n = spec.m, spec.n
    seq = generate_sequence(spec)
    matrix = build_matrix(seq, n)
    path = build_closed_path(spec)
    if fault:
        logger.info("injecting fault %s into %s", fault, spec)
        path = inject_fault(path, fault)
    radii = list(range(1, m + 1))
    results = []

    results.append(CheckResult("sequence is a permutation of 1..m", sorted(seq) == radii))

    bad_columns = [j for j in range(n) if sorted(matrix.column(j)) != radii]
    results.append(CheckResult(
        "every arm holds each radius once",
        not bad_columns,
        f"columns {bad_columns}" if bad_columns else "",
    ))

    writes = Counter((i, j) for _, i, j, _ in fill_order(seq, n))
    results.append(CheckResult(
        "unique fill",
        len(writes) == m * n and set(writes.values()) == {1},
    ))

    shift_ok = all(
        matrix.entries[i + 1, j] == seq[(seq.index_of(int(matrix.entries[i, j])) + n) % m]
        for i in range(m - 1)
        for j in range(n)
    )
    results.append(CheckResult("row i+1 advances row i by n in the sequence", shift_ok))

    results.append(CheckResult("path closes on its first point", path.is_closed))
    distinct = len({p.key for p in path.dots}) == len(path.dots) == m * n
    results.append(CheckResult("path visits m*n distinct dots", distinct))

    results.append(CheckResult(
        "consistency: matrix and path hold the same dots",
        matrix_to_path_consistency(matrix, path),
    ))
    results.append(CheckResult(
        "consistency: path follows the matrix row by row",
        path_follows_matrix(matrix, path),
    ))

    graph = build_graph(path)
    report = verify_eulerian(graph)
    results.append(CheckResult(
        "in-degree equals out-degree",
        report.degree_balanced,
        f"{len(report.unbalanced)} unbalanced dots" if report.unbalanced else "",
    ))
    results.append(CheckResult(
        "single strongly connected component",
        report.connected,
        "" if report.connected else f"{report.component_count} components",
    ))
    circuit_ok = (
        report.circuit is not None
        and len(report.circuit) == m * n
        and Counter(report.circuit) == Counter(graph.edges)
        and circuit_vertices(report.circuit) == [p.key for p in path.points]
    )
    results.append(CheckResult("Eulerian circuit retraces the path", circuit_ok))

    results.append(CheckResult(
        f"{n}-fold rotational symmetry",
        rotate_edges(graph, n) == set(graph.edges),
    ))
    return results

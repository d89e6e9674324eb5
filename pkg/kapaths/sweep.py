# sweep.py
"""
Barridos de verificación: expansión de la rejilla en celdas independientes,
filtro por presupuesto y evaluación en serie o en un pool de procesos.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from kapaths.enumeration import binomial, count_super
from kapaths.identities import CLAIMS, CellKind, IdentityReport
from kapaths.path_core import INFINITY, PathParams, Width
from monitoring import verify_metrics

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class GridCell:
    """Una celda de la rejilla; k y a valen None cuando la identidad no los usa"""
    claim: str
    n: int
    k: Optional[int] = None
    a: Optional[Width] = None

    @property
    def params(self) -> PathParams:
        return PathParams(self.k, self.a)

    @property
    def sort_key(self) -> Tuple:
        a_key = (1, 0) if self.a == INFINITY else (0, self.a or 0)
        return (self.claim, self.n, self.k or 0, a_key)

    def __str__(self) -> str:
        parts = [f"{self.claim} n={self.n}"]
        if self.k is not None:
            parts.append(f"k={self.k}")
        if self.a is not None:
            parts.append(f"a={'inf' if self.a == INFINITY else self.a}")
        return " ".join(parts)


def expand_grid(claims: Iterable[str], k_values: Sequence[int], a_values: Sequence[Width],
                n_values: Sequence[int]) -> List[GridCell]:
    """Celdas en orden determinista; las identidades que ignoran k o a no se repiten"""
    cells = {}
    for claim in claims:
        spec = CLAIMS[claim]
        for n in n_values:
            if n < spec.min_n:
                continue
            if spec.kind is CellKind.NKA:
                for k in k_values:
                    for a in a_values:
                        cells[GridCell(claim, n, k, a)] = None
            elif spec.kind is CellKind.NK:
                for k in k_values:
                    cells[GridCell(claim, n, k)] = None
            else:
                cells[GridCell(claim, n)] = None
    return list(cells)


def cell_size(cell: GridCell) -> int:
    """Estimación del número de palabras que recorre la celda"""
    kind = CLAIMS[cell.claim].kind
    if kind is CellKind.NKA:
        return count_super(cell.n, cell.params)
    if kind is CellKind.NK:
        return binomial((cell.k + 1) * cell.n, cell.n)
    if cell.claim == "special":
        return count_super(cell.n, PathParams(1, 1))
    return binomial(2 * cell.n, cell.n)


@dataclass
class CellOutcome:
    cell: GridCell
    reports: List[IdentityReport]
    seconds: float


def evaluate_cell(cell: GridCell, check: bool = True) -> CellOutcome:
    """Evalúa una celda; función de módulo para poder enviarla al pool"""
    spec = CLAIMS[cell.claim]
    started = time.perf_counter()
    if spec.kind is CellKind.NKA:
        if spec.checked:
            reports = spec.runner(cell.n, cell.params, check=check)
        else:
            reports = spec.runner(cell.n, cell.params)
    elif spec.kind is CellKind.NK:
        reports = spec.runner(cell.n, cell.k)
    else:
        reports = spec.runner(cell.n)
    return CellOutcome(cell, list(reports), time.perf_counter() - started)


@dataclass
class SweepResult:
    reports: List[IdentityReport] = field(default_factory=list)
    skipped: List[GridCell] = field(default_factory=list)

    @property
    def failed(self) -> List[IdentityReport]:
        return [report for report in self.reports if not report.verified]

    @property
    def all_verified(self) -> bool:
        return not self.failed


def _record(outcome: CellOutcome, result: SweepResult):
    verify_metrics.observe_duration(outcome.seconds)
    for report in outcome.reports:
        if report.verified:
            verify_metrics.record_verified(report.claim.value)
        else:
            verify_metrics.record_failed(report.claim.value)
            logger.error("Identidad fallida: %s", report.to_json())
    logger.debug("Celda %s evaluada en %.3fs", outcome.cell, outcome.seconds)
    result.reports.extend(outcome.reports)


def run_sweep(cells: Sequence[GridCell], workers: int = 1, budget: int = DEFAULT_BUDGET,
              check: bool = True) -> SweepResult:
    """Evalúa las celdas dentro del presupuesto; los reportes salen ordenados por (claim, n, k, a)"""
    result = SweepResult()
    feasible: List[GridCell] = []
    for cell in cells:
        size = cell_size(cell)
        if size > budget:
            logger.warning("Celda %s omitida: %s palabras superan el presupuesto %s", cell, size, budget)
            verify_metrics.record_skipped(cell.claim)
            result.skipped.append(cell)
        else:
            feasible.append(cell)

    logger.info("Barrido: %d celdas (%d omitidas), %d worker(s)",
                len(feasible), len(result.skipped), workers)

    if workers > 1 and len(feasible) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(evaluate_cell, cell, check) for cell in feasible]
            for future in as_completed(futures):
                _record(future.result(), result)
    else:
        for cell in feasible:
            _record(evaluate_cell(cell, check), result)

    result.reports.sort(key=lambda report: report.sort_key)
    logger.info("Barrido terminado: %d reportes, %d fallidos", len(result.reports), len(result.failed))
    return result

"""Hooks opcionales de métricas para los barridos de verificación."""

try:
    from prometheus_client import Counter, Histogram, start_http_server
except ImportError:  # pragma: no cover
    Counter = Histogram = start_http_server = None  # type: ignore

CLAIMS_VERIFIED = Counter("kapath_claims_verified_total", "Celdas verificadas", ["claim"]) if Counter else None
CLAIMS_FAILED = Counter("kapath_claims_failed_total", "Celdas con identidad fallida", ["claim"]) if Counter else None
CELLS_SKIPPED = Counter("kapath_cells_skipped_total", "Celdas omitidas por presupuesto", ["claim"]) if Counter else None
CELL_DURATION = Histogram("kapath_cell_duration_seconds", "Duración de la evaluación de una celda") if Histogram else None


def record_verified(claim: str):
    if CLAIMS_VERIFIED:
        CLAIMS_VERIFIED.labels(claim=claim).inc()


def record_failed(claim: str):
    if CLAIMS_FAILED:
        CLAIMS_FAILED.labels(claim=claim).inc()


def record_skipped(claim: str):
    if CELLS_SKIPPED:
        CELLS_SKIPPED.labels(claim=claim).inc()


def observe_duration(seconds: float):
    if CELL_DURATION:
        CELL_DURATION.observe(seconds)


def start_metrics_server(port: int) -> bool:
    """Expone /metrics; devuelve False si prometheus_client no está instalado"""
    if start_http_server is None:
        return False
    start_http_server(port)
    return True

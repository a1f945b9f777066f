"""
Computation metrics.

Counters live in a dedicated registry so library use never touches the global one; the CLI
writes them in the Prometheus text format with ``--metrics-file``.
"""

from pathlib import Path

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

REGISTRY = CollectorRegistry()

SIMPLICES_BUILT = Counter(
    "bcom_simplices_built",
    "Nondegenerate simplices enumerated, by simplicial set kind",
    ["kind"],
    registry=REGISTRY,
)
ELIMINATIONS = Counter(
    "bcom_eliminations",
    "Boundary matrices reduced over F_ell, by elimination path",
    ["path"],
    registry=REGISTRY,
)
ELIMINATION_SECONDS = Histogram(
    "bcom_elimination_seconds",
    "Wall time of a single F_ell elimination",
    registry=REGISTRY,
)


def write_metrics(path: str | Path) -> None:
    """Write all counters to a Prometheus text file."""
    write_to_textfile(str(path), REGISTRY)

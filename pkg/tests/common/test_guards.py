"""
Unit tests for the ResourceGuard class and the metrics registry.
"""

from pathlib import Path

import pytest

from src.common.config import Caps
from src.common.exceptions import EXIT_RESOURCE_CAP, ResourceCapError
from src.common.guards import ResourceGuard
from src.common.metrics import SIMPLICES_BUILT, write_metrics


class TestResourceGuard:
    """Test suite for the ResourceGuard class."""

    def setup_method(self) -> None:
        """Set up test environment before each test method."""
        self.guard = ResourceGuard(
            Caps(
                max_group_order=10,
                max_enumeration_order=8,
                max_subgroups=3,
                max_simplices=100,
                dense_elimination_limit=50,
                dense_cell_limit=1000,
                quotient_max_degree=4,
            )
        )

    def test_within_caps(self) -> None:
        """Sizes at the cap pass."""
        self.guard.check_group_order(10)
        self.guard.check_enumeration(8)
        self.guard.check_subgroups(3)
        self.guard.check_simplices(100)
        self.guard.check_quotient_degree(4)

    def test_group_order_trip(self) -> None:
        """An oversized group raises with the cap in the details."""
        with pytest.raises(ResourceCapError) as excinfo:
            self.guard.check_group_order(11, "S4")
        assert excinfo.value.exit_code == EXIT_RESOURCE_CAP  # nosec: B101 # pytest assertion
        assert excinfo.value.details == {"cap": "max_group_order", "limit": 10, "size": 11}  # nosec
        assert "S4" in str(excinfo.value)  # nosec: B101 # pytest assertion

    def test_other_trips(self) -> None:
        """Every check raises past its cap."""
        with pytest.raises(ResourceCapError):
            self.guard.check_enumeration(9)
        with pytest.raises(ResourceCapError):
            self.guard.check_subgroups(4)
        with pytest.raises(ResourceCapError):
            self.guard.check_simplices(101)
        with pytest.raises(ResourceCapError):
            self.guard.check_quotient_degree(5)

    def test_trip_logs_warning(self, caplog: pytest.LogCaptureFixture) -> None:
        """A trip is logged before raising."""
        with pytest.raises(ResourceCapError):
            self.guard.check_simplices(500)
        assert "ResourceGuard triggered" in caplog.text  # nosec: B101 # pytest assertion

    def test_use_dense(self) -> None:
        """Dense elimination needs both the column and the cell limit."""
        assert self.guard.use_dense(10, 50) is True  # nosec: B101 # pytest assertion
        assert self.guard.use_dense(10, 51) is False  # nosec: B101 # pytest assertion
        assert self.guard.use_dense(30, 40) is False  # nosec: B101 # pytest assertion


class TestMetrics:
    """Test suite for the metrics file."""

    def test_write_metrics(self, tmp_path: Path) -> None:
        """Counters are written in the Prometheus text format."""
        SIMPLICES_BUILT.labels(kind="test").inc(3)
        path = tmp_path / "metrics.prom"
        write_metrics(path)
        text = path.read_text()
        assert "bcom_simplices_built_total" in text  # nosec: B101 # pytest assertion
        assert 'kind="test"' in text  # nosec: B101 # pytest assertion

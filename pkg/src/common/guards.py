"""
ResourceGuard module.

This module provides the ResourceGuard class that keeps enumeration and elimination at
desk scale.
"""

import logging

from src.common.config import Caps
from src.common.exceptions import ResourceCapError

logger = logging.getLogger("bcom")


class ResourceGuard:
    """Check computation sizes against the configured caps."""

    def __init__(self, caps: Caps | None = None) -> None:
        """
        Initialize the ResourceGuard.

        Args:
            caps: Caps to enforce (default: defaults plus environment overrides)
        """
        self.caps = caps if caps is not None else Caps.from_env()

    def _trip(self, cap: str, limit: int, size: int, what: str) -> None:
        logger.warning(f"ResourceGuard triggered: {what} needs {size} but {cap} is {limit}")
        raise ResourceCapError(
            f"{what} exceeds {cap}={limit} (requested {size})",
            details={"cap": cap, "limit": limit, "size": size},
        )

    def check_group_order(self, order: int, what: str = "group") -> None:
        """
        Check that a group is small enough to tabulate.

        Args:
            order: Group order
            what: Description for the error message
        """
        if order > self.caps.max_group_order:
            self._trip("max_group_order", self.caps.max_group_order, order, what)

    def check_enumeration(self, order: int, what: str = "subgroup enumeration") -> None:
        """Check that a group is small enough for full subgroup enumeration."""
        if order > self.caps.max_enumeration_order:
            self._trip("max_enumeration_order", self.caps.max_enumeration_order, order, what)

    def check_subgroups(self, count: int) -> None:
        """Check the number of subgroups collected so far."""
        if count > self.caps.max_subgroups:
            self._trip("max_subgroups", self.caps.max_subgroups, count, "subgroup collection")

    def check_simplices(self, count: int, what: str = "simplex enumeration") -> None:
        """Check the number of simplices produced so far."""
        if count > self.caps.max_simplices:
            self._trip("max_simplices", self.caps.max_simplices, count, what)

    def check_quotient_degree(self, degree: int) -> None:
        """Check the truncation degree requested for quotient computations."""
        if degree > self.caps.quotient_max_degree:
            self._trip("quotient_max_degree", self.caps.quotient_max_degree, degree, "quotient")

    def use_dense(self, rows: int, cols: int) -> bool:
        """Return True when a matrix is small enough for dense elimination."""
        caps = self.caps
        return cols <= caps.dense_elimination_limit and rows * cols <= caps.dense_cell_limit


def default_guard() -> ResourceGuard:
    """Guard built from defaults and environment overrides."""
    return ResourceGuard(Caps.from_env())

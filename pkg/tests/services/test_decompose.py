"""
Tests for the decompose and transfer services.
"""

import pytest

from src.core.bcom import TauSpec
from src.core.groups.builtins import builtin_group
from src.services.decompose import decompose, transfer_check


class TestDecompose:
    """Test suite for decompose."""

    def test_s3(self) -> None:
        """Five abelian subgroups; the assembly map is an equivalence."""
        report = decompose(builtin_group("S3"), TauSpec.z(), 2, 1)
        assert (report.objects, report.arrows) == (5, 4)  # nosec: B101 # pytest assertion
        assert report.hocolim_betti == report.direct_betti == [1, 3]  # nosec: B101
        assert report.iso  # nosec: B101 # pytest assertion
        assert report.tau == "z"  # nosec: B101 # pytest assertion

    def test_report_carries_diagram(self) -> None:
        """The report embeds the diagram's shape and simplex counts."""
        report = decompose(builtin_group("S3"), TauSpec.z(), 2, 1)
        assert len(report.diagram.objects) == report.objects  # nosec: B101
        assert len(report.diagram.arrows) == report.arrows  # nosec: B101 # pytest assertion
        assert set(report.diagram.values) == set(report.diagram.objects)  # nosec: B101
        assert "diagram" in report.model_dump()  # nosec: B101 # pytest assertion

    @pytest.mark.parametrize("collection,objects,arrows", [("all", 5, 7), ("center", 4, 3)])
    def test_q8_collections(self, collection: str, objects: int, arrows: int) -> None:
        """Both cofinal collections of Q8 give the same answer."""
        report = decompose(builtin_group("Q8"), TauSpec.z(), 2, 1, collection)  # type: ignore
        assert (report.objects, report.arrows) == (objects, arrows)  # nosec: B101
        assert report.iso  # nosec: B101 # pytest assertion

    def test_finite_tau(self) -> None:
        """The decomposition holds for tau = Z/2 as well."""
        report = decompose(builtin_group("S3"), TauSpec.zmod(2), 2, 2)
        assert report.direct_betti == [1, 3, 3]  # nosec: B101 # pytest assertion
        assert report.iso  # nosec: B101 # pytest assertion


class TestTransferCheck:
    """Test suite for transfer_check."""

    def test_s3(self) -> None:
        """Three classes, five chains, consistent orbits."""
        report = transfer_check(builtin_group("S3"), TauSpec.z(), 2, 1)
        assert (report.classes, report.chains) == (3, 5)  # nosec: B101 # pytest assertion
        assert report.agreement  # nosec: B101 # pytest assertion
        assert report.orbits_consistent  # nosec: B101 # pytest assertion

    def test_q8(self) -> None:
        """All subgroups of Q8 are normal, so the collapse changes nothing."""
        report = transfer_check(builtin_group("Q8"), TauSpec.z(), 2, 1)
        assert report.classes == 5  # nosec: B101 # pytest assertion
        assert report.agreement  # nosec: B101 # pytest assertion
        assert report.orbits_consistent  # nosec: B101 # pytest assertion

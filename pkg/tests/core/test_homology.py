"""
Unit tests for F_l linear algebra, normalized chains and homology.
"""

import numpy as np
import pytest

from src.common.config import Caps
from src.common.exceptions import SimplicialError, SpecError
from src.common.guards import ResourceGuard
from src.core.bcom import TauSpec, build_bcom, inclusion_map
from src.core.groups.builtins import builtin_group, cyclic, symmetric
from src.core.simplicial.chains import normalized_chains
from src.core.simplicial.homology import (
    BettiTable,
    betti,
    homology_basis,
    induced_on_homology,
    path_components,
)
from src.core.simplicial.linalg import dense_rank, rank_mod, reduce_columns, to_dense
from src.core.simplicial.nerve import nerve
from src.core.simplicial.simplicial_set import CoproductSimplicialSet, identity_map


class TestLinalg:
    """Test suite for rank computations over F_l."""

    def test_dense_rank(self) -> None:
        """Ranks depend on the characteristic."""
        matrix = np.array([[1, 1], [1, -1]])
        assert dense_rank(matrix, 2) == 1  # nosec: B101 # pytest assertion
        assert dense_rank(matrix, 3) == 2  # nosec: B101 # pytest assertion
        assert dense_rank(np.zeros((2, 3), dtype=np.int64), 5) == 0  # nosec: B101

    def test_reduce_columns(self) -> None:
        """Lowest-one reduction with tracked transforms."""
        columns = [{0: 1, 1: 1}, {0: 1, 1: 1}, {2: 1}]
        reduction = reduce_columns(columns, 2, track=True)
        assert reduction.rank == 2  # nosec: B101 # pytest assertion
        assert reduction.zero_columns() == [1]  # nosec: B101 # pytest assertion
        assert reduction.pivots == {1: 0, 2: 2}  # nosec: B101 # pytest assertion
        assert reduction.transforms is not None  # nosec: B101 # pytest assertion
        assert reduction.transforms[1] == {0: 1, 1: 1}  # nosec: B101 # V_1 = e_0 + e_1

    def test_sparse_and_dense_agree(self) -> None:
        """rank_mod gives the same answer on both paths."""
        columns = [{0: 1, 2: 2}, {1: 1}, {0: 2, 1: 1, 2: 4}, {}]
        dense = ResourceGuard(Caps())
        sparse = ResourceGuard(Caps(dense_elimination_limit=1))
        assert rank_mod(columns, 3, 5, dense) == rank_mod(columns, 3, 5, sparse)  # nosec: B101
        assert rank_mod(columns, 3, 5, sparse) == 2  # nosec: B101 # pytest assertion
        assert to_dense(columns, 3)[:, 0].tolist() == [1, 0, 2]  # nosec: B101
        assert rank_mod([], 0, 5) == 0  # nosec: B101 # pytest assertion


class TestNormalizedChains:
    """Test suite for the normalized chain complex."""

    def test_bases_are_nondegenerate(self) -> None:
        """Bases list nondegenerate simplices through D + 1."""
        chains = normalized_chains(build_bcom(symmetric(3), TauSpec.z(), 2), 2, 2)
        assert chains.top == 3  # nosec: B101 # pytest assertion
        assert chains.dims == [1, 5, 7, 11]  # nosec: B101 # pytest assertion
        assert chains.vector(1, (0,)) == {}  # nosec: B101 # degenerate
        assert chains.vector(1, (1,)) == {0: 1}  # nosec: B101 # pytest assertion

    def test_boundary_of_pair(self) -> None:
        """d(a, b) = (b) - (ab) + (a)."""
        chains = normalized_chains(build_bcom(cyclic(3), TauSpec.z(), 1), 3, 1)
        column = chains.boundaries[2][chains.index(2, (1, 1))]
        # (1) - (2) + (1)
        one, two = chains.index(1, (1,)), chains.index(1, (2,))
        assert column == {one: 2, two: 2}  # nosec: B101 # pytest assertion

    def test_errors(self) -> None:
        """Shallow truncations and composite ell are rejected."""
        space = build_bcom(cyclic(2), TauSpec.z(), 1)
        with pytest.raises(SimplicialError):
            normalized_chains(space, 2, 3)
        with pytest.raises(SpecError):
            normalized_chains(space, 4, 1)


class TestBetti:
    """Test suite for Betti tables."""

    def test_cyclic_two(self) -> None:
        """BZ/2 has one class in every degree mod 2 and none mod 3."""
        space = build_bcom(cyclic(2), TauSpec.z(), 4)
        assert betti(space, 2, 4).dims == [1, 1, 1, 1, 1]  # nosec: B101
        assert betti(space, 3, 4).dims == [1, 0, 0, 0, 0]  # nosec: B101

    def test_coprime_vanishing(self) -> None:
        """BZ/3 is F_2-acyclic."""
        assert betti(build_bcom(cyclic(3), TauSpec.z(), 3), 2, 3).dims == [1, 0, 0, 0]  # nosec

    def test_klein_four(self) -> None:
        """B(Z/2)^2 has Betti numbers n + 1 mod 2."""
        space = build_bcom(builtin_group("V4"), TauSpec.z(), 2)
        assert betti(space, 2, 2).dims == [1, 2, 3]  # nosec: B101 # pytest assertion

    def test_wedge(self) -> None:
        """B(Z/2, S3) is a wedge of three copies of BZ/2."""
        space = build_bcom(symmetric(3), TauSpec.zmod(2), 3)
        assert str(betti(space, 2, 3)) == "(1,3,3,3)"  # nosec: B101 # pytest assertion

    def test_dense_and_sparse_paths_agree(self) -> None:
        """Forcing sparse elimination does not change the answer."""
        space = build_bcom(symmetric(3), TauSpec.z(), 2)
        sparse = ResourceGuard(Caps(dense_elimination_limit=1))
        assert betti(space, 3, 2, sparse).dims == betti(space, 3, 2).dims  # nosec: B101

    def test_table_formats(self) -> None:
        """CSV and reduced forms."""
        table = BettiTable(ell=2, dims=[1, 3])
        assert table.to_csv() == "degree,dim\n0,1\n1,3\n"  # nosec: B101 # pytest assertion
        assert table.reduced == [0, 3]  # nosec: B101 # pytest assertion
        assert table.model_dump() == {"ell": 2, "dims": [1, 3]}  # nosec: B101

    def test_path_components(self) -> None:
        """A coproduct of two connected spaces has two components."""
        space = CoproductSimplicialSet([nerve(cyclic(2), 2), nerve(cyclic(3), 2)])
        assert len(path_components(space)) == 2  # nosec: B101 # pytest assertion
        assert betti(space, 2, 1).dims == [2, 1]  # nosec: B101 # pytest assertion


class TestInducedMaps:
    """Test suite for maps induced on homology."""

    def setup_method(self) -> None:
        """Set up test environment before each test method."""
        s3 = symmetric(3)
        self.zmod2 = build_bcom(s3, TauSpec.zmod(2), 2)
        self.z = build_bcom(s3, TauSpec.z(), 2)
        self.free = build_bcom(s3, TauSpec.free(), 2)

    def test_identity_is_iso(self) -> None:
        """The identity induces the identity."""
        induced = induced_on_homology(identity_map(self.z), 2, 2)
        assert induced.is_iso  # nosec: B101 # pytest assertion
        for matrix in induced.matrices:
            assert np.array_equal(matrix, np.eye(matrix.shape[0], dtype=np.int64))  # nosec

    def test_mod2_iso_mod3_not(self) -> None:
        """B(Z/2, S3) -> B(Z, S3) is a mod-2 but not a mod-3 equivalence."""
        f = inclusion_map(self.zmod2, self.z)
        assert induced_on_homology(f, 2, 2).is_iso  # nosec: B101 # pytest assertion
        mod3 = induced_on_homology(f, 3, 2)
        assert not mod3.is_iso  # nosec: B101 # pytest assertion
        assert mod3.source_dims[1] == 0  # nosec: B101 # pytest assertion
        assert mod3.target_dims[1] == 1  # nosec: B101 # pytest assertion

    def test_functoriality(self) -> None:
        """(g f)_* = g_* f_* on homology."""
        f = inclusion_map(self.zmod2, self.z)
        g = inclusion_map(self.z, self.free)
        for ell in (2, 3):
            composite = induced_on_homology(g.compose(f), ell, 2)
            stepwise = induced_on_homology(g, ell, 2).compose(induced_on_homology(f, ell, 2))
            for a, b in zip(composite.matrices, stepwise.matrices, strict=True):
                assert np.array_equal(a % ell, b % ell)  # nosec: B101 # pytest assertion

    def test_basis_is_cached(self) -> None:
        """Homology bases are computed once per (ell, D)."""
        first = homology_basis(self.z, 2, 2)
        assert homology_basis(self.z, 2, 2) is first  # nosec: B101 # pytest assertion
        assert [len(e) for e in first.essential] == [1, 3, 3]  # nosec: B101

    def test_to_dict(self) -> None:
        """The JSON form carries ranks and the verdict."""
        report = induced_on_homology(inclusion_map(self.zmod2, self.z), 2, 1).to_dict()
        assert report["iso"] is True  # nosec: B101 # pytest assertion
        assert report["ranks"] == [1, 3]  # nosec: B101 # pytest assertion

"""
Unit tests for diagrams, homotopy colimits and the abelian-subgroup decomposition.
"""

import pytest

from src.common.exceptions import SimplicialError
from src.core.bcom import TauSpec
from src.core.categories import FiniteCategory, arrow_between, from_poset, one_object
from src.core.groups.builtins import cyclic, symmetric
from src.core.groups.poset import abelian_subgroup_poset
from src.core.hocolim.decomposition import assembly_map, decomposition_diagram
from src.core.hocolim.diagram import Diagram
from src.core.hocolim.hocolim import ChainSimplex, hocolim
from src.core.simplicial.homology import betti, induced_on_homology
from src.core.simplicial.nerve import nerve
from src.core.simplicial.simplicial_set import (
    SimplicialMap,
    point,
    terminal_map,
    validate_simplicial_set,
)


def span_shape() -> FiniteCategory:
    """b <= p1 and b <= p2."""
    return from_poset(["b", "p1", "p2"], lambda i, j: i == j or (i == 0 and j > 0))


def pushout_diagram(depth: int = 3) -> Diagram:
    """pt <- BZ/2 -> pt."""
    shape = span_shape()
    values = [nerve(cyclic(2), depth), point(depth), point(depth)]
    maps = {arrow_between(shape, 0, k): terminal_map(values[0], values[k]) for k in (1, 2)}
    return Diagram(shape, values, maps, name="suspension")


class TestDiagram:
    """Test suite for Diagram."""

    def test_validate_and_model(self) -> None:
        """A span of terminal maps is a functor."""
        diagram = pushout_diagram()
        diagram.validate()
        model = diagram.to_model()
        assert model.objects == ["b", "p1", "p2"]  # nosec: B101 # pytest assertion
        assert sorted(model.arrows) == [[0, 1], [0, 2]]  # nosec: B101 # pytest assertion
        assert model.values["b"] == [1, 1, 1, 1]  # nosec: B101 # pytest assertion
        assert model.values["p1"] == [1, 0, 0, 0]  # nosec: B101 # pytest assertion
        assert diagram.max_degree == 3  # nosec: B101 # pytest assertion

    def test_missing_map(self) -> None:
        """Every non-identity arrow needs a map."""
        shape = span_shape()
        values = [nerve(cyclic(2), 2), point(2), point(2)]
        with pytest.raises(SimplicialError, match="no map"):
            Diagram(shape, values, {})
        with pytest.raises(SimplicialError, match="one value per object"):
            Diagram(shape, values[:2], {})

    def test_functoriality_failure(self) -> None:
        """A composite arrow whose map disagrees with the composite of maps is rejected."""
        shape = from_poset(["a", "b", "c"], lambda i, j: i <= j)
        values = [nerve(cyclic(2), 2) for _ in range(3)]

        def collapse(x: tuple[int, ...]) -> tuple[int, ...]:
            return (0,) * len(x)

        maps = {
            arrow_between(shape, 0, 1): SimplicialMap(values[0], values[1], lambda x: x),
            arrow_between(shape, 1, 2): SimplicialMap(values[1], values[2], lambda x: x),
            arrow_between(shape, 0, 2): SimplicialMap(values[0], values[2], collapse),
        }
        with pytest.raises(SimplicialError, match="Functoriality"):
            Diagram(shape, values, maps).validate()

    def test_wrong_source(self) -> None:
        """Arrow maps must start at the value of the arrow's source."""
        shape = span_shape()
        values = [nerve(cyclic(2), 2), point(2), point(2)]
        stray = nerve(cyclic(2), 2)
        maps = {
            arrow_between(shape, 0, 1): terminal_map(stray, values[1]),
            arrow_between(shape, 0, 2): terminal_map(values[0], values[2]),
        }
        with pytest.raises(SimplicialError, match="wrong source"):
            Diagram(shape, values, maps).validate()


class TestHocolim:
    """Test suite for the simplicial replacement."""

    def test_suspension(self) -> None:
        """The pushout pt <- BZ/2 -> pt is the suspension of BZ/2."""
        space = hocolim(pushout_diagram(), 2)
        assert betti(space, 2, 2).dims == [1, 0, 1]  # nosec: B101 # pytest assertion
        assert betti(space, 3, 2).dims == [1, 0, 0]  # nosec: B101 # pytest assertion

    def test_one_object(self) -> None:
        """Over the terminal category the hocolim is the value itself."""
        value = nerve(cyclic(2), 3)
        space = hocolim(Diagram(one_object(), [value], {}), 2)
        assert space.counts() == value.counts()  # nosec: B101 # pytest assertion
        assert betti(space, 2, 2).dims == [1, 1, 1]  # nosec: B101 # pytest assertion

    def test_terminal_object(self) -> None:
        """Over a cospan the hocolim has the homology of the terminal value."""
        shape = from_poset(["b", "p", "t"], lambda i, j: i == j or j == 2)
        values = [point(3), nerve(cyclic(2), 3), nerve(cyclic(2), 3)]
        maps = {
            arrow_between(shape, 0, 2): SimplicialMap(values[0], values[2], lambda n: (0,) * n),
            arrow_between(shape, 1, 2): SimplicialMap(values[1], values[2], lambda x: x),
        }
        diagram = Diagram(shape, values, maps, name="cospan")
        diagram.validate()
        space = hocolim(diagram, 2)
        for ell in (2, 3):
            expected = betti(values[2], ell, 2).dims
            assert betti(space, ell, 2).dims == expected  # nosec: B101 # pytest assertion
        assert betti(space, 2, 2).dims == [1, 1, 1]  # nosec: B101 # pytest assertion

    def test_simplicial_identities(self) -> None:
        """Faces and degeneracies satisfy the simplicial identities."""
        validate_simplicial_set(hocolim(pushout_diagram(2), 1))

    def test_faces(self) -> None:
        """d_0 pushes the payload forward; the last face drops the last arrow."""
        diagram = pushout_diagram()
        space = hocolim(diagram, 1)
        f = arrow_between(diagram.shape, 0, 1)
        x = ChainSimplex(0, (f,), (1,))
        assert space.face(0, x) == ChainSimplex(1, (), 0)  # nosec: B101 # pytest assertion
        assert space.face(1, x) == ChainSimplex(0, (), ())  # nosec: B101 # pytest assertion
        assert not space.is_degenerate(x)  # nosec: B101 # pytest assertion
        identity = diagram.shape.identities[0]
        expected = ChainSimplex(0, (identity,), (0,))
        assert space.degeneracy(0, ChainSimplex(0, (), ())) == expected  # nosec: B101

    def test_too_shallow(self) -> None:
        """Values must reach degree D + 1."""
        with pytest.raises(SimplicialError, match="needs values"):
            hocolim(pushout_diagram(2), 2)


class TestDecomposition:
    """Test suite for the abelian-subgroup decomposition."""

    def setup_method(self) -> None:
        """Set up test environment before each test method."""
        self.group = symmetric(3)
        self.poset = abelian_subgroup_poset(self.group)

    def test_shape(self) -> None:
        """S3 has five abelian subgroups and four proper inclusions."""
        diagram = decomposition_diagram(self.group, self.poset, TauSpec.z(), 1)
        assert len(diagram.values) == 5  # nosec: B101 # pytest assertion
        assert len(diagram.maps) == 4  # nosec: B101 # pytest assertion
        diagram.validate(exhaustive=False)

    def test_assembly_is_equivalence(self) -> None:
        """The assembly map is a homology isomorphism at 2 and 3."""
        diagram = decomposition_diagram(self.group, self.poset, TauSpec.z(), 1)
        assembly = assembly_map(self.group, diagram, TauSpec.z(), 1)
        assert betti(assembly.source, 2, 1).dims == [1, 3]  # nosec: B101 # pytest assertion
        for ell in (2, 3):
            assert induced_on_homology(assembly, ell, 1).is_iso  # nosec: B101 # pytest assertion

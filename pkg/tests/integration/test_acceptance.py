"""
End-to-end acceptance runs over the case studies, plus property checks on every small builtin.
"""

import pytest

from src.core.bcom import TauSpec, build_bcom, hom_set, inclusion_map, stabilized_adic
from src.core.groups.builtins import BUILTIN_NAMES, builtin_group
from src.core.groups.poset import abelian_subgroup_poset
from src.core.groups.subgroups import exponent_valuation
from src.core.simplicial.chains import normalized_chains
from src.core.simplicial.homology import betti, induced_on_homology
from src.core.simplicial.simplicial_set import validate_simplicial_set
from src.services.decompose import decompose, transfer_check
from src.services.gl2 import gl2_census, gl2_decomposition_check
from src.services.quotient_lemma import quotient_lemma_check
from src.services.sigma3 import sigma3_suite
from src.services.so3 import burnside_orbit_count, so3_pi0

SMALL_BUILTINS = [name for name in BUILTIN_NAMES if builtin_group(name).order <= 200]
# the free nerve in degree 2 has |G|^2 simplices
FUNCTORIALITY_CASES = [
    pytest.param(name, marks=pytest.mark.slow) if builtin_group(name).order > 60 else name
    for name in SMALL_BUILTINS
]


@pytest.mark.integration
@pytest.mark.slow
class TestAcceptance:
    """Acceptance criteria over the case studies."""

    def test_wedge_identity(self) -> None:
        """B(Z/2, S3) is not B(Z/2, Z/2) mod 2."""
        report = sigma3_suite(3)
        assert report.betti_zmod2 == [1, 3, 3, 3]  # nosec: B101 # pytest assertion
        assert report.betti_c2 == [1, 1, 1, 1]  # nosec: B101 # pytest assertion
        assert report.consistent  # nosec: B101 # pytest assertion

    @pytest.mark.parametrize(
        "name,ell,max_degree",
        [
            ("S3", 2, 3),
            ("D4", 2, 3),
            ("Q8", 2, 3),
            ("S4", 2, 3),
            ("S3", 3, 2),
            ("A4", 3, 2),
        ],
    )
    def test_torsion_approximation(self, name: str, ell: int, max_degree: int) -> None:
        """B(Z/l^k, G) -> B(Z, G) is a mod-l equivalence at the stabilization index."""
        group = builtin_group(name)
        k = exponent_valuation(group, ell)
        source = build_bcom(group, TauSpec.zmod(ell**k), max_degree)
        target = build_bcom(group, TauSpec.z(), max_degree)
        assert induced_on_homology(inclusion_map(source, target), ell, max_degree).is_iso  # nosec

    @pytest.mark.parametrize(
        "name,ell", [("S3", 2), ("S3", 3), ("Q8", 2), ("V4", 2), ("D4", 2)]
    )
    def test_decomposition(self, name: str, ell: int) -> None:
        """The assembly map is a homology isomorphism through degree 2."""
        report = decompose(builtin_group(name), TauSpec.z(), ell, 2)
        assert report.iso  # nosec: B101 # pytest assertion
        assert report.hocolim_betti == report.direct_betti  # nosec: B101 # pytest assertion

    @pytest.mark.parametrize("name", ["S3", "Q8"])
    def test_transfer(self, name: str) -> None:
        """Pushing forward along the conjugacy collapse keeps the Betti table."""
        report = transfer_check(builtin_group(name), TauSpec.z(), 2, 2)
        assert report.agreement  # nosec: B101 # pytest assertion
        assert report.orbits_consistent  # nosec: B101 # pytest assertion

    def test_so3_components(self) -> None:
        """Enumeration matches the closed form for n <= 8."""
        for n in range(1, 9):
            report = so3_pi0(n)
            assert report.consistent  # nosec: B101 # pytest assertion
            assert report.orbit_count == burnside_orbit_count(n)  # nosec: B101
        assert [so3_pi0(n).components for n in (1, 2, 3)] == [1, 2, 8]  # nosec: B101

    @pytest.mark.parametrize("ell", [3, 5, 7])
    def test_quotient_lemma(self, ell: int) -> None:
        """The quotient is F_l-acyclic through degree 4."""
        assert not any(quotient_lemma_check(ell, 4).reduced)  # nosec: B101

    def test_gl2_census(self) -> None:
        """GL_2(F_4) at l = 3."""
        census = gl2_census(4, 3)
        assert census.group_order == 180  # nosec: B101 # pytest assertion
        assert census.is_sylow and census.torus_is_homocyclic  # nosec: B101
        assert census.intersections_are_center  # nosec: B101 # pytest assertion
        assert census.n_q == census.closed_form_n_q == 10  # nosec: B101

    def test_gl2_decomposition(self) -> None:
        """hocolim over the eleven subgroups agrees with the stabilized direct computation."""
        report = gl2_decomposition_check(4, 3, 1)
        direct = betti(stabilized_adic(gl2_census(4, 3).group, 3, 1), 3, 1).dims
        assert report.hocolim_betti == direct  # nosec: B101 # pytest assertion
        assert report.agreement  # nosec: B101 # pytest assertion
        assert report.h1 > 0  # nosec: B101 # pytest assertion


@pytest.mark.integration
class TestBuiltinProperties:
    """Structural identities on every builtin group of order at most 200."""

    @pytest.mark.parametrize("name", SMALL_BUILTINS)
    def test_class_equation(self, name: str) -> None:
        """|Hom(Z^2, G)| is the sum of centralizer orders."""
        group = builtin_group(name)
        pairs = hom_set(group, TauSpec.z(), 2)
        assert len(pairs) == sum(len(group.commuting_with(g)) for g in range(group.order))  # nosec

    @pytest.mark.parametrize("name", SMALL_BUILTINS)
    def test_simplicial_identities(self, name: str) -> None:
        """B(Z, G) satisfies the simplicial identities through degree 2."""
        space = build_bcom(builtin_group(name), TauSpec.z(), 1)
        validate_simplicial_set(space)
        for ell in (2, 3):
            normalized_chains(space, ell, 1)

    @pytest.mark.parametrize("name", SMALL_BUILTINS)
    def test_poset_closure(self, name: str) -> None:
        """The abelian subgroup poset is closed under conjugation and intersection."""
        assert abelian_subgroup_poset(builtin_group(name)).closure_violations() == []  # nosec

    @pytest.mark.parametrize("name", FUNCTORIALITY_CASES)
    def test_functoriality(self, name: str) -> None:
        """Induced maps compose along B(Z/2) -> B(Z) -> B(F)."""
        group = builtin_group(name)
        zmod2 = build_bcom(group, TauSpec.zmod(2), 1)
        z = build_bcom(group, TauSpec.z(), 1)
        free = build_bcom(group, TauSpec.free(), 1)
        f, g = inclusion_map(zmod2, z), inclusion_map(z, free)
        composite = induced_on_homology(g.compose(f), 2, 1)
        stepwise = induced_on_homology(g, 2, 1).compose(induced_on_homology(f, 2, 1))
        for a, b in zip(composite.matrices, stepwise.matrices, strict=True):
            assert ((a - b) % 2 == 0).all()  # nosec: B101 # pytest assertion

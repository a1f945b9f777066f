"""
The l-torsion torus of GL_2(F_q) and the decomposition of B(Z_l, GL_2(F_q)).

For an odd prime l dividing q - 1 with valuation s, the diagonal l-torsion T_l = (Z/l^s)^2 is a
Sylow l-subgroup, the l-torsion of the centre Z_l = Z/l^s is contained in every conjugate of
T_l, and two distinct conjugates meet exactly in Z_l. B(Z_l, GL_2(F_q)) is then the homotopy
colimit of the n_q + 1 object diagram {Z_l -> conjugates of T_l}.
"""

import logging
from dataclasses import dataclass

from pydantic import BaseModel

from src.common.arith import is_prime, prime_power, valuation
from src.common.exceptions import SpecError
from src.common.guards import ResourceGuard
from src.core.bcom import TauSpec, stabilized_adic
from src.core.groups.builtins import gl2
from src.core.groups.finite_group import FiniteGroup
from src.core.groups.poset import poset_from_subgroups
from src.core.groups.subgroups import (
    Subgroup,
    center,
    conjugate_subgroup,
    ell_part,
    ell_torsion,
    intersection,
    normalizer,
)
from src.core.hocolim.decomposition import assembly_map, decomposition_diagram
from src.core.hocolim.hocolim import hocolim
from src.core.hocolim.pushforward import conjugacy_collapse, pushforward_over_discrete
from src.core.simplicial.homology import betti, induced_on_homology

logger = logging.getLogger("bcom")


@dataclass
class Gl2Census:
    """Subgroup data of GL_2(F_q) at an odd prime l dividing q - 1."""

    q: int
    ell: int
    group: FiniteGroup
    s: int
    torus: Subgroup
    center_torsion: Subgroup
    normalizer: Subgroup
    conjugates: list[Subgroup]

    @property
    def group_order(self) -> int:
        return self.group.order

    @property
    def n_q(self) -> int:
        return self.group.order // self.normalizer.order

    @property
    def closed_form_n_q(self) -> int | None:
        """(q-1)^2 q (q+1) / (2 l^2), valid for s = 1."""
        if self.s != 1:
            return None
        return (self.q - 1) ** 2 * self.q * (self.q + 1) // (2 * self.ell**2)

    @property
    def is_sylow(self) -> bool:
        return self.torus.order == ell_part(self.group.order, self.ell)

    @property
    def torus_is_homocyclic(self) -> bool:
        """T_l has order l^2s and exponent l^s."""
        exponent = max(self.group.element_orders[g] for g in self.torus.members)
        return self.torus.order == self.ell ** (2 * self.s) and exponent == self.ell**self.s

    @property
    def intersections_are_center(self) -> bool:
        return all(
            intersection(a, b).members == self.center_torsion.members
            for i, a in enumerate(self.conjugates)
            for b in self.conjugates[i + 1 :]
        )

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "ell": self.ell,
            "group_order": self.group_order,
            "s": self.s,
            "torus_order": self.torus.order,
            "center_torsion_order": self.center_torsion.order,
            "normalizer_order": self.normalizer.order,
            "n_q": self.n_q,
            "closed_form_n_q": self.closed_form_n_q,
            "conjugates": len(self.conjugates),
            "is_sylow": self.is_sylow,
            "torus_is_homocyclic": self.torus_is_homocyclic,
            "intersections_are_center": self.intersections_are_center,
        }


def gl2_census(q: int, ell: int, guard: ResourceGuard | None = None) -> Gl2Census:
    """
    Build GL_2(F_q) and its l-torsion torus data by explicit enumeration.

    Raises:
        SpecError: If q is not a prime power, l is not an odd prime, or l does not divide q - 1
    """
    if prime_power(q) is None:
        raise SpecError(f"q={q} is not a prime power")
    if ell == 2 or not is_prime(ell):
        raise SpecError(f"ell must be an odd prime, got {ell}")
    if (q - 1) % ell:
        raise SpecError(
            f"ell={ell} does not divide q-1={q - 1}; choose an extension field F_q' with "
            f"ell | q'-1 and run the census there"
        )
    group = gl2(q, guard)
    assert group.realization is not None
    mats = group.realization.tolist()
    diagonal = Subgroup(
        tuple(g for g, (_, b, c, _) in enumerate(mats) if b == 0 and c == 0), group
    )
    torus = ell_torsion(diagonal, ell)
    center_torsion = ell_torsion(center(group), ell)
    conjugates = sorted(
        {conjugate_subgroup(torus, g).members for g in range(group.order)}
    )
    census = Gl2Census(
        q=q,
        ell=ell,
        group=group,
        s=valuation(q - 1, ell),
        torus=torus,
        center_torsion=center_torsion,
        normalizer=normalizer(group, torus),
        conjugates=[Subgroup(m, group) for m in conjugates],
    )
    logger.info(f"GL_2({q}) census at l={ell}: {census.to_dict()}")
    return census


class Gl2DecompositionReport(BaseModel):
    q: int
    ell: int
    max_degree: int
    objects: int
    arrows: int
    hocolim_betti: list[int]
    direct_betti: list[int]
    pushforward_betti: list[int]
    assembly_iso: bool

    @property
    def agreement(self) -> bool:
        return self.hocolim_betti == self.direct_betti == self.pushforward_betti

    @property
    def h1(self) -> int:
        return self.hocolim_betti[1] if len(self.hocolim_betti) > 1 else 0


def gl2_decomposition_check(
    q: int, ell: int, max_degree: int = 1, guard: ResourceGuard | None = None
) -> Gl2DecompositionReport:
    """
    Compare three computations of the mod-l homology of B(Z_l, GL_2(F_q)) through degree D.

    1. hocolim of B(Z_l, -) over {Z_l} and the n_q conjugates of T_l;
    2. B(Z/l^k, GL_2(F_q)) directly, with k the stabilization index;
    3. hocolim of the pushforward over the two classes [Z_l] < [T_l].
    """
    census = gl2_census(q, ell, guard)
    group = census.group
    tau = TauSpec.zadic(ell)
    poset = poset_from_subgroups(group, [census.center_torsion, *census.conjugates])
    diagram = decomposition_diagram(group, poset, tau, max_degree, guard)
    collapse = conjugacy_collapse(poset)
    pushed = pushforward_over_discrete(diagram, collapse.category, collapse.object_map)
    assembly = assembly_map(group, diagram, tau, max_degree, guard)

    report = Gl2DecompositionReport(
        q=q,
        ell=ell,
        max_degree=max_degree,
        objects=len(poset),
        arrows=len(diagram.maps),
        hocolim_betti=betti(assembly.source, ell, max_degree, guard).dims,
        direct_betti=betti(stabilized_adic(group, ell, max_degree, guard), ell, max_degree).dims,
        pushforward_betti=betti(hocolim(pushed.diagram, max_degree), ell, max_degree).dims,
        assembly_iso=induced_on_homology(assembly, ell, max_degree).is_iso,
    )
    logger.info(f"GL_2({q}) decomposition at l={ell}: {report.model_dump()}")
    return report

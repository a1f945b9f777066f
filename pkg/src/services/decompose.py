"""
The abelian-subgroup decomposition of B(tau, G) checked against the direct computation.
"""

import logging
from typing import Literal

from pydantic import BaseModel

from src.common.guards import ResourceGuard
from src.core.bcom import TauSpec
from src.core.groups.finite_group import FiniteGroup
from src.core.groups.poset import abelian_subgroup_poset
from src.core.hocolim.decomposition import assembly_map, decomposition_diagram
from src.core.hocolim.diagram import DiagramModel
from src.core.hocolim.hocolim import hocolim
from src.core.hocolim.pushforward import (
    conjugacy_collapse,
    pushforward_orbit_report,
    pushforward_over_discrete,
)
from src.core.simplicial.homology import betti, induced_on_homology

logger = logging.getLogger("bcom")

Collection = Literal["all", "center"]


class DecompositionReport(BaseModel):
    group: str
    tau: str
    ell: int
    max_degree: int
    collection: str
    objects: int
    arrows: int
    hocolim_betti: list[int]
    direct_betti: list[int]
    ranks: list[int]
    iso: bool
    diagram: DiagramModel


class TransferReport(BaseModel):
    group: str
    ell: int
    max_degree: int
    classes: int
    chains: int
    hocolim_betti: list[int]
    pushforward_betti: list[int]
    orbits_consistent: bool

    @property
    def agreement(self) -> bool:
        return self.hocolim_betti == self.pushforward_betti


def decompose(
    group: FiniteGroup,
    tau: TauSpec,
    ell: int,
    max_degree: int,
    collection: Collection = "all",
    guard: ResourceGuard | None = None,
) -> DecompositionReport:
    """
    Build the decomposition diagram, its hocolim and the assembly map, and compare with B(tau, G).

    Args:
        group: Finite group
        tau: Cosimplicial group
        ell: Coefficient prime
        max_degree: D
        collection: ``all`` abelian subgroups, or only those containing the center
        guard: Resource guard

    Returns:
        DecompositionReport: Diagram sizes, both Betti tables and the assembly verdict
    """
    poset = abelian_subgroup_poset(group, require_center=collection == "center", guard=guard)
    diagram = decomposition_diagram(group, poset, tau, max_degree, guard)
    assembly = assembly_map(group, diagram, tau, max_degree, guard)
    induced = induced_on_homology(assembly, ell, max_degree)
    report = DecompositionReport(
        group=group.name,
        tau=str(tau),
        ell=ell,
        max_degree=max_degree,
        collection=collection,
        objects=len(poset),
        arrows=len(diagram.maps),
        hocolim_betti=betti(assembly.source, ell, max_degree, guard).dims,
        direct_betti=betti(assembly.target, ell, max_degree, guard).dims,
        ranks=induced.ranks,
        iso=induced.is_iso,
        diagram=diagram.to_model(),
    )
    logger.info(f"Decomposition of {group.name}: {report.model_dump(exclude={'diagram'})}")
    return report


def transfer_check(
    group: FiniteGroup,
    tau: TauSpec,
    ell: int,
    max_degree: int,
    guard: ResourceGuard | None = None,
) -> TransferReport:
    """
    Compare the hocolim of the decomposition diagram with the hocolim of its pushforward along
    the conjugacy-class collapse.
    """
    poset = abelian_subgroup_poset(group, guard=guard)
    diagram = decomposition_diagram(group, poset, tau, max_degree, guard)
    collapse = conjugacy_collapse(poset)
    pushed = pushforward_over_discrete(diagram, collapse.category, collapse.object_map)
    orbits = pushforward_orbit_report(group, poset, pushed, min(max_degree, 1))
    report = TransferReport(
        group=group.name,
        ell=ell,
        max_degree=max_degree,
        classes=len(collapse.category.objects),
        chains=len(pushed.chains),
        hocolim_betti=betti(hocolim(diagram, max_degree), ell, max_degree, guard).dims,
        pushforward_betti=betti(hocolim(pushed.diagram, max_degree), ell, max_degree, guard).dims,
        orbits_consistent=all(record.consistent for record in orbits),
    )
    logger.info(f"Transfer check of {group.name}: {report.model_dump()}")
    return report

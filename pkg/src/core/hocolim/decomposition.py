"""
The abelian-subgroup decomposition of B(tau, G) and its assembly map.
"""

import logging

from src.common.guards import ResourceGuard
from src.core.bcom import BcomComplex, TauSpec, build_bcom, inclusion_map
from src.core.categories import from_poset
from src.core.groups.finite_group import FiniteGroup
from src.core.groups.poset import AbelianPoset
from src.core.hocolim.diagram import Diagram
from src.core.hocolim.hocolim import ChainSimplex, HocolimSimplicialSet, hocolim
from src.core.simplicial.simplicial_set import SimplicialMap

logger = logging.getLogger("bcom")


def decomposition_diagram(
    group: FiniteGroup,
    poset: AbelianPoset,
    tau: TauSpec,
    max_degree: int,
    guard: ResourceGuard | None = None,
) -> Diagram:
    """
    The diagram A -> B(tau, A) over the inclusion poset of a subgroup collection.

    Args:
        group: Ambient group
        poset: Collection closed under conjugation and intersection
        tau: Cosimplicial group (Z_ELL_ADIC is resolved against ``group``)
        max_degree: D; values are populated through D + 1
        guard: Resource guard

    Returns:
        Diagram: Values B(tau, A) in the ambient indices, inclusion maps on arrows
    """
    shape = from_poset(poset.labels(), poset.is_leq)
    values = [build_bcom(a, tau, max_degree, guard) for a in poset.groups]
    maps = {
        f: inclusion_map(values[shape.source(f)], values[shape.target(f)])
        for f in shape.non_identity_arrows()
    }
    logger.info(
        f"Decomposition diagram of {group.name}: {len(values)} objects, {len(maps)} arrows"
    )
    return Diagram(shape, values, maps, name=f"B({tau},-) on {group.name}")


def assembly_map(
    group: FiniteGroup,
    diagram: Diagram,
    tau: TauSpec,
    max_degree: int,
    guard: ResourceGuard | None = None,
) -> SimplicialMap:
    """
    hocolim_A B(tau, A) -> B(tau, G), sending (A_0 -> ... -> A_n, x) to x.

    Returns:
        SimplicialMap: From a fresh hocolim to a fresh B(tau, G), both through D + 1
    """
    source: HocolimSimplicialSet = hocolim(diagram, max_degree)
    target: BcomComplex = build_bcom(group, tau, max_degree, guard)

    def assemble(x: ChainSimplex) -> tuple[int, ...]:
        return x.payload

    return SimplicialMap(source, target, assemble, name="assembly")

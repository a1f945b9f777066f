"""
BA_l -> BA for a finite abelian group A.
"""

import logging

from pydantic import BaseModel

from src.common.guards import ResourceGuard
from src.core.bcom import BcomComplex, TauSpec, inclusion_map
from src.core.groups.finite_group import FiniteGroup
from src.core.groups.subgroups import Subgroup, ell_torsion, whole_group
from src.core.simplicial.homology import induced_on_homology

logger = logging.getLogger("bcom")


class TorsionReport(BaseModel):
    group: str
    ell: int
    torsion_order: int
    ranks: list[int]
    iso: bool


def torsion_equivalence_check(
    obj: FiniteGroup | Subgroup, ell: int, max_degree: int, guard: ResourceGuard | None = None
) -> TorsionReport:
    """
    Check that the nerve of the l-primary part of an abelian group maps by a mod-l homology
    isomorphism into the nerve of the group, through degree D.

    Raises:
        GroupValidationError: If the group is not abelian
    """
    subgroup = obj if isinstance(obj, Subgroup) else whole_group(obj)
    torsion = ell_torsion(subgroup, ell)
    source = BcomComplex(torsion, TauSpec.free(), max_degree + 1, guard)
    target = BcomComplex(subgroup, TauSpec.free(), max_degree + 1, guard)
    induced = induced_on_homology(inclusion_map(source, target), ell, max_degree)
    return TorsionReport(
        group=subgroup.parent.name,
        ell=ell,
        torsion_order=torsion.order,
        ranks=induced.ranks,
        iso=induced.is_iso,
    )

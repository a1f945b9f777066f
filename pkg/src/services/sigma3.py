"""
B(Z/2, Sigma_3) against B(Z, Sigma_3) and B(Z/2, Z/2).

B(Z/2, Sigma_3) is a wedge of three copies of BZ/2, so mod 2 it has Betti numbers
(1, 3, 3, ...). Its inclusion into B(Z, Sigma_3) is a mod-2 equivalence but not a mod-3 one, and
it is not mod-2 equivalent to B(Z/2, Z/2).
"""

import logging

from pydantic import BaseModel

from src.common.guards import ResourceGuard
from src.core.bcom import TauSpec, build_bcom, inclusion_map
from src.core.groups.builtins import builtin_group
from src.core.simplicial.homology import betti, induced_on_homology

logger = logging.getLogger("bcom")


class Sigma3Report(BaseModel):
    max_degree: int
    betti_zmod2: list[int]
    betti_z: list[int]
    betti_c2: list[int]
    iso_mod2: bool
    iso_mod3: bool
    wedge_differs_from_c2: bool

    @property
    def consistent(self) -> bool:
        wedge = [1] + [3] * self.max_degree
        return (
            self.betti_zmod2 == wedge
            and self.iso_mod2
            and not self.iso_mod3
            and self.wedge_differs_from_c2
        )


def sigma3_suite(max_degree: int, guard: ResourceGuard | None = None) -> Sigma3Report:
    """
    Compute the Sigma_3 comparisons through degree D.

    The mod-3 comparison runs through min(D, 2), which already sees the 3-torsion in H_1.
    """
    sigma3 = builtin_group("S3", guard)
    c2 = builtin_group("C2", guard)
    zmod2 = build_bcom(sigma3, TauSpec.zmod(2), max_degree, guard)
    z = build_bcom(sigma3, TauSpec.z(), max_degree, guard)
    c2_zmod2 = build_bcom(c2, TauSpec.zmod(2), max_degree, guard)
    inclusion = inclusion_map(zmod2, z)

    betti_zmod2 = betti(zmod2, 2, max_degree, guard).dims
    betti_c2 = betti(c2_zmod2, 2, max_degree, guard).dims
    report = Sigma3Report(
        max_degree=max_degree,
        betti_zmod2=betti_zmod2,
        betti_z=betti(z, 2, max_degree, guard).dims,
        betti_c2=betti_c2,
        iso_mod2=induced_on_homology(inclusion, 2, max_degree).is_iso,
        iso_mod3=induced_on_homology(inclusion, 3, min(max_degree, 2)).is_iso,
        wedge_differs_from_c2=betti_zmod2 != betti_c2,
    )
    logger.info(f"Sigma_3 suite: {report.model_dump()}")
    return report

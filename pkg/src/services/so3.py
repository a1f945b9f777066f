"""
Components of Hom(Z^n, SO(3)) from a finite pushout.

pi_0 of Hom(Z^n, SO(3)) is the pushout of

    * <- Hom(Z^n, Z/2) -> Hom(Z^n, (Z/2)^2) / Sigma_3

where Sigma_3 permutes the three non-trivial elements of (Z/2)^2. Orbits are found by taking the
least base-4 code over the six relabellings, and the pushout is computed as a coequalizer with
union-find. Both are cross-checked against Burnside's count of the orbits.
"""

import itertools
import logging

import numpy as np
from pydantic import BaseModel

from src.common.exceptions import SpecError
from src.core.groups.builtins import symmetric
from src.core.groups.orbits import UnionFind

logger = logging.getLogger("bcom")

# Element indices of (Z/2)^2: 0 is the identity, 1..3 are the non-trivial elements.
KLEIN_ORDER = 4
# Z/2 -> (Z/2)^2 sends the generator to element 1.
Z2_IMAGE = 1


class So3Pi0Report(BaseModel):
    """Counts of the pushout computation in degree n."""

    n: int
    orbit_count: int
    image_count: int
    components: int
    burnside_orbit_count: int
    closed_form: int

    @property
    def consistent(self) -> bool:
        return (
            self.orbit_count == self.burnside_orbit_count
            and self.components == self.orbit_count - self.image_count + 1
            and self.components == self.closed_form
            and self.components >= 1
        )


def burnside_orbit_count(n: int) -> int:
    """(4^n + 3 * 2^n + 2) / 6: identity, three transpositions, two 3-cycles."""
    return (4**n + 3 * 2**n + 2) // 6


def closed_form_components(n: int) -> int:
    return burnside_orbit_count(n) - 2**n + 1


def so3_pi0(n: int) -> So3Pi0Report:
    """
    pi_0 of the pushout in degree n by explicit enumeration.

    Raises:
        SpecError: If n is negative
    """
    if n < 0:
        raise SpecError(f"Degree must be nonnegative, got {n}")
    sigma3 = symmetric(3)
    assert sigma3.realization is not None
    perms = sigma3.realization.tolist()

    # relabel[g, v]: image of element v of (Z/2)^2 under g
    relabel = np.array([[0, *(1 + p for p in perm)] for perm in perms], dtype=np.int64)

    homs = np.array(list(itertools.product(range(KLEIN_ORDER), repeat=n)), dtype=np.int64)
    homs = homs.reshape(KLEIN_ORDER**n, n)
    weights = KLEIN_ORDER ** np.arange(n - 1, -1, -1, dtype=np.int64)
    # each tuple is named by the least base-4 code in its orbit
    orbit_of = np.stack([relabel[g][homs] @ weights for g in range(sigma3.order)]).min(axis=0)
    orbits = np.unique(orbit_of).tolist()
    image = np.unique(orbit_of[(homs <= Z2_IMAGE).all(axis=1)]).tolist()

    pushout = UnionFind(["*", *orbits])
    for code in image:
        pushout.union("*", code)

    report = So3Pi0Report(
        n=n,
        orbit_count=len(orbits),
        image_count=len(image),
        components=len(pushout),
        burnside_orbit_count=burnside_orbit_count(n),
        closed_form=closed_form_components(n),
    )
    logger.info(f"SO(3) pushout n={n}: {report.components} components")
    return report

"""
The quotient B(Z/2)^2 / Sigma_3 and its mod-l homology.

Sigma_3 acts on (Z/2)^2 by permuting the three non-trivial elements, hence on the nerve
degreewise. For odd l the quotient has the mod-l homology of a point.
"""

import logging

from src.common.arith import is_prime
from src.common.exceptions import SpecError
from src.common.guards import ResourceGuard, default_guard
from src.core.groups.builtins import builtin_group, symmetric
from src.core.groups.subgroups import Subgroup
from src.core.simplicial.homology import BettiTable, betti
from src.core.simplicial.nerve import nerve
from src.core.simplicial.quotient import (
    GroupAction,
    induced_quotient_action,
    quotient_by_action,
)

logger = logging.getLogger("bcom")


def klein_action(max_degree: int) -> GroupAction:
    """Sigma_3 acting on the nerve of (Z/2)^2 through Aut((Z/2)^2)."""
    klein = builtin_group("V4")
    sigma3 = symmetric(3)
    assert sigma3.realization is not None
    perms = sigma3.realization.tolist()
    space = nerve(klein, max_degree)

    def act(g: int, x: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(0 if v == 0 else 1 + perms[g][v - 1] for v in x)

    return GroupAction(sigma3, space, act)


def quotient_lemma_check(
    ell: int, max_degree: int, two_step: bool = False, guard: ResourceGuard | None = None
) -> BettiTable:
    """
    betti(B(Z/2)^2 / Sigma_3, l, D).

    Args:
        ell: Prime; odd primes give the point, 2 is the control
        max_degree: D
        two_step: Quotient by the 3-cycles first, then by the induced Z/2 action
        guard: Resource guard (caps D at quotient_max_degree)

    Raises:
        SpecError: If ell is not prime
        ResourceCapError: If D exceeds the quotient cap
    """
    if not is_prime(ell):
        raise SpecError(f"ell must be prime, got {ell}")
    guard = guard or default_guard()
    guard.check_quotient_degree(max_degree)
    if ell == 2:
        logger.info("Quotient lemma run at l=2: control case, outside the lemma's hypothesis")

    action = klein_action(max_degree + 1)
    if two_step:
        sigma3 = action.group
        rotations = Subgroup(
            tuple(g for g in range(sigma3.order) if sigma3.element_orders[g] in (1, 3)), sigma3
        )
        action.restrict(rotations).validate()
        quotient = quotient_by_action(induced_quotient_action(action, rotations))
    else:
        quotient = quotient_by_action(action)
    return betti(quotient, ell, max_degree, guard)

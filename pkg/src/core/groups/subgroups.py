"""
Subgroups, centralizers, normalizers and torsion.

A Subgroup is canonicalized as the sorted tuple of its member indices in the parent group.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np

from src.common.arith import is_prime, valuation
from src.common.exceptions import GroupValidationError, SpecError
from src.core.groups.finite_group import FiniteGroup

logger = logging.getLogger("bcom")


@dataclass(frozen=True, order=True)
class Subgroup:
    """A subgroup of a FiniteGroup, stored as sorted member indices."""

    members: tuple[int, ...]
    parent: FiniteGroup = field(compare=False, hash=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: object) -> bool:
        return g in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):  # noqa: ANN204
        return iter(self.members)

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def issubset(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def is_abelian(self) -> bool:
        g = self.parent
        return all(g.commutes(a, b) for i, a in enumerate(self.members) for b in self.members[i:])

    def as_group(self, name: str | None = None) -> FiniteGroup:
        """
        The subgroup as a group of its own, relabelled by position in ``members``.

        Member 0 of the parent (the identity) is the smallest index, so it stays at index 0.
        """
        position = {g: i for i, g in enumerate(self.members)}
        table = np.array(
            [[position[self.parent.mul(a, b)] for b in self.members] for a in self.members],
            dtype=np.int64,
        )
        labels = [self.parent.labels[g] for g in self.members]
        return FiniteGroup(table, labels=labels, name=name or f"{self.parent.name}<{self.order}>")


def make_subgroup(parent: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """
    Build a Subgroup from a member set, validating closure.

    Raises:
        GroupValidationError: If the set is not closed under products and inverses
    """
    member_set = set(members)
    if 0 not in member_set:
        raise GroupValidationError("Subgroup must contain the identity")
    for a in member_set:
        if parent.inv[a] not in member_set:
            raise GroupValidationError(
                f"Subgroup not closed under inverse at {a}", details={"element": a}
            )
        for b in member_set:
            if parent.mul(a, b) not in member_set:
                raise GroupValidationError(
                    f"Subgroup not closed under product at ({a}, {b})", details={"pair": [a, b]}
                )
    return Subgroup(tuple(sorted(member_set)), parent)


def whole_group(group: FiniteGroup) -> Subgroup:
    return Subgroup(tuple(range(group.order)), group)


def generated_subgroup(group: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the generators."""
    members = {0}
    frontier = [0]
    gens = sorted(set(generators))
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = group.mul(x, g)
            if y not in members:
                members.add(y)
                frontier.append(y)
    return Subgroup(tuple(sorted(members)), group)


def centralizer(group: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """{g : gs = sg for all s}."""
    result = frozenset(range(group.order))
    for s in elements:
        result = result & group.commuting_with(s)
    return Subgroup(tuple(sorted(result)), group)


def conjugate_subgroup(subgroup: Subgroup, g: int) -> Subgroup:
    """g H g^-1."""
    parent = subgroup.parent
    return Subgroup(tuple(sorted(parent.conj(g, h) for h in subgroup.members)), parent)


def normalizer(group: FiniteGroup, subgroup: Subgroup) -> Subgroup:
    """{g : g H g^-1 = H}."""
    members = subgroup.member_set
    return Subgroup(
        tuple(
            g
            for g in range(group.order)
            if all(group.conj(g, h) in members for h in subgroup.members)
        ),
        group,
    )


def intersection(a: Subgroup, b: Subgroup) -> Subgroup:
    return Subgroup(tuple(sorted(a.member_set & b.member_set)), a.parent)


def center(group: FiniteGroup) -> Subgroup:
    return Subgroup(group.center(), group)


def ell_torsion(subgroup: Subgroup, ell: int) -> Subgroup:
    """
    The l-primary torsion subgroup of an abelian subgroup.

    Raises:
        GroupValidationError: If the subgroup is not abelian
        SpecError: If ell is not prime
    """
    if not is_prime(ell):
        raise SpecError(f"ell must be prime, got {ell}")
    if not subgroup.is_abelian():
        raise GroupValidationError(
            f"ell_torsion needs an abelian subgroup; order-{subgroup.order} input is not abelian"
        )
    orders = subgroup.parent.element_orders
    return Subgroup(
        tuple(g for g in subgroup.members if orders[g] == ell ** valuation(orders[g], ell)),
        subgroup.parent,
    )


def exponent_valuation(group: FiniteGroup, ell: int) -> int:
    """v_ell(exponent of G): the index k where Hom((Z/ell^k)^n, G) stops growing."""
    if not is_prime(ell):
        raise SpecError(f"ell must be prime, got {ell}")
    return max(valuation(o, ell) for o in group.element_orders)


def ell_part(n: int, ell: int) -> int:
    """The largest power of ell dividing n."""
    return int(ell ** valuation(n, ell))

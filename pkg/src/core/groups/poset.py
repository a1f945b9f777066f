"""
Posets of abelian subgroups closed under conjugation and intersection.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field

from src.common.exceptions import SpecError
from src.common.guards import ResourceGuard, default_guard
from src.core.groups.finite_group import FiniteGroup
from src.core.groups.subgroups import (
    Subgroup,
    centralizer,
    center,
    conjugate_subgroup,
    intersection,
)

logger = logging.getLogger("bcom")


@dataclass(frozen=True)
class AbelianPoset:
    """
    A conjugation- and intersection-closed collection of abelian subgroups.

    ``groups`` is sorted by (order, members). ``leq`` holds (i, j) whenever
    groups[i] is contained in groups[j], reflexive pairs included.
    """

    group: FiniteGroup
    groups: tuple[Subgroup, ...]
    leq: frozenset[tuple[int, int]]
    classes: tuple[tuple[int, ...], ...]
    class_reps: tuple[int, ...]
    _index: dict[tuple[int, ...], int] = field(default_factory=dict, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.groups)

    def index_of(self, subgroup: Subgroup) -> int:
        """Position of a subgroup in ``groups``."""
        try:
            return self._index[subgroup.members]
        except KeyError as e:
            raise SpecError(f"Subgroup of order {subgroup.order} is not in the poset") from e

    def is_leq(self, i: int, j: int) -> bool:
        return (i, j) in self.leq

    def class_of(self, i: int) -> int:
        """Index of the conjugacy class containing groups[i]."""
        for c, members in enumerate(self.classes):
            if i in members:
                return c
        raise KeyError(i)

    def labels(self) -> list[str]:
        return [f"A{i}(order {a.order})" for i, a in enumerate(self.groups)]

    def closure_violations(self) -> list[str]:
        """
        Exhaustive check of the poset invariants.

        Returns:
            list[str]: Human-readable violations (empty when the poset is valid)
        """
        problems = []
        for i, a in enumerate(self.groups):
            if not a.is_abelian():
                problems.append(f"groups[{i}] is not abelian")
            for j in range(i + 1, len(self.groups)):
                meet = intersection(a, self.groups[j])
                if meet.members not in self._index:
                    problems.append(f"groups[{i}] & groups[{j}] is missing")
            for g in range(self.group.order):
                if conjugate_subgroup(a, g).members not in self._index:
                    problems.append(f"conjugate of groups[{i}] by {g} is missing")
                    break
        for i, a in enumerate(self.groups):
            for j, b in enumerate(self.groups):
                if ((i, j) in self.leq) != a.issubset(b):
                    problems.append(f"leq disagrees with inclusion at ({i}, {j})")
        return problems


def _extend(group: FiniteGroup, members: frozenset[int], g: int) -> frozenset[int]:
    """Subgroup generated by an abelian subgroup and an element commuting with it."""
    powers = [0]
    x = g
    while x != 0:
        powers.append(x)
        x = group.mul(x, g)
    return frozenset(group.mul(a, p) for a in members for p in powers)


def poset_from_subgroups(
    group: FiniteGroup, subgroups: Iterable[Subgroup], check_closure: bool = True
) -> AbelianPoset:
    """
    Build an AbelianPoset from an explicit collection.

    Args:
        group: Ambient group
        subgroups: The collection (duplicates are dropped)
        check_closure: Reject collections that are not closed under conjugation and intersection

    Returns:
        AbelianPoset: The collection with inclusion order and conjugacy classes

    Raises:
        SpecError: If a member is not abelian or the collection is not closed
    """
    unique = {s.members: s for s in subgroups}
    groups = tuple(sorted(unique.values(), key=lambda s: (s.order, s.members)))
    index = {s.members: i for i, s in enumerate(groups)}

    leq = frozenset(
        (i, j)
        for i, a in enumerate(groups)
        for j, b in enumerate(groups)
        if a.order <= b.order and a.issubset(b)
    )

    classes: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for i, a in enumerate(groups):
        if i in seen:
            continue
        orbit = {i}
        for g in range(group.order):
            j = index.get(conjugate_subgroup(a, g).members)
            if j is None:
                if check_closure:
                    raise SpecError(
                        f"Collection is not closed under conjugation (groups[{i}] by {g})"
                    )
                continue
            orbit.add(j)
        seen.update(orbit)
        classes.append(tuple(sorted(orbit)))

    poset = AbelianPoset(
        group=group,
        groups=groups,
        leq=leq,
        classes=tuple(classes),
        class_reps=tuple(members[0] for members in classes),
        _index=index,
    )
    if check_closure:
        problems = poset.closure_violations()
        if problems:
            raise SpecError(f"Invalid abelian subgroup collection: {problems[0]}")
    return poset


def abelian_subgroup_poset(
    group: FiniteGroup, require_center: bool = False, guard: ResourceGuard | None = None
) -> AbelianPoset:
    """
    All abelian subgroups of a group, optionally only those containing the center.

    Subgroups are grown from the trivial subgroup (or the center) by adjoining one element of
    the centralizer at a time, so every abelian subgroup is reached.

    Args:
        group: Ambient group
        require_center: Keep only subgroups containing Z(G)
        guard: Resource guard (default: ``default_guard()``)

    Returns:
        AbelianPoset: The poset, sorted by (order, members)
    """
    guard = guard or default_guard()
    guard.check_enumeration(group.order)

    start = frozenset(center(group).members) if require_center else frozenset({0})
    found: set[frozenset[int]] = {start}
    frontier = [start]
    while frontier:
        members = frontier.pop()
        commuting = centralizer(group, members).member_set
        for g in sorted(commuting - members):
            extended = _extend(group, members, g)
            if extended not in found:
                found.add(extended)
                guard.check_subgroups(len(found))
                frontier.append(extended)

    subgroups = [Subgroup(tuple(sorted(m)), group) for m in found]
    logger.info(
        f"Found {len(subgroups)} abelian subgroups of {group.name} "
        f"(require_center={require_center})"
    )
    # closure holds by construction; skip the exhaustive check on large groups
    return poset_from_subgroups(group, subgroups, check_closure=group.order <= 60)


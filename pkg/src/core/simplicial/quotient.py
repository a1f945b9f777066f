"""
Quotients of simplicial sets by simplicial group actions.

An orbit is represented by its smallest member, so quotient simplices are ordinary simplices
of the underlying set.
"""

import logging
from collections.abc import Callable

import numpy as np

from src.common.exceptions import GroupValidationError, SimplicialError
from src.core.groups.finite_group import FiniteGroup
from src.core.groups.subgroups import Subgroup
from src.core.simplicial.simplicial_set import Simplex, SimplicialSet

logger = logging.getLogger("bcom")


class GroupAction:
    """A left action of a finite group on the simplices of a simplicial set."""

    def __init__(
        self,
        group: FiniteGroup,
        space: SimplicialSet,
        act: Callable[[int, Simplex], Simplex],
        elements: tuple[int, ...] | None = None,
    ) -> None:
        """
        Initialize the action.

        Args:
            group: Acting group
            space: The simplicial set acted on
            act: act(g, x) = g . x
            elements: Acting elements (default: all of ``group``); a subgroup restricts here
        """
        self.group = group
        self.space = space
        self.act = act
        self.elements = elements if elements is not None else tuple(range(group.order))

    def restrict(self, subgroup: Subgroup) -> "GroupAction":
        return GroupAction(self.group, self.space, self.act, subgroup.members)

    def orbit(self, x: Simplex) -> set[Simplex]:
        return {self.act(g, x) for g in self.elements}

    def canonical(self, x: Simplex) -> Simplex:
        return min(self.orbit(x))

    def validate(self, max_degree: int | None = None) -> None:
        """
        Check the action axioms and that every element acts by a simplicial map.

        Raises:
            SimplicialError: Naming the failing element and simplex
        """
        x_set = self.space
        top = x_set.max_degree if max_degree is None else min(max_degree, x_set.max_degree)
        member_set = set(self.elements)
        for n in range(top + 1):
            stored = set(x_set.simplices(n))
            for x in x_set.simplices(n):
                if self.act(0, x) != x:
                    raise SimplicialError(f"Identity does not act trivially on {x!r}")
                for g in self.elements:
                    y = self.act(g, x)
                    if y not in stored:
                        raise SimplicialError(f"Element {g} sends {x!r} outside the space")
                    for h in self.elements:
                        gh = self.group.mul(g, h)
                        if gh in member_set and self.act(gh, x) != self.act(g, self.act(h, x)):
                            raise SimplicialError(f"Action is not associative at ({g}, {h}, {x!r})")
                    for i in range(n + 1 if n >= 1 else 0):
                        if self.act(g, x_set.face(i, x)) != x_set.face(i, y):
                            raise SimplicialError(
                                f"Element {g} does not commute with d_{i} at {x!r}"
                            )
                    if n + 1 <= top:
                        for j in range(n + 1):
                            if self.act(g, x_set.degeneracy(j, x)) != x_set.degeneracy(j, y):
                                raise SimplicialError(
                                    f"Element {g} does not commute with s_{j} at {x!r}"
                                )


class QuotientSimplicialSet(SimplicialSet):
    """X / G with orbits represented by their minimal member."""

    kind = "quotient"

    def __init__(self, action: GroupAction) -> None:
        super().__init__(action.space.max_degree)
        self.action = action
        self.space = action.space

    def canonical(self, x: Simplex) -> Simplex:
        return self.action.canonical(x)

    def dim(self, x: Simplex) -> int:
        return self.space.dim(x)

    def face(self, i: int, x: Simplex) -> Simplex:
        return self.canonical(self.space.face(i, x))

    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        return self.canonical(self.space.degeneracy(j, x))

    def is_degenerate(self, x: Simplex) -> bool:
        # orbits of degenerate simplices consist of degenerate simplices
        return self.space.is_degenerate(x)

    def _enumerate(self, n: int) -> list[Simplex]:
        return sorted({self.canonical(x) for x in self.space.simplices(n)})

    def _enumerate_nondegenerate(self, n: int) -> list[Simplex]:
        return sorted({self.canonical(x) for x in self.space.nondegenerate(n)})

    def orbit_sizes(self, n: int) -> list[int]:
        """Size of each nondegenerate orbit in degree n."""
        return [len(self.action.orbit(x)) for x in self.nondegenerate(n)]


def quotient_by_action(action: GroupAction, validate: bool = True) -> QuotientSimplicialSet:
    """
    The quotient simplicial set X / G.

    Raises:
        SimplicialError: If the action is not simplicial
    """
    if validate:
        action.validate()
    quotient = QuotientSimplicialSet(action)
    logger.info(f"Quotient by a group of order {len(action.elements)}")
    return quotient


def quotient_group(group: FiniteGroup, normal: Subgroup) -> tuple[FiniteGroup, list[int]]:
    """
    G / N for a normal subgroup N.

    Returns:
        tuple[FiniteGroup, list[int]]: The quotient group (cosets ordered by minimal member) and
        the coset index of every element of G

    Raises:
        GroupValidationError: If N is not normal
    """
    members = normal.member_set
    for g in range(group.order):
        if any(group.conj(g, h) not in members for h in normal.members):
            raise GroupValidationError(f"Subgroup is not normal: conjugation by {g} leaves it")
    coset_of = [-1] * group.order
    reps: list[int] = []
    for g in range(group.order):
        if coset_of[g] < 0:
            for h in normal.members:
                coset_of[group.mul(g, h)] = len(reps)
            reps.append(g)
    table = np.array(
        [[coset_of[group.mul(a, b)] for b in reps] for a in reps], dtype=np.int64
    )
    labels = [f"{group.labels[r]}N" for r in reps]
    return FiniteGroup(table, labels=labels, name=f"{group.name}/N"), coset_of


def induced_quotient_action(action: GroupAction, normal: Subgroup) -> GroupAction:
    """
    The action of G / N on X / N, used to quotient in two steps.

    Args:
        action: Action of G on X
        normal: Normal subgroup N

    Returns:
        GroupAction: Action of G / N on ``quotient_by_action(action.restrict(N))``
    """
    inner = QuotientSimplicialSet(action.restrict(normal))
    factor, coset_of = quotient_group(action.group, normal)
    rep_of = {coset_of[g]: g for g in reversed(range(action.group.order))}

    def act(c: int, x: Simplex) -> Simplex:
        return inner.canonical(action.act(rep_of[c], x))

    return GroupAction(factor, inner, act)

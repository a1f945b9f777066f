"""
Pushing a diagram forward along a functor to a finite poset.

For a functor rho: A -> C with C a poset, the pushforward is a diagram over the nondegenerate
chains sigma = (c_0 < ... < c_k) of C, with an arrow sigma -> tau whenever tau is a subchain of
sigma. Its value at sigma is the disjoint union of X(a_0) over the lifts a_0 -> ... -> a_k with
rho(a_i) = c_i. Restricting to a subchain keeps the lift's objects at the chosen positions,
composes the arrows in between, and pushes the payload along a_0 -> a_theta(0).

rho must send non-identity arrows to non-identity arrows; degenerate chains of C then carry no
new information and are left out.
"""

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass

from src.common.exceptions import SpecError
from src.core.categories import FiniteCategory, arrow_between, from_poset
from src.core.groups.finite_group import FiniteGroup
from src.core.groups.poset import AbelianPoset
from src.core.groups.subgroups import conjugate_subgroup, normalizer
from src.core.hocolim.diagram import Diagram
from src.core.simplicial.simplicial_set import (
    CoproductSimplicialSet,
    Simplex,
    SimplicialMap,
)

logger = logging.getLogger("bcom")

Lift = tuple[int, tuple[int, ...]]


def nondegenerate_chains(target: FiniteCategory) -> list[tuple[int, ...]]:
    """Strictly increasing chains of a poset category, shortest first."""
    below = {(target.source(f), target.target(f)) for f in target.non_identity_arrows()}
    chains: list[tuple[int, ...]] = [(c,) for c in range(len(target.objects))]
    frontier = list(chains)
    while frontier:
        frontier = [
            chain + (c,)
            for chain in frontier
            for c in range(len(target.objects))
            if (chain[-1], c) in below
        ]
        chains.extend(frontier)
    return chains


def check_functor(
    shape: FiniteCategory, target: FiniteCategory, object_map: Sequence[int]
) -> None:
    """
    Check that an object map extends to a functor into a poset that keeps arrows non-identity.

    Raises:
        SpecError: If the target is not a poset or the map is not admissible
    """
    if not target.is_poset():
        raise SpecError("Pushforward target must be a finite poset; it has isomorphism cycles")
    if len(object_map) != len(shape.objects):
        raise SpecError("Object map must assign a target object to every source object")
    for f in shape.arrows:
        s, t = object_map[f.source], object_map[f.target]
        arrow_between(target, s, t)
        if not shape.is_identity(f.index) and s == t:
            raise SpecError(
                f"Arrow {f.index} would map to an identity; "
                "non-identity arrows must stay non-identity"
            )


def chain_lifts(
    shape: FiniteCategory, object_map: Sequence[int], chain: Sequence[int]
) -> list[Lift]:
    """Strings a_0 -> ... -> a_k in the shape lying over a chain of the target."""
    lifts: list[Lift] = []
    for start in range(len(shape.objects)):
        if object_map[start] != chain[0]:
            continue
        partial: list[tuple[int, tuple[int, ...]]] = [(start, ())]
        for c in chain[1:]:
            extended = []
            for end, arrows in partial:
                for f in shape.arrows_from(end):
                    if object_map[shape.target(f)] == c:
                        extended.append((shape.target(f), arrows + (f,)))
            partial = extended
        lifts.extend((start, arrows) for _, arrows in partial)
    return sorted(lifts)


@dataclass
class Pushforward:
    """The pushed-forward diagram with its chains and their lifts."""

    diagram: Diagram
    source: Diagram
    chains: list[tuple[int, ...]]
    lifts: list[list[Lift]]

    def lift_objects(self, lift: Lift) -> tuple[int, ...]:
        start, arrows = lift
        return tuple(self.source.shape.objects_along(start, arrows))


def pushforward_over_discrete(
    diagram: Diagram,
    target: FiniteCategory,
    object_map: Sequence[int],
) -> Pushforward:
    """
    The pushforward of a diagram over the nondegenerate chains of a finite poset.

    Args:
        diagram: Diagram over a finite category A
        target: Finite poset category C
        object_map: rho on objects; arrows go to the unique arrow between the images

    Returns:
        Pushforward: Diagram over the nondegenerate chains of C, with the chains and lifts

    Raises:
        SpecError: If C is not a poset or rho sends a non-identity arrow to an identity
    """
    shape = diagram.shape
    check_functor(shape, target, object_map)
    chains = nondegenerate_chains(target)
    lifts = [chain_lifts(shape, object_map, chain) for chain in chains]
    values = [
        CoproductSimplicialSet(
            [diagram.values[start] for start, _ in over], tags=over, max_degree=diagram.max_degree
        )
        for over in lifts
    ]

    def is_subchain(i: int, j: int) -> bool:
        return set(chains[j]) <= set(chains[i])

    labels = ["<".join(target.objects[c] for c in chain) for chain in chains]
    new_shape = from_poset(labels, is_subchain)

    def restriction(i: int, j: int) -> SimplicialMap:
        positions = [chains[i].index(c) for c in chains[j]]

        def restrict(x: Simplex) -> Simplex:
            (start, arrows), payload = x
            objects = shape.objects_along(start, arrows)
            new_arrows = tuple(
                shape.composite(arrows[p:q], objects[p])
                for p, q in itertools.pairwise(positions)
            )
            pushed = diagram.push_along(arrows[: positions[0]], payload)
            return ((objects[positions[0]], new_arrows), pushed)

        return SimplicialMap(values[i], values[j], restrict, name=f"{labels[i]}->{labels[j]}")

    maps = {
        f: restriction(new_shape.source(f), new_shape.target(f))
        for f in new_shape.non_identity_arrows()
    }
    logger.info(f"Pushforward of {diagram!r} over {len(chains)} nondegenerate chains")
    return Pushforward(
        diagram=Diagram(new_shape, values, maps, name=f"rho_*{diagram.name}"),
        source=diagram,
        chains=chains,
        lifts=lifts,
    )


@dataclass(frozen=True)
class ConjugacyCollapse:
    """The poset of conjugacy classes of a subgroup collection and the class map."""

    category: FiniteCategory
    object_map: tuple[int, ...]


def conjugacy_collapse(poset: AbelianPoset) -> ConjugacyCollapse:
    """Collapse a subgroup collection to its classes, [A] <= [B] iff A is subconjugate to B."""
    labels = poset.labels()

    def subconjugate(c: int, d: int) -> bool:
        rep = poset.class_reps[d]
        return any(poset.is_leq(i, rep) for i in poset.classes[c])

    classes = [f"[{labels[rep]}]" for rep in poset.class_reps]
    object_map = tuple(poset.class_of(i) for i in range(len(poset)))
    return ConjugacyCollapse(from_poset(classes, subconjugate), object_map)


@dataclass
class OrbitRecord:
    """Conjugation orbits of the lifts over one chain of classes."""

    chain: tuple[int, ...]
    lifts: int
    orbit_sizes: list[int]
    expected_payloads: int
    payloads: int

    @property
    def consistent(self) -> bool:
        return sum(self.orbit_sizes) == self.lifts and self.expected_payloads == self.payloads


def pushforward_orbit_report(
    group: FiniteGroup,
    poset: AbelianPoset,
    pushforward: Pushforward,
    degree: int,
) -> list[OrbitRecord]:
    """
    Orbit bookkeeping of a pushforward along the conjugacy collapse.

    Over each chain of classes the lifts split into G-orbits of size |G| / |N(sigma)|, where
    N(sigma) is the intersection of the normalizers along the lift. The nondegenerate payload
    count in ``degree`` must equal the sum over orbits of |G| / |N(sigma)| times the count in
    the value at the lift's first subgroup.

    Args:
        group: Ambient group
        poset: The subgroup collection the diagram was built on
        pushforward: Result of ``pushforward_over_discrete`` along ``conjugacy_collapse``
        degree: Degree of the payload count

    Returns:
        list[OrbitRecord]: One record per chain
    """
    records = []
    for k, chain in enumerate(pushforward.chains):
        value = pushforward.diagram.values[k]
        assert isinstance(value, CoproductSimplicialSet)
        by_objects = {pushforward.lift_objects(lift): lift for lift in pushforward.lifts[k]}
        seen: set[tuple[int, ...]] = set()
        orbit_sizes = []
        expected = 0
        for objects, lift in sorted(by_objects.items()):
            if objects in seen:
                continue
            seen.update(
                tuple(poset.index_of(conjugate_subgroup(poset.groups[i], g)) for i in objects)
                for g in range(group.order)
            )
            stabilizer = set(range(group.order))
            for i in objects:
                stabilizer &= normalizer(group, poset.groups[i]).member_set
            size = group.order // len(stabilizer)
            orbit_sizes.append(size)
            expected += size * len(value.parts[lift].nondegenerate(degree))
        records.append(
            OrbitRecord(
                chain=chain,
                lifts=len(pushforward.lifts[k]),
                orbit_sizes=orbit_sizes,
                expected_payloads=expected,
                payloads=len(value.nondegenerate(degree)),
            )
        )
    return records

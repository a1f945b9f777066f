"""
Finite categories and posets.

Objects are indices ``0..len(objects)-1``; arrows are indices into ``arrows``. The composite
``g o f`` of ``f: a -> b`` and ``g: b -> c`` is ``composition[(g, f)]``.
"""

import itertools
import logging
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass

from src.common.exceptions import SpecError

logger = logging.getLogger("bcom")


@dataclass(frozen=True)
class Arrow:
    """A morphism ``source -> target``."""

    index: int
    source: int
    target: int
    label: str = ""


class FiniteCategory:
    """A finite category given by explicit composition and identity tables."""

    def __init__(
        self,
        objects: Sequence[str],
        arrows: Sequence[tuple[int, int, str]],
        composition: Mapping[tuple[int, int], int],
        identities: Sequence[int],
        validate: bool = True,
    ) -> None:
        """
        Initialize the category.

        Args:
            objects: Object labels
            arrows: (source, target, label) per arrow
            composition: (g, f) -> index of g o f, for every composable pair
            identities: Identity arrow index per object
            validate: Run the exhaustive unit and associativity checks
        """
        self.objects = tuple(objects)
        self.arrows = tuple(Arrow(i, s, t, label) for i, (s, t, label) in enumerate(arrows))
        self.composition = dict(composition)
        self.identities = tuple(identities)
        self._identity_set = frozenset(self.identities)
        self._from: dict[int, list[int]] = {o: [] for o in range(len(self.objects))}
        for arrow in self.arrows:
            self._from[arrow.source].append(arrow.index)
        if validate:
            self.validate()

    def __repr__(self) -> str:
        return f"FiniteCategory(objects={len(self.objects)}, arrows={len(self.arrows)})"

    def source(self, f: int) -> int:
        return self.arrows[f].source

    def target(self, f: int) -> int:
        return self.arrows[f].target

    def is_identity(self, f: int) -> bool:
        return f in self._identity_set

    def compose(self, g: int, f: int) -> int:
        """g o f."""
        try:
            return self.composition[(g, f)]
        except KeyError as e:
            raise SpecError(f"Arrows {g} and {f} are not composable") from e

    def arrows_from(self, obj: int) -> list[int]:
        return self._from[obj]

    def non_identity_arrows(self) -> list[int]:
        return [a.index for a in self.arrows if not self.is_identity(a.index)]

    def composite(self, arrows: Sequence[int], start: int) -> int:
        """Composite of a composable string starting at ``start`` (identity if empty)."""
        result = self.identities[start]
        for f in arrows:
            result = self.compose(f, result)
        return result

    def validate(self) -> None:
        """
        Exhaustive check of the category axioms.

        Raises:
            SpecError: Naming the first failing arrow or triple
        """
        for obj, ident in enumerate(self.identities):
            arrow = self.arrows[ident]
            if arrow.source != obj or arrow.target != obj:
                raise SpecError(f"Identity arrow {ident} is not an endomorphism of object {obj}")
        for f in self.arrows:
            for g in self._from[f.target]:
                h = self.composition.get((g, f.index))
                if h is None:
                    raise SpecError(f"Missing composite of {g} after {f.index}")
                if self.arrows[h].source != f.source or self.arrows[h].target != self.target(g):
                    raise SpecError(f"Composite of {g} after {f.index} has wrong endpoints")
            if self.compose(f.index, self.identities[f.source]) != f.index:
                raise SpecError(f"Right unit law fails at arrow {f.index}")
            if self.compose(self.identities[f.target], f.index) != f.index:
                raise SpecError(f"Left unit law fails at arrow {f.index}")
        for f in self.arrows:
            for g in self._from[f.target]:
                for h in self._from[self.target(g)]:
                    left = self.compose(h, self.compose(g, f.index))
                    right = self.compose(self.compose(h, g), f.index)
                    if left != right:
                        raise SpecError(f"Composition is not associative at ({h}, {g}, {f.index})")

    def is_poset(self) -> bool:
        """At most one arrow between two objects, and no arrows both ways between distinct ones."""
        pairs: set[tuple[int, int]] = set()
        for arrow in self.arrows:
            key = (arrow.source, arrow.target)
            if key in pairs:
                return False
            pairs.add(key)
        return not any(s != t and (t, s) in pairs for s, t in pairs)

    def composable_strings(self, n: int) -> Iterator[tuple[int, tuple[int, ...]]]:
        """
        All strings ``c_0 -> ... -> c_n`` of n composable arrows, identities included.

        Yields:
            tuple[int, tuple[int, ...]]: (c_0, arrows)
        """
        def extend(obj: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            if len(prefix) == n:
                yield prefix
                return
            for f in self._from[obj]:
                yield from extend(self.target(f), prefix + (f,))

        for obj in range(len(self.objects)):
            for arrows in extend(obj, ()):
                yield obj, arrows

    def objects_along(self, start: int, arrows: Sequence[int]) -> list[int]:
        """The objects c_0, ..., c_n of a composable string."""
        objs = [start]
        for f in arrows:
            objs.append(self.target(f))
        return objs


def from_poset(
    labels: Sequence[str], leq: Callable[[int, int], bool], validate: bool = False
) -> FiniteCategory:
    """
    Category of a finite poset: one arrow ``i -> j`` for each ``i <= j``.

    Args:
        labels: Element labels
        leq: The order relation on indices
        validate: Run the category checks (the poset axioms make them redundant)

    Raises:
        SpecError: If the relation is not a partial order
    """
    size = len(labels)
    pairs = [(i, j) for i, j in itertools.product(range(size), repeat=2) if leq(i, j)]
    pair_set = set(pairs)
    for i in range(size):
        if (i, i) not in pair_set:
            raise SpecError(f"Relation is not reflexive at {labels[i]}")
    for i, j in pairs:
        if i != j and (j, i) in pair_set:
            raise SpecError(f"Relation is not antisymmetric at ({labels[i]}, {labels[j]})")
    arrow_of = {pair: k for k, pair in enumerate(pairs)}
    composition = {}
    for (i, j), f in arrow_of.items():
        for k in range(size):
            g = arrow_of.get((j, k))
            if g is None:
                continue
            h = arrow_of.get((i, k))
            if h is None:
                raise SpecError(
                    f"Relation is not transitive at ({labels[i]}, {labels[j]}, {labels[k]})"
                )
            composition[(g, f)] = h
    arrows = [(i, j, f"{labels[i]}<={labels[j]}") for i, j in pairs]
    identities = [arrow_of[(i, i)] for i in range(size)]
    return FiniteCategory(labels, arrows, composition, identities, validate=validate)


def one_object(label: str = "*") -> FiniteCategory:
    """The terminal category."""
    return FiniteCategory([label], [(0, 0, "id")], {(0, 0): 0}, [0])


def arrow_between(category: FiniteCategory, source: int, target: int) -> int:
    """The unique arrow between two objects of a poset category."""
    for f in category.arrows_from(source):
        if category.target(f) == target:
            return f
    raise SpecError(f"No arrow from {category.objects[source]} to {category.objects[target]}")

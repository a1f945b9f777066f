"""
Diagrams of simplicial sets over finite categories.
"""

import logging
from collections.abc import Mapping, Sequence

from pydantic import BaseModel

from src.common.exceptions import SimplicialError
from src.core.categories import FiniteCategory
from src.core.simplicial.simplicial_set import Simplex, SimplicialMap, SimplicialSet

logger = logging.getLogger("bcom")


class DiagramModel(BaseModel):
    """JSON summary of a diagram: shape plus nondegenerate simplex counts per value."""

    objects: list[str]
    arrows: list[list[int]]
    values: dict[str, list[int]]


class Diagram:
    """
    A functor from a finite category to simplicial sets.

    ``maps`` gives the simplicial map of every non-identity arrow; identity arrows act as the
    identity.
    """

    def __init__(
        self,
        shape: FiniteCategory,
        values: Sequence[SimplicialSet],
        maps: Mapping[int, SimplicialMap],
        name: str = "X",
    ) -> None:
        if len(values) != len(shape.objects):
            raise SimplicialError(
                f"Diagram needs one value per object: {len(values)} for {len(shape.objects)}"
            )
        self.shape = shape
        self.values = list(values)
        self.maps = dict(maps)
        self.name = name
        missing = [f for f in shape.non_identity_arrows() if f not in self.maps]
        if missing:
            raise SimplicialError(f"Diagram has no map for arrows {missing}")

    def __repr__(self) -> str:
        return f"Diagram({self.name}, objects={len(self.values)})"

    @property
    def max_degree(self) -> int:
        return min(v.max_degree for v in self.values)

    def push(self, f: int, x: Simplex) -> Simplex:
        """X(f)(x)."""
        if self.shape.is_identity(f):
            return x
        return self.maps[f](x)

    def push_along(self, arrows: Sequence[int], x: Simplex) -> Simplex:
        for f in arrows:
            x = self.push(f, x)
        return x

    def validate(self, exhaustive: bool = True) -> None:
        """
        Check every arrow map and functoriality on all simplices.

        Raises:
            SimplicialError: Naming the failing arrow pair and simplex
        """
        shape = self.shape
        for f, fmap in self.maps.items():
            if fmap.source is not self.values[shape.source(f)]:
                raise SimplicialError(f"Map of arrow {f} has the wrong source")
            if fmap.target is not self.values[shape.target(f)]:
                raise SimplicialError(f"Map of arrow {f} has the wrong target")
            fmap.validate(exhaustive=exhaustive)
        for f in shape.non_identity_arrows():
            for g in shape.arrows_from(shape.target(f)):
                if shape.is_identity(g):
                    continue
                h = shape.compose(g, f)
                value = self.values[shape.source(f)]
                for n in range(self.max_degree + 1):
                    domain = value.simplices(n) if exhaustive else value.nondegenerate(n)
                    for x in domain:
                        if self.push(h, x) != self.push(g, self.push(f, x)):
                            raise SimplicialError(
                                f"Functoriality fails for arrows ({g}, {f}) at {x!r}"
                            )

    def to_model(self) -> DiagramModel:
        shape = self.shape
        arrows = [[a.source, a.target] for a in shape.arrows if not shape.is_identity(a.index)]
        values = {label: v.counts() for label, v in zip(shape.objects, self.values, strict=True)}
        return DiagramModel(objects=list(shape.objects), arrows=arrows, values=values)

"""
Homotopy colimits as the diagonal of the simplicial replacement.

An n-simplex is a string c_0 -> ... -> c_n in the shape with a payload n-simplex of X(c_0):

- d_0 drops c_0, pushes the payload along the first arrow, then applies d_0;
- d_i (0 < i < n) composes the arrows at c_i and applies d_i to the payload;
- d_n drops the last arrow and applies d_n to the payload;
- s_j inserts the identity of c_j and applies s_j to the payload.
"""

import logging
from dataclasses import dataclass
from typing import Any

from src.common.exceptions import SimplicialError
from src.core.hocolim.diagram import Diagram
from src.core.simplicial.simplicial_set import Simplex, SimplicialSet

logger = logging.getLogger("bcom")


@dataclass(frozen=True, order=True)
class ChainSimplex:
    """(c_0 -> ... -> c_n, x) with x an n-simplex of X(c_0)."""

    start: int
    arrows: tuple[int, ...]
    payload: Any


class HocolimSimplicialSet(SimplicialSet):
    """hocolim of a diagram, populated through the diagram's truncation."""

    kind = "hocolim"

    def __init__(self, diagram: Diagram, max_degree: int) -> None:
        super().__init__(max_degree)
        self.diagram = diagram
        self.shape = diagram.shape

    def dim(self, x: Simplex) -> int:
        return len(x.arrows)

    def face(self, i: int, x: Simplex) -> Simplex:
        n = self._check_face_index(i, x)
        shape, values = self.shape, self.diagram.values
        if i == 0:
            f = x.arrows[0]
            target = shape.target(f)
            payload = values[target].face(0, self.diagram.push(f, x.payload))
            return ChainSimplex(target, x.arrows[1:], payload)
        payload = values[x.start].face(i, x.payload)
        if i == n:
            return ChainSimplex(x.start, x.arrows[:-1], payload)
        composite = shape.compose(x.arrows[i], x.arrows[i - 1])
        return ChainSimplex(
            x.start, x.arrows[: i - 1] + (composite,) + x.arrows[i + 1 :], payload
        )

    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        self._check_degeneracy_index(j, x)
        obj = self.shape.objects_along(x.start, x.arrows)[j]
        arrows = x.arrows[:j] + (self.shape.identities[obj],) + x.arrows[j:]
        return ChainSimplex(x.start, arrows, self.diagram.values[x.start].degeneracy(j, x.payload))

    def is_degenerate_at(self, j: int, x: Simplex) -> bool:
        return self.shape.is_identity(x.arrows[j]) and self.diagram.values[
            x.start
        ].is_degenerate_at(j, x.payload)

    def is_degenerate(self, x: Simplex) -> bool:
        return any(self.is_degenerate_at(j, x) for j in range(len(x.arrows)))

    def _enumerate(self, n: int) -> list[Simplex]:
        return [
            ChainSimplex(start, arrows, payload)
            for start, arrows in sorted(self.shape.composable_strings(n))
            for payload in self.diagram.values[start].simplices(n)
        ]

    def _enumerate_nondegenerate(self, n: int) -> list[Simplex]:
        found = []
        values = self.diagram.values
        for start, arrows in sorted(self.shape.composable_strings(n)):
            slots = [j for j, f in enumerate(arrows) if self.shape.is_identity(f)]
            for payload in values[start].simplices(n):
                if not any(values[start].is_degenerate_at(j, payload) for j in slots):
                    found.append(ChainSimplex(start, arrows, payload))
        return found


def hocolim(diagram: Diagram, max_degree: int) -> HocolimSimplicialSet:
    """
    hocolim of a diagram, populated through degree D + 1.

    Raises:
        SimplicialError: If a value is populated through fewer than D + 1 degrees
    """
    if diagram.max_degree < max_degree + 1:
        raise SimplicialError(
            f"Homotopy colimit through degree {max_degree} needs values through degree "
            f"{max_degree + 1}; the diagram stops at {diagram.max_degree}"
        )
    space = HocolimSimplicialSet(diagram, max_degree + 1)
    logger.info(f"Homotopy colimit of {diagram!r} through degree {max_degree + 1}")
    return space

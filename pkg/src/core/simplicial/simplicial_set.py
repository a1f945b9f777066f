"""
Truncated simplicial sets and simplicial maps.

A simplicial set here is levelwise finite and populated through ``max_degree``. Simplices are
hashable, totally ordered values whose degree is given by ``dim``. Nondegenerate simplices form
the chain bases; a simplex x is degenerate iff ``s_j d_j x == x`` for some j.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Callable, Hashable, Sequence
from typing import Any

from pydantic import BaseModel

from src.common.exceptions import SimplicialError
from src.common.metrics import SIMPLICES_BUILT

logger = logging.getLogger("bcom")

Simplex = Any


class SimplicialSet(ABC):
    """Base class of all truncated simplicial sets."""

    kind = "simplicial"

    def __init__(self, max_degree: int) -> None:
        if max_degree < 0:
            raise SimplicialError(f"max_degree must be nonnegative, got {max_degree}")
        self.max_degree = max_degree
        self._nondegenerate: dict[int, list[Simplex]] = {}
        self._all: dict[int, list[Simplex]] = {}
        self.homology_cache: dict[tuple[int, int], Any] = {}

    @abstractmethod
    def dim(self, x: Simplex) -> int:
        """Degree of a simplex."""

    @abstractmethod
    def face(self, i: int, x: Simplex) -> Simplex:
        """d_i x."""

    @abstractmethod
    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        """s_j x."""

    @abstractmethod
    def _enumerate(self, n: int) -> list[Simplex]:
        """All n-simplices, sorted."""

    def _enumerate_nondegenerate(self, n: int) -> list[Simplex]:
        return [x for x in self.simplices(n) if not self.is_degenerate(x)]

    def check_degree(self, n: int) -> None:
        if n < 0 or n > self.max_degree:
            raise SimplicialError(
                f"Degree {n} is outside the truncation 0..{self.max_degree} of {self.kind}",
                details={"degree": n, "max_degree": self.max_degree},
            )

    def simplices(self, n: int) -> list[Simplex]:
        """All n-simplices in a deterministic order."""
        self.check_degree(n)
        if n not in self._all:
            self._all[n] = self._enumerate(n)
        return self._all[n]

    def nondegenerate(self, n: int) -> list[Simplex]:
        """Nondegenerate n-simplices in a deterministic order."""
        self.check_degree(n)
        if n not in self._nondegenerate:
            found = self._enumerate_nondegenerate(n)
            SIMPLICES_BUILT.labels(kind=self.kind).inc(len(found))
            self._nondegenerate[n] = found
        return self._nondegenerate[n]

    def is_degenerate_at(self, j: int, x: Simplex) -> bool:
        """True if x = s_j d_j x."""
        return self.degeneracy(j, self.face(j, x)) == x

    def is_degenerate(self, x: Simplex) -> bool:
        """True if x is in the image of some degeneracy."""
        return any(self.is_degenerate_at(j, x) for j in range(self.dim(x)))

    def _check_face_index(self, i: int, x: Simplex) -> int:
        n = self.dim(x)
        if n < 1 or not 0 <= i <= n:
            raise SimplicialError(f"Face d_{i} is undefined on a {n}-simplex")
        return n

    def _check_degeneracy_index(self, j: int, x: Simplex) -> int:
        n = self.dim(x)
        if not 0 <= j <= n:
            raise SimplicialError(f"Degeneracy s_{j} is undefined on a {n}-simplex")
        return n

    def counts(self) -> list[int]:
        """Nondegenerate simplex count per degree."""
        return [len(self.nondegenerate(n)) for n in range(self.max_degree + 1)]


class Point(SimplicialSet):
    """The one-point simplicial set; its n-simplex is the integer n."""

    kind = "point"

    def dim(self, x: Simplex) -> int:
        return int(x)

    def face(self, i: int, x: Simplex) -> Simplex:
        self._check_face_index(i, x)
        return x - 1

    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        self._check_degeneracy_index(j, x)
        return x + 1

    def _enumerate(self, n: int) -> list[Simplex]:
        return [n]


def point(max_degree: int) -> Point:
    return Point(max_degree)


class CoproductSimplicialSet(SimplicialSet):
    """Disjoint union of simplicial sets; simplices are (tag, x)."""

    kind = "coproduct"

    def __init__(
        self,
        parts: Sequence[SimplicialSet],
        tags: Sequence[Hashable] | None = None,
        max_degree: int | None = None,
    ) -> None:
        tags = list(tags) if tags is not None else list(range(len(parts)))
        if len(tags) != len(parts) or len(set(tags)) != len(tags):
            raise SimplicialError("Coproduct tags must be distinct, one per part")
        top = min((p.max_degree for p in parts), default=max_degree or 0)
        super().__init__(top if max_degree is None else min(top, max_degree))
        self.parts = dict(zip(tags, parts, strict=True))
        self.tags = sorted(self.parts)

    def dim(self, x: Simplex) -> int:
        tag, y = x
        return self.parts[tag].dim(y)

    def face(self, i: int, x: Simplex) -> Simplex:
        tag, y = x
        return (tag, self.parts[tag].face(i, y))

    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        tag, y = x
        return (tag, self.parts[tag].degeneracy(j, y))

    def is_degenerate(self, x: Simplex) -> bool:
        tag, y = x
        return self.parts[tag].is_degenerate(y)

    def _enumerate(self, n: int) -> list[Simplex]:
        return [(tag, y) for tag in self.tags for y in self.parts[tag].simplices(n)]

    def _enumerate_nondegenerate(self, n: int) -> list[Simplex]:
        return [(tag, y) for tag in self.tags for y in self.parts[tag].nondegenerate(n)]


class SimplicialSetModel(BaseModel):
    """
    JSON form of a truncated simplicial set.

    ``faces[n][k]`` lists the indices in degree n-1 of d_0..d_n of simplex k of degree n;
    ``degeneracies[n][k]`` lists the indices in degree n+1 of s_0..s_n (empty at the top degree).
    """

    max_degree: int
    simplices: list[list[str]]
    faces: list[list[list[int]]]
    degeneracies: list[list[list[int]]]


class FiniteSimplicialSet(SimplicialSet):
    """A simplicial set given by explicit face and degeneracy tables; simplices are (n, k)."""

    kind = "finite"

    def __init__(
        self,
        labels: Sequence[Sequence[str]],
        faces: Sequence[Sequence[Sequence[int]]],
        degeneracies: Sequence[Sequence[Sequence[int]]],
    ) -> None:
        super().__init__(len(labels) - 1)
        self.labels = [list(level) for level in labels]
        self.faces = [[list(f) for f in level] for level in faces]
        self.degeneracies = [[list(s) for s in level] for level in degeneracies]

    @classmethod
    def from_model(cls, model: SimplicialSetModel) -> "FiniteSimplicialSet":
        """
        Load and validate a serialized simplicial set.

        Raises:
            SimplicialError: If tables are malformed or the simplicial identities fail
        """
        if len(model.simplices) != model.max_degree + 1:
            raise SimplicialError("simplices must list every degree 0..max_degree")
        x = cls(model.simplices, model.faces, model.degeneracies)
        validate_simplicial_set(x)
        return x

    def dim(self, x: Simplex) -> int:
        return int(x[0])

    def face(self, i: int, x: Simplex) -> Simplex:
        n = self._check_face_index(i, x)
        try:
            return (n - 1, self.faces[n][x[1]][i])
        except IndexError as e:
            raise SimplicialError(f"Face table has no entry d_{i} for simplex {x}") from e

    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        n = self._check_degeneracy_index(j, x)
        try:
            return (n + 1, self.degeneracies[n][x[1]][j])
        except IndexError as e:
            raise SimplicialError(f"Degeneracy table has no entry s_{j} for simplex {x}") from e

    def _enumerate(self, n: int) -> list[Simplex]:
        return [(n, k) for k in range(len(self.labels[n]))]


def to_model(x: SimplicialSet) -> SimplicialSetModel:
    """Serialize all simplices with face and degeneracy tables by index."""
    levels = [x.simplices(n) for n in range(x.max_degree + 1)]
    index = [{s: k for k, s in enumerate(level)} for level in levels]
    faces: list[list[list[int]]] = [[[] for _ in levels[0]]]
    degeneracies: list[list[list[int]]] = []
    for n in range(1, x.max_degree + 1):
        faces.append([[index[n - 1][x.face(i, s)] for i in range(n + 1)] for s in levels[n]])
    for n in range(x.max_degree + 1):
        if n == x.max_degree:
            degeneracies.append([[] for _ in levels[n]])
        else:
            degeneracies.append(
                [[index[n + 1][x.degeneracy(j, s)] for j in range(n + 1)] for s in levels[n]]
            )
    return SimplicialSetModel(
        max_degree=x.max_degree,
        simplices=[[repr(s) for s in level] for level in levels],
        faces=faces,
        degeneracies=degeneracies,
    )


def validate_simplicial_set(x: SimplicialSet, max_degree: int | None = None) -> None:
    """
    Exhaustively check closure and the simplicial identities.

    Checks d_i d_j = d_{j-1} d_i (i < j), s_i s_j = s_{j+1} s_i (i <= j) and the mixed
    identities d_i s_j = s_{j-1} d_i (i < j), d_j s_j = d_{j+1} s_j = id, d_i s_j = s_j d_{i-1}
    (i > j + 1).

    Raises:
        SimplicialError: Naming the failing identity and simplex
    """
    top = x.max_degree if max_degree is None else min(max_degree, x.max_degree)
    stored = [set(x.simplices(n)) for n in range(top + 1)]

    def fail(identity: str, s: Simplex) -> None:
        raise SimplicialError(
            f"Simplicial identity {identity} fails on {s!r}", details={"simplex": repr(s)}
        )

    for n in range(top + 1):
        for s in x.simplices(n):
            if n >= 1:
                for i in range(n + 1):
                    if x.face(i, s) not in stored[n - 1]:
                        fail(f"closure of d_{i}", s)
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        if x.face(i, x.face(j, s)) != x.face(j - 1, x.face(i, s)):
                            fail(f"d_{i} d_{j} = d_{j - 1} d_{i}", s)
            if n + 1 <= top:
                for j in range(n + 1):
                    t = x.degeneracy(j, s)
                    if t not in stored[n + 1]:
                        fail(f"closure of s_{j}", s)
                    for i in range(n + 2):
                        lhs = x.face(i, t)
                        if i < j:
                            rhs = x.degeneracy(j - 1, x.face(i, s))
                        elif i in (j, j + 1):
                            rhs = s
                        else:
                            rhs = x.degeneracy(j, x.face(i - 1, s))
                        if lhs != rhs:
                            fail(f"d_{i} s_{j}", s)
            if n + 2 <= top:
                for j in range(n + 1):
                    for i in range(j + 1):
                        lhs = x.degeneracy(i, x.degeneracy(j, s))
                        if lhs != x.degeneracy(j + 1, x.degeneracy(i, s)):
                            fail(f"s_{i} s_{j} = s_{j + 1} s_{i}", s)


class SimplicialMap:
    """A degreewise map of simplicial sets given by a function on simplices."""

    def __init__(
        self,
        source: SimplicialSet,
        target: SimplicialSet,
        func: Callable[[Simplex], Simplex],
        name: str = "f",
    ) -> None:
        self.source = source
        self.target = target
        self.func = func
        self.name = name

    def __call__(self, x: Simplex) -> Simplex:
        return self.func(x)

    def __repr__(self) -> str:
        return f"SimplicialMap({self.name}: {self.source.kind} -> {self.target.kind})"

    @property
    def max_degree(self) -> int:
        return min(self.source.max_degree, self.target.max_degree)

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """self o first."""
        if first.target is not self.source:
            raise SimplicialError(f"Cannot compose {self.name} after {first.name}")
        name = f"{self.name}.{first.name}"
        return SimplicialMap(first.source, self.target, lambda x: self.func(first.func(x)), name)

    def validate(self, exhaustive: bool = True, max_degree: int | None = None) -> None:
        """
        Check that the map lands in the target and commutes with faces and degeneracies.

        Args:
            exhaustive: Check every simplex; otherwise only nondegenerate ones
            max_degree: Highest degree to check (default: the common truncation)

        Raises:
            SimplicialError: Naming the failing simplex
        """
        top = self.max_degree if max_degree is None else min(max_degree, self.max_degree)
        for n in range(top + 1):
            stored = set(self.target.simplices(n))
            domain = self.source.simplices(n) if exhaustive else self.source.nondegenerate(n)
            for x in domain:
                y = self.func(x)
                if y not in stored:
                    raise SimplicialError(f"{self.name} sends {x!r} outside the target")
                for i in range(n + 1 if n >= 1 else 0):
                    if self.func(self.source.face(i, x)) != self.target.face(i, y):
                        raise SimplicialError(f"{self.name} does not commute with d_{i} at {x!r}")
                if n + 1 <= top:
                    for j in range(n + 1):
                        if self.func(self.source.degeneracy(j, x)) != self.target.degeneracy(j, y):
                            raise SimplicialError(
                                f"{self.name} does not commute with s_{j} at {x!r}"
                            )


def identity_map(x: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(x, x, lambda s: s, "id")


def terminal_map(x: SimplicialSet, target: Point | None = None) -> SimplicialMap:
    """The unique map to the point."""
    target = target or Point(x.max_degree)
    return SimplicialMap(x, target, x.dim, "to_point")

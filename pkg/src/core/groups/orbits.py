"""Union-find over hashable items."""

from collections.abc import Hashable, Iterable
from typing import TypeVar

T = TypeVar("T", bound=Hashable)


class UnionFind:
    """Disjoint-set forest with union by rank and path compression."""

    def __init__(self, items: Iterable[T]) -> None:
        self.parent: dict = {x: x for x in items}
        self.rank: dict = {x: 0 for x in self.parent}

    def add(self, x: T) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0

    def find(self, x: T) -> T:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: T, y: T) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def groups(self) -> list[list]:
        """Blocks of the partition, each sorted, ordered by their minimal element."""
        blocks: dict = {}
        for x in self.parent:
            blocks.setdefault(self.find(x), []).append(x)
        return sorted((sorted(b) for b in blocks.values()), key=lambda b: b[0])

    def __len__(self) -> int:
        return sum(1 for x in self.parent if self.parent[x] == x)

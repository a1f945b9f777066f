"""
Mod-l homology: Betti tables, homology bases and induced maps.
"""

import csv
import io
import logging
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel

from src.common.arith import inverse_mod
from src.common.exceptions import SimplicialError
from src.common.guards import ResourceGuard
from src.core.groups.orbits import UnionFind
from src.core.simplicial.chains import ChainComplex, normalized_chains
from src.core.simplicial.linalg import (
    Reduction,
    SparseColumn,
    axpy,
    dense_rank,
    rank_mod,
    reduce_columns,
)
from src.core.simplicial.simplicial_set import SimplicialMap, SimplicialSet

logger = logging.getLogger("bcom")


class BettiTable(BaseModel):
    """Dimensions of H_n(X; F_l) for n = 0..D."""

    ell: int
    dims: list[int]

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.dims) + ")"

    @property
    def reduced(self) -> list[int]:
        """Reduced Betti numbers (connected spaces only)."""
        return [self.dims[0] - 1] + self.dims[1:]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["degree", "dim"])
        for n, d in enumerate(self.dims):
            writer.writerow([n, d])
        return buffer.getvalue()


def betti(
    space: SimplicialSet, ell: int, max_degree: int, guard: ResourceGuard | None = None
) -> BettiTable:
    """
    Betti numbers over F_ell through ``max_degree``.

    dims[n] = dim C_n - rank d_n - rank d_{n+1} on normalized chains.
    """
    chains = normalized_chains(space, ell, max_degree)
    ranks = [0] + [
        rank_mod(chains.boundaries[n], len(chains.bases[n - 1]), ell, guard)
        for n in range(1, max_degree + 2)
    ]
    dims = [len(chains.bases[n]) - ranks[n] - ranks[n + 1] for n in range(max_degree + 1)]
    logger.info(f"Betti numbers of {space.kind} mod {ell}: {dims}")
    return BettiTable(ell=ell, dims=dims)


@dataclass
class HomologyBasis:
    """
    Representative cycles of H_n and an echelon basis of the cycles Z_n.

    Every cycle basis vector has a distinct lowest row: boundary columns keep their reduced
    lows, and an essential cycle V_j has lowest entry 1 at row j.
    """

    chains: ChainComplex
    reductions: list[Reduction | None]
    essential: list[list[int]]

    def representative(self, n: int, k: int) -> SparseColumn:
        j = self.essential[n][k]
        if n == 0:
            return {j: 1}
        reduction = self.reductions[n]
        assert reduction is not None and reduction.transforms is not None
        column = reduction.transforms[j]
        assert column is not None
        return column

    def coordinates(self, n: int, cycle: SparseColumn) -> list[int]:
        """
        Coordinates of a cycle's homology class in the essential basis.

        Raises:
            SimplicialError: If the vector is not a cycle
        """
        ell = self.chains.ell
        position = {j: k for k, j in enumerate(self.essential[n])}
        higher = self.reductions[n + 1]
        assert higher is not None
        coords = [0] * len(self.essential[n])
        z = dict(cycle)
        while z:
            low = max(z)
            k = higher.pivots.get(low)
            if k is not None:
                column = higher.columns[k]
                axpy(z, z[low] * inverse_mod(column[low], ell) % ell, column, ell)
            elif low in position:
                coords[position[low]] = z[low]
                axpy(z, z[low], self.representative(n, position[low]), ell)
            else:
                raise SimplicialError(f"Vector is not a cycle in degree {n}")
        return coords


def homology_basis(space: SimplicialSet, ell: int, max_degree: int) -> HomologyBasis:
    """Tracked reductions of d_1..d_{D+1}, cached on the simplicial set."""
    key = (ell, max_degree)
    if key in space.homology_cache:
        return space.homology_cache[key]
    chains = normalized_chains(space, ell, max_degree)
    tracked = [
        reduce_columns(chains.boundaries[n], ell, track=True) for n in range(1, max_degree + 2)
    ]
    essential = []
    for n in range(max_degree + 1):
        zero = range(len(chains.bases[0])) if n == 0 else tracked[n - 1].zero_columns()
        lows = tracked[n].pivots
        essential.append([j for j in zero if j not in lows])
    reductions: list[Reduction | None] = [None, *tracked]
    basis = HomologyBasis(chains=chains, reductions=reductions, essential=essential)
    space.homology_cache[key] = basis
    return basis


@dataclass
class HomologyMap:
    """Matrices of f_*: H_n(X) -> H_n(Y) over F_l in the essential bases."""

    ell: int
    matrices: list[np.ndarray]

    @property
    def ranks(self) -> list[int]:
        return [dense_rank(m, self.ell) if m.size else 0 for m in self.matrices]

    @property
    def source_dims(self) -> list[int]:
        return [m.shape[1] for m in self.matrices]

    @property
    def target_dims(self) -> list[int]:
        return [m.shape[0] for m in self.matrices]

    @property
    def is_iso(self) -> bool:
        """True if every degree is square and of full rank."""
        return all(
            m.shape[0] == m.shape[1] and rank == m.shape[0]
            for m, rank in zip(self.matrices, self.ranks, strict=True)
        )

    def compose(self, first: "HomologyMap") -> "HomologyMap":
        """self o first."""
        return HomologyMap(
            ell=self.ell,
            matrices=[
                (b @ a) % self.ell for a, b in zip(first.matrices, self.matrices, strict=True)
            ],
        )

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "ranks": self.ranks,
            "source_dims": self.source_dims,
            "target_dims": self.target_dims,
            "iso": self.is_iso,
            "matrices": [m.tolist() for m in self.matrices],
        }


def induced_on_homology(
    f: SimplicialMap, ell: int, max_degree: int, validate: bool = True
) -> HomologyMap:
    """
    The map induced by f on H_n(-; F_ell) for n = 0..D.

    Args:
        f: Simplicial map, both ends populated through D + 1
        ell: Prime
        max_degree: D
        validate: Check f against faces and degeneracies on nondegenerate simplices first

    Raises:
        SimplicialError: If f is not simplicial or a truncation is too shallow
    """
    if validate:
        f.validate(exhaustive=False, max_degree=max_degree + 1)
    source = homology_basis(f.source, ell, max_degree)
    target = homology_basis(f.target, ell, max_degree)
    matrices = []
    for n in range(max_degree + 1):
        matrix = np.zeros((len(target.essential[n]), len(source.essential[n])), dtype=np.int64)
        for k in range(len(source.essential[n])):
            image: SparseColumn = {}
            for row, coeff in source.representative(n, k).items():
                x = source.chains.bases[n][row]
                axpy(image, -coeff % ell, target.chains.vector(n, f(x)), ell)
            matrix[:, k] = target.coordinates(n, image)
        matrices.append(matrix)
    result = HomologyMap(ell=ell, matrices=matrices)
    logger.info(f"Induced map {f.name} mod {ell}: ranks {result.ranks}, iso={result.is_iso}")
    return result


def path_components(space: SimplicialSet) -> list[list]:
    """Vertices grouped by the edge relation."""
    components = UnionFind(space.simplices(0))
    if space.max_degree >= 1:
        for e in space.nondegenerate(1):
            components.union(space.face(0, e), space.face(1, e))
    return components.groups()

"""
Normalized chain complexes over F_l.

The basis in degree n is the list of nondegenerate n-simplices; the boundary of x is
sum_i (-1)^i d_i x with degenerate faces dropped.
"""

import logging
from dataclasses import dataclass, field

from src.common.arith import is_prime
from src.common.exceptions import SimplicialError, SpecError
from src.core.simplicial.linalg import SparseColumn, multiply
from src.core.simplicial.simplicial_set import Simplex, SimplicialSet

logger = logging.getLogger("bcom")


@dataclass
class ChainComplex:
    """
    Normalized chains of a truncated simplicial set through degree ``top``.

    ``boundaries[n]`` is the matrix of d_n: C_n -> C_{n-1} as sparse columns (empty for n = 0).
    """

    ell: int
    space: SimplicialSet
    bases: list[list[Simplex]]
    boundaries: list[list[SparseColumn]]
    _index: list[dict[Simplex, int]] = field(default_factory=list, repr=False)

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    @property
    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def index(self, n: int, x: Simplex) -> int:
        return self._index[n][x]

    def vector(self, n: int, x: Simplex) -> SparseColumn:
        """Basis vector of a simplex; zero for a degenerate one."""
        if self.space.is_degenerate(x):
            return {}
        try:
            return {self._index[n][x]: 1}
        except KeyError as e:
            raise SimplicialError(f"Simplex {x!r} is not stored in degree {n}") from e


def normalized_chains(
    space: SimplicialSet, ell: int, max_degree: int | None = None
) -> ChainComplex:
    """
    Normalized chain complex over F_ell computing homology through ``max_degree``.

    Args:
        space: Simplicial set populated through max_degree + 1
        ell: Prime
        max_degree: Highest homology degree D (default: space.max_degree - 1)

    Returns:
        ChainComplex: Bases in degrees 0..D+1 and boundaries d_1..d_{D+1}

    Raises:
        SimplicialError: If the truncation is too shallow or d o d != 0
    """
    if not is_prime(ell):
        raise SpecError(f"ell must be prime, got {ell}")
    top_homology = space.max_degree - 1 if max_degree is None else max_degree
    if top_homology < 0:
        raise SimplicialError("Homology needs a simplicial set populated through degree 1")
    if top_homology + 1 > space.max_degree:
        raise SimplicialError(
            f"Homology through degree {top_homology} needs simplices through degree "
            f"{top_homology + 1}, but only {space.max_degree} are populated",
            details={"requested": top_homology, "max_degree": space.max_degree},
        )

    top = top_homology + 1
    bases = [space.nondegenerate(n) for n in range(top + 1)]
    index = [{x: k for k, x in enumerate(basis)} for basis in bases]
    boundaries: list[list[SparseColumn]] = [[{} for _ in bases[0]]]
    for n in range(1, top + 1):
        columns = []
        for x in bases[n]:
            column: SparseColumn = {}
            for i in range(n + 1):
                y = space.face(i, x)
                if space.is_degenerate(y):
                    continue
                try:
                    row = index[n - 1][y]
                except KeyError as e:
                    raise SimplicialError(f"Face d_{i} of {x!r} is not a stored simplex") from e
                value = (column.get(row, 0) + (1 if i % 2 == 0 else -1)) % ell
                if value:
                    column[row] = value
                else:
                    column.pop(row, None)
            columns.append(column)
        boundaries.append(columns)

    for n in range(1, top):
        if any(multiply(boundaries[n], boundaries[n + 1], ell)):
            raise SimplicialError(f"Boundary composite d_{n} d_{n + 1} is nonzero mod {ell}")

    logger.info(f"Normalized chains of {space.kind} mod {ell}: dims {[len(b) for b in bases]}")
    return ChainComplex(ell=ell, space=space, bases=bases, boundaries=boundaries, _index=index)

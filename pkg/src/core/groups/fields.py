"""
Small finite fields F_q as add/mul tables.

Elements of F_{p^k} are coefficient vectors (a_0, ..., a_{k-1}) of polynomials in x modulo an
irreducible polynomial, indexed by ``sum(a_i * p**i)``. Index 0 is zero and index 1 is one.
"""

import numpy as np

from src.common.arith import prime_power
from src.common.exceptions import SpecError

# Low-order coefficients of the monic irreducible polynomial used for F_{p^k}:
# x^2 + x + 1 for F_4, x^3 + x + 1 for F_8, x^2 + 1 for F_9.
IRREDUCIBLE: dict[int, tuple[int, ...]] = {
    4: (1, 1),
    8: (1, 1, 0),
    9: (1, 0),
}


class FiniteField:
    """The field with q elements."""

    def __init__(self, q: int) -> None:
        pk = prime_power(q)
        if pk is None:
            raise SpecError(f"q={q} is not a prime power")
        self.q = q
        self.p, self.k = pk
        if self.k > 1 and q not in IRREDUCIBLE:
            raise SpecError(f"No irreducible polynomial tabulated for q={q}")

        vectors = [self._digits(i) for i in range(q)]
        self.add = np.array(
            [[self._index(self._vec_add(a, b)) for b in vectors] for a in vectors],
            dtype=np.int64,
        )
        self.mul = np.array(
            [[self._index(self._poly_mul(a, b)) for b in vectors] for a in vectors],
            dtype=np.int64,
        )
        self.neg = np.array([int(np.flatnonzero(self.add[a] == 0)[0]) for a in range(q)])

    def __repr__(self) -> str:
        return f"FiniteField({self.q})"

    def _digits(self, i: int) -> list[int]:
        return [(i // self.p**j) % self.p for j in range(self.k)]

    def _index(self, coeffs: list[int]) -> int:
        return sum(c * self.p**j for j, c in enumerate(coeffs))

    def _vec_add(self, a: list[int], b: list[int]) -> list[int]:
        return [(x + y) % self.p for x, y in zip(a, b, strict=True)]

    def _poly_mul(self, a: list[int], b: list[int]) -> list[int]:
        product = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                product[i + j] = (product[i + j] + x * y) % self.p
        if self.k > 1:
            low = IRREDUCIBLE[self.q]
            # x^k = -(low[0] + low[1] x + ...)
            for d in range(len(product) - 1, self.k - 1, -1):
                c = product[d]
                if c:
                    product[d] = 0
                    for j, coeff in enumerate(low):
                        product[d - self.k + j] = (product[d - self.k + j] - c * coeff) % self.p
        return product[: self.k]


"""
Finite groups given by multiplication tables.

Elements are dense indices ``0..order-1`` with the identity at index 0. All algorithms in the
package operate on these indices.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from src.common.exceptions import GroupValidationError

logger = logging.getLogger("bcom")


@dataclass(frozen=True)
class ConjClassTable:
    """Partition of a group into conjugacy classes."""

    classes: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]

    def class_of(self, g: int) -> int:
        """Index of the class containing g."""
        for i, members in enumerate(self.classes):
            if g in members:
                return i
        raise KeyError(g)


class FiniteGroup:
    """A finite group stored as a multiplication table on element indices."""

    def __init__(
        self,
        table: np.ndarray,
        labels: Sequence[str] | None = None,
        name: str = "G",
        realization: np.ndarray | None = None,
    ) -> None:
        """
        Initialize a group from an already validated table.

        Use ``group_from_table`` for untrusted input.

        Args:
            table: order x order array, table[a, b] = index of a*b, identity at 0
            labels: Optional display string per element
            name: Display name
            realization: Optional concrete element data, one row per element (permutations
                in one-line notation, matrix entries)
        """
        self.table = np.array(table, dtype=np.int64)
        self.table.setflags(write=False)
        self.order = int(self.table.shape[0])
        self.name = name
        self.labels = (
            tuple(labels) if labels is not None else tuple(str(i) for i in range(self.order))
        )
        self._rows: list[list[int]] = self.table.tolist()
        self.inv: tuple[int, ...] = tuple(row.index(0) for row in self._rows)
        self.identity = 0
        self.realization = realization
        self._element_orders: tuple[int, ...] | None = None
        self._classes: ConjClassTable | None = None
        self._commuting: list[frozenset[int]] | None = None

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        """Product a*b."""
        return self._rows[a][b]

    def conj(self, g: int, x: int) -> int:
        """Conjugate g x g^-1."""
        return self._rows[self._rows[g][x]][self.inv[g]]

    def power(self, g: int, k: int) -> int:
        """g**k for k >= 0."""
        result = 0
        for _ in range(k):
            result = self._rows[result][g]
        return result

    def element_order(self, g: int) -> int:
        """Order of the element g."""
        return self.element_orders[g]

    @property
    def element_orders(self) -> tuple[int, ...]:
        if self._element_orders is None:
            orders = []
            for g in range(self.order):
                x, n = g, 1
                while x != 0:
                    x = self._rows[x][g]
                    n += 1
                orders.append(n)
            self._element_orders = tuple(orders)
        return self._element_orders

    def commutes(self, a: int, b: int) -> bool:
        """True if ab = ba."""
        return self._rows[a][b] == self._rows[b][a]

    def commuting_with(self, g: int) -> frozenset[int]:
        """Elements commuting with g."""
        if self._commuting is None:
            commuting = self.table == self.table.T
            self._commuting = [frozenset(np.flatnonzero(row).tolist()) for row in commuting]
        return self._commuting[g]

    def is_abelian(self) -> bool:
        """True if the multiplication table is symmetric."""
        return bool(np.array_equal(self.table, self.table.T))

    def exponent(self) -> int:
        """Least common multiple of the element orders."""
        return int(np.lcm.reduce(np.array(self.element_orders, dtype=np.int64)))

    def conjugacy_classes(self) -> ConjClassTable:
        """Conjugacy classes with minimal-index representatives."""
        if self._classes is None:
            seen: set[int] = set()
            classes = []
            for g in range(self.order):
                if g in seen:
                    continue
                members = tuple(sorted({self.conj(x, g) for x in range(self.order)}))
                seen.update(members)
                classes.append(members)
            self._classes = ConjClassTable(
                classes=tuple(classes), reps=tuple(members[0] for members in classes)
            )
        return self._classes

    def center(self) -> tuple[int, ...]:
        """Elements commuting with everything."""
        return tuple(g for g in range(self.order) if len(self.commuting_with(g)) == self.order)


def check_associative(table: np.ndarray) -> tuple[int, int, int] | None:
    """
    Exhaustive associativity check.

    Args:
        table: order x order multiplication table

    Returns:
        tuple[int, int, int] | None: The first triple (a, b, c) with (ab)c != a(bc), or None
    """
    n = table.shape[0]
    left = table[table]  # left[a, b, c] = (ab)c
    right = table[np.arange(n)[:, None, None], table[None, :, :]]  # right[a, b, c] = a(bc)
    bad = np.argwhere(left != right)
    if bad.size == 0:
        return None
    a, b, c = (int(v) for v in bad[0])
    return a, b, c


def group_from_table(
    order: int,
    mul: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    name: str = "G",
) -> FiniteGroup:
    """
    Validate a multiplication table and build the group.

    If the identity is not at index 0 the indices 0 and e are swapped so that it is.

    Args:
        order: Number of elements
        mul: order x order table of element indices
        labels: Optional display string per element
        name: Display name

    Returns:
        FiniteGroup: The validated group

    Raises:
        GroupValidationError: Naming the first failing entry, triple or element
    """
    if order <= 0:
        raise GroupValidationError(f"Group order must be positive, got {order}")
    try:
        table = np.array(mul, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise GroupValidationError(
            "Multiplication table is not a rectangular integer array"
        ) from e
    if table.shape != (order, order):
        raise GroupValidationError(
            f"Multiplication table has shape {table.shape}, expected ({order}, {order})",
            details={"shape": list(table.shape)},
        )
    out_of_range = np.argwhere((table < 0) | (table >= order))
    if out_of_range.size:
        a, b = (int(v) for v in out_of_range[0])
        raise GroupValidationError(
            f"Entry mul[{a}][{b}]={int(table[a, b])} is out of range for order {order}",
            details={"entry": [a, b], "value": int(table[a, b])},
        )
    if labels is not None and len(labels) != order:
        raise GroupValidationError(f"Expected {order} labels, got {len(labels)}")

    indices = np.arange(order)
    identities = [
        e
        for e in range(order)
        if np.array_equal(table[e], indices) and np.array_equal(table[:, e], indices)
    ]
    if not identities:
        raise GroupValidationError("Multiplication table has no two-sided identity")
    e = identities[0]
    if e != 0:
        logger.info(f"Relabelling identity element {e} to index 0")
        perm = indices.copy()
        perm[0], perm[e] = e, 0  # perm is its own inverse
        table = perm[table[np.ix_(perm, perm)]]
        if labels is not None:
            labels = [labels[int(p)] for p in perm]

    for g in range(order):
        row = table[g]
        has_right = np.flatnonzero(row == 0)
        if has_right.size == 0 or table[int(has_right[0]), g] != 0:
            raise GroupValidationError(
                f"Element {g} has no two-sided inverse", details={"element": g}
            )

    triple = check_associative(table)
    if triple is not None:
        a, b, c = triple
        raise GroupValidationError(
            f"Multiplication is not associative at ({a}, {b}, {c})",
            details={"triple": [a, b, c]},
        )
    return FiniteGroup(table, labels=labels, name=name)

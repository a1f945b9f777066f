"""
Builtin group families and the group-spec parser.

Canonical element orderings (identity is always index 0):

- ``cyclic(m)``: k is the residue k mod m.
- ``direct_product(G, H)``: (g, h) is ``g * |H| + h``.
- ``dihedral(n)``: order 2n; r^k s^e is ``k + n * e`` with s r s = r^-1.
- ``quaternion()``: 1, -1, i, -i, j, -j, k, -k.
- ``symmetric(n)`` and ``alternating(n)``: permutations of 0..n-1 in lexicographic order of
  their one-line notation, composed right to left, (st)(x) = s(t(x)).
- ``gl2(q)`` and ``sl2(q)``: the identity matrix, then the remaining matrices (a, b; c, d) in
  lexicographic order of their field-element indices.
"""

import itertools
import logging
import re
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ValidationError

from src.common.arith import prime_power
from src.common.exceptions import GroupValidationError, ResourceCapError, SpecError
from src.common.guards import ResourceGuard, default_guard
from src.core.groups.fields import FiniteField
from src.core.groups.finite_group import FiniteGroup, group_from_table

logger = logging.getLogger("bcom")

MAX_SYMMETRIC_DEGREE = 5

# Groups exercised by the exhaustive property suites.
BUILTIN_NAMES = (
    "C2", "C3", "C4", "C6", "V4", "S3", "D4", "Q8", "A4", "S4",
    "SL2:3", "SL2:4", "SL2:5", "GL2:3", "GL2:4",
)  # fmt: skip


class GroupModel(BaseModel):
    """JSON wire form of a group table."""

    order: int
    mul: list[list[int]]
    labels: list[str] | None = None
    name: str | None = None


def group_to_model(group: FiniteGroup) -> GroupModel:
    return GroupModel(
        order=group.order, mul=group.table.tolist(), labels=list(group.labels), name=group.name
    )


def group_from_model(model: GroupModel) -> FiniteGroup:
    return group_from_table(model.order, model.mul, model.labels, name=model.name or "G")


def _tabulate(elements: np.ndarray, products: np.ndarray, base: int) -> np.ndarray:
    """
    Turn element vectors and pairwise product vectors into an index table.

    Args:
        elements: (N, w) array, one row per element in canonical order
        products: (N, N, w) array of product vectors
        base: Bound on vector entries, used to encode vectors as integers
    """
    weights = base ** np.arange(elements.shape[1] - 1, -1, -1, dtype=np.int64)
    lookup = np.full(base ** elements.shape[1], -1, dtype=np.int64)
    lookup[elements @ weights] = np.arange(elements.shape[0])
    table = lookup[products @ weights]
    if (table < 0).any():
        raise GroupValidationError("Element set is not closed under the product")
    return table


def cyclic(m: int) -> FiniteGroup:
    if m < 1:
        raise SpecError(f"Cyclic group order must be positive, got {m}")
    k = np.arange(m)
    labels = [str(i) for i in range(m)]
    return FiniteGroup((k[:, None] + k[None, :]) % m, labels=labels, name=f"C{m}")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    m = h.order
    table = (g.table[:, None, :, None] * m + h.table[None, :, None, :]).reshape(
        g.order * m, g.order * m
    )
    labels = [f"({a},{b})" for a in g.labels for b in h.labels]
    return FiniteGroup(table, labels=labels, name=name or f"{g.name}x{h.name}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n."""
    if n < 1:
        raise SpecError(f"Dihedral parameter must be positive, got {n}")
    idx = np.arange(2 * n)
    k, e = idx % n, idx // n
    sign = 1 - 2 * e[:, None]
    rot = (k[:, None] + sign * k[None, :]) % n
    refl = (e[:, None] + e[None, :]) % 2
    labels = [f"r{i % n}" + ("s" if i >= n else "") for i in range(2 * n)]
    return FiniteGroup(rot + n * refl, labels=labels, name=f"D{n}")


def quaternion() -> FiniteGroup:
    """Q8 as unit quaternions; index = 2 * unit + (sign is negative)."""
    # unit products on 1, i, j, k as (sign, unit)
    units = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }  # fmt: skip
    table = np.zeros((8, 8), dtype=np.int64)
    for a, b in itertools.product(range(8), repeat=2):
        sign, unit = units[(a // 2, b // 2)]
        negative = (sign < 0) ^ bool(a % 2) ^ bool(b % 2)
        table[a, b] = 2 * unit + int(negative)
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return FiniteGroup(table, labels=labels, name="Q8")


def _permutation_group(perms: np.ndarray, n: int, name: str) -> FiniteGroup:
    count = perms.shape[0]
    products = perms[np.arange(count)[:, None, None], perms[None, :, :]]
    table = _tabulate(perms, products, n)
    labels = ["".join(str(x) for x in p) for p in perms.tolist()]
    return FiniteGroup(table, labels=labels, name=name, realization=perms)


def _check_degree(n: int) -> None:
    if n < 1:
        raise SpecError(f"Permutation degree must be positive, got {n}")
    if n > MAX_SYMMETRIC_DEGREE:
        raise ResourceCapError(
            f"Symmetric degree {n} exceeds {MAX_SYMMETRIC_DEGREE}",
            details={"cap": "max_symmetric_degree", "limit": MAX_SYMMETRIC_DEGREE, "size": n},
        )


def symmetric(n: int) -> FiniteGroup:
    _check_degree(n)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    return _permutation_group(perms, n, f"S{n}")


def alternating(n: int) -> FiniteGroup:
    _check_degree(n)
    even = [
        p
        for p in itertools.permutations(range(n))
        if sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n)) % 2 == 0
    ]
    return _permutation_group(np.array(even, dtype=np.int64), n, f"A{n}")


def _matrix_group(q: int, special: bool, guard: ResourceGuard) -> FiniteGroup:
    field = FiniteField(q)
    name = f"{'SL' if special else 'GL'}2({q})"
    expected = (q * q - 1) * (q * q - q) // ((q - 1) if special else 1)
    guard.check_group_order(expected, name)

    add, mul, neg = field.add, field.mul, field.neg
    quads = np.indices((q,) * 4).reshape(4, -1).T
    a, b, c, d = quads.T
    det = add[mul[a, d], neg[mul[b, c]]]
    keep = det == 1 if special else det != 0
    quads = quads[keep]
    identity = np.flatnonzero((quads == [1, 0, 0, 1]).all(axis=1))[0]
    order = [identity] + [i for i in range(len(quads)) if i != identity]
    mats = quads[order]

    x = mats[:, None, :]
    y = mats[None, :, :]
    products = np.stack(
        [
            add[mul[x[..., 0], y[..., 0]], mul[x[..., 1], y[..., 2]]],
            add[mul[x[..., 0], y[..., 1]], mul[x[..., 1], y[..., 3]]],
            add[mul[x[..., 2], y[..., 0]], mul[x[..., 3], y[..., 2]]],
            add[mul[x[..., 2], y[..., 1]], mul[x[..., 3], y[..., 3]]],
        ],
        axis=-1,
    )
    table = _tabulate(mats, products, q)
    labels = [f"[[{m[0]},{m[1]}],[{m[2]},{m[3]}]]" for m in mats.tolist()]
    logger.info(f"Built {name} of order {len(mats)}")
    return FiniteGroup(table, labels=labels, name=name, realization=mats)


def gl2(q: int, guard: ResourceGuard | None = None) -> FiniteGroup:
    """GL_2(F_q) by explicit enumeration of invertible matrices."""
    return _matrix_group(q, special=False, guard=guard or default_guard())


def sl2(q: int, guard: ResourceGuard | None = None) -> FiniteGroup:
    """SL_2(F_q)."""
    return _matrix_group(q, special=True, guard=guard or default_guard())


_FACTOR = re.compile(r"^(C|Z|S|A|D)(\d+)$|^(V4|Q8)$|^(GL2|SL2):(\d+)$")


def _factor(spec: str, guard: ResourceGuard) -> FiniteGroup:
    match = _FACTOR.match(spec)
    if match is None:
        raise SpecError(f"Unknown group spec {spec!r}")
    family, param, fixed, matrix, q = match.groups()
    if fixed == "V4":
        return direct_product(cyclic(2), cyclic(2), name="V4")
    if fixed == "Q8":
        return quaternion()
    if matrix is not None:
        if prime_power(int(q)) is None:
            raise SpecError(f"{matrix} needs a prime power, got q={q}")
        return gl2(int(q), guard) if matrix == "GL2" else sl2(int(q), guard)
    n = int(param)
    if family in ("C", "Z"):
        guard.check_group_order(n, spec)
        return cyclic(n)
    if family == "D":
        guard.check_group_order(2 * n, spec)
        return dihedral(n)
    return symmetric(n) if family == "S" else alternating(n)


def builtin_group(spec: str, guard: ResourceGuard | None = None) -> FiniteGroup:
    """
    Build a group from a spec string.

    Specs are family names (``C2``, ``Z6``, ``V4``, ``S3``, ``A4``, ``D4``, ``Q8``, ``GL2:4``,
    ``SL2:3``) joined by ``x`` for direct products, e.g. ``C2xC2``.

    Args:
        spec: Group spec
        guard: Resource guard (default: ``default_guard()``)

    Returns:
        FiniteGroup: The group in its canonical element ordering

    Raises:
        SpecError: If the group string is malformed or q is not a prime power
        ResourceCapError: If the group is too large
    """
    guard = guard or default_guard()
    factors = [part.strip() for part in spec.split("x")]
    if not factors or any(not part for part in factors):
        raise SpecError(f"Malformed group spec {spec!r}")
    group = _factor(factors[0], guard)
    for part in factors[1:]:
        group = direct_product(group, _factor(part, guard))
        guard.check_group_order(group.order, spec)
    group.name = spec
    guard.check_group_order(group.order, spec)
    return group


def load_group(spec: str, guard: ResourceGuard | None = None) -> FiniteGroup:
    """
    Resolve a CLI group spec: a path to a JSON table or a builtin spec.

    Raises:
        SpecError: If the JSON file cannot be read or parsed
        GroupValidationError: If the table is not a group
    """
    if spec.endswith(".json"):
        path = Path(spec)
        if not path.exists():
            raise SpecError(f"Group file {path} does not exist")
        try:
            model = GroupModel.model_validate_json(path.read_text())
        except ValidationError as e:
            raise SpecError(f"Group file {path} is not a valid group document: {e}") from e
        group = group_from_model(model)
        (guard or default_guard()).check_group_order(group.order, str(path))
        return group
    return builtin_group(spec, guard)

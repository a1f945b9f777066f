"""
Commuting tuples and the simplicial sets B(tau, G).

An n-simplex of B(tau, G) is an n-tuple of element indices of G:

- FREE: any tuple (B(F, G) = BG);
- Z: pairwise commuting tuples;
- Z_MOD m: pairwise commuting tuples of elements whose order divides m;
- Z_ELL_ADIC l: resolved to Z_MOD l^k with k = v_l(exponent of G).

Faces: d_0 drops the first entry, d_i multiplies entries i-1 and i, d_n drops the last entry.
Degeneracies: s_j inserts the identity at slot j. A tuple is degenerate iff it contains the
identity.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum

from src.common.arith import is_prime
from src.common.exceptions import GroupValidationError, SimplicialError, SpecError
from src.common.guards import ResourceGuard, default_guard
from src.core.groups.finite_group import FiniteGroup
from src.core.groups.subgroups import Subgroup, centralizer, exponent_valuation, whole_group
from src.core.simplicial.simplicial_set import Simplex, SimplicialMap, SimplicialSet

logger = logging.getLogger("bcom")

CommutingTuple = tuple[int, ...]


class TauKind(Enum):
    FREE = "free"
    Z = "z"
    Z_MOD = "zmod"
    Z_ELL_ADIC = "zadic"


@dataclass(frozen=True)
class TauSpec:
    """One of the cosimplicial groups F, Z, Z/m, or the l-adic integers."""

    kind: TauKind
    parameter: int | None = None

    def __post_init__(self) -> None:
        if self.kind is TauKind.Z_MOD and (self.parameter is None or self.parameter < 1):
            raise SpecError(f"Z_MOD needs m >= 1, got {self.parameter}")
        if self.kind is TauKind.Z_ELL_ADIC and (
            self.parameter is None or not is_prime(self.parameter)
        ):
            raise SpecError(f"Z_ELL_ADIC needs a prime, got {self.parameter}")
        if self.kind in (TauKind.FREE, TauKind.Z) and self.parameter is not None:
            raise SpecError(f"{self.kind.value} takes no parameter")

    def __str__(self) -> str:
        if self.parameter is None:
            return self.kind.value
        return f"{self.kind.value}:{self.parameter}"

    @classmethod
    def free(cls) -> "TauSpec":
        return cls(TauKind.FREE)

    @classmethod
    def z(cls) -> "TauSpec":
        return cls(TauKind.Z)

    @classmethod
    def zmod(cls, m: int) -> "TauSpec":
        return cls(TauKind.Z_MOD, m)

    @classmethod
    def zadic(cls, ell: int) -> "TauSpec":
        return cls(TauKind.Z_ELL_ADIC, ell)

    @classmethod
    def parse(cls, spec: str) -> "TauSpec":
        """
        Parse ``free``, ``z``, ``zmod:m`` or ``zadic:l``.

        Raises:
            SpecError: If the tau string is malformed
        """
        match = re.fullmatch(r"(free|z)|(zmod|zadic):(\d+)", spec.strip().lower())
        if match is None:
            raise SpecError(f"Unknown tau spec {spec!r}; expected free, z, zmod:m or zadic:l")
        bare, kind, param = match.groups()
        if bare is not None:
            return cls(TauKind(bare))
        return cls(TauKind(kind), int(param))

    def resolve(self, group: FiniteGroup) -> "TauSpec":
        """Replace Z_ELL_ADIC by Z_MOD l^k with k = exponent_valuation(G, l)."""
        if self.kind is not TauKind.Z_ELL_ADIC:
            return self
        assert self.parameter is not None
        k = exponent_valuation(group, self.parameter)
        return TauSpec.zmod(self.parameter**k)

    def includes_into(self, other: "TauSpec") -> bool:
        """True if B(self, G) is a subcomplex of B(other, G) for every G."""
        if self.kind is TauKind.Z_ELL_ADIC or other.kind is TauKind.Z_ELL_ADIC:
            raise SpecError("Resolve Z_ELL_ADIC against a group before comparing")
        rank = {TauKind.Z_MOD: 0, TauKind.Z: 1, TauKind.FREE: 2}
        if self.kind is TauKind.Z_MOD and other.kind is TauKind.Z_MOD:
            assert self.parameter is not None and other.parameter is not None
            return other.parameter % self.parameter == 0
        return rank[self.kind] <= rank[other.kind]


def _support(obj: FiniteGroup | Subgroup) -> tuple[FiniteGroup, Subgroup]:
    if isinstance(obj, Subgroup):
        return obj.parent, obj
    return obj, whole_group(obj)


def _candidates(group: FiniteGroup, tau: TauSpec, support: Subgroup) -> list[int]:
    if tau.kind is TauKind.Z_MOD:
        assert tau.parameter is not None
        return [g for g in support.members if tau.parameter % group.element_orders[g] == 0]
    return list(support.members)


def hom_set(
    group: FiniteGroup,
    tau: TauSpec,
    n: int,
    support: Subgroup | None = None,
    nondegenerate_only: bool = False,
    guard: ResourceGuard | None = None,
) -> list[CommutingTuple]:
    """
    Enumerate Hom(tau^n, G) as n-tuples, sorted lexicographically.

    Tuples are extended one entry at a time within the centralizer of the entries chosen so far.

    Args:
        group: Ambient group
        tau: Cosimplicial group (Z_ELL_ADIC is resolved against ``group``)
        n: Degree
        support: Restrict entries to this subgroup
        nondegenerate_only: Skip tuples containing the identity
        guard: Resource guard

    Returns:
        list[CommutingTuple]: The tuples

    Raises:
        ResourceCapError: If the running count exceeds max_simplices
    """
    if n < 0:
        raise SpecError(f"Degree must be nonnegative, got {n}")
    guard = guard or default_guard()
    tau = tau.resolve(group)
    support = support or whole_group(group)
    candidates = _candidates(group, tau, support)
    if nondegenerate_only:
        candidates = [g for g in candidates if g != 0]
    commuting = tau.kind is not TauKind.FREE

    result: list[CommutingTuple] = []

    def extend(prefix: CommutingTuple, allowed: list[int]) -> None:
        if len(prefix) == n:
            result.append(prefix)
            if len(result) % 10_000 == 0:
                guard.check_simplices(len(result), f"Hom({tau}^{n}, {group.name})")
            return
        for g in allowed:
            if commuting:
                centralizing = group.commuting_with(g)
                extend(prefix + (g,), [h for h in allowed if h in centralizing])
            else:
                extend(prefix + (g,), allowed)

    extend((), candidates)
    guard.check_simplices(len(result), f"Hom({tau}^{n}, {group.name})")
    return result


def face(group: FiniteGroup, tau: TauSpec, i: int, t: CommutingTuple) -> CommutingTuple:
    """
    d_i of a tuple.

    Raises:
        SimplicialError: If i is out of range
    """
    n = len(t)
    if n < 1 or not 0 <= i <= n:
        raise SimplicialError(f"Face d_{i} is undefined on a {n}-tuple")
    if i == 0:
        return t[1:]
    if i == n:
        return t[:-1]
    return t[: i - 1] + (group.mul(t[i - 1], t[i]),) + t[i + 1 :]


def degeneracy(group: FiniteGroup, tau: TauSpec, j: int, t: CommutingTuple) -> CommutingTuple:
    """
    s_j of a tuple: the identity inserted at slot j.

    Raises:
        SimplicialError: If j is out of range
    """
    if not 0 <= j <= len(t):
        raise SimplicialError(f"Degeneracy s_{j} is undefined on a {len(t)}-tuple")
    return t[:j] + (group.identity,) + t[j:]


class BcomComplex(SimplicialSet):
    """B(tau, A) for a group or a subgroup A, with simplices in the ambient element indices."""

    kind = "bcom"

    def __init__(
        self,
        obj: FiniteGroup | Subgroup,
        tau: TauSpec,
        max_degree: int,
        guard: ResourceGuard | None = None,
    ) -> None:
        super().__init__(max_degree)
        self.group, self.support = _support(obj)
        self.requested_tau = tau
        self.tau = tau.resolve(self.group)
        self.guard = guard or default_guard()
        self.metadata: dict[str, int | str] = {"tau": str(self.tau)}
        if tau.kind is TauKind.Z_ELL_ADIC:
            assert tau.parameter is not None
            self.metadata["stabilization_index"] = exponent_valuation(self.group, tau.parameter)
        self._allowed = frozenset(_candidates(self.group, self.tau, self.support))

    def __repr__(self) -> str:
        return f"BcomComplex({self.tau}, order={self.support.order}, max_degree={self.max_degree})"

    def dim(self, x: Simplex) -> int:
        return len(x)

    def face(self, i: int, x: Simplex) -> Simplex:
        return face(self.group, self.tau, i, x)

    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        return degeneracy(self.group, self.tau, j, x)

    def is_degenerate(self, x: Simplex) -> bool:
        return 0 in x

    def is_degenerate_at(self, j: int, x: Simplex) -> bool:
        return x[j] == 0

    def contains(self, x: Simplex) -> bool:
        """Membership test without enumeration."""
        if any(g not in self._allowed for g in x):
            return False
        if self.tau.kind is TauKind.FREE:
            return True
        return all(self.group.commutes(a, b) for i, a in enumerate(x) for b in x[i + 1 :])

    def _enumerate(self, n: int) -> list[Simplex]:
        return hom_set(self.group, self.tau, n, self.support, guard=self.guard)

    def _enumerate_nondegenerate(self, n: int) -> list[Simplex]:
        return hom_set(
            self.group, self.tau, n, self.support, nondegenerate_only=True, guard=self.guard
        )


def build_bcom(
    obj: FiniteGroup | Subgroup, tau: TauSpec, max_degree: int, guard: ResourceGuard | None = None
) -> BcomComplex:
    """
    B(tau, G) populated through degree D + 1, enough for homology through degree D.

    Args:
        obj: The group, or a subgroup whose simplices keep the ambient indices
        tau: Cosimplicial group
        max_degree: D, the highest homology degree of interest
        guard: Resource guard

    Returns:
        BcomComplex: The truncated simplicial set
    """
    if max_degree < 0:
        raise SpecError(f"Truncation degree must be nonnegative, got {max_degree}")
    complex_ = BcomComplex(obj, tau, max_degree + 1, guard)
    logger.info(f"Built {complex_!r}")
    return complex_


def inclusion_map(source: BcomComplex, target: BcomComplex) -> SimplicialMap:
    """
    The inclusion B(tau, A) -> B(tau', B) induced by tau' -> tau and A <= B.

    Raises:
        SpecError: If the pair of cosimplicial groups or supports is incompatible
    """
    if source.group is not target.group:
        raise SpecError("Inclusion maps need a common ambient group")
    if not source.tau.includes_into(target.tau):
        raise SpecError(f"No inclusion B({source.tau}, G) -> B({target.tau}, G)")
    if not source.support.issubset(target.support):
        raise SpecError("Source subgroup is not contained in the target subgroup")
    return SimplicialMap(source, target, lambda x: x, f"B({source.tau})->B({target.tau})")


def stabilized_adic(
    group: FiniteGroup, ell: int, max_degree: int, guard: ResourceGuard | None = None
) -> BcomComplex:
    """
    B(Z_l, G), realized as B(Z/l^k, G) with k = exponent_valuation(G, l).

    The stabilization index is recorded in ``metadata["stabilization_index"]``.
    """
    return build_bcom(group, TauSpec.zadic(ell), max_degree, guard)


@dataclass(frozen=True)
class RepresentationClass:
    """A conjugation orbit of commuting tuples."""

    representative: CommutingTuple
    size: int


def representation_classes(
    group: FiniteGroup, tau: TauSpec, n: int, guard: ResourceGuard | None = None
) -> list[RepresentationClass]:
    """
    Orbits of G acting on Hom(tau^n, G) by conjugation.

    Orbit sizes are |G| / |C_G(tuple)|. The orbit count is checked against Burnside's count
    (1/|G|) sum_g |Hom(tau^n, C_G(g))|.

    Raises:
        GroupValidationError: If the two counts disagree
    """
    tuples = hom_set(group, tau, n, guard=guard)
    classes = []
    seen: set[CommutingTuple] = set()
    for t in tuples:
        if t in seen:
            continue
        orbit = {tuple(group.conj(g, x) for x in t) for g in range(group.order)}
        seen.update(orbit)
        classes.append(RepresentationClass(min(orbit), len(orbit)))

    fixed = sum(
        len(hom_set(group, tau, n, support=centralizer(group, [g]), guard=guard))
        for g in range(group.order)
    )
    if fixed != len(classes) * group.order:
        raise GroupValidationError(
            f"Burnside count {fixed}/{group.order} disagrees with {len(classes)} orbits"
        )
    return classes


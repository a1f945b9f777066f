"""
Nerves of finite groups and finite categories.
"""

from src.core.bcom import BcomComplex, TauSpec
from src.core.categories import FiniteCategory
from src.core.groups.finite_group import FiniteGroup
from src.core.groups.subgroups import Subgroup
from src.core.simplicial.simplicial_set import Simplex, SimplicialSet


class CategoryNerve(SimplicialSet):
    """
    Nerve of a finite category.

    An n-simplex is ``(c_0, (f_1, ..., f_n))`` with f_k: c_{k-1} -> c_k. It is nondegenerate
    iff no f_k is an identity.
    """

    kind = "category_nerve"

    def __init__(self, category: FiniteCategory, max_degree: int) -> None:
        super().__init__(max_degree)
        self.category = category

    def dim(self, x: Simplex) -> int:
        return len(x[1])

    def face(self, i: int, x: Simplex) -> Simplex:
        n = self._check_face_index(i, x)
        start, arrows = x
        if i == 0:
            return (self.category.target(arrows[0]), arrows[1:])
        if i == n:
            return (start, arrows[:-1])
        composite = self.category.compose(arrows[i], arrows[i - 1])
        return (start, arrows[: i - 1] + (composite,) + arrows[i + 1 :])

    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        self._check_degeneracy_index(j, x)
        start, arrows = x
        obj = self.category.objects_along(start, arrows)[j]
        return (start, arrows[:j] + (self.category.identities[obj],) + arrows[j:])

    def is_degenerate(self, x: Simplex) -> bool:
        return any(self.category.is_identity(f) for f in x[1])

    def _enumerate(self, n: int) -> list[Simplex]:
        return sorted(self.category.composable_strings(n))

    def _enumerate_nondegenerate(self, n: int) -> list[Simplex]:
        return [x for x in self.simplices(n) if not self.is_degenerate(x)]


def nerve(obj: FiniteGroup | Subgroup | FiniteCategory, max_degree: int) -> SimplicialSet:
    """
    Nerve of a group, subgroup or finite category, populated through ``max_degree``.

    For a group this is B(F, G) = BG, whose n-simplices are all n-tuples of elements.
    """
    if isinstance(obj, FiniteCategory):
        return CategoryNerve(obj, max_degree)
    return BcomComplex(obj, TauSpec.free(), max_degree)

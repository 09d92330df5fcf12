"""String groups generated by involutions and the intersection condition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import WrongRank
from .groups import DEFAULT_CLOSURE_CAP, GroupElement, GroupTable, closure, element_order


@dataclass
class GeneratorSystem:
    """Distinguished involutions ``rho_0..rho_{d-1}`` and the group they span.

    ``group.generators`` is the same tuple, so column ``k`` of the Cayley
    table is right multiplication by ``rho_k``.
    """

    generators: tuple
    group: GroupTable

    @classmethod
    def from_generators(cls, gens: Sequence[GroupElement],
                        cap: int = DEFAULT_CLOSURE_CAP) -> "GeneratorSystem":
        gens = tuple(gens)
        if not gens:
            raise ValueError("a generator system needs rank at least 1")
        return cls(gens, closure(gens, cap=cap))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def reversed(self) -> "GeneratorSystem":
        return GeneratorSystem.from_generators(self.generators[::-1], cap=len(self.group) + 1)

    def parabolic(self, ids) -> frozenset[int]:
        """Indices of ``<rho_i : i in ids>`` inside ``group``; memoized."""
        return self._parabolic(frozenset(ids))

    def _parabolic(self, ids: frozenset) -> frozenset[int]:
        cache = self.__dict__.setdefault("_pcache", {})
        if ids not in cache:
            cache[ids] = self.group.reachable(sorted(ids))
        return cache[ids]


@dataclass(frozen=True)
class SggiReport:
    involutions_ok: bool
    string_ok: bool
    schlafli: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.involutions_ok and self.string_ok


def check_sggi(sys: GeneratorSystem) -> SggiReport:
    """Involution and commuting checks plus the Schlafli type."""
    g = sys.generators
    cap = len(sys.group)
    invol = all((r * r).is_identity() and not r.is_identity() for r in g)
    string = all(((g[i] * g[j]) ** 2).is_identity()
                 for i in range(len(g)) for j in range(i + 2, len(g)))
    schlafli = tuple(element_order(g[i - 1] * g[i], cap) for i in range(1, len(g)))
    return SggiReport(invol, string, schlafli)


def _subsets(d: int):
    for r in range(d + 1):
        yield from combinations(range(d), r)


def intersection_condition_full(sys: GeneratorSystem) -> bool:
    """Brute force over all pairs ``I, J`` of generator index sets."""
    subsets = [frozenset(s) for s in _subsets(sys.rank)]
    for a in subsets:
        pa = sys.parabolic(a)
        for b in subsets:
            if sys.parabolic(b) & pa != sys.parabolic(a & b):
                return False
    return True


def rank3_intersection(sys: GeneratorSystem) -> frozenset[int]:
    """``<rho0, rho1> & <rho1, rho2>`` as group indices."""
    if sys.rank != 3:
        raise WrongRank(f"expected rank 3, got {sys.rank}")
    return sys.parabolic({0, 1}) & sys.parabolic({1, 2})


def intersection_condition_rank3(sys: GeneratorSystem) -> bool:
    """The reduced check for rank 3: the two single-generator intersections
    are trivial and ``<rho0, rho1> & <rho1, rho2> == <rho1>``."""
    if sys.rank != 3:
        raise WrongRank(f"expected rank 3, got {sys.rank}")
    trivial = frozenset([0])
    p = sys.parabolic
    return (p({0}) & p({1}) == trivial
            and p({1}) & p({2}) == trivial
            and rank3_intersection(sys) == p({1}))

"""The generator triple of the type {n, n} polytope and the group it spans.

The group is realised inside the affine group of GF(2)^(n-1):

* ``rho0: w -> U w``
* ``rho1: w -> V w``
* ``rho2: w -> U w + u`` with ``u = (0, ..., 0, 1)``

where ``U`` and ``V`` come from :func:`regpoly.gf2.matrices_u_v`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OrderMismatch
from .gf2 import Gf2Vector, matrices_u_v, vector_u
from .groups import DEFAULT_CLOSURE_CAP, AffineMap, GroupTable, closure


@dataclass(frozen=True)
class PaperGenerators:
    n: int
    rho0: AffineMap
    rho1: AffineMap
    rho2: AffineMap

    def as_list(self) -> list[AffineMap]:
        return [self.rho0, self.rho1, self.rho2]

    def __iter__(self):
        return iter(self.as_list())


def build_generators(n: int) -> PaperGenerators:
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    u_mat, v_mat = matrices_u_v(n)
    zero = Gf2Vector(n - 1, 0)
    return PaperGenerators(
        n,
        AffineMap(u_mat, zero),
        AffineMap(v_mat, zero),
        AffineMap(u_mat, vector_u(n)),
    )


def expected_order(n: int) -> int:
    return (2 ** n) * n


def build_group(n: int, cap: int = DEFAULT_CLOSURE_CAP) -> GroupTable:
    """Enumerate ``<rho0, rho1, rho2>`` and insist on order ``2^n * n``."""
    gens = build_generators(n)
    table = closure(gens.as_list(), cap=cap)
    if table.order != expected_order(n):
        raise OrderMismatch(f"n={n}: group has order {table.order}, "
                            f"expected {expected_order(n)}")
    return table

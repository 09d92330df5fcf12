"""Finite groups given by concrete elements.

All products use the *apply-left-first* convention: ``f * g`` is the map
``w -> g(f(w))``.  Three element families are provided:

* :class:`AffineMap` -- ``w -> Mw + t`` on GF(2)^m,
* :class:`DihedralElement` -- the dihedral group of order ``2n``,
* :class:`Permutation` -- permutations of ``0..degree-1``.

Each family can present itself as a permutation of a finite point set and
can be recovered from the images of a fixed tuple of base points (its
*frame*).  :func:`closure` uses this to run the breadth-first search inside
the compiled kernel and only builds element objects on demand.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from . import _backend
from .errors import ClosureExceedsCap, DimensionError, NotASubgroup, OrderExceedsCap
from .gf2 import Gf2Matrix, Gf2Vector, det_rank_inverse

DEFAULT_CLOSURE_CAP = 1 << 20


class GroupElement:
    """Mixin giving equality, hashing and powers from ``key``."""

    __slots__ = ()

    def __eq__(self, other):
        return type(self) is type(other) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


class AffineMap(GroupElement):
    """An invertible affine map ``w -> linear @ w + translation``."""

    __slots__ = ("linear", "translation", "key", "_cols")

    def __init__(self, linear: Gf2Matrix, translation: Optional[Gf2Vector] = None,
                 check: bool = True):
        if not linear.is_square:
            raise DimensionError("linear part must be square")
        if translation is None:
            translation = Gf2Vector(linear.nrows, 0)
        if translation.dim != linear.nrows:
            raise DimensionError("translation dimension does not match linear part")
        if check and det_rank_inverse(linear).det != 1:
            raise ValueError("linear part is not invertible")
        self.linear = linear
        self.translation = translation
        # canonical key: linear-part rows then translation bits
        self.key = linear.rows + (translation.bits,)
        self._cols = None

    @property
    def dim(self) -> int:
        return self.linear.nrows

    def __repr__(self):
        rows = ";".join(str(Gf2Vector(self.dim, r)) for r in self.linear.rows)
        return f"AffineMap([{rows}] + {self.translation})"

    @classmethod
    def translation_by(cls, t: Gf2Vector) -> "AffineMap":
        return cls(Gf2Matrix.identity(t.dim), t, check=False)

    def identity(self) -> "AffineMap":
        return AffineMap(Gf2Matrix.identity(self.dim), None, check=False)

    def is_identity(self) -> bool:
        return self.translation.bits == 0 and self.linear.is_identity()

    def is_translation(self) -> bool:
        return self.linear.is_identity()

    def __call__(self, w: Gf2Vector) -> Gf2Vector:
        return self.linear @ w + self.translation

    def apply_bits(self, w: int) -> int:
        return self.linear.apply_bits(w) ^ self.translation.bits

    def __mul__(self, other: "AffineMap") -> "AffineMap":
        if not isinstance(other, AffineMap):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionError("cannot compose affine maps of different dimension")
        lin = other.linear @ self.linear
        t = Gf2Vector(self.dim, other.apply_bits(self.translation.bits))
        return AffineMap(lin, t, check=False)

    def inverse(self) -> "AffineMap":
        inv = det_rank_inverse(self.linear).inverse
        return AffineMap(inv, inv @ self.translation, check=False)

    # frame protocol: base points are 0, e_0, ..., e_{m-1}

    def points(self) -> list[int]:
        return [self.apply_bits(w) for w in range(1 << self.dim)]

    def frame_base(self) -> tuple[int, ...]:
        return (0,) + tuple(1 << i for i in range(self.dim))

    def frame(self) -> tuple[int, ...]:
        t = self.translation.bits
        if self._cols is None:
            self._cols = tuple(c.bits for c in self.linear.columns())
        return (t,) + tuple(c ^ t for c in self._cols)

    def from_frame(self, frame: Sequence[int]) -> "AffineMap":
        m = self.dim
        t = frame[0]
        rows = [0] * m
        for j in range(m):
            c = frame[j + 1] ^ t
            while c:
                low = c & -c
                rows[low.bit_length() - 1] |= 1 << j
                c ^= low
        out = AffineMap(Gf2Matrix(m, m, tuple(rows)), Gf2Vector(m, t), check=False)
        out._cols = tuple(f ^ t for f in frame[1:])
        return out


class DihedralElement(GroupElement):
    """The map ``x -> (-x if flip else x) + rot`` on Z/n.

    With apply-left-first products, ``h0 = (0, flip)`` and ``h1 = (1, flip)``
    satisfy ``h0 * h1 = (1, no flip)``, a rotation of order ``n``.
    """

    __slots__ = ("n", "rot", "flip", "key")

    def __init__(self, n: int, rot: int = 0, flip: bool = False):
        if n < 1:
            raise ValueError("dihedral modulus must be positive")
        self.n = n
        self.rot = rot % n
        self.flip = bool(flip)
        self.key = (int(self.flip), self.rot)

    @classmethod
    def h0(cls, n: int) -> "DihedralElement":
        return cls(n, 0, True)

    @classmethod
    def h1(cls, n: int) -> "DihedralElement":
        return cls(n, 1, True)

    def __repr__(self):
        return f"DihedralElement(n={self.n}, rot={self.rot}, flip={self.flip})"

    def identity(self) -> "DihedralElement":
        return DihedralElement(self.n)

    def is_identity(self) -> bool:
        return self.rot == 0 and not self.flip

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if not isinstance(other, DihedralElement):
            return NotImplemented
        if other.n != self.n:
            raise DimensionError("dihedral moduli differ")
        r = (-self.rot if other.flip else self.rot) + other.rot
        return DihedralElement(self.n, r, self.flip != other.flip)

    def inverse(self) -> "DihedralElement":
        if self.flip:
            return self
        return DihedralElement(self.n, -self.rot, False)

    # frame protocol: the regular action on the 2n group elements,
    # point rot + n*flip; the identity is the single base point

    def _point(self) -> int:
        return self.rot + self.n * self.flip

    def points(self) -> list[int]:
        n = self.n
        return [(DihedralElement(n, p % n, p >= n) * self)._point() for p in range(2 * n)]

    def frame_base(self) -> tuple[int, ...]:
        return (0,)

    def frame(self) -> tuple[int, ...]:
        return (self._point(),)

    def from_frame(self, frame: Sequence[int]) -> "DihedralElement":
        p = frame[0]
        return DihedralElement(self.n, p % self.n, p >= self.n)


class Permutation(GroupElement):
    """A permutation of ``0..degree-1``; ``(p * q)[x] == q[p[x]]``."""

    __slots__ = ("images", "key")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation")
        self.images = images
        self.key = images

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __getitem__(self, x: int) -> int:
        return self.images[x]

    def identity(self) -> "Permutation":
        return Permutation(range(self.degree))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DimensionError("permutation degrees differ")
        q = other.images
        out = Permutation.__new__(Permutation)
        out.images = out.key = tuple(q[x] for x in self.images)
        return out

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def points(self) -> tuple[int, ...]:
        return self.images

    def frame_base(self) -> tuple[int, ...]:
        return tuple(range(self.degree))

    def frame(self) -> tuple[int, ...]:
        return self.images

    def from_frame(self, frame: Sequence[int]) -> "Permutation":
        out = Permutation.__new__(Permutation)
        out.images = out.key = tuple(frame)
        return out


def compose(f: GroupElement, g: GroupElement) -> GroupElement:
    """``f`` first, then ``g``; same as ``f * g``."""
    return f * g


def element_order(g: GroupElement, cap: int = DEFAULT_CLOSURE_CAP) -> int:
    """Least ``k >= 1`` with ``g**k`` the identity."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    h = g
    for k in range(1, cap + 1):
        if h.is_identity():
            return k
        h = h * g
    raise OrderExceedsCap(f"order of {g!r} exceeds {cap}")


class GroupTable:
    """A fully enumerated group with its right Cayley graph.

    Index 0 is the identity.  ``right[k][i]`` is the index of
    ``element(i) * generators[k]``.  Element objects and the key index are
    materialized lazily.
    """

    def __init__(self, generators: Sequence[GroupElement], frames: list[tuple],
                 right: list[list[int]], template: GroupElement):
        self.generators = tuple(generators)
        self.frames = frames
        self.right = right
        self._template = template
        self._by_frame = None

    def __len__(self) -> int:
        return len(self.frames)

    @property
    def order(self) -> int:
        return len(self.frames)

    @cached_property
    def elements(self) -> list[GroupElement]:
        t = self._template
        return [t.from_frame(f) for f in self.frames]

    @cached_property
    def index(self) -> dict:
        """Canonical element key -> position."""
        return {e.key: i for i, e in enumerate(self.elements)}

    def identity(self) -> GroupElement:
        return self.elements[0]

    def __iter__(self):
        return iter(self.elements)

    def index_of(self, g: GroupElement) -> int:
        if self._by_frame is None:
            self._by_frame = {f: i for i, f in enumerate(self.frames)}
        try:
            return self._by_frame[tuple(g.frame())]
        except (KeyError, TypeError):
            raise KeyError(g) from None

    def __contains__(self, g) -> bool:
        try:
            self.index_of(g)
        except (KeyError, AttributeError):
            return False
        return True

    def keys(self) -> frozenset:
        return frozenset(self.index)

    def reachable(self, gen_ids: Iterable[int], start: int = 0) -> frozenset[int]:
        """Indices of ``element(start) * <generators[k] : k in gen_ids>``.

        With ``start = 0`` this is the subgroup generated by those
        generators; the empty set of generators gives the trivial subgroup.
        """
        cols = [self.right[k] for k in gen_ids]
        seen = {start}
        todo = [start]
        while todo:
            i = todo.pop()
            for col in cols:
                j = col[i]
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        return frozenset(seen)

    def word_index(self, word: Iterable[int], start: int = 0) -> int:
        """Index of ``element(start)`` times the generator word."""
        i = start
        for k in word:
            i = self.right[k][i]
        return i


def closure(generators: Sequence[GroupElement], cap: int = DEFAULT_CLOSURE_CAP) -> GroupTable:
    """Enumerate ``<generators>`` breadth first from the identity."""
    gens = list(generators)
    if not gens:
        raise ValueError("closure needs at least one generator")
    t = gens[0]
    base = t.frame_base()
    for g in gens[1:]:
        if type(g) is not type(t) or g.frame_base() != base:
            raise DimensionError("generators must share element family and dimension")
    frames, right = _backend.closure_frames([list(g.points()) for g in gens], base, cap)
    return GroupTable(gens, frames, right, t)


def trivial_group(identity: GroupElement) -> GroupTable:
    return closure([identity.identity()])


@dataclass(frozen=True)
class Coset:
    """One right coset ``K x``; ``members`` are indices into the big group."""

    representative: GroupElement
    members: frozenset

    @property
    def key(self):
        return self.representative.key

    def __len__(self):
        return len(self.members)


def coset_labels(group: GroupTable, subgroup) -> tuple[list[int], list[int]]:
    """Label every element of ``group`` with its right coset of ``subgroup``.

    ``subgroup`` is a :class:`GroupTable` or any sequence of elements that is
    already known to be closed.

    Returns ``(labels, reps)``: ``labels[i]`` is the coset number of element
    ``i`` and ``reps[c]`` is the group index of the smallest-key element of
    coset ``c``.  Cosets are numbered in increasing representative-key order.
    """
    sub = subgroup.elements if isinstance(subgroup, GroupTable) else list(subgroup)
    for k in sub:
        if k not in group:
            raise NotASubgroup(f"{k!r} is not an element of the group")
    elems = group.elements
    labels = [-1] * len(group)
    raw = []
    for i, x in enumerate(elems):
        if labels[i] >= 0:
            continue
        c = len(raw)
        members = []
        for k in sub:
            j = group.index_of(k * x)
            if labels[j] >= 0:
                raise NotASubgroup("cosets overlap; subgroup is not closed")
            labels[j] = c
            members.append(j)
        raw.append(min(members, key=lambda j: elems[j].key))
    order = sorted(range(len(raw)), key=lambda c: elems[raw[c]].key)
    renum = {c: r for r, c in enumerate(order)}
    return [renum[c] for c in labels], [raw[c] for c in order]


def coset_decomposition(group: GroupTable, subgroup: GroupTable) -> list[Coset]:
    """Partition ``group`` into right cosets ``K x`` of ``subgroup``."""
    labels, reps = coset_labels(group, subgroup)
    buckets = [set() for _ in reps]
    for i, c in enumerate(labels):
        buckets[c].add(i)
    return [Coset(group.elements[r], frozenset(b)) for r, b in zip(reps, buckets)]


def coset_closure_bound(group_generators: Sequence[GroupElement], subgroup: GroupTable,
                        coset_reps: Sequence[GroupElement]) -> tuple[bool, int]:
    """Check that ``{N h : h in coset_reps}`` is closed under right
    multiplication by every generator; if so ``|<gens>| <= |N| * len(reps)``.

    Membership of ``N h g`` in the set is decided by locating the single
    element ``h g``, since right cosets are equal or disjoint.
    """
    owner = {}
    n_elems = subgroup.elements
    for r, h in enumerate(coset_reps):
        for k in n_elems:
            key = (k * h).key
            if owner.setdefault(key, r) != r:
                raise ValueError("coset representatives are not in distinct cosets")
    for h in coset_reps:
        for g in group_generators:
            if (h * g).key not in owner:
                return False, 0
    return True, len(n_elems) * len(coset_reps)


def translation_subgroup(group: GroupTable) -> list[int]:
    """Indices of the pure translations in a group of affine maps."""
    return [i for i, e in enumerate(group.elements) if e.linear.is_identity()]


def bfs_words(group: GroupTable) -> list[tuple[int, ...]]:
    """A shortest generator word for every element, by index."""
    words: list = [None] * len(group)
    words[0] = ()
    q = deque([0])
    while q:
        i = q.popleft()
        for k, col in enumerate(group.right):
            j = col[i]
            if words[j] is None:
                words[j] = words[i] + (k,)
                q.append(j)
    return words

"""Face lattices built from string C-groups, and the polytope axioms.

A face is a pair ``(rank, index)``.  Proper faces of rank ``i`` are the right
cosets of ``G_i = <rho_j : j != i>``, numbered by increasing coset
representative key; the least face is ``(-1, 0)`` and the greatest is
``(d, 0)``.  ``incidence`` holds every comparable pair (lower rank first),
including the pairs involving the two improper faces.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .errors import SearchBudgetExceeded
from .groups import coset_labels
from .sggi import GeneratorSystem

Face = tuple[int, int]


@dataclass(frozen=True)
class Flag:
    """One face per rank from ``-1`` to ``d``."""

    faces: tuple[Face, ...]

    def __len__(self):
        return len(self.faces)

    def proper(self) -> tuple[int, ...]:
        return tuple(i for _, i in self.faces[1:-1])


@dataclass(eq=False)
class FaceLattice:
    rank: int
    faces: dict[int, tuple[int, ...]]
    incidence: frozenset
    labels: dict = field(default_factory=dict)

    @classmethod
    def from_proper(cls, rank: int, faces: dict[int, tuple[int, ...]], pairs,
                    labels: Optional[dict] = None) -> "FaceLattice":
        """Add the improper faces and their incidences to a proper-face poset."""
        faces = {r: tuple(faces.get(r, ())) for r in range(rank)}
        faces[-1] = (0,)
        faces[rank] = (0,)
        inc = set()
        for a, b in pairs:
            inc.add((a, b) if a[0] < b[0] else (b, a))
        bottom, top = (-1, 0), (rank, 0)
        for r in range(rank):
            for i in faces[r]:
                inc.add((bottom, (r, i)))
                inc.add(((r, i), top))
        inc.add((bottom, top))
        return cls(rank, faces, frozenset(inc), dict(labels or {}))

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces[r]) for r in range(self.rank))

    def all_faces(self) -> list[Face]:
        return [(r, i) for r in range(-1, self.rank + 1) for i in self.faces[r]]

    @cached_property
    def neighbours(self) -> dict[Face, frozenset]:
        nb = defaultdict(set)
        for a, b in self.incidence:
            nb[a].add(b)
            nb[b].add(a)
        return {f: frozenset(nb[f]) for f in self.all_faces()}

    def incident(self, a: Face, b: Face) -> bool:
        return a == b or (a, b) in self.incidence or (b, a) in self.incidence

    def without_face(self, face: Face) -> "FaceLattice":
        r, i = face
        faces = dict(self.faces)
        faces[r] = tuple(x for x in faces[r] if x != i)
        inc = frozenset(p for p in self.incidence if face not in p)
        return FaceLattice(self.rank, faces, inc, dict(self.labels))

    def __repr__(self):
        return f"FaceLattice(rank={self.rank}, f_vector={self.f_vector})"


def build_lattice(sys: GeneratorSystem) -> FaceLattice:
    """Coset lattice of a string C-group; incidence is coset intersection."""
    d = sys.rank
    group = sys.group
    elems = group.elements
    labels_by_rank = []
    faces = {}
    labels = {}
    for i in range(d):
        others = [j for j in range(d) if j != i]
        sub = [elems[k] for k in sorted(sys.parabolic(others))]
        lab, reps = coset_labels(group, sub)
        labels_by_rank.append(lab)
        faces[i] = tuple(range(len(reps)))
        labels[i] = tuple(elems[r].key for r in reps)
    pairs = set()
    for x in range(len(group)):
        for i in range(d):
            for j in range(i + 1, d):
                pairs.add(((i, labels_by_rank[i][x]), (j, labels_by_rank[j][x])))
    return FaceLattice.from_proper(d, faces, pairs, labels)


def check_diamond(lat: FaceLattice) -> bool:
    nb = lat.neighbours
    for a, b in lat.incidence:
        if b[0] - a[0] != 2:
            continue
        mid = [h for h in nb[a] & nb[b] if h[0] == a[0] + 1]
        if len(mid) != 2:
            return False
    return True


def enumerate_flags(lat: FaceLattice) -> list[Flag]:
    """All chains with one face of every rank, in lexicographic order."""
    d = lat.rank
    nb = lat.neighbours
    out = []
    chain = [(-1, 0)]

    def extend(r):
        if r == d:
            out.append(Flag(tuple(chain) + ((d, 0),)))
            return
        for i in lat.faces[r]:
            f = (r, i)
            if all(c in nb[f] for c in chain):
                chain.append(f)
                extend(r + 1)
                chain.pop()

    extend(0)
    return out


def flag_adjacency(flags: list[Flag], rank: int) -> list[list[list[int]]]:
    """``adj[k][i]`` lists the flags differing from flag ``k`` only at rank ``i``."""
    adj = [[[] for _ in range(rank)] for _ in flags]
    for i in range(rank):
        buckets = defaultdict(list)
        for k, fl in enumerate(flags):
            p = fl.proper()
            buckets[p[:i] + p[i + 1:]].append(k)
        for members in buckets.values():
            for k in members:
                adj[k][i] = [m for m in members if m != k]
    return adj


def check_strong_connectivity(lat: FaceLattice) -> bool:
    """Flag graph is connected and every flag has exactly one i-neighbour
    for each proper rank ``i``."""
    flags = enumerate_flags(lat)
    if not flags:
        return False
    adj = flag_adjacency(flags, lat.rank)
    if any(len(a) != 1 for row in adj for a in row):
        return False
    seen = {0}
    todo = [0]
    while todo:
        k = todo.pop()
        for a in adj[k]:
            for m in a:
                if m not in seen:
                    seen.add(m)
                    todo.append(m)
    return len(seen) == len(flags)


def dual_lattice(lat: FaceLattice) -> FaceLattice:
    d = lat.rank

    def flip(f):
        return (d - 1 - f[0], f[1])

    faces = {d - 1 - r: lat.faces[r] for r in range(-1, d + 1)}
    inc = frozenset((flip(b), flip(a)) for a, b in lat.incidence)
    labels = {d - 1 - r: v for r, v in lat.labels.items()}
    return FaceLattice(d, faces, inc, labels)


def _signature(lat: FaceLattice, f: Face):
    counts = defaultdict(int)
    for g in lat.neighbours[f]:
        counts[g[0]] += 1
    return (f[0], tuple(sorted(counts.items())))


def lattices_isomorphic(a: FaceLattice, b: FaceLattice, budget: int = 1_000_000) -> bool:
    """Exact search for a rank- and incidence-preserving bijection.

    Candidate images are pruned by rank and per-rank neighbour counts, and
    each assignment restricts the domains of incident faces to the
    neighbours of the image.  Because the edge counts agree, an injective
    incidence-preserving map is automatically an isomorphism.
    """
    if a.rank != b.rank or a.f_vector != b.f_vector:
        return False
    if len(a.incidence) != len(b.incidence):
        return False
    if _count_signatures(a) != _count_signatures(b):
        return False
    fa, fb = a.all_faces(), b.all_faces()
    sig_b = defaultdict(set)
    for g in fb:
        sig_b[_signature(b, g)].add(g)
    domains = {}
    for f in fa:
        dom = sig_b.get(_signature(a, f))
        if not dom:
            return False
        domains[f] = set(dom)
    na, nb = a.neighbours, b.neighbours
    nodes = 0

    def search(domains, used):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"isomorphism search exceeded {budget} nodes")
        if not domains:
            return True
        x = min(domains, key=lambda f: len(domains[f]))
        for y in sorted(domains[x] - used):
            rest = {}
            ok = True
            nby = nb[y]
            for z, dom in domains.items():
                if z == x:
                    continue
                if z in na[x]:
                    dom = dom & nby
                dom = dom - {y} if y in dom else dom
                if not dom:
                    ok = False
                    break
                rest[z] = dom
            if ok and search(rest, used | {y}):
                return True
        return False

    return search(domains, frozenset())


def _count_signatures(lat: FaceLattice) -> dict:
    counts = defaultdict(int)
    for f in lat.all_faces():
        counts[_signature(lat, f)] += 1
    return counts


def simplex_boundary(d: int) -> FaceLattice:
    """Faces of the ``d``-simplex: nonempty proper vertex subsets of size
    ``r + 1`` for rank ``r``, ordered by inclusion.  Built without groups."""
    from itertools import combinations

    verts = range(d + 1)
    subsets = {r: sorted(combinations(verts, r + 1)) for r in range(d)}
    faces = {r: tuple(range(len(subsets[r]))) for r in range(d)}
    pairs = set()
    for r in range(d):
        for s in range(r + 1, d):
            for i, x in enumerate(subsets[r]):
                for j, y in enumerate(subsets[s]):
                    if set(x) <= set(y):
                        pairs.add(((r, i), (s, j)))
    return FaceLattice.from_proper(d, faces, pairs)


def disjoint_union(a: FaceLattice, b: FaceLattice) -> FaceLattice:
    """Proper faces of ``a`` and ``b`` side by side under shared improper faces."""
    if a.rank != b.rank:
        raise ValueError("ranks differ")
    d = a.rank
    shift = {r: max(a.faces[r], default=-1) + 1 for r in range(d)}
    faces = {r: a.faces[r] + tuple(i + shift[r] for i in b.faces[r]) for r in range(d)}
    pairs = [(x, y) for x, y in a.incidence if 0 <= x[0] and y[0] < d]
    pairs += [((x[0], x[1] + shift[x[0]]), (y[0], y[1] + shift[y[0]]))
              for x, y in b.incidence if 0 <= x[0] and y[0] < d]
    return FaceLattice.from_proper(d, faces, pairs)


# export

def _node(f: Face) -> str:
    return f'"{f[0]}:{f[1]}"'


def hasse_dot(lat: FaceLattice, name: str = "hasse") -> str:
    """Hasse diagram: one node per face, an edge per covering pair."""
    lines = [f"graph {name} {{"]
    for r in range(-1, lat.rank + 1):
        for i in lat.faces[r]:
            lines.append(f"  {_node((r, i))} [rank={r}];")
    covers = sorted((a, b) for a, b in lat.incidence if b[0] - a[0] == 1)
    for a, b in covers:
        lines.append(f"  {_node(a)} -- {_node(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def flag_graph_dot(lat: FaceLattice, name: str = "flags") -> str:
    """Flag graph: flags in lexicographic order, edges labelled by rank."""
    flags = enumerate_flags(lat)
    adj = flag_adjacency(flags, lat.rank)
    lines = [f"graph {name} {{"]
    for k, fl in enumerate(flags):
        lines.append(f'  f{k} [label="{" ".join(map(str, fl.proper()))}"];')
    for k in range(len(flags)):
        for i, others in enumerate(adj[k]):
            for m in others:
                if k < m:
                    lines.append(f"  f{k} -- f{m} [label={i}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_summary(lat: FaceLattice) -> dict:
    flags = enumerate_flags(lat)
    return {
        "rank": lat.rank,
        "f_vector": list(lat.f_vector),
        "flag_count": len(flags),
        "diamond": check_diamond(lat),
        "strongly_connected": check_strong_connectivity(lat),
    }


def lattice_json(lat: FaceLattice) -> str:
    return json.dumps(lattice_summary(lat), indent=2) + "\n"

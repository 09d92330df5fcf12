"""Finitely presented groups on involutory generators.

Words are tuples of generator indices.  Every generator is an involution, so
there are no inverse letters and ``x x`` cancels.

Presentation text format::

    gens 3
    0 0
    0 2 0 2
    0 1 0 1 0 1

The first line gives the generator count; each further line is one relator
as space-separated indices.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import _backend
from .construction import build_generators, build_group
from .errors import CosetOverflow, RegpolyError
from .groups import GroupElement, Permutation
from .sggi import GeneratorSystem, check_sggi, intersection_condition_full

DEFAULT_MAX_COSETS = int(os.environ.get("REGPOLY_MAX_COSETS", 1_000_000))


class Word(tuple):
    """A freely reduced word in involutory generators.

    ``Word.square(i)`` is the one exception to reduction: it keeps the
    letters ``i i`` so that a presentation can list its involution relators.
    """

    def __new__(cls, letters: Iterable[int] = ()):
        out = []
        for x in letters:
            x = int(x)
            if x < 0:
                raise ValueError("generator indices are non-negative")
            if out and out[-1] == x:
                out.pop()
            else:
                out.append(x)
        return super().__new__(cls, out)

    @classmethod
    def square(cls, i: int) -> "Word":
        return super().__new__(cls, (i, i))

    @classmethod
    def alternating(cls, i: int, j: int, k: int) -> "Word":
        """``(x_i x_j)^k``."""
        return cls((i, j) * k)

    def is_involution_relator(self) -> bool:
        return len(self) == 2 and self[0] == self[1]

    def __mul__(self, other):
        return Word(tuple(self) + tuple(other))

    def __pow__(self, k: int) -> "Word":
        return Word(tuple(self) * k)

    def substitute(self, mapping: Sequence[int]) -> "Word":
        letters = [mapping[x] for x in self]
        if self.is_involution_relator():
            return Word.square(letters[0])
        return Word(letters)

    def __repr__(self):
        return f"Word({list(self)})"


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        for w in self.relators:
            if any(x >= self.generator_count for x in w):
                raise ValueError(f"relator {list(w)} uses a generator >= {self.generator_count}")

    def __len__(self):
        return len(self.relators)

    def to_text(self) -> str:
        lines = [f"gens {self.generator_count}"]
        lines += [" ".join(map(str, w)) for w in self.relators]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines or not lines[0].startswith("gens"):
            raise ValueError("presentation must start with a 'gens d' line")
        head = lines[0].split()
        if len(head) != 2:
            raise ValueError("malformed 'gens d' line")
        d = int(head[1])
        if d < 1:
            raise ValueError("generator count must be positive")
        rels = []
        for ln in lines[1:]:
            letters = [int(t) for t in ln.split()]
            if any(x >= d or x < 0 for x in letters):
                raise ValueError(f"relator '{ln}' uses an index outside 0..{d - 1}")
            if len(letters) == 2 and letters[0] == letters[1]:
                rels.append(Word.square(letters[0]))
            else:
                rels.append(Word(letters))
        return cls(d, tuple(rels))


def coxeter_relators(schlafli: Sequence[int]) -> list[Word]:
    """Involutions, commuting non-adjacent pairs, then adjacent products."""
    d = len(schlafli) + 1
    rels = [Word.square(i) for i in range(d)]
    rels += [Word.alternating(i, j, 2) for i in range(d) for j in range(i + 2, d)]
    rels += [Word.alternating(i, i + 1, p) for i, p in enumerate(schlafli)]
    return rels


def _extra_relator(r: int, k: int) -> Word:
    """``((x_{r+1} x_{r+2})^k (x_r x_{r+1})^k)^2``."""
    inner = tuple(Word.alternating(r + 1, r + 2, k)) + tuple(Word.alternating(r, r + 1, k))
    return Word(inner * 2)


def paper_presentation(n: int) -> Presentation:
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    return conjecture_presentation(3, n)


def conjecture_presentation(d: int, n: int) -> Presentation:
    """Coxeter relators of ``[n, ..., n]`` (rank ``d``) plus the squared
    products ``((x_{r+1}x_{r+2})^k (x_r x_{r+1})^k)^2``."""
    if d < 3 or n < 3:
        raise ValueError(f"need d >= 3 and n >= 3, got d={d}, n={n}")
    rels = coxeter_relators([n] * (d - 1))
    rels += [_extra_relator(r, k) for r in range(d - 2) for k in range(1, n)]
    return Presentation(d, tuple(rels))


@dataclass
class CosetTable:
    """A completed coset table; ``columns[x][c]`` is coset ``c`` times ``x``."""

    columns: list[list[int]]
    defined: int = 0
    strategy: str = "hlt"

    @property
    def index(self) -> int:
        return len(self.columns[0]) if self.columns else 1

    def permutations(self) -> list[Permutation]:
        """Generator actions on the cosets (right action)."""
        return [Permutation(col) for col in self.columns]

    def is_involutory(self) -> bool:
        return all(col[col[c]] == c for col in self.columns for c in range(len(col)))


@dataclass
class EnumerationResult:
    index: int
    table: CosetTable


STRATEGIES = {"hlt": "enumerate_hlt", "felsch": "enumerate_felsch"}


def todd_coxeter(p: Presentation, subgroup_words: Sequence[Sequence[int]] = (),
                 max_cosets: int = DEFAULT_MAX_COSETS,
                 strategy: str = "hlt") -> EnumerationResult:
    """Index of ``<subgroup_words>`` in the group presented by ``p``.

    Raises :class:`CosetOverflow` if more than ``max_cosets`` cosets are live
    at once; that is inconclusive, not a proof of infinitude.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    for w in subgroup_words:
        if any(x >= p.generator_count for x in w):
            raise ValueError("subgroup word uses an unknown generator")
    kernel = getattr(_backend, STRATEGIES[strategy])
    rels = [list(w) for w in p.relators if w]
    cols, defined = kernel(p.generator_count, rels, [list(w) for w in subgroup_words], max_cosets)
    table = CosetTable(cols, defined, strategy)
    return EnumerationResult(table.index, table)


def evaluate(word: Iterable[int], generators: Sequence[GroupElement]) -> GroupElement:
    result = generators[0].identity()
    for x in word:
        result = result * generators[x]
    return result


def relators_hold(p: Presentation, generators: Sequence[GroupElement]) -> bool:
    return all(evaluate(w, generators).is_identity() for w in p.relators)


@dataclass(frozen=True)
class PresentationReport:
    relators_hold: bool
    orders_equal: bool
    enumerated_order: int
    group_order: int

    @property
    def ok(self) -> bool:
        return self.relators_hold and self.orders_equal


def verify_presentation(n: int, max_cosets: int = DEFAULT_MAX_COSETS,
                        presentation: Optional[Presentation] = None,
                        strategy: str = "hlt") -> PresentationReport:
    """Relators hold on the concrete generators, and coset enumeration of
    the presented group gives the concrete group order."""
    p = paper_presentation(n) if presentation is None else presentation
    gens = build_generators(n).as_list()
    holds = relators_hold(p, gens)
    order = build_group(n).order
    enumerated = todd_coxeter(p, (), max_cosets, strategy).index
    return PresentationReport(holds, enumerated == order, enumerated, order)


def check_self_dual(sys: GeneratorSystem, p: Presentation,
                    mapping: Optional[Sequence[int]] = None) -> bool:
    """Substitute ``rho_i -> rho_{mapping[i]}`` (default ``d-1-i``) into every
    relator and evaluate in the concrete group.

    All identities means the substitution extends to an endomorphism; since
    the images are the whole generating set and the group is finite, it is
    an automorphism.  The default reversal is involutory by construction.
    """
    d = sys.rank
    if p.generator_count != d:
        raise ValueError("presentation and system have different ranks")
    if mapping is None:
        mapping = [d - 1 - i for i in range(d)]
    images = [sys.generators[mapping[i]] for i in range(d)]
    if {g.key for g in images} != {g.key for g in sys.generators}:
        return False
    return relators_hold(p, images)


@dataclass
class SweepRecord:
    d: int
    n: int
    status: str
    order: Optional[int] = None
    schlafli: Optional[list[int]] = None
    string_c: Optional[bool] = None
    detail: Optional[str] = None

    def to_dict(self) -> dict:
        return {"d": self.d, "n": self.n, "status": self.status, "order": self.order,
                "type": self.schlafli, "string_c": self.string_c, "detail": self.detail}


def conjecture_record(d: int, n: int, max_cosets: int = DEFAULT_MAX_COSETS,
                      strategy: str = "hlt") -> SweepRecord:
    try:
        res = todd_coxeter(conjecture_presentation(d, n), (), max_cosets, strategy)
    except CosetOverflow as exc:
        return SweepRecord(d, n, "inconclusive", detail=str(exc))
    try:
        # the action on cosets of the trivial subgroup is regular
        sys = GeneratorSystem.from_generators(res.table.permutations(), cap=res.index + 1)
        if sys.group.order != res.index:
            return SweepRecord(d, n, "error", res.index,
                               detail=f"permutation group has order {sys.group.order}")
        rep = check_sggi(sys)
        string_c = rep.ok and intersection_condition_full(sys)
    except RegpolyError as exc:
        return SweepRecord(d, n, "error", res.index, detail=str(exc))
    return SweepRecord(d, n, "finite", res.index, list(rep.schlafli), string_c)


def conjecture_sweep(d_range: Iterable[int], n_range: Iterable[int],
                     max_cosets: int = DEFAULT_MAX_COSETS,
                     strategy: str = "hlt") -> list[SweepRecord]:
    d_range, n_range = list(d_range), list(n_range)
    if not d_range or not n_range:
        raise ValueError("sweep ranges must be nonempty")
    return [conjecture_record(d, n, max_cosets, strategy)
            for d, n in itertools.product(d_range, n_range)]

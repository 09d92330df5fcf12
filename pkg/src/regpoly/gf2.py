"""Dense linear algebra over GF(2) with rows packed into Python integers.

Bit ``j`` of a packed row (or vector) is the entry in column ``j``.  Python
integers are arbitrary precision, so one row is one machine-word sequence and
row operations are single XORs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionError


def _mask(width: int) -> int:
    return (1 << width) - 1


@dataclass(frozen=True)
class Gf2Vector:
    """A column vector in GF(2)^dim."""

    dim: int
    bits: int = 0

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("vector dimension must be positive")
        if self.bits >> self.dim:
            raise ValueError("padding bits beyond dim must be zero")

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> "Gf2Vector":
        bits = 0
        for j, e in enumerate(entries):
            if e & 1:
                bits |= 1 << j
        return cls(len(entries), bits)

    @classmethod
    def unit(cls, dim: int, i: int) -> "Gf2Vector":
        return cls(dim, 1 << i)

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.dim)]

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.dim:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __add__(self, other: "Gf2Vector") -> "Gf2Vector":
        if self.dim != other.dim:
            raise DimensionError(f"cannot add vectors of dim {self.dim} and {other.dim}")
        return Gf2Vector(self.dim, self.bits ^ other.bits)

    __sub__ = __add__

    def is_zero(self) -> bool:
        return self.bits == 0

    def __str__(self):
        return "".join(str(b) for b in self.to_list())


@dataclass(frozen=True)
class Gf2Matrix:
    """An immutable rows x cols matrix over GF(2), stored row-major."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 1 or self.ncols < 1:
            raise DimensionError("matrix dimensions must be positive")
        if len(self.rows) != self.nrows:
            raise DimensionError("row count does not match nrows")
        m = _mask(self.ncols)
        if any(r & ~m for r in self.rows):
            raise ValueError("padding bits beyond ncols must be zero")

    # construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Gf2Matrix":
        ncols = len(rows[0]) if rows else 0
        packed = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged row list")
            packed.append(Gf2Vector.from_list(r).bits)
        return cls(len(rows), ncols, tuple(packed))

    @classmethod
    def from_columns(cls, columns: Sequence[Gf2Vector]) -> "Gf2Matrix":
        nrows = columns[0].dim
        rows = [0] * nrows
        for j, c in enumerate(columns):
            if c.dim != nrows:
                raise DimensionError("columns of unequal dimension")
            b = c.bits
            while b:
                low = b & -b
                rows[low.bit_length() - 1] |= 1 << j
                b ^= low
        return cls(nrows, len(columns), tuple(rows))

    @classmethod
    def identity(cls, size: int) -> "Gf2Matrix":
        return cls(size, size, tuple(1 << i for i in range(size)))

    @classmethod
    def zeros(cls, nrows: int, ncols: Optional[int] = None) -> "Gf2Matrix":
        ncols = nrows if ncols is None else ncols
        return cls(nrows, ncols, (0,) * nrows)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(ij)
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def column(self, j: int) -> Gf2Vector:
        bits = 0
        for i, r in enumerate(self.rows):
            if (r >> j) & 1:
                bits |= 1 << i
        return Gf2Vector(self.nrows, bits)

    def columns(self) -> list[Gf2Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix.from_columns([Gf2Vector(self.ncols, r) for r in self.rows])

    def is_zero(self) -> bool:
        return not any(self.rows)

    def is_identity(self) -> bool:
        return self.is_square and all(r == 1 << i for i, r in enumerate(self.rows))

    # arithmetic

    def __add__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Gf2Matrix(self.nrows, self.ncols,
                         tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    __sub__ = __add__

    def __matmul__(self, other):
        if isinstance(other, Gf2Vector):
            if other.dim != self.ncols:
                raise DimensionError(f"cannot apply {self.shape} matrix to dim {other.dim}")
            return Gf2Vector(self.nrows, self.apply_bits(other.bits))
        if isinstance(other, Gf2Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            brows = other.rows
            out = []
            for r in self.rows:
                acc = 0
                while r:
                    low = r & -r
                    acc ^= brows[low.bit_length() - 1]
                    r ^= low
                out.append(acc)
            return Gf2Matrix(self.nrows, other.ncols, tuple(out))
        return NotImplemented

    def apply_bits(self, v: int) -> int:
        """Matrix-vector product on a packed vector."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def __pow__(self, k: int) -> "Gf2Matrix":
        return mat_pow(self, k)

    def __str__(self):
        return "\n".join("".join(str(b) for b in row) for row in self.to_lists())


def mat_pow(m: Gf2Matrix, k: int) -> Gf2Matrix:
    """``m**k`` by repeated squaring; ``m**0`` is the identity."""
    if not m.is_square:
        raise DimensionError("matrix power needs a square matrix")
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = Gf2Matrix.identity(m.nrows)
    base = m
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


@dataclass(frozen=True)
class Elimination:
    det: int
    rank: int
    inverse: Optional[Gf2Matrix]


def rank(m: Gf2Matrix) -> int:
    rows = list(m.rows)
    r = 0
    for col in range(m.ncols):
        bit = 1 << col
        piv = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        r += 1
    return r


def det_rank_inverse(m: Gf2Matrix) -> Elimination:
    """Gauss-Jordan elimination; the inverse is present exactly when det is 1.

    Rank works for any shape.  Determinant and inverse need a square matrix.
    """
    if not m.is_square:
        raise DimensionError("determinant and inverse need a square matrix")
    size = m.nrows
    # augmented rows: low bits hold m, high bits hold the identity
    rows = [r | (1 << (size + i)) for i, r in enumerate(m.rows)]
    r = 0
    for col in range(size):
        bit = 1 << col
        piv = next((i for i in range(r, size) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(size):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        r += 1
    if r < size:
        return Elimination(0, r, None)
    inv = Gf2Matrix(size, size, tuple(row >> size for row in rows))
    return Elimination(1, size, inv)


def inverse(m: Gf2Matrix) -> Gf2Matrix:
    inv = det_rank_inverse(m).inverse
    if inv is None:
        raise ValueError("matrix is singular over GF(2)")
    return inv


def matrix_sum(ms: Iterable[Gf2Matrix]) -> Gf2Matrix:
    total = None
    for m in ms:
        total = m if total is None else total + m
    if total is None:
        raise ValueError("empty sum")
    return total


# Matrices of the {n,n} construction.  All take n (the Schlafli entry) and
# live in dimension n - 1.

def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")


def circulant_a(n: int) -> Gf2Matrix:
    """Ones on the superdiagonal and across the last row."""
    _check_n(n)
    m = n - 1
    rows = [1 << (i + 1) for i in range(m - 1)] + [_mask(m)]
    return Gf2Matrix(m, m, tuple(rows))


def matrices_u_v(n: int) -> tuple[Gf2Matrix, Gf2Matrix]:
    """The involutions ``U`` and ``V`` whose product ``UV`` is ``circulant_a(n)``.

    ``U`` reverses the first ``n - 2`` coordinates and puts all ones in its
    last row; ``V`` is the anti-diagonal identity.
    """
    _check_n(n)
    m = n - 1
    u_rows = [1 << (m - 2 - i) for i in range(m - 1)] + [_mask(m)]
    v_rows = [1 << (m - 1 - i) for i in range(m)]
    return Gf2Matrix(m, m, tuple(u_rows)), Gf2Matrix(m, m, tuple(v_rows))


def vector_u(n: int) -> Gf2Vector:
    """(0, ..., 0, 1)."""
    _check_n(n)
    return Gf2Vector.unit(n - 1, n - 2)


def vector_v(n: int) -> Gf2Vector:
    """(1, 0, ..., 0)."""
    _check_n(n)
    return Gf2Vector.unit(n - 1, 0)


def krylov_matrix(n: int) -> Gf2Matrix:
    """Columns ``v, Av, ..., A^(n-2) v``."""
    a = circulant_a(n)
    cols = [vector_v(n)]
    for _ in range(n - 2):
        cols.append(a @ cols[-1])
    return Gf2Matrix.from_columns(cols)


def partial_sum_matrix(n: int) -> Gf2Matrix:
    """Column ``k`` (1-based) is ``v + Av + ... + A^(k-1) v``."""
    a = circulant_a(n)
    term = vector_v(n)
    acc = term
    cols = [acc]
    for _ in range(n - 2):
        term = a @ term
        acc = acc + term
        cols.append(acc)
    return Gf2Matrix.from_columns(cols)


def annihilator_check(n: int) -> bool:
    """True iff ``I + A + ... + A^(n-1)`` vanishes for ``A = circulant_a(n)``."""
    a = circulant_a(n)
    power = Gf2Matrix.identity(n - 1)
    total = power
    for _ in range(n - 1):
        power = power @ a
        total = total + power
    return total.is_zero()

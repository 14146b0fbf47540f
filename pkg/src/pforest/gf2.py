"""Vectors over GF(2) and an incrementally maintained basis of edge vectors.

Vectors are packed into Python ints: coordinate ``k`` (1-based) lives in
bit ``k - 1``.  XOR of two ints is word-at-a-time, so dimensions in the
hundreds of thousands stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence


class InvalidEdgeError(ValueError):
    """An edge vector was requested for a loop or an out-of-range vertex."""


class DimensionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class BitVector:
    """An immutable element of GF(2)^length."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"dimension must be positive, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits set outside coordinates 1..{self.length}")

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls(length, (1 << length) - 1)

    @classmethod
    def from_coordinates(cls, length: int, coords: Iterable[int]) -> BitVector:
        bits = 0
        for k in coords:
            if not 1 <= k <= length:
                raise ValueError(f"coordinate {k} outside 1..{length}")
            bits ^= 1 << (k - 1)
        return cls(length, bits)

    @classmethod
    def from_string(cls, text: str) -> BitVector:
        """Parse ``"1100"`` style strings; the first character is coordinate 1."""
        bits = 0
        for k, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << k
            elif ch != "0":
                raise ValueError(f"not a bit string: {text!r}")
        return cls(len(text), bits)

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= self.length:
            raise IndexError(k)
        return (self.bits >> (k - 1)) & 1

    def __xor__(self, other: BitVector) -> BitVector:
        if not isinstance(other, BitVector):
            return NotImplemented
        if other.length != self.length:
            raise DimensionMismatchError(f"{self.length} != {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def __bool__(self) -> bool:
        return self.bits != 0

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def support(self) -> list[int]:
        return [k + 1 for k in range(self.length) if (self.bits >> k) & 1]

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> k) & 1 else "0" for k in range(self.length))


def edge_vector(i: int, j: int, n: int) -> BitVector:
    """The vector of GF(2)^n whose only nonzero coordinates are ``i`` and ``j``."""
    if i == j:
        raise InvalidEdgeError(f"loop at vertex {i} has no edge vector")
    for k in (i, j):
        if not 1 <= k <= n:
            raise InvalidEdgeError(f"vertex {k} outside 1..{n}")
    return BitVector(n, (1 << (i - 1)) | (1 << (j - 1)))


def xor_sum(vectors: Iterable[BitVector], length: int | None = None) -> BitVector:
    """Coordinate-wise XOR of ``vectors``.

    ``length`` is needed only to type the empty sum; when given it must
    agree with every summand.
    """
    bits = 0
    for v in vectors:
        if length is None:
            length = v.length
        elif v.length != length:
            raise DimensionMismatchError(f"{v.length} != {length}")
        bits ^= v.bits
    if length is None:
        raise ValueError("empty sum needs an explicit length")
    return BitVector(length, bits)


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank of int-packed rows, by plain elimination on the highest bit."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                rank += 1
                break
            row ^= pivots[top]
    return rank


class EdgeBasis:
    """A linearly independent family of labelled vectors with span queries.

    Each stored row is kept with its lowest set bit as a unique pivot and
    carries a bitmask over member positions recording which members it
    is the sum of.  Reducing a query against the rows therefore yields,
    for free, the member combination that produced it.
    """

    def __init__(self, dimension: int) -> None:
        if dimension < 1:
            raise ValueError(f"dimension must be positive, got {dimension}")
        self.dimension = dimension
        self.members: list[tuple[Hashable, BitVector]] = []
        # pivot bit -> (reduced row, combination mask over member positions)
        self._rows: dict[int, tuple[int, int]] = {}

    @classmethod
    def from_members(
        cls, dimension: int, members: Iterable[tuple[Hashable, BitVector]]
    ) -> EdgeBasis:
        basis = cls(dimension)
        for ident, v in members:
            if basis.try_insert(ident, v) is not None:
                raise ValueError(f"member {ident!r} is dependent on earlier members")
        return basis

    def __len__(self) -> int:
        return len(self.members)

    def ids(self) -> list[Hashable]:
        return [ident for ident, _ in self.members]

    def copy(self) -> EdgeBasis:
        other = EdgeBasis(self.dimension)
        other.members = list(self.members)
        other._rows = dict(self._rows)
        return other

    def _check(self, v: BitVector) -> None:
        if v.length != self.dimension:
            raise DimensionMismatchError(f"{v.length} != {self.dimension}")

    def _reduce(self, bits: int) -> tuple[int, int]:
        combo = 0
        rows = self._rows
        while bits:
            low = (bits & -bits).bit_length() - 1
            hit = rows.get(low)
            if hit is None:
                break
            bits ^= hit[0]
            combo ^= hit[1]
        return bits, combo

    def _ids_of(self, combo: int) -> list[Hashable]:
        out = []
        pos = 0
        while combo:
            if combo & 1:
                out.append(self.members[pos][0])
            combo >>= 1
            pos += 1
        return out

    def try_insert(self, ident: Hashable, v: BitVector) -> list[Hashable] | None:
        """Append ``v`` if it is independent of the members.

        Returns ``None`` when ``v`` was inserted.  Otherwise the basis is
        left untouched and the (unique) list of member ids whose vectors
        XOR to ``v`` is returned, in member order; the zero vector gives
        an empty list.
        """
        self._check(v)
        residue, combo = self._reduce(v.bits)
        if residue == 0:
            return self._ids_of(combo)
        pos = len(self.members)
        self.members.append((ident, v))
        low = (residue & -residue).bit_length() - 1
        self._rows[low] = (residue, combo ^ (1 << pos))
        return None

    def represent(self, v: BitVector) -> list[Hashable] | None:
        """Member ids whose vectors XOR to ``v``, or ``None`` if ``v`` is outside the span."""
        self._check(v)
        residue, combo = self._reduce(v.bits)
        if residue:
            return None
        return self._ids_of(combo)

    def contains(self, v: BitVector) -> bool:
        return self.represent(v) is not None

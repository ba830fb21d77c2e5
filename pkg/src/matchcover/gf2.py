"""GF(2) linear algebra on word-packed bit vectors (plain Python ints).

Bit i of a vector is coordinate i (an edge id, in this package).  Bases
are kept fully reduced: pivots strictly increasing, each pivot bit zero in
every other basis row, so membership is a single reduction pass and equal
subspaces have identical basis lists.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DimensionMismatch, DimensionTooLargeError


def _lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


class Gf2Subspace:
    """Row-reduced basis of GF(2) vectors of a fixed ambient dimension."""

    __slots__ = ("ambient_dim", "_rows")

    def __init__(self, ambient_dim: int, vectors: Iterable[int] = ()):
        self.ambient_dim = ambient_dim
        self._rows: list[int] = []   # sorted by pivot (lowest set bit)
        for v in vectors:
            self.insert(v)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def basis(self) -> tuple[int, ...]:
        return tuple(self._rows)

    def _check(self, v: int) -> None:
        if v < 0 or v >> self.ambient_dim:
            raise DimensionMismatch(
                f"vector does not fit ambient dimension {self.ambient_dim}")

    def reduce(self, v: int) -> int:
        """Residual of v after elimination against the basis."""
        self._check(v)
        for row in self._rows:
            if v >> _lowest_bit(row) & 1:
                v ^= row
        return v

    def insert(self, v: int) -> bool:
        """Absorb v; returns True iff the dimension grew."""
        v = self.reduce(v)
        if v == 0:
            return False
        piv = _lowest_bit(v)
        # back-eliminate the new pivot from existing rows
        for i, row in enumerate(self._rows):
            if row >> piv & 1:
                self._rows[i] = row ^ v
        self._rows.append(v)
        self._rows.sort(key=_lowest_bit)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def coset_contains(self, shift: int, v: int) -> bool:
        """Membership of v in the coset shift + span."""
        self._check(shift)
        return self.contains(v ^ shift)

    def copy(self) -> "Gf2Subspace":
        s = Gf2Subspace(self.ambient_dim)
        s._rows = list(self._rows)
        return s

    def orthogonal_complement(self) -> "Gf2Subspace":
        """{x : x . b = 0 for all basis rows b}; dim = ambient - dim."""
        pivots = [_lowest_bit(r) for r in self._rows]
        pivot_set = set(pivots)
        comp = Gf2Subspace(self.ambient_dim)
        for f in range(self.ambient_dim):
            if f in pivot_set:
                continue
            vec = 1 << f
            for piv, row in zip(pivots, self._rows):
                if row >> f & 1:
                    vec |= 1 << piv
            comp.insert(vec)
        return comp

    def members(self, max_dim: int = 24) -> Iterator[int]:
        """All 2^dim members once each, Gray-code order over the basis."""
        if self.dim > max_dim:
            raise DimensionTooLargeError(
                f"dim {self.dim} exceeds enumeration limit {max_dim}")
        cur = 0
        yield cur
        for i in range(1, 1 << self.dim):
            cur ^= self._rows[_lowest_bit(i)]
            yield cur

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self._rows == other._rows)

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self._rows)))

    def __repr__(self) -> str:
        return f"Gf2Subspace(ambient={self.ambient_dim}, dim={self.dim})"


def subspace_sum(a: Gf2Subspace, b: Gf2Subspace) -> Gf2Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    s = a.copy()
    for row in b.basis():
        s.insert(row)
    return s


def subspace_equal(a: Gf2Subspace, b: Gf2Subspace) -> bool:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    return a == b

"""Multisets of ring elements stored as multiplicity vectors.

The multiplicity vector is indexed by the ring's fixed element enumeration.
Scaling a multiset by a unit permutes element indices; the canonical form of
a multiset is the lexicographically least multiplicity vector over its
unit-scaling orbit. Scaling by a unit c multiplies every degree-m elementary
symmetric value by the unit c^m, so counterexample status for the searches in
this package is constant on orbits and one canonical representative per orbit
suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import rings
from .rings import Elem, RingSpec


def canonical_mult(ring: RingSpec, mult: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least multiplicity vector over the unit orbit."""
    best = mult
    for p in rings.unit_index_perms(ring):
        cand = tuple(mult[i] for i in p)
        if cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class MultisetSeq:
    """An unordered sequence over a ring, as a full multiplicity vector."""

    ring: RingSpec
    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mult) != self.ring.cardinality:
            raise ValueError(
                f"multiplicity vector length {len(self.mult)} does not match "
                f"ring cardinality {self.ring.cardinality}"
            )
        if any(c < 0 for c in self.mult):
            raise ValueError("multiplicities must be >= 0")

    @classmethod
    def from_elements(cls, ring: RingSpec, elems: Iterable[Elem]) -> "MultisetSeq":
        mult = [0] * ring.cardinality
        for e in elems:
            mult[rings.element_index(ring, e)] += 1
        return cls(ring, tuple(mult))

    @classmethod
    def from_counts(cls, ring: RingSpec, counts: Mapping[Elem, int]) -> "MultisetSeq":
        mult = [0] * ring.cardinality
        for e, c in counts.items():
            if c < 0:
                raise ValueError("multiplicities must be >= 0")
            mult[rings.element_index(ring, e)] += c
        return cls(ring, tuple(mult))

    @classmethod
    def from_index_counts(cls, ring: RingSpec, counts: Mapping[int, int]) -> "MultisetSeq":
        mult = [0] * ring.cardinality
        for i, c in counts.items():
            if c < 0:
                raise ValueError("multiplicities must be >= 0")
            mult[i] += c
        return cls(ring, tuple(mult))

    @property
    def length(self) -> int:
        return sum(self.mult)

    def items(self) -> Iterator[tuple[Elem, int]]:
        elems = rings.elements(self.ring)
        for i, c in enumerate(self.mult):
            if c:
                yield elems[i], c

    def to_sequence(self) -> list[Elem]:
        out: list[Elem] = []
        for e, c in self.items():
            out.extend([e] * c)
        return out

    def canonical(self) -> "MultisetSeq":
        return MultisetSeq(self.ring, canonical_mult(self.ring, self.mult))

    def is_canonical(self) -> bool:
        return self.mult == canonical_mult(self.ring, self.mult)

    def __str__(self) -> str:
        parts = [
            f"{rings.format_elem(self.ring, e)}^{c}" for e, c in self.items()
        ]
        return " ".join(parts) if parts else "(empty)"

"""Finite products of cyclic rings Z_n1 x ... x Z_nr with coordinatewise ops.

Elements are fully reduced residue tuples. The enumeration order is fixed:
lexicographic over residue tuples, coordinate i running 0..n_i-1. Multiplicity
vectors, canonical forms, and certificates all index elements by this order,
so it must never change.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

Elem = tuple[int, ...]


@dataclass(frozen=True)
class RingSpec:
    """Z_{n1} + ... + Z_{nr}, determined by its ordered tuple of moduli."""

    moduli: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def cardinality(self) -> int:
        return math.prod(self.moduli)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.moduli)

    @property
    def zero(self) -> Elem:
        return (0,) * len(self.moduli)

    @property
    def one(self) -> Elem:
        return (1,) * len(self.moduli)

    def __str__(self) -> str:
        return "Z" + "xZ".join(str(n) for n in self.moduli)


def make_ring(moduli: Sequence[int]) -> RingSpec:
    """Validate moduli (each an integer >= 2) and build a RingSpec."""
    mods = tuple(moduli)
    if not mods:
        raise ValueError("ring needs at least one modulus")
    for n in mods:
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {n!r}")
    return RingSpec(mods)


def element(ring: RingSpec, residues: Sequence[int]) -> Elem:
    """Build an element from arbitrary integers, reducing each coordinate."""
    res = tuple(residues)
    if len(res) != ring.rank:
        raise ValueError(f"expected {ring.rank} residues, got {len(res)}")
    return tuple(int(x) % n for x, n in zip(res, ring.moduli))


def _check_arity(ring: RingSpec, a: Elem) -> None:
    if len(a) != ring.rank:
        raise ValueError(f"element arity {len(a)} does not match ring rank {ring.rank}")


def add(ring: RingSpec, a: Elem, b: Elem) -> Elem:
    _check_arity(ring, a)
    _check_arity(ring, b)
    return tuple((x + y) % n for x, y, n in zip(a, b, ring.moduli))


def mul(ring: RingSpec, a: Elem, b: Elem) -> Elem:
    _check_arity(ring, a)
    _check_arity(ring, b)
    return tuple((x * y) % n for x, y, n in zip(a, b, ring.moduli))


def power(ring: RingSpec, a: Elem, e: int) -> Elem:
    """a**e with the empty product equal to the multiplicative identity."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    _check_arity(ring, a)
    return tuple(pow(x, e, n) for x, n in zip(a, ring.moduli))


def scalar_mul(ring: RingSpec, s: int, a: Elem) -> Elem:
    """Integer scalar times a ring element, reduced per coordinate modulus."""
    _check_arity(ring, a)
    return tuple((s * x) % n for x, n in zip(a, ring.moduli))


@lru_cache(maxsize=None)
def elements(ring: RingSpec) -> tuple[Elem, ...]:
    """All ring elements in the fixed lexicographic order."""
    return tuple(itertools.product(*(range(n) for n in ring.moduli)))


@lru_cache(maxsize=None)
def _index_map(ring: RingSpec) -> dict[Elem, int]:
    return {e: i for i, e in enumerate(elements(ring))}


def element_index(ring: RingSpec, a: Elem) -> int:
    _check_arity(ring, a)
    try:
        return _index_map(ring)[a]
    except KeyError:
        raise ValueError(f"{a} is not a reduced element of {ring}") from None


def element_at(ring: RingSpec, i: int) -> Elem:
    return elements(ring)[i]


def is_unit(ring: RingSpec, a: Elem) -> bool:
    _check_arity(ring, a)
    return all(math.gcd(x, n) == 1 for x, n in zip(a, ring.moduli))


@lru_cache(maxsize=None)
def units(ring: RingSpec) -> tuple[Elem, ...]:
    """All invertible elements, in enumeration order."""
    return tuple(e for e in elements(ring) if is_unit(ring, e))


# Index-space tables used by the search engine. Cardinalities stay at desk
# scale (<= a few hundred) so full tables are cheap.

@lru_cache(maxsize=None)
def add_index_table(ring: RingSpec) -> tuple[tuple[int, ...], ...]:
    elems = elements(ring)
    idx = _index_map(ring)
    return tuple(
        tuple(idx[add(ring, a, b)] for b in elems) for a in elems
    )


@lru_cache(maxsize=None)
def mul_index_table(ring: RingSpec) -> tuple[tuple[int, ...], ...]:
    elems = elements(ring)
    idx = _index_map(ring)
    return tuple(
        tuple(idx[mul(ring, a, b)] for b in elems) for a in elems
    )


@lru_cache(maxsize=None)
def scalar_index_table(ring: RingSpec) -> tuple[tuple[int, ...], ...]:
    """Row s (0 <= s < exponent) maps element index to the index of s*element."""
    elems = elements(ring)
    idx = _index_map(ring)
    return tuple(
        tuple(idx[scalar_mul(ring, s, e)] for e in elems)
        for s in range(ring.exponent)
    )


@lru_cache(maxsize=None)
def unit_index_perms(ring: RingSpec) -> tuple[tuple[int, ...], ...]:
    """Index permutations induced by multiplication with each unit."""
    mt = mul_index_table(ring)
    idx = _index_map(ring)
    return tuple(mt[idx[u]] for u in units(ring))


def format_elem(ring: RingSpec, a: Elem) -> str:
    if ring.rank == 1:
        return str(a[0])
    return "(" + ",".join(str(x) for x in a) + ")"


def parse_moduli(text: str) -> tuple[int, ...]:
    """Parse a CLI ring argument like "8", "2x4", or "2,2,2" into moduli."""
    normalized = text.lower().replace("x", ",")
    try:
        mods = tuple(int(part) for part in normalized.split(","))
    except ValueError:
        raise ValueError(f"cannot parse ring moduli from {text!r}") from None
    make_ring(mods)
    return mods

"""Exhaustive search for zero-e_m constants over products of cyclic rings.

Two constants are computed for a ring G, a degree m, and (for the first) a
target length t:

  * the least z such that every sequence over G of length >= z contains a
    subsequence of length exactly t whose degree-m elementary symmetric
    value is zero (the generalized EGZ constant), and
  * the least z such that every sequence of length >= z contains a
    subsequence of length >= m with zero degree-m value (the generalized
    Davenport constant).

Both equal 1 + (the longest counterexample length), where a counterexample
is a sequence none of whose qualifying subsequences has value zero. The
search state is a multiset stored as a multiplicity vector over the ring's
fixed element order. Two facts drive the algorithm:

  * Downward closure: removing one element from a counterexample leaves a
    counterexample, so a multiset of length L+1 is a counterexample iff all
    of its one-element-removals were counterexamples at level L and, for the
    Davenport kind, its own e_m value is nonzero (the multiset itself is the
    one qualifying subsequence not covered by a removal). Levels can
    therefore be built as a frontier BFS with membership tests against the
    previous level only.
  * Unit-orbit reduction: scaling a multiset by a unit c multiplies every
    e_m value by the unit c^m, so counterexample status is constant on
    orbits and each level keeps one canonical (lex-least) representative
    per orbit.

The frontier seeds at level t for the EGZ kind (every shorter multiset is
vacuously a counterexample) and at level m-1 for the Davenport kind. A run
"closes" when some level at or below the cap turns out empty, which certifies
the exact constant by exhaustion; hitting the cap with a nonempty frontier
yields a verified lower bound only. Caps come from the caller or from
hypothesis-checked closed-form upper bounds (see default_egz_cap); when a
bound B applies, the search runs through level B so that exactness never
rests on the bound itself.

The independent full testers (is_counterexample_*) re-enumerate sub-multiset
multiplicity vectors with a truncated generating product per vector. They
are the oracle route used by direct enumeration, certificate verification,
and the tests that pin the frontier to unpruned search.
"""

from __future__ import annotations

import math
import multiprocessing
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from . import numtheory, rings
from .multiset import MultisetSeq, canonical_mult
from .rings import RingSpec

KIND_EGZ = "egz"
KIND_DAV = "davenport"

METHOD_FRONTIER = "frontier_exhaustive"
METHOD_DIRECT = "direct_exhaustive"
METHOD_PRECHECK = "infinite_precheck"

OUTCOME_EXACT = "exact"
OUTCOME_AT_LEAST = "at_least"
OUTCOME_INFINITE = "infinite"

Progress = Optional[Callable[[int, int], None]]


class MissingCapError(ValueError):
    """No usable search cap: no checked bound applies and none was given."""


@dataclass(frozen=True)
class EgzOutcome:
    """Result of a constant computation.

    kind is "exact", "at_least" (value is a verified lower bound reached at
    the cap), or "infinite". value is None only for "infinite". witness is
    the lex-least canonical counterexample of maximum found length, or the
    generator of the all-ones family for "infinite" (one copy of the
    multiplicative identity, standing for (1,...,1) repeated arbitrarily).
    """

    kind: str
    value: int | None
    witness: MultisetSeq
    method: str
    cap_used: int | None


class _Engine:
    """Per-ring index-space arithmetic: tables, truncated polys, canonical."""

    __slots__ = (
        "ring", "card", "add_t", "mul_t", "scal_t", "perms", "one_idx",
        "exponent", "_factor_cache", "_ident_cache",
    )

    def __init__(self, ring: RingSpec) -> None:
        self.ring = ring
        self.card = ring.cardinality
        self.add_t = rings.add_index_table(ring)
        self.mul_t = rings.mul_index_table(ring)
        self.scal_t = rings.scalar_index_table(ring)
        self.exponent = ring.exponent
        self.one_idx = rings.element_index(ring, ring.one)
        ident = tuple(range(self.card))
        self.perms = tuple(p for p in rings.unit_index_perms(ring) if p != ident)
        self._factor_cache: dict[tuple[int, int, int], tuple[int, ...]] = {}
        self._ident_cache: dict[int, tuple[int, ...]] = {}

    def canonical(self, mult: tuple[int, ...]) -> tuple[int, ...]:
        best = mult
        get = mult.__getitem__
        for p in self.perms:
            cand = tuple(map(get, p))
            if cand < best:
                best = cand
        return best

    def identity_poly(self, m: int) -> tuple[int, ...]:
        poly = self._ident_cache.get(m)
        if poly is None:
            poly = (self.one_idx,) + (0,) * m
            self._ident_cache[m] = poly
        return poly

    def factor_poly(self, idx: int, c: int, m: int) -> tuple[int, ...]:
        # (1 + g x)^c truncated at degree m for g = element idx, coefficient
        # j equal to C(c, j) g^j with the binomial reduced mod the exponent
        # (which fixes it per coordinate modulus).
        key = (idx, c, m)
        poly = self._factor_cache.get(key)
        if poly is None:
            out = [0] * (m + 1)
            out[0] = self.one_idx
            powj = self.one_idx
            mul_row = self.mul_t
            for j in range(1, min(c, m) + 1):
                powj = mul_row[powj][idx]
                out[j] = self.scal_t[math.comb(c, j) % self.exponent][powj]
            poly = tuple(out)
            self._factor_cache[key] = poly
        return poly

    def poly_mul(self, a, b, m: int) -> tuple[int, ...]:
        add_t = self.add_t
        mul_t = self.mul_t
        out = [0] * (m + 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            row = mul_t[ai]
            for j, bj in enumerate(b[: m - i + 1]):
                if bj == 0:
                    continue
                k = i + j
                out[k] = add_t[out[k]][row[bj]]
        return tuple(out)

    def em_coeffs(self, mult, m: int) -> tuple[int, ...]:
        poly = self.identity_poly(m)
        for idx in range(1, self.card):  # element 0 is the ring zero: identity factor
            c = mult[idx]
            if c:
                poly = self.poly_mul(poly, self.factor_poly(idx, c, m), m)
        return poly

    def em_of_mult(self, mult, m: int) -> int:
        return self.em_coeffs(mult, m)[m]


@lru_cache(maxsize=None)
def _engine(ring: RingSpec) -> _Engine:
    return _Engine(ring)


# --- full testers (independent oracle route) --------------------------------


def _find_zero_sub_exact(engine: _Engine, mult, t: int, m: int):
    """Lex-least sub-multiplicity vector of size exactly t with e_m = 0."""
    card = engine.card
    suffix = [0] * (card + 1)
    for i in range(card - 1, -1, -1):
        suffix[i] = suffix[i + 1] + mult[i]
    sub = [0] * card
    poly_mul = engine.poly_mul
    factor = engine.factor_poly

    def rec(pos: int, rem: int, poly):
        if rem > suffix[pos]:
            return None
        if pos == card - 1:
            if rem > mult[pos]:
                return None
            sub[pos] = rem
            p = poly if rem == 0 else poly_mul(poly, factor(pos, rem, m), m)
            if p[m] == 0:
                found = tuple(sub)
                sub[pos] = 0
                return found
            sub[pos] = 0
            return None
        for c in range(min(mult[pos], rem) + 1):
            sub[pos] = c
            p = poly if c == 0 else poly_mul(poly, factor(pos, c, m), m)
            hit = rec(pos + 1, rem - c, p)
            if hit is not None:
                return hit
        sub[pos] = 0
        return None

    return rec(0, t, engine.identity_poly(m))


def _find_zero_sub_geq(engine: _Engine, mult, m: int):
    """Lex-least sub-multiplicity vector of size >= m with e_m = 0."""
    card = engine.card
    sub = [0] * card
    poly_mul = engine.poly_mul
    factor = engine.factor_poly

    def rec(pos: int, taken: int, poly):
        if pos == card:
            if taken >= m and poly[m] == 0:
                return tuple(sub)
            return None
        for c in range(mult[pos] + 1):
            sub[pos] = c
            p = poly if c == 0 else poly_mul(poly, factor(pos, c, m), m)
            hit = rec(pos + 1, taken + c, p)
            if hit is not None:
                return hit
        sub[pos] = 0
        return None

    return rec(0, 0, engine.identity_poly(m))


def find_egz_zero_sub(mseq: MultisetSeq, t: int, m: int) -> MultisetSeq | None:
    """A length-t sub-multiset with e_m = 0, or None if none exists."""
    if m < 1 or t < m:
        raise ValueError("need t >= m >= 1")
    engine = _engine(mseq.ring)
    hit = _find_zero_sub_exact(engine, mseq.mult, t, m)
    return None if hit is None else MultisetSeq(mseq.ring, hit)


def is_counterexample_egz(mseq: MultisetSeq, t: int, m: int) -> bool:
    """True iff no sub-multiset of length exactly t has e_m = 0."""
    return find_egz_zero_sub(mseq, t, m) is None


def find_dav_zero_sub(mseq: MultisetSeq, m: int) -> MultisetSeq | None:
    """A sub-multiset of length >= m with e_m = 0, or None if none exists."""
    if m < 1:
        raise ValueError("need m >= 1")
    engine = _engine(mseq.ring)
    hit = _find_zero_sub_geq(engine, mseq.mult, m)
    return None if hit is None else MultisetSeq(mseq.ring, hit)


def is_counterexample_dav(mseq: MultisetSeq, m: int) -> bool:
    """True iff no sub-multiset of length >= m has e_m = 0."""
    return find_dav_zero_sub(mseq, m) is None


# --- frontier search --------------------------------------------------------


def _vacuous_witness(ring: RingSpec, length: int) -> MultisetSeq:
    # Lex-least canonical multiplicity vector of a given length puts all
    # mass on the last element (the orbit of -1, which contains no element
    # of larger index).
    mult = (0,) * (ring.cardinality - 1) + (length,)
    return MultisetSeq(ring, mult)


def _all_canonical(engine: _Engine, length: int) -> set[tuple[int, ...]]:
    card = engine.card
    out: set[tuple[int, ...]] = set()
    mult = [0] * card
    canonical = engine.canonical

    def rec(pos: int, rem: int) -> None:
        if pos == card - 1:
            mult[pos] = rem
            out.add(canonical(tuple(mult)))
            mult[pos] = 0
            return
        for c in range(rem + 1):
            mult[pos] = c
            rec(pos + 1, rem - c)
        mult[pos] = 0

    rec(0, length)
    return out


def _egz_seed(engine: _Engine, t: int, m: int) -> set[tuple[int, ...]]:
    """Canonical multisets of length t with e_m != 0 (level-t counterexamples)."""
    card = engine.card
    out: set[tuple[int, ...]] = set()
    mult = [0] * card
    canonical = engine.canonical
    poly_mul = engine.poly_mul
    factor = engine.factor_poly

    def rec(pos: int, rem: int, poly) -> None:
        if pos == card - 1:
            mult[pos] = rem
            p = poly if rem == 0 else poly_mul(poly, factor(pos, rem, m), m)
            if p[m] != 0:
                out.add(canonical(tuple(mult)))
            mult[pos] = 0
            return
        # element 0 is the ring zero, whose factor is the identity
        if pos == 0:
            for c in range(rem + 1):
                mult[0] = c
                rec(1, rem - c, poly)
            mult[0] = 0
            return
        for c in range(rem + 1):
            mult[pos] = c
            rec(pos + 1, rem - c, poly if c == 0 else poly_mul(poly, factor(pos, c, m), m))
        mult[pos] = 0

    rec(0, t, engine.identity_poly(m))
    return out


def _extend_chunk(engine: _Engine, members, prev: set, kind: str, m: int):
    """Surviving canonical extensions of the given frontier members."""
    card = engine.card
    canonical = engine.canonical
    em = engine.em_of_mult
    is_dav = kind == KIND_DAV
    seen: set[tuple[int, ...]] = set()
    out: set[tuple[int, ...]] = set()
    for mult in members:
        base = list(mult)
        for g in range(card):
            base[g] += 1
            cand = tuple(base)
            base[g] -= 1
            canon = canonical(cand)
            if canon in seen:
                continue
            seen.add(canon)
            # closure: every one-element-removal must be a previous-level
            # class; the removal at g is the parent itself, already known.
            ok = True
            lst = list(cand)
            for i, c in enumerate(cand):
                if c == 0 or i == g:
                    continue
                lst[i] = c - 1
                if canonical(tuple(lst)) not in prev:
                    ok = False
                    break
                lst[i] = c
            if ok and is_dav and em(cand, m) == 0:
                ok = False
            if ok:
                out.add(canon)
    return out


_PAR_STATE: dict = {}


def _par_worker(bounds: tuple[int, int]):
    lo, hi = bounds
    st = _PAR_STATE
    return _extend_chunk(st["engine"], st["members"][lo:hi], st["prev"], st["kind"], st["m"])


def _advance(engine: _Engine, frontier: set, kind: str, m: int, workers: int):
    if workers <= 1 or len(frontier) < 2:
        return _extend_chunk(engine, frontier, frontier, kind, m)
    members = sorted(frontier)
    nchunks = min(len(members), workers * 4)
    step = -(-len(members) // nchunks)
    bounds = [(i, min(i + step, len(members))) for i in range(0, len(members), step)]
    _PAR_STATE.update(engine=engine, members=members, prev=frontier, kind=kind, m=m)
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        results = pool.map(_par_worker, bounds)
    _PAR_STATE.clear()
    out: set[tuple[int, ...]] = set()
    for r in results:
        out |= r
    return out


def max_counterexample_length(
    kind: str,
    ring: RingSpec,
    m: int,
    cap: int,
    t: int | None = None,
    method: str = "frontier",
    workers: int = 1,
    progress: Progress = None,
) -> tuple[int, MultisetSeq]:
    """Longest counterexample length up to cap, with a lex-least canonical
    witness of that length. Returns cap when the search did not close."""
    if kind not in (KIND_EGZ, KIND_DAV):
        raise ValueError(f"unknown kind {kind!r}")
    if m < 1:
        raise ValueError("m must be >= 1")
    if cap < m:
        raise ValueError("cap must be >= m")
    if kind == KIND_EGZ:
        if t is None or t < m:
            raise ValueError("EGZ kind needs t >= m")
        vacuous = t - 1
    else:
        vacuous = m - 1
    if cap <= vacuous:
        return cap, _vacuous_witness(ring, cap)
    if method == "direct":
        return _direct_max(ring, kind, m, cap, t)
    if method != "frontier":
        raise ValueError(f"unknown method {method!r}")

    engine = _engine(ring)
    if kind == KIND_EGZ:
        frontier = _egz_seed(engine, t, m)
        level = t
        if not frontier:
            return vacuous, _vacuous_witness(ring, vacuous)
    else:
        frontier = _all_canonical(engine, m - 1)
        level = m - 1
    if progress:
        progress(level, len(frontier))
    while level < cap:
        nxt = _advance(engine, frontier, kind, m, workers)
        if not nxt:
            break
        frontier = nxt
        level += 1
        if progress:
            progress(level, len(frontier))
    return level, MultisetSeq(ring, min(frontier))


def _direct_max(ring: RingSpec, kind: str, m: int, cap: int, t: int | None):
    """Unpruned reference search: every canonical multiset of every length,
    each tested with the full sub-multiset enumeration."""
    engine = _engine(ring)
    start = t if kind == KIND_EGZ else m
    best_level = start - 1
    best_witness = _vacuous_witness(ring, best_level)
    for level in range(start, cap + 1):
        survivors = set()
        for mult in _all_canonical(engine, level):
            if kind == KIND_EGZ:
                ok = _find_zero_sub_exact(engine, mult, t, m) is None
            else:
                ok = _find_zero_sub_geq(engine, mult, m) is None
            if ok:
                survivors.add(mult)
        if not survivors:
            return best_level, best_witness
        best_level = level
        best_witness = MultisetSeq(ring, min(survivors))
    return best_level, best_witness


# --- constants --------------------------------------------------------------


def infinite_obstruction(ring: RingSpec, m: int, t: int) -> int | None:
    """C(t, m) mod exponent when nonzero (the all-ones family obstruction)."""
    r = numtheory.binom_mod(t, m, ring.exponent)
    return r if r != 0 else None


def default_egz_cap(ring: RingSpec, m: int, t: int) -> int | None:
    """Tightest applicable hypothesis-checked upper bound, or None.

    Checked bounds: k(t-1) - m + 2 for cyclic Z_k with t in S(k, m);
    p^r + m p^s - m for Z_{p^s} with t = p^r, r >= s, p^r > m(p^s - 1);
    p^h + m * sum(p^a_j - 1) for a p-group with t = p^(sum a_j) and
    p^h > m * sum(p^a_j - 1).
    """
    caps: list[int] = []
    if ring.rank == 1:
        k = ring.moduli[0]
        if numtheory.is_feasible_length(k, m, t):
            caps.append(k * (t - 1) - m + 2)
        kp = numtheory.prime_power(k)
        tp = numtheory.prime_power(t)
        if kp and tp and kp[0] == tp[0]:
            p, s = kp
            r = tp[1]
            if r >= s and p ** r > m * (p ** s - 1):
                caps.append(p ** r + m * p ** s - m)
    pps = [numtheory.prime_power(n) for n in ring.moduli]
    if all(pps) and len({p for p, _ in pps}) == 1:
        p = pps[0][0]
        alphas = [e for _, e in pps]
        h = sum(alphas)
        d = sum(p ** a - 1 for a in alphas)
        if t == p ** h and p ** h > m * d:
            caps.append(p ** h + m * d)
    return min(caps) if caps else None


def egz_constant(
    ring: RingSpec,
    m: int,
    t: int,
    cap: int | None = None,
    method: str = "frontier",
    workers: int = 1,
    progress: Progress = None,
) -> EgzOutcome:
    """The generalized EGZ constant for (ring, t, m), by certified search.

    Infinite is decided by the all-ones precheck; otherwise the search runs
    to min(cap, checked upper bound) and reports Exact only when a level
    emptied, AtLeast otherwise. Raises MissingCapError when neither a cap
    nor a checked bound is available.
    """
    if m < 1 or t < m:
        raise ValueError("need t >= m >= 1")
    if infinite_obstruction(ring, m, t) is not None:
        witness = MultisetSeq.from_counts(ring, {ring.one: 1})
        return EgzOutcome(OUTCOME_INFINITE, None, witness, METHOD_PRECHECK, None)
    auto = default_egz_cap(ring, m, t)
    usable = [c for c in (cap, auto) if c is not None]
    if not usable:
        raise MissingCapError(
            f"no checked upper bound applies to E({t}, {ring}, {m}); pass a cap"
        )
    eff = min(usable)
    if eff < m:
        raise ValueError("cap must be >= m")
    length, witness = max_counterexample_length(
        KIND_EGZ, ring, m, eff, t=t, method=method, workers=workers, progress=progress
    )
    mname = METHOD_DIRECT if method == "direct" else METHOD_FRONTIER
    if length < eff:
        return EgzOutcome(OUTCOME_EXACT, length + 1, witness, mname, eff)
    return EgzOutcome(OUTCOME_AT_LEAST, length + 1, witness, mname, eff)


def davenport_m(
    ring: RingSpec,
    m: int,
    cap: int,
    method: str = "frontier",
    workers: int = 1,
    progress: Progress = None,
) -> EgzOutcome:
    """The generalized Davenport constant for (ring, m), by certified search."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if cap < m:
        raise ValueError("cap must be >= m")
    length, witness = max_counterexample_length(
        KIND_DAV, ring, m, cap, method=method, workers=workers, progress=progress
    )
    mname = METHOD_DIRECT if method == "direct" else METHOD_FRONTIER
    if length < cap:
        return EgzOutcome(OUTCOME_EXACT, length + 1, witness, mname, cap)
    return EgzOutcome(OUTCOME_AT_LEAST, length + 1, witness, mname, cap)

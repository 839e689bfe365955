"""Algebraic dimension of a contact relation over a distinguished set D.

The predicate "dimension at most n" quantifies over (n+2)-tuples drawn
from D: whenever b_i is well inside a_i for each slot and the b's join to
1, there must be witnesses c_i << d_i << a_i with the c's joining to 1
and the d's meeting to 0. The value is the least such n, with -1 reserved
for the one-element algebra.

Two engines exist. This module holds the pruned one:

  * outer tuples are enumerated as multisets of (b, a) pairs, sound
    because the witness conditions never mention b and are symmetric
    under permuting slots; a branch dies early when the b's chosen so far
    together with everything still available cannot join to 1;
  * the witness search picks the d-tuple first (a branch dies when some
    bit of the running meet is present in every remaining candidate, or
    when the best possible c-join is already short of 1), then the
    c-tuple under join pruning;
  * witness verdicts are memoized per a-multiset.

tests/naive.py re-implements the definition with ordered tuples and no
pruning; the suite compares the two bit for bit.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

from .boolean import Element
from .contact import ContactAlgebra
from .errors import MismatchError, ValidationError
from .lca import LocalContactAlgebra, relative_lca


@dataclass(frozen=True)
class DimensionQuery:
    """A contact algebra, a witness pool D containing 0 and 1, and a cap."""

    ca: ContactAlgebra
    members: tuple[Element, ...]
    n_cap: int = 3
    _inner_memo: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        alg = self.ca.algebra
        masks = set()
        for x in self.members:
            if x.algebra is not alg:
                raise MismatchError("D contains an element of a different algebra")
            masks.add(x.mask)
        if 0 not in masks or alg.full_mask not in masks:
            raise ValidationError("D must contain 0 and 1")
        object.__setattr__(
            self, "members", tuple(Element(alg, m) for m in sorted(masks))
        )

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(x.mask for x in self.members)


def query(ca: ContactAlgebra, members: Sequence[Element] | None = None, n_cap: int = 3) -> DimensionQuery:
    """Build a DimensionQuery; D defaults to the whole algebra."""
    if members is None:
        members = ca.algebra.elements()
    return DimensionQuery(ca, tuple(members), n_cap)


def lca_query(L: LocalContactAlgebra, n_cap: int = 3, bounded_witnesses: bool = False) -> DimensionQuery:
    """Dimension query for a bounded structure.

    The plain reading takes D to be the whole carrier; the alternative
    reading (bounded_witnesses=True) restricts D to the bounded elements
    plus 1. The alternative is experimental and carries no cross-check
    against anything.
    """
    if bounded_witnesses:
        members = L.bounded_elements() + [L.algebra.one]
        return DimensionQuery(L.ca, tuple(members), n_cap)
    return query(L.ca, None, n_cap)


@dataclass(frozen=True)
class DimVerdict:
    holds: bool
    n: int
    a_tuple: tuple[Element, ...] = ()
    b_tuple: tuple[Element, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


def dim_leq(q: DimensionQuery, n: int) -> DimVerdict:
    """Decide "dimension at most n"; on failure carry the first offending
    (a, b) tuple pair in enumeration order."""
    if n < -1:
        raise ValidationError("n must be at least -1")
    alg = q.ca.algebra
    if n == -1:
        return DimVerdict(alg.size == 1, n)
    k = n + 2
    full = alg.full_mask
    reach = q.ca.contact.closure_table()
    d_masks = q.masks

    pairs = [(b, a) for b in d_masks for a in d_masks if reach[b] & (full ^ a) == 0]
    pairs.sort()
    np = len(pairs)
    # suffix_b[i] = best possible further b-coverage using pairs[i:]
    suffix_b = [0] * (np + 1)
    for i in range(np - 1, -1, -1):
        suffix_b[i] = suffix_b[i + 1] | pairs[i][0]

    memo = q._inner_memo
    chosen: list[tuple[int, int]] = []

    def witness_exists(a_multiset: tuple[int, ...]) -> bool:
        key = (n, a_multiset)
        try:
            return memo[key]
        except KeyError:
            pass
        result = _search_witness(q, reach, full, a_multiset)
        memo[key] = result
        return result

    def outer(slot: int, start: int, b_join: int) -> tuple[tuple[int, int], ...] | None:
        """Return the first failing multiset of pairs, or None."""
        if slot == k:
            if b_join != full:
                return None
            a_multiset = tuple(sorted(a for _, a in chosen))
            if witness_exists(a_multiset):
                return None
            return tuple(chosen)
        for i in range(start, np):
            b, a = pairs[i]
            if b_join | suffix_b[i] != full:
                return None  # later pairs only shrink coverage potential
            chosen.append(pairs[i])
            bad = outer(slot + 1, i, b_join | b)
            chosen.pop()
            if bad is not None:
                return bad
        return None

    bad = outer(0, 0, 0)
    if bad is None:
        return DimVerdict(True, n)
    a_tuple = tuple(Element(alg, a) for _, a in bad)
    b_tuple = tuple(Element(alg, b) for b, _ in bad)
    return DimVerdict(False, n, a_tuple, b_tuple)


def _search_witness(q: DimensionQuery, reach, full: int, a_multiset: tuple[int, ...]) -> bool:
    """Do c_i << d_i << a_i with join(c)=1 and meet(d)=0 exist in D?"""
    d_masks = q.masks
    k = len(a_multiset)

    c_cands_memo: dict[int, tuple[int, ...]] = {}
    orc_memo: dict[int, int] = {}

    def c_cands(d: int) -> tuple[int, ...]:
        try:
            return c_cands_memo[d]
        except KeyError:
            not_d = full ^ d
            cs = tuple(c for c in d_masks if reach[c] & not_d == 0)
            c_cands_memo[d] = cs
            orc_memo[d] = _or_all(cs)
            return cs

    slot_cands: list[list[int]] = []
    for a in a_multiset:
        not_a = full ^ a
        ds = [d for d in d_masks if reach[d] & not_a == 0 and c_cands(d)]
        if not ds:
            return False
        slot_cands.append(ds)

    # bits forced into the d-meet by every remaining candidate, and the
    # best possible further c-coverage, per suffix of slots
    suffix_forced = [full] * (k + 1)
    suffix_cpot = [0] * (k + 1)
    suffix_forced[k] = full
    for i in range(k - 1, -1, -1):
        forced = full
        cpot = 0
        for d in slot_cands[i]:
            forced &= d
            cpot |= orc_memo[d]
        suffix_forced[i] = suffix_forced[i + 1] & forced
        suffix_cpot[i] = suffix_cpot[i + 1] | cpot

    d_chosen: list[int] = []

    def pick_c(slot: int, c_join: int, suffix_cor: list[int]) -> bool:
        if slot == k:
            return c_join == full
        if c_join | suffix_cor[slot] != full:
            return False
        for c in c_cands(d_chosen[slot]):
            if pick_c(slot + 1, c_join | c, suffix_cor):
                return True
        return False

    def pick_d(slot: int, d_meet: int, c_pot: int) -> bool:
        if slot == k:
            if d_meet != 0:
                return False
            suffix_cor = [0] * (k + 1)
            for j in range(k - 1, -1, -1):
                suffix_cor[j] = suffix_cor[j + 1] | orc_memo[d_chosen[j]]
            return pick_c(0, 0, suffix_cor)
        if d_meet & suffix_forced[slot]:
            return False
        if c_pot | suffix_cpot[slot] != full:
            return False
        for d in slot_cands[slot]:
            d_chosen.append(d)
            if pick_d(slot + 1, d_meet & d, c_pot | orc_memo[d]):
                d_chosen.pop()
                return True
            d_chosen.pop()
        return False

    return pick_d(0, full, 0)


def _or_all(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


@dataclass(frozen=True)
class DimensionResult:
    """Value of the dimension plus the per-n verdicts that produced it.

    value is None when every n up to the cap failed; anomalies lists
    (n_true, n_false) pairs with n_true < n_false, which the definition
    presumes cannot happen but nothing in it rules out.
    """

    value: int | None
    n_cap: int
    verdicts: tuple[tuple[int, bool], ...]
    anomalies: tuple[tuple[int, int], ...] = ()

    @property
    def display(self) -> str:
        return f">{self.n_cap}" if self.value is None else str(self.value)


def dim_a(q: DimensionQuery, scan_to_cap: bool = False) -> DimensionResult:
    """Least n with dim_leq true, scanning n = -1, 0, ... up to the cap.

    By default the scan stops at the first success. With scan_to_cap the
    whole range is evaluated and any non-monotone verdict pair is
    reported as an anomaly; this costs exponentially more per extra n.
    """
    verdicts: list[tuple[int, bool]] = []
    value: int | None = None
    for n in range(-1, q.n_cap + 1):
        v = bool(dim_leq(q, n))
        verdicts.append((n, v))
        if v and value is None:
            value = n
            if not scan_to_cap:
                break
    anomalies = tuple(
        (ni, nj)
        for ni, vi in verdicts
        for nj, vj in verdicts
        if ni < nj and vi and not vj
    )
    return DimensionResult(value, q.n_cap, tuple(verdicts), anomalies)


def is_way_below_dense(ca: ContactAlgebra, members: Sequence[Element]) -> bool:
    """Can every a << b be split as a << c << b with c drawn from D?"""
    alg = ca.algebra
    full = alg.full_mask
    reach = ca.contact.closure_table()
    d_masks = []
    for x in members:
        if x.algebra is not alg:
            raise MismatchError("D contains an element of a different algebra")
        d_masks.append(x.mask)
    for a in range(alg.size):
        ra = reach[a]
        for b in range(alg.size):
            if ra & (full ^ b) == 0:
                if not any(
                    ra & (full ^ c) == 0 and reach[c] & (full ^ b) == 0
                    for c in d_masks
                ):
                    return False
    return True


def check_dimension_invariance(ca: ContactAlgebra, members: Sequence[Element], n_cap: int = 3) -> bool:
    """Dimension computed over a dense D must equal dimension over all of B.

    Rejects D that is not way-below dense or misses 0 or 1; both sides
    share the cap, and two ">cap" results count as equal.
    """
    if not is_way_below_dense(ca, members):
        raise ValidationError("D is not way-below dense")
    restricted = dim_a(DimensionQuery(ca, tuple(members), n_cap))
    unrestricted = dim_a(query(ca, None, n_cap))
    return restricted.value == unrestricted.value


@dataclass(frozen=True)
class MonotonicityReport:
    holds: bool
    ambient: DimensionResult
    relative: DimensionResult
    vacuous: bool = False

    def __bool__(self) -> bool:
        return self.holds


def check_relative_monotonicity(L: LocalContactAlgebra, m: Element, n_cap: int = 2) -> MonotonicityReport:
    """Dimension of the part below m must not exceed the ambient dimension.

    When the ambient side already exceeds the cap nothing can be
    concluded; the check passes vacuously and warns.
    """
    if not L.ca.is_contact:
        raise ValidationError("ambient relation must pass the contact bundle")
    if m.is_zero:
        raise ValidationError("cannot relativize at 0")
    ambient = dim_a(lca_query(L, n_cap))
    rel = relative_lca(L, m)
    relative = dim_a(lca_query(rel.lca, n_cap))
    if ambient.value is None:
        warnings.warn(
            "ambient dimension exceeds the cap; monotonicity holds vacuously",
            stacklevel=2,
        )
        return MonotonicityReport(True, ambient, relative, vacuous=True)
    holds = relative.value is not None and relative.value <= ambient.value
    return MonotonicityReport(holds, ambient, relative)

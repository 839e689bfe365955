"""Bases and the two cardinal invariants: weight and pi-weight.

A base for a bounded structure is a dV-dense set D inside the bounded
ideal, and the weight is the least cardinality of one. The search here
is exact: elements a with a << a are forced into every base (the only x
with a <= x <= a is a itself), and what remains is a minimum hitting-set
problem over the uncovered well-inside pairs, solved by depth-limited
branching on the most constrained pair with a greedy packing lower
bound. Pi-weight needs no relation at all; it delegates to the dense
subset minimum of the carrier algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolean import (
    Element,
    Subalgebra,
    is_dense_subset,
    min_dense_cardinality,
)
from .contact import AxiomReport, ContactAlgebra, ContactStructure, check_axiom
from .errors import InternalInconsistencyError, ValidationError
from .lca import LocalContactAlgebra, _submasks, is_dv_dense


def is_base(L: LocalContactAlgebra, members) -> bool:
    """Alias for dV-density of D inside the bounded ideal."""
    return is_dv_dense(L, members)


def s_part(structure) -> tuple[Element, ...]:
    """All elements way below themselves, ascending.

    Accepts a ContactAlgebra or anything carrying one under .ca.
    """
    ca = structure.ca if isinstance(structure, LocalContactAlgebra) else structure
    alg = ca.algebra
    full = alg.full_mask
    reach = ca.contact.closure_table()
    return tuple(
        Element(alg, a) for a in range(alg.size) if reach[a] & (full ^ a) == 0
    )


@dataclass(frozen=True)
class BaseSearchState:
    """Completed frontier of the minimum-base search: the candidate set
    (forced kernel plus chosen completions, all bounded) and the size
    bound the deepening loop ended at."""

    lca: LocalContactAlgebra
    candidate: tuple[int, ...]
    size_bound: int


@dataclass(frozen=True)
class WeightResult:
    size: int
    base: tuple[Element, ...]


def algebra_weight(L: LocalContactAlgebra) -> WeightResult:
    """Minimum cardinality of a base, with a witness of that size.

    Requires the contact bundle on the underlying relation. The witness
    is deterministic: iterative deepening on the number of non-forced
    members, branching on the uncovered pair with the fewest interpolant
    candidates, candidates tried in ascending mask order.
    """
    if not L.ca.is_contact:
        raise ValidationError("weight needs a relation passing the contact bundle")
    state = _minimum_base(L, _submasks(L.bounded_top.mask))
    alg = L.algebra
    return WeightResult(
        len(state.candidate), tuple(Element(alg, m) for m in state.candidate)
    )


def _minimum_base(L: LocalContactAlgebra, pool_masks) -> BaseSearchState:
    """Forced members plus a minimum completion drawn from pool_masks.

    pool_masks must at least contain every forced element; ValidationError
    otherwise (a base within the pool then cannot exist).
    """
    alg = L.algebra
    full = alg.full_mask
    reach = L.ca.contact.closure_table()
    bounded = _submasks(L.bounded_top.mask)
    pool_set = set(pool_masks)

    def ll(x: int, y: int) -> bool:
        return reach[x] & (full ^ y) == 0

    forced = [a for a in bounded if ll(a, a)]
    for a in forced:
        if a not in pool_set:
            raise ValidationError("pool misses a forced member; no base inside it")
    forced_set = set(forced)

    uncovered: list[tuple[int, int]] = []
    for a in bounded:
        ra = reach[a]
        for c in bounded:
            if ra & (full ^ c) == 0:
                if not any(a & ~f == 0 and f & ~c == 0 for f in forced_set):
                    uncovered.append((a, c))
    if not uncovered:
        return BaseSearchState(L, tuple(sorted(forced)), len(forced))

    pool = sorted(
        d
        for d in pool_set
        if d not in forced_set
        and d & ~L.bounded_top.mask == 0
        and any(a & ~d == 0 and d & ~c == 0 for a, c in uncovered)
    )
    index = {d: j for j, d in enumerate(pool)}
    np_ = len(uncovered)
    cand = [0] * np_  # candidate pool-indices per pair, as bitmask
    cover = [0] * len(pool)  # pairs covered per pool element, as bitmask
    for i, (a, c) in enumerate(uncovered):
        for d in pool:
            if a & ~d == 0 and d & ~c == 0:
                cand[i] |= 1 << index[d]
                cover[index[d]] |= 1 << i
    if any(m == 0 for m in cand):
        raise ValidationError("pool misses every interpolant of some pair")

    conflict = [0] * np_  # pairs sharing at least one candidate
    for i in range(np_):
        for j in range(np_):
            if cand[i] & cand[j]:
                conflict[i] |= 1 << j

    def lower_bound(remaining: int) -> int:
        lb = 0
        r = remaining
        while r:
            i = (r & -r).bit_length() - 1
            lb += 1
            r &= ~conflict[i]
        return lb

    failed_at: dict[int, int] = {}
    chosen: list[int] = []

    def dfs(remaining: int, depth: int) -> bool:
        if remaining == 0:
            return True
        if depth == 0 or lower_bound(remaining) > depth:
            return False
        if failed_at.get(remaining, -1) >= depth:
            return False
        best = -1
        best_count = 1 << 62
        r = remaining
        while r:
            i = (r & -r).bit_length() - 1
            r &= r - 1
            count = cand[i].bit_count()
            if count < best_count:
                best, best_count = i, count
        options = cand[best]
        while options:
            j = (options & -options).bit_length() - 1
            options &= options - 1
            chosen.append(pool[j])
            if dfs(remaining & ~cover[j], depth - 1):
                return True
            chosen.pop()
        failed_at[remaining] = depth
        return False

    all_pairs = (1 << np_) - 1
    depth = lower_bound(all_pairs)
    while True:
        chosen.clear()
        if dfs(all_pairs, depth):
            return BaseSearchState(
                L, tuple(sorted(forced + chosen)), len(forced) + depth
            )
        depth += 1


def pi_weight(algebra) -> int:
    """Least size of a dense subset; for a power set that is the atom
    count (each atom is forced), 0 for the degenerate algebra."""
    return min_dense_cardinality(algebra).size


def zero_dim_criterion(L: LocalContactAlgebra) -> bool:
    """Is the bounded part of the self-way-below elements a base?

    Strict contract: rejects structures that fail the bounded-ideal
    axioms rather than computing on them.
    """
    if not L.is_valid():
        raise ValidationError("zero_dim_criterion requires a valid structure")
    members = [x for x in s_part(L) if L.is_bounded(x)]
    return is_base(L, members)


_WAY_BELOW_AXIOMS = ("LL1", "LL2", "LL2'", "LL3", "LL4", "LL4'", "LL5", "LL6", "LL7")


@dataclass(frozen=True)
class SubalgebraContactResult:
    structure: ContactStructure
    way_below_reports: tuple[AxiomReport, ...]
    s_part_matches: bool
    is_minimum_base: bool
    weight: int

    @property
    def failed_axioms(self) -> tuple[str, ...]:
        return tuple(r.axiom for r in self.way_below_reports if not r.ok)


def rho_from_subalgebra(parent, members: Subalgebra) -> SubalgebraContactResult:
    """Contact induced by a subalgebra: a is well inside b exactly when
    some subalgebra member sits between them.

    Since the member set is closed under joins and meets, the relation is
    additive and its atom rows are the blocks of the subalgebra's atom
    partition (the row of p is the smallest member above p). Diagnostics
    cover the well-inside axioms, whether the self-way-below elements are
    exactly the member set, and whether that set is a minimum base (with
    everything bounded). Two theorem-level facts are asserted outright:
    a dense member set forces the full normal-contact bundle, and a
    non-dense one must break the axiom giving nonzero b well inside each
    nonzero a.
    """
    if members.parent is not parent:
        raise ValidationError("subalgebra belongs to a different algebra")
    rows = []
    member_masks = sorted(m.mask for m in members.members)
    for p in range(parent.atom_count):
        block = parent.full_mask
        for m in member_masks:
            if m >> p & 1:
                block &= m
        rows.append(block)
    structure = ContactStructure(parent, rows)
    ca = ContactAlgebra(parent, structure)

    reports = tuple(check_axiom(ca, name) for name in _WAY_BELOW_AXIOMS)
    self_below = {x.mask for x in s_part(ca)}
    s_matches = self_below == set(member_masks)

    L = LocalContactAlgebra(ca, parent.one)
    member_elements = sorted(members.members, key=lambda x: x.mask)
    base_ok = is_base(L, member_elements)
    w = algebra_weight(L)
    minimum = base_ok and w.size == len(member_masks)

    dense = is_dense_subset(parent, member_elements)
    if dense:
        if not (ca.is_normal and ca.is_extensional):
            raise InternalInconsistencyError(
                "dense member set failed the normal-contact bundle"
            )
    else:
        if check_axiom(ca, "LL6").ok:
            raise InternalInconsistencyError(
                "non-dense member set but every nonzero a has nonzero b well inside"
            )
    return SubalgebraContactResult(structure, reports, s_matches, minimum, w.size)


def minimal_base_within(L: LocalContactAlgebra, members) -> WeightResult:
    """A minimum-size base drawn from the join-closure of a given base.

    Rejects a non-base. The witness is a base, lies inside the join
    closure (with the empty join 0 included), and for valid structures
    its size is asserted to be the weight; when the given base is already
    join-closed the witness stays inside it.
    """
    if not is_dv_dense(L, members):
        raise ValidationError("the given set is not a base")
    closure = {0}
    for x in members:
        closure |= {c | x.mask for c in closure}
    member_masks = {x.mask for x in members}
    join_closed = closure <= member_masks | {0}

    state = _minimum_base(L, sorted(closure))
    masks = state.candidate
    alg = L.algebra
    result = WeightResult(len(masks), tuple(Element(alg, m) for m in masks))

    if not is_dv_dense(L, result.base):
        raise InternalInconsistencyError("search returned a non-base")
    if L.is_valid() and result.size != algebra_weight(L).size:
        raise InternalInconsistencyError(
            "join-closure base misses the true weight on a valid structure"
        )
    if join_closed and not all(m in member_masks or m == 0 for m in masks):
        raise InternalInconsistencyError(
            "witness left a join-closed base"
        )
    return result

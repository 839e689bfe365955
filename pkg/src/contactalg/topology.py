"""Finite topological spaces as an independent oracle.

Everything here is computed straight from an explicit open-set family:
closures, regular closed and regular open algebras with their standard
contact, covering dimension from the cover definition, weight, pi-weight,
semiregularity, the contravariant regular-closed functor on continuous
maps, and baby Stone duality. None of it consults the algebraic search
code, which is the point: the test suite plays the two sides against
each other.

Subsets of a space are int bitmasks over points, the same convention the
Boolean algebra layer uses for atoms. FiniteSpace.mask and .points
convert at the border.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .boolean import BooleanHomomorphism, Element, FiniteBooleanAlgebra, check_homomorphism, powerset_algebra
from .contact import ContactAlgebra, ContactStructure, is_ca_isomorphism, is_connected
from .errors import InternalInconsistencyError, MismatchError, ValidationError
from .lca import LcaMorphismTable, LocalContactAlgebra, check_dhlc_morphism

DEFAULT_MAX_POINTS = 5


class FiniteSpace:
    """A finite topological space: point count plus the full open family.

    The family must contain the empty set and the whole space and be
    closed under union and intersection; anything else is rejected. The
    explicit-family representation keeps non-T0 and non-semiregular
    spaces representable.
    """

    __slots__ = ("point_count", "full_mask", "opens")

    def __init__(self, point_count: int, opens: Iterable[int], max_points: int = DEFAULT_MAX_POINTS):
        if not 0 <= point_count <= max_points:
            raise ValidationError(
                f"point count must lie in [0, {max_points}] (cover search is doubly exponential)"
            )
        self.point_count = point_count
        self.full_mask = (1 << point_count) - 1
        fam = frozenset(opens)
        for s in fam:
            if not 0 <= s <= self.full_mask:
                raise ValidationError("open set out of range")
        if 0 not in fam or self.full_mask not in fam:
            raise ValidationError("opens must contain the empty set and the space")
        for a in fam:
            for b in fam:
                if a | b not in fam or a & b not in fam:
                    raise ValidationError("opens not closed under union/intersection")
        self.opens = fam

    def __repr__(self) -> str:
        return f"FiniteSpace({self.point_count} points, {len(self.opens)} opens)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self.point_count == other.point_count and self.opens == other.opens

    def __hash__(self) -> int:
        return hash((self.point_count, self.opens))

    def mask(self, points: Iterable[int]) -> int:
        m = 0
        for p in points:
            if not 0 <= p < self.point_count:
                raise ValidationError(f"point {p} out of range")
            m |= 1 << p
        return m

    def points(self, mask: int) -> frozenset[int]:
        return frozenset(p for p in range(self.point_count) if mask >> p & 1)

    def open_masks(self) -> list[int]:
        return sorted(self.opens)

    def is_open(self, mask: int) -> bool:
        return mask in self.opens

    @property
    def is_discrete(self) -> bool:
        return len(self.opens) == 1 << self.point_count

    def minimal_neighborhood(self, point: int) -> int:
        """Smallest open set containing the point."""
        out = self.full_mask
        bit = 1 << point
        for u in self.opens:
            if u & bit:
                out &= u
        return out


def interior(X: FiniteSpace, mask: int) -> int:
    out = 0
    for u in X.opens:
        if u & ~mask == 0:
            out |= u
    return out


def closure(X: FiniteSpace, mask: int) -> int:
    # complement of the union of opens missing the set
    avoid = 0
    for u in X.opens:
        if u & mask == 0:
            avoid |= u
    return X.full_mask ^ avoid


def discrete_space(n: int) -> FiniteSpace:
    return FiniteSpace(n, range(1 << n))


def indiscrete_space(n: int) -> FiniteSpace:
    return FiniteSpace(n, {0, (1 << n) - 1})


def sierpinski_space() -> FiniteSpace:
    """Two points; {1} open, {0} not."""
    return FiniteSpace(2, {0, 0b10, 0b11})


def chain_space(n: int) -> FiniteSpace:
    """Opens are the initial segments 0, {0}, {0,1}, ..."""
    return FiniteSpace(n, {(1 << k) - 1 for k in range(n + 1)})


def particular_point_space(n: int) -> FiniteSpace:
    """Nonempty opens are exactly the sets containing point 0."""
    if n < 1:
        raise ValidationError("needs at least the particular point")
    return FiniteSpace(n, {0} | {m | 1 for m in range(1 << n)})


def generate_topology(n: int, subbase: Iterable[int]) -> FiniteSpace:
    """Close a subbase under intersections then unions."""
    full = (1 << n) - 1
    meets = {full}
    for s in subbase:
        meets |= {m & s for m in meets}
    fam = {0}
    for s in meets:
        fam |= {f | s for f in fam}
    return FiniteSpace(n, fam | {0, full})


class ContinuousMap:
    """A point map whose preimages of opens are open (checked)."""

    __slots__ = ("source", "target", "point_map")

    def __init__(self, source: FiniteSpace, target: FiniteSpace, point_map):
        point_map = tuple(point_map)
        if len(point_map) != source.point_count:
            raise ValidationError("point map must be total on the source")
        for q in point_map:
            if not 0 <= q < target.point_count:
                raise ValidationError("point map value out of range")
        self.source = source
        self.target = target
        self.point_map = point_map
        for u in target.opens:
            if self.preimage(u) not in source.opens:
                raise ValidationError(
                    f"not continuous: preimage of {sorted(target.points(u))} is not open"
                )

    @classmethod
    def identity(cls, X: FiniteSpace) -> "ContinuousMap":
        return cls(X, X, range(X.point_count))

    def __call__(self, point: int) -> int:
        return self.point_map[point]

    def preimage(self, mask: int) -> int:
        out = 0
        for p, q in enumerate(self.point_map):
            if mask >> q & 1:
                out |= 1 << p
        return out

    def after(self, other: "ContinuousMap") -> "ContinuousMap":
        """self after other (other runs first)."""
        if other.target is not self.source and other.target != self.source:
            raise MismatchError("maps do not compose")
        return ContinuousMap(
            other.source, self.target, tuple(self.point_map[q] for q in other.point_map)
        )


# -- the regular closed and regular open algebras --


def _atoms_of_family(sets: list[int]) -> list[int]:
    """Minimal nonzero members under inclusion."""
    out = []
    for s in sets:
        if s == 0:
            continue
        if not any(t and t != s and t & ~s == 0 for t in sets):
            out.append(s)
    return sorted(out)


@dataclass(frozen=True, eq=False)
class RcAlgebra:
    """The regular closed sets of a space, abstracted to a bit algebra.

    lca carries the standard contact (sets touch) with everything
    bounded: on a finite space every subset is compact, so the compact
    regular closed sets are all of them. atom_sets[i] is the concrete
    point set of abstract atom i.
    """

    space: FiniteSpace
    lca: LocalContactAlgebra
    atom_sets: tuple[int, ...]
    _from_set: dict

    @property
    def algebra(self) -> FiniteBooleanAlgebra:
        return self.lca.algebra

    @property
    def ca(self) -> ContactAlgebra:
        return self.lca.ca

    def to_set(self, x: Element) -> int:
        if x.algebra is not self.algebra:
            raise MismatchError("element from a different algebra")
        out = 0
        for i in x.atom_indices():
            out |= self.atom_sets[i]
        return out

    def from_set(self, mask: int) -> Element:
        try:
            return self._from_set[mask]
        except KeyError:
            raise ValidationError(
                f"{mask:#x} is not a regular closed set of this space"
            ) from None

    def regular_closed_sets(self) -> list[int]:
        return sorted(self._from_set)


def rc_algebra(X: FiniteSpace) -> RcAlgebra:
    rc_sets = [s for s in range(X.full_mask + 1) if closure(X, interior(X, s)) == s]
    atoms = _atoms_of_family(rc_sets)
    k = len(atoms)
    if len(rc_sets) != 1 << k:
        raise InternalInconsistencyError(
            "regular closed family is not a finite Boolean algebra"
        )
    alg = powerset_algebra(k)
    from_set = {}
    for s in rc_sets:
        below = 0
        for i, a in enumerate(atoms):
            if a & ~s == 0:
                below |= 1 << i
        joined = 0
        for i in range(k):
            if below >> i & 1:
                joined |= atoms[i]
        if joined != s:
            raise InternalInconsistencyError(
                "a regular closed set is not the union of the atoms below it"
            )
        if from_set.setdefault(s, Element(alg, below)).mask != below:
            raise InternalInconsistencyError("atom decomposition not unique")
    if len({e.mask for e in from_set.values()}) != len(rc_sets):
        raise InternalInconsistencyError("atom decomposition not injective")
    rows = [
        _or_all(1 << q for q, b in enumerate(atoms) if a & b) for a in atoms
    ]
    structure = ContactStructure(alg, rows)
    lca = LocalContactAlgebra(ContactAlgebra(alg, structure), alg.one)
    return RcAlgebra(X, lca, tuple(atoms), from_set)


def _or_all(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


@dataclass(frozen=True, eq=False)
class RoAlgebra:
    """The regular open sets with the closures-touch contact, plus the
    closure map onto the regular closed algebra (checked to be an
    isomorphism of contact algebras)."""

    space: FiniteSpace
    ca: ContactAlgebra
    atom_sets: tuple[int, ...]
    rc: RcAlgebra
    nu: BooleanHomomorphism
    _from_set: dict

    @property
    def algebra(self) -> FiniteBooleanAlgebra:
        return self.ca.algebra

    def to_set(self, x: Element) -> int:
        if x.algebra is not self.algebra:
            raise MismatchError("element from a different algebra")
        union = 0
        for i in x.atom_indices():
            union |= self.atom_sets[i]
        return interior(self.space, closure(self.space, union))

    def from_set(self, mask: int) -> Element:
        try:
            return self._from_set[mask]
        except KeyError:
            raise ValidationError(
                f"{mask:#x} is not a regular open set of this space"
            ) from None

    def regular_open_sets(self) -> list[int]:
        return sorted(self._from_set)


def ro_algebra(X: FiniteSpace) -> RoAlgebra:
    rc = rc_algebra(X)
    ro_sets = [s for s in range(X.full_mask + 1) if interior(X, closure(X, s)) == s]
    atoms = _atoms_of_family(ro_sets)
    k = len(atoms)
    if len(ro_sets) != 1 << k:
        raise InternalInconsistencyError(
            "regular open family is not a finite Boolean algebra"
        )
    alg = powerset_algebra(k)
    from_set = {}
    for s in ro_sets:
        below = 0
        for i, a in enumerate(atoms):
            if a & ~s == 0:
                below |= 1 << i
        from_set[s] = Element(alg, below)
    rows = [
        _or_all(
            1 << q
            for q, b in enumerate(atoms)
            if closure(X, a) & closure(X, b)
        )
        for a in atoms
    ]
    ca = ContactAlgebra(alg, ContactStructure(alg, rows))

    mapping = []
    for m in range(alg.size):
        union = 0
        for i in range(k):
            if m >> i & 1:
                union |= atoms[i]
        ro_set = interior(X, closure(X, union))
        if ro_set not in from_set or from_set[ro_set].mask != m:
            raise InternalInconsistencyError(
                "a regular open set is not the join of the atoms below it"
            )
        mapping.append(rc.from_set(closure(X, ro_set)).mask)
    nu = BooleanHomomorphism(alg, rc.algebra, tuple(mapping))
    law = check_homomorphism(nu)
    if not law.ok:
        raise InternalInconsistencyError(
            f"closure map is not a Boolean homomorphism (fails {law.law})"
        )
    if not is_ca_isomorphism(nu, ca, rc.lca.ca):
        raise InternalInconsistencyError(
            "closure map is not an isomorphism of contact algebras"
        )
    return RoAlgebra(X, ca, tuple(atoms), rc, nu, from_set)


# -- covers, order, dimension --


@dataclass(frozen=True)
class SetFamily:
    """An indexed family of point sets; duplicates are allowed."""

    space: FiniteSpace
    members: tuple[int, ...]

    def __post_init__(self):
        for m in self.members:
            if not 0 <= m <= self.space.full_mask:
                raise ValidationError("family member out of range")

    @classmethod
    def of(cls, space: FiniteSpace, *point_sets) -> "SetFamily":
        return cls(space, tuple(space.mask(s) for s in point_sets))

    def union(self) -> int:
        return _or_all(self.members)

    def is_cover(self) -> bool:
        return self.union() == self.space.full_mask


def family_order(F: SetFamily) -> int:
    """Largest n such that some n+1 distinct members meet; -1 when the
    family holds nothing but the empty set. Duplicate entries name the
    same set, so they are collapsed first."""
    distinct = set(F.members)
    if not distinct:
        raise ValidationError("order of an empty family")
    if distinct == {0}:
        return -1
    best = 0
    for p in range(F.space.point_count):
        bit = 1 << p
        best = max(best, sum(1 for m in distinct if m & bit))
    return best - 1


@dataclass(frozen=True)
class CoverReport:
    """How the family F stands relative to G. The indexed predicates
    (shrinking, swelling) are None when the index sets differ."""

    is_cover: bool
    is_refinement: bool
    is_shrinking: bool | None
    is_swelling: bool | None
    swelling_witness: tuple[int, ...] | None = None


def cover_predicates(F: SetFamily, G: SetFamily) -> CoverReport:
    if F.space != G.space:
        raise MismatchError("families over different spaces")
    covers = F.is_cover()
    refinement = (
        covers
        and G.is_cover()
        and all(any(b & ~a == 0 for a in G.members) for b in F.members)
    )
    shrinking: bool | None = None
    swelling: bool | None = None
    witness: tuple[int, ...] | None = None
    if len(F.members) == len(G.members):
        shrinking = covers and all(
            b & ~a == 0 for b, a in zip(F.members, G.members)
        )
        swelling = True
        for i, (b, a) in enumerate(zip(F.members, G.members)):
            if a & ~b:  # swelling must contain what it swells
                swelling = False
                witness = (i,)
                break
        if swelling:
            n = len(F.members)
            for r in range(1, n + 1):
                for combo in itertools.combinations(range(n), r):
                    small = _and_all(G.members[i] for i in combo)
                    big = _and_all(F.members[i] for i in combo)
                    if (small == 0) != (big == 0):
                        swelling = False
                        witness = combo
                        break
                if not swelling:
                    break
    return CoverReport(covers, refinement, shrinking, swelling, witness)


def is_shrinking_of(F: SetFamily, G: SetFamily) -> bool:
    report = _indexed(F, G)
    return bool(report.is_shrinking)


def is_swelling_of(F: SetFamily, G: SetFamily) -> bool:
    report = _indexed(F, G)
    return bool(report.is_swelling)


def _indexed(F: SetFamily, G: SetFamily) -> CoverReport:
    if len(F.members) != len(G.members):
        raise ValidationError("shrinking/swelling need equal index sets")
    return cover_predicates(F, G)


def _and_all(masks) -> int:
    out = -1
    for m in masks:
        out &= m
    return out


def _irredundant_covers(X: FiniteSpace) -> Iterator[tuple[int, ...]]:
    """Covers by distinct nonempty opens from which no member can be
    dropped. Every open cover is refined by one of these, so the
    dimension predicate may quantify over them alone (the suite checks
    that equivalence against the unrestricted enumerator on tiny
    spaces).

    Enumeration works point by point: each recursion step covers the
    lowest point still missing, so the depth never exceeds the point
    count. A member is droppable exactly when it has no point of its
    own, and private points only shrink as members are added, which
    makes that a sound prune. One family can be assembled in several
    orders, hence the seen-set.
    """
    full = X.full_mask
    if full == 0:
        yield ()
        return
    opens = [u for u in X.open_masks() if u]
    by_point = [[u for u in opens if u >> p & 1] for p in range(X.point_count)]
    seen: set[frozenset[int]] = set()

    def extend(chosen: list[int], privates: list[int], covered: int):
        if covered == full:
            key = frozenset(chosen)
            if key not in seen:
                seen.add(key)
                yield tuple(sorted(chosen))
            return
        rest = ~covered & full
        p = (rest & -rest).bit_length() - 1
        for u in by_point[p]:
            shrunk = [pr & ~u for pr in privates]
            if any(s == 0 for s in shrunk):
                continue
            chosen.append(u)
            shrunk.append(u & ~covered)
            yield from extend(chosen, shrunk, covered | u)
            chosen.pop()

    yield from extend([], [], 0)


def _all_covers(X: FiniteSpace) -> Iterator[tuple[int, ...]]:
    opens = [u for u in X.open_masks() if u]
    for r in range(len(opens) + 1):
        for combo in itertools.combinations(opens, r):
            if _or_all(combo) == X.full_mask:
                yield combo


def _has_refinement_of_order(X: FiniteSpace, cover: tuple[int, ...], n: int) -> bool:
    """Is there an open cover refining the given one with order <= n?"""
    candidates = sorted(
        {u for u in X.opens if u and any(u & ~c == 0 for c in cover)}
    )
    limit = n + 1
    counts = [0] * X.point_count

    def extend(covered: int) -> bool:
        if covered == X.full_mask:
            return True
        p = (~covered & X.full_mask & -(~covered & X.full_mask)).bit_length() - 1
        for u in candidates:
            if not u >> p & 1:
                continue
            if any(counts[q] >= limit for q in X.points(u)):
                continue
            for q in X.points(u):
                counts[q] += 1
            if extend(covered | u):
                return True
            for q in X.points(u):
                counts[q] -= 1
        return False

    return extend(0)


def dim_cl(X: FiniteSpace, n_cap: int = 3, all_covers: bool = False) -> int | None:
    """Covering dimension: least n such that every finite open cover has
    an open refinement in which at most n+1 members share a point.

    -1 exactly for the empty space; None when every n up to the cap
    fails. By default the outer quantifier runs over irredundant covers
    of distinct opens; all_covers switches to the unrestricted
    enumerator (for the equivalence test only, it is far slower).
    """
    if X.point_count == 0:
        return -1
    enumerate_covers = _all_covers if all_covers else _irredundant_covers
    for n in range(0, n_cap + 1):
        if all(
            _has_refinement_of_order(X, cover, n) for cover in enumerate_covers(X)
        ):
            return n
    return None


@dataclass(frozen=True)
class RegularShrinkingReport:
    """Dimension at most n, tested through regular covers: every regular
    open cover of size n+2 must admit a regular closed shrinking with
    empty total intersection. The corollary form additionally demands
    the shrinking's interiors cover the space. within_hypotheses marks
    the finite reading of the theorem's assumptions (normal and T1, i.e.
    discrete); outside them the predicate is still computed but proves
    nothing."""

    holds: bool
    corollary_holds: bool
    within_hypotheses: bool

    def __bool__(self) -> bool:
        return self.holds


def regular_shrinking_dim_check(X: FiniteSpace, n: int) -> RegularShrinkingReport:
    if n < -1:
        raise ValidationError("n must be at least -1")
    size = n + 2
    ro_sets = [s for s in range(X.full_mask + 1) if interior(X, closure(X, s)) == s]
    rc_sets = [s for s in range(X.full_mask + 1) if closure(X, interior(X, s)) == s]

    def shrink(cover: tuple[int, ...], need_interior_cover: bool) -> bool:
        per_slot = [[f for f in rc_sets if f & ~u == 0] for u in cover]

        def pick(i: int, covered: int, met: int, int_covered: int) -> bool:
            if i == size:
                return (
                    covered == X.full_mask
                    and met == 0
                    and (not need_interior_cover or int_covered == X.full_mask)
                )
            for f in per_slot[i]:
                if pick(i + 1, covered | f, met & f, int_covered | interior(X, f)):
                    return True
            return False

        return pick(0, 0, X.full_mask if size else 0, 0)

    holds = True
    corollary = True
    for cover in itertools.combinations_with_replacement(ro_sets, size):
        if _or_all(cover) != X.full_mask:
            continue
        if holds and not shrink(cover, False):
            holds = False
        if corollary and not shrink(cover, True):
            corollary = False
        if not holds and not corollary:
            break
    within = X.is_discrete
    if within:
        d = dim_cl(X, n_cap=max(n, 0))
        agrees = (d is not None and d <= n) == holds
        if not agrees:
            raise InternalInconsistencyError(
                "regular-cover test disagrees with covering dimension on a discrete space"
            )
    return RegularShrinkingReport(holds, corollary, within)


# -- cardinal invariants --


def weight_of_space(X: FiniteSpace) -> int:
    """Least size of an open base.

    The minimal neighborhood of each point belongs to every base (it
    must be a union of base members, one of which contains the point and
    hence equals it), and those neighborhoods already form a base, so
    the forced set is the minimum. The suite checks this against a blind
    subset search on small spaces.
    """
    forced = {X.minimal_neighborhood(p) for p in range(X.point_count)}
    for u in X.opens:
        gen = _or_all(b for b in forced if b & ~u == 0)
        if gen != u:
            raise InternalInconsistencyError(
                "minimal neighborhoods failed to generate an open set"
            )
    return len(forced)


def pi_weight_of_space(X: FiniteSpace) -> int:
    """Least size of a pi-base (nonempty opens hitting below every
    nonempty open); the minimal nonzero opens are forced and suffice."""
    minimal = [
        u
        for u in X.opens
        if u and not any(v and v != u and v & ~u == 0 for v in X.opens)
    ]
    for u in X.opens:
        if u and not any(v & ~u == 0 for v in minimal):
            raise InternalInconsistencyError(
                "minimal opens missed a nonempty open from above"
            )
    return len(minimal)


def is_semiregular(X: FiniteSpace) -> bool:
    """Do the regular open sets form a base?"""
    ro_sets = [s for s in X.opens if interior(X, closure(X, s)) == s]
    return all(
        _or_all(b for b in ro_sets if b & ~u == 0) == u for u in X.opens
    )


def is_pi_semiregular(X: FiniteSpace) -> bool:
    """Do the regular open sets form a pi-base? When they do, the
    pi-weight of the space must agree with the pi-weight of its regular
    closed algebra, and that equality is asserted here."""
    ro_sets = [s for s in range(X.full_mask + 1) if interior(X, closure(X, s)) == s]
    result = all(
        any(v and v & ~u == 0 for v in ro_sets) for u in X.opens if u
    )
    if result:
        from .weight import pi_weight

        if pi_weight_of_space(X) != pi_weight(rc_algebra(X).algebra):
            raise InternalInconsistencyError(
                "pi-weight of a pi-semiregular space disagrees with its regular closed algebra"
            )
    return result


# -- the contravariant functor and Stone duality --


def lambda_t_map(
    f: ContinuousMap,
    target_rc: RcAlgebra | None = None,
    source_rc: RcAlgebra | None = None,
) -> LcaMorphismTable:
    """The regular closed functor on a continuous map: G maps to the
    closure of the preimage of its interior, read contravariantly as a
    table from the target's algebra to the source's.

    Pass prebuilt RcAlgebra values to keep tables composable (tables
    over separately built algebras compare unequal by design). When both
    spaces are discrete the result is asserted to satisfy the bounded
    morphism axioms; outside that case it is returned as computed.
    """
    t_rc = target_rc if target_rc is not None else rc_algebra(f.target)
    s_rc = source_rc if source_rc is not None else rc_algebra(f.source)
    if t_rc.space != f.target or s_rc.space != f.source:
        raise MismatchError("rc algebras do not match the map's spaces")
    mapping = []
    for m in range(t_rc.algebra.size):
        g = t_rc.to_set(Element(t_rc.algebra, m))
        image = closure(f.source, f.preimage(interior(f.target, g)))
        mapping.append(s_rc.from_set(image).mask)
    table = LcaMorphismTable(t_rc.lca, s_rc.lca, tuple(mapping))
    if f.source.is_discrete and f.target.is_discrete:
        report = check_dhlc_morphism(table)
        if not report.ok:
            raise InternalInconsistencyError(
                f"functor image of a discrete-space map fails {report.axiom}"
            )
    return table


def stone_dual(B: FiniteBooleanAlgebra) -> FiniteSpace:
    """The dual space of a finite algebra: discrete on its atoms."""
    return discrete_space(B.atom_count)


def clopen_sets(X: FiniteSpace) -> list[int]:
    return sorted(u for u in X.opens if (X.full_mask ^ u) in X.opens)


def co_algebra(X: FiniteSpace) -> FiniteBooleanAlgebra:
    """Abstract algebra of the clopen sets."""
    clopens = clopen_sets(X)
    atoms = _atoms_of_family(clopens)
    if len(clopens) != 1 << len(atoms):
        raise InternalInconsistencyError("clopen family is not a Boolean algebra")
    return powerset_algebra(len(atoms))


def is_connected_space(X: FiniteSpace) -> bool:
    """No proper nonempty clopen subset; checked against connectedness
    of the regular closed contact algebra, which must agree."""
    result = len(clopen_sets(X)) <= 2
    if is_connected(rc_algebra(X).ca) != result:
        raise InternalInconsistencyError(
            "space connectedness disagrees with the regular closed algebra"
        )
    return result


def enumerate_topologies(n: int) -> Iterator[FiniteSpace]:
    """All topologies on n labeled points, by filtering candidate
    families; n is capped at 4 (the candidate count is 2^(2^n - 2))."""
    if not 0 <= n <= 4:
        raise ValidationError("topology enumeration is capped at 4 points")
    full = (1 << n) - 1
    inner = [m for m in range(full + 1) if m not in (0, full)]
    for bits in range(1 << len(inner)):
        fam = {0, full}
        for i, m in enumerate(inner):
            if bits >> i & 1:
                fam.add(m)
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            yield FiniteSpace(n, fam)

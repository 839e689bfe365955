"""Finite Boolean algebras as power sets of a fixed atom set.

Every finite Boolean algebra is the power set of its atoms, so an algebra
here is just an atom count and an element is a bitmask over the atoms
(bit i set = atom i below the element). Join, meet and complement are the
bitwise operations; the partial order is the subset order. The degenerate
one-element algebra (zero atoms, 0 = 1) is a first-class citizen because
several boundary results depend on it.

Elements remember which algebra object they belong to, and operations on
elements of two different algebra *objects* are rejected rather than
coerced, even when the atom counts agree. Silent coercion is exactly the
kind of thing that hides a wiring bug between an abstract algebra and its
topological double.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import MismatchError, ValidationError

DEFAULT_MAX_ATOMS = 24


class FiniteBooleanAlgebra:
    """Power-set Boolean algebra on atoms 0..atom_count-1."""

    __slots__ = ("atom_count", "full_mask")

    def __init__(self, atom_count: int, max_atoms: int = DEFAULT_MAX_ATOMS):
        if atom_count < 0:
            raise ValidationError("atom_count must be >= 0")
        if atom_count > max_atoms:
            raise ValidationError(
                f"atom_count {atom_count} exceeds the practical cap {max_atoms}"
            )
        self.atom_count = atom_count
        self.full_mask = (1 << atom_count) - 1

    # Identity semantics on purpose: two separately built 3-atom algebras
    # are isomorphic but not interchangeable (see module docstring).

    def __repr__(self) -> str:
        return f"FiniteBooleanAlgebra({self.atom_count})"

    @property
    def size(self) -> int:
        return 1 << self.atom_count

    @property
    def is_degenerate(self) -> bool:
        return self.atom_count == 0

    def element(self, mask: int) -> "Element":
        """Wrap a bitmask as an element of this algebra."""
        if not 0 <= mask <= self.full_mask:
            raise ValidationError(f"mask {mask:#x} out of range for {self!r}")
        return Element(self, mask)

    def from_atoms(self, atoms: Iterable[int]) -> "Element":
        mask = 0
        for i in atoms:
            if not 0 <= i < self.atom_count:
                raise ValidationError(f"atom index {i} out of range for {self!r}")
            mask |= 1 << i
        return Element(self, mask)

    @property
    def zero(self) -> "Element":
        return Element(self, 0)

    @property
    def one(self) -> "Element":
        return Element(self, self.full_mask)

    def atoms(self) -> list["Element"]:
        return [Element(self, 1 << i) for i in range(self.atom_count)]

    def elements(self) -> Iterator["Element"]:
        """All elements, in increasing mask order."""
        for mask in range(self.size):
            yield Element(self, mask)


def powerset_algebra(atom_count: int, max_atoms: int = DEFAULT_MAX_ATOMS) -> FiniteBooleanAlgebra:
    """The power-set algebra on the given number of atoms."""
    return FiniteBooleanAlgebra(atom_count, max_atoms=max_atoms)


@dataclass(frozen=True)
class Element:
    """An element of a FiniteBooleanAlgebra: a set of atoms as a bitmask.

    Comparison operators implement the lattice partial order (subset),
    mirroring frozenset semantics. For a total order (sorting, canonical
    witnesses) use the mask as the key.
    """

    algebra: FiniteBooleanAlgebra
    mask: int

    def _check(self, other: "Element") -> None:
        if self.algebra is not other.algebra:
            raise MismatchError(
                f"elements of different algebras: {self.algebra!r} vs {other.algebra!r}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.mask))

    def __or__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, self.mask | other.mask)

    def __and__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, self.mask & other.mask)

    def __xor__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, self.mask ^ other.mask)

    def __invert__(self) -> "Element":
        return Element(self.algebra, self.mask ^ self.algebra.full_mask)

    def __le__(self, other: "Element") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Element") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "Element") -> bool:
        self._check(other)
        return other <= self

    def __gt__(self, other: "Element") -> bool:
        return other < self

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def is_one(self) -> bool:
        return self.mask == self.algebra.full_mask

    @property
    def is_atom(self) -> bool:
        return self.mask != 0 and self.mask & (self.mask - 1) == 0

    def atom_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.algebra.atom_count) if self.mask >> i & 1)

    def __repr__(self) -> str:
        inner = ",".join(str(i) for i in self.atom_indices())
        return "{" + inner + "}"


_BINARY_OPS: dict[str, Callable[[Element, Element], object]] = {
    "join": lambda a, b: a | b,
    "meet": lambda a, b: a & b,
    "symdiff": lambda a, b: a ^ b,
    "leq": lambda a, b: a <= b,
}


def boolean_operation(op: str, a: Element, b: Element | None = None):
    """Dispatch join/meet/complement/symdiff/leq by name.

    The operators on Element are the normal API; this exists for callers
    that receive the operation name as data (the CLI, generic law tests).
    """
    if op == "complement":
        if b is not None:
            raise ValidationError("complement is unary")
        return ~a
    try:
        fn = _BINARY_OPS[op]
    except KeyError:
        raise ValidationError(f"unknown operation {op!r}") from None
    if b is None:
        raise ValidationError(f"{op} is binary")
    return fn(a, b)


@dataclass(frozen=True)
class RelativeAlgebra:
    """The relative algebra B|u = {x : x <= u} with its order embedding.

    `algebra` is a fresh power-set algebra on the atoms below u; `embed`
    maps its elements injectively onto {x <= u} in the parent, `restrict`
    inverts that. Complement inside `algebra` is the relative complement
    x* ∧ u of the parent.
    """

    parent: FiniteBooleanAlgebra
    top: Element
    algebra: FiniteBooleanAlgebra
    _atom_positions: tuple[int, ...]

    def embed(self, x: Element) -> Element:
        if x.algebra is not self.algebra:
            raise MismatchError("element does not belong to the relative algebra")
        mask = 0
        for rel_bit, parent_bit in enumerate(self._atom_positions):
            if x.mask >> rel_bit & 1:
                mask |= 1 << parent_bit
        return Element(self.parent, mask)

    def restrict(self, y: Element) -> Element:
        if y.algebra is not self.parent:
            raise MismatchError("element does not belong to the parent algebra")
        if y.mask & ~self.top.mask:
            raise ValidationError(f"{y!r} is not below the relative top {self.top!r}")
        mask = 0
        for rel_bit, parent_bit in enumerate(self._atom_positions):
            if y.mask >> parent_bit & 1:
                mask |= 1 << rel_bit
        return Element(self.algebra, mask)


def relative_algebra(parent: FiniteBooleanAlgebra, u: Element) -> RelativeAlgebra:
    """Build the relative algebra on {x : x <= u}.

    u = 0 gives the degenerate algebra; u = 1 an isomorphic copy of parent.
    """
    if u.algebra is not parent:
        raise MismatchError("u must belong to the parent algebra")
    positions = u.atom_indices()
    sub = FiniteBooleanAlgebra(len(positions))
    return RelativeAlgebra(parent, u, sub, positions)


def is_dense_subset(algebra: FiniteBooleanAlgebra, members: Iterable[Element]) -> bool:
    """Is M dense: every nonzero b has a nonzero x in M with x <= b?"""
    masks = []
    for x in members:
        if x.algebra is not algebra:
            raise MismatchError("dense-subset member from a different algebra")
        if x.mask:
            masks.append(x.mask)
    for b in range(1, algebra.size):
        if not any(m & ~b == 0 for m in masks):
            return False
    return True


@dataclass(frozen=True)
class DenseSearchResult:
    size: int
    witness: frozenset[Element]


def min_dense_cardinality(algebra: FiniteBooleanAlgebra) -> DenseSearchResult:
    """Minimum cardinality of a dense subset, with one minimum witness.

    The only nonzero element below an atom is the atom itself, so every
    dense set contains every atom; the atom set is itself dense. That
    forces the minimum to be the atom count (0 for the degenerate algebra,
    where the empty set is vacuously dense). Minimality is re-checked by
    brute force in the test suite on small algebras.
    """
    witness = frozenset(algebra.atoms())
    assert is_dense_subset(algebra, witness)
    return DenseSearchResult(len(witness), witness)


@dataclass(frozen=True)
class Subalgebra:
    """A Boolean subalgebra given by its member set (checked at build)."""

    parent: FiniteBooleanAlgebra
    members: frozenset[Element]

    def __post_init__(self):
        full = self.parent.full_mask
        masks = set()
        for x in self.members:
            if x.algebra is not self.parent:
                raise MismatchError("subalgebra member from a different algebra")
            masks.add(x.mask)
        if 0 not in masks or full not in masks:
            raise ValidationError("a subalgebra must contain 0 and 1")
        for m in masks:
            if m ^ full not in masks:
                raise ValidationError("subalgebra not closed under complement")
        for m, n in itertools.combinations(masks, 2):
            if m & n not in masks:
                raise ValidationError("subalgebra not closed under meet")

    def __contains__(self, x: Element) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)


def generated_subalgebra(
    algebra: FiniteBooleanAlgebra, generators: Iterable[Element]
) -> Subalgebra:
    """Closure of the generators under meet and complement (join follows)."""
    masks = {0, algebra.full_mask}
    for g in generators:
        if g.algebra is not algebra:
            raise MismatchError("generator from a different algebra")
        masks.add(g.mask)
    changed = True
    while changed:
        changed = False
        current = list(masks)
        for m in current:
            c = m ^ algebra.full_mask
            if c not in masks:
                masks.add(c)
                changed = True
        current = list(masks)
        for m in current:
            for n in current:
                mn = m & n
                if mn not in masks:
                    masks.add(mn)
                    changed = True
    return Subalgebra(algebra, frozenset(Element(algebra, m) for m in masks))


def all_subalgebras(algebra: FiniteBooleanAlgebra) -> Iterator[Subalgebra]:
    """Every Boolean subalgebra, one per partition of the atom set.

    Subalgebras of a finite power set are exactly the unions-of-blocks
    algebras of atom partitions, so this enumeration is complete.
    """
    for blocks in _set_partitions(list(range(algebra.atom_count))):
        block_masks = []
        for block in blocks:
            m = 0
            for i in block:
                m |= 1 << i
            block_masks.append(m)
        members = set()
        for r in range(len(block_masks) + 1):
            for combo in itertools.combinations(block_masks, r):
                u = 0
                for m in combo:
                    u |= m
                members.add(u)
        yield Subalgebra(
            algebra, frozenset(Element(algebra, m) for m in members)
        )


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partial in _set_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [[first] + partial[i]] + partial[i + 1 :]
        yield [[first]] + partial


@dataclass(frozen=True)
class BooleanHomomorphism:
    """A total map between two algebras, stored as a mask-indexed tuple.

    mapping[source_mask] = target_mask. Nothing about the map is assumed;
    run check_homomorphism to find out whether it preserves the structure.
    """

    source: FiniteBooleanAlgebra
    target: FiniteBooleanAlgebra
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.source.size:
            raise ValidationError("mapping must be total on the source algebra")
        for m in self.mapping:
            if not 0 <= m <= self.target.full_mask:
                raise ValidationError("mapping value out of range for the target")

    def __call__(self, x: Element) -> Element:
        if x.algebra is not self.source:
            raise MismatchError("argument is not a source-algebra element")
        return Element(self.target, self.mapping[x.mask])

    @classmethod
    def from_atom_map(
        cls,
        source: FiniteBooleanAlgebra,
        target: FiniteBooleanAlgebra,
        atom_map: tuple[int, ...],
    ) -> "BooleanHomomorphism":
        """The homomorphism induced by assigning a source atom to each target atom.

        h(x) = {target atom q : atom_map[q] below x}. Every homomorphism
        between finite power-set algebras arises this way, so enumerating
        atom maps enumerates all of them.
        """
        if len(atom_map) != target.atom_count:
            raise ValidationError("atom_map must assign a source atom to each target atom")
        for p in atom_map:
            if not 0 <= p < source.atom_count:
                raise ValidationError(f"source atom index {p} out of range")
        mapping = []
        for mask in range(source.size):
            img = 0
            for q, p in enumerate(atom_map):
                if mask >> p & 1:
                    img |= 1 << q
            mapping.append(img)
        return cls(source, target, tuple(mapping))

    @classmethod
    def identity(cls, algebra: FiniteBooleanAlgebra) -> "BooleanHomomorphism":
        return cls(algebra, algebra, tuple(range(algebra.size)))

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size


@dataclass(frozen=True)
class LawReport:
    ok: bool
    law: str | None = None
    witness: tuple = ()


def check_homomorphism(h: BooleanHomomorphism) -> LawReport:
    """Check 0, 1, meet and complement preservation (join follows).

    Returns the first violated law with a witness, scanning masks in
    increasing order so the report is deterministic.
    """
    f = h.mapping
    src, tgt = h.source, h.target
    if f[0] != 0:
        return LawReport(False, "zero", (src.zero,))
    if f[src.full_mask] != tgt.full_mask:
        return LawReport(False, "one", (src.one,))
    for a in range(src.size):
        if f[a ^ src.full_mask] != f[a] ^ tgt.full_mask:
            return LawReport(False, "complement", (Element(src, a),))
    for a in range(src.size):
        fa = f[a]
        for b in range(a, src.size):
            if f[a & b] != fa & f[b]:
                return LawReport(False, "meet", (Element(src, a), Element(src, b)))
    return LawReport(True)


def all_homomorphisms(
    source: FiniteBooleanAlgebra, target: FiniteBooleanAlgebra
) -> Iterator[BooleanHomomorphism]:
    """Every Boolean homomorphism source -> target, via atom maps."""
    if source.atom_count == 0 and target.atom_count > 0:
        return  # 0 = 1 cannot be preserved into a nondegenerate algebra
    for atom_map in itertools.product(
        range(source.atom_count), repeat=target.atom_count
    ):
        yield BooleanHomomorphism.from_atom_map(source, target, atom_map)

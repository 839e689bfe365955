"""Contact algebras with a distinguished ideal of bounded elements.

The bounded ideal is stored as its top element u (every ideal of a finite
Boolean algebra is principal; the test suite re-checks that fact), so the
bounded elements are exactly {b : b <= u}. The three locality axioms LC1,
LC2, LC3 tie the ideal to the relation; a structure passing the contact
bundle plus all three is called valid here.

Morphisms in this setting are not Boolean homomorphisms: they preserve 0
and finite meets, interact with the relation through DLC3, and are fixed
points of the lower-sharp transform (DLC5). Composition of two such maps
is the lower-sharp of their plain composite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .boolean import BooleanHomomorphism, Element, FiniteBooleanAlgebra, check_homomorphism, powerset_algebra, relative_algebra
from .contact import AxiomReport, ContactAlgebra, ContactStructure
from .errors import InternalInconsistencyError, MismatchError, ValidationError


class LocalContactAlgebra:
    """A contact algebra plus a principal ideal of bounded elements."""

    __slots__ = ("ca", "bounded_top", "_lca_report", "_valid")

    def __init__(self, ca: ContactAlgebra, bounded_top: Element):
        if bounded_top.algebra is not ca.algebra:
            raise MismatchError("bounded top from a different algebra")
        self.ca = ca
        self.bounded_top = bounded_top
        self._lca_report: AxiomReport | None = None
        self._valid: bool | None = None

    @property
    def algebra(self) -> FiniteBooleanAlgebra:
        return self.ca.algebra

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalContactAlgebra):
            return NotImplemented
        return self.ca == other.ca and self.bounded_top == other.bounded_top

    def __hash__(self) -> int:
        return hash((self.ca, self.bounded_top))

    def __repr__(self) -> str:
        return f"LocalContactAlgebra({self.ca.algebra.atom_count} atoms, u={self.bounded_top!r})"

    def is_bounded(self, x: Element) -> bool:
        if x.algebra is not self.algebra:
            raise MismatchError("element from a different algebra")
        return x.mask & ~self.bounded_top.mask == 0

    def bounded_masks(self) -> list[int]:
        """Masks of all bounded elements, ascending."""
        return sorted(_submasks(self.bounded_top.mask))

    def bounded_elements(self) -> list[Element]:
        return [Element(self.algebra, m) for m in self.bounded_masks()]

    def axiom_report(self) -> AxiomReport:
        if self._lca_report is None:
            self._lca_report = check_lca_axioms(self)
        return self._lca_report

    def is_valid(self) -> bool:
        """Contact bundle plus LC1, LC2, LC3."""
        if self._valid is None:
            self._valid = self.ca.is_contact and self.axiom_report().ok
        return self._valid


def _submasks(u: int) -> list[int]:
    out = [0]
    s = u
    while s:
        out.append(s)
        s = (s - 1) & u
    return out


def nca_as_lca(ca: ContactAlgebra) -> LocalContactAlgebra:
    """View a contact algebra as locally bounded everywhere (u = 1)."""
    return LocalContactAlgebra(ca, ca.algebra.one)


def check_lca_axioms(L: LocalContactAlgebra) -> AxiomReport:
    """Check LC1, LC2, LC3 exhaustively; first failure wins.

    LC1: bounded a << c interpolates through a bounded b.
    LC2: a in contact with b is already in contact with a bounded cut of b.
    LC3: below any nonzero a sits a nonzero bounded b with b << a.
    """
    alg = L.algebra
    full = alg.full_mask
    reach = L.ca.contact.closure_table()
    bounded = sorted(_submasks(L.bounded_top.mask))

    def ll(x: int, y: int) -> bool:
        return reach[x] & (full ^ y) == 0

    for a in bounded:
        for c in range(alg.size):
            if ll(a, c) and not any(ll(a, b) and ll(b, c) for b in bounded):
                return AxiomReport(False, "LC1", (Element(alg, a), Element(alg, c)))
    for a in range(alg.size):
        ra = reach[a]
        for b in range(alg.size):
            if ra & b and not any(ra & (c & b) for c in bounded):
                return AxiomReport(False, "LC2", (Element(alg, a), Element(alg, b)))
    for a in range(1, alg.size):
        if not any(b and ll(b, a) for b in bounded):
            return AxiomReport(False, "LC3", (Element(alg, a),))
    return AxiomReport(True, "LC1-LC3")


def is_dv_dense(L: LocalContactAlgebra, members: Sequence[Element]) -> bool:
    """Is D a base: every bounded pair a << c has d in D with a <= d <= c?

    A known fact states the order form above is equivalent to the
    interpolation form (some d in D with a << d << c). The equivalence is
    a theorem only for valid structures, so for those this computes both
    forms and raises InternalInconsistencyError if they disagree; on
    invalid structures only the defining order form is used.
    """
    alg = L.algebra
    full = alg.full_mask
    u = L.bounded_top.mask
    d_masks = []
    for d in members:
        if d.algebra is not alg:
            raise MismatchError("base member from a different algebra")
        if d.mask & ~u:
            raise ValidationError(f"base member {d!r} is not bounded")
        d_masks.append(d.mask)
    reach = L.ca.contact.closure_table()
    bounded = _submasks(u)

    def ll(x: int, y: int) -> bool:
        return reach[x] & (full ^ y) == 0

    order_form = True
    for a in bounded:
        for c in bounded:
            if ll(a, c) and not any(
                a & ~d == 0 and d & ~c == 0 for d in d_masks
            ):
                order_form = False
                break
        if not order_form:
            break

    if L.is_valid():
        interp_form = True
        for a in bounded:
            for c in bounded:
                if ll(a, c) and not any(
                    ll(a, d) and ll(d, c) for d in d_masks
                ):
                    interp_form = False
                    break
            if not interp_form:
                break
        if interp_form != order_form:
            raise InternalInconsistencyError(
                "order form and interpolation form of base-ness disagree on a valid structure"
            )
    return order_form


# -- morphism tables --


@dataclass(frozen=True)
class LcaMorphismTable:
    """A total map between two bounded contact algebras, mask-indexed.

    Nothing is assumed about the map; run check_dhlc_morphism or
    check_lca_embedding to classify it.
    """

    source: LocalContactAlgebra
    target: LocalContactAlgebra
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.source.algebra.size:
            raise ValidationError("mapping must be total on the source")
        for m in self.mapping:
            if not 0 <= m <= self.target.algebra.full_mask:
                raise ValidationError("mapping value out of target range")

    def __call__(self, x: Element) -> Element:
        if x.algebra is not self.source.algebra:
            raise MismatchError("argument is not a source element")
        return Element(self.target.algebra, self.mapping[x.mask])

    @classmethod
    def identity(cls, L: LocalContactAlgebra) -> "LcaMorphismTable":
        return cls(L, L, tuple(range(L.algebra.size)))

    def as_boolean_homomorphism(self) -> BooleanHomomorphism:
        return BooleanHomomorphism(self.source.algebra, self.target.algebra, self.mapping)


def lower_sharp(t: LcaMorphismTable) -> LcaMorphismTable:
    """The lower-sharp transform: a maps to the join of images of bounded
    elements well inside a. Empty join is 0."""
    src = t.source
    alg = src.algebra
    full = alg.full_mask
    reach = src.ca.contact.closure_table()
    bounded = _submasks(src.bounded_top.mask)
    f = t.mapping
    out = []
    for a in range(alg.size):
        not_a = full ^ a
        img = 0
        for b in bounded:
            if reach[b] & not_a == 0:
                img |= f[b]
        out.append(img)
    return LcaMorphismTable(src, t.target, tuple(out))


def check_dhlc_morphism(t: LcaMorphismTable) -> AxiomReport:
    """Check DLC1 through DLC5 in order; first failure wins.

    DLC1 zero preservation, DLC2 binary meets, DLC3 transport of the
    well-inside relation through complements, DLC4 every bounded target
    element sits under the image of a bounded source element, DLC5 the
    map equals its own lower-sharp.
    """
    src, tgt = t.source, t.target
    f = t.mapping
    s_alg, t_alg = src.algebra, tgt.algebra
    s_full, t_full = s_alg.full_mask, t_alg.full_mask
    s_reach = src.ca.contact.closure_table()
    t_reach = tgt.ca.contact.closure_table()

    if f[0] != 0:
        return AxiomReport(False, "DLC1", (s_alg.zero,))
    for a in range(s_alg.size):
        fa = f[a]
        for b in range(a, s_alg.size):
            if f[a & b] != fa & f[b]:
                return AxiomReport(False, "DLC2", (Element(s_alg, a), Element(s_alg, b)))
    s_bounded = _submasks(src.bounded_top.mask)
    for a in s_bounded:
        fa_star_star = t_full ^ f[a ^ s_full]
        not_reach = t_reach[fa_star_star]
        for b in range(s_alg.size):
            if s_reach[a] & (s_full ^ b) == 0:  # a << b in the source
                if not_reach & (t_full ^ f[b]) != 0:
                    return AxiomReport(False, "DLC3", (Element(s_alg, a), Element(s_alg, b)))
    t_bounded = _submasks(tgt.bounded_top.mask)
    for b in t_bounded:
        if not any(b & ~f[a] == 0 for a in s_bounded):
            return AxiomReport(False, "DLC4", (Element(t_alg, b),))
    sharp = lower_sharp(t).mapping
    for a in range(s_alg.size):
        if f[a] != sharp[a]:
            return AxiomReport(False, "DLC5", (Element(s_alg, a),))
    return AxiomReport(True, "DLC1-DLC5")


def compose_diamond(t2: LcaMorphismTable, t1: LcaMorphismTable) -> LcaMorphismTable:
    """Diamond composition: lower-sharp of the plain composite t2 after t1."""
    if t1.target != t2.source:
        raise MismatchError("tables do not compose: middle algebras differ")
    f1, f2 = t1.mapping, t2.mapping
    plain = tuple(f2[f1[a]] for a in range(len(f1)))
    return lower_sharp(LcaMorphismTable(t1.source, t2.target, plain))


@dataclass(frozen=True)
class EmbeddingReport:
    ok: bool
    preserves: bool
    reflects: bool
    bounded_preserved: bool
    bounded_reflected: bool
    injective: bool
    witness: tuple[Element, ...] = ()


def check_lca_embedding(t: LcaMorphismTable) -> EmbeddingReport:
    """Check the embedding laws on a Boolean homomorphism table: contact
    preserved and reflected, boundedness preserved and reflected.
    Injectivity is reported; for genuine contact algebras it follows from
    preservation. Tables that are not homomorphisms are rejected."""
    src, tgt = t.source, t.target
    f = t.mapping
    hom = check_homomorphism(t.as_boolean_homomorphism())
    if not hom.ok:
        raise ValidationError(f"not a Boolean homomorphism: fails {hom.law}")
    s_reach = src.ca.contact.closure_table()
    t_reach = tgt.ca.contact.closure_table()
    preserves = reflects = True
    witness: tuple[Element, ...] = ()
    for a in range(src.algebra.size):
        for b in range(src.algebra.size):
            s = s_reach[a] & b != 0
            g = t_reach[f[a]] & f[b] != 0
            if s and not g:
                preserves = False
                witness = witness or (Element(src.algebra, a), Element(src.algebra, b))
            if g and not s:
                reflects = False
                witness = witness or (Element(src.algebra, a), Element(src.algebra, b))
    u_s, u_t = src.bounded_top.mask, tgt.bounded_top.mask
    bounded_pres = bounded_refl = True
    for a in range(src.algebra.size):
        a_bounded = a & ~u_s == 0
        fa_bounded = f[a] & ~u_t == 0
        if a_bounded and not fa_bounded:
            bounded_pres = False
        if fa_bounded and not a_bounded:
            bounded_refl = False
    injective = len(set(f)) == len(f)
    ok = preserves and reflects and bounded_pres and bounded_refl
    return EmbeddingReport(
        ok, preserves, reflects, bounded_pres, bounded_refl, injective, witness
    )


@dataclass(frozen=True)
class CompletionReport:
    embedding: LcaMorphismTable
    embedding_ok: bool
    image_is_base: bool

    @property
    def ok(self) -> bool:
        return self.embedding_ok and self.image_is_base


def identity_completion(L: LocalContactAlgebra) -> CompletionReport:
    """A finite structure is its own completion: return the identity
    embedding and verify the embedding laws plus that the bounded part is
    a base for itself. Requires the contact bundle."""
    if not L.ca.is_contact:
        raise ValidationError("identity_completion needs a contact relation")
    ident = LcaMorphismTable.identity(L)
    emb = check_lca_embedding(ident)
    base = is_dv_dense(L, L.bounded_elements())
    return CompletionReport(ident, emb.ok, base)


# -- products and relativization --


@dataclass(frozen=True)
class ProductLca:
    lca: LocalContactAlgebra
    factors: tuple[LocalContactAlgebra, ...]
    projections: tuple[LcaMorphismTable, ...]


def product_lca(factors: Sequence[LocalContactAlgebra]) -> ProductLca:
    """Product over a finite factor list.

    Atoms are the disjoint union of the factor atoms, the relation is
    blockwise (no contact across factors), and the bounded top is the join
    of the factor tops (finite support is automatic for finite lists).
    Projections restrict an element to one factor's block.
    """
    if not factors:
        raise ValidationError("product of an empty factor list")
    offsets = []
    total = 0
    for F in factors:
        offsets.append(total)
        total += F.algebra.atom_count
    alg = powerset_algebra(total)
    rows: list[int] = []
    u = 0
    for F, off in zip(factors, offsets):
        for r in F.ca.contact.rows:
            rows.append(r << off)
        u |= F.bounded_top.mask << off
    structure = ContactStructure(alg, rows)
    product = LocalContactAlgebra(ContactAlgebra(alg, structure), Element(alg, u))
    projections = []
    for F, off in zip(factors, offsets):
        fmask = F.algebra.full_mask
        mapping = tuple((m >> off) & fmask for m in range(alg.size))
        projections.append(LcaMorphismTable(product, F, mapping))
    return ProductLca(product, tuple(factors), tuple(projections))


@dataclass(frozen=True)
class RelativeLca:
    lca: LocalContactAlgebra
    ambient: LocalContactAlgebra
    carrier: object  # the RelativeAlgebra giving embed/restrict

    def embed(self, x: Element) -> Element:
        return self.carrier.embed(x)

    def restrict(self, y: Element) -> Element:
        return self.carrier.restrict(y)


def relative_lca(L: LocalContactAlgebra, m: Element) -> RelativeLca:
    """The structure induced on {x : x <= m}.

    Relation restricted to pairs below m, bounded ideal {b meet m}, and
    relative complement x* meet m (that is what complement means in the
    carrier algebra).
    """
    if m.algebra is not L.algebra:
        raise MismatchError("m from a different algebra")
    if m.is_zero:
        raise ValidationError("cannot relativize at 0")
    carrier = relative_algebra(L.algebra, m)
    positions = m.atom_indices()
    rows = []
    for p in positions:
        ambient_row = L.ca.contact.rows[p]
        r = 0
        for rel_bit, parent_bit in enumerate(positions):
            if ambient_row >> parent_bit & 1:
                r |= 1 << rel_bit
        rows.append(r)
    structure = ContactStructure(carrier.algebra, rows)
    rel_top = carrier.restrict(L.bounded_top & m)
    rel = LocalContactAlgebra(ContactAlgebra(carrier.algebra, structure), rel_top)
    return RelativeLca(rel, L, carrier)


def all_dhlc_morphisms(
    source: LocalContactAlgebra, target: LocalContactAlgebra
) -> Iterator[LcaMorphismTable]:
    """Every DHLC morphism source -> target, for valid finite targets.

    A meet-preserving map is determined by its images of the coatoms
    (every a < 1 is the meet of the coatoms above it, and DLC4 forces the
    image of 1 to be 1 when the target is valid), so enumerating coatom
    assignments and filtering by the axiom check is a complete search.
    """
    import itertools

    s_alg = source.algebra
    t_alg = target.algebra
    k = s_alg.atom_count
    coatoms = [s_alg.full_mask ^ (1 << p) for p in range(k)]
    for images in itertools.product(range(t_alg.size), repeat=k):
        mapping = []
        for mask in range(s_alg.size):
            img = t_alg.full_mask
            for p in range(k):
                if not mask >> p & 1:  # coatoms[p] >= mask
                    img &= images[p]
            mapping.append(img)
        t = LcaMorphismTable(source, target, tuple(mapping))
        if check_dhlc_morphism(t).ok:
            yield t

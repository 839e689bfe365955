"""Command line front end.

Two tiny text formats come in, deterministic plain-text reports go out.

Algebra files::

    # comment
    atoms: 6
    contact: 0 1
    contact: 1 1
    bounded: {0,1,2}

`contact:` lines list exactly the atom pairs that are related; nothing
is closed implicitly (precontact inputs stay representable). Pass
`--close rs` to take the reflexive-symmetric closure. `bounded:` names
the atom set of the bounded ideal's top and defaults to all atoms.

Space files::

    points: 4
    open: {0}
    open: {0,1}

The empty set and the whole space are implied; the family must already
be closed under union and intersection or the file is rejected. A map
file for `space lambda-t` is a space file (the target) plus `map: i j`
lines sending source point i to target point j.

Exit codes: 0 all checks passed, 1 some reported property failed,
2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .boolean import Element, powerset_algebra
from .contact import (
    AXIOM_NAMES,
    ContactAlgebra,
    ContactStructure,
    all_contact_structures,
    check_axiom,
    is_connected,
)
from .dimension import DimensionQuery, dim_a, dim_leq, query
from .errors import InternalInconsistencyError, ValidationError
from .lca import LocalContactAlgebra, product_lca, relative_lca
from .topology import (
    ContinuousMap,
    FiniteSpace,
    dim_cl,
    is_connected_space,
    is_pi_semiregular,
    lambda_t_map,
    pi_weight_of_space,
    rc_algebra,
    ro_algebra,
    weight_of_space,
)
from .weight import algebra_weight, pi_weight


class CliInputError(Exception):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


def _fmt_set(mask: int) -> str:
    bits = []
    i = 0
    while mask:
        if mask & 1:
            bits.append(str(i))
        mask >>= 1
        i += 1
    return "{" + ",".join(bits) + "}"


def _fmt_element(x: Element) -> str:
    return _fmt_set(x.mask)


def _fmt_witness(witness) -> str:
    return ",".join(_fmt_element(x) for x in witness)


def _parse_set(text: str, line: int) -> int:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise CliInputError(f"expected a set like {{0,1}}, got {text!r}", line)
    body = text[1:-1].strip()
    mask = 0
    if body:
        for part in body.split(","):
            try:
                mask |= 1 << int(part.strip())
            except ValueError:
                raise CliInputError(f"bad set member {part.strip()!r}", line) from None
    return mask


def _content_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def parse_algebra_file(text: str, close: str | None = None, cap_atoms: int = 8) -> LocalContactAlgebra:
    atoms: int | None = None
    pairs: list[tuple[int, int]] = []
    bounded_mask: int | None = None
    for i, line in _content_lines(text):
        if line.startswith("atoms:"):
            if atoms is not None:
                raise CliInputError("duplicate atoms: header", i)
            try:
                atoms = int(line[len("atoms:"):].strip())
            except ValueError:
                raise CliInputError("atoms: needs an integer", i) from None
            if atoms < 0:
                raise CliInputError("atom count cannot be negative", i)
            if atoms > cap_atoms:
                raise CliInputError(
                    f"atom count {atoms} exceeds the cap {cap_atoms} (raise with --cap-atoms)", i
                )
        elif line.startswith("contact:"):
            if atoms is None:
                raise CliInputError("contact: before atoms:", i)
            parts = line[len("contact:"):].split()
            if len(parts) != 2:
                raise CliInputError("contact: needs two atom indices", i)
            try:
                p, q = int(parts[0]), int(parts[1])
            except ValueError:
                raise CliInputError("contact: needs integer indices", i) from None
            if not (0 <= p < atoms and 0 <= q < atoms):
                raise CliInputError(f"contact pair ({p},{q}) out of range", i)
            pairs.append((p, q))
        elif line.startswith("bounded:"):
            if atoms is None:
                raise CliInputError("bounded: before atoms:", i)
            bounded_mask = _parse_set(line[len("bounded:"):], i)
            if bounded_mask >> atoms:
                raise CliInputError("bounded: atom out of range", i)
        else:
            raise CliInputError(f"unrecognized line {line!r}", i)
    if atoms is None:
        raise CliInputError("missing atoms: header")
    rows = [0] * atoms
    for p, q in pairs:
        rows[p] |= 1 << q
    if close == "rs":
        for p in range(atoms):
            rows[p] |= 1 << p
        for p in range(atoms):
            for q in range(atoms):
                if rows[p] >> q & 1:
                    rows[q] |= 1 << p
    elif close is not None:
        raise CliInputError(f"unknown closure {close!r} (only 'rs')")
    alg = powerset_algebra(atoms)
    ca = ContactAlgebra(alg, ContactStructure(alg, rows))
    top = alg.one if bounded_mask is None else Element(alg, bounded_mask)
    return LocalContactAlgebra(ca, top)


def algebra_file_text(L: LocalContactAlgebra, comment: str) -> str:
    k = L.algebra.atom_count
    out = [f"# {comment}", f"atoms: {k}"]
    rows = L.ca.contact.rows
    for p in range(k):
        for q in range(k):
            if rows[p] >> q & 1:
                out.append(f"contact: {p} {q}")
    out.append(f"bounded: {_fmt_set(L.bounded_top.mask)}")
    return "\n".join(out) + "\n"


def parse_space_file(text: str):
    points: int | None = None
    opens: set[int] = set()
    maps: list[tuple[int, int, int]] = []
    for i, line in _content_lines(text):
        if line.startswith("points:"):
            if points is not None:
                raise CliInputError("duplicate points: header", i)
            try:
                points = int(line[len("points:"):].strip())
            except ValueError:
                raise CliInputError("points: needs an integer", i) from None
            if points < 0:
                raise CliInputError("point count cannot be negative", i)
        elif line.startswith("open:"):
            if points is None:
                raise CliInputError("open: before points:", i)
            mask = _parse_set(line[len("open:"):], i)
            if mask >> points:
                raise CliInputError("open: point out of range", i)
            opens.add(mask)
        elif line.startswith("map:"):
            parts = line[len("map:"):].split()
            if len(parts) != 2:
                raise CliInputError("map: needs two point indices", i)
            try:
                maps.append((int(parts[0]), int(parts[1]), i))
            except ValueError:
                raise CliInputError("map: needs integer indices", i) from None
        else:
            raise CliInputError(f"unrecognized line {line!r}", i)
    if points is None:
        raise CliInputError("missing points: header")
    opens |= {0, (1 << points) - 1}
    try:
        space = FiniteSpace(points, opens)
    except ValidationError as e:
        raise CliInputError(str(e)) from None
    return space, maps


@dataclass
class Report:
    lines: list[str]
    failed: bool = False

    def emit(self, line: str):
        self.lines.append(line)

    def prop(self, name: str, ok: bool, witness: str = ""):
        if ok:
            self.lines.append(f"PROP {name} PASS")
        else:
            self.failed = True
            suffix = f" {witness}" if witness else ""
            self.lines.append(f"PROP {name} FAIL{suffix}")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise CliInputError(f"cannot read {path}: {e.strerror}") from None


def _cmd_check(args, report: Report):
    L = parse_algebra_file(_read(args.algebra), args.close, args.cap_atoms)
    for name in AXIOM_NAMES:
        r = check_axiom(L.ca, name)
        report.prop(name, r.ok, f"witness={_fmt_witness(r.witness)}" if not r.ok else "")
    for name in ("LC1", "LC2", "LC3"):
        single = _single_lc(L, name)
        report.prop(name, single.ok, f"witness={_fmt_witness(single.witness)}" if not single.ok else "")


def _single_lc(L: LocalContactAlgebra, name: str):
    """Check one LC axiom in isolation (check_lca_axioms stops at the
    first failure, but the report should show all three verdicts)."""
    from .contact import AxiomReport
    from .lca import _submasks

    alg = L.algebra
    full = alg.full_mask
    reach = L.ca.contact.closure_table()
    bounded = sorted(_submasks(L.bounded_top.mask))

    def ll(x, y):
        return reach[x] & (full ^ y) == 0

    if name == "LC1":
        for a in bounded:
            for c in range(alg.size):
                if ll(a, c) and not any(ll(a, b) and ll(b, c) for b in bounded):
                    return AxiomReport(False, name, (Element(alg, a), Element(alg, c)))
    elif name == "LC2":
        for a in range(alg.size):
            ra = reach[a]
            for b in range(alg.size):
                if ra & b and not any(ra & (c & b) for c in bounded):
                    return AxiomReport(False, name, (Element(alg, a), Element(alg, b)))
    else:
        for a in range(1, alg.size):
            if not any(b and ll(b, a) for b in bounded):
                return AxiomReport(False, name, (Element(alg, a),))
    return AxiomReport(True, name)


def _parse_subset(text: str, L: LocalContactAlgebra) -> tuple[Element, ...]:
    alg = L.algebra
    members = {alg.zero, alg.one}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        mask = _parse_set(part, 0)
        if mask > alg.full_mask:
            raise CliInputError(f"subset member {part} out of range")
        members.add(Element(alg, mask))
    return tuple(sorted(members, key=lambda x: x.mask))


def _cmd_dim(args, report: Report):
    L = parse_algebra_file(_read(args.algebra), args.close, args.cap_atoms)
    if args.subset is not None:
        members = _parse_subset(args.subset, L)
        q = DimensionQuery(L.ca, members, args.max_n)
    else:
        q = query(L.ca, None, args.max_n)
    result = dim_a(q, scan_to_cap=args.scan)
    for n, verdict in result.verdicts:
        if verdict:
            report.emit(f"dim_leq({n}) = true")
        else:
            v = dim_leq(q, n)
            detail = ""
            if v.a_tuple:
                a = ";".join(_fmt_element(x) for x in v.a_tuple)
                b = ";".join(_fmt_element(x) for x in v.b_tuple)
                detail = f" counterexample a={a} b={b}"
            report.emit(f"dim_leq({n}) = false{detail}")
    report.emit(f"dim_a = {result.display}")
    if args.scan:
        if result.anomalies:
            pairs = ";".join(f"true_at={i},false_at={j}" for i, j in result.anomalies)
            report.prop("dim_monotone", False, pairs)
        else:
            report.prop("dim_monotone", True)


def _cmd_weight(args, report: Report):
    L = parse_algebra_file(_read(args.algebra), args.close, args.cap_atoms)
    result = algebra_weight(L)
    report.emit(f"w_a = {result.size}")
    report.emit("base = " + " ".join(_fmt_element(x) for x in result.base))


def _cmd_piweight(args, report: Report):
    L = parse_algebra_file(_read(args.algebra), args.close, args.cap_atoms)
    report.emit(f"piw_a = {pi_weight(L.algebra)}")


def _cmd_product(args, report: Report):
    factors = [
        parse_algebra_file(_read(path), args.close, args.cap_atoms)
        for path in args.algebras
    ]
    if sum(F.algebra.atom_count for F in factors) > args.cap_atoms:
        raise CliInputError(f"product exceeds the atom cap {args.cap_atoms}")
    prod = product_lca(factors)
    report.emit(algebra_file_text(prod.lca, "product of " + ", ".join(args.algebras)).rstrip("\n"))


def _cmd_relative(args, report: Report):
    L = parse_algebra_file(_read(args.algebra), args.close, args.cap_atoms)
    mask = _parse_set(args.at, 0)
    if mask > L.algebra.full_mask:
        raise CliInputError("--at atom out of range")
    if mask == 0:
        raise CliInputError("--at needs a nonempty atom set")
    rel = relative_lca(L, Element(L.algebra, mask))
    report.emit(
        algebra_file_text(rel.lca, f"relative algebra of {args.algebra} at {args.at}").rstrip("\n")
    )


def _cmd_space(args, report: Report):
    space, _ = parse_space_file(_read(args.space))
    what = args.what
    if what == "rc":
        rc = rc_algebra(space)
        report.emit(f"RC atoms: {rc.algebra.atom_count}")
        report.emit("RC sets: " + " ".join(_fmt_set(s) for s in rc.regular_closed_sets()))
    elif what == "ro":
        ro = ro_algebra(space)
        report.emit(f"RO atoms: {ro.algebra.atom_count}")
        report.emit("RO sets: " + " ".join(_fmt_set(s) for s in ro.regular_open_sets()))
        for i, a in enumerate(ro.atom_sets):
            image = ro.rc.to_set(ro.nu(Element(ro.algebra, 1 << i)))
            report.emit(f"nu: {_fmt_set(a)} -> {_fmt_set(image)}")
        report.prop("ro_isomorphic_rc", True)
    elif what == "dim":
        value = dim_cl(space, n_cap=args.max_n)
        report.emit(f"dim_CL = {value if value is not None else f'>{args.max_n}'}")
    elif what == "weight":
        report.emit(f"w = {weight_of_space(space)}")
    elif what == "piweight":
        report.emit(f"piw = {pi_weight_of_space(space)}")
    elif what == "connected":
        report.emit(f"connected = {'true' if is_connected_space(space) else 'false'}")
    elif what == "lambda-t":
        if args.map is None:
            raise CliInputError("space lambda-t needs a map file")
        target, map_lines = parse_space_file(_read(args.map))
        if not map_lines:
            raise CliInputError("map file has no map: lines")
        point_map = [None] * space.point_count
        for p, q, line in map_lines:
            if not 0 <= p < space.point_count:
                raise CliInputError(f"map: source point {p} out of range", line)
            if not 0 <= q < target.point_count:
                raise CliInputError(f"map: target point {q} out of range", line)
            if point_map[p] is not None:
                raise CliInputError(f"map: source point {p} mapped twice", line)
            point_map[p] = q
        if any(q is None for q in point_map):
            missing = point_map.index(None)
            raise CliInputError(f"map: source point {missing} unmapped")
        try:
            f = ContinuousMap(space, target, point_map)
        except ValidationError as e:
            raise CliInputError(str(e)) from None
        t_rc = rc_algebra(target)
        s_rc = rc_algebra(space)
        table = lambda_t_map(f, t_rc, s_rc)
        for m in range(t_rc.algebra.size):
            g = t_rc.to_set(Element(t_rc.algebra, m))
            image = s_rc.to_set(table(Element(t_rc.algebra, m)))
            report.emit(f"lambda_t: {_fmt_set(g)} -> {_fmt_set(image)}")
    else:  # pragma: no cover - argparse stops unknown choices
        raise CliInputError(f"unknown space query {what!r}")


def _canonical_rows(rows: tuple[int, ...], k: int) -> str:
    import itertools

    best: str | None = None
    for perm in itertools.permutations(range(k)):
        bits = []
        for p in range(k):
            row = rows[perm[p]]
            bits.append("".join("1" if row >> perm[q] & 1 else "0" for q in range(k)))
        s = "".join(bits)
        if best is None or s < best:
            best = s
    return best or ""


def _cmd_search(args, report: Report):
    if args.atoms < 1 or args.atoms > 5:
        raise CliInputError("search supports --atoms 1..5")
    rs = args.contact_class == "reflexive-symmetric"
    for k in range(1, args.atoms + 1):
        alg = powerset_algebra(k)
        seen: set[str] = set()
        rows_list = []
        for structure in all_contact_structures(alg, reflexive_symmetric=rs):
            canon = _canonical_rows(structure.rows, k)
            if canon in seen:
                continue
            seen.add(canon)
            rows_list.append((canon, structure))
        rows_list.sort(key=lambda t: t[0])
        for canon, structure in rows_list:
            ca = ContactAlgebra(alg, structure)
            bundles = []
            if ca.is_precontact:
                bundles.append("PCA")
            if ca.is_contact:
                bundles.append("CA")
            if ca.is_extensional:
                bundles.append("ECA")
            if ca.is_normal:
                bundles.append("NCA")
            connected = "yes" if is_connected(ca) else "no"
            result = dim_a(query(ca, None, args.max_n))
            if ca.is_contact:
                w = str(algebra_weight(LocalContactAlgebra(ca, alg.one)).size)
            else:
                w = "-"
            report.emit(
                f"atoms={k} rel={canon} bundles={','.join(bundles) or '-'} "
                f"connected={connected} dim_a={result.display} w_a={w}"
            )


def _cmd_crosscheck(args, report: Report):
    space, _ = parse_space_file(_read(args.space))

    def guarded(name: str, fn):
        try:
            ok, witness = fn()
        except InternalInconsistencyError as e:
            report.prop(name, False, f"internal={e}")
            return
        report.prop(name, ok, witness)

    def rc_built():
        rc_algebra(space)
        return True, ""

    guarded("rc_boolean_algebra", rc_built)

    def ro_iso():
        ro_algebra(space)
        return True, ""

    guarded("ro_isomorphic_rc", ro_iso)

    def connect():
        return (is_connected_space(space) == (len([
            u for u in space.opens if (space.full_mask ^ u) in space.opens
        ]) <= 2)), ""

    guarded("connectedness_agreement", connect)

    def valid_iff_discrete():
        rc = rc_algebra(space)
        return rc.lca.is_valid() == space.is_discrete, (
            f"valid={rc.lca.is_valid()} discrete={space.is_discrete}"
        )

    guarded("rc_valid_iff_discrete", valid_iff_discrete)

    def pi_agree():
        if not is_pi_semiregular(space):
            return True, ""
        return pi_weight_of_space(space) == pi_weight(rc_algebra(space).algebra), ""

    guarded("pi_weight_agreement", pi_agree)

    def dim_agree():
        if not space.is_discrete:
            return True, ""
        d_top = dim_cl(space, n_cap=1)
        d_alg = dim_a(query(rc_algebra(space).ca, None, 1)).value
        expected = -1 if space.point_count == 0 else 0
        return d_top == expected and d_alg == expected, f"dim_CL={d_top} dim_a={d_alg}"

    guarded("discrete_dim_agreement", dim_agree)

    def lt_identity():
        rc = rc_algebra(space)
        table = lambda_t_map(ContinuousMap.identity(space), rc, rc)
        return table.mapping == tuple(range(rc.algebra.size)), ""

    guarded("lambda_t_identity", lt_identity)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contactalg",
        description="Finite contact algebra toolkit: axiom checks, dimension, weight, and a finite-topology oracle.",
    )
    parser.add_argument(
        "--cap-atoms",
        type=int,
        default=8,
        help="largest atom count accepted from input files (default 8)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_algebra(p):
        p.add_argument("algebra", help="algebra file")
        p.add_argument("--close", choices=["rs"], default=None, help="apply reflexive-symmetric closure")

    p = sub.add_parser("check", help="axiom bundle report for an algebra file")
    add_algebra(p)

    p = sub.add_parser("dim", help="algebraic dimension")
    add_algebra(p)
    p.add_argument("--max-n", type=int, default=3, help="largest n to test (default 3)")
    p.add_argument("--subset", default=None, help="witness pool D as ;-separated atom sets (0 and 1 are always included)")
    p.add_argument("--scan", action="store_true", help="evaluate every n up to the cap and report monotonicity")

    p = sub.add_parser("weight", help="minimum base cardinality")
    add_algebra(p)

    p = sub.add_parser("piweight", help="minimum dense subset cardinality")
    add_algebra(p)

    p = sub.add_parser("product", help="emit the product algebra as a file")
    p.add_argument("algebras", nargs="+", help="factor algebra files")
    p.add_argument("--close", choices=["rs"], default=None)

    p = sub.add_parser("relative", help="emit the relative algebra below an atom set")
    add_algebra(p)
    p.add_argument("--at", required=True, help="atom set like {0,1,2}")

    p = sub.add_parser("space", help="finite-topology oracle queries")
    p.add_argument(
        "what",
        choices=["rc", "ro", "dim", "weight", "piweight", "connected", "lambda-t"],
    )
    p.add_argument("space", help="space file")
    p.add_argument("map", nargs="?", default=None, help="map file (lambda-t only)")
    p.add_argument("--max-n", type=int, default=3)

    p = sub.add_parser("search", help="enumerate small atom relations and tabulate invariants")
    p.add_argument("--atoms", type=int, required=True, help="enumerate 1..k atoms (k at most 5)")
    p.add_argument(
        "--contact-class",
        choices=["reflexive-symmetric", "all"],
        default="reflexive-symmetric",
    )
    p.add_argument("--max-n", type=int, default=1, help="dimension cap per relation (default 1)")

    p = sub.add_parser("crosscheck", help="space-vs-algebra agreement properties")
    p.add_argument("space", help="space file")
    return parser


_HANDLERS = {
    "check": _cmd_check,
    "dim": _cmd_dim,
    "weight": _cmd_weight,
    "piweight": _cmd_piweight,
    "product": _cmd_product,
    "relative": _cmd_relative,
    "space": _cmd_space,
    "search": _cmd_search,
    "crosscheck": _cmd_crosscheck,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report([])
    try:
        _HANDLERS[args.command](args, report)
    except CliInputError as e:
        where = f"line {e.line}: " if e.line else ""
        print(f"error: {where}{e}", file=sys.stderr)
        return 2
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    for line in report.lines:
        print(line)
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())

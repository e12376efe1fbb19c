"""Triples (acyclic quiver, marked sinks, sink assignment) and the attached algebra.

A triple consists of a finite quiver without oriented cycles, a set of its
sinks, and a function sending each marked sink to a vertex, subject to the
closure rule that every sink in the image is itself marked.  Attaching one
new arrow ``alpha_<d>`` from each marked sink d to its image, and declaring
every two-arrow composition that starts with some ``alpha_<d>`` to be zero,
produces a quadratic monomial algebra; every finite-dimensional algebra whose
projective radicals are all projective or simple arises this way, uniquely up
to isomorphism of triples, and ``extract_triple`` inverts the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra import (MonomialPresentation, check_radicals, profiles)
from .errors import (CrossCheckError, InvalidTripleError, NotQuadraticError,
                     RadicalConditionError)
from .quiver import Arrow, PathWord, Quiver, oriented_cycle_witness


@dataclass(frozen=True)
class Triple:
    name: str
    quiver: Quiver
    assignments: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "assignments",
                           tuple((d, v) for d, v in self.assignments))
        seen = set()
        for d, v in self.assignments:
            if d not in self.quiver.vertex_index:
                raise ValueError(f"unknown vertex {d!r} in assignment")
            if v not in self.quiver.vertex_index:
                raise ValueError(f"unknown vertex {v!r} in assignment")
            if d in seen:
                raise ValueError(f"vertex {d!r} assigned twice")
            seen.add(d)

    @cached_property
    def marked(self) -> tuple[str, ...]:
        return tuple(d for d, _ in self.assignments)

    @cached_property
    def image_of(self) -> dict[str, str]:
        return dict(self.assignments)

    @cached_property
    def image(self) -> tuple[str, ...]:
        out: list[str] = []
        for _, v in self.assignments:
            if v not in out:
                out.append(v)
        return tuple(out)


@dataclass(frozen=True)
class TripleVerdict:
    valid: bool
    clause: int | None       # 1 acyclic, 2 marked vertices are sinks, 3 closure
    clause_name: str | None
    witness: object | None


def validate_triple(t: Triple) -> TripleVerdict:
    """Check the three defining clauses, reporting the first violation."""
    cycle = oriented_cycle_witness(t.quiver)
    if cycle is not None:
        return TripleVerdict(False, 1, "acyclic", cycle)
    for d in t.marked:
        if t.quiver.outgoing[d]:
            return TripleVerdict(False, 2, "sinks", d)
    marked = set(t.marked)
    for y in t.image:
        if not t.quiver.outgoing[y] and y not in marked:
            return TripleVerdict(False, 3, "closure", y)
    return TripleVerdict(True, None, None, None)


def _require_valid(t: Triple) -> None:
    verdict = validate_triple(t)
    if not verdict.valid:
        raise InvalidTripleError(verdict.clause_name, verdict.witness)


def build_algebra(t: Triple) -> MonomialPresentation:
    """Attach the assignment arrows and kill every composition extending them."""
    _require_valid(t)
    existing = {a.name for a in t.quiver.arrows}
    fresh = []
    for d, v in t.assignments:
        name = f"alpha_{d}"
        if name in existing:
            raise ValueError(f"generated arrow id {name!r} collides with an "
                             "existing arrow")
        fresh.append(Arrow(name, d, v))
    arrows = t.quiver.arrows + tuple(fresh)
    quiver = Quiver(t.quiver.vertices, arrows)
    relations = [PathWord((a.name, b.name))
                 for a in fresh
                 for b in arrows if b.source == a.target]
    return MonomialPresentation(t.name, quiver, tuple(relations))


def extract_triple(pres: MonomialPresentation) -> Triple:
    """Recover the triple of a presentation whose radicals are all projective
    or simple: marked sinks are the vertices with a two-element projective
    whose socle is not projective, assigned to their socle vertex."""
    if not pres.is_quadratic:
        raise NotQuadraticError(
            f"presentation {pres.name!r} has a relation longer than two arrows")
    verdict = check_radicals(pres)  # raises InfiniteDimensionalError if needed
    if not verdict.holds:
        raise RadicalConditionError(verdict.witness)
    profs = profiles(pres)
    assignments = []
    removed = set()
    for v in pres.quiver.vertices:
        prof = profs[v]
        if prof.length == 2 and not prof.summands[0].projective:
            assignments.append((v, prof.summands[0].target))
            removed.add(prof.summands[0].arrow)
    quiver = Quiver(pres.quiver.vertices,
                    tuple(a for a in pres.quiver.arrows if a.name not in removed))
    result = Triple(pres.name, quiver, tuple(assignments))
    check = validate_triple(result)
    if not check.valid:
        raise CrossCheckError("extracted triple failed validation",
                              (check.clause_name, check.witness), result)
    return result


@dataclass(frozen=True)
class TripleIso:
    vertex_map: dict[str, str]
    arrow_map: dict[str, str]


def _signature(t: Triple, v: str) -> tuple:
    image_hits = sum(1 for _, w in t.assignments if w == v)
    return (len(t.quiver.outgoing[v]), len(t.quiver.incoming[v]),
            v in t.image_of, image_hits)


def triple_iso(t1: Triple, t2: Triple) -> TripleIso | None:
    """Search for an isomorphism of triples by backtracking over vertex
    bijections with degree pruning; the first one found (candidates scanned in
    declaration order) is returned, so the result is deterministic."""
    q1, q2 = t1.quiver, t2.quiver
    if (len(q1.vertices) != len(q2.vertices)
            or len(q1.arrows) != len(q2.arrows)
            or len(t1.assignments) != len(t2.assignments)):
        return None
    sig1 = {v: _signature(t1, v) for v in q1.vertices}
    sig2 = {v: _signature(t2, v) for v in q2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    def arrow_count(q: Quiver, u: str, v: str) -> int:
        return sum(1 for a in q.outgoing[u] if a.target == v)

    rarity: dict[tuple, int] = {}
    for s in sig1.values():
        rarity[s] = rarity.get(s, 0) + 1
    order = sorted(q1.vertices, key=lambda v: (rarity[sig1[v]], q1.vertex_index[v]))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent(v: str, w: str) -> bool:
        if sig1[v] != sig2[w]:
            return False
        if arrow_count(q1, v, v) != arrow_count(q2, w, w):
            return False
        for u, x in mapping.items():
            if arrow_count(q1, v, u) != arrow_count(q2, w, x):
                return False
            if arrow_count(q1, u, v) != arrow_count(q2, x, w):
                return False
        # assignment compatibility on the part of the map known so far
        img1, img2 = t1.image_of, t2.image_of
        if v in img1:
            if w not in img2:
                return False
            y = img1[v]
            if y in mapping or y == v:
                if img2[w] != (w if y == v else mapping[y]):
                    return False
        for u, x in mapping.items():
            if u in img1 and img1[u] == v and img2[x] != w:
                return False
        return True

    def search(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in q2.vertices:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if search(pos + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if not search(0):
        return None

    # match arrows within each (source, target) class in declaration order
    arrow_map: dict[str, str] = {}
    pool: dict[tuple[str, str], list[str]] = {}
    for a in q2.arrows:
        pool.setdefault((a.source, a.target), []).append(a.name)
    for a in q1.arrows:
        key = (mapping[a.source], mapping[a.target])
        arrow_map[a.name] = pool[key].pop(0)

    iso = TripleIso(dict(mapping), arrow_map)
    _verify_iso(t1, t2, iso)
    return iso


def _verify_iso(t1: Triple, t2: Triple, iso: TripleIso) -> None:
    q1, q2 = t1.quiver, t2.quiver
    ok = (sorted(iso.vertex_map.values()) == sorted(q2.vertices)
          and sorted(iso.arrow_map.values()) == sorted(q2.arrow_by_name))
    for a in q1.arrows:
        b = q2.arrow_by_name[iso.arrow_map[a.name]]
        ok = ok and b.source == iso.vertex_map[a.source]
        ok = ok and b.target == iso.vertex_map[a.target]
    img2 = t2.image_of
    for d, v in t1.assignments:
        ok = ok and img2.get(iso.vertex_map[d]) == iso.vertex_map[v]
    ok = ok and len(t1.assignments) == len(t2.assignments)
    if not ok:
        raise CrossCheckError("triple isomorphism verification failed", iso, (t1, t2))


@dataclass(frozen=True)
class ClauseReport:
    tag: str
    holds: bool
    witness: object | None


@dataclass(frozen=True)
class OppositeReport:
    """Structural test of whether the opposite algebra keeps every projective
    radical projective or simple, read off the triple alone."""
    holds: bool
    clauses: tuple[ClauseReport, ClauseReport, ClauseReport]

    def clause(self, tag: str) -> ClauseReport:
        return next(c for c in self.clauses if c.tag == tag)


def opposite_radical_check(t: Triple) -> OppositeReport:
    """Clause a: every image vertex is a source of the quiver.  Clause b: an
    arrow leaving an image vertex is the only arrow into its target.  Clause
    c: two marked sinks sharing an image are themselves outside the image."""
    _require_valid(t)
    q = t.quiver
    image = set(t.image)

    witness_a = next((y for y in t.image if q.incoming[y]), None)

    witness_b = None
    for a in q.arrows:
        if a.source in image and [b.name for b in q.incoming[a.target]] != [a.name]:
            witness_b = a.name
            break

    witness_c = None
    by_image: dict[str, list[str]] = {}
    for d, v in t.assignments:
        by_image.setdefault(v, []).append(d)
    for v, ds in by_image.items():
        if len(ds) < 2:
            continue
        bad = next((d for d in ds if d in image), None)
        if bad is not None:
            witness_c = bad
            break

    clauses = (ClauseReport("a", witness_a is None, witness_a),
               ClauseReport("b", witness_b is None, witness_b),
               ClauseReport("c", witness_c is None, witness_c))
    return OppositeReport(all(c.holds for c in clauses), clauses)

"""Monomial presentations and the combinatorics of their projective modules.

A presentation is a finite quiver together with a set of relation paths of
length at least two; the algebra it presents has the relation-avoiding paths
as a basis.  The indecomposable projective at a vertex x is spanned by the
relation-avoiding paths starting at x, its radical by the nontrivial ones,
and the radical splits as a direct sum of the cyclic submodules generated by
the arrows leaving x.  Everything this module computes (dimension counts,
projective/simple classification of radical summands, socles) reduces to
exact counting over those path sets.

Finiteness of the path language is decided on a deterministic automaton whose
states are (vertex, recent-arrow window); a reachable cycle in the automaton
yields an oriented cycle of the quiver all of whose repetitions avoid the
relations, which is the witness carried by InfiniteDimensionalError.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InfiniteDimensionalError, NotQuadraticError
from .quiver import Arrow, PathWord, Quiver, oriented_cycle_witness, trivial_word

_State = tuple[str, tuple[str, ...]]


@dataclass(frozen=True)
class _Analysis:
    finite: bool
    cycle: PathWord | None
    cover_lengths: dict[str, int] | None

    @property
    def total_dimension(self) -> int | None:
        if self.cover_lengths is None:
            return None
        return sum(self.cover_lengths.values())


@dataclass(frozen=True)
class MonomialPresentation:
    name: str
    quiver: Quiver
    relations: tuple[PathWord, ...]

    def __post_init__(self):
        seen: dict[tuple[str, ...], PathWord] = {}
        for rel in self.relations:
            if len(rel) < 2:
                raise ValueError(f"relation {rel} is shorter than two arrows")
            self.quiver.check_word(rel)
            seen.setdefault(rel.arrows, rel)
        canonical = tuple(sorted(seen.values(), key=self.quiver.word_sort_key))
        words = [r.arrows for r in canonical]
        for i, shorter in enumerate(words):
            for longer in words[i + 1:]:
                if len(shorter) < len(longer) and any(
                        longer[k:k + len(shorter)] == shorter
                        for k in range(len(longer) - len(shorter) + 1)):
                    raise ValueError(
                        f"relation {shorter} is a subpath of relation {longer}; "
                        "the relation set must be reduced")
        object.__setattr__(self, "relations", canonical)

    @cached_property
    def relation_words(self) -> tuple[tuple[str, ...], ...]:
        return tuple(r.arrows for r in self.relations)

    @cached_property
    def is_quadratic(self) -> bool:
        return all(len(r) == 2 for r in self.relation_words)

    @cached_property
    def quadratic_pairs(self) -> frozenset[tuple[str, str]]:
        if not self.is_quadratic:
            raise NotQuadraticError(
                f"presentation {self.name!r} has a relation longer than two arrows")
        return frozenset((r[0], r[1]) for r in self.relation_words)

    @cached_property
    def _window(self) -> int:
        # length of the arrow window needed to spot a fresh relation suffix
        return max((len(r) for r in self.relation_words), default=1) - 1

    def _blocked(self, tail: tuple[str, ...], arrow_name: str) -> bool:
        """Would appending the arrow to a clean word with this tail hit a relation?"""
        w = tail + (arrow_name,)
        for r in self.relation_words:
            if len(r) <= len(w) and w[-len(r):] == r:
                return True
        return False

    def _next_tail(self, tail: tuple[str, ...], arrow_name: str) -> tuple[str, ...]:
        if self._window == 0:
            return ()
        return (tail + (arrow_name,))[-self._window:]

    @cached_property
    def _analysis(self) -> _Analysis:
        quiver = self.quiver
        WHITE, GRAY, BLACK = 0, 1, 2
        color: dict[_State, int] = {}
        succ: dict[_State, list[tuple[str, _State]]] = {}

        def successors(state: _State) -> list[tuple[str, _State]]:
            got = succ.get(state)
            if got is None:
                vertex, tail = state
                got = [(a.name, (a.target, self._next_tail(tail, a.name)))
                       for a in quiver.outgoing[vertex]
                       if not self._blocked(tail, a.name)]
                succ[state] = got
            return got

        # cycle search over every state reachable from a trivial word
        for v in quiver.vertices:
            root: _State = (v, ())
            if color.get(root, WHITE) != WHITE:
                continue
            color[root] = GRAY
            chain: list[tuple[_State, str | None]] = [(root, None)]
            iters = [iter(successors(root))]
            while iters:
                advanced = False
                for name, nxt in iters[-1]:
                    c = color.get(nxt, WHITE)
                    if c == GRAY:
                        at = next(i for i, (s, _) in enumerate(chain) if s == nxt)
                        names = [e for _, e in chain[at + 1:] if e is not None]
                        names.append(name)
                        return _Analysis(False, PathWord(tuple(names)), None)
                    if c == WHITE:
                        color[nxt] = GRAY
                        chain.append((nxt, name))
                        iters.append(iter(successors(nxt)))
                        advanced = True
                        break
                if not advanced:
                    state, _ = chain.pop()
                    color[state] = BLACK
                    iters.pop()

        # acyclic: count walks; each walk from a trivial state is one basis path
        counts: dict[_State, int] = {}

        def count(state: _State) -> int:
            got = counts.get(state)
            if got is None:
                stack = [state]
                while stack:
                    top = stack[-1]
                    missing = [nxt for _, nxt in successors(top) if nxt not in counts]
                    if missing:
                        stack.extend(missing)
                    else:
                        counts[top] = 1 + sum(counts[nxt] for _, nxt in successors(top))
                        stack.pop()
                got = counts[state]
            return got

        lengths = {v: count((v, ())) for v in quiver.vertices}
        return _Analysis(True, None, lengths)


@dataclass(frozen=True)
class FinitenessReport:
    finite: bool
    cycle: PathWord | None
    total_dimension: int | None


def finiteness(pres: MonomialPresentation) -> FinitenessReport:
    """Is the set of relation-avoiding paths finite?  Witness cycle if not."""
    a = pres._analysis
    return FinitenessReport(a.finite, a.cycle, a.total_dimension)


def _require_finite(pres: MonomialPresentation) -> _Analysis:
    a = pres._analysis
    if not a.finite:
        raise InfiniteDimensionalError(a.cycle)
    return a


def _require_vertex(pres: MonomialPresentation, x: str) -> None:
    if x not in pres.quiver.vertex_index:
        raise ValueError(f"unknown vertex {x!r}")


def cover_length(pres: MonomialPresentation, x: str) -> int:
    """Length of the indecomposable projective at x (count of its basis paths)."""
    _require_vertex(pres, x)
    return _require_finite(pres).cover_lengths[x]


def _basis_words(pres: MonomialPresentation, x: str) -> list[tuple[str, ...]]:
    """All relation-avoiding arrow words starting at x, in lexicographic order
    by arrow declaration (a word precedes its own extensions)."""
    quiver = pres.quiver
    out: list[tuple[str, ...]] = []
    stack: list[tuple[tuple[str, ...], str, tuple[str, ...]]] = [((), x, ())]
    while stack:
        word, vertex, tail = stack.pop()
        out.append(word)
        extensions = []
        for a in quiver.outgoing[vertex]:
            if not pres._blocked(tail, a.name):
                extensions.append((word + (a.name,), a.target,
                                   pres._next_tail(tail, a.name)))
        stack.extend(reversed(extensions))
    return out


def nonzero_paths(pres: MonomialPresentation, x: str) -> tuple[PathWord, ...]:
    """All paths from x, trivial path included, with no relation as a subpath."""
    _require_vertex(pres, x)
    _require_finite(pres)
    return tuple(PathWord(w) if w else trivial_word(x) for w in _basis_words(pres, x))


@dataclass(frozen=True)
class RadicalSummand:
    """The cyclic submodule of the projective at s(arrow) generated by the arrow."""
    arrow: str
    target: str
    dimension: int
    projective: bool
    simple: bool

    @property
    def kind(self) -> str:
        if self.projective:
            return "projective"
        if self.simple:
            return "simple"
        return "other"


@dataclass(frozen=True)
class ProjectiveProfile:
    vertex: str
    length: int
    summands: tuple[RadicalSummand, ...]
    socle: tuple[str, ...]
    radical_projective: bool
    radical_simple: bool


def _straddles_relation(pres: MonomialPresentation, first: str,
                        rest: tuple[str, ...]) -> bool:
    # rest is already relation-free, so only windows containing the new head matter
    w = (first,) + rest
    for r in pres.relation_words:
        if len(r) <= len(w) and w[:len(r)] == r:
            return True
    return False


def profiles(pres: MonomialPresentation) -> dict[str, ProjectiveProfile]:
    """Per-vertex structure of the indecomposable projectives."""
    analysis = _require_finite(pres)
    quiver = pres.quiver
    bases = {v: _basis_words(pres, v) for v in quiver.vertices}
    vidx = quiver.vertex_index
    result: dict[str, ProjectiveProfile] = {}
    for x in quiver.vertices:
        length = analysis.cover_lengths[x]
        summands = []
        for a in quiver.outgoing[x]:
            dim = sum(1 for w in bases[a.target]
                      if not _straddles_relation(pres, a.name, w))
            summands.append(RadicalSummand(
                arrow=a.name, target=a.target, dimension=dim,
                projective=dim == analysis.cover_lengths[a.target],
                simple=dim == 1))
        assert sum(s.dimension for s in summands) == length - 1
        socle = []
        for w in bases[x]:
            end = quiver.arrow_by_name[w[-1]].target if w else x
            tail = w[-pres._window:] if pres._window else ()
            if all(pres._blocked(tail, a.name) for a in quiver.outgoing[end]):
                socle.append(end)
        result[x] = ProjectiveProfile(
            vertex=x, length=length, summands=tuple(summands),
            socle=tuple(sorted(socle, key=vidx.__getitem__)),
            radical_projective=all(s.projective for s in summands),
            radical_simple=length == 2)
    return result


def projective_profile(pres: MonomialPresentation, x: str) -> ProjectiveProfile:
    _require_vertex(pres, x)
    return profiles(pres)[x]


@dataclass(frozen=True)
class RadicalVerdict:
    holds: bool
    witness: str | None
    total_dimension: int


def check_radicals(pres: MonomialPresentation) -> RadicalVerdict:
    """Does every indecomposable projective have a projective or simple radical?

    The witness is the first vertex (declaration order) whose radical is
    neither.  Requires a finite-dimensional presentation.
    """
    profs = profiles(pres)
    witness = next((v for v in pres.quiver.vertices
                    if not (profs[v].radical_projective or profs[v].radical_simple)),
                   None)
    total = sum(p.length for p in profs.values())
    return RadicalVerdict(witness is None, witness, total)


@dataclass(frozen=True)
class QuadraticRadicalReport:
    """Structural test of the radical property on a quadratic presentation.

    relation_sources lists the vertices where some relation starts; the three
    clauses are: every such vertex has a unique outgoing arrow; every
    composition extending an arrow out of such a vertex is again a relation;
    every oriented cycle meets such a vertex.  No finiteness check is needed:
    the three clauses together force the path language to be finite.
    """
    holds: bool
    relation_sources: tuple[str, ...]
    unique_exit: bool
    unique_exit_witness: str | None
    saturated: bool
    saturated_witness: tuple[str, str] | None
    cycles_covered: bool
    cycle_witness: PathWord | None


def check_radicals_quadratic(pres: MonomialPresentation) -> QuadraticRadicalReport:
    pairs = pres.quadratic_pairs  # raises NotQuadraticError on long relations
    quiver = pres.quiver
    starts = {quiver.arrow_by_name[first].source for first, _ in pairs}
    sources = tuple(v for v in quiver.vertices if v in starts)

    exit_witness = next((v for v in sources if len(quiver.outgoing[v]) != 1), None)

    saturated_witness = None
    for a in quiver.arrows:
        if a.source not in starts:
            continue
        for b in quiver.outgoing[a.target]:
            if (a.name, b.name) not in pairs:
                saturated_witness = (a.name, b.name)
                break
        if saturated_witness:
            break

    keep = [v for v in quiver.vertices if v not in starts]
    sub = Quiver(tuple(keep),
                 tuple(a for a in quiver.arrows
                       if a.source not in starts and a.target not in starts))
    cycle = oriented_cycle_witness(sub)

    return QuadraticRadicalReport(
        holds=exit_witness is None and saturated_witness is None and cycle is None,
        relation_sources=sources,
        unique_exit=exit_witness is None,
        unique_exit_witness=exit_witness,
        saturated=saturated_witness is None,
        saturated_witness=saturated_witness,
        cycles_covered=cycle is None,
        cycle_witness=cycle)


def opposite(pres: MonomialPresentation) -> MonomialPresentation:
    """Reverse all arrows and all relation words; arrow names are kept, so the
    construction is an involution on presentations."""
    quiver = Quiver(pres.quiver.vertices,
                    tuple(Arrow(a.name, a.target, a.source) for a in pres.quiver.arrows))
    relations = tuple(PathWord(tuple(reversed(r.arrows))) for r in pres.relations)
    return MonomialPresentation(pres.name, quiver, relations)

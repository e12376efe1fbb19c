"""Finite quivers: vertices, arrows, path words, and structural queries.

Vertices and arrows are identified by opaque string tokens; declaration order
is the canonical order everywhere.  Parallel arrows and loops are allowed.
Path words store arrows in traversal order: the first-traversed arrow comes
first, and a length-0 word carries the vertex it sits at.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class PathWord:
    """A path given by its arrow names in traversal order.

    ``base`` is set exactly when the word is empty (the trivial path).
    """

    arrows: tuple[str, ...] = ()
    base: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if bool(self.arrows) == (self.base is not None):
            raise ValueError("base vertex is required exactly for an empty word")

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"e({self.base})"


def trivial_word(vertex: str) -> PathWord:
    return PathWord((), vertex)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifier")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow identifier")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.name!r} has an endpoint outside the vertex set")

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def arrow_by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def outgoing(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    @cached_property
    def incoming(self) -> dict[str, tuple[Arrow, ...]]:
        inc: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            inc[a.target].append(a)
        return {v: tuple(lst) for v, lst in inc.items()}

    def word_source(self, word: PathWord) -> str:
        if not word.arrows:
            return word.base  # type: ignore[return-value]
        return self.arrow_by_name[word.arrows[0]].source

    def word_target(self, word: PathWord) -> str:
        if not word.arrows:
            return word.base  # type: ignore[return-value]
        return self.arrow_by_name[word.arrows[-1]].target

    def check_word(self, word: PathWord) -> None:
        """Raise ValueError unless the word is a composable path of this quiver."""
        if not word.arrows:
            if word.base not in self.vertex_index:
                raise ValueError(f"unknown vertex {word.base!r}")
            return
        prev: Arrow | None = None
        for name in word.arrows:
            arrow = self.arrow_by_name.get(name)
            if arrow is None:
                raise ValueError(f"unknown arrow {name!r}")
            if prev is not None and prev.target != arrow.source:
                raise ValueError(
                    f"arrows {prev.name!r} and {arrow.name!r} do not compose")
            prev = arrow

    def word_sort_key(self, word: PathWord) -> tuple:
        return (len(word.arrows), tuple(self.arrow_index[n] for n in word.arrows))


def boundary_vertices(q: Quiver) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Return (sinks, sources) in declaration order."""
    sinks = tuple(v for v in q.vertices if not q.outgoing[v])
    sources = tuple(v for v in q.vertices if not q.incoming[v])
    return sinks, sources


def oriented_cycle_witness(q: Quiver) -> PathWord | None:
    """Some simple oriented cycle of the quiver, or None when it is acyclic.

    Depth-first search from each vertex in declaration order; the first back
    edge closes the cycle, so no minimality beyond simplicity is guaranteed.
    """
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in q.vertices}
    for start in q.vertices:
        if color[start] != WHITE:
            continue
        color[start] = GRAY
        # chain of (vertex, arrow used to enter it); the start has no entry arrow
        chain: list[tuple[str, str | None]] = [(start, None)]
        iters = [iter(q.outgoing[start])]
        while iters:
            advanced = False
            for arrow in iters[-1]:
                w = arrow.target
                if color[w] == GRAY:
                    at = next(i for i, (v, _) in enumerate(chain) if v == w)
                    names = [entry for _, entry in chain[at + 1:] if entry is not None]
                    names.append(arrow.name)
                    return PathWord(tuple(names))
                if color[w] == WHITE:
                    color[w] = GRAY
                    chain.append((w, arrow.name))
                    iters.append(iter(q.outgoing[w]))
                    advanced = True
                    break
            if not advanced:
                v, _ = chain.pop()
                color[v] = BLACK
                iters.pop()
    return None


def topological_order(q: Quiver) -> tuple[str, ...] | None:
    """A topological order of the vertices, or None when a cycle exists.

    Ties are broken by declaration order, so the result is deterministic.
    """
    remaining = list(q.vertices)
    indeg = {v: len(q.incoming[v]) for v in q.vertices}
    order: list[str] = []
    while remaining:
        pick = next((v for v in remaining if indeg[v] == 0), None)
        if pick is None:
            return None
        remaining.remove(pick)
        order.append(pick)
        for a in q.outgoing[pick]:
            indeg[a.target] -= 1
    return tuple(order)


def opposite_quiver(q: Quiver) -> Quiver:
    """Reverse every arrow; names and declaration order are preserved."""
    return Quiver(q.vertices,
                  tuple(Arrow(a.name, a.target, a.source) for a in q.arrows))

"""Random and exhaustive instance generation for the CLI and property suites.

Everything is driven by an explicit ``random.Random`` so that a fixed seed
reproduces the same instance byte for byte.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement
from typing import Iterator

from .algebra import MonomialPresentation
from .quiver import Arrow, PathWord, Quiver
from .sequences import EventuallyPeriodic
from .triples import Triple, validate_triple


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_triple(seed: int | random.Random, vertices: int,
                  arrows: int | None = None, name: str = "generated") -> Triple:
    """A uniform-ish valid triple: arrows respect a random topological order
    (so the quiver is acyclic), a random subset of sinks is marked, images are
    arbitrary, and marking is enlarged until every sink in the image is marked.
    """
    if vertices < 1:
        raise ValueError("need at least one vertex")
    rng = _rng(seed)
    if arrows is None:
        arrows = vertices
    names = [str(i + 1) for i in range(vertices)]
    order = names[:]
    rng.shuffle(order)
    arrow_list = []
    if vertices > 1:
        for k in range(arrows):
            i = rng.randrange(vertices - 1)
            j = rng.randrange(i + 1, vertices)
            arrow_list.append(Arrow(f"g{k + 1}", order[i], order[j]))
    quiver = Quiver(tuple(names), tuple(arrow_list))
    sinks = [v for v in names if not quiver.outgoing[v]]
    marked = [v for v in sinks if rng.random() < 0.6]
    image = {d: rng.choice(names) for d in marked}
    while True:
        gap = next((y for y in image.values()
                    if not quiver.outgoing[y] and y not in image), None)
        if gap is None:
            break
        marked.append(gap)
        image[gap] = rng.choice(names)
    assignments = tuple((d, image[d]) for d in names if d in image)
    t = Triple(name, quiver, assignments)
    assert validate_triple(t).valid
    return t


def random_presentation(seed: int | random.Random, vertices: int, arrows: int,
                        name: str = "generated") -> MonomialPresentation:
    """A random quadratic monomial presentation; cycles and infinite-dimensional
    outcomes are allowed, callers filter for their preconditions."""
    rng = _rng(seed)
    names = [str(i + 1) for i in range(max(vertices, 1))]
    arrow_list = [Arrow(f"g{k + 1}", rng.choice(names), rng.choice(names))
                  for k in range(arrows)]
    quiver = Quiver(tuple(names), tuple(arrow_list))
    bias = rng.uniform(0.3, 0.9)
    relations = [PathWord((a.name, b.name))
                 for a in arrow_list for b in arrow_list
                 if a.target == b.source and rng.random() < bias]
    return MonomialPresentation(name, quiver, tuple(relations))


def random_admissible(seed: int | random.Random,
                      max_prefix: int = 5, max_entry: int = 6) -> EventuallyPeriodic:
    """A random admissible sequence: entries of at least 2 up to the support
    end, which is either a final entry of at least 1 or a repeating cycle."""
    rng = _rng(seed)
    head = [rng.randint(2, max_entry) for _ in range(rng.randint(0, max_prefix))]
    if rng.random() < 0.5:
        return EventuallyPeriodic(tuple(head + [rng.randint(1, max_entry)]), ())
    cycle = tuple(rng.randint(2, max_entry)
                  for _ in range(rng.randint(1, 3)))
    return EventuallyPeriodic(tuple(head), cycle)


def arrow_layouts(max_vertices: int,
                  max_arrows: int) -> Iterator[tuple[tuple[str, ...],
                                                     tuple[Arrow, ...],
                                                     tuple[tuple[int, int], ...]]]:
    """Every labeled arrow multiset on up to ``max_vertices`` vertices together
    with its composable index pairs; the relation subsets over those pairs
    enumerate all quadratic monomial presentations of that size."""
    for n in range(1, max_vertices + 1):
        names = tuple(str(i + 1) for i in range(n))
        pairs = [(s, t) for s in names for t in names]
        for k in range(0, max_arrows + 1):
            for combo in combinations_with_replacement(pairs, k):
                arrows = tuple(Arrow(f"a{i + 1}", s, t)
                               for i, (s, t) in enumerate(combo))
                composable = tuple((i, j)
                                   for i in range(k) for j in range(k)
                                   if arrows[i].target == arrows[j].source)
                yield names, arrows, composable


def presentation_from_mask(names: tuple[str, ...], arrows: tuple[Arrow, ...],
                           composable: tuple[tuple[int, int], ...],
                           mask: int) -> MonomialPresentation:
    relations = tuple(PathWord((arrows[i].name, arrows[j].name))
                      for b, (i, j) in enumerate(composable) if (mask >> b) & 1)
    return MonomialPresentation("enumerated", Quiver(names, arrows), relations)


def mask_is_finite(arrows: tuple[Arrow, ...],
                   composable: tuple[tuple[int, int], ...], mask: int) -> bool:
    """Cheap finiteness prefilter: the pair graph on arrow indices, restricted
    to non-relation pairs, must be acyclic.  Agrees with the full automaton
    check in the quadratic case."""
    k = len(arrows)
    adj: list[list[int]] = [[] for _ in range(k)]
    for b, (i, j) in enumerate(composable):
        if not (mask >> b) & 1:
            adj[i].append(j)
    color = [0] * k
    for s in range(k):
        if color[s]:
            continue
        stack = [(s, iter(adj[s]))]
        color[s] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == 1:
                    return False
                if color[w] == 0:
                    color[w] = 1
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                color[v] = 2
                stack.pop()
    return True


def triples_up_to(max_vertices: int, max_arrows: int) -> Iterator[Triple]:
    """Every valid triple on up to ``max_vertices`` labeled vertices with up to
    ``max_arrows`` arrows (no two alike), marked sets, and assignments."""
    for n in range(1, max_vertices + 1):
        names = tuple(str(i + 1) for i in range(n))
        pairs = [(s, t) for s in names for t in names if s != t]
        for k in range(0, max_arrows + 1):
            for combo in combinations_with_replacement(pairs, k):
                arrows = tuple(Arrow(f"g{i + 1}", s, t)
                               for i, (s, t) in enumerate(combo))
                quiver = Quiver(names, arrows)
                sinks = [v for v in names if not quiver.outgoing[v]]
                for dmask in range(1 << len(sinks)):
                    marked = [v for b, v in enumerate(sinks) if (dmask >> b) & 1]
                    for images in _assignments(marked, names):
                        t = Triple("enumerated", quiver, tuple(zip(marked, images)))
                        if validate_triple(t).valid:
                            yield t


def _assignments(marked: list[str], names: tuple[str, ...]) -> Iterator[tuple[str, ...]]:
    if not marked:
        yield ()
        return
    for head in names:
        for rest in _assignments(marked[1:], names):
            yield (head,) + rest

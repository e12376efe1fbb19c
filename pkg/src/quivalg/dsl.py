"""Line-oriented text format for presentations and triples.

Grammar (one statement per line, ``#`` starts a comment):

    quiver <name>                   header of a presentation document
    triple <name>                   header of a triple document
    vertices <id> <id> ...          may repeat; order is declaration order
    arrow <id> : <v> -> <w>
    relations                       opens the relation section (quiver docs)
    rel <arrow> <arrow> [...]       arrows in traversal order, length >= 2
    rho <d> -> <v>                  declares d as marked sink with image v

Relation words list arrows in the order they are traversed, i.e. the first
arrow of the line is applied first.  The serializer emits the same grammar in
declaration order with a single trailing newline and no trailing whitespace.
"""

from __future__ import annotations

import re

from .algebra import MonomialPresentation
from .errors import DslError
from .quiver import Arrow, PathWord, Quiver
from .triples import Triple

_IDENT = re.compile(r"^[A-Za-z0-9_.\-]+$")
_TOKEN = re.compile(r"\S+")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(line)]
        if tokens:
            yield no, tokens


def _ident(token: str, no: int, col: int, what: str) -> str:
    if not _IDENT.match(token):
        raise DslError(f"invalid {what} {token!r}", no, col)
    return token


class _Parser:
    def __init__(self, text: str):
        self.kind: str | None = None
        self.name: str | None = None
        self.vertices: list[str] = []
        self.arrows: list[Arrow] = []
        self.relations: list[PathWord] = []
        self.rel_lines: set[tuple[str, ...]] = set()
        self.assignments: list[tuple[str, str]] = []
        self.in_relations = False
        self.last_line = 0
        for no, tokens in _lines(text):
            self.last_line = no
            self._statement(no, tokens)
        if self.kind is None:
            raise DslError("empty document: expected a 'quiver' or 'triple' header",
                           self.last_line or 1)

    def _statement(self, no: int, tokens: list[tuple[str, int]]):
        word, col = tokens[0]
        if self.kind is None:
            if word not in ("quiver", "triple"):
                raise DslError("document must start with 'quiver <name>' or "
                               "'triple <name>'", no, col)
            if len(tokens) != 2:
                raise DslError(f"'{word}' header takes exactly one name", no, col)
            self.kind = word
            self.name = _ident(tokens[1][0], no, tokens[1][1], "name")
            return
        handler = getattr(self, "_stmt_" + word, None)
        if handler is None or word in ("quiver", "triple"):
            raise DslError(f"unknown statement {word!r}", no, col)
        handler(no, tokens)

    def _stmt_vertices(self, no, tokens):
        if len(tokens) < 2:
            raise DslError("'vertices' needs at least one identifier", no, tokens[0][1])
        for tok, col in tokens[1:]:
            v = _ident(tok, no, col, "vertex identifier")
            if v in self.vertices:
                raise DslError(f"duplicate vertex {v!r}", no, col)
            self.vertices.append(v)

    def _stmt_arrow(self, no, tokens):
        shape = [t for t, _ in tokens]
        if len(tokens) != 6 or shape[2] != ":" or shape[4] != "->":
            raise DslError("expected 'arrow <id> : <v> -> <w>'", no, tokens[0][1])
        name = _ident(shape[1], no, tokens[1][1], "arrow identifier")
        if any(a.name == name for a in self.arrows):
            raise DslError(f"duplicate arrow {name!r}", no, tokens[1][1])
        for tok, col in (tokens[3], tokens[5]):
            if tok not in self.vertices:
                raise DslError(f"unknown vertex {tok!r}", no, col)
        self.arrows.append(Arrow(name, shape[3], shape[5]))

    def _stmt_relations(self, no, tokens):
        if self.kind != "quiver":
            raise DslError("'relations' is only valid in a quiver document",
                           no, tokens[0][1])
        if len(tokens) != 1:
            raise DslError("'relations' takes no arguments", no, tokens[1][1])
        self.in_relations = True

    def _stmt_rel(self, no, tokens):
        if self.kind != "quiver":
            raise DslError("'rel' is only valid in a quiver document", no, tokens[0][1])
        if not self.in_relations:
            raise DslError("'rel' must follow a 'relations' line", no, tokens[0][1])
        if len(tokens) < 3:
            raise DslError("a relation needs at least two arrows", no, tokens[0][1])
        by_name = {a.name: a for a in self.arrows}
        prev: Arrow | None = None
        names: list[str] = []
        for tok, col in tokens[1:]:
            arrow = by_name.get(tok)
            if arrow is None:
                raise DslError(f"unknown arrow {tok!r}", no, col)
            if prev is not None and prev.target != arrow.source:
                raise DslError(
                    f"arrows {prev.name!r} and {arrow.name!r} do not compose "
                    f"({prev.name!r} ends at {prev.target!r}, {arrow.name!r} "
                    f"starts at {arrow.source!r})", no, col)
            prev = arrow
            names.append(tok)
        word = tuple(names)
        if word in self.rel_lines:
            raise DslError(f"duplicate relation {' '.join(word)}", no, tokens[0][1])
        self.rel_lines.add(word)
        self.relations.append(PathWord(word))

    def _stmt_rho(self, no, tokens):
        if self.kind != "triple":
            raise DslError("'rho' is only valid in a triple document", no, tokens[0][1])
        shape = [t for t, _ in tokens]
        if len(tokens) != 4 or shape[2] != "->":
            raise DslError("expected 'rho <d> -> <v>'", no, tokens[0][1])
        for tok, col in (tokens[1], tokens[3]):
            if tok not in self.vertices:
                raise DslError(f"unknown vertex {tok!r}", no, col)
        d = shape[1]
        if any(d == got for got, _ in self.assignments):
            raise DslError(f"duplicate assignment for {d!r}", no, tokens[1][1])
        self.assignments.append((d, shape[3]))


def parse_document(text: str) -> MonomialPresentation | Triple:
    p = _Parser(text)
    quiver = Quiver(tuple(p.vertices), tuple(p.arrows))
    if p.kind == "quiver":
        return MonomialPresentation(p.name, quiver, tuple(p.relations))
    return Triple(p.name, quiver, tuple(p.assignments))


def parse_presentation(text: str) -> MonomialPresentation:
    doc = parse_document(text)
    if not isinstance(doc, MonomialPresentation):
        raise DslError("expected a quiver document, found a triple document", 1)
    return doc


def parse_triple(text: str) -> Triple:
    doc = parse_document(text)
    if not isinstance(doc, Triple):
        raise DslError("expected a triple document, found a quiver document", 1)
    return doc


def _body(kind: str, name: str, quiver: Quiver) -> list[str]:
    lines = [f"{kind} {name}"]
    if quiver.vertices:
        lines.append("vertices " + " ".join(quiver.vertices))
    for a in quiver.arrows:
        lines.append(f"arrow {a.name} : {a.source} -> {a.target}")
    return lines


def serialize_presentation(pres: MonomialPresentation) -> str:
    lines = _body("quiver", pres.name, pres.quiver)
    if pres.relations:
        lines.append("relations")
        for rel in pres.relations:
            lines.append("rel " + " ".join(rel.arrows))
    return "\n".join(lines) + "\n"


def serialize_triple(t: Triple) -> str:
    lines = _body("triple", t.name, t.quiver)
    for d, v in t.assignments:
        lines.append(f"rho {d} -> {v}")
    return "\n".join(lines) + "\n"

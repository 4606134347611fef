"""Turtle serialization of the graph and a parser for the emitted subset.

The document uses one vocabulary prefix for types, attribute predicates,
and relation predicates; entity iris are written absolute. The parser
accepts the grammar this serializer produces (prefix directives, subject
blocks with ``;``-separated predicate-object pairs, ``a`` for rdf:type,
quoted literals with standard escapes, ``#`` comments) and reports
malformed input with line and column.
"""

from __future__ import annotations

from typing import IO, Iterable

from ..errors import TurtleSyntaxError, UnknownPredicateError
from .model import (
    ATTRIBUTE_NAMES,
    Entity,
    EntityType,
    KnowledgeGraph,
    Predicate,
)

VOCAB_SUFFIX = "/vocab#"
PREFIX = "sg"

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}
_UNESCAPES = {"\\": "\\", '"': '"', "n": "\n", "r": "\r", "t": "\t"}


def _escape_literal(value: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in value)


def serialize_turtle(graph: KnowledgeGraph, sink: IO[str]) -> None:
    """Write the whole graph, deterministically ordered by iri."""
    vocab = graph.namespace + VOCAB_SUFFIX
    sink.write(f"@prefix {PREFIX}: <{vocab}> .\n")
    relations: dict[str, list] = {}
    for triple in graph.triples:
        relations.setdefault(triple.s, []).append(triple)
    for iri in sorted(graph.entities):
        entity = graph.entities[iri]
        sink.write("\n")
        lines = [f"<{iri}> a {PREFIX}:{entity.etype.value}"]
        for name in sorted(entity.attributes):
            value = entity.attributes[name]
            lines.append(f'    {PREFIX}:{name} "{_escape_literal(value)}"')
        for triple in sorted(relations.get(iri, [])):
            lines.append(f"    {PREFIX}:{triple.p.value} <{triple.o}>")
        sink.write(" ;\n".join(lines))
        sink.write(" .\n")


# -- parsing ----------------------------------------------------------


class _Token:
    __slots__ = ("kind", "value", "line", "column")

    def __init__(self, kind: str, value: str, line: int, column: int):
        self.kind = kind  # iri | pname | literal | punct | a | prefix_kw
        self.value = value
        self.line = line
        self.column = column


def _tokenize(source: Iterable[str]):
    for lineno, raw in enumerate(source, start=1):
        col = 0
        n = len(raw)
        while col < n:
            ch = raw[col]
            if ch in " \t\r\n":
                col += 1
                continue
            if ch == "#":
                break
            start_col = col + 1
            if ch == "<":
                end = raw.find(">", col + 1)
                if end == -1:
                    raise TurtleSyntaxError("unterminated iri", lineno, start_col)
                yield _Token("iri", raw[col + 1 : end], lineno, start_col)
                col = end + 1
            elif ch == '"':
                buf = []
                col += 1
                while True:
                    if col >= n:
                        raise TurtleSyntaxError("unterminated literal", lineno, start_col)
                    ch = raw[col]
                    if ch == "\\":
                        if col + 1 >= n:
                            raise TurtleSyntaxError("dangling escape", lineno, col + 1)
                        esc = raw[col + 1]
                        if esc in _UNESCAPES:
                            buf.append(_UNESCAPES[esc])
                            col += 2
                        elif esc == "u" and col + 5 < n:
                            buf.append(chr(int(raw[col + 2 : col + 6], 16)))
                            col += 6
                        elif esc == "U" and col + 9 < n:
                            buf.append(chr(int(raw[col + 2 : col + 10], 16)))
                            col += 10
                        else:
                            raise TurtleSyntaxError(f"bad escape \\{esc}", lineno, col + 1)
                    elif ch == '"':
                        col += 1
                        break
                    else:
                        buf.append(ch)
                        col += 1
                yield _Token("literal", "".join(buf), lineno, start_col)
            elif ch in ".;":
                yield _Token("punct", ch, lineno, start_col)
                col += 1
            else:
                end = col
                while end < n and raw[end] not in ' \t\r\n";.<#':
                    end += 1
                word = raw[col:end]
                if word == "a":
                    yield _Token("a", word, lineno, start_col)
                elif word == "@prefix":
                    yield _Token("prefix_kw", word, lineno, start_col)
                elif ":" in word:
                    yield _Token("pname", word, lineno, start_col)
                else:
                    raise TurtleSyntaxError(f"unexpected token {word!r}", lineno, start_col)
                col = end


class _Parser:
    def __init__(self, source: Iterable[str]):
        self.tokens = list(_tokenize(source))
        self.pos = 0
        self.prefixes: dict[str, str] = {}

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self, expected: str | None = None) -> _Token:
        tok = self._peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            line = last.line if last else 1
            raise TurtleSyntaxError("unexpected end of input", line, 1)
        if expected and tok.kind != expected:
            raise TurtleSyntaxError(
                f"expected {expected}, found {tok.value!r}", tok.line, tok.column
            )
        self.pos += 1
        return tok

    def _resolve(self, tok: _Token) -> str:
        prefix, _, local = tok.value.partition(":")
        if prefix not in self.prefixes:
            raise TurtleSyntaxError(f"undeclared prefix {prefix!r}", tok.line, tok.column)
        return local  # vocabulary names are bare local parts

    def parse(self) -> tuple[dict[str, str], list[tuple]]:
        """Returns (prefixes, statements); each statement is (s, p_local, object_token)."""
        statements = []
        while (tok := self._peek()) is not None:
            if tok.kind == "prefix_kw":
                self._next()
                name_tok = self._next("pname")
                iri_tok = self._next("iri")
                dot = self._next("punct")
                if dot.value != ".":
                    raise TurtleSyntaxError("prefix directive must end with '.'", dot.line, dot.column)
                self.prefixes[name_tok.value.rstrip(":")] = iri_tok.value
                continue
            subject = self._next("iri")
            while True:
                pred_tok = self._next()
                if pred_tok.kind == "a":
                    p_local = "a"
                elif pred_tok.kind == "pname":
                    p_local = self._resolve(pred_tok)
                else:
                    raise TurtleSyntaxError(
                        f"expected predicate, found {pred_tok.value!r}",
                        pred_tok.line,
                        pred_tok.column,
                    )
                obj_tok = self._next()
                if obj_tok.kind == "pname":
                    obj = ("pname", self._resolve(obj_tok), obj_tok)
                elif obj_tok.kind == "iri":
                    obj = ("iri", obj_tok.value, obj_tok)
                elif obj_tok.kind == "literal":
                    obj = ("literal", obj_tok.value, obj_tok)
                else:
                    raise TurtleSyntaxError(
                        f"expected object, found {obj_tok.value!r}", obj_tok.line, obj_tok.column
                    )
                statements.append((subject.value, p_local, obj))
                sep = self._next("punct")
                if sep.value == ".":
                    break
                # ';' continues the same subject
        return self.prefixes, statements


_PREDICATE_NAMES = {p.value for p in Predicate}
_TYPE_NAMES = {t.value for t in EntityType}


def parse_turtle(source: Iterable[str]) -> KnowledgeGraph:
    """Parse a document produced by serialize_turtle back into a graph."""
    parser = _Parser(source)
    prefixes, statements = parser.parse()
    namespace = None
    for iri in prefixes.values():
        if iri.endswith(VOCAB_SUFFIX):
            namespace = iri[: -len(VOCAB_SUFFIX)]
            break
    graph = KnowledgeGraph(namespace=namespace or next(iter(prefixes.values()), ""))

    types: dict[str, EntityType] = {}
    attributes: dict[str, dict[str, str]] = {}
    relations: list[tuple[str, Predicate, str]] = []
    for subject, p_local, (obj_kind, obj_value, obj_tok) in statements:
        if p_local == "a":
            if obj_kind != "pname" or obj_value not in _TYPE_NAMES:
                raise UnknownPredicateError(f"unknown entity type: {obj_value!r}")
            types[subject] = EntityType.from_value(obj_value)
        elif p_local in ATTRIBUTE_NAMES:
            if obj_kind != "literal":
                raise TurtleSyntaxError(
                    f"attribute {p_local} expects a literal", obj_tok.line, obj_tok.column
                )
            attributes.setdefault(subject, {})[p_local] = obj_value
        elif p_local in _PREDICATE_NAMES:
            if obj_kind != "iri":
                raise TurtleSyntaxError(
                    f"relation {p_local} expects an iri object", obj_tok.line, obj_tok.column
                )
            relations.append((subject, Predicate.from_value(p_local), obj_value))
        else:
            raise UnknownPredicateError(f"unknown predicate: {p_local!r}")

    for subject in attributes:
        if subject not in types:
            raise UnknownPredicateError(f"subject {subject} has attributes but no type")
    for iri, etype in types.items():
        graph.add_entity(Entity(iri=iri, etype=etype, attributes=attributes.get(iri, {})))
    for s, p, o in relations:
        graph.add_triple(s, p, o)
    return graph

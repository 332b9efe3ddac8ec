"""A recursive-descent Turtle parser.

Covers the parts of the grammar seen in real LOD dumps: prefix/base
directives (@-style and SPARQL-style), prefixed names with escapes, blank
node property lists, collections, object/predicate lists, all four string
quoting forms, numeric/boolean shorthand and language tags.

Turtle's block structure makes skip-and-continue recovery unsafe, so any
syntax error aborts the parse with a position-bearing TurtleSyntaxError.
"""

from __future__ import annotations

import re
from typing import Callable, Optional
from urllib.parse import urljoin

from .errors import TurtleSyntaxError
from .terms import (
    RDF_FIRST,
    RDF_NIL,
    RDF_REST,
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    Term,
    blank,
    iri,
    literal,
)

TripleSink = Callable[[Term, Term, Term], None]

_WS_RE = re.compile(r"(?:[ \t\r\n]+|#[^\n]*)+")
_IRIREF_RE = re.compile(r"<([^\x00-\x20<>\"{}|^`\\]*)>")
_BNODE_RE = re.compile(r"_:([A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)")
_PNAME_RE = re.compile(
    r"((?:[A-Za-zÀ-￿_][\w.\-À-￿]*)?):"
    r"((?:[\wÀ-￿:%\\]|[.\-](?=[\wÀ-￿:%\\.\-]))*)?"
)
_LANGTAG_RE = re.compile(r"@([a-zA-Z]+(?:-[a-zA-Z0-9]+)*)")
_NUMBER_RE = re.compile(
    r"[+-]?(?:\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+(?:[eE][+-]?\d+)?)"
)
_UCHAR_RE = re.compile(r"\\(?:u([0-9A-Fa-f]{4})|U([0-9A-Fa-f]{8})|(.))", re.S)
_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_LOCAL_ESC = set("_~.-!$&'()*+,;=/?#@%")


class TurtleReader:
    def __init__(self, text: str, sink: TripleSink):
        self._text = text
        self._pos = 0
        self._sink = sink
        self._prefixes: dict[str, str] = {}
        self._base: Optional[str] = None
        self._anon = 0

    # --- position / error helpers -------------------------------------

    def _where(self, pos: Optional[int] = None):
        pos = self._pos if pos is None else pos
        line = self._text.count("\n", 0, pos) + 1
        col = pos - (self._text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def _fail(self, message: str, pos: Optional[int] = None):
        line, col = self._where(pos)
        raise TurtleSyntaxError(message, line, col)

    # --- scanning primitives -------------------------------------------

    def _skip_ws(self):
        m = _WS_RE.match(self._text, self._pos)
        if m:
            self._pos = m.end()

    def _peek(self, offset: int = 0) -> str:
        idx = self._pos + offset
        return self._text[idx] if idx < len(self._text) else ""

    def _expect(self, token: str):
        if not self._text.startswith(token, self._pos):
            self._fail(f"expected '{token}'")
        self._pos += len(token)

    def _match_word(self, word: str) -> bool:
        """Case-insensitive keyword followed by a non-name character."""
        end = self._pos + len(word)
        if self._text[self._pos : end].lower() != word:
            return False
        nxt = self._text[end : end + 1]
        if nxt and (nxt.isalnum() or nxt in "_-"):
            return False
        self._pos = end
        return True

    # --- top level -------------------------------------------------------

    def parse(self):
        while True:
            self._skip_ws()
            if self._pos >= len(self._text):
                return
            ch = self._peek()
            if ch == "@":
                self._directive()
            elif ch in "Pp" and self._match_word("prefix"):
                self._prefix_decl(sparql_style=True)
            elif ch in "Bb" and self._match_word("base"):
                self._base_decl(sparql_style=True)
            else:
                self._triples()
                self._skip_ws()
                self._expect(".")

    def _directive(self):
        if self._text.startswith("@prefix", self._pos):
            self._pos += len("@prefix")
            self._prefix_decl(sparql_style=False)
        elif self._text.startswith("@base", self._pos):
            self._pos += len("@base")
            self._base_decl(sparql_style=False)
        else:
            self._fail("unknown directive")

    def _prefix_decl(self, sparql_style: bool):
        self._skip_ws()
        m = _PNAME_RE.match(self._text, self._pos)
        if not m or m.group(2):
            self._fail("expected prefix name ending in ':'")
        prefix = m.group(1) or ""
        self._pos = m.end()
        self._skip_ws()
        self._prefixes[prefix] = self._iriref()
        if not sparql_style:
            self._skip_ws()
            self._expect(".")

    def _base_decl(self, sparql_style: bool):
        self._skip_ws()
        self._base = self._iriref()
        if not sparql_style:
            self._skip_ws()
            self._expect(".")

    # --- triples ----------------------------------------------------------

    def _triples(self):
        self._skip_ws()
        ch = self._peek()
        if ch == "[":
            subject = self._blank_node_property_list()
            self._skip_ws()
            if self._peek() != ".":
                self._predicate_object_list(subject)
        else:
            subject = self._subject()
            self._predicate_object_list(subject)

    def _predicate_object_list(self, subject: Term):
        while True:
            self._skip_ws()
            predicate = self._verb()
            self._object_list(subject, predicate)
            self._skip_ws()
            if self._peek() != ";":
                return
            while self._peek() == ";":
                self._pos += 1
                self._skip_ws()
            if self._peek() in (".", "]", ""):
                return

    def _object_list(self, subject: Term, predicate: Term):
        while True:
            obj = self._object()
            self._sink(subject, predicate, obj)
            self._skip_ws()
            if self._peek() != ",":
                return
            self._pos += 1
            self._skip_ws()

    def _verb(self) -> Term:
        if self._peek() == "a":
            nxt = self._peek(1)
            if not nxt or nxt in " \t\r\n<#[_\"'(":
                self._pos += 1
                return iri(RDF_TYPE)
        return self._iri_term()

    def _subject(self) -> Term:
        ch = self._peek()
        if ch == "<":
            return self._iri_term()
        if ch == "_" and self._peek(1) == ":":
            return self._blank_label()
        if ch == "(":
            return self._collection()
        return self._iri_term()

    def _object(self) -> Term:
        self._skip_ws()
        ch = self._peek()
        if ch == "":
            self._fail("unexpected end of input, expected object")
        if ch == "<":
            return self._iri_term()
        if ch == "_" and self._peek(1) == ":":
            return self._blank_label()
        if ch == "[":
            return self._blank_node_property_list()
        if ch == "(":
            return self._collection()
        if ch in "\"'":
            return self._rdf_literal()
        if ch.isdigit() or ch in "+-" or (ch == "." and self._peek(1).isdigit()):
            return self._numeric_literal()
        if ch == "t" and self._match_word("true"):
            return literal("true", XSD_BOOLEAN)
        if ch == "f" and self._match_word("false"):
            return literal("false", XSD_BOOLEAN)
        return self._iri_term()

    # --- terms -------------------------------------------------------------

    def _iriref(self) -> str:
        m = _IRIREF_RE.match(self._text, self._pos)
        if not m:
            self._fail("expected IRI")
        self._pos = m.end()
        value = self._unescape(m.group(1), start=m.start(), iri_mode=True)
        return self._resolve(value)

    def _resolve(self, value: str) -> str:
        if self._base and not re.match(r"[A-Za-z][A-Za-z0-9+.\-]*:", value):
            return urljoin(self._base, value)
        return value

    def _iri_term(self) -> Term:
        if self._peek() == "<":
            return iri(self._iriref())
        m = _PNAME_RE.match(self._text, self._pos)
        if not m:
            self._fail("expected IRI or prefixed name")
        prefix = m.group(1) or ""
        if prefix not in self._prefixes:
            self._fail(f"undeclared prefix '{prefix}:'")
        self._pos = m.end()
        local = self._local_part(m.group(2) or "", m.start(2) if m.group(2) else m.end())
        return iri(self._prefixes[prefix] + local)

    def _local_part(self, raw: str, start: int) -> str:
        # A trailing bare '.' belongs to the statement, not the name.
        while raw.endswith(".") and not raw.endswith("\\."):
            raw = raw[:-1]
            self._pos -= 1
        if "\\" not in raw and "%" not in raw:
            return raw
        out = []
        i = 0
        while i < len(raw):
            ch = raw[i]
            if ch == "\\":
                if i + 1 >= len(raw) or raw[i + 1] not in _LOCAL_ESC:
                    self._fail("bad local-name escape", start + i)
                out.append(raw[i + 1])
                i += 2
            else:
                out.append(ch)
                i += 1
        return "".join(out)

    def _blank_label(self) -> Term:
        m = _BNODE_RE.match(self._text, self._pos)
        if not m:
            self._fail("expected blank node label")
        self._pos = m.end()
        return blank(m.group(1))

    def _fresh_blank(self) -> Term:
        # '!' cannot occur in a parsed label, so generated names never collide.
        self._anon += 1
        return blank(f"!anon{self._anon}")

    def _blank_node_property_list(self) -> Term:
        self._expect("[")
        node = self._fresh_blank()
        self._skip_ws()
        if self._peek() == "]":
            self._pos += 1
            return node
        self._predicate_object_list(node)
        self._skip_ws()
        self._expect("]")
        return node

    def _collection(self) -> Term:
        self._expect("(")
        items = []
        while True:
            self._skip_ws()
            if self._peek() == "":
                self._fail("unterminated collection")
            if self._peek() == ")":
                self._pos += 1
                break
            items.append(self._object())
        if not items:
            return iri(RDF_NIL)
        head = self._fresh_blank()
        node = head
        for idx, item in enumerate(items):
            self._sink(node, iri(RDF_FIRST), item)
            if idx + 1 < len(items):
                nxt = self._fresh_blank()
                self._sink(node, iri(RDF_REST), nxt)
                node = nxt
            else:
                self._sink(node, iri(RDF_REST), iri(RDF_NIL))
        return head

    def _numeric_literal(self) -> Term:
        m = _NUMBER_RE.match(self._text, self._pos)
        if not m:
            self._fail("malformed number")
        lex = m.group(0)
        # "1." is INTEGER followed by the statement dot.
        if lex.endswith(".") and "e" not in lex.lower():
            lex = lex[:-1]
            m_end = m.start() + len(lex)
        else:
            m_end = m.end()
        if not lex or lex in "+-":
            self._fail("malformed number")
        self._pos = m_end
        if re.search(r"[eE]", lex):
            return literal(lex, XSD_DOUBLE)
        if "." in lex:
            return literal(lex, XSD_DECIMAL)
        return literal(lex, XSD_INTEGER)

    def _rdf_literal(self) -> Term:
        lex = self._string()
        self._skip_ws()
        if self._text.startswith("^^", self._pos):
            self._pos += 2
            self._skip_ws()
            datatype = self._iri_term().lexical
            return literal(lex, datatype)
        m = _LANGTAG_RE.match(self._text, self._pos)
        if m:
            self._pos = m.end()
            return literal(lex, language=m.group(1))
        return literal(lex)

    def _string(self) -> str:
        text = self._text
        start = self._pos
        quote = text[start]
        if text.startswith(quote * 3, start):
            end_token = quote * 3
            body_start = start + 3
            long_form = True
        else:
            end_token = quote
            body_start = start + 1
            long_form = False
        i = body_start
        while True:
            if i >= len(text):
                self._fail("unterminated string", start)
            ch = text[i]
            if ch == "\\":
                i += 2
                continue
            if not long_form and ch in "\n\r":
                self._fail("newline in single-line string", i)
            if text.startswith(end_token, i):
                break
            i += 1
        raw = text[body_start:i]
        self._pos = i + len(end_token)
        return self._unescape(raw, start=body_start, iri_mode=False)

    def _unescape(self, raw: str, start: int, iri_mode: bool) -> str:
        if "\\" not in raw:
            return raw

        def repl(m: re.Match) -> str:
            u4, u8, ch = m.groups()
            if u4 is not None:
                return chr(int(u4, 16))
            if u8 is not None:
                code = int(u8, 16)
                if code > 0x10FFFF:
                    self._fail("escape beyond Unicode range", start + m.start())
                return chr(code)
            if iri_mode or ch not in _ECHAR:
                self._fail(f"bad escape \\{ch}", start + m.start())
            return _ECHAR[ch]

        return _UCHAR_RE.sub(repl, raw)


def parse_turtle(text: str, sink: TripleSink):
    """Feed every triple in a Turtle document to ``sink``; errors are fatal."""
    TurtleReader(text, sink).parse()

"""Line-oriented N-Triples reading and writing.

Malformed lines are recoverable: the reader reports them per line instead of
aborting, which is what makes N-Triples the forgiving ingestion path.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Optional, Tuple

from .terms import Term, blank, iri, literal

_IRI = r"<([^\x00-\x20<>\"{}|^`\\]*)>"
_BNODE = r"_:([A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?)"
_STRING = r'"((?:[^"\\\n\r]|\\.)*)"'
_LANG = r"@([a-zA-Z]+(?:-[a-zA-Z0-9]+)*)"

_LINE_RE = re.compile(
    rf"[ \t]*(?:{_IRI}|{_BNODE})"
    rf"[ \t]+{_IRI}"
    rf"[ \t]+(?:{_IRI}|{_BNODE}|{_STRING}(?:\^\^{_IRI}|{_LANG})?)"
    rf"[ \t]*\.[ \t]*(?:#.*)?\Z"
)
_BLANK_RE = re.compile(r"[ \t]*(?:#.*)?\Z")

_UNESCAPE_RE = re.compile(r"\\(?:u([0-9A-Fa-f]{4})|U([0-9A-Fa-f]{8})|(.))")
_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


class MalformedLine(ValueError):
    pass


def _unescape(text: str, iri_mode: bool = False) -> str:
    if "\\" not in text:
        return text

    def repl(m: re.Match) -> str:
        u4, u8, ch = m.groups()
        if u4 is not None:
            return chr(int(u4, 16))
        if u8 is not None:
            code = int(u8, 16)
            if code > 0x10FFFF:
                raise MalformedLine("escape beyond Unicode range")
            return chr(code)
        if iri_mode or ch not in _ECHAR:
            raise MalformedLine(f"bad escape \\{ch}")
        return _ECHAR[ch]

    return _UNESCAPE_RE.sub(repl, text)


def parse_line(line: str) -> Optional[Tuple[Term, Term, Term]]:
    """Parse one N-Triples line.

    Returns None for blank/comment lines, the (s, p, o) terms for a
    statement, and raises MalformedLine otherwise.
    """
    if _BLANK_RE.match(line):
        return None
    m = _LINE_RE.match(line)
    if not m:
        raise MalformedLine("line does not match the N-Triples grammar")
    s_iri, s_bnode, p_iri, o_iri, o_bnode, o_lex, o_dt, o_lang = m.groups()
    try:
        if s_iri is not None:
            if not s_iri:
                raise MalformedLine("empty subject IRI")
            subject = iri(_unescape(s_iri, iri_mode=True))
        else:
            subject = blank(s_bnode)
        if not p_iri:
            raise MalformedLine("empty predicate IRI")
        predicate = iri(_unescape(p_iri, iri_mode=True))
        if o_iri is not None:
            if not o_iri:
                raise MalformedLine("empty object IRI")
            obj = iri(_unescape(o_iri, iri_mode=True))
        elif o_bnode is not None:
            obj = blank(o_bnode)
        else:
            datatype = _unescape(o_dt, iri_mode=True) if o_dt else None
            obj = literal(_unescape(o_lex), datatype, o_lang)
    except ValueError as exc:
        raise MalformedLine(str(exc)) from None
    return subject, predicate, obj


_LITERAL_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}
_LITERAL_ESC_RE = re.compile(r'[\\"\n\r\t\x00-\x08\x0b\x0c\x0e-\x1f]')
_IRI_ESC_RE = re.compile(r'[\x00-\x20<>"{}|^`\\]')


def _escape_literal(text: str) -> str:
    def repl(m: re.Match) -> str:
        ch = m.group(0)
        return _LITERAL_ESCAPES.get(ch, f"\\u{ord(ch):04X}")

    return _LITERAL_ESC_RE.sub(repl, text)


def _escape_iri(text: str) -> str:
    return _IRI_ESC_RE.sub(lambda m: f"\\u{ord(m.group(0)):04X}", text)


def format_term(term: Term) -> str:
    if term.kind == "iri":
        return f"<{_escape_iri(term.lexical)}>"
    if term.kind == "blank":
        return f"_:{term.lexical}"
    lex = f'"{_escape_literal(term.lexical)}"'
    if term.language:
        return f"{lex}@{term.language}"
    if term.datatype:
        return f"{lex}^^<{_escape_iri(term.datatype)}>"
    return lex


def format_triple(subject: Term, predicate: Term, obj: Term) -> str:
    return f"{format_term(subject)} {format_term(predicate)} {format_term(obj)} ."


def serialize(triples: Iterable[Tuple[Term, Term, Term]]) -> Iterator[str]:
    for s, p, o in triples:
        yield format_triple(s, p, o)

"""Text format for morphism files.

Grammar::

    file      := (morphism | directive)*
    morphism  := NAME "{" rule* "}"
    rule      := NAME "->" NAME* ";"
    directive := "start" "=" NAME ";"  |  "pair" "=" NAME "," NAME ";"

An empty right-hand side denotes the empty word.  When every left-hand
letter of a morphism is a single character, the block is in compact
mode: right-hand tokens are split into individual characters, so
``a->abe;`` means a maps to the three letters a, b, e.  Otherwise every
whitespace-separated token is one (multi-character) letter.

Names may use any characters except whitespace and the punctuation
``{ } ; = ,``; a ``-`` must start an arrow.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .words import Morphism

_PUNCT = {"{", "}", ";", "=", ","}


@dataclass(frozen=True)
class Token:
    kind: str  # "punct" | "arrow" | "name"
    text: str
    line: int
    column: int


def _tokenize(text):
    tokens = []
    line = 1
    col = 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token("punct", ch, line, col))
            i += 1
            col += 1
            continue
        if ch == "-":
            if i + 1 < n and text[i + 1] == ">":
                tokens.append(Token("arrow", "->", line, col))
                i += 2
                col += 2
                continue
            raise ParseError("'-' must begin an arrow '->'", line, col)
        start = i
        start_col = col
        while i < n and not text[i].isspace() and text[i] not in _PUNCT and text[i] != "-":
            i += 1
            col += 1
        tokens.append(Token("name", text[start:i], line, start_col))
    return tokens


@dataclass(frozen=True)
class MorphismFile:
    """Named morphisms plus the optional start/pair designations."""

    morphisms: dict
    start: str | None = None
    pair: tuple | None = None

    def morphism(self, name):
        try:
            return self.morphisms[name]
        except KeyError:
            raise ParseError(f"no morphism named {name!r}") from None


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, expect_kind=None, expect_text=None):
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else Token("punct", "", 1, 1)
            raise ParseError("unexpected end of input", last.line, last.column)
        if expect_kind and tok.kind != expect_kind:
            raise ParseError(f"expected {expect_kind}, got {tok.text!r}", tok.line, tok.column)
        if expect_text and tok.text != expect_text:
            raise ParseError(f"expected {expect_text!r}, got {tok.text!r}", tok.line, tok.column)
        self.pos += 1
        return tok

    def parse(self):
        raw_morphisms = {}
        start = None
        pair = None
        while self.peek() is not None:
            head = self.next("name")
            nxt = self.peek()
            if nxt is not None and nxt.kind == "punct" and nxt.text == "=":
                if head.text == "start":
                    self.next()
                    start_tok = self.next("name")
                    self.next("punct", ";")
                    start = (start_tok.text, start_tok)
                elif head.text == "pair":
                    self.next()
                    f_tok = self.next("name")
                    self.next("punct", ",")
                    g_tok = self.next("name")
                    self.next("punct", ";")
                    pair = (f_tok, g_tok)
                else:
                    raise ParseError(
                        f"unknown directive {head.text!r}", head.line, head.column
                    )
                continue
            if head.text in raw_morphisms:
                raise ParseError(f"duplicate morphism {head.text!r}", head.line, head.column)
            raw_morphisms[head.text] = self._rules(head)
        return raw_morphisms, start, pair

    def _rules(self, head):
        self.next("punct", "{")
        rules = []
        seen = set()
        while True:
            tok = self.peek()
            if tok is None:
                raise ParseError(f"unterminated morphism {head.text!r}", head.line, head.column)
            if tok.kind == "punct" and tok.text == "}":
                self.next()
                break
            lhs = self.next("name")
            if lhs.text in seen:
                raise ParseError(f"duplicate rule for {lhs.text!r}", lhs.line, lhs.column)
            seen.add(lhs.text)
            self.next("arrow")
            rhs = []
            while True:
                tok = self.peek()
                if tok is None:
                    raise ParseError("unterminated rule", lhs.line, lhs.column)
                if tok.kind == "punct" and tok.text == ";":
                    self.next()
                    break
                rhs.append(self.next("name").text)
            rules.append((lhs.text, rhs))
        if not rules:
            raise ParseError(f"morphism {head.text!r} has no rules", head.line, head.column)
        return rules


def _build_morphism(rules):
    compact = all(len(lhs) == 1 for lhs, _ in rules)
    expanded = {}
    for lhs, rhs in rules:
        image = []
        for token in rhs:
            if compact:
                image.extend(token)
            else:
                image.append(token)
        expanded[lhs] = tuple(image)
    return Morphism.from_rules(expanded)


def parse_file(text):
    """Parse morphism-file text into a MorphismFile."""
    parser = _Parser(_tokenize(text))
    raw, start, pair = parser.parse()
    morphisms = {name: _build_morphism(rules) for name, rules in raw.items()}
    pair_names = None
    if pair is not None:
        f_tok, g_tok = pair
        for tok in (f_tok, g_tok):
            if tok.text not in morphisms:
                raise ParseError(f"pair references unknown morphism {tok.text!r}", tok.line, tok.column)
        f = morphisms[f_tok.text]
        g = morphisms[g_tok.text]
        if not f.is_endomorphism:
            raise ParseError(
                f"pair generator {f_tok.text!r} must be an endomorphism", f_tok.line, f_tok.column
            )
        if set(g.domain.letters) != set(f.domain.letters):
            raise ParseError(
                f"pair morphisms {f_tok.text!r} and {g_tok.text!r} use different alphabets",
                g_tok.line,
                g_tok.column,
            )
        pair_names = (f_tok.text, g_tok.text)
    start_name = None
    if start is not None:
        start_name, start_tok = start
        if pair_names is not None:
            domain = morphisms[pair_names[0]].domain
            if start_name not in domain:
                raise ParseError(
                    f"start letter {start_name!r} is not in the pair's alphabet",
                    start_tok.line,
                    start_tok.column,
                )
        elif not any(start_name in m.domain for m in morphisms.values()):
            raise ParseError(
                f"start letter {start_name!r} is not declared by any morphism",
                start_tok.line,
                start_tok.column,
            )
    return MorphismFile(morphisms=morphisms, start=start_name, pair=pair_names)


def format_morphism(name, morphism):
    lines = [f"{name} {{"]
    for letter in morphism.domain:
        image_letters = morphism.image(letter).letters()
        if image_letters:
            lines.append(f"  {letter} -> {' '.join(image_letters)} ;")
        else:
            lines.append(f"  {letter} -> ;")
    lines.append("}")
    return "\n".join(lines)


def format_file(mf):
    """Render a MorphismFile back to parseable text."""
    parts = [format_morphism(name, m) for name, m in mf.morphisms.items()]
    if mf.start is not None:
        parts.append(f"start = {mf.start} ;")
    if mf.pair is not None:
        parts.append(f"pair = {mf.pair[0]} , {mf.pair[1]} ;")
    return "\n".join(parts) + "\n"

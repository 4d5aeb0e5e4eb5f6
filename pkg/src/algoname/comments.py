"""Comment extraction with per-language lexers.

Each lexer walks the source once and records *regions*: comments plus the
literals (strings, regexes, heredocs) that must be skipped so their contents
never open a false comment. Comment regions are then turned into
:class:`CommentDoc` records, merging runs of own-line ``//``/``#`` comments.
"""

from __future__ import annotations

import bisect
import enum
import logging
import re
from dataclasses import dataclass, field, replace

from algoname.corpus import Language, SourceFile

log = logging.getLogger(__name__)


class CommentKind(str, enum.Enum):
    LINE_RUN = "line_run"
    BLOCK = "block"


@dataclass(frozen=True)
class CommentDoc:
    comment_id: int
    source_path: str
    language: Language
    raw_text: str
    start_line: int
    end_line: int
    kind: CommentKind


@dataclass(frozen=True)
class Region:
    """A lexed span; ``start``/``end`` include delimiters, ``body_*`` exclude them."""

    kind: str
    start: int
    end: int
    body_start: int
    body_end: int

    @property
    def is_comment(self) -> bool:
        return self.kind in COMMENT_REGION_KINDS


COMMENT_REGION_KINDS = frozenset({"line", "block", "docstring"})
LITERAL_REGION_KINDS = frozenset({"string", "regex", "heredoc"})


@dataclass
class ScanResult:
    regions: list[Region] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def comments(self) -> list[Region]:
        return [r for r in self.regions if r.is_comment]


_IDENT_START = re.compile(r"[A-Za-z_$\x80-\uffff]")
_WORD = re.compile(r"[\w$\x80-\uffff]+")


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.n = len(text)
        self.result = ScanResult()

    def add(self, kind: str, start: int, end: int, body_start: int, body_end: int) -> None:
        self.result.regions.append(Region(kind, start, end, body_start, max(body_start, body_end)))

    def warn(self, msg: str, pos: int) -> None:
        line = self.text.count("\n", 0, pos) + 1
        self.result.warnings.append(f"line {line}: {msg}")

    def at(self, i: int) -> str:
        return self.text[i] if 0 <= i < self.n else ""

    def line_comment(self, i: int, delim: int, *, continuation: bool = False, stop: str | None = None) -> int:
        """Comment from ``i`` up to (not including) the newline."""
        j = i + delim
        while True:
            nl = self.text.find("\n", j)
            end = self.n if nl < 0 else nl
            if stop is not None:
                s = self.text.find(stop, j, end)
                if s >= 0:
                    self.add("line", i, s, i + delim, s)
                    return s
            if continuation and nl >= 0 and self.text[i:end].rstrip("\r").endswith("\\"):
                j = nl + 1
                continue
            body_end = end - 1 if end > i and self.text[end - 1] == "\r" else end
            self.add("line", i, body_end, i + delim, body_end)
            return end

    def block_comment(self, i: int, opener: str, closer: str) -> int:
        j = self.text.find(closer, i + len(opener))
        if j < 0:
            self.warn("unterminated block comment", i)
            self.add("block", i, self.n, i + len(opener), self.n)
            return self.n
        self.add("block", i, j + len(closer), i + len(opener), j)
        return j + len(closer)

    def quoted(self, start: int, q: int, quote: str, *, multiline: bool = False, kind: str = "string") -> int:
        """Backslash-escaped literal whose opening ``quote`` sits at ``q``."""
        j = q + len(quote)
        while j < self.n:
            c = self.text[j]
            if c == "\\":
                j += 2
                continue
            if self.text.startswith(quote, j):
                self.add(kind, start, j + len(quote), q + len(quote), j)
                return j + len(quote)
            if c == "\n" and not multiline:
                # unterminated single-line literal: resynchronise at the newline
                self.add(kind, start, j, q + len(quote), j)
                return j
            j += 1
        self.warn("unterminated literal", start)
        self.add(kind, start, self.n, q + len(quote), self.n)
        return self.n

    def regex(self, i: int) -> int | None:
        """``/.../flags`` starting at ``i``; None if no closing slash on this line."""
        j = i + 1
        in_class = False
        while j < self.n:
            c = self.text[j]
            if c == "\\":
                j += 2
                continue
            if c == "\n":
                return None
            if in_class:
                if c == "]":
                    in_class = False
            elif c == "[":
                in_class = True
            elif c == "/":
                end = j + 1
                while end < self.n and self.text[end].isalpha():
                    end += 1
                self.add("regex", i, end, i + 1, j)
                return end
            j += 1
        return None


# ---------------------------------------------------------------- C family

_JS_REGEX_AFTER = set("(,=:[!&|?{};")
_JS_REGEX_KEYWORDS = {
    "return", "typeof", "case", "do", "else", "in", "of", "void", "yield",
    "await", "delete", "new", "throw", "instanceof",
}
_CPP_RAW_PREFIXES = {"R", "u8R", "uR", "UR", "LR"}


class _CFamilyScanner(_Scanner):
    def __init__(self, text: str, language: Language) -> None:
        super().__init__(text)
        self.language = language
        self.js = language is Language.JAVASCRIPT
        self.cpp = language is Language.CPP
        self.java = language is Language.JAVA
        self.continuation = language in (Language.C, Language.CPP)

    def run(self) -> ScanResult:
        self.code(0, nested=False)
        return self.result

    def code(self, i: int, nested: bool) -> int:
        """Scan code from ``i``; when ``nested``, return just past the closing ``}``."""
        text, n = self.text, self.n
        depth = 0
        prev = ""
        while i < n:
            c = text[i]
            nxt = self.at(i + 1)
            if c == "/" and nxt == "/":
                i = self.line_comment(i, 2, continuation=self.continuation)
                continue
            if c == "/" and nxt == "*":
                i = self.block_comment(i, "/*", "*/")
                continue
            if c.isspace():
                i += 1
                continue
            if c == "`" and self.js:
                i = self.template(i)
                prev = "`"
                continue
            if c == '"' or c == "'":
                if self.java and text.startswith('"""', i):
                    i = self.quoted(i, i, '"""', multiline=True)
                else:
                    i = self.quoted(i, i, c)
                prev = c
                continue
            if c == "/" and self.js and (prev == "" or prev in _JS_REGEX_AFTER or prev in _JS_REGEX_KEYWORDS):
                end = self.regex(i)
                if end is not None:
                    i = end
                    prev = "/re/"
                    continue
            if c.isdigit():
                m = re.compile(r"[\w.']+" if self.cpp else r"[\w.]+").match(text, i)
                i = m.end()
                prev = "0"
                continue
            if _IDENT_START.match(c):
                m = _WORD.match(text, i)
                word = m.group()
                j = m.end()
                if self.cpp and word in _CPP_RAW_PREFIXES and self.at(j) == '"':
                    i = self.raw_string(i, j)
                    prev = '"'
                    continue
                if self.at(j) in "\"'" and word in ("L", "u", "U", "u8"):
                    i = self.quoted(i, j, self.at(j))
                    prev = '"'
                    continue
                i = j
                prev = word
                continue
            if nested:
                if c == "{":
                    depth += 1
                elif c == "}":
                    if depth == 0:
                        return i + 1
                    depth -= 1
            prev = c
            i += 1
        return i

    def raw_string(self, start: int, q: int) -> int:
        paren = self.text.find("(", q + 1)
        nl = self.text.find("\n", q + 1)
        if paren < 0 or (0 <= nl < paren) or paren - q - 1 > 16:
            return self.quoted(start, q, '"')
        closer = ")" + self.text[q + 1 : paren] + '"'
        end = self.text.find(closer, paren + 1)
        if end < 0:
            self.warn("unterminated raw string", start)
            self.add("string", start, self.n, paren + 1, self.n)
            return self.n
        self.add("string", start, end + len(closer), paren + 1, end)
        return end + len(closer)

    def template(self, i: int) -> int:
        """JS template literal; each ``${...}`` is scanned as code."""
        seg = i
        j = i + 1
        while j < self.n:
            c = self.text[j]
            if c == "\\":
                j += 2
                continue
            if c == "`":
                self.add("string", seg, j + 1, seg + 1, j)
                return j + 1
            if c == "$" and self.at(j + 1) == "{":
                self.add("string", seg, j + 2, seg + 1, j)
                j = self.code(j + 2, nested=True)
                seg = j - 1
                continue
            j += 1
        self.warn("unterminated template literal", seg)
        self.add("string", seg, self.n, seg + 1, self.n)
        return self.n


# ---------------------------------------------------------------- PHP

_PHP_HEREDOC = re.compile(r"<<<[ \t]*([\"']?)([A-Za-z_]\w*)\1[ \t]*\r?\n")


class _PhpScanner(_Scanner):
    def run(self) -> ScanResult:
        i = 0
        while i < self.n:
            j = self.text.find("<?", i)
            if j < 0:
                break
            if self.text[j : j + 5].lower() == "<?php":
                i = self.code(j + 5)
            elif self.text.startswith("<?=", j):
                i = self.code(j + 3)
            else:
                i = j + 2
        return self.result

    def code(self, i: int) -> int:
        """Scan PHP code until ``?>``; returns the index after it."""
        text, n = self.text, self.n
        while i < n:
            c = text[i]
            nxt = self.at(i + 1)
            if c == "?" and nxt == ">":
                return i + 2
            if c == "/" and nxt == "/":
                i = self.line_comment(i, 2, stop="?>")
                continue
            if c == "#" and nxt != "[":
                i = self.line_comment(i, 1, stop="?>")
                continue
            if c == "/" and nxt == "*":
                i = self.block_comment(i, "/*", "*/")
                continue
            if c in "\"'`":
                i = self.quoted(i, i, c, multiline=True)
                continue
            if c == "<" and text.startswith("<<<", i):
                m = _PHP_HEREDOC.match(text, i)
                if m:
                    i = self.heredoc(i, m)
                    continue
            i += 1
        return i

    def heredoc(self, start: int, m: re.Match) -> int:
        ident = m.group(2)
        body = m.end()
        closing = re.compile(r"^[ \t]*" + re.escape(ident) + r"\b", re.M)
        c = closing.search(self.text, body)
        if c is None:
            self.warn("unterminated heredoc", start)
            self.add("heredoc", start, self.n, body, self.n)
            return self.n
        self.add("heredoc", start, c.end(), body, c.start())
        return c.end()


# ---------------------------------------------------------------- Python

_PY_PREFIXES = {"r", "u", "b", "f", "br", "rb", "fr", "rf"}


class _PythonScanner(_Scanner):
    def __init__(self, text: str, docstrings: bool = True) -> None:
        super().__init__(text)
        self.docstrings = docstrings
        self.first_statement = True
        self.after_colon = False

    def run(self) -> ScanResult:
        text, n = self.text, self.n
        i = 0
        depth = 0
        line: list[object] = []  # tokens of the current logical line; Region for strings
        while i < n:
            c = text[i]
            if c == "#":
                i = self.line_comment(i, 1)
                continue
            if c == "\\" and text.startswith("\n", i + 1):
                i += 2
                continue
            if c == "\\" and text.startswith("\r\n", i + 1):
                i += 3
                continue
            if c == "\n":
                if depth == 0:
                    self.end_logical_line(line)
                    line = []
                i += 1
                continue
            if c.isspace():
                i += 1
                continue
            if c in "\"'":
                i = self.string(i, i)
                line.append(self.result.regions[-1])
                continue
            if _IDENT_START.match(c) or c.isdigit():
                m = _WORD.match(text, i)
                j = m.end()
                if self.at(j) in "\"'" and m.group().lower() in _PY_PREFIXES:
                    i = self.string(i, j)
                    line.append(self.result.regions[-1])
                    continue
                line.append(m.group())
                i = j
                continue
            if c in "([{":
                depth += 1
            elif c in ")]}":
                depth = max(0, depth - 1)
            line.append(c)
            i += 1
        self.end_logical_line(line)
        return self.result

    def string(self, start: int, q: int) -> int:
        quote = self.text[q]
        if self.text.startswith(quote * 3, q):
            return self.quoted(start, q, quote * 3, multiline=True)
        return self.quoted(start, q, quote)

    def end_logical_line(self, tokens: list[object]) -> None:
        if not tokens:
            return
        if (
            self.docstrings
            and (self.first_statement or self.after_colon)
            and all(isinstance(t, Region) for t in tokens)
        ):
            regions = self.result.regions
            for t in tokens:
                idx = regions.index(t)
                regions[idx] = replace(t, kind="docstring")
        self.after_colon = tokens[-1] == ":"
        self.first_statement = False


# ---------------------------------------------------------------- Ruby

_RUBY_VALUE_AFTER = set("(,=:[!&|?{};+-*/%<>~^\n")
_RUBY_VALUE_KEYWORDS = {
    "if", "elsif", "unless", "while", "until", "when", "return", "and", "or",
    "not", "then", "do", "else", "case", "in", "puts", "print", "p", "yield",
}
_RUBY_HEREDOC = re.compile(r"<<([~-]?)(?:([\"'`])([^\"'`\n]+)\2|([A-Za-z_]\w*))")
_RUBY_PAIRS = {"(": ")", "[": "]", "{": "}", "<": ">"}


class _RubyScanner(_Scanner):
    def __init__(self, text: str) -> None:
        super().__init__(text)
        self.pending: list[tuple[str, bool]] = []  # (terminator, indented)

    def run(self) -> ScanResult:
        self.code(0, nested=False)
        return self.result

    def value_position(self, prev: str) -> bool:
        return prev == "" or prev in _RUBY_VALUE_AFTER or prev in _RUBY_VALUE_KEYWORDS

    def code(self, i: int, nested: bool) -> int:
        text, n = self.text, self.n
        depth = 0
        prev = ""
        while i < n:
            c = text[i]
            bol = i == 0 or text[i - 1] == "\n"
            if bol and c == "=" and re.match(r"=begin(?:\s|$)", text[i : i + 7]):
                i = self.begin_end(i)
                continue
            if bol and re.match(r"__END__\r?(?:\n|$)", text[i : i + 9]):
                return n
            if c == "\n":
                i += 1
                if self.pending:
                    i = self.heredoc_bodies(i)
                prev = "\n"
                continue
            if c == "#":
                i = self.line_comment(i, 1)
                continue
            if c.isspace():
                i += 1
                continue
            if c in "'":
                i = self.quoted(i, i, c, multiline=True)
                prev = '"'
                continue
            if c in "\"`":
                i = self.interpolated(i, c)
                prev = '"'
                continue
            if c == "%" and (lit := self.percent_literal(i, prev)) is not None:
                i = lit
                prev = '"'
                continue
            if c == "<" and text.startswith("<<", i) and (h := self.heredoc_start(i, prev)) is not None:
                i = h
                prev = '"'
                continue
            if c == "/" and self.value_position(prev):
                end = self.regex(i)
                if end is not None:
                    i = end
                    prev = "/re/"
                    continue
            if c == "?" and self.value_position(prev) and i + 1 < n and not text[i + 1].isspace():
                # character literal such as ?# or ?"
                if i + 2 >= n or not (text[i + 2].isalnum() or text[i + 2] == "_"):
                    i += 2
                    prev = '"'
                    continue
            if c == "$" and i + 1 < n and text[i + 1] in "\"'#/\\;,.:<>!?$~=*&@`+":
                i += 2
                prev = "$"
                continue
            if c.isdigit() or _IDENT_START.match(c):
                m = re.compile(r"[\w$\x80-\uffff]+[?!]?").match(text, i)
                prev = m.group()
                i = m.end()
                if c.isdigit():
                    prev = "0"
                continue
            if nested:
                if c == "{":
                    depth += 1
                elif c == "}":
                    if depth == 0:
                        return i + 1
                    depth -= 1
            prev = c
            i += 1
        return i

    def begin_end(self, i: int) -> int:
        first_nl = self.text.find("\n", i)
        body = self.n if first_nl < 0 else first_nl + 1
        m = re.compile(r"^=end(?:[ \t].*)?$", re.M).search(self.text, body)
        if m is None:
            self.warn("unterminated =begin block", i)
            self.add("block", i, self.n, body, self.n)
            return self.n
        self.add("block", i, m.end(), body, m.start())
        return m.end()

    def interpolated(self, start: int, quote: str) -> int:
        """Double-quoted or backtick string; ``#{...}`` bodies are scanned as code."""
        seg = start
        j = start + 1
        while j < self.n:
            c = self.text[j]
            if c == "\\":
                j += 2
                continue
            if c == quote:
                self.add("string", seg, j + 1, seg + 1, j)
                return j + 1
            if c == "#" and self.at(j + 1) == "{":
                self.add("string", seg, j + 2, seg + 1, j)
                j = self.code(j + 2, nested=True)
                seg = j - 1
                continue
            j += 1
        self.warn("unterminated string", start)
        self.add("string", seg, self.n, seg + 1, self.n)
        return self.n

    def percent_literal(self, i: int, prev: str) -> int | None:
        text = self.text
        j = i + 1
        typed = self.at(j) in tuple("qQwWiIrsx") and self.at(j)
        if typed:
            j += 1
        d = self.at(j)
        if not d or d.isalnum() or d.isspace() or d == "_":
            return None
        if not self.value_position(prev) and not (typed and text[i - 1 : i].isspace()):
            return None
        close = _RUBY_PAIRS.get(d, d)
        level = 0
        k = j + 1
        while k < self.n:
            c = text[k]
            if c == "\\":
                k += 2
                continue
            if c == d and close != d:
                level += 1
            elif c == close:
                if level == 0:
                    kind = "regex" if typed == "r" else "string"
                    self.add(kind, i, k + 1, j + 1, k)
                    return k + 1
                level -= 1
            k += 1
        self.warn("unterminated percent literal", i)
        self.add("string", i, self.n, j + 1, self.n)
        return self.n

    def heredoc_start(self, i: int, prev: str) -> int | None:
        m = _RUBY_HEREDOC.match(self.text, i)
        if m is None:
            return None
        flag, quote, quoted_id, bare_id = m.groups()
        if bare_id is not None and not flag:
            # bare <<ID only when it cannot be a shift: value position and an upper-case id
            if not (self.value_position(prev) or self.text[i - 1 : i].isspace()) or not bare_id.isupper():
                return None
        ident = quoted_id if quote else bare_id
        self.pending.append((ident, bool(flag)))
        self.add("string", i, m.end(), m.end(), m.end())  # the <<ID marker itself
        return m.end()

    def heredoc_bodies(self, i: int) -> int:
        for ident, indented in self.pending:
            body = i
            while True:
                if i >= self.n:
                    self.warn(f"unterminated heredoc {ident}", body)
                    self.add("heredoc", body, self.n, body, self.n)
                    break
                nl = self.text.find("\n", i)
                end = self.n if nl < 0 else nl
                line = self.text[i:end].rstrip("\r")
                if (line.strip() if indented else line) == ident:
                    self.add("heredoc", body, end, body, i)
                    i = end + 1 if nl >= 0 else self.n
                    break
                i = end + 1
        self.pending.clear()
        return min(i, self.n)


# ---------------------------------------------------------------- public API

def scan_regions(text: str, language: Language, docstrings: bool = True) -> ScanResult:
    """Lex ``text`` and return comment and literal regions in source order."""
    if language is Language.PYTHON:
        res = _PythonScanner(text, docstrings).run()
    elif language is Language.RUBY:
        res = _RubyScanner(text).run()
    elif language is Language.PHP:
        res = _PhpScanner(text).run()
    else:
        res = _CFamilyScanner(text, language).run()
    res.regions.sort(key=lambda r: (r.start, r.end))
    return res


_DELIMITERS: dict[Language, tuple[str, ...]] = {
    Language.C: ("/*", "*/", "//"),
    Language.CPP: ("/*", "*/", "//"),
    Language.JAVA: ("/*", "*/", "//"),
    Language.JAVASCRIPT: ("/*", "*/", "//"),
    Language.PHP: ("/*", "*/", "//", "#"),
    Language.PYTHON: ('"""', "'''", "#"),
    Language.RUBY: ("=begin", "=end", "#"),
}


def _trim(text: str, language: Language) -> str:
    """Strip whitespace, decoration stars and stray delimiters from both ends."""
    delims = _DELIMITERS[language]
    c_like = "/*" in delims
    while True:
        before = text
        text = text.strip()
        if c_like:
            text = text.strip("*").strip()
        for d in delims:
            if text.startswith(d):
                text = text[len(d):]
            if text.endswith(d):
                text = text[: -len(d)]
        if language in (Language.PYTHON, Language.RUBY, Language.PHP):
            text = text.strip("#")
        if text == before:
            return text


def _line_body(text: str, region: Region, language: Language) -> str:
    body = text[region.body_start : region.body_end]
    lead = text[region.start : region.body_start]
    if lead == "//":
        body = body.lstrip("/")
    elif lead == "#":
        body = body.lstrip("#")
    return _trim(body, language)


def _block_body(text: str, region: Region, language: Language) -> str:
    body = text[region.body_start : region.body_end]
    if region.kind == "docstring" or language is Language.RUBY:
        return _trim(body, language)
    # drop the leading " * " gutter of javadoc-style blocks line by line
    lines = [re.sub(r"^\s*\*+(?!/) ?", "", ln) for ln in body.split("\n")]
    return _trim("\n".join(ln.rstrip() for ln in lines), language)


class _Lines:
    def __init__(self, text: str) -> None:
        self.text = text
        self.starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def line_of(self, pos: int) -> int:
        return bisect.bisect_right(self.starts, pos)

    def line_text(self, line: int) -> str:
        s = self.starts[line - 1]
        e = self.starts[line] if line < len(self.starts) else len(self.text)
        return self.text[s:e]

    def own_line(self, pos: int) -> bool:
        s = self.starts[self.line_of(pos) - 1]
        return self.text[s:pos].strip() == ""


def extract_comments(file: SourceFile, docstrings: bool = True) -> list[CommentDoc]:
    """Return the file's comments in source order with ``comment_id`` left at 0.

    Own-line ``//``/``#`` comments separated only by blank lines merge into
    one ``line_run`` document; a trailing comment after code starts its own.
    """
    text = file.content
    res = scan_regions(text, file.language, docstrings)
    for w in res.warnings:
        log.warning("%s: %s", file.path, w)
    lines = _Lines(text)

    docs: list[CommentDoc] = []
    run_open = False  # last doc is a line_run that may absorb the next line comment
    for r in res.comments:
        start_line = lines.line_of(r.start)
        end_line = lines.line_of(max(r.start, r.end - 1))
        if r.kind == "line":
            body = _line_body(text, r, file.language)
            own = lines.own_line(r.start)
            if run_open and own and docs:
                prev = docs[-1]
                gap = range(prev.end_line + 1, start_line)
                if all(lines.line_text(k).strip() == "" for k in gap):
                    merged = prev.raw_text + "\n" + body if prev.raw_text else body
                    docs[-1] = replace(prev, raw_text=merged.strip("\n"), end_line=end_line)
                    continue
            docs.append(
                CommentDoc(0, file.path, file.language, body, start_line, end_line, CommentKind.LINE_RUN)
            )
            run_open = own
        else:
            body = _block_body(text, r, file.language)
            docs.append(CommentDoc(0, file.path, file.language, body, start_line, end_line, CommentKind.BLOCK))
            run_open = False
    return docs


def number_comments(docs, start: int = 1) -> list[CommentDoc]:
    """Assign corpus-wide ids in the given (deterministic) order."""
    return [replace(d, comment_id=start + k) for k, d in enumerate(docs)]

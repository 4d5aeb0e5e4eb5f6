"""Source tree ingestion: language detection and deterministic file walking."""

from __future__ import annotations

import enum
import hashlib
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path, PurePosixPath
from typing import Iterable, Iterator

log = logging.getLogger(__name__)


class Language(str, enum.Enum):
    C = "C"
    CPP = "Cpp"
    JAVA = "Java"
    JAVASCRIPT = "JavaScript"
    PYTHON = "Python"
    PHP = "PHP"
    RUBY = "Ruby"

    @classmethod
    def parse(cls, name: str) -> "Language":
        key = name.strip().lower()
        for lang in cls:
            if lang.value.lower() == key:
                return lang
        aliases = {"c++": cls.CPP, "js": cls.JAVASCRIPT, "py": cls.PYTHON, "rb": cls.RUBY}
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown language: {name!r}")


# .h goes to C; C and C++ were mined as separate corpora.
EXTENSIONS: dict[str, Language] = {
    ".c": Language.C,
    ".h": Language.C,
    ".cc": Language.CPP,
    ".cpp": Language.CPP,
    ".cxx": Language.CPP,
    ".hpp": Language.CPP,
    ".hh": Language.CPP,
    ".hxx": Language.CPP,
    ".java": Language.JAVA,
    ".js": Language.JAVASCRIPT,
    ".jsx": Language.JAVASCRIPT,
    ".mjs": Language.JAVASCRIPT,
    ".py": Language.PYTHON,
    ".php": Language.PHP,
    ".rb": Language.RUBY,
}


def detect_language(path: str) -> Language | None:
    """Map a path to a language by its final extension (case-insensitive)."""
    suffix = PurePosixPath(str(path).replace("\\", "/")).suffix.lower()
    return EXTENSIONS.get(suffix)


def content_hash(data: bytes) -> str:
    """64-bit BLAKE2b digest as 16 hex digits."""
    return hashlib.blake2b(data, digest_size=8).hexdigest()


@dataclass(frozen=True)
class SourceFile:
    path: str  # posix path relative to the scan root
    language: Language
    content: str
    content_hash: str

    @classmethod
    def from_bytes(cls, path: str, language: Language, data: bytes) -> "SourceFile":
        return cls(path, language, data.decode("utf-8", errors="replace"), content_hash(data))

    @classmethod
    def from_text(cls, path: str, text: str, language: Language | None = None) -> "SourceFile":
        lang = language or detect_language(path)
        if lang is None:
            raise ValueError(f"cannot detect language of {path!r}")
        return cls.from_bytes(path, lang, text.encode("utf-8"))


@dataclass
class SkipReport:
    """Files that matched a language but could not be read."""

    entries: list[tuple[str, str]] = field(default_factory=list)

    def add(self, path: str, reason: str) -> None:
        log.warning("skipping %s: %s", path, reason)
        self.entries.append((path, reason))

    def __len__(self) -> int:
        return len(self.entries)


def _walk(root: Path) -> Iterator[Path]:
    # scandir order is filesystem-dependent, so sort each level by name
    try:
        entries = sorted(os.scandir(root), key=lambda e: e.name)
    except OSError as exc:
        log.warning("cannot list %s: %s", root, exc)
        return
    for entry in entries:
        if entry.is_symlink():
            continue
        if entry.is_dir(follow_symlinks=False):
            yield from _walk(Path(entry.path))
        elif entry.is_file(follow_symlinks=False):
            yield Path(entry.path)


def scan_tree(
    root: str | os.PathLike,
    language_filter: Iterable[Language] | None = None,
    skips: SkipReport | None = None,
) -> Iterator[SourceFile]:
    """Yield every source file under ``root`` in lexicographic path order.

    Symlinks are never followed. Unreadable files are logged and recorded in
    ``skips``; an unreadable root raises ``OSError``.
    """
    root = Path(root)
    if not root.is_dir():
        raise NotADirectoryError(f"scan root is not a directory: {root}")
    if not os.access(root, os.R_OK | os.X_OK):
        raise PermissionError(f"scan root is not readable: {root}")
    wanted = set(language_filter) if language_filter is not None else None
    skips = skips if skips is not None else SkipReport()

    paths = []
    for p in _walk(root):
        rel = p.relative_to(root).as_posix()
        lang = detect_language(rel)
        if lang is None or (wanted is not None and lang not in wanted):
            continue
        paths.append((rel, lang, p))
    # full-path sort: per-level name sort differs from it for names like "a-b" vs "a/b"
    paths.sort(key=lambda t: t[0])

    for rel, lang, p in paths:
        try:
            data = p.read_bytes()
        except OSError as exc:
            skips.add(rel, str(exc))
            continue
        yield SourceFile.from_bytes(rel, lang, data)

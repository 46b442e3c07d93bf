"""Gapped pattern data model and the pattern text format.

A gapped pattern is a sequence of keywords separated by fixed-length gaps::

    c {2} at {1} t

matches ``c``, then any two symbols, then ``at``, then any one symbol, then
``t``. Keywords are byte strings or single-symbol character classes
(``[ag]``, or ``*`` for the whole alphabet).

Two normal forms are derived from a :class:`PatternSet`:

* :func:`jbar_transform` rewrites every gap as the distance between the end
  positions of consecutive keywords, yielding one unit-length meta-keyword
  per keyword (a :class:`JBarSet`). The column matcher and the gap
  decomposition work on this form.
* :func:`psi_split` breaks every string keyword into single symbols joined by
  zero gaps. The row matcher works on this form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

ALL_BYTES = frozenset(range(256))

# Upper bound on transformed gap lengths; the column matcher keeps one column
# per gap length in its history buffer.
MAX_GAP = 1 << 20

_RESERVED = frozenset(b"{[#")
_SPACE = frozenset(b" \t\n\r\x0b\x0c")


class PatternSyntaxError(ValueError):
    """Malformed line in a pattern file."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Str:
    """A literal byte-string keyword."""

    text: bytes

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("string keyword must be non-empty")

    @property
    def length(self) -> int:
        return len(self.text)

    def strings(self) -> list[bytes]:
        return [self.text]

    def symbols_used(self) -> set[int]:
        return set(self.text)


@dataclass(frozen=True)
class CharClass:
    """A unit-length keyword matching any one of ``symbols``."""

    symbols: frozenset[int]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("character class must be non-empty")
        object.__setattr__(self, "symbols", frozenset(self.symbols))

    @property
    def length(self) -> int:
        return 1

    def strings(self) -> list[bytes]:
        return [bytes([s]) for s in sorted(self.symbols)]

    def symbols_used(self) -> set[int]:
        return set(self.symbols)


Keyword = Union[Str, CharClass]


def wildcard(alphabet: Iterable[int] = ALL_BYTES) -> CharClass:
    return CharClass(frozenset(alphabet))


@dataclass(frozen=True)
class GappedPattern:
    keywords: tuple[Keyword, ...]
    gaps: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "keywords", tuple(self.keywords))
        object.__setattr__(self, "gaps", tuple(int(g) for g in self.gaps))
        if not self.keywords:
            raise ValueError("a gapped pattern needs at least one keyword")
        if len(self.gaps) != len(self.keywords) - 1:
            raise ValueError(
                f"{len(self.keywords)} keywords need {len(self.keywords) - 1} gaps, "
                f"got {len(self.gaps)}"
            )
        if any(g < 0 for g in self.gaps):
            raise ValueError("gap lengths must be non-negative")

    @classmethod
    def of(cls, *items: bytes | str | Keyword | int) -> GappedPattern:
        """Build from alternating keywords and gaps: ``of("c", 2, "at", 1, "t")``."""
        keywords: list[Keyword] = []
        gaps: list[int] = []
        for pos, item in enumerate(items):
            if pos % 2:
                if not isinstance(item, int):
                    raise TypeError(f"expected a gap length at position {pos}")
                gaps.append(item)
            else:
                if isinstance(item, int):
                    raise TypeError(f"expected a keyword at position {pos}")
                if isinstance(item, str):
                    item = item.encode()
                keywords.append(Str(item) if isinstance(item, bytes) else item)
        return cls(tuple(keywords), tuple(gaps))

    @property
    def klen(self) -> int:
        return len(self.keywords)

    @property
    def length(self) -> int:
        """Number of alphabet symbols covered by keywords."""
        return sum(kw.length for kw in self.keywords)

    @property
    def span(self) -> int:
        """Length of every occurrence in the text."""
        return self.length + sum(self.gaps)

    @property
    def jbar(self) -> tuple[int, ...]:
        """End-to-end distances between consecutive keywords."""
        return tuple(g + kw.length for g, kw in zip(self.gaps, self.keywords[1:]))

    @property
    def has_classes(self) -> bool:
        return any(isinstance(kw, CharClass) for kw in self.keywords)


@dataclass(frozen=True)
class PatternSet:
    patterns: tuple[GappedPattern, ...]
    alphabet: frozenset[int] = ALL_BYTES

    def __post_init__(self) -> None:
        object.__setattr__(self, "patterns", tuple(self.patterns))
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        for pat in self.patterns:
            for kw in pat.keywords:
                stray = kw.symbols_used() - self.alphabet
                if stray:
                    raise ValueError(f"symbols {sorted(stray)} are outside the alphabet")

    def __len__(self) -> int:
        return len(self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def __getitem__(self, k: int) -> GappedPattern:
        return self.patterns[k]

    @property
    def klen(self) -> int:
        return sum(p.klen for p in self.patterns)

    @property
    def length(self) -> int:
        return sum(p.length for p in self.patterns)

    @property
    def offsets(self) -> tuple[int, ...]:
        """First bit of each pattern, plus a trailing ``klen`` sentinel."""
        out = [0]
        for p in self.patterns:
            out.append(out[-1] + p.klen)
        return tuple(out)

    def bit_index(self, k: int, l: int) -> int:
        """Bit of the prefix ending with keyword ``l`` of pattern ``k`` (both 0-based)."""
        if not 0 <= l < self.patterns[k].klen:
            raise IndexError(l)
        return self.offsets[k] + l

    def prefix_of_bit(self, bit: int) -> tuple[int, int]:
        offsets = self.offsets
        for k in range(len(self.patterns)):
            if offsets[k] <= bit < offsets[k + 1]:
                return k, bit - offsets[k]
        raise IndexError(bit)

    @property
    def gap_set(self) -> frozenset[int]:
        return frozenset(g for p in self.patterns for g in p.jbar)

    @property
    def g_min(self) -> int:
        return min(self.gap_set, default=0)

    @property
    def g_max(self) -> int:
        return max(self.gap_set, default=0)

    @property
    def g_size(self) -> int:
        return self.g_max - self.g_min + 1 if self.gap_set else 0

    @property
    def has_classes(self) -> bool:
        return any(p.has_classes for p in self.patterns)

    def reordered(self, order: Sequence[int]) -> PatternSet:
        """Patterns in the order ``order[0], order[1], ...``."""
        if sorted(order) != list(range(len(self.patterns))):
            raise ValueError("order must be a permutation of the pattern indices")
        return PatternSet(tuple(self.patterns[k] for k in order), self.alphabet)

    def serialize(self) -> bytes:
        return b"".join(format_pattern(p, self.alphabet) + b"\n" for p in self.patterns)


# -- transformed forms -------------------------------------------------------


@dataclass(frozen=True)
class MetaPattern:
    """Pattern over meta-keywords: ``keys[i]`` indexes ``JBarSet.keywords`` and
    ``gaps[i]`` is the distance between the end positions of keys ``i`` and ``i+1``."""

    keys: tuple[int, ...]
    gaps: tuple[int, ...]

    @property
    def klen(self) -> int:
        return len(self.keys)


@dataclass(frozen=True)
class JBarSet:
    """Pattern set over unit-length meta-keywords.

    Meta-keyword ``i`` occupies bit ``i`` of every column bit-vector; patterns
    are laid out contiguously in order.
    """

    keywords: tuple[Keyword, ...]
    patterns: tuple[MetaPattern, ...]
    alphabet: frozenset[int] = ALL_BYTES
    _gaps: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_gaps", frozenset(g for p in self.patterns for g in p.gaps)
        )

    def __len__(self) -> int:
        return len(self.patterns)

    @property
    def klen(self) -> int:
        return len(self.keywords)

    @property
    def gap_set(self) -> frozenset[int]:
        return self._gaps

    @property
    def g_min(self) -> int:
        return min(self._gaps, default=0)

    @property
    def g_max(self) -> int:
        return max(self._gaps, default=0)

    @property
    def g_size(self) -> int:
        return self.g_max - self.g_min + 1 if self._gaps else 0

    def gap_of_bit(self) -> list[int | None]:
        """Outgoing gap of each bit; ``None`` for the last keyword of a pattern."""
        out: list[int | None] = [None] * self.klen
        for p in self.patterns:
            for key, g in zip(p.keys, p.gaps):
                out[key] = g
        return out


def jbar_transform(ps: PatternSet) -> JBarSet:
    keywords: list[Keyword] = []
    metas: list[MetaPattern] = []
    for pat in ps.patterns:
        start = len(keywords)
        keywords.extend(pat.keywords)
        metas.append(MetaPattern(tuple(range(start, len(keywords))), pat.jbar))
    return JBarSet(tuple(keywords), tuple(metas), ps.alphabet)


def psi_split(pattern: GappedPattern) -> GappedPattern:
    """Split string keywords into unit keywords joined by zero gaps."""
    keywords: list[Keyword] = []
    gaps: list[int] = []
    for pos, kw in enumerate(pattern.keywords):
        if isinstance(kw, CharClass):
            raise ValueError("character classes cannot be split into unit keywords")
        if pos:
            gaps.append(pattern.gaps[pos - 1])
        for i, sym in enumerate(kw.text):
            if i:
                gaps.append(0)
            keywords.append(Str(bytes([sym])))
    return GappedPattern(tuple(keywords), tuple(gaps))


# -- text format -------------------------------------------------------------


def _parse_keyword(tok: bytes, alphabet: frozenset[int], lineno: int) -> Keyword:
    if tok == b"*":
        return CharClass(alphabet)
    if tok.startswith(b"["):
        if not tok.endswith(b"]") or len(tok) < 2:
            raise PatternSyntaxError(lineno, f"unterminated class {tok!r}")
        body = tok[1:-1]
        if not body:
            raise PatternSyntaxError(lineno, "empty character class")
        symbols = frozenset(body)
    else:
        if any(b in _RESERVED for b in tok):
            raise PatternSyntaxError(lineno, f"bad keyword {tok!r}")
        symbols = frozenset(tok)
    stray = symbols - alphabet
    if stray:
        raise PatternSyntaxError(
            lineno, f"symbol {bytes([min(stray)])!r} is outside the alphabet"
        )
    return CharClass(symbols) if tok.startswith(b"[") else Str(tok)


def _parse_gap(tok: bytes, lineno: int) -> int:
    if not (tok.startswith(b"{") and tok.endswith(b"}")):
        raise PatternSyntaxError(lineno, f"expected a gap token, got {tok!r}")
    body = tok[1:-1]
    if not body.isdigit():
        raise PatternSyntaxError(lineno, f"malformed gap {tok!r}")
    return int(body)


def parse_pattern_line(line: bytes, alphabet: frozenset[int] = ALL_BYTES, lineno: int = 1) -> GappedPattern:
    tokens = line.split()
    if not tokens:
        raise PatternSyntaxError(lineno, "pattern has no keywords")
    if len(tokens) % 2 == 0:
        raise PatternSyntaxError(lineno, "pattern must end with a keyword")
    keywords = []
    gaps = []
    for pos, tok in enumerate(tokens):
        if pos % 2:
            gaps.append(_parse_gap(tok, lineno))
        else:
            if tok.startswith(b"{"):
                raise PatternSyntaxError(lineno, f"expected a keyword, got {tok!r}")
            keywords.append(_parse_keyword(tok, alphabet, lineno))
    return GappedPattern(tuple(keywords), tuple(gaps))


def parse_pattern_file(data: bytes | str, alphabet: Iterable[int] = ALL_BYTES) -> PatternSet:
    """Parse the line-oriented pattern format; ``#`` lines are comments."""
    if isinstance(data, str):
        data = data.encode()
    alphabet = frozenset(alphabet)
    patterns = []
    for lineno, line in enumerate(data.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(b"#"):
            continue
        patterns.append(parse_pattern_line(stripped, alphabet, lineno))
    return PatternSet(tuple(patterns), alphabet)


def format_keyword(kw: Keyword, alphabet: frozenset[int] = ALL_BYTES) -> bytes:
    if isinstance(kw, CharClass):
        if kw.symbols == alphabet:
            return b"*"
        body = bytes(sorted(kw.symbols))
        if any(b in _SPACE or b == ord("]") for b in body):
            raise ValueError(f"class {body!r} cannot be written in the pattern format")
        return b"[" + body + b"]"
    text = kw.text
    if text == b"*" or any(b in _RESERVED or b in _SPACE for b in text):
        raise ValueError(f"keyword {text!r} cannot be written in the pattern format")
    return text


def format_pattern(pattern: GappedPattern, alphabet: frozenset[int] = ALL_BYTES) -> bytes:
    parts = [format_keyword(pattern.keywords[0], alphabet)]
    for g, kw in zip(pattern.gaps, pattern.keywords[1:]):
        parts.append(b"{%d}" % g)
        parts.append(format_keyword(kw, alphabet))
    return b" ".join(parts)

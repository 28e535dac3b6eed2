"""Locus-tagged transcription parsing and the corpus document model.

Canonical format: one locus per physical line, `<page.kind.index[suffix]>`
followed by a space and the `.`-separated words; `,` marks an uncertain
space and `=` at the very end marks the end of a paragraph.  Page metadata
(Currier language, illustration section) travels in a separate TSV.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import glyphs

LOCUS_RE = re.compile(r"^<([a-z][a-z0-9]*)\.([A-Za-z][A-Za-z0-9]*)\.(\d+)([a-z]?)>(?: (.*))?$")


class ParseError(ValueError):
    def __init__(self, lineno: int, reason: str):
        self.lineno = lineno
        self.reason = reason
        super().__init__("line %d: %s" % (lineno, reason))


@dataclass(frozen=True)
class Locus:
    page: str
    kind: str
    index: int
    suffix: str = ""

    def text(self) -> str:
        return "<%s.%s.%d%s>" % (self.page, self.kind, self.index, self.suffix)

    @classmethod
    def parse(cls, s: str) -> "Locus":
        m = LOCUS_RE.match(s)
        if not m or m.group(5) is not None:
            raise ValueError("malformed locus %r" % s)
        return cls(m.group(1), m.group(2), int(m.group(3)), m.group(4))


@dataclass
class Line:
    locus: Locus
    words: tuple  # tuple of glyph groups (unit tuples)
    separators: tuple  # '.' or ',' per gap, len(words) - 1 entries
    paragraph_end: bool = False

    def render_words(self) -> str:
        parts = [glyphs.render(self.words[0])]
        for sep, w in zip(self.separators, self.words[1:]):
            parts.append(sep)
            parts.append(glyphs.render(w))
        return "".join(parts)


@dataclass
class Page:
    id: str
    currier: str = "?"
    section: str = "unknown"
    lines: list = field(default_factory=list)
    # list of paragraphs; each is a list of indices into `lines`
    paragraphs: list = field(default_factory=list)


@dataclass(frozen=True)
class LocusKindConfig:
    """Which locus kinds count as running text and which as labels.

    A `*` entry matches any kind starting with that letter, otherwise the
    kind must match exactly.
    """

    text_prefixes: frozenset = frozenset("PRCTQW")
    text_exact: frozenset = frozenset()
    label_prefixes: frozenset = frozenset("LSXY")
    label_exact: frozenset = frozenset({"m", "t"})

    def classify(self, kind: str) -> str:
        if kind in self.text_exact or kind[0] in self.text_prefixes:
            return "text"
        if kind in self.label_exact or kind[0] in self.label_prefixes:
            return "label"
        return "other"


DEFAULT_KINDS = LocusKindConfig()


def load_kind_config(path) -> LocusKindConfig:
    buckets = {"text": ([], []), "label": ([], [])}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, rest = line.partition(":")
            key = key.strip()
            if key not in buckets:
                raise ValueError("line %d: expected text: or label:" % lineno)
            for entry in rest.split():
                if entry.endswith("*"):
                    buckets[key][0].append(entry[:-1])
                else:
                    buckets[key][1].append(entry)
    return LocusKindConfig(
        text_prefixes=frozenset(buckets["text"][0]),
        text_exact=frozenset(buckets["text"][1]),
        label_prefixes=frozenset(buckets["label"][0]),
        label_exact=frozenset(buckets["label"][1]),
    )


@dataclass
class Corpus:
    pages: list
    kinds: LocusKindConfig = DEFAULT_KINDS

    def page_map(self) -> dict:
        return {p.id: p for p in self.pages}

    def all_lines(self):
        for page in self.pages:
            for line in page.lines:
                yield page, line

    def word_tokens(self, include_labels=False):
        for page, line in self.all_lines():
            cls = self.kinds.classify(line.locus.kind)
            if cls == "text" or (include_labels and cls == "label"):
                for w in line.words:
                    yield w


@dataclass(frozen=True)
class TextLine:
    """One line of running text in book order, with its analysis context."""

    page_id: str
    currier: str
    section: str
    locus: Locus
    words: tuple
    is_paragraph_start: bool
    paragraph_line_index: int  # 1-based within the paragraph, 0 for non-paragraph loci
    merged_labels: bool = False


def text_lines(corpus: Corpus, labels_as_one_line=False) -> list:
    """Running-text lines across pages in manuscript order.

    Label loci are excluded; with `labels_as_one_line` adjacent label lines
    on a page are merged into one pseudo-line and kept in sequence.
    """
    out = []
    for page in corpus.pages:
        para_start = {}
        para_index = {}
        for para in page.paragraphs:
            for k, line_idx in enumerate(para):
                para_start[line_idx] = k == 0
                para_index[line_idx] = k + 1
        pending_labels = None
        for idx, line in enumerate(page.lines):
            cls = corpus.kinds.classify(line.locus.kind)
            if cls == "label" and labels_as_one_line:
                if pending_labels is None:
                    pending_labels = [line.locus, list(line.words)]
                else:
                    pending_labels[1].extend(line.words)
                continue
            if pending_labels is not None:
                out.append(
                    TextLine(
                        page.id,
                        page.currier,
                        page.section,
                        pending_labels[0],
                        tuple(pending_labels[1]),
                        False,
                        0,
                        merged_labels=True,
                    )
                )
                pending_labels = None
            if cls != "text":
                continue
            out.append(
                TextLine(
                    page.id,
                    page.currier,
                    page.section,
                    line.locus,
                    line.words,
                    para_start.get(idx, False),
                    para_index.get(idx, 0),
                )
            )
        if pending_labels is not None:
            out.append(
                TextLine(
                    page.id,
                    page.currier,
                    page.section,
                    pending_labels[0],
                    tuple(pending_labels[1]),
                    False,
                    0,
                    merged_labels=True,
                )
            )
    return out


def load_page_meta(path) -> dict:
    """Page metadata TSV: page<TAB>currier(A|B|?)<TAB>section."""
    meta = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError("meta line %d: expected 3 tab-separated fields" % lineno)
            page, currier, section = parts
            if currier not in ("A", "B", "?"):
                raise ValueError("meta line %d: bad currier %r" % (lineno, currier))
            meta[page] = (currier, section)
    return meta


def parse_corpus(
    text: str,
    meta=None,
    kinds: LocusKindConfig = DEFAULT_KINDS,
    comma_joins=False,
    norm=glyphs.DEFAULT_NORMALIZATION,
) -> Corpus:
    """Parse canonical transcription text into the corpus model."""
    meta = meta or {}
    pages = []
    by_id = {}
    n_loci = 0
    for lineno, raw in enumerate(text.split("\n"), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = LOCUS_RE.match(stripped)
        if not m:
            raise ParseError(lineno, "malformed locus tag in %r" % stripped[:40])
        page_id, kind, index, suffix, body = m.groups()
        if body is None or not body.strip():
            raise ParseError(lineno, "locus <%s.%s.%s%s> has no words" % (page_id, kind, index, suffix))
        body = body.strip()
        paragraph_end = body.endswith("=")
        if paragraph_end:
            body = body[:-1]
        if not body:
            raise ParseError(lineno, "locus has only a paragraph marker")
        raw_words = re.split(r"([.,])", body)
        tokens = raw_words[0::2]
        seps = raw_words[1::2]
        if any(t == "" for t in tokens):
            raise ParseError(lineno, "empty word (doubled separator?) in %r" % body)
        if comma_joins:
            merged = [tokens[0]]
            kept = []
            for sep, tok in zip(seps, tokens[1:]):
                if sep == ",":
                    merged[-1] += tok
                else:
                    merged.append(tok)
                    kept.append(sep)
            tokens, seps = merged, kept
        words = []
        for tok in tokens:
            try:
                words.append(glyphs.tokenize(tok, norm=norm))
            except glyphs.UnknownCharacter as exc:
                raise ParseError(
                    lineno, "<%s.%s.%s%s> %s" % (page_id, kind, index, suffix, exc)
                ) from exc
        locus = Locus(page_id, kind, int(index), suffix)
        page = by_id.get(page_id)
        if page is None:
            currier, section = meta.get(page_id, ("?", "unknown"))
            page = Page(page_id, currier, section)
            by_id[page_id] = page
            pages.append(page)
        page.lines.append(Line(locus, tuple(words), tuple(seps), paragraph_end))
        n_loci += 1
    if n_loci == 0:
        raise ParseError(0, "no loci")
    corpus = Corpus(pages, kinds)
    _detect_paragraphs(corpus)
    return corpus


def _detect_paragraphs(corpus: Corpus):
    """Paragraphs start at each P-kind run and after an explicit `=` marker."""
    for page in corpus.pages:
        paragraphs = []
        current = None
        prev_kind = None
        prev_ended = False
        for idx, line in enumerate(page.lines):
            kind = line.locus.kind
            if corpus.kinds.classify(kind) != "text" or kind[0] != "P":
                prev_kind = None
                current = None
                continue
            if current is None or kind != prev_kind or prev_ended:
                current = []
                paragraphs.append(current)
            current.append(idx)
            prev_kind = kind
            prev_ended = line.paragraph_end
        page.paragraphs = paragraphs


def serialize_corpus(corpus: Corpus) -> str:
    out = []
    for page in corpus.pages:
        for line in page.lines:
            tail = "=" if line.paragraph_end else ""
            out.append("%s %s%s" % (line.locus.text(), line.render_words(), tail))
    return "\n".join(out) + "\n"

"""Glyph alphabet, tokenization and the similar-glyph relation.

A glyph group ("word") is represented throughout the package as a tuple of
unit ids.  Units are the atomic transliteration symbols: the digraph ch/sh
and the pedestal forms cth/ckh/cph/cfh count as one unit each, everything
else is a single letter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Longest units first so the greedy tokenizer prefers cth over ch over c.
PEDESTAL_UNITS = ("cth", "ckh", "cph", "cfh")
DIGRAPH_UNITS = ("ch", "sh")
SINGLE_UNITS = tuple("acdefgiklmnopqrstxy")
ALL_UNITS = PEDESTAL_UNITS + DIGRAPH_UNITS + SINGLE_UNITS
UNIT_SET = frozenset(ALL_UNITS)

GALLOWS = frozenset("ktpf")
VOWEL_LIKE = frozenset("oaeiy")
CONSONANT_LIKE = frozenset({"ch", "sh", "n", "r", "s", "l", "d", "m", "q"})

GlyphGroup = tuple  # tuple of unit id strings


def glyph_class(unit: str) -> str:
    """Class of a unit: vowel-like, consonant-like, gallow, pedestal-gallow or other."""
    if unit in GALLOWS:
        return "gallow"
    if unit in PEDESTAL_UNITS:
        return "pedestal-gallow"
    if unit in VOWEL_LIKE:
        return "vowel-like"
    if unit in CONSONANT_LIKE:
        return "consonant-like"
    return "other"


class UnknownCharacter(ValueError):
    """Raised when tokenization hits a character outside the alphabet."""

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(
            "unknown character %r at position %d in %r" % (text[position], position, text)
        )


# Takahashi writes some glyph variants with a plain quill stroke; these are
# rewritten to the canonical unit before tokenization.
DEFAULT_NORMALIZATION = (
    ("cs", "sh"),
    ("ikh", "ckh"),
    ("ith", "cth"),
    ("iph", "cph"),
    ("ifh", "cfh"),
)


def normalize(s: str, table=DEFAULT_NORMALIZATION) -> str:
    """Apply the transcription-variant map. Unknown sequences pass through."""
    for src, dst in table:
        if src in s:
            s = s.replace(src, dst)
    return s


def tokenize(s: str, norm=DEFAULT_NORMALIZATION) -> GlyphGroup:
    """Split a transliteration string into units, longest match first."""
    if norm is not None:
        s = normalize(s, norm)
    if not s:
        raise ValueError("cannot tokenize an empty string")
    units = []
    i = 0
    n = len(s)
    while i < n:
        chunk3 = s[i : i + 3]
        if chunk3 in PEDESTAL_UNITS:
            units.append(chunk3)
            i += 3
            continue
        chunk2 = s[i : i + 2]
        if chunk2 in DIGRAPH_UNITS:
            units.append(chunk2)
            i += 2
            continue
        c = s[i]
        if c in UNIT_SET:
            units.append(c)
            i += 1
            continue
        raise UnknownCharacter(s, i)
    return tuple(units)


def render(units: GlyphGroup) -> str:
    return "".join(units)


@dataclass(frozen=True)
class SimilarityRelation:
    """Disjoint similar-glyph classes plus cluster rewrite rules.

    Cluster rules are unordered pairs of unit sequences that the strict edit
    distance may exchange at cost one (ee <-> e and the ch <-> pedestal family).
    """

    classes: tuple = ()
    cluster_rules: tuple = ()
    _class_of: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        seen = {}
        for cls in self.classes:
            for unit in cls:
                if unit in seen:
                    raise ValueError("unit %r appears in two similarity classes" % unit)
                seen[unit] = cls
        object.__setattr__(self, "_class_of", seen)

    def similar(self, a: str, b: str) -> bool:
        if a == b:
            return True
        cls = self._class_of.get(a)
        return cls is not None and b in cls


def similar(a: str, b: str, rel: "SimilarityRelation") -> bool:
    return rel.similar(a, b)


DEFAULT_CLASSES = (
    frozenset({"o", "a"}),
    frozenset({"k", "t", "p", "f"}),
    frozenset({"ch", "sh"}),
    frozenset({"n", "r", "l", "m", "s"}),
    frozenset({"cth", "ckh", "cph", "cfh"}),
)

DEFAULT_CLUSTER_RULES = (
    (("e", "e"), ("e",)),
    (("ch",), ("cth",)),
    (("ch",), ("ckh",)),
    (("ch",), ("cph",)),
    (("ch",), ("cfh",)),
)

DEFAULT_RELATION = SimilarityRelation(DEFAULT_CLASSES, DEFAULT_CLUSTER_RULES)


def load_glyph_config(path) -> tuple:
    """Read similarity classes, cluster rules and the normalization map.

    Format: one directive per line; `class u1 u2 ...`, `cluster seq1 seq2`,
    `norm raw canonical`; `#` starts a comment.
    Returns (SimilarityRelation, normalization table).
    """
    classes = []
    clusters = []
    norm = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            kind, args = parts[0], parts[1:]
            if kind == "class":
                bad = [u for u in args if u not in UNIT_SET]
                if bad:
                    raise ValueError("line %d: unknown units %s" % (lineno, bad))
                classes.append(frozenset(args))
            elif kind == "cluster":
                if len(args) != 2:
                    raise ValueError("line %d: cluster needs two sequences" % lineno)
                clusters.append((tokenize(args[0], norm=None), tokenize(args[1], norm=None)))
            elif kind == "norm":
                if len(args) != 2:
                    raise ValueError("line %d: norm needs two strings" % lineno)
                norm.append((args[0], args[1]))
            else:
                raise ValueError("line %d: unknown directive %r" % (lineno, kind))
    rel = SimilarityRelation(tuple(classes), tuple(clusters))
    return rel, tuple(norm)

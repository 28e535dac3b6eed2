"""Corpus statistics: repetition structure, positional tables, length
distributions, Currier splits and the comparison profile.

All operations are pure reads over an immutable corpus.  Words are unit
tuples; report rows render them back to strings.
"""

from __future__ import annotations

import math
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .editdist import SIMPLE, STRICT, edit_distance, is_subgroup, prefix_diff
from .glyphs import GALLOWS, PEDESTAL_UNITS, render
from .transcript import Corpus, text_lines


class EmptySample(ValueError):
    pass


class DegenerateVariance(ValueError):
    pass


GALLOW_FAMILY = frozenset(GALLOWS) | frozenset(PEDESTAL_UNITS)


def has_gallow(w) -> bool:
    return any(u in GALLOW_FAMILY for u in w)


def gallow_initial(w) -> bool:
    return w[0] in GALLOW_FAMILY


# ---------------------------------------------------------------------------
# word frequencies


def word_frequencies(corpus: Corpus, include_labels=False):
    """Ranked (word, count) list over text-loci words, count desc then lexicographic."""
    counts = Counter(render(w) for w in corpus.word_tokens(include_labels=include_labels))
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))


# ---------------------------------------------------------------------------
# repeated word sequences


@dataclass
class SequenceReport:
    words: tuple  # canonical (sorted) member words, rendered
    size: int
    occurrences: list  # (locus text, start position)
    uniform_order: bool
    has_repeated_word: bool
    has_similar_pair: bool

    @property
    def count(self):
        return len(self.occurrences)


def repeated_sequences(corpus: Corpus, min_len: int, min_occ: int):
    """Maximal word n-gram multisets repeated as contiguous in-line runs.

    A multiset is reported when it spans at least `min_len` words, occurs at
    least `min_occ` times, and is not wholly covered by occurrences of longer
    qualifying multisets.  Word order may differ between occurrences; the
    uniform flag records whether it ever does.
    """
    if min_len < 2 or min_occ < 2:
        raise ValueError("min_len and min_occ must be at least 2")
    lines = text_lines(corpus)
    occs = defaultdict(list)  # key -> [(line idx, start, order tuple, locus)]
    for li, tl in enumerate(lines):
        words = [render(w) for w in tl.words]
        n_words = len(words)
        for n in range(min_len, n_words + 1):
            for start in range(0, n_words - n + 1):
                run = tuple(words[start : start + n])
                occs[tuple(sorted(run))].append((li, start, run, tl.locus.text()))
    qualifying = {k: v for k, v in occs.items() if len(v) >= min_occ}
    # coverage test against longer qualifying runs
    spans = defaultdict(list)  # line idx -> [(start, end)] of longer qualifying runs
    by_size = defaultdict(list)
    for k, v in qualifying.items():
        by_size[len(k)].append((k, v))
    reports = []
    for size in sorted(by_size, reverse=True):
        for key, occurrences in by_size[size]:
            covered = all(
                any(s <= start and start + size <= e for s, e in spans[li])
                for li, start, _run, _loc in occurrences
            )
            if covered:
                continue
            orders = {run for _li, _st, run, _loc in occurrences}
            members = list(key)
            has_rep = len(set(members)) < len(members)
            has_sim = _has_similar_pair(members)
            reports.append(
                SequenceReport(
                    words=key,
                    size=size,
                    occurrences=[(loc, st) for _li, st, _run, loc in occurrences],
                    uniform_order=len(orders) == 1,
                    has_repeated_word=has_rep,
                    has_similar_pair=has_sim,
                )
            )
        # only now do this size's occurrences start covering shorter runs
        for key, occurrences in by_size[size]:
            for li, start, _run, _loc in occurrences:
                spans[li].append((start, start + size))
    reports.sort(key=lambda r: (-r.count, -r.size, r.words))
    return reports


def _has_similar_pair(members) -> bool:
    from .glyphs import tokenize

    units = [tokenize(m) for m in set(members)]
    for i in range(len(units)):
        for j in range(i + 1, len(units)):
            if edit_distance(units[i], units[j], SIMPLE) == 1:
                return True
    return False


# ---------------------------------------------------------------------------
# window profile (repeated / similar words in previous lines)


def ed1_neighbor_graph(words):
    """Map each distinct word to the set of words at simple edit distance one.

    Uses deletion hashing: same-length words sharing a positional deletion
    differ by one substitution; a word equal to a deletion of another is one
    indel away.
    """
    words = list(words)
    index = {w: i for i, w in enumerate(words)}
    neighbors = [set() for _ in words]
    subst_buckets = defaultdict(list)
    for i, w in enumerate(words):
        for pos in range(len(w)):
            reduced = w[:pos] + w[pos + 1 :]
            subst_buckets[(pos, reduced)].append(i)
            j = index.get(reduced)
            if j is not None:
                neighbors[i].add(j)
                neighbors[j].add(i)
    for bucket in subst_buckets.values():
        if len(bucket) > 1:
            for a in range(len(bucket)):
                for b in range(a + 1, len(bucket)):
                    i, j = bucket[a], bucket[b]
                    if i != j:
                        neighbors[i].add(j)
                        neighbors[j].add(i)
    return {w: frozenset(words[j] for j in neighbors[i]) for i, w in enumerate(words)}


@dataclass
class WindowRow:
    offset: int
    matches: int
    compared: int

    @property
    def percentage(self):
        return 100.0 * self.matches / self.compared if self.compared else 0.0


@dataclass
class WindowProfile:
    mode: str
    rows: list

    def percentage(self, offset):
        return self.rows[offset].percentage


def window_profile(corpus: Corpus, depth: int, mode="exactRepeat", include_labels=False):
    """Share of words repeating within the same line and each of the previous
    `depth` lines, the whole book as one line sequence.

    Single-unit words are left out entirely.  A word occurring k times in the
    probe line counts k times; multiple partners in the earlier line still
    count once.  mode=similarED1 accepts partners at simple edit distance <= 1.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if mode not in ("exactRepeat", "similarED1"):
        raise ValueError("mode must be exactRepeat or similarED1")
    lines = text_lines(corpus, labels_as_one_line=include_labels)
    line_words = []  # Counter of multi-unit words per line
    for tl in lines:
        line_words.append(Counter(w for w in tl.words if len(w) > 1))
    neighbor = None
    if mode == "similarED1":
        distinct = set()
        for c in line_words:
            distinct.update(c)
        neighbor = ed1_neighbor_graph(distinct)
    token_totals = [sum(c.values()) for c in line_words]
    n_lines = len(lines)
    rows = []
    for d in range(depth + 1):
        matches = 0
        compared = 0
        for i in range(d, n_lines):
            cur = line_words[i]
            if not cur:
                continue
            compared += token_totals[i]
            if d == 0:
                for w, k in cur.items():
                    if k >= 2:
                        matches += k
                    elif neighbor is not None and _similar_in(w, cur, neighbor, skip_self=True):
                        matches += k
            else:
                prev = line_words[i - d]
                if not prev:
                    continue
                for w, k in cur.items():
                    if w in prev:
                        matches += k
                    elif neighbor is not None and _similar_in(w, prev, neighbor):
                        matches += k
        rows.append(WindowRow(d, matches, compared))
    return WindowProfile(mode, rows)


def _similar_in(w, counter, neighbor, skip_self=False):
    for v in neighbor.get(w, ()):
        if skip_self and v == w:
            continue
        if v in counter:
            return True
    return False


# ---------------------------------------------------------------------------
# the three word series


def series_classify(w) -> str:
    """daiinSeries, olSeries, chedySeries or unclassified, from the end units.

    Rule order is fixed: the i-coda test runs before the plain l/r/m/s test so
    words like dail stay with the daiin family.
    """
    last = w[-1]
    if last == "n" or (len(w) >= 2 and w[-2] == "i" and last in ("n", "r", "m", "s", "l")):
        return "daiinSeries"
    if last == "y":
        return "chedySeries"
    if last in ("l", "r", "m", "s"):
        return "olSeries"
    return "unclassified"


SERIES_NAMES = ("daiinSeries", "olSeries", "chedySeries", "unclassified")


def series_proportions(corpus: Corpus):
    """Per-page token-weighted series shares, in manuscript order."""
    rows = []
    for page in corpus.pages:
        counts = Counter()
        total = 0
        for line in page.lines:
            if corpus.kinds.classify(line.locus.kind) != "text":
                continue
            for w in line.words:
                counts[series_classify(w)] += 1
                total += 1
        if total == 0:
            continue
        rows.append(
            {
                "page": page.id,
                "section": page.section,
                "currier": page.currier,
                "tokens": total,
                **{name: 100.0 * counts[name] / total for name in SERIES_NAMES},
            }
        )
    return rows


def series_totals(corpus: Corpus):
    counts = Counter(series_classify(w) for w in corpus.word_tokens())
    return counts


# ---------------------------------------------------------------------------
# neighborhood evidence for rare words


@dataclass
class EvidenceWord:
    word: str
    occurrences: list  # locus texts
    near_similar: int
    adjacent: int


@dataclass
class EvidenceReport:
    occurrence: int
    line_radius: int
    max_ed: int
    words: list
    consecutive_sheet_pairs: int
    same_leaf_pairs: int

    @property
    def sample_size(self):
        return len(self.words)

    @property
    def total_cases(self):
        return sum(len(w.occurrences) for w in self.words)

    @property
    def near_similar_cases(self):
        return sum(w.near_similar for w in self.words)

    @property
    def adjacent_cases(self):
        return sum(w.adjacent for w in self.words)


_FOLIO_RE = re.compile(r"^f(\d+)([rv])(\d*)$")


def _folio(page_id):
    m = _FOLIO_RE.match(page_id)
    if not m:
        return None
    return int(m.group(1)), m.group(2)


def neighborhood_evidence(corpus: Corpus, occurrence: int, line_radius=3, max_ed=3):
    """Do words of a given rarity have similar words close by?

    The sample is every word occurring exactly `occurrence` times that is not
    a contiguous part of any other corpus word; labels near each other count
    as one line.  For each occurrence the report records whether a distinct
    word within strict edit distance `max_ed` appears within `line_radius`
    lines, and whether one sits directly adjacent (same line, next position)
    or anywhere in the line directly above or below.
    """
    if occurrence < 2:
        raise ValueError("occurrence must be >= 2")
    lines = text_lines(corpus, labels_as_one_line=True)
    freq = Counter()
    positions = defaultdict(list)  # word -> [(line idx, pos)]
    for li, tl in enumerate(lines):
        for pos, w in enumerate(tl.words):
            freq[w] += 1
            positions[w].append((li, pos))
    candidates = sorted((w for w, k in freq.items() if k == occurrence), key=render)
    distinct = list(freq)
    sample = []
    for w in candidates:
        if any(v != w and is_subgroup(w, v) for v in distinct):
            continue
        sample.append(w)
    if not sample:
        raise EmptySample("no words occur exactly %d times outside larger words" % occurrence)

    words_out = []
    consecutive_pairs_n = 0
    same_leaf_pairs_n = 0
    for w in sample:
        near_n = 0
        adj_n = 0
        occ_loci = []
        for li, pos in positions[w]:
            occ_loci.append(lines[li].locus.text())
            near = False
            adjacent = False
            lo = max(0, li - line_radius)
            hi = min(len(lines) - 1, li + line_radius)
            for lj in range(lo, hi + 1):
                for pj, v in enumerate(lines[lj].words):
                    if v == w:
                        continue
                    if abs(len(v) - len(w)) > max_ed:
                        continue
                    if edit_distance(v, w, STRICT) <= max_ed:
                        near = True
                        if (lj == li and abs(pj - pos) == 1) or abs(lj - li) == 1:
                            adjacent = True
                            break
                if adjacent:
                    break
            if near:
                near_n += 1
            if adjacent:
                adj_n += 1
        pages = [lines[li].page_id for li, _pos in positions[w]]
        folios = [f for f in (_folio(p) for p in set(pages)) if f]
        nums = sorted({n for n, _side in folios})
        consecutive_pairs_n += sum(1 for a, b in zip(nums, nums[1:]) if b == a + 1)
        by_num = defaultdict(set)
        for n, side in folios:
            by_num[n].add(side)
        same_leaf_pairs_n += sum(1 for sides in by_num.values() if len(sides) == 2)
        words_out.append(EvidenceWord(render(w), occ_loci, near_n, adj_n))
    return EvidenceReport(
        occurrence, line_radius, max_ed, words_out, consecutive_pairs_n, same_leaf_pairs_n
    )


# ---------------------------------------------------------------------------
# consecutive similar glyph groups


@dataclass
class PairClassStats:
    equal: int = 0
    next_part_of_prev: int = 0
    prev_part_of_next: int = 0
    compared: int = 0
    len_lt: int = 0  # len(first) < len(next)
    len_eq: int = 0
    len_gt: int = 0


@dataclass
class ConsecutivePairStats:
    first_pair: PairClassStats
    later_pairs: PairClassStats
    # class name -> histogram of first/second group lengths
    first_length_hist: dict
    second_length_hist: dict
    avg_lengths: dict  # class name -> (avg first, avg second)
    prefix_removed: dict  # position bucket -> Counter of removed prefixes
    prefix_added: dict


PAIR_CLASSES = ("prev_part_of_next", "equal", "next_part_of_prev")


def consecutive_pairs(corpus: Corpus) -> ConsecutivePairStats:
    first = PairClassStats()
    later = PairClassStats()
    first_hist = {c: Counter() for c in PAIR_CLASSES}
    second_hist = {c: Counter() for c in PAIR_CLASSES}
    sums = {c: [0, 0, 0] for c in PAIR_CLASSES}  # sum first len, sum second len, n
    removed = {"n1": Counter(), "rest": Counter()}
    added = {"n1": Counter(), "rest": Counter()}
    for tl in text_lines(corpus):
        for i in range(len(tl.words) - 1):
            a, b = tl.words[i], tl.words[i + 1]
            stats = first if i == 0 else later
            bucket = "n1" if i == 0 else "rest"
            stats.compared += 1
            if len(a) < len(b):
                stats.len_lt += 1
            elif len(a) == len(b):
                stats.len_eq += 1
            else:
                stats.len_gt += 1
            if a == b:
                cls = "equal"
                stats.equal += 1
            elif is_subgroup(b, a):
                cls = "next_part_of_prev"
                stats.next_part_of_prev += 1
                cut = prefix_diff(a, b)
                if cut is not None:
                    removed[bucket][render(cut)] += 1
            elif is_subgroup(a, b):
                cls = "prev_part_of_next"
                stats.prev_part_of_next += 1
                cut = prefix_diff(b, a)
                if cut is not None:
                    added[bucket][render(cut)] += 1
            else:
                continue
            first_hist[cls][len(a)] += 1
            second_hist[cls][len(b)] += 1
            sums[cls][0] += len(a)
            sums[cls][1] += len(b)
            sums[cls][2] += 1
    avgs = {}
    for cls, (sa, sb, n) in sums.items():
        avgs[cls] = (sa / n if n else 0.0, sb / n if n else 0.0)
    return ConsecutivePairStats(first, later, first_hist, second_hist, avgs, removed, added)


# ---------------------------------------------------------------------------
# positional statistics


@dataclass
class PositionProfile:
    pattern: str
    counts: dict  # (position, currier) -> count

    POSITIONS = ("paragraphInitial", "lineBeginning", "lineMiddle", "lineEnd")

    def by_position(self, position):
        return sum(v for (pos, _cur), v in self.counts.items() if pos == position)

    def by_currier(self, currier):
        return sum(v for (_pos, cur), v in self.counts.items() if cur == currier)

    @property
    def total(self):
        return sum(self.counts.values())


def make_pattern(literal=None, initial=None, final=None, contains=None):
    """Build a word predicate: a literal word, an initial-unit class, a
    final-unit class, or a contained unit sequence (e.g. od / ed)."""
    from .glyphs import tokenize

    picked = [x for x in (literal, initial, final, contains) if x is not None]
    if len(picked) != 1:
        raise ValueError("exactly one of literal/initial/final/contains")
    if literal is not None:
        target = tokenize(literal)
        return ("literal:%s" % literal), lambda w: w == target
    if initial is not None:
        if initial == "gallow":
            return "initial:gallow", gallow_initial
        units = frozenset(initial.split(","))
        return ("initial:%s" % initial), lambda w: w[0] in units
    if final is not None:
        units = frozenset(final.split(","))
        return ("final:%s" % final), lambda w: w[-1] in units
    needle = tokenize(contains)
    n = len(needle)

    def pred(w, needle=needle, n=n):
        return any(w[i : i + n] == needle for i in range(len(w) - n + 1))

    return ("contains:%s" % contains), pred


def position_profile(corpus: Corpus, pattern) -> PositionProfile:
    """Occurrence counts by line position and Currier language.

    `pattern` is a (name, predicate) pair from make_pattern.  Positions are
    disjoint: the first word of a paragraph counts only as paragraphInitial.
    """
    name, pred = pattern
    counts = Counter()
    for tl in text_lines(corpus):
        n = len(tl.words)
        for pos, w in enumerate(tl.words):
            if not pred(w):
                continue
            if pos == 0 and tl.is_paragraph_start:
                bucket = "paragraphInitial"
            elif pos == 0:
                bucket = "lineBeginning"
            elif pos == n - 1:
                bucket = "lineEnd"
            else:
                bucket = "lineMiddle"
            counts[(bucket, tl.currier)] += 1
    return PositionProfile(name, dict(counts))


# ---------------------------------------------------------------------------
# gallow context


BEFORE_BUCKETS = ("space", "o", "y", "d", "l", "e", "s", "other")
AFTER_BUCKETS = ("a", "o", "y", "e", "s", "ch", "sh", "other")


@dataclass
class GallowContext:
    before: dict  # (bucket, gallow) -> count
    after: dict

    def total(self, gallow, which="before"):
        table = self.before if which == "before" else self.after
        return sum(v for (_b, g), v in table.items() if g == gallow)


def gallow_context(corpus: Corpus) -> GallowContext:
    """Distribution of the units before and after each plain gallow glyph."""
    before = Counter()
    after = Counter()
    for w in corpus.word_tokens():
        for i, u in enumerate(w):
            if u not in GALLOWS:
                continue
            prev = w[i - 1] if i > 0 else "space"
            nxt = w[i + 1] if i + 1 < len(w) else "end"
            bb = prev if prev in BEFORE_BUCKETS else "other"
            ab = nxt if nxt in AFTER_BUCKETS else "other"
            before[(bb, u)] += 1
            after[(ab, u)] += 1
    return GallowContext(dict(before), dict(after))


# ---------------------------------------------------------------------------
# length distributions over paragraph lines


@dataclass
class LengthReport:
    scope: str
    currier: str  # A, B or "all"
    histogram: dict  # length -> count
    mean: float
    gallow_mean: float
    plain_mean: float
    mean_words_per_line: float
    tokens: int


def length_distribution(corpus: Corpus, scope="all", currier=None) -> LengthReport:
    """Unit-length histogram and mean for a slice of the paragraph lines.

    scope: paragraphLine1, paragraphLine2 or all; currier None means no split.
    Also reports gallow-bearing vs gallow-free means and words per line.
    """
    if scope not in ("paragraphLine1", "paragraphLine2", "all"):
        raise ValueError("scope must be paragraphLine1, paragraphLine2 or all")
    want_index = {"paragraphLine1": 1, "paragraphLine2": 2}.get(scope)
    hist = Counter()
    total_units = 0
    n_tokens = 0
    gallow_units = gallow_tokens = 0
    plain_units = plain_tokens = 0
    n_lines = 0
    for tl in text_lines(corpus):
        if tl.paragraph_line_index == 0:
            continue
        if want_index is not None and tl.paragraph_line_index != want_index:
            continue
        if currier is not None and tl.currier != currier:
            continue
        n_lines += 1
        for w in tl.words:
            hist[len(w)] += 1
            total_units += len(w)
            n_tokens += 1
            if has_gallow(w):
                gallow_units += len(w)
                gallow_tokens += 1
            else:
                plain_units += len(w)
                plain_tokens += 1
    return LengthReport(
        scope,
        currier or "all",
        dict(hist),
        total_units / n_tokens if n_tokens else 0.0,
        gallow_units / gallow_tokens if gallow_tokens else 0.0,
        plain_units / plain_tokens if plain_tokens else 0.0,
        n_tokens / n_lines if n_lines else 0.0,
        n_tokens,
    )


def gallows_by_paragraph_line(corpus: Corpus):
    """Per paragraph-line index: total and gallow-bearing group counts by Currier."""
    rows = defaultdict(lambda: Counter())
    for tl in text_lines(corpus):
        k = tl.paragraph_line_index
        if k == 0:
            continue
        cur = tl.currier
        for w in tl.words:
            rows[k]["total_all"] += 1
            rows[k]["total_%s" % cur] += 1
            if has_gallow(w):
                rows[k]["gallow_all"] += 1
                rows[k]["gallow_%s" % cur] += 1
    return [
        {"line": k, **{key: rows[k][key] for key in sorted(rows[k])}} for k in sorted(rows)
    ]


# ---------------------------------------------------------------------------
# page frequency correlation


def _pearson(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    if sxx == 0 or syy == 0:
        raise DegenerateVariance("constant series")
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / math.sqrt(sxx * syy)


def page_frequency_correlation(corpus: Corpus, w1: str, w2: str):
    """Pearson correlation of the two words' per-page frequencies (normalized
    by page length) plus each word's raw-count correlation with page length."""
    from .glyphs import tokenize

    t1, t2 = tokenize(w1), tokenize(w2)
    c1, c2, lens = [], [], []
    for page in corpus.pages:
        n = k1 = k2 = 0
        for line in page.lines:
            if corpus.kinds.classify(line.locus.kind) != "text":
                continue
            for w in line.words:
                n += 1
                if w == t1:
                    k1 += 1
                if w == t2:
                    k2 += 1
        if n:
            c1.append(k1)
            c2.append(k2)
            lens.append(n)
    if sum(c1) == 0 or sum(c2) == 0:
        raise ValueError("both words must occur in the corpus")
    if w1 == w2:
        r_pair = 1.0
    else:
        r_pair = _pearson(
            [k / n for k, n in zip(c1, lens)], [k / n for k, n in zip(c2, lens)]
        )
    return {
        "r_pair": r_pair,
        "r1_length": _pearson(c1, lens),
        "r2_length": _pearson(c2, lens),
        "pages": len(lens),
    }


# ---------------------------------------------------------------------------
# q after y


def q_after_y_rate(corpus: Corpus):
    """Share of y-final groups overall and before q-initial groups."""
    tokens = 0
    y_final = 0
    q_with_pred = 0
    q_after_y = 0
    for tl in text_lines(corpus):
        prev = None
        for w in tl.words:
            tokens += 1
            if w[-1] == "y":
                y_final += 1
            if w[0] == "q" and prev is not None:
                q_with_pred += 1
                if prev[-1] == "y":
                    q_after_y += 1
            prev = w
    return {
        "y_final_share": 100.0 * y_final / tokens if tokens else 0.0,
        "q_after_y_share": 100.0 * q_after_y / q_with_pred if q_with_pred else None,
        "tokens": tokens,
        "q_with_predecessor": q_with_pred,
    }


# ---------------------------------------------------------------------------
# shared words across sections


def shared_words_across_sections(corpus: Corpus, s1: str, s2: str, loci="label"):
    """Words used in both sections' label loci (or text loci with loci="text").

    With s1 == s2, reports every word used at least twice in that section.
    """
    where = defaultdict(lambda: defaultdict(list))  # word -> section -> loci
    for page in corpus.pages:
        for line in page.lines:
            if corpus.kinds.classify(line.locus.kind) != loci:
                continue
            for w in line.words:
                where[render(w)][page.section].append(line.locus.text())
    rows = []
    for word in sorted(where):
        if s1 == s2:
            if len(where[word].get(s1, ())) >= 2:
                rows.append({"word": word, "loci": where[word][s1]})
        elif where[word].get(s1) and where[word].get(s2):
            rows.append(
                {"word": word, "loci": where[word][s1] + where[word][s2]}
            )
    return rows


# ---------------------------------------------------------------------------
# stat profile and comparison


@dataclass
class StatProfile:
    metrics: dict
    window_exact: list  # percentages by offset
    window_similar: list
    length_histogram: dict

    def metric(self, name):
        return self.metrics[name]


def build_profile(corpus: Corpus, depth=20) -> StatProfile:
    """The statistical fingerprint used for real-vs-generated comparison."""
    exact = window_profile(corpus, depth, "exactRepeat")
    sim = window_profile(corpus, depth, "similarED1")
    pe = [r.percentage for r in exact.rows]
    ps = [r.percentage for r in sim.rows]
    lengths = length_distribution(corpus, "all")
    pairs = consecutive_pairs(corpus)
    series = series_totals(corpus)
    total_series = sum(series.values()) or 1
    qy = q_after_y_rate(corpus)

    para_total = gallow_para = 0
    gallow_words = all_words = 0
    for tl in text_lines(corpus):
        for pos, w in enumerate(tl.words):
            all_words += 1
            if has_gallow(w):
                gallow_words += 1
            if pos == 0 and tl.is_paragraph_start:
                para_total += 1
                if gallow_initial(w):
                    gallow_para += 1

    def decay(ps):
        if len(ps) < 11:
            return 0.0
        return (ps[1] + ps[2] + ps[3]) / 3 - (ps[8] + ps[9] + ps[10]) / 3

    metrics = {
        "win_exact_p0": pe[0],
        "win_exact_p10": pe[10] if len(pe) > 10 else 0.0,
        "win_exact_decay": decay(pe),
        "win_sim_p0": ps[0],
        "win_sim_p10": ps[10] if len(ps) > 10 else 0.0,
        "win_sim_decay": decay(ps),
        "length_mean": lengths.mean,
        "words_per_line": lengths.mean_words_per_line,
        "series_daiin": series["daiinSeries"] / total_series,
        "series_ol": series["olSeries"] / total_series,
        "series_chedy": series["chedySeries"] / total_series,
        "pairs_next_rate_n1": 100.0
        * pairs.first_pair.next_part_of_prev
        / max(pairs.first_pair.compared, 1),
        "pairs_next_rate_rest": 100.0
        * pairs.later_pairs.next_part_of_prev
        / max(pairs.later_pairs.compared, 1),
        "gallow_para_initial_share": 100.0 * gallow_para / max(para_total, 1),
        "gallow_word_share": 100.0 * gallow_words / max(all_words, 1),
        "y_final_share": qy["y_final_share"],
        "q_after_y_share": qy["q_after_y_share"] or 0.0,
    }
    return StatProfile(metrics, pe, ps, lengths.histogram)


def compare_profiles(p1: StatProfile, p2: StatProfile):
    """Per-metric relative differences |a-b|/max plus their mean as summary."""
    rows = []
    for name in p1.metrics:
        a, b = p1.metrics[name], p2.metrics[name]
        denom = max(abs(a), abs(b), 1e-9)
        rows.append({"metric": name, "a": a, "b": b, "rel_diff": abs(a - b) / denom})
    summary = sum(r["rel_diff"] for r in rows) / len(rows)
    return {"rows": rows, "summary": summary}


def unimodal(histogram: dict, tolerance=0) -> bool:
    """True when the histogram rises to a single peak then falls.

    `tolerance` allows dips of at most that many counts (transcription noise).
    """
    lengths = sorted(histogram)
    values = [histogram[k] for k in lengths]
    peak = values.index(max(values))
    ok_up = all(values[i] <= values[i + 1] + tolerance for i in range(peak))
    ok_down = all(values[i] >= values[i + 1] - tolerance for i in range(peak, len(values) - 1))
    return ok_up and ok_down

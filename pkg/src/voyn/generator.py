"""Self-citation text generation.

New words are produced by copying an already written word and modifying it
with one of the rules below; sources are drawn from the writer's sight
field (recent lines, same column, line edges, the previous sheet).

  I    replace one or two units with similar ones not already in the group
  II   insert units, respecting the prefix grammar
  III  delete one or two units
  IV   concatenate two source groups
  V    split a group into two words
  VI   duplicate the group or a short subgroup in place
  VII  copy unchanged
  VIII prepend a gallow (paragraph-initial decoration)
  IX   chain up to two of the above
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from . import glyphs
from .glyphs import DEFAULT_RELATION, GALLOWS, SimilarityRelation, render
from .transcript import Corpus, Line, Locus, Page, _detect_paragraphs

RULES = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX")


class RuleInapplicable(ValueError):
    pass


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    rule_weights: tuple = (
        ("I", 0.30),
        ("II", 0.18),
        ("III", 0.14),
        ("IV", 0.05),
        ("V", 0.04),
        ("VI", 0.03),
        ("VII", 0.18),
        ("VIII", 0.0),
        ("IX", 0.08),
    )
    same_column_weight: float = 3.0
    recent_line_window: int = 3
    line_edge_weight: float = 3.0
    previous_sheet_weight: float = 4.0
    label_penalty: float = 0.25
    novelty_rate: float = 0.10
    line_width_mean: float = 47.0  # units per line
    line_width_sd: float = 6.0
    line_width_tolerance: int = 3
    paragraph_lines: tuple = ((2, 2), (3, 3), (4, 4), (5, 4), (6, 3), (7, 2), (8, 2), (10, 1), (12, 1))
    paragraphs_per_page: tuple = ((1, 2), (2, 4), (3, 3))
    currier_style: str = "B"
    rng_seed: int = 0
    pages: int = 50
    max_edit_budget: int = 2
    rule9_max_chain: int = 2
    gallow_decoration_rate: float = 0.86
    q_after_y_bias: float = 0.75
    invert_rules: bool = False
    seed_lexicon: tuple = ("daiin", "ol", "chedy", "chol", "dar", "qokeedy")

    def weights_map(self):
        return dict(self.rule_weights)

    def validate(self):
        w = self.weights_map()
        if any(v < 0 for v in w.values()) or sum(w.values()) <= 0:
            raise ConfigError("rule weights must be non-negative with a positive sum")
        if self.recent_line_window < 1:
            raise ConfigError("recent_line_window must be >= 1")
        if not self.seed_lexicon:
            raise ConfigError("seed lexicon is empty")


def load_generator_config(path, **overrides) -> GeneratorConfig:
    """Config file: `key value` lines, # comments; unknown keys rejected.

    rule_weights is written as `weight_I 0.3` etc.; list-valued models as
    `paragraph_lines 2:2 3:3 ...`.
    """
    cfg = GeneratorConfig()
    weights = dict(cfg.rule_weights)
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, val = line.partition(" ")
            val = val.strip()
            if key.startswith("weight_"):
                rule = key[len("weight_") :]
                if rule not in RULES:
                    raise ConfigError("line %d: unknown rule %r" % (lineno, rule))
                weights[rule] = float(val)
            elif key in ("paragraph_lines", "paragraphs_per_page"):
                pairs = []
                for item in val.split():
                    a, _, b = item.partition(":")
                    pairs.append((int(a), float(b)))
                values[key] = tuple(pairs)
            elif key == "seed_lexicon":
                values[key] = tuple(val.split())
            elif key in ("recent_line_window", "rng_seed", "pages", "max_edit_budget",
                         "rule9_max_chain", "line_width_tolerance"):
                values[key] = int(val)
            elif key == "currier_style":
                values[key] = val
            elif key == "invert_rules":
                values[key] = val.lower() in ("1", "true", "yes")
            elif hasattr(cfg, key):
                values[key] = float(val)
            else:
                raise ConfigError("line %d: unknown key %r" % (lineno, key))
    values["rule_weights"] = tuple(sorted(weights.items()))
    values.update(overrides)
    out = replace(cfg, **values)
    out.validate()
    return out


@dataclass
class RuleApplication:
    locus: str
    word_index: int
    rule: str
    source_locus: str
    source_index: int
    source_word: str
    result: str
    edits: str


# ---------------------------------------------------------------------------
# the modification rules


PREFIXES = (
    ("q",),
    ("o",),
    ("y",),
    ("d",),
    ("s",),
    ("l",),
    ("ch",),
    ("sh",),
    ("o", "k"),
    ("o", "t"),
    ("q", "o"),
)


def _insertion_options(w):
    opts = []
    if w[0] != "q":  # no prefix is ever added in front of q
        for pre in PREFIXES:
            if pre == ("q",) and w[0] != "o":
                continue  # q only arises before o
            if w[: len(pre)] == pre:
                continue  # no prefix is added twice
            opts.append(("prefix", pre))
    for i, u in enumerate(w):
        if u == "e":
            opts.append(("insert", i + 1, "e"))
        if u in GALLOWS and (i + 1 == len(w) or w[i + 1] != "e"):
            opts.append(("insert", i + 1, "e"))
        if u == "i" and i + 1 < len(w) and w[i + 1] in ("n", "r", "m", "s", "l"):
            opts.append(("insert", i + 1, "i"))
    if w[-1] in ("d", "k", "t", "e", "o", "l"):
        opts.append(("suffix", ("y",)))
    if w[-1] == "i":
        opts.append(("suffix", ("n",)))
    if w[-1] in ("e", "o"):
        opts.append(("suffix", ("d", "y")))
    return opts


def _insertion_size(opt):
    if opt[0] in ("prefix", "suffix"):
        return len(opt[1])
    return 1


def _apply_insertion(w, opt):
    if opt[0] == "prefix":
        return opt[1] + w
    if opt[0] == "suffix":
        return w + opt[1]
    _, pos, unit = opt
    return w[:pos] + (unit,) + w[pos:]


def apply_rule(rule, sources, rel: SimilarityRelation = DEFAULT_RELATION, rng=None,
               paragraph_initial=False, max_len=13):
    """Apply one rule to 1-2 source words; returns (results, edit description).

    Rules I-III and VI-VIII return one word, IV one, V two.  Raises
    RuleInapplicable when the rule's preconditions fail on these sources.
    """
    rng = rng or random.Random(0)
    need_two = rule == "IV"
    if need_two and len(sources) < 2:
        raise RuleInapplicable("rule IV needs two sources")
    w = sources[0]

    if rule == "I":
        options = []
        present = set(w)
        for i, u in enumerate(w):
            mates = rel._class_of.get(u)
            if not mates:
                continue
            for m in sorted(mates):
                if m != u and m not in present:
                    options.append((i, m))
        if not options:
            raise RuleInapplicable("no similar replacement available")
        n = 2 if len(options) > 1 and rng.random() < 0.2 else 1
        picks = rng.sample(options, n) if n > 1 else [rng.choice(options)]
        picks = {i: m for i, m in picks}
        out = tuple(picks.get(i, u) for i, u in enumerate(w))
        desc = ";".join("%s>%s@%d" % (w[i], m, i) for i, m in sorted(picks.items()))
        return [out], desc

    if rule == "II":
        out = w
        steps = []
        budget = 2  # keeps the strict distance within the edit budget
        want_two = rng.random() < 0.3
        while budget > 0:
            opts = [
                o
                for o in _insertion_options(out)
                if len(out) < max_len and _insertion_size(o) <= budget
            ]
            if not opts:
                break
            opt = rng.choice(opts)
            out = _apply_insertion(out, opt)
            budget -= _insertion_size(opt)
            steps.append("+%s" % (render(opt[1]) if opt[0] != "insert" else opt[2]))
            if not want_two:
                break
        if out == w:
            raise RuleInapplicable("no insertion point")
        return [out], ";".join(steps)

    if rule == "III":
        if len(w) < 2:
            raise RuleInapplicable("nothing to delete")
        n = 2 if len(w) > 3 and rng.random() < 0.3 else 1
        out = list(w)
        removed = []
        for _ in range(n):
            if len(out) < 2:
                break
            r = rng.random()
            if r < 0.4:
                removed.append("-%s@0" % out[0])
                out.pop(0)
            elif r < 0.7:
                removed.append("-%s@$" % out[-1])
                out.pop()
            else:
                i = rng.randrange(len(out))
                removed.append("-%s@%d" % (out[i], i))
                out.pop(i)
        return [tuple(out)], ";".join(removed)

    if rule == "IV":
        a, b = sources[0], sources[1]
        if len(a) + len(b) > max_len:
            raise RuleInapplicable("concatenation too long")
        return [a + b], "%s+%s" % (render(a), render(b))

    if rule == "V":
        if len(w) < 2:
            raise RuleInapplicable("cannot split a single unit")
        i = rng.randrange(1, len(w))
        return [w[:i], w[i:]], "split@%d" % i

    if rule == "VI":
        if len(w) + 1 > max_len:
            raise RuleInapplicable("duplication too long")
        spans = [(i, j) for i in range(len(w)) for j in (i + 1, i + 2) if j <= len(w)]
        spans = [(i, j) for i, j in spans if len(w) + (j - i) <= max_len]
        if not spans:
            raise RuleInapplicable("no duplicable span")
        i, j = rng.choice(spans)
        out = w[:j] + w[i:j] + w[j:]
        return [out], "dup@%d:%d" % (i, j)

    if rule == "VII":
        return [w], ""

    if rule == "VIII":
        if w[0] == "q" or w[0] in GALLOWS:
            raise RuleInapplicable("gallow decoration needs a plain initial")
        pool = ("p", "p", "f", "k", "t") if paragraph_initial else ("k", "t")
        g = rng.choice(pool)
        return [(g,) + w], "+%s@0" % g

    raise RuleInapplicable("unknown rule %r" % rule)


# ---------------------------------------------------------------------------
# source selection


@dataclass
class _Emitted:
    line_no: int  # global line counter
    page_index: int
    sheet: int  # folio number
    locus: Locus
    words: list
    is_label: bool = False


def select_source(state, target, cfg: GeneratorConfig, rng):
    """Pick a source word reference from the already written text.

    `target` carries line_index (global), column_index, is_paragraph_initial,
    is_line_initial, is_line_final, page_index and sheet.  Returns
    (line record, word index).  Weights follow recency, column proximity,
    line-edge affinity, the previous completed sheet, and a label penalty.
    """
    if not state:
        raise RuleInapplicable("no words written yet")
    window = cfg.recent_line_window
    pool = []
    weights = []
    recent = state[-40:] if len(state) > 40 else state
    prev_sheet = None
    if target.get("is_page_initial"):
        want = target["sheet"] - 1
        prev_sheet = [rec for rec in state if rec.sheet == want] or None
    candidates = list(recent)
    if prev_sheet:
        candidates.extend(prev_sheet[:20])
    for rec in candidates:
        dist = target["line_index"] - rec.line_no
        if dist <= 0:
            continue
        base = 1.0 if dist <= window else window / dist
        if rec.is_label:
            base *= cfg.label_penalty
        if prev_sheet and rec.sheet == target["sheet"] - 1:
            base *= cfg.previous_sheet_weight
        n = len(rec.words)
        for col, w in enumerate(rec.words):
            wt = base
            if col == target["column_index"]:
                wt *= cfg.same_column_weight
            if target.get("is_line_initial") and col == 0:
                wt *= cfg.line_edge_weight
            if target.get("is_line_final") and col == n - 1:
                wt *= cfg.line_edge_weight
            pool.append((rec, col))
            weights.append(wt)
    if not pool:
        rec = state[-1]
        return rec, rng.randrange(len(rec.words))
    return pool[rng.choices(range(len(pool)), weights=weights, k=1)[0]]


# ---------------------------------------------------------------------------
# generation


def _sample_pairs(pairs, rng):
    items = [a for a, _ in pairs]
    weights = [b for _, b in pairs]
    return items[rng.choices(range(len(items)), weights=weights, k=1)[0]]


def generate(cfg: GeneratorConfig):
    """Generate a corpus per the config; returns (Corpus, trace records).

    Deterministic for a fixed rng_seed.  Every emitted word carries one
    RuleApplication record.
    """
    cfg.validate()
    rng = random.Random(cfg.rng_seed)
    rel = DEFAULT_RELATION
    weights = cfg.weights_map()
    rule_names = [r for r in RULES if r != "VIII"]
    rule_w = [weights.get(r, 0.0) for r in rule_names]
    if sum(rule_w) <= 0:
        raise ConfigError("no applicable rule has positive weight")
    seeds = [glyphs.tokenize(s) for s in cfg.seed_lexicon]

    state = []
    trace = []
    pages = []
    line_no = 0

    for page_index in range(cfg.pages):
        folio = page_index // 2 + 1
        side = "r" if page_index % 2 == 0 else "v"
        page_id = "f%d%s" % (folio, side)
        page = Page(page_id, cfg.currier_style, "generated")
        n_paras = _sample_pairs(cfg.paragraphs_per_page, rng)
        page_line = 0
        for para in range(n_paras):
            kind = "P" if n_paras == 1 else "P%d" % (para + 1)
            n_lines = _sample_pairs(cfg.paragraph_lines, rng)
            for k in range(n_lines):
                page_line += 1
                locus = Locus(page_id, kind, page_line)
                words, records = _build_line(
                    state,
                    cfg,
                    rng,
                    rel,
                    rule_names,
                    rule_w,
                    seeds,
                    locus,
                    line_no,
                    page_index,
                    folio,
                    paragraph_initial=(k == 0),
                    page_initial=(page_line == 1),
                )
                trace.extend(records)
                page.lines.append(
                    Line(locus, tuple(words), (".",) * (len(words) - 1))
                )
                state.append(_Emitted(line_no, page_index, folio, locus, list(words)))
                line_no += 1
        pages.append(page)
    corpus = Corpus(pages)
    _detect_paragraphs(corpus)
    return corpus, trace


def _make_word(state, cfg, rng, rel, rule_names, rule_w, seeds, target):
    """One copy-modify step; returns (words, rule, source ref, edits)."""
    if not state or (target["is_paragraph_initial_word"] and rng.random() < cfg.novelty_rate):
        w = seeds[rng.randrange(len(seeds))]
        return [w], "seed", None, ""
    rec, col = select_source(state, target, cfg, rng)
    source = rec.words[col]
    budget = cfg.rule9_max_chain
    for _attempt in range(8):
        rule = rule_names[rng.choices(range(len(rule_names)), weights=rule_w, k=1)[0]]
        try:
            if rule == "IX":
                chain = rng.randrange(2, budget + 1) if budget > 1 else 1
                words, descs = [source], []
                for _ in range(chain):
                    sub = rng.choice(("I", "II", "III", "VI"))
                    outs, d = apply_rule(sub, [words[0]], rel, rng)
                    words = outs
                    descs.append("%s:%s" % (sub, d))
                return words, "IX", (rec, col), "|".join(descs)
            if rule == "IV":
                rec2, col2 = select_source(state, target, cfg, rng)
                outs, desc = apply_rule("IV", [source, rec2.words[col2]], rel, rng)
                return outs, rule, (rec, col), desc
            outs, desc = apply_rule(rule, [source], rel, rng)
            return outs, rule, (rec, col), desc
        except RuleInapplicable:
            continue
    return [source], "VII", (rec, col), ""


def _fit_length(w, need, rng, max_len=13):
    """Trim or pad a word toward `need` units (the fill-to-margin edit)."""
    steps = []
    guard = 0
    while len(w) > need and len(w) > 1 and guard < 6:
        i = 0 if rng.random() < 0.5 else len(w) - 1
        steps.append("-%s" % w[i])
        w = w[1:] if i == 0 else w[:-1]
        guard += 1
    while len(w) < need and len(w) < max_len and guard < 12:
        opts = _insertion_options(w)
        if not opts:
            break
        opt = rng.choice(opts)
        w = _apply_insertion(w, opt)
        steps.append("+fit")
        guard += 1
    return w, steps


def _build_line(state, cfg, rng, rel, rule_names, rule_w, seeds, locus, line_no,
                page_index, folio, paragraph_initial, page_initial):
    target_units = max(8, int(round(rng.gauss(cfg.line_width_mean, cfg.line_width_sd))))
    tol = cfg.line_width_tolerance
    words = []
    records = []
    total = 0
    col = 0
    prev = None
    while total < target_units - tol:
        target = {
            "line_index": line_no,
            "column_index": col,
            "is_paragraph_initial": paragraph_initial,
            "is_paragraph_initial_word": paragraph_initial and col == 0,
            "is_line_initial": col == 0,
            "is_line_final": total > target_units - 8,
            "is_page_initial": page_initial and col == 0,
            "page_index": page_index,
            "sheet": folio,
        }
        outs, rule, src, desc = _make_word(state, cfg, rng, rel, rule_names, rule_w, seeds, target)
        stacked = False
        if rule != "V":
            # fn 54 pattern: after a y-final group, prefer a q- prefixed variant
            if (
                prev is not None
                and prev[-1] == "y"
                and outs[0][0] == "o"
                and rng.random() < cfg.q_after_y_bias
            ):
                outs = [("q",) + outs[0]]
                desc = (desc + ";" if desc else "") + "+q@0"
                stacked = True
            if paragraph_initial and col == 0 and rng.random() < cfg.gallow_decoration_rate:
                try:
                    outs2, d2 = apply_rule("VIII", [outs[0]], rel, rng, paragraph_initial=True)
                    if rule == "VII" and not stacked:
                        rule = "VIII"
                    else:
                        stacked = True
                    outs = outs2
                    desc = (desc + ";" if desc else "") + d2
                except RuleInapplicable:
                    pass
        remaining = target_units + tol - total
        emit = []
        for w in outs:
            if rule != "V" and total + len(w) > target_units + tol:
                w, steps = _fit_length(w, max(1, remaining), rng)
                if steps:
                    desc = (desc + ";" if desc else "") + "fit:" + ",".join(steps)
                    stacked = True
            emit.append(w)
            total += len(w)
            remaining = target_units + tol - total
        if stacked and rule not in ("seed",):
            rule = "IX"
        for w in emit:
            if src is None:
                sloc, sidx, sword = "-", -1, ""
            else:
                sloc, sidx, sword = src[0].locus.text(), src[1], render(src[0].words[src[1]])
            records.append(
                RuleApplication(locus.text(), col, rule, sloc, sidx, sword, render(w), desc)
            )
            words.append(w)
            col += 1
            prev = w
        if col > 40:
            break
    return words, records


# ---------------------------------------------------------------------------
# trace export / replay


TRACE_HEADER = ("locus", "word_index", "rule", "source_locus", "source_index",
                "source_word", "result", "edits")


def trace_export(trace) -> str:
    out = ["\t".join(TRACE_HEADER)]
    for r in trace:
        out.append(
            "\t".join(
                (r.locus, str(r.word_index), r.rule, r.source_locus,
                 str(r.source_index), r.source_word, r.result, r.edits)
            )
        )
    return "\n".join(out) + "\n"


def trace_parse(text: str):
    lines = text.splitlines()
    if not lines or lines[0].split("\t") != list(TRACE_HEADER):
        raise ValueError("not a trace file")
    out = []
    for raw in lines[1:]:
        if not raw:
            continue
        loc, idx, rule, sloc, sidx, sword, result, edits = raw.split("\t")
        out.append(RuleApplication(loc, int(idx), rule, sloc, int(sidx), sword, result, edits))
    return out


def replay(trace, currier_style="B") -> Corpus:
    """Rebuild the generated corpus from its audit log."""
    pages = []
    by_id = {}
    current = None
    for r in trace:
        locus = Locus.parse(r.locus)
        page = by_id.get(locus.page)
        if page is None:
            page = Page(locus.page, currier_style, "generated")
            by_id[locus.page] = page
            pages.append(page)
        if current is None or current[0] != locus:
            current = (locus, [])
            page.lines.append(current)
        current[1].append(glyphs.tokenize(r.result))
    for page in pages:
        page.lines = [
            Line(locus, tuple(words), (".",) * (len(words) - 1))
            for locus, words in page.lines
        ]
    corpus = Corpus(pages)
    _detect_paragraphs(corpus)
    return corpus

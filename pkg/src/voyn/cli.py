"""Command-line front end.

Every report is a pure function of the input bytes and flags; TSV output is
one header row plus tab-separated data rows with LF endings, and --format
json mirrors the same cells.  Exit codes: 0 success, 1 usage error, 2 data
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import analysis, cipher, generator, glyphs, transcript
from .editdist import SIMPLE, STRICT, edit_distance
from .glyphs import render, tokenize


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError("%s\n%s" % (message, self.format_usage()))


def _data_path(name):
    return resources.files("voyn.data").joinpath(name)


def _load_corpus(args):
    if getattr(args, "corpus", None):
        with open(args.corpus, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = _data_path("corpus.txt").read_text("utf-8")
    if getattr(args, "meta", None):
        meta = transcript.load_page_meta(args.meta)
    else:
        meta = _parse_meta_text(_data_path("pages.tsv").read_text("utf-8"))
    kinds = (
        transcript.load_kind_config(args.kinds)
        if getattr(args, "kinds", None)
        else transcript.DEFAULT_KINDS
    )
    norm = glyphs.DEFAULT_NORMALIZATION
    if getattr(args, "config", None):
        _rel, norm = glyphs.load_glyph_config(args.config)
    return transcript.parse_corpus(
        text,
        meta,
        kinds,
        comma_joins=getattr(args, "comma_joins", False),
        norm=norm,
    )


def _parse_meta_text(text):
    meta = {}
    for raw in text.splitlines():
        if not raw or raw.startswith("#"):
            continue
        page, currier, section = raw.split("\t")
        meta[page] = (currier, section)
    return meta


def _fmt(v):
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return "%.4f" % v
    if v is None:
        return ""
    return str(v)


def _emit(args, header, rows, comments=()):
    """Write one report as TSV (default) or the JSON mirror."""
    if args.format == "json":
        payload = {"header": list(header), "rows": [[_jval(v) for v in r] for r in rows]}
        if comments:
            payload["notes"] = list(comments)
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        lines = ["# " + c for c in comments]
        lines.append("\t".join(header))
        lines.extend("\t".join(_fmt(v) for v in r) for r in rows)
        text = "\n".join(lines) + "\n"
    _write_out(args, text)


def _jval(v):
    if isinstance(v, float):
        return round(v, 6)
    return v


def _write_out(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(p, corpus=True):
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--out")
    if corpus:
        p.add_argument("--corpus", help="transcription file (default: bundled)")
        p.add_argument("--meta", help="page metadata TSV (default: bundled)")
        p.add_argument("--kinds", help="locus kind config (default: built in)")
        p.add_argument("--config", help="glyph config for normalization overrides")
        p.add_argument("--comma-joins", action="store_true", dest="comma_joins",
                       help="treat , as joining instead of separating")


def build_parser():
    p = _Parser(prog="voyn", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("parse", help="validate a transcription and print a census")
    _add_common(sp)

    sp = sub.add_parser("stats", help="corpus statistics reports")
    sp.add_argument("report", choices=(
        "freq", "sequences", "window", "series", "evidence", "pairs",
        "position", "gallows", "lengths", "correlate", "qy", "shared"))
    _add_common(sp)
    sp.add_argument("--include-labels", action="store_true", dest="include_labels")
    sp.add_argument("--top", type=int, default=0, help="freq: keep top N rows")
    sp.add_argument("--min-len", type=int, default=3)
    sp.add_argument("--min-occ", type=int, default=3)
    sp.add_argument("--depth", type=int, default=20)
    sp.add_argument("--mode", choices=("exact", "similar"), default="exact")
    sp.add_argument("--occurrence", type=int, default=7)
    sp.add_argument("--radius", type=int, default=3)
    sp.add_argument("--max-ed", type=int, default=3, dest="max_ed")
    sp.add_argument("--table", default="summary",
                    help="pairs: summary|averages|lengths-first|lengths-second|"
                    "prefixes-removed|prefixes-added; gallows: before|after|bylines")
    sp.add_argument("--word", help="position: literal word")
    sp.add_argument("--initial", help="position: gallow or comma-joined units")
    sp.add_argument("--final", help="position: comma-joined units")
    sp.add_argument("--contains", help="position: unit sequence such as ed")
    sp.add_argument("--scope", choices=("all", "line1", "line2"), default="all")
    sp.add_argument("--currier", choices=("A", "B", "?"))
    sp.add_argument("--words", nargs=2, metavar=("W1", "W2"), help="correlate: the two words")
    sp.add_argument("--sections", nargs=2, metavar=("S1", "S2"), help="shared: the two sections")
    sp.add_argument("--loci", choices=("label", "text"), default="label")

    sp = sub.add_parser("grid", help="all words grouped by series with distance to the seed")
    _add_common(sp)
    sp.add_argument("--min-count", type=int, default=4, dest="min_count")
    sp.add_argument("--mode", choices=("strict", "simple"), default="strict")

    sp = sub.add_parser("generate", help="generate a pseudo-text corpus")
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.add_argument("--out")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--pages", type=int, default=50)
    sp.add_argument("--gen-config", dest="gen_config", help="generator config file")
    sp.add_argument("--trace", help="write the audit log TSV here")
    sp.add_argument("--style", choices=("A", "B"), default="B")

    sp = sub.add_parser("compare", help="compare two corpora's statistical profiles")
    _add_common(sp)
    sp.add_argument("--other", required=True, help="second corpus (e.g. generated)")
    sp.add_argument("--other-meta", dest="other_meta")

    sp = sub.add_parser("trace", help="replay an audit log back into a corpus")
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.add_argument("--out")
    sp.add_argument("--log", required=True, help="trace TSV from generate --trace")
    sp.add_argument("--histogram", action="store_true", help="print the rule histogram instead")

    sp = sub.add_parser("cipher", help="code-table encode/decode")
    sp.add_argument("direction", choices=("encode", "decode"))
    sp.add_argument("text", help="letters to encode or space-joined codewords to decode")
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.add_argument("--out")
    sp.add_argument("--table", help="code table TSV (default: bundled)")
    sp.add_argument("--column", help="encode: fixed column name")
    sp.add_argument("--policy", choices=("fixed", "roundRobin", "random"), default="fixed")
    sp.add_argument("--seed", type=int, default=0, help="encode: seed for --policy random")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write("error: %s" % exc)
        return 1
    try:
        return _dispatch(args)
    except _UsageError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except (transcript.ParseError, glyphs.UnknownCharacter, analysis.EmptySample,
            analysis.DegenerateVariance, generator.ConfigError, cipher.UnmappedLetter,
            FileNotFoundError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "parse":
        return _cmd_parse(args)
    if cmd == "stats":
        return _cmd_stats(args)
    if cmd == "grid":
        return _cmd_grid(args)
    if cmd == "generate":
        return _cmd_generate(args)
    if cmd == "compare":
        return _cmd_compare(args)
    if cmd == "trace":
        return _cmd_trace(args)
    if cmd == "cipher":
        return _cmd_cipher(args)
    raise _UsageError("unknown command %r" % cmd)


def _cmd_parse(args) -> int:
    corpus = _load_corpus(args)
    tlines = transcript.text_lines(corpus)
    tokens = list(corpus.word_tokens())
    all_tokens = list(corpus.word_tokens(include_labels=True))
    n_paras = sum(len(p.paragraphs) for p in corpus.pages)
    rows = [
        ("pages", len(corpus.pages)),
        ("text_lines", len(tlines)),
        ("paragraphs", n_paras),
        ("text_tokens", len(tokens)),
        ("tokens_with_labels", len(all_tokens)),
        ("distinct_words", len({w for w in all_tokens})),
        ("multi_unit_text_tokens", sum(1 for w in tokens if len(w) > 1)),
    ]
    _emit(args, ("key", "value"), rows)
    return 0


def _cmd_stats(args) -> int:
    corpus = _load_corpus(args)
    r = args.report
    if r == "freq":
        rows = analysis.word_frequencies(corpus, include_labels=args.include_labels)
        if args.top:
            rows = rows[: args.top]
        _emit(args, ("word", "count"), rows)
    elif r == "sequences":
        reps = analysis.repeated_sequences(corpus, args.min_len, args.min_occ)
        rows = [
            (" ".join(rep.words), rep.size, rep.count, rep.uniform_order,
             rep.has_repeated_word, rep.has_similar_pair,
             " ".join("%s@%d" % o for o in rep.occurrences))
            for rep in reps
        ]
        _emit(args, ("words", "size", "count", "uniform", "same_word_twice",
                     "similar_pair", "occurrences"), rows)
    elif r == "window":
        mode = "exactRepeat" if args.mode == "exact" else "similarED1"
        prof = analysis.window_profile(corpus, args.depth, mode,
                                       include_labels=args.include_labels)
        rows = [(row.offset, row.matches, row.compared, row.percentage)
                for row in prof.rows]
        _emit(args, ("offset", "matches", "compared", "percentage"), rows,
              comments=("mode=%s" % mode,))
    elif r == "series":
        rows = analysis.series_proportions(corpus)
        _emit(args, ("page", "section", "currier", "tokens",
                     "daiin", "ol", "chedy", "unclassified"),
              [(x["page"], x["section"], x["currier"], x["tokens"],
                x["daiinSeries"], x["olSeries"], x["chedySeries"], x["unclassified"])
               for x in rows])
    elif r == "evidence":
        rep = analysis.neighborhood_evidence(corpus, args.occurrence, args.radius, args.max_ed)
        rows = [(w.word, len(w.occurrences), w.near_similar, w.adjacent,
                 " ".join(w.occurrences)) for w in rep.words]
        rows.append(("TOTAL", rep.total_cases, rep.near_similar_cases,
                     rep.adjacent_cases, ""))
        _emit(args, ("word", "cases", "near_similar", "adjacent", "occurrences"), rows,
              comments=("sample_size=%d" % rep.sample_size,
                        "consecutive_sheet_pairs=%d" % rep.consecutive_sheet_pairs,
                        "same_leaf_pairs=%d" % rep.same_leaf_pairs))
    elif r == "pairs":
        _cmd_pairs(args, corpus)
    elif r == "position":
        pattern = analysis.make_pattern(args.word, args.initial, args.final, args.contains)
        prof = analysis.position_profile(corpus, pattern)
        rows = []
        for pos in prof.POSITIONS:
            row = [pos]
            for cur in ("A", "B", "?"):
                row.append(prof.counts.get((pos, cur), 0))
            row.append(prof.by_position(pos))
            rows.append(tuple(row))
        rows.append(("TOTAL", prof.by_currier("A"), prof.by_currier("B"),
                     prof.by_currier("?"), prof.total))
        _emit(args, ("position", "A", "B", "?", "total"), rows,
              comments=("pattern=%s" % prof.pattern,))
    elif r == "gallows":
        _cmd_gallows(args, corpus)
    elif r == "lengths":
        scope = {"all": "all", "line1": "paragraphLine1", "line2": "paragraphLine2"}[args.scope]
        rep = analysis.length_distribution(corpus, scope, args.currier)
        rows = [(k, rep.histogram[k]) for k in sorted(rep.histogram)]
        _emit(args, ("length", "count"), rows, comments=(
            "scope=%s currier=%s" % (rep.scope, rep.currier),
            "mean=%.4f" % rep.mean,
            "gallow_mean=%.4f" % rep.gallow_mean,
            "plain_mean=%.4f" % rep.plain_mean,
            "words_per_line=%.4f" % rep.mean_words_per_line,
        ))
    elif r == "correlate":
        if not args.words:
            raise _UsageError("stats correlate needs --words W1 W2")
        out = analysis.page_frequency_correlation(corpus, args.words[0], args.words[1])
        _emit(args, ("w1", "w2", "r_pair", "r1_length", "r2_length", "pages"),
              [(args.words[0], args.words[1], out["r_pair"], out["r1_length"],
                out["r2_length"], out["pages"])])
    elif r == "qy":
        out = analysis.q_after_y_rate(corpus)
        _emit(args, ("y_final_share", "q_after_y_share", "tokens", "q_with_predecessor"),
              [(out["y_final_share"], out["q_after_y_share"], out["tokens"],
                out["q_with_predecessor"])])
    elif r == "shared":
        if not args.sections:
            raise _UsageError("stats shared needs --sections S1 S2")
        rows = analysis.shared_words_across_sections(
            corpus, args.sections[0], args.sections[1], loci=args.loci)
        _emit(args, ("word", "loci"),
              [(x["word"], " ".join(x["loci"])) for x in rows])
    return 0


def _cmd_pairs(args, corpus) -> None:
    stats = analysis.consecutive_pairs(corpus)
    t = args.table
    if t == "summary":
        rows = []
        for name, s in (("n1", stats.first_pair), ("rest", stats.later_pairs)):
            rows.append((name, s.compared, s.equal, s.next_part_of_prev,
                         s.prev_part_of_next,
                         100.0 * s.equal / max(s.compared, 1),
                         100.0 * s.next_part_of_prev / max(s.compared, 1),
                         100.0 * s.prev_part_of_next / max(s.compared, 1),
                         s.len_lt, s.len_eq, s.len_gt))
        _emit(args, ("position", "compared", "equal", "next_part_of_prev",
                     "prev_part_of_next", "equal_pct", "next_pct", "prev_pct",
                     "len_lt", "len_eq", "len_gt"), rows)
    elif t == "averages":
        rows = [(cls, stats.avg_lengths[cls][0], stats.avg_lengths[cls][1])
                for cls in analysis.PAIR_CLASSES]
        _emit(args, ("class", "avg_first", "avg_second"), rows)
    elif t in ("lengths-first", "lengths-second"):
        hist = stats.first_length_hist if t == "lengths-first" else stats.second_length_hist
        lengths = sorted(set().union(*[set(h) for h in hist.values()]) or {0})
        rows = [(n,) + tuple(hist[cls].get(n, 0) for cls in analysis.PAIR_CLASSES)
                for n in lengths]
        _emit(args, ("length",) + analysis.PAIR_CLASSES, rows)
    elif t in ("prefixes-removed", "prefixes-added"):
        table = stats.prefix_removed if t == "prefixes-removed" else stats.prefix_added
        rows = []
        for bucket in ("n1", "rest"):
            for prefix, count in table[bucket].most_common():
                rows.append((bucket, prefix, count))
        _emit(args, ("position", "prefix", "count"), rows)
    else:
        raise _UsageError("unknown pairs table %r" % t)


def _cmd_gallows(args, corpus) -> None:
    t = args.table if args.table != "summary" else "before"
    if t in ("before", "after"):
        ctx = analysis.gallow_context(corpus)
        table = ctx.before if t == "before" else ctx.after
        buckets = analysis.BEFORE_BUCKETS if t == "before" else analysis.AFTER_BUCKETS
        rows = [(b,) + tuple(table.get((b, g), 0) for g in "fpkt") for b in buckets]
        rows.append(("all",) + tuple(ctx.total(g, t) for g in "fpkt"))
        _emit(args, ("bucket", "f", "p", "k", "t"), rows)
    elif t == "bylines":
        rows = analysis.gallows_by_paragraph_line(corpus)
        header = ("line", "total_all", "gallow_all", "total_A", "gallow_A",
                  "total_B", "gallow_B", "total_?", "gallow_?")
        out = []
        for row in rows:
            out.append(tuple(row.get(h if h != "line" else "line", 0) for h in header))
        _emit(args, header, out)
    else:
        raise _UsageError("unknown gallows table %r" % t)


def _cmd_grid(args) -> int:
    corpus = _load_corpus(args)
    cfg = STRICT if args.mode == "strict" else SIMPLE
    seeds = {"daiinSeries": tokenize("daiin"), "olSeries": tokenize("ol"),
             "chedySeries": tokenize("chedy")}
    freqs = analysis.word_frequencies(corpus)
    rows = []
    for word, count in freqs:
        if count < args.min_count:
            continue
        units = tokenize(word)
        series = analysis.series_classify(units)
        seed = seeds.get(series)
        ed = edit_distance(units, seed, cfg) if seed is not None else ""
        rows.append((series, word, count, ed))
    rows.sort(key=lambda r: (r[0], r[3] if r[3] != "" else 99, -r[2], r[1]))
    _emit(args, ("series", "word", "count", "ed_to_seed"), rows)
    return 0


def _cmd_generate(args) -> int:
    if args.gen_config:
        cfg = generator.load_generator_config(
            args.gen_config, rng_seed=args.seed, pages=args.pages,
            currier_style=args.style)
    else:
        cfg = generator.GeneratorConfig(
            rng_seed=args.seed, pages=args.pages, currier_style=args.style)
    corpus, trace = generator.generate(cfg)
    text = transcript.serialize_corpus(corpus)
    _write_out(args, text)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(generator.trace_export(trace))
    return 0


def _cmd_compare(args) -> int:
    corpus = _load_corpus(args)
    with open(args.other, encoding="utf-8") as fh:
        other_text = fh.read()
    other_meta = transcript.load_page_meta(args.other_meta) if args.other_meta else {}
    other = transcript.parse_corpus(other_text, other_meta)
    p1 = analysis.build_profile(corpus)
    p2 = analysis.build_profile(other)
    cmp = analysis.compare_profiles(p1, p2)
    rows = [(r["metric"], r["a"], r["b"], r["rel_diff"]) for r in cmp["rows"]]
    rows.append(("SUMMARY", "", "", cmp["summary"]))
    _emit(args, ("metric", "a", "b", "rel_diff"), rows)
    return 0


def _cmd_trace(args) -> int:
    with open(args.log, encoding="utf-8") as fh:
        trace = generator.trace_parse(fh.read())
    if args.histogram:
        from collections import Counter

        counts = Counter(r.rule for r in trace)
        rows = sorted(counts.items())
        _emit(args, ("rule", "count"), rows)
        return 0
    corpus = generator.replay(trace)
    _write_out(args, transcript.serialize_corpus(corpus))
    return 0


def _cmd_cipher(args) -> int:
    table = cipher.load_code_table(args.table)
    if args.direction == "encode":
        if args.policy == "fixed":
            policy = ("fixed", args.column)
        elif args.policy == "roundRobin":
            policy = ("roundRobin",)
        else:
            policy = ("random", args.seed)
        words = cipher.encode(args.text, table, policy)
        _write_out(args, " ".join(words) + "\n")
    else:
        codewords = args.text.split()
        sets = cipher.decode(codewords, table)
        rows = []
        for word, letters in zip(codewords, sets):
            if not letters:
                sys.stderr.write("warning: unknown codeword %r\n" % word)
            rows.append((word, ",".join(sorted(letters))))
        _emit(args, ("codeword", "letters"), rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
